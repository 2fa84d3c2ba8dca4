"""JSON service protocol: framing, isolation, and CLI-batch transparency."""

import asyncio
import glob
import io
import json
import os
import threading

import pytest

from abacus.cli import run_script
from abacus.runtime import Session
from abacus.service import ServiceConnection, handle_request_line

_CORPUS = sorted(glob.glob(os.path.join(os.path.dirname(__file__),
                                        "corpus", "*.abx")))


def _req(conn, **kwargs):
    reply = handle_request_line(conn, json.dumps(kwargs))
    return json.loads(reply)


def test_eval_roundtrip():
    conn = ServiceConnection()
    r = _req(conn, id="1", kind="eval", source="2 + 2")
    assert r == {"id": "1", "ok": True,
                 "items": [{"tag": "text", "text": "4"}]}


def test_eval_error_items_not_protocol_errors():
    conn = ServiceConnection()
    r = _req(conn, id="1", kind="eval", source="1/0")
    assert r["ok"] is True
    assert r["items"][0]["tag"] == "error"


def test_state_persists_within_connection():
    conn = ServiceConnection()
    _req(conn, id="1", kind="eval", source="$a = 6 * 7")
    r = _req(conn, id="2", kind="eval", source="$a")
    assert r["items"] == [{"tag": "text", "text": "42"}]


def test_two_connections_are_isolated():
    a, b = ServiceConnection(), ServiceConnection()
    _req(a, id="1", kind="eval", source="$secret = 123\nprecision 2")
    r = _req(b, id="1", kind="eval", source="$secret")
    assert r["items"][0]["tag"] == "error"
    assert b.session.ctx.words == 8
    # and the first connection is unaffected by the second's failure
    r = _req(a, id="2", kind="eval", source="$secret")
    assert r["items"] == [{"tag": "text", "text": "123"}]


def test_complete_objects_help_reset():
    conn = ServiceConnection()
    _req(conn, id="1", kind="eval", source="$alpha = 1")
    assert _req(conn, id="2", kind="complete",
                fragment="$a")["names"] == ["$alpha"]
    assert "sequence" in _req(conn, id="3", kind="complete",
                              fragment="seq")["names"]
    objs = _req(conn, id="4", kind="objects")["items"]
    assert {"tag": "vars", "text": "$alpha : integer = 1"} in objs
    helps = _req(conn, id="5", kind="help", name="invert")["items"]
    assert helps[0]["text"].startswith("invert -- ")
    assert _req(conn, id="6", kind="reset") == {"id": "6", "ok": True}
    assert _req(conn, id="7", kind="objects")["items"] == []


def test_get_chart_and_report():
    conn = ServiceConnection()
    _req(conn, id="1", kind="eval",
         source="$x = sequence(-1, 1, 0.1)\n"
                'plot($x, cos($x) * sin($x), xtitle="x [rad]")')
    r = _req(conn, id="2", kind="get_chart", name="chart_1")
    assert r["ok"] and r["items"][0]["tag"] == "svg"
    assert "<svg" in r["items"][0]["text"]
    assert not _req(conn, id="3", kind="get_chart", name="nope")["ok"]
    _req(conn, id="4", kind="eval",
         source="ztest([9, 3, -1, -2, 4, 5], 2, 3, report=true)")
    r = _req(conn, id="5", kind="get_report", name="report_1")
    assert r["ok"] and r["items"][0]["tag"] == "html"
    assert "0.81649658" in r["items"][0]["text"]


@pytest.mark.parametrize("line", [
    "not json at all",
    '{"kind": "eval", "source": "1"}',
    '{"id": "1", "kind": "launch_missiles"}',
    '{"id": "1", "kind": "eval"}',
    '[1, 2, 3]',
    '{"id": 7, "kind": "eval", "source": "1"}',
])
def test_malformed_requests_get_error_responses(line):
    conn = ServiceConnection()
    reply = json.loads(handle_request_line(conn, line))
    assert reply["ok"] is False
    assert isinstance(reply["error"], str) and reply["error"]


def test_every_request_gets_exactly_one_response():
    conn = ServiceConnection()
    for i, line in enumerate(["garbage", '{"id": "a", "kind": "eval", '
                              '"source": "precision 0"}',
                              '{"id": "b", "kind": "eval", "source": "1"}']):
        reply = handle_request_line(conn, line)
        assert isinstance(json.loads(reply), dict), i


@pytest.mark.parametrize("path", _CORPUS)
def test_protocol_transparency_vs_cli_batch(path, tmp_path):
    """Evaluating a script via the service must match the CLI batch runner
    byte for byte (same items, same order)."""
    with open(path, "r", encoding="utf-8") as fh:
        source = fh.read()

    cli_session = Session()
    out, err = io.StringIO(), io.StringIO()
    run_script(source, cli_session, str(tmp_path), stdout=out, stderr=err)

    conn = ServiceConnection()
    r = _req(conn, id="1", kind="eval", source=source)
    svc_out = "".join(it["text"] + "\n" for it in r["items"]
                      if it["tag"] == "text")
    svc_err = "".join(it["text"] + "\n" for it in r["items"]
                      if it["tag"] == "error")
    assert svc_out == out.getvalue()
    assert svc_err == err.getvalue()


def _start_loop():
    loop = asyncio.new_event_loop()
    thread = threading.Thread(target=loop.run_forever, daemon=True)
    thread.start()
    return loop, thread


def _stop_loop(loop, thread):
    loop.call_soon_threadsafe(loop.stop)
    thread.join(timeout=10)


def test_tcp_transport_end_to_end():
    from abacus.service import _tcp_client

    loop, thread = _start_loop()

    async def start():
        return await asyncio.start_server(_tcp_client, "127.0.0.1", 0)

    server = asyncio.run_coroutine_threadsafe(start(), loop).result(10)
    port = server.sockets[0].getsockname()[1]

    async def talk():
        reader, writer = await asyncio.open_connection("127.0.0.1", port)
        for i, src in enumerate(["$a = 3", "$a * $a"]):
            writer.write((json.dumps({"id": str(i), "kind": "eval",
                                      "source": src}) + "\n").encode())
            await writer.drain()
            line = await reader.readline()
            reply = json.loads(line)
            assert reply["id"] == str(i) and reply["ok"]
        assert reply["items"] == [{"tag": "text", "text": "9"}]
        writer.close()
        await writer.wait_closed()

    asyncio.run_coroutine_threadsafe(talk(), loop).result(30)
    asyncio.run_coroutine_threadsafe(_close(server), loop).result(10)
    _stop_loop(loop, thread)


async def _close(server):
    server.close()
    await server.wait_closed()


def test_ws_transport_end_to_end(tmp_path):
    import websockets.sync.client

    static = tmp_path / "static"
    static.mkdir()
    (static / "index.html").write_text("<html>console</html>",
                                       encoding="utf-8")

    loop, thread = _start_loop()
    ready = threading.Event()
    port_holder = {}

    async def run_server():
        from websockets.asyncio.server import serve
        from abacus.service import _static_responder, handle_request_line

        async def client(websocket):
            conn = ServiceConnection()
            async for raw in websocket:
                text = raw if isinstance(raw, str) else raw.decode()
                await websocket.send(handle_request_line(conn, text))

        server = await serve(client, "127.0.0.1", 0,
                             process_request=_static_responder(str(static)))
        port_holder["port"] = server.sockets[0].getsockname()[1]
        ready.set()
        return server

    server = asyncio.run_coroutine_threadsafe(run_server(), loop).result(10)
    assert ready.wait(10)
    port = port_holder["port"]

    with websockets.sync.client.connect(f"ws://127.0.0.1:{port}/ws") as ws:
        ws.send(json.dumps({"id": "1", "kind": "eval", "source": "6 * 7"}))
        reply = json.loads(ws.recv(timeout=30))
        assert reply["items"] == [{"tag": "text", "text": "42"}]

    import urllib.error
    import urllib.request
    with urllib.request.urlopen(f"http://127.0.0.1:{port}/", timeout=10) as r:
        assert b"console" in r.read()
    with pytest.raises(urllib.error.HTTPError):
        urllib.request.urlopen(
            f"http://127.0.0.1:{port}/missing.js", timeout=10)

    asyncio.run_coroutine_threadsafe(_close_ws(server), loop).result(10)
    _stop_loop(loop, thread)


async def _close_ws(server):
    server.close()
    await server.wait_closed()
