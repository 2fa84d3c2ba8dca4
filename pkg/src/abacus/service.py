"""Session service speaking newline-delimited JSON.

Request:  {"id": str, "kind": str, "source"?/"fragment"?/"name"?: str}
Response: {"id": str, "ok": bool, "items"?: [{"tag","text"}],
           "names"?: [str], "error"?: str}

Kinds: eval, complete, objects, get_chart, get_report, help, reset.
Each connection owns one session; requests on a connection are handled
strictly in order.  The same protocol is served over plain TCP (default)
or WebSocket (for the browser console, with optional static file
hosting).
"""

import argparse
import asyncio
import json
import mimetypes
import os
import sys

from .report import Report
from .runtime import Session, help_text
from .viz import render_svg

_KINDS = ("eval", "complete", "objects", "get_chart", "get_report",
          "help", "reset")


class ServiceConnection:
    """Protocol state for one client: a session plus request dispatch."""

    def __init__(self):
        self.session = Session()

    def handle_request(self, message: dict) -> dict:
        if not isinstance(message, dict):
            return _protocol_error(None, "request must be a JSON object")
        rid = message.get("id")
        if not isinstance(rid, str):
            return _protocol_error(None, "missing or non-string 'id'")
        kind = message.get("kind")
        if kind not in _KINDS:
            return _protocol_error(rid, f"unknown kind {kind!r}")
        try:
            return getattr(self, f"_do_{kind}")(rid, message)
        except Exception as exc:  # defensive: never drop a response
            return _protocol_error(rid, f"internal error: {exc}")

    def _do_eval(self, rid, message):
        source = message.get("source")
        if not isinstance(source, str):
            return _protocol_error(rid, "eval requires a string 'source'")
        items = self.session.execute(source)
        return {"id": rid, "ok": True,
                "items": [{"tag": it.tag, "text": it.text} for it in items]}

    def _do_complete(self, rid, message):
        fragment = message.get("fragment")
        if not isinstance(fragment, str):
            return _protocol_error(rid, "complete requires a string 'fragment'")
        return {"id": rid, "ok": True,
                "names": self.session.complete_prefix(fragment)}

    def _do_objects(self, rid, message):
        items = []
        for kind in ("vars", "datasets", "charts", "reports"):
            for line in self.session._object_lines(kind):
                items.append({"tag": kind, "text": line})
        return {"id": rid, "ok": True, "items": items}

    def _do_get_chart(self, rid, message):
        name = message.get("name")
        chart = self.session.charts.get(name) if isinstance(name, str) else None
        if chart is None:
            return _protocol_error(rid, f"unknown chart {name!r}")
        return {"id": rid, "ok": True,
                "items": [{"tag": "svg", "text": render_svg(chart)}]}

    def _do_get_report(self, rid, message):
        name = message.get("name")
        rep: Report | None = (self.session.reports.get(name)
                              if isinstance(name, str) else None)
        if rep is None:
            return _protocol_error(rid, f"unknown report {name!r}")
        return {"id": rid, "ok": True,
                "items": [{"tag": rep.kind, "text": rep.body}]}

    def _do_help(self, rid, message):
        name = message.get("name")
        text = help_text(name if isinstance(name, str) else None)
        return {"id": rid, "ok": True,
                "items": [{"tag": "text", "text": line}
                          for line in text.splitlines()]}

    def _do_reset(self, rid, message):
        self.session = Session()
        return {"id": rid, "ok": True}


def _protocol_error(rid, reason: str) -> dict:
    return {"id": rid, "ok": False, "error": reason}


def handle_request_line(conn: ServiceConnection, line: str) -> str:
    """Decode one request line, dispatch it, encode the response."""
    try:
        message = json.loads(line)
    except json.JSONDecodeError as exc:
        response = _protocol_error(None, f"malformed JSON: {exc}")
    else:
        response = conn.handle_request(message)
    return json.dumps(response, ensure_ascii=False)


# -- TCP transport -------------------------------------------------------------


async def _tcp_client(reader: asyncio.StreamReader,
                      writer: asyncio.StreamWriter):
    conn = ServiceConnection()
    loop = asyncio.get_running_loop()
    try:
        while True:
            line = await reader.readline()
            if not line:
                break
            text = line.decode("utf-8").strip()
            if not text:
                continue
            # evaluation may be CPU-heavy; keep other connections responsive
            out = await loop.run_in_executor(None, handle_request_line,
                                             conn, text)
            writer.write(out.encode("utf-8") + b"\n")
            await writer.drain()
    except (ConnectionResetError, asyncio.IncompleteReadError):
        pass
    finally:
        writer.close()


async def serve_tcp(host: str, port: int, ready_event=None):
    server = await asyncio.start_server(_tcp_client, host, port)
    if ready_event is not None:
        ready_event.set()
    async with server:
        await server.serve_forever()


# -- WebSocket transport (browser console) --------------------------------------


def _static_responder(static_dir: str):
    from websockets.http11 import Response
    from websockets.datastructures import Headers

    def respond(connection, request):
        # websocket upgrades fall through to the protocol handler
        if request.headers.get("Upgrade", "").lower() == "websocket":
            return None
        path = request.path.split("?", 1)[0]
        if path == "/":
            path = "/index.html"
        full = os.path.realpath(os.path.join(static_dir, path.lstrip("/")))
        root = os.path.realpath(static_dir)
        if not full.startswith(root + os.sep) or not os.path.isfile(full):
            return Response(404, "Not Found", Headers(), b"not found")
        ctype = mimetypes.guess_type(full)[0] or "application/octet-stream"
        with open(full, "rb") as fh:
            body = fh.read()
        headers = Headers()
        headers["Content-Type"] = ctype
        headers["Content-Length"] = str(len(body))
        return Response(200, "OK", headers, body)

    return respond


async def serve_ws(host: str, port: int, static_dir: str | None = None,
                   ready_event=None):
    from websockets.asyncio.server import serve

    async def client(websocket):
        conn = ServiceConnection()
        loop = asyncio.get_running_loop()
        async for raw in websocket:
            text = raw if isinstance(raw, str) else raw.decode("utf-8")
            out = await loop.run_in_executor(None, handle_request_line,
                                             conn, text)
            await websocket.send(out)

    kwargs = {}
    if static_dir is not None:
        kwargs["process_request"] = _static_responder(static_dir)
    async with serve(client, host, port, **kwargs):
        if ready_event is not None:
            ready_event.set()
        await asyncio.Future()


def main(argv=None) -> int:
    p = argparse.ArgumentParser(
        prog="abacus-service",
        description="Evaluation service for remote consoles.")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8765)
    p.add_argument("--transport", choices=("tcp", "ws"), default="tcp")
    p.add_argument("--static", metavar="DIR",
                   help="also serve static files over HTTP (ws transport)")
    args = p.parse_args(argv)
    try:
        if args.transport == "ws":
            asyncio.run(serve_ws(args.host, args.port, args.static))
        else:
            asyncio.run(serve_tcp(args.host, args.port))
    except KeyboardInterrupt:
        return 0
    except OSError as exc:
        print(f"error: cannot bind {args.host}:{args.port}: {exc}",
              file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
