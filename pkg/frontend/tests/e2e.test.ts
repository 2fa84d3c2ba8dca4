/**
 * End-to-end: the console store against the real evaluation service over
 * WebSocket.  The service is spawned as a child process; the store drives
 * it exactly like the browser page would.
 */

import { spawn, type ChildProcess } from "node:child_process";
import { afterAll, beforeAll, describe, expect, it } from "vitest";
import WebSocket from "ws";

import { ServiceClient, type SocketLike } from "../src/protocol.js";
import { ConsoleStore } from "../src/store.js";

const PORT = 18000 + Math.floor(Math.random() * 2000);
let service: ChildProcess;

function nodeSocket(): SocketLike {
  return new WebSocket(`ws://127.0.0.1:${PORT}/ws`) as unknown as SocketLike;
}

async function connect(): Promise<ServiceClient> {
  const client = new ServiceClient(nodeSocket, 100);
  client.connect();
  for (let i = 0; i < 100 && client.status !== "connected"; i++) {
    await new Promise((r) => setTimeout(r, 100));
  }
  expect(client.status).toBe("connected");
  return client;
}

beforeAll(async () => {
  service = spawn(
    "python3",
    ["-m", "abacus.service", "--transport", "ws", "--port", String(PORT)],
    { cwd: "..", stdio: "ignore" },
  );
  const probe = await connect();
  probe.close();
}, 30_000);

afterAll(() => {
  service?.kill();
});

describe("web console against the live service", () => {
  it("runs the xy-plot example: inline SVG, object panel, completion", async () => {
    const client = await connect();
    const store = new ConsoleStore(client);

    await store.submit("$x = sequence(-1, 1, 0.1)");
    await store.submit("$y = cos( $x ) * sin( $x )");
    await store.submit(
      'plot($x, $y, xtitle="x [rad]", ytitle="cos(x)*sin(x)")',
    );

    const chart = store.transcript.find((e) => e.kind === "chart");
    expect(chart).toBeDefined();
    expect(chart!.svg).toContain("<svg");
    expect(chart!.svg).toContain("x [rad]");
    const polyline = /<polyline[^>]*points="([^"]+)"/.exec(chart!.svg!);
    expect(polyline).not.toBeNull();
    expect(polyline![1].trim().split(/\s+/)).toHaveLength(21);

    expect(store.objects.charts.some((l) => l.includes("chart_1"))).toBe(true);
    expect(store.objects.vars.some((l) => l.startsWith("$x"))).toBe(true);

    await store.requestCompletion("seq");
    expect(store.completion.open).toBe(true);
    expect(store.completion.suggestions).toContain("sequence");

    client.close();
  }, 30_000);

  it("matches the console goldens for integer arithmetic", async () => {
    const client = await connect();
    const store = new ConsoleStore(client);
    await store.submit(
      "2^( 3 + 1 ) / 4\n$myvar = 2^( 3 + 1 ) / 4\n$MyVar * 3",
    );
    expect(store.transcript.map((e) => e.text)).toEqual(["4", "12"]);
    expect(store.objects.vars.some((l) => l.startsWith("$myvar"))).toBe(true);
    client.close();
  }, 30_000);

  it("re-plots with edited options through the inspector path", async () => {
    const client = await connect();
    const store = new ConsoleStore(client);
    await store.submit("$x = sequence(-1, 1, 0.1)");
    await store.submit('plot($x, $x, xtitle="before")');
    await store.replotWithOptions("chart_1", { xtitle: "after" });

    const charts = store.transcript.filter((e) => e.kind === "chart");
    expect(charts).toHaveLength(2);
    expect(charts[1].svg).toContain("after");
    client.close();
  }, 30_000);

  it("keeps sessions isolated between two console connections", async () => {
    const a = await connect();
    const b = await connect();
    const storeA = new ConsoleStore(a);
    const storeB = new ConsoleStore(b);
    await storeA.submit("$only_a = 1");
    await storeB.submit("$only_a");
    expect(storeB.transcript[0].kind).toBe("error");
    expect(storeA.objects.vars.some((l) => l.startsWith("$only_a"))).toBe(true);
    expect(storeB.objects.vars).toHaveLength(0);
    a.close();
    b.close();
  }, 30_000);
});
