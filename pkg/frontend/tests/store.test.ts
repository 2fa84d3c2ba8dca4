import { describe, expect, it } from "vitest";

import type { ServiceClient, ServiceResponse } from "../src/protocol.js";
import {
  ConsoleStore,
  lastStatementOf,
  rewriteOptions,
} from "../src/store.js";

/** Scripted stand-in for the protocol client (no evaluation client-side). */
class FakeClient {
  log: Array<{ kind: string; payload: Record<string, unknown> }> = [];
  objectsItems: Array<{ tag: string; text: string }> = [];
  evalResponses: ServiceResponse[] = [];
  charts = new Map<string, string>();
  failEval = false;

  eval(source: string): Promise<ServiceResponse> {
    this.log.push({ kind: "eval", payload: { source } });
    if (this.failEval) return Promise.reject(new Error("not connected"));
    const next = this.evalResponses.shift();
    return Promise.resolve(next ?? { id: "x", ok: true, items: [] });
  }

  complete(fragment: string): Promise<ServiceResponse> {
    this.log.push({ kind: "complete", payload: { fragment } });
    const names = ["sequence", "sin", "sqrt", "stddev"].filter((n) =>
      n.startsWith(fragment),
    );
    return Promise.resolve({ id: "x", ok: true, names });
  }

  request(
    kind: string,
    fields: Record<string, unknown> = {},
  ): Promise<ServiceResponse> {
    this.log.push({ kind, payload: fields });
    if (kind === "objects") {
      return Promise.resolve({ id: "x", ok: true, items: this.objectsItems });
    }
    if (kind === "get_chart") {
      const svg = this.charts.get(String(fields.name));
      return Promise.resolve(
        svg
          ? { id: "x", ok: true, items: [{ tag: "svg", text: svg }] }
          : { id: "x", ok: false, error: "unknown chart" },
      );
    }
    return Promise.resolve({ id: "x", ok: true, items: [] });
  }
}

function makeStore() {
  const client = new FakeClient();
  const store = new ConsoleStore(client as unknown as ServiceClient);
  return { client, store };
}

describe("ConsoleStore.submit", () => {
  it("appends text items and refreshes the object panel", async () => {
    const { client, store } = makeStore();
    client.evalResponses.push({
      id: "1",
      ok: true,
      items: [{ tag: "text", text: "4" }],
    });
    client.objectsItems = [{ tag: "vars", text: "$myvar : integer = 4" }];

    expect(await store.submit("2^( 3 + 1 ) / 4")).toBe(true);
    expect(store.transcript).toEqual([{ kind: "text", text: "4" }]);
    expect(store.objects.vars).toEqual(["$myvar : integer = 4"]);
    expect(client.log.map((e) => e.kind)).toEqual(["eval", "objects"]);
  });

  it("keeps assignments silent but refreshes objects", async () => {
    const { client, store } = makeStore();
    client.evalResponses.push({ id: "1", ok: true, items: [] });
    client.objectsItems = [{ tag: "vars", text: "$myvar : integer = 4" }];
    await store.submit("$myvar = 4");
    expect(store.transcript).toEqual([]);
    expect(store.objects.vars).toHaveLength(1);
  });

  it("styles error items distinctly", async () => {
    const { client, store } = makeStore();
    client.evalResponses.push({
      id: "1",
      ok: true,
      items: [
        { tag: "text", text: "2" },
        { tag: "error", text: "error: division by zero" },
      ],
    });
    await store.submit("1 + 1\n1/0");
    expect(store.transcript.map((e) => e.kind)).toEqual(["text", "error"]);
  });

  it("fetches chart_ref items inline as SVG", async () => {
    const { client, store } = makeStore();
    client.evalResponses.push({
      id: "1",
      ok: true,
      items: [{ tag: "chart_ref", text: "chart_1" }],
    });
    client.charts.set("chart_1", "<svg><polyline/></svg>");
    await store.submit("plot($x, $y)");
    expect(store.transcript[0]).toMatchObject({
      kind: "chart",
      text: "chart_1",
      svg: "<svg><polyline/></svg>",
    });
  });

  it("preserves state on transport failure and reports it", async () => {
    const { client, store } = makeStore();
    client.failEval = true;
    expect(await store.submit("1 + 1")).toBe(false);
    expect(store.transcript).toEqual([]);
    expect(store.history).toEqual([]);
    expect(store.busy).toBe(false);
  });

  it("ignores empty input and rejects re-entrant submits", async () => {
    const { client, store } = makeStore();
    expect(await store.submit("   ")).toBe(false);
    expect(client.log).toEqual([]);
  });
});

describe("completion popup", () => {
  it("opens with matching suggestions and closes on empty fragment", async () => {
    const { store } = makeStore();
    await store.requestCompletion("seq");
    expect(store.completion).toEqual({
      open: true,
      fragment: "seq",
      suggestions: ["sequence"],
    });
    await store.requestCompletion("");
    expect(store.completion.open).toBe(false);
  });
});

describe("chart inspector as re-submission", () => {
  it("re-issues the originating plot statement with new options", async () => {
    const { client, store } = makeStore();
    client.evalResponses.push({
      id: "1",
      ok: true,
      items: [{ tag: "chart_ref", text: "chart_1" }],
    });
    client.charts.set("chart_1", "<svg/>");
    await store.submit('plot($x, $y, xtitle="old")');

    client.evalResponses.push({
      id: "2",
      ok: true,
      items: [{ tag: "chart_ref", text: "chart_2" }],
    });
    client.charts.set("chart_2", "<svg/>");
    await store.replotWithOptions("chart_1", { xtitle: "new title" });

    const evals = client.log.filter((e) => e.kind === "eval");
    expect(evals[1].payload.source).toBe('plot($x, $y, xtitle="new title")');
  });
});

describe("statement helpers", () => {
  it("finds the last statement of a block, honoring continuations", () => {
    expect(lastStatementOf("$x = 1\nplot($x, $x)")).toBe("plot($x, $x)");
    expect(lastStatementOf("plot($x, %\n$y)")).toBe("plot($x, %\n$y)");
    expect(lastStatementOf("plot($x, $y)\n// trailing comment")).toBe(
      "plot($x, $y)",
    );
  });

  it("replaces an existing option in place", () => {
    expect(
      rewriteOptions('plot($x, $y, xtitle="a", ytitle="b")', { xtitle: "c" }),
    ).toBe('plot($x, $y, xtitle="c", ytitle="b")');
  });

  it("appends a missing option before the closing paren", () => {
    expect(rewriteOptions("plot($x, $y)", { title: "t" })).toBe(
      'plot($x, $y, title="t")',
    );
  });

  it("is not confused by commas inside strings", () => {
    expect(
      rewriteOptions('plot($x, $y, title="a, b")', { title: "c" }),
    ).toBe('plot($x, $y, title="c")');
  });
});
