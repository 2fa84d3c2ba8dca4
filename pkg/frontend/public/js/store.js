/**
 * Console state: transcript, object panel, completion popup, history.
 *
 * All values come from service responses; the store only orchestrates
 * requests and keeps presentation state.  One eval is in flight at a
 * time, mirroring the session's serialized execution.
 */
import { tokenize } from "./tokenizer.js";
const EMPTY_PANEL = {
    vars: [],
    datasets: [],
    charts: [],
    reports: [],
};
export class ConsoleStore {
    constructor(client) {
        this.client = client;
        this.transcript = [];
        this.objects = { ...EMPTY_PANEL };
        this.completion = { open: false, fragment: "", suggestions: [] };
        this.history = [];
        this.busy = false;
        /** statement that produced each chart, for option re-submission */
        this.chartSources = new Map();
        this.onChange = null;
    }
    changed() {
        this.onChange?.();
    }
    /**
     * Evaluate one submitted statement block.  Resolves false on transport
     * failure so the caller can hand the typed text back to the user.
     */
    async submit(source) {
        if (this.busy || !source.trim())
            return false;
        this.busy = true;
        this.completion = { open: false, fragment: "", suggestions: [] };
        this.changed();
        try {
            let response;
            try {
                response = await this.client.eval(source);
            }
            catch {
                return false;
            }
            this.history.push(source);
            await this.applyEvalResponse(source, response);
            await this.refreshObjects();
            return true;
        }
        finally {
            this.busy = false;
            this.changed();
        }
    }
    async applyEvalResponse(source, response) {
        if (!response.ok) {
            this.transcript.push({
                kind: "error",
                text: response.error ?? "protocol error",
            });
            return;
        }
        for (const item of response.items ?? []) {
            if (item.tag === "text" || item.tag === "error") {
                this.transcript.push({ kind: item.tag, text: item.text });
            }
            else if (item.tag === "chart_ref") {
                this.chartSources.set(item.text, lastStatementOf(source));
                this.transcript.push({
                    kind: "chart",
                    text: item.text,
                    svg: await this.fetchChart(item.text),
                });
            }
            else if (item.tag === "report_ref") {
                this.transcript.push({
                    kind: "report",
                    text: item.text,
                    body: await this.fetchReport(item.text),
                });
            }
        }
        this.changed();
    }
    async fetchChart(name) {
        try {
            const r = await this.client.request("get_chart", { name });
            return r.ok ? r.items?.[0]?.text : undefined;
        }
        catch {
            return undefined;
        }
    }
    async fetchReport(name) {
        try {
            const r = await this.client.request("get_report", { name });
            return r.ok ? r.items?.[0]?.text : undefined;
        }
        catch {
            return undefined;
        }
    }
    async refreshObjects() {
        let r;
        try {
            r = await this.client.request("objects");
        }
        catch {
            return;
        }
        if (!r.ok)
            return;
        const panel = {
            vars: [],
            datasets: [],
            charts: [],
            reports: [],
        };
        for (const item of r.items ?? []) {
            if (item.tag in panel) {
                panel[item.tag].push(item.text);
            }
        }
        this.objects = panel;
        this.changed();
    }
    async requestCompletion(fragment) {
        if (!fragment) {
            this.completion = { open: false, fragment: "", suggestions: [] };
            this.changed();
            return;
        }
        let suggestions = [];
        try {
            const r = await this.client.complete(fragment);
            suggestions = r.ok ? (r.names ?? []) : [];
        }
        catch {
            suggestions = [];
        }
        this.completion = { open: suggestions.length > 0, fragment, suggestions };
        this.changed();
    }
    /**
     * Chart-inspector behaviour: re-issue the statement that created the
     * chart with replaced/added named options.  The kernel stays the only
     * source of truth for how the chart looks.
     */
    async replotWithOptions(name, options) {
        const original = this.chartSources.get(name);
        if (!original)
            return;
        await this.submit(rewriteOptions(original, options));
    }
}
/** Last non-empty logical statement of a submitted block. */
export function lastStatementOf(source) {
    const lines = source.split("\n");
    const kept = [];
    let carry = "";
    for (const line of lines) {
        const merged = carry ? `${carry}\n${line}` : line;
        if (/%\s*(\/\/.*)?$/.test(line)) {
            carry = merged;
            continue;
        }
        carry = "";
        if (merged.trim() && !merged.trim().startsWith("//"))
            kept.push(merged);
    }
    if (carry.trim())
        kept.push(carry);
    return kept[kept.length - 1] ?? source;
}
/**
 * Replace or append named options (opt="value") in a single call
 * statement, token-aware so strings with commas survive.
 */
export function rewriteOptions(statement, options) {
    const close = statement.lastIndexOf(")");
    if (close === -1)
        return statement;
    let result = statement;
    for (const [key, value] of Object.entries(options)) {
        const quoted = `${key}="${value.replace(/"/g, "")}"`;
        const existing = findOption(result, key);
        if (existing) {
            result = result.slice(0, existing.start) + quoted + result.slice(existing.end);
        }
        else {
            const at = result.lastIndexOf(")");
            const needsComma = !/\(\s*$/.test(result.slice(0, at));
            result =
                result.slice(0, at) + (needsComma ? ", " : "") + quoted + result.slice(at);
        }
    }
    return result;
}
function findOption(statement, key) {
    const tokens = tokenize(statement).filter((t) => t.cls !== "whitespace");
    for (let i = 0; i + 2 < tokens.length; i++) {
        if (tokens[i].cls === "identifier" &&
            tokens[i].text.toLowerCase() === key.toLowerCase() &&
            tokens[i + 1].text === "=" &&
            (tokens[i + 2].cls === "string" ||
                tokens[i + 2].cls === "number" ||
                tokens[i + 2].cls === "boolean")) {
            return { start: tokens[i].start, end: tokens[i + 2].end };
        }
    }
    return null;
}
