/**
 * DOM bindings for the console: three panes (info panel, input console,
 * output console) plus the completion popup and reconnect banner.
 */
import { bracketMatch, tokenize } from "./tokenizer.js";
const TOKEN_CLASS_PREFIX = "tok-";
/** Render the source as colored spans for the highlight overlay. */
export function highlightHtml(source, cursor = -1) {
    const match = cursor >= 0 ? bracketMatch(source, cursor) : { at: -1, partner: -1 };
    const parts = [];
    for (const tok of tokenize(source)) {
        const marked = tok.start === match.at || tok.start === match.partner
            ? match.partner === -1
                ? " tok-bracket-bad"
                : " tok-bracket"
            : "";
        parts.push(`<span class="${TOKEN_CLASS_PREFIX}${tok.cls}${marked}">${escapeHtml(tok.text)}</span>`);
    }
    return parts.join("");
}
export function escapeHtml(text) {
    return text
        .replace(/&/g, "&amp;")
        .replace(/</g, "&lt;")
        .replace(/>/g, "&gt;")
        .replace(/"/g, "&quot;");
}
export function transcriptEntryHtml(entry) {
    switch (entry.kind) {
        case "text":
            return `<pre class="out-text">${escapeHtml(entry.text)}</pre>`;
        case "error":
            return `<pre class="out-error">${escapeHtml(entry.text)}</pre>`;
        case "chart":
            return `<div class="out-chart" data-chart="${escapeHtml(entry.text)}">${entry.svg ?? ""}</div>`;
        case "report":
            return `<details class="out-report"><summary>${escapeHtml(entry.text)}</summary>${entry.body ?? ""}</details>`;
    }
}
export function renderAll(store, el) {
    el.transcript.innerHTML = store.transcript.map(transcriptEntryHtml).join("");
    el.transcript.scrollTop = el.transcript.scrollHeight;
    const groups = [
        ["datasets", store.objects.datasets],
        ["variables", store.objects.vars],
        ["charts", store.objects.charts],
        ["reports", store.objects.reports],
    ];
    el.objects.innerHTML = groups
        .map(([title, lines]) => `<details open class="obj-group"><summary>${title} (${lines.length})</summary>` +
        lines
            .map((l) => `<div class="obj-line">${escapeHtml(l)}</div>`)
            .join("") +
        `</details>`)
        .join("");
    el.popup.style.display = store.completion.open ? "block" : "none";
    el.popup.innerHTML = store.completion.suggestions
        .map((s, i) => `<div class="comp${i === 0 ? " sel" : ""}">${escapeHtml(s)}</div>`)
        .join("");
    el.input.disabled = store.busy;
    el.overlay.innerHTML = highlightHtml(el.input.value, el.input.selectionStart ?? -1);
}
export function renderStatus(status, el) {
    el.status.textContent = status;
    el.status.className = `status status-${status}`;
    el.banner.style.display = status === "connected" ? "none" : "block";
    el.banner.textContent =
        status === "connecting" ? "reconnecting…" : "connection lost — retrying";
}
