/** Browser entry point: wire the store to the page and the service. */

import { ServiceClient, type SocketLike } from "./protocol.js";
import { ConsoleStore } from "./store.js";
import { fragmentAt, needsContinuation } from "./tokenizer.js";
import { renderAll, renderStatus, type ViewElements } from "./view.js";

function el<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (!node) throw new Error(`missing element #${id}`);
  return node as T;
}

function makeBrowserSocket(): SocketLike {
  const proto = location.protocol === "https:" ? "wss" : "ws";
  const ws = new WebSocket(`${proto}://${location.host}/ws`);
  return ws as unknown as SocketLike;
}

export function start(): void {
  const elements: ViewElements = {
    transcript: el("transcript"),
    objects: el("objects"),
    input: el<HTMLTextAreaElement>("input"),
    overlay: el("overlay"),
    popup: el("popup"),
    banner: el("banner"),
    status: el("status"),
  };

  const client = new ServiceClient(makeBrowserSocket);
  const store = new ConsoleStore(client);

  store.onChange = () => renderAll(store, elements);
  client.onStatus = (status) => {
    renderStatus(status, elements);
    if (status === "connected") void store.refreshObjects();
  };

  let buffer = "";
  elements.input.addEventListener("keydown", (event) => {
    if (event.key === "Enter" && !event.shiftKey) {
      event.preventDefault();
      const line = elements.input.value;
      buffer = buffer ? `${buffer}\n${line}` : line;
      elements.input.value = "";
      if (!needsContinuation(buffer)) {
        const source = buffer;
        buffer = "";
        void store.submit(source).then((ok) => {
          if (!ok && !store.busy) {
            // transport failure: hand the typed text back
            elements.input.value = source;
            renderAll(store, elements);
          }
        });
      }
      renderAll(store, elements);
    } else if (event.key === "Tab") {
      event.preventDefault();
      const fragment = fragmentAt(
        elements.input.value,
        elements.input.selectionStart ?? elements.input.value.length,
      );
      void store.requestCompletion(fragment);
    } else if (event.key === "Escape") {
      store.completion = { open: false, fragment: "", suggestions: [] };
      renderAll(store, elements);
    }
  });

  elements.input.addEventListener("input", () => renderAll(store, elements));
  elements.input.addEventListener("click", () => renderAll(store, elements));

  elements.popup.addEventListener("mousedown", (event) => {
    const target = event.target as HTMLElement;
    if (!target.classList.contains("comp")) return;
    event.preventDefault();
    const choice = target.textContent ?? "";
    const input = elements.input;
    const cursor = input.selectionStart ?? input.value.length;
    const fragment = fragmentAt(input.value, cursor);
    input.value =
      input.value.slice(0, cursor - fragment.length) +
      choice +
      input.value.slice(cursor);
    store.completion = { open: false, fragment: "", suggestions: [] };
    renderAll(store, elements);
    input.focus();
  });

  // chart inspector: double-click an inline chart to edit its titles
  elements.transcript.addEventListener("dblclick", (event) => {
    const holder = (event.target as HTMLElement).closest("[data-chart]");
    if (!holder) return;
    const name = holder.getAttribute("data-chart") ?? "";
    const xtitle = prompt("x axis title?");
    if (xtitle === null) return;
    void store.replotWithOptions(name, { xtitle });
  });

  renderStatus(client.status, elements);
  renderAll(store, elements);
  client.connect();
}

start();
