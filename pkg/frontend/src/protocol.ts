/**
 * JSON request/response client for the evaluation service.
 *
 * One request maps to exactly one response; requests are correlated by
 * id and answered in order per connection.  The transport is injected so
 * tests can drive the client with a fake socket, and the browser and
 * node can supply their own WebSocket implementations.
 */

export type ItemTag =
  | "text"
  | "error"
  | "chart_ref"
  | "report_ref"
  | "svg"
  | "html"
  | "vars"
  | "datasets"
  | "charts"
  | "reports";

export interface ResponseItem {
  tag: ItemTag | string;
  text: string;
}

export interface ServiceResponse {
  id: string | null;
  ok: boolean;
  items?: ResponseItem[];
  names?: string[];
  error?: string;
}

export type RequestKind =
  | "eval"
  | "complete"
  | "objects"
  | "get_chart"
  | "get_report"
  | "help"
  | "reset";

export interface ServiceRequest {
  id: string;
  kind: RequestKind;
  source?: string;
  fragment?: string;
  name?: string;
}

/** Minimal duplex-socket surface shared by browser and node WebSockets. */
export interface SocketLike {
  send(data: string): void;
  close(): void;
  onopen: (() => void) | null;
  onclose: (() => void) | null;
  onerror?: ((event: unknown) => void) | null;
  onmessage: ((event: { data: unknown }) => void) | null;
}

export type SocketFactory = () => SocketLike;

export type ConnectionStatus = "connecting" | "connected" | "disconnected";

interface Pending {
  id: string;
  resolve: (r: ServiceResponse) => void;
  reject: (e: Error) => void;
}

export class ServiceClient {
  private socket: SocketLike | null = null;
  private pending: Pending[] = [];
  private counter = 0;
  private closed = false;
  private reconnectDelay: number;

  status: ConnectionStatus = "disconnected";
  onStatus: ((s: ConnectionStatus) => void) | null = null;

  constructor(
    private makeSocket: SocketFactory,
    private initialReconnectDelay = 250,
  ) {
    this.reconnectDelay = initialReconnectDelay;
  }

  connect(): void {
    if (this.closed) return;
    this.setStatus("connecting");
    const socket = this.makeSocket();
    this.socket = socket;
    socket.onopen = () => {
      this.reconnectDelay = this.initialReconnectDelay;
      this.setStatus("connected");
    };
    socket.onmessage = (event) => this.handleMessage(String(event.data));
    // a failed connect surfaces as error-then-close; close drives recovery
    socket.onerror = () => {};
    socket.onclose = () => {
      if (this.socket !== socket) return;
      this.socket = null;
      this.failPending(new Error("connection lost"));
      this.setStatus("disconnected");
      if (!this.closed) {
        setTimeout(() => this.connect(), this.reconnectDelay);
        this.reconnectDelay = Math.min(this.reconnectDelay * 2, 5000);
      }
    };
  }

  close(): void {
    this.closed = true;
    this.socket?.close();
    this.socket = null;
    this.failPending(new Error("client closed"));
    this.setStatus("disconnected");
  }

  request(
    kind: RequestKind,
    fields: Omit<ServiceRequest, "id" | "kind"> = {},
  ): Promise<ServiceResponse> {
    if (this.status !== "connected" || !this.socket) {
      return Promise.reject(new Error("not connected"));
    }
    const id = `r${++this.counter}`;
    const message: ServiceRequest = { id, kind, ...fields };
    return new Promise((resolve, reject) => {
      this.pending.push({ id, resolve, reject });
      this.socket!.send(JSON.stringify(message));
    });
  }

  eval(source: string): Promise<ServiceResponse> {
    return this.request("eval", { source });
  }

  complete(fragment: string): Promise<ServiceResponse> {
    return this.request("complete", { fragment });
  }

  private handleMessage(raw: string): void {
    let response: ServiceResponse;
    try {
      response = JSON.parse(raw) as ServiceResponse;
    } catch {
      return; // not protocol traffic; ignore
    }
    const index = this.pending.findIndex((p) => p.id === response.id);
    if (index === -1) return;
    const [entry] = this.pending.splice(index, 1);
    entry.resolve(response);
  }

  private failPending(err: Error): void {
    const waiting = this.pending;
    this.pending = [];
    for (const p of waiting) p.reject(err);
  }

  private setStatus(s: ConnectionStatus): void {
    if (this.status === s) return;
    this.status = s;
    this.onStatus?.(s);
  }
}
