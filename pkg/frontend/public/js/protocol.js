/**
 * JSON request/response client for the evaluation service.
 *
 * One request maps to exactly one response; requests are correlated by
 * id and answered in order per connection.  The transport is injected so
 * tests can drive the client with a fake socket, and the browser and
 * node can supply their own WebSocket implementations.
 */
export class ServiceClient {
    constructor(makeSocket, initialReconnectDelay = 250) {
        this.makeSocket = makeSocket;
        this.initialReconnectDelay = initialReconnectDelay;
        this.socket = null;
        this.pending = [];
        this.counter = 0;
        this.closed = false;
        this.status = "disconnected";
        this.onStatus = null;
        this.reconnectDelay = initialReconnectDelay;
    }
    connect() {
        if (this.closed)
            return;
        this.setStatus("connecting");
        const socket = this.makeSocket();
        this.socket = socket;
        socket.onopen = () => {
            this.reconnectDelay = this.initialReconnectDelay;
            this.setStatus("connected");
        };
        socket.onmessage = (event) => this.handleMessage(String(event.data));
        // a failed connect surfaces as error-then-close; close drives recovery
        socket.onerror = () => { };
        socket.onclose = () => {
            if (this.socket !== socket)
                return;
            this.socket = null;
            this.failPending(new Error("connection lost"));
            this.setStatus("disconnected");
            if (!this.closed) {
                setTimeout(() => this.connect(), this.reconnectDelay);
                this.reconnectDelay = Math.min(this.reconnectDelay * 2, 5000);
            }
        };
    }
    close() {
        this.closed = true;
        this.socket?.close();
        this.socket = null;
        this.failPending(new Error("client closed"));
        this.setStatus("disconnected");
    }
    request(kind, fields = {}) {
        if (this.status !== "connected" || !this.socket) {
            return Promise.reject(new Error("not connected"));
        }
        const id = `r${++this.counter}`;
        const message = { id, kind, ...fields };
        return new Promise((resolve, reject) => {
            this.pending.push({ id, resolve, reject });
            this.socket.send(JSON.stringify(message));
        });
    }
    eval(source) {
        return this.request("eval", { source });
    }
    complete(fragment) {
        return this.request("complete", { fragment });
    }
    handleMessage(raw) {
        let response;
        try {
            response = JSON.parse(raw);
        }
        catch {
            return; // not protocol traffic; ignore
        }
        const index = this.pending.findIndex((p) => p.id === response.id);
        if (index === -1)
            return;
        const [entry] = this.pending.splice(index, 1);
        entry.resolve(response);
    }
    failPending(err) {
        const waiting = this.pending;
        this.pending = [];
        for (const p of waiting)
            p.reject(err);
    }
    setStatus(s) {
        if (this.status === s)
            return;
        this.status = s;
        this.onStatus?.(s);
    }
}
