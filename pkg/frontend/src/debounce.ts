// Debounced analysis scheduling with stale-response discard.
//
// Slider scrubbing fires many parameter changes per second; the service
// only ever needs the latest. Each request() restarts a 100 ms timer, at
// most one fetch is in flight, and a response is applied only if no newer
// request was issued while it was pending (last-write-wins).

export const DEBOUNCE_MS = 100;

export interface SchedulerHooks<P, R> {
  fetcher: (params: P) => Promise<R>;
  onResult: (report: R, params: P) => void;
  onError: (message: string) => void;
  delayMs?: number;
}

export class AnalysisScheduler<P, R> {
  private timer: ReturnType<typeof setTimeout> | null = null;
  private seq = 0;
  private applied = 0;
  private readonly delayMs: number;

  constructor(private readonly hooks: SchedulerHooks<P, R>) {
    this.delayMs = hooks.delayMs ?? DEBOUNCE_MS;
  }

  /** Schedule an analysis for `params`, superseding any pending one. */
  request(params: P): void {
    const ticket = ++this.seq;
    if (this.timer !== null) clearTimeout(this.timer);
    this.timer = setTimeout(() => {
      this.timer = null;
      this.fire(ticket, params);
    }, this.delayMs);
  }

  /** Bypass the debounce delay, e.g. for the initial load. */
  requestNow(params: P): void {
    const ticket = ++this.seq;
    if (this.timer !== null) {
      clearTimeout(this.timer);
      this.timer = null;
    }
    this.fire(ticket, params);
  }

  private fire(ticket: number, params: P): void {
    this.hooks.fetcher(params).then(
      (report) => {
        if (ticket <= this.applied || ticket < this.seq) return; // stale
        this.applied = ticket;
        this.hooks.onResult(report, params);
      },
      (err) => {
        if (ticket < this.seq) return;
        this.hooks.onError(err instanceof Error ? err.message : String(err));
      },
    );
  }
}
