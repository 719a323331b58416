import { afterEach, beforeEach, describe, expect, it, vi } from 'vitest';

import { AnalysisScheduler } from '../src/debounce.js';
import { buildBlocks } from '../src/scene.js';
import { FoldReport, TuningParams } from '../src/types.js';
import { combReport, highTauReport } from './fixtures.js';

type P = Partial<TuningParams> & { tau: number };

function deferred<T>() {
  let resolve!: (v: T) => void;
  let reject!: (e: Error) => void;
  const promise = new Promise<T>((res, rej) => { resolve = res; reject = rej; });
  return { promise, resolve, reject };
}

beforeEach(() => vi.useFakeTimers());
afterEach(() => vi.useRealTimers());

async function flush() {
  await vi.runAllTimersAsync();
}

describe('AnalysisScheduler', () => {
  it('coalesces a scrub into a single request for the final params', async () => {
    const calls: P[] = [];
    const sched = new AnalysisScheduler<P, FoldReport>({
      fetcher: async (p) => { calls.push(p); return combReport(); },
      onResult: () => {},
      onError: () => {},
    });
    for (let i = 0; i < 20; i++) {
      sched.request({ tau: 1 + i * 0.05 });
      vi.advanceTimersByTime(30); // faster than the 100 ms debounce
    }
    await flush();
    expect(calls).toHaveLength(1);
    expect(calls[0].tau).toBeCloseTo(1 + 19 * 0.05);
  });

  it('discards a stale response that resolves after a newer one', async () => {
    const slow = deferred<FoldReport>();
    const fast = deferred<FoldReport>();
    const pending = [slow, fast];
    const applied: number[] = [];
    const sched = new AnalysisScheduler<P, FoldReport>({
      fetcher: () => (pending.shift() as typeof slow).promise,
      onResult: (r) => applied.push(r.folds.length),
      onError: () => {},
      delayMs: 0,
    });
    sched.requestNow({ tau: 2.0 });
    sched.requestNow({ tau: 3.1 });
    fast.resolve(highTauReport()); // newest finishes first
    slow.resolve(combReport());    // older result arrives late
    await flush();
    expect(applied).toEqual([0]); // the stale 2-fold report never lands
  });

  it('keeps the last good report on errors and reports a banner message', async () => {
    let report: FoldReport | null = null;
    let error: string | null = null;
    let fail = false;
    const sched = new AnalysisScheduler<P, FoldReport>({
      fetcher: async () => {
        if (fail) throw new Error('server down');
        return combReport();
      },
      onResult: (r) => { report = r; },
      onError: (msg) => { error = msg; },
      delayMs: 0,
    });
    sched.requestNow({ tau: 2.0 });
    await flush();
    fail = true;
    sched.requestNow({ tau: 2.5 });
    await flush();
    expect(error).toBe('server down');
    expect(report).not.toBeNull();
    expect((report as unknown as FoldReport).folds).toHaveLength(2);
  });

  it('removes blue and violet blocks within one debounce cycle when tau '
     + 'exceeds every pair amplitude', async () => {
    // conformance check: raising tau empties minimal and fold families
    let blocks = buildBlocks(combReport());
    const sched = new AnalysisScheduler<P, FoldReport>({
      fetcher: async (p) => (p.tau > 3 ? highTauReport() : combReport()),
      onResult: (r) => { blocks = buildBlocks(r); },
      onError: () => {},
    });
    sched.request({ tau: 2.094 });
    await flush();
    expect(blocks.filter((b) => b.kind === 'minimal')).toHaveLength(2);
    expect(blocks.filter((b) => b.kind === 'fold')).toHaveLength(2);

    sched.request({ tau: 3.1 });
    vi.advanceTimersByTime(100); // exactly one debounce cycle
    await flush();
    expect(blocks.filter((b) => b.kind === 'minimal')).toHaveLength(0);
    expect(blocks.filter((b) => b.kind === 'fold')).toHaveLength(0);
    expect(blocks.filter((b) => b.kind === 'maximal')).toHaveLength(2);
  });
});
