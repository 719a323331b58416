import { FoldReport } from '../src/types.js';

/** Minimal hand-built report shaped like a two-tooth comb analysis. */
export function combReport(overrides: Partial<FoldReport> = {}): FoldReport {
  const vertices: [number, number][] = [
    [0, 0], [2, 0], [2, -2], [3, -2], [3, 0],
    [5, 0], [5, -2], [6, -2], [6, 0], [8, 0],
  ];
  return {
    version: 1,
    params: { tau: 2.094, delta: 1.0 },
    polyline: { vertices, arc_length: 18 },
    offset: {
      delta: 1.0,
      side: 'left',
      vertices: vertices.map(([x, y]) => [x, y + 1]),
    },
    chirality: { direction: 'right', confident: true },
    orientation: {
      m: 16,
      domain_length: 18,
      raw: Array.from({ length: 16 }, (_, i) => Math.sin(i / 3)),
      smoothed: Array.from({ length: 16 }, (_, i) => Math.sin(i / 3) * 0.9),
    },
    extrema: [
      { t: 3, value: -1.5, kind: 'min' },
      { t: 5, value: 1.5, kind: 'max' },
      { t: 10, value: -1.5, kind: 'min' },
      { t: 12, value: 1.5, kind: 'max' },
    ],
    minimal_subsets: [[3, 5], [10, 12]],
    maximal_subsets: [[2, 7], [9, 14]],
    folds: [
      { label: 1, t_a: 2, t_b: 7, width: 1, depth: 2, arc_length: 5,
        minimal_children: [[3, 5]] },
      { label: 2, t_a: 9, t_b: 14, width: 1, depth: 2, arc_length: 5,
        minimal_children: [[10, 12]] },
    ],
    ...overrides,
  };
}

/** The same dataset analyzed with tau above every pair amplitude. */
export function highTauReport(): FoldReport {
  return combReport({
    params: { tau: 3.1, delta: 1.0 },
    minimal_subsets: [],
    folds: [],
  });
}
