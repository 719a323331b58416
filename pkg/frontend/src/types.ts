// Shapes of the analysis service's JSON payloads. The UI never computes
// geometry itself: everything drawn comes from a FoldReport.

export type Vec2 = [number, number];

export interface FoldReport {
  version: number;
  params: Record<string, number | string>;
  polyline: { vertices: Vec2[]; arc_length: number };
  offset: { delta: number; side: string; vertices: Vec2[] };
  chirality: { direction: 'left' | 'right'; confident: boolean };
  orientation: {
    m: number;
    domain_length: number;
    raw: number[];
    smoothed: number[];
  };
  extrema: { t: number; value: number; kind: 'min' | 'max' }[];
  minimal_subsets: [number, number][];
  maximal_subsets: [number, number][];
  folds: {
    label: number;
    t_a: number;
    t_b: number;
    width: number;
    depth: number;
    arc_length: number;
    minimal_children: [number, number][];
  }[];
}

export interface TuningParams {
  tau: number;
  delta: number;
  smooth: number;
  rho: number;
  side: 'auto' | 'left' | 'right';
  mode: 'overlap' | 'strict';
}

export const DEFAULT_PARAMS: TuningParams = {
  tau: (2 * Math.PI) / 3,
  delta: 1.0,
  smooth: 0.05,
  rho: 3.0,
  side: 'auto',
  mode: 'overlap',
};

export type IntervalKind = 'minimal' | 'maximal' | 'fold';

/** Stable id for linked highlighting across the two panels. */
export function intervalId(kind: IntervalKind, index: number): string {
  return `${kind}:${index}`;
}
