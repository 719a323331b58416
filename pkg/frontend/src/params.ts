import { TuningParams } from './types.js';

// Parameter bounds for the sliders. tau lives in (0, pi]; the rest are
// positive with generous upper limits for exploration.
export const PARAM_LIMITS = {
  tau: { min: 0.1, max: Math.PI, step: 0.01 },
  delta: { min: 0.01, max: 10, step: 0.01 },
  smooth: { min: 0.005, max: 0.5, step: 0.005 },
  rho: { min: 1, max: 10, step: 0.1 },
} as const;

export type NumericParam = keyof typeof PARAM_LIMITS;

export function clampParam(name: NumericParam, value: number): number {
  const { min, max } = PARAM_LIMITS[name];
  if (Number.isNaN(value)) return min;
  return Math.min(max, Math.max(min, value));
}

/** Query string for the analysis endpoint, stable key order. */
export function analysisQuery(params: TuningParams): string {
  const q = new URLSearchParams();
  q.set('tau', params.tau.toString());
  q.set('delta', params.delta.toString());
  q.set('smooth', params.smooth.toString());
  q.set('rho', params.rho.toString());
  q.set('side', params.side);
  q.set('mode', params.mode);
  return q.toString();
}
