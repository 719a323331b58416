// Pure report-to-scene mapping shared by both panels.
//
// Everything here is plain data in and plain data out so the mapping can
// be tested without a DOM: the canvas code only iterates the results.

import { FoldReport, IntervalKind, Vec2, intervalId } from './types.js';

export interface Span {
  id: string;
  kind: IntervalKind;
  tA: number;
  tB: number;
  points: Vec2[];
}

export interface Block {
  id: string;
  kind: IntervalKind;
  tA: number;
  tB: number;
  row: number;
  label?: number;
}

export interface GeometryScene {
  base: Vec2[];
  offset: Vec2[];
  spans: Span[];
}

const BLOCK_ROW: Record<IntervalKind, number> = { minimal: 0, maximal: 1, fold: 2 };

/** Cumulative arc lengths of a vertex chain, starting at 0. */
export function cumulativeLengths(vertices: Vec2[]): number[] {
  const cum = [0];
  for (let i = 1; i < vertices.length; i++) {
    const dx = vertices[i][0] - vertices[i - 1][0];
    const dy = vertices[i][1] - vertices[i - 1][1];
    cum.push(cum[i - 1] + Math.hypot(dx, dy));
  }
  return cum;
}

/** Point at arc length t via linear interpolation along the chain. */
export function pointAt(vertices: Vec2[], cum: number[], t: number): Vec2 {
  const total = cum[cum.length - 1];
  const clamped = Math.min(Math.max(t, 0), total);
  let lo = 0;
  let hi = cum.length - 1;
  while (hi - lo > 1) {
    const mid = (lo + hi) >> 1;
    if (cum[mid] <= clamped) lo = mid;
    else hi = mid;
  }
  const segLen = cum[lo + 1] - cum[lo];
  const u = segLen > 0 ? (clamped - cum[lo]) / segLen : 0;
  return [
    vertices[lo][0] + u * (vertices[lo + 1][0] - vertices[lo][0]),
    vertices[lo][1] + u * (vertices[lo + 1][1] - vertices[lo][1]),
  ];
}

/** Subchain between arc lengths [tA, tB]: interior vertices plus exact cut ends. */
export function subchain(vertices: Vec2[], cum: number[], tA: number, tB: number): Vec2[] {
  const pts: Vec2[] = [pointAt(vertices, cum, tA)];
  for (let i = 0; i < vertices.length; i++) {
    if (cum[i] > tA && cum[i] < tB) pts.push(vertices[i]);
  }
  pts.push(pointAt(vertices, cum, tB));
  return pts;
}

export function buildGeometryScene(report: FoldReport): GeometryScene {
  const verts = report.polyline.vertices;
  const cum = cumulativeLengths(verts);
  const spans: Span[] = [];
  const families: [IntervalKind, [number, number][]][] = [
    ['minimal', report.minimal_subsets],
    ['maximal', report.maximal_subsets],
    ['fold', report.folds.map((f) => [f.t_a, f.t_b] as [number, number])],
  ];
  for (const [kind, intervals] of families) {
    intervals.forEach(([tA, tB], i) => {
      spans.push({ id: intervalId(kind, i), kind, tA, tB,
                   points: subchain(verts, cum, tA, tB) });
    });
  }
  return { base: verts, offset: report.offset.vertices, spans };
}

export function buildBlocks(report: FoldReport): Block[] {
  const blocks: Block[] = [];
  report.minimal_subsets.forEach(([tA, tB], i) => {
    blocks.push({ id: intervalId('minimal', i), kind: 'minimal', tA, tB,
                  row: BLOCK_ROW.minimal });
  });
  report.maximal_subsets.forEach(([tA, tB], i) => {
    blocks.push({ id: intervalId('maximal', i), kind: 'maximal', tA, tB,
                  row: BLOCK_ROW.maximal });
  });
  report.folds.forEach((f, i) => {
    blocks.push({ id: intervalId('fold', i), kind: 'fold', tA: f.t_a,
                  tB: f.t_b, row: BLOCK_ROW.fold, label: f.label });
  });
  return blocks;
}

export interface Transform {
  scale: number;
  offsetX: number;
  offsetY: number;
}

/** Fit a point cloud into a width x height viewport, y flipped for canvas. */
export function fitTransform(points: Vec2[], width: number, height: number,
                             margin: number): Transform {
  let minX = Infinity, minY = Infinity, maxX = -Infinity, maxY = -Infinity;
  for (const [x, y] of points) {
    minX = Math.min(minX, x); maxX = Math.max(maxX, x);
    minY = Math.min(minY, y); maxY = Math.max(maxY, y);
  }
  const spanX = Math.max(maxX - minX, 1e-12);
  const spanY = Math.max(maxY - minY, 1e-12);
  const scale = Math.min((width - 2 * margin) / spanX,
                         (height - 2 * margin) / spanY);
  return {
    scale,
    offsetX: margin - minX * scale + (width - 2 * margin - spanX * scale) / 2,
    offsetY: height - margin + minY * scale,
  };
}

export function toScreen(p: Vec2, tf: Transform): Vec2 {
  return [p[0] * tf.scale + tf.offsetX, tf.offsetY - p[1] * tf.scale];
}
