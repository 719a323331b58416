import { describe, expect, it } from 'vitest';

import {
  buildBlocks,
  buildGeometryScene,
  cumulativeLengths,
  fitTransform,
  pointAt,
  subchain,
  toScreen,
} from '../src/scene.js';
import { combReport } from './fixtures.js';

describe('cumulativeLengths / pointAt', () => {
  const verts: [number, number][] = [[0, 0], [3, 0], [3, 4]];

  it('accumulates segment lengths', () => {
    expect(cumulativeLengths(verts)).toEqual([0, 3, 7]);
  });

  it('interpolates inside segments', () => {
    const cum = cumulativeLengths(verts);
    expect(pointAt(verts, cum, 1.5)).toEqual([1.5, 0]);
    expect(pointAt(verts, cum, 5)).toEqual([3, 2]);
  });

  it('clamps out-of-range arc lengths', () => {
    const cum = cumulativeLengths(verts);
    expect(pointAt(verts, cum, -1)).toEqual([0, 0]);
    expect(pointAt(verts, cum, 99)).toEqual([3, 4]);
  });
});

describe('subchain', () => {
  it('cuts exactly at the endpoints and keeps interior vertices', () => {
    const verts: [number, number][] = [[0, 0], [2, 0], [2, 2], [0, 2]];
    const cum = cumulativeLengths(verts);
    const pts = subchain(verts, cum, 1, 5);
    expect(pts[0]).toEqual([1, 0]);
    expect(pts[pts.length - 1]).toEqual([1, 2]);
    expect(pts).toContainEqual([2, 0]);
    expect(pts).toContainEqual([2, 2]);
  });
});

describe('buildGeometryScene / buildBlocks', () => {
  it('emits one span and one block per report interval', () => {
    const report = combReport();
    const scene = buildGeometryScene(report);
    const blocks = buildBlocks(report);
    const want = report.minimal_subsets.length +
      report.maximal_subsets.length + report.folds.length;
    expect(scene.spans).toHaveLength(want);
    expect(blocks).toHaveLength(want);
  });

  it('uses matching ids across panels for linked highlighting', () => {
    const report = combReport();
    const spanIds = buildGeometryScene(report).spans.map((s) => s.id).sort();
    const blockIds = buildBlocks(report).map((b) => b.id).sort();
    expect(spanIds).toEqual(blockIds);
  });

  it('keeps block arc positions equal to the report intervals', () => {
    const report = combReport();
    const folds = buildBlocks(report).filter((b) => b.kind === 'fold');
    expect(folds.map((b) => [b.tA, b.tB])).toEqual(
      report.folds.map((f) => [f.t_a, f.t_b]));
    expect(folds.map((b) => b.label)).toEqual([1, 2]);
  });

  it('assigns one row per family', () => {
    const rows = new Map(buildBlocks(combReport()).map((b) => [b.kind, b.row]));
    expect(rows.get('minimal')).not.toBe(rows.get('maximal'));
    expect(rows.get('maximal')).not.toBe(rows.get('fold'));
  });

  it('empty report produces curves only', () => {
    const report = combReport({ minimal_subsets: [], maximal_subsets: [],
                                folds: [] });
    expect(buildGeometryScene(report).spans).toHaveLength(0);
    expect(buildBlocks(report)).toHaveLength(0);
    expect(buildGeometryScene(report).base.length).toBeGreaterThan(1);
  });
});

describe('fitTransform', () => {
  it('maps the bounding box inside the viewport with y flipped', () => {
    const pts: [number, number][] = [[0, 0], [10, 5], [4, -3]];
    const tf = fitTransform(pts, 640, 480, 20);
    for (const p of pts) {
      const [x, y] = toScreen(p, tf);
      expect(x).toBeGreaterThanOrEqual(20 - 1e-9);
      expect(x).toBeLessThanOrEqual(620 + 1e-9);
      expect(y).toBeGreaterThanOrEqual(20 - 1e-9);
      expect(y).toBeLessThanOrEqual(460 + 1e-9);
    }
    const low = toScreen([4, -3], tf)[1];
    const high = toScreen([10, 5], tf)[1];
    expect(low).toBeGreaterThan(high); // larger y is higher on screen
  });

  it('preserves aspect ratio', () => {
    const tf = fitTransform([[0, 0], [10, 1]], 100, 100, 10);
    const [x0] = toScreen([0, 0], tf);
    const [x1] = toScreen([10, 1], tf);
    const [, y0] = toScreen([0, 0], tf);
    const [, y1] = toScreen([0, 1], tf);
    expect((x1 - x0) / 10).toBeCloseTo(Math.abs(y1 - y0), 9);
  });
});
