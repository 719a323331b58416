// Canvas rendering of the two linked views.
//
// Left: the polyline with its offset and interval highlights, pan/zoom.
// Right: raw + smoothed orientation curves with extrema dots and interval
// blocks stacked above, sharing the arc-length x-axis.

import { FoldReport, IntervalKind, Vec2 } from './types.js';
import {
  Block,
  GeometryScene,
  Transform,
  buildBlocks,
  buildGeometryScene,
  fitTransform,
  toScreen,
} from './scene.js';

export const COLORS: Record<IntervalKind, string> = {
  minimal: '#4aa3ff',
  maximal: '#3dbb3d',
  fold: '#8a2be2',
};
const BASE_COLOR = '#e7549b';
const OFFSET_COLOR = '#ff8c00';
const RAW_COLOR = '#bbbbbb';
const SMOOTH_COLOR = '#333333';

const MARGIN = 24;
const BLOCK_H = 14;
const BLOCK_GAP = 4;

export class GeometryPanel {
  private scene: GeometryScene | null = null;
  private fit: Transform | null = null;
  private zoom = 1;
  private panX = 0;
  private panY = 0;
  private dragging = false;
  private lastX = 0;
  private lastY = 0;
  hovered: string | null = null;
  onHover: (id: string | null) => void = () => {};

  constructor(private readonly canvas: HTMLCanvasElement) {
    canvas.addEventListener('wheel', (e) => {
      e.preventDefault();
      const factor = e.deltaY < 0 ? 1.15 : 1 / 1.15;
      const rect = canvas.getBoundingClientRect();
      const mx = e.clientX - rect.left;
      const my = e.clientY - rect.top;
      this.panX = mx - (mx - this.panX) * factor;
      this.panY = my - (my - this.panY) * factor;
      this.zoom *= factor;
      this.draw();
    });
    canvas.addEventListener('mousedown', (e) => {
      this.dragging = true;
      this.lastX = e.clientX;
      this.lastY = e.clientY;
    });
    window.addEventListener('mouseup', () => { this.dragging = false; });
    canvas.addEventListener('mousemove', (e) => {
      if (this.dragging) {
        this.panX += e.clientX - this.lastX;
        this.panY += e.clientY - this.lastY;
        this.lastX = e.clientX;
        this.lastY = e.clientY;
        this.draw();
      }
    });
  }

  setReport(report: FoldReport): void {
    this.scene = buildGeometryScene(report);
    this.fit = fitTransform(
      this.scene.base.concat(this.scene.offset),
      this.canvas.width, this.canvas.height, MARGIN);
    this.draw();
  }

  setHighlight(id: string | null): void {
    this.hovered = id;
    this.draw();
  }

  private toPx(p: Vec2): Vec2 {
    const [x, y] = toScreen(p, this.fit as Transform);
    return [x * this.zoom + this.panX, y * this.zoom + this.panY];
  }

  private stroke(ctx: CanvasRenderingContext2D, pts: Vec2[], color: string,
                 width: number): void {
    if (pts.length < 2) return;
    ctx.beginPath();
    const [x0, y0] = this.toPx(pts[0]);
    ctx.moveTo(x0, y0);
    for (let i = 1; i < pts.length; i++) {
      const [x, y] = this.toPx(pts[i]);
      ctx.lineTo(x, y);
    }
    ctx.strokeStyle = color;
    ctx.lineWidth = width;
    ctx.stroke();
  }

  draw(): void {
    const ctx = this.canvas.getContext('2d');
    if (!ctx || !this.scene || !this.fit) return;
    ctx.clearRect(0, 0, this.canvas.width, this.canvas.height);
    this.stroke(ctx, this.scene.offset, OFFSET_COLOR, 1);
    this.stroke(ctx, this.scene.base, BASE_COLOR, 2);
    for (const span of this.scene.spans) {
      const hot = span.id === this.hovered;
      const width = span.kind === 'fold' ? 3 : 5;
      this.stroke(ctx, span.points, COLORS[span.kind], hot ? width + 3 : width);
    }
  }
}

export class OrientationPanel {
  private report: FoldReport | null = null;
  private blocks: Block[] = [];
  hovered: string | null = null;
  onHover: (id: string | null) => void = () => {};

  constructor(private readonly canvas: HTMLCanvasElement) {
    canvas.addEventListener('mousemove', (e) => {
      const rect = canvas.getBoundingClientRect();
      const id = this.hitTest(e.clientX - rect.left, e.clientY - rect.top);
      if (id !== this.hovered) this.onHover(id);
    });
    canvas.addEventListener('mouseleave', () => this.onHover(null));
  }

  setReport(report: FoldReport): void {
    this.report = report;
    this.blocks = buildBlocks(report);
    this.draw();
  }

  setHighlight(id: string | null): void {
    this.hovered = id;
    this.draw();
  }

  private sx(t: number): number {
    const L = (this.report as FoldReport).orientation.domain_length;
    return MARGIN + (t / L) * (this.canvas.width - 2 * MARGIN);
  }

  private blockY(row: number): number {
    return MARGIN + row * (BLOCK_H + BLOCK_GAP);
  }

  hitTest(x: number, y: number): string | null {
    for (const b of this.blocks) {
      const y0 = this.blockY(b.row);
      if (y >= y0 && y <= y0 + BLOCK_H && x >= this.sx(b.tA) && x <= this.sx(b.tB)) {
        return b.id;
      }
    }
    return null;
  }

  draw(): void {
    const ctx = this.canvas.getContext('2d');
    if (!ctx || !this.report) return;
    const { raw, smoothed, domain_length: L } = this.report.orientation;
    ctx.clearRect(0, 0, this.canvas.width, this.canvas.height);

    const plotTop = this.blockY(3) + BLOCK_GAP;
    const plotH = this.canvas.height - plotTop - MARGIN;
    let lo = Infinity, hi = -Infinity;
    for (const v of raw) { lo = Math.min(lo, v); hi = Math.max(hi, v); }
    for (const v of smoothed) { lo = Math.min(lo, v); hi = Math.max(hi, v); }
    const span = Math.max(hi - lo, 1e-12);
    const sy = (v: number) => plotTop + ((hi - v) / span) * plotH;

    const curve = (values: number[], color: string, width: number) => {
      ctx.beginPath();
      values.forEach((v, i) => {
        const x = this.sx((i / (values.length - 1)) * L);
        if (i === 0) ctx.moveTo(x, sy(v));
        else ctx.lineTo(x, sy(v));
      });
      ctx.strokeStyle = color;
      ctx.lineWidth = width;
      ctx.stroke();
    };
    curve(raw, RAW_COLOR, 1);
    curve(smoothed, SMOOTH_COLOR, 1.5);

    ctx.fillStyle = SMOOTH_COLOR;
    for (const e of this.report.extrema) {
      ctx.beginPath();
      ctx.arc(this.sx(e.t), sy(e.value), 3, 0, 2 * Math.PI);
      ctx.fill();
    }

    for (const b of this.blocks) {
      const x0 = this.sx(b.tA);
      const w = Math.max(this.sx(b.tB) - x0, 2);
      ctx.fillStyle = COLORS[b.kind];
      ctx.globalAlpha = b.id === this.hovered ? 1.0 : 0.75;
      ctx.fillRect(x0, this.blockY(b.row), w, BLOCK_H);
      ctx.globalAlpha = 1.0;
      if (b.label !== undefined) {
        ctx.fillStyle = '#333';
        ctx.font = '10px sans-serif';
        ctx.fillText(String(b.label), x0, this.blockY(b.row) - 2);
      }
    }
  }
}
