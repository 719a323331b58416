"""Static SVG rendering of a fold report: linked geometry + graph panels.

Left panel: the polyline with its offset line and interval highlights.
Right panel: raw and smoothed orientation curves with extrema markers and
interval blocks (minimal / maximal / fold) stacked above, sharing the
arc-length x-axis.
"""
from __future__ import annotations

import numpy as np

COLOR_MINIMAL = "#4aa3ff"
COLOR_MAXIMAL = "#3dbb3d"
COLOR_FOLD = "#8a2be2"
COLOR_BASE = "#e7549b"
COLOR_OFFSET = "#ff8c00"
COLOR_RAW = "#bbbbbb"
COLOR_SMOOTH = "#333333"

PANEL_W = 560
PANEL_H = 420
MARGIN = 30
BLOCK_H = 12


def _path(points, stroke, width=1.5, cls="") -> str:
    d = "M " + " L ".join(f"{x:.3f} {y:.3f}" for x, y in points)
    cls_attr = f' class="{cls}"' if cls else ""
    return (f'<path{cls_attr} d="{d}" fill="none" stroke="{stroke}" '
            f'stroke-width="{width}"/>')


def _fit(vertices, width, height, margin):
    v = np.asarray(vertices, dtype=float)
    lo = v.min(axis=0)
    hi = v.max(axis=0)
    span = np.maximum(hi - lo, 1e-12)
    scale = min((width - 2 * margin) / span[0], (height - 2 * margin) / span[1])

    def to_px(pts):
        pts = np.asarray(pts, dtype=float)
        x = margin + (pts[:, 0] - lo[0]) * scale
        y = height - margin - (pts[:, 1] - lo[1]) * scale  # svg y grows down
        return np.column_stack([x, y])

    return to_px


def _resample_between(vertices, cum, t_a, t_b, n=64):
    ts = np.linspace(t_a, t_b, n)
    idx = np.clip(np.searchsorted(cum, ts, side="right") - 1, 0, len(cum) - 2)
    seg = np.diff(vertices, axis=0)
    seg_len = np.maximum(cum[1:] - cum[:-1], 1e-300)
    u = (ts - cum[idx]) / seg_len[idx]
    return vertices[idx] + u[:, None] * seg[idx]


def _geometry_panel(report: dict) -> list[str]:
    verts = np.array(report["polyline"]["vertices"])
    offset = np.array(report["offset"]["vertices"])
    cum = np.concatenate([[0.0], np.cumsum(np.hypot(*np.diff(verts, axis=0).T))])
    to_px = _fit(np.vstack([verts, offset]), PANEL_W, PANEL_H, MARGIN)
    parts = [_path(to_px(offset), COLOR_OFFSET, 1.0, cls="offset-line"),
             _path(to_px(verts), COLOR_BASE, 2.0, cls="base-line")]
    families = [("minimal_subsets", COLOR_MINIMAL, "minimal-span"),
                ("maximal_subsets", COLOR_MAXIMAL, "maximal-span")]
    for key, color, cls in families:
        for t_a, t_b in report[key]:
            pts = _resample_between(verts, cum, t_a, t_b)
            parts.append(_path(to_px(pts), color, 4.0, cls=cls))
    for f in report["folds"]:
        pts = _resample_between(verts, cum, f["t_a"], f["t_b"])
        parts.append(_path(to_px(pts), COLOR_FOLD, 2.5, cls="fold-span"))
    return parts


def _orientation_panel(report: dict) -> list[str]:
    x0 = PANEL_W + 20
    L = report["orientation"]["domain_length"]
    raw = np.array(report["orientation"]["raw"])
    smooth = np.array(report["orientation"]["smoothed"])
    lo = min(raw.min(), smooth.min())
    hi = max(raw.max(), smooth.max())
    span = max(hi - lo, 1e-12)
    plot_top = MARGIN + 4 * BLOCK_H
    plot_h = PANEL_H - plot_top - MARGIN

    def sx(t):
        return x0 + MARGIN + (t / L) * (PANEL_W - 2 * MARGIN)

    def sy(v):
        return plot_top + (hi - v) / span * plot_h

    ts = np.linspace(0.0, L, len(raw))
    parts = [
        _path(np.column_stack([[sx(t) for t in ts], [sy(v) for v in raw]]),
              COLOR_RAW, 1.0, cls="raw-curve"),
        _path(np.column_stack([[sx(t) for t in ts], [sy(v) for v in smooth]]),
              COLOR_SMOOTH, 1.5, cls="smooth-curve"),
    ]
    for e in report["extrema"]:
        parts.append(f'<circle class="extremum" cx="{sx(e["t"]):.3f}" '
                     f'cy="{sy(e["value"]):.3f}" r="2.5" fill="{COLOR_SMOOTH}"/>')
    rows = [("minimal_subsets", COLOR_MINIMAL, "minimal-block", 0),
            ("maximal_subsets", COLOR_MAXIMAL, "maximal-block", 1)]
    for key, color, cls, row in rows:
        y = MARGIN + row * (BLOCK_H + 2)
        for t_a, t_b in report[key]:
            w = max(sx(t_b) - sx(t_a), 1.0)
            parts.append(f'<rect class="{cls}" x="{sx(t_a):.3f}" y="{y}" '
                         f'width="{w:.3f}" height="{BLOCK_H}" fill="{color}"/>')
    y = MARGIN + 2 * (BLOCK_H + 2)
    for f in report["folds"]:
        w = max(sx(f["t_b"]) - sx(f["t_a"]), 1.0)
        parts.append(f'<rect class="fold-block" x="{sx(f["t_a"]):.3f}" y="{y}" '
                     f'width="{w:.3f}" height="{BLOCK_H}" fill="{COLOR_FOLD}"/>')
        parts.append(f'<text x="{sx(f["t_a"]):.3f}" y="{y - 2}" '
                     f'font-size="10">{f["label"]}</text>')
    return parts


def render_report_svg(report: dict) -> str:
    """Render a serialized report (dict form) as an SVG string."""
    total_w = 2 * PANEL_W + 20
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{total_w}" '
        f'height="{PANEL_H}" viewBox="0 0 {total_w} {PANEL_H}">',
        f'<rect width="{total_w}" height="{PANEL_H}" fill="white"/>',
    ]
    parts.extend(_geometry_panel(report))
    parts.extend(_orientation_panel(report))
    parts.append("</svg>")
    return "\n".join(parts)
