"""Maximal subsets: narrow-baseline subchains via offset self-intersections.

The polyline is displaced by delta along averaged vertex normals; where
the offset line crosses itself, two points of the original line are less
than 2*delta apart. Each crossing back-projects to an arc-length interval
on the base line; overlapping intervals are clustered, the longest
qualifying interval of each cluster survives, and a significance ratio
drops intervals that are not much longer than their baseline chord.
"""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass

import numpy as np

from .errors import BadParam
from .geometry import MAXIMAL, Interval, Polyline
from .minimal import Chirality, MinimalParams, analyze_orientation

LEFT = "left"
RIGHT = "right"
AUTO = "auto"


@dataclass(frozen=True)
class MaximalParams:
    delta: float
    side: str = AUTO
    rho: float = 3.0
    chord_slack: float = 0.05

    def __post_init__(self):
        if self.delta <= 0.0:
            raise BadParam(f"delta {self.delta} must be > 0")
        if self.rho < 1.0:
            raise BadParam(f"rho {self.rho} must be >= 1")
        if self.side not in (LEFT, RIGHT, AUTO):
            raise BadParam(f"side {self.side!r} not one of left/right/auto")


@dataclass(frozen=True)
class OffsetPolyline:
    base: Polyline
    delta: float
    side: str
    vertices: np.ndarray  # one offset point per base vertex


@dataclass(frozen=True)
class SelfIntersection:
    seg_i: int
    seg_j: int  # j >= i + 2
    u_i: float
    u_j: float
    point: tuple[float, float]


def _segment_normals(p: Polyline, side: str) -> np.ndarray:
    d = p.segments / p.seg_lengths[:, None]
    n = np.column_stack([-d[:, 1], d[:, 0]])  # left normal
    if side == RIGHT:
        n = -n
    return n


def vertex_normals(p: Polyline, side: str, weights: str = "length") -> np.ndarray:
    """Unit offset direction per vertex on the chosen side.

    Interior vertices average the two adjacent segment normals, weighted
    by segment length by default ("equal" gives the plain bisector).
    When the adjacent normals nearly cancel (hairpin vertex) the fallback
    is the outward turn bisector, which points past the tip.
    """
    if side not in (LEFT, RIGHT):
        raise BadParam(f"side {side!r} must be left or right")
    n = _segment_normals(p, side)
    lens = p.seg_lengths
    d = p.segments / lens[:, None]
    out = np.empty((len(p), 2))
    out[0] = n[0]
    out[-1] = n[-1]
    for i in range(1, len(p) - 1):
        if weights == "length":
            s = lens[i - 1] * n[i - 1] + lens[i] * n[i]
        else:
            s = n[i - 1] + n[i]
        norm = np.hypot(s[0], s[1])
        if norm < 1e-9 * (lens[i - 1] + lens[i] if weights == "length" else 2.0):
            s = d[i - 1] - d[i]
            norm = np.hypot(s[0], s[1])
            if norm < 1e-12:
                s, norm = n[i - 1], 1.0
        out[i] = s / norm
    return out


def offset_polyline(p: Polyline, delta: float, side: str,
                    weights: str = "length") -> OffsetPolyline:
    """Vertex-wise offset of p by delta along averaged normals.

    Loops are deliberately left untrimmed: self-intersections of the
    offset line are the detection signal.
    """
    if delta <= 0.0:
        raise BadParam(f"delta {delta} must be > 0")
    verts = p.vertices + delta * vertex_normals(p, side, weights)
    verts.setflags(write=False)
    return OffsetPolyline(base=p, delta=delta, side=side, vertices=verts)


def _candidate_pairs(A: np.ndarray, B: np.ndarray) -> np.ndarray:
    """Broad phase: non-adjacent segment pairs with overlapping grid cells."""
    nseg = len(A)
    lens = np.hypot(*(B - A).T)
    h = float(np.median(lens))
    if h <= 0.0:
        h = max(float(lens.max()), 1e-12)
    lo = np.minimum(A, B)
    hi = np.maximum(A, B)
    ix0 = np.floor(lo[:, 0] / h).astype(np.int64)
    iy0 = np.floor(lo[:, 1] / h).astype(np.int64)
    ix1 = np.floor(hi[:, 0] / h).astype(np.int64)
    iy1 = np.floor(hi[:, 1] / h).astype(np.int64)
    grid: dict[tuple[int, int], list[int]] = defaultdict(list)
    for k in range(nseg):
        for cx in range(ix0[k], ix1[k] + 1):
            for cy in range(iy0[k], iy1[k] + 1):
                grid[(cx, cy)].append(k)
    pairs: set[tuple[int, int]] = set()
    for cell in grid.values():
        if len(cell) < 2:
            continue
        for a in range(len(cell)):
            ka = cell[a]
            for b in range(a + 1, len(cell)):
                kb = cell[b]
                if abs(ka - kb) >= 2:
                    pairs.add((min(ka, kb), max(ka, kb)))
    if not pairs:
        return np.empty((0, 2), dtype=np.int64)
    return np.array(sorted(pairs), dtype=np.int64)


def _collinear_overlap(p, r, q, s, rr):
    """Midpoint of the overlap of two collinear segments, or None."""
    t0 = float(np.dot(q - p, r) / rr)
    t1 = float(np.dot(q + s - p, r) / rr)
    lo, hi = max(0.0, min(t0, t1)), min(1.0, max(t0, t1))
    if hi <= lo:
        return None
    ui = 0.5 * (lo + hi)
    if abs(t1 - t0) < 1e-300:
        return None
    uj = (ui - t0) / (t1 - t0)
    if not 0.0 <= uj <= 1.0:
        return None
    pt = p + ui * r
    return ui, uj, (float(pt[0]), float(pt[1]))


def self_intersections(op: OffsetPolyline) -> list[SelfIntersection]:
    """All crossings between non-adjacent segments of the offset line.

    Broad phase is a uniform grid with cell size about the median
    segment length; the narrow phase is the exact parametric solve.
    Collinear overlapping pairs contribute their overlap midpoint once.
    Results are sorted by (seg_i, u_i, seg_j).
    """
    V = op.vertices
    A, B = V[:-1], V[1:]
    pairs = _candidate_pairs(A, B)
    out: list[SelfIntersection] = []
    if len(pairs) == 0:
        return out
    i, j = pairs[:, 0], pairs[:, 1]
    p = A[i]
    r = B[i] - A[i]
    q = A[j]
    s = B[j] - A[j]
    qp = q - p
    denom = r[:, 0] * s[:, 1] - r[:, 1] * s[:, 0]
    scale = np.hypot(r[:, 0], r[:, 1]) * np.hypot(s[:, 0], s[:, 1])
    parallel = np.abs(denom) <= 1e-14 * scale
    with np.errstate(divide="ignore", invalid="ignore"):
        ui = (qp[:, 0] * s[:, 1] - qp[:, 1] * s[:, 0]) / denom
        uj = (qp[:, 0] * r[:, 1] - qp[:, 1] * r[:, 0]) / denom
    eps_u = 1e-12
    hit = (~parallel) & (ui >= -eps_u) & (ui <= 1 + eps_u) & (uj >= -eps_u) & (uj <= 1 + eps_u)
    for k in np.flatnonzero(hit):
        u1 = float(min(max(ui[k], 0.0), 1.0))
        u2 = float(min(max(uj[k], 0.0), 1.0))
        pt = p[k] + u1 * r[k]
        out.append(SelfIntersection(int(i[k]), int(j[k]), u1, u2,
                                    (float(pt[0]), float(pt[1]))))
    # collinear overlaps: rare, handled pairwise
    cross_qp_r = qp[:, 0] * r[:, 1] - qp[:, 1] * r[:, 0]
    collin = parallel & (np.abs(cross_qp_r) <= 1e-12 * scale)
    for k in np.flatnonzero(collin):
        rr = float(np.dot(r[k], r[k]))
        if rr == 0.0:
            continue
        res = _collinear_overlap(p[k], r[k], q[k], s[k], rr)
        if res is not None:
            out.append(SelfIntersection(int(i[k]), int(j[k]), res[0], res[1], res[2]))
    out.sort(key=lambda x: (x.seg_i, x.u_i, x.seg_j, x.u_j))
    return out


def back_project(op: OffsetPolyline, x: SelfIntersection) -> Interval:
    """Map an offset-line crossing to an arc-length interval on the base.

    Offset segment k corresponds one-to-one with base segment k, so the
    crossing's fractional positions transfer directly.
    """
    l = op.base.cum_lengths
    ta = float(l[x.seg_i] + x.u_i * (l[x.seg_i + 1] - l[x.seg_i]))
    tb = float(l[x.seg_j] + x.u_j * (l[x.seg_j + 1] - l[x.seg_j]))
    if tb < ta:
        ta, tb = tb, ta
    return Interval(ta, tb, MAXIMAL)


def select_maximal(intervals: list[Interval], p: Polyline,
                   params: MaximalParams) -> list[Interval]:
    """Cluster overlapping candidates, keep one survivor per cluster.

    Within a cluster the survivor is the longest interval whose endpoint
    chord stays within 2*delta (plus slack); clusters without a
    qualifying member are dropped, and survivors shorter than rho times
    their chord are discarded as insignificant.
    """
    if not intervals:
        return []
    ivs = sorted(intervals, key=lambda iv: (iv.t_a, iv.t_b))
    clusters: list[list[Interval]] = [[ivs[0]]]
    cur_end = ivs[0].t_b
    for iv in ivs[1:]:
        if iv.t_a < cur_end:
            clusters[-1].append(iv)
        else:
            clusters.append([iv])
        cur_end = max(cur_end, iv.t_b)
    chord_max = 2.0 * params.delta * (1.0 + params.chord_slack)
    out: list[Interval] = []
    for cluster in clusters:
        best = None
        for iv in cluster:
            if iv.length <= 0.0:
                continue
            if p.chord_distance(iv) > chord_max:
                continue
            if best is None or iv.length > best.length:
                best = iv
        if best is None:
            continue
        if best.length < params.rho * p.chord_distance(best):
            continue
        out.append(best)
    return out


def resolve_side(side: str, chirality: Chirality) -> str:
    """Concrete offset side, growing the offset into the folds' opening.

    Min/max extrema pairs correspond to folds whose interior gap lies on
    the left of travel, and vice versa.
    """
    if side != AUTO:
        return side
    return LEFT if chirality.direction == RIGHT else RIGHT


def maximal_subsets(p: Polyline, params: MaximalParams,
                    chirality: Chirality | None = None) -> list[Interval]:
    """Full maximal-subset pipeline: offset, intersect, back-project, select."""
    side = params.side
    if side == AUTO:
        if chirality is None:
            chirality = analyze_orientation(p, MinimalParams()).chirality
        side = resolve_side(AUTO, chirality)
    op = offset_polyline(p, params.delta, side)
    candidates = [back_project(op, x) for x in self_intersections(op)]
    return select_maximal(candidates, p, params)
