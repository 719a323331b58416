"""Arc-length parameterized polylines and intervals on them.

A polyline is an ordered vertex sequence; every quantity downstream
(orientation samples, detected intervals, back-projections) lives in its
arc-length space [0, L], never in vertex-index space.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DegenerateInput, OutOfRange

MINIMAL = "minimal"
MAXIMAL = "maximal"
FOLD = "fold"


@dataclass(frozen=True)
class Point2:
    x: float
    y: float

    def as_array(self) -> np.ndarray:
        return np.array([self.x, self.y], dtype=float)


@dataclass(frozen=True)
class Interval:
    """Closed arc-length range [t_a, t_b] on some polyline."""

    t_a: float
    t_b: float
    kind: str = MINIMAL

    @property
    def length(self) -> float:
        return self.t_b - self.t_a

    def overlap_length(self, other: "Interval") -> float:
        return min(self.t_b, other.t_b) - max(self.t_a, other.t_a)

    def contains(self, other: "Interval") -> bool:
        return self.t_a <= other.t_a and other.t_b <= self.t_b


class Polyline:
    """Immutable piecewise-linear curve with cached segment data.

    Use :func:`build_polyline` to construct from raw points; the
    constructor assumes already-cleaned vertices.
    """

    def __init__(self, vertices: np.ndarray):
        vertices = np.asarray(vertices, dtype=float)
        if vertices.ndim != 2 or vertices.shape[1] != 2 or len(vertices) < 2:
            raise DegenerateInput("need at least 2 vertices of dimension 2")
        if not np.all(np.isfinite(vertices)):
            raise DegenerateInput("non-finite vertex coordinates")
        self._vertices = vertices
        self._segments = vertices[1:] - vertices[:-1]
        self._seg_lengths = np.hypot(self._segments[:, 0], self._segments[:, 1])
        if np.any(self._seg_lengths == 0.0):
            raise DegenerateInput("zero-length segment; clean duplicates first")
        self._cum = np.concatenate([[0.0], np.cumsum(self._seg_lengths)])
        for a in (self._vertices, self._segments, self._seg_lengths, self._cum):
            a.setflags(write=False)

    @property
    def vertices(self) -> np.ndarray:
        return self._vertices

    @property
    def segments(self) -> np.ndarray:
        return self._segments

    @property
    def seg_lengths(self) -> np.ndarray:
        return self._seg_lengths

    @property
    def cum_lengths(self) -> np.ndarray:
        return self._cum

    @property
    def length(self) -> float:
        return float(self._cum[-1])

    @property
    def num_segments(self) -> int:
        return len(self._segments)

    def __len__(self) -> int:
        return len(self._vertices)

    def locate(self, t: float) -> tuple[int, float]:
        """Return (segment index, fraction in [0,1]) for arc length t.

        A breakpoint t = l_i maps to (i, 0) except t = L which maps to
        (n-1, 1) so the parameterization is total on [0, L].
        """
        if not 0.0 <= t <= self.length:
            raise OutOfRange(f"t={t} outside [0, {self.length}]")
        i = int(np.searchsorted(self._cum, t, side="right")) - 1
        i = min(max(i, 0), self.num_segments - 1)
        u = (t - self._cum[i]) / self._seg_lengths[i]
        return i, float(u)

    def point_at(self, t: float) -> Point2:
        """Evaluate the arc-length parameterization at t."""
        i, u = self.locate(t)
        p = self._vertices[i] + u * self._segments[i]
        return Point2(float(p[0]), float(p[1]))

    def points_at(self, ts: np.ndarray) -> np.ndarray:
        """Vectorized point_at; returns an (n, 2) array."""
        ts = np.asarray(ts, dtype=float)
        if np.any(ts < 0.0) or np.any(ts > self.length):
            raise OutOfRange("arc length outside [0, L]")
        idx = np.clip(
            np.searchsorted(self._cum, ts, side="right") - 1,
            0,
            self.num_segments - 1,
        )
        u = (ts - self._cum[idx]) / self._seg_lengths[idx]
        return self._vertices[idx] + u[:, None] * self._segments[idx]

    def subchain(self, iv: Interval) -> "Polyline":
        """Extract the subchain covered by iv as a new polyline."""
        self._check_interval(iv)
        a = self.point_at(iv.t_a).as_array()
        b = self.point_at(iv.t_b).as_array()
        inside = (self._cum > iv.t_a) & (self._cum < iv.t_b)
        pts = np.vstack([a, self._vertices[inside], b])
        return build_polyline(pts, eps_geom=1e-12 * max(iv.length, 1.0))

    def chord_distance(self, iv: Interval) -> float:
        """Euclidean distance between the interval's two endpoint positions."""
        self._check_interval(iv)
        a = self.point_at(iv.t_a)
        b = self.point_at(iv.t_b)
        return float(np.hypot(b.x - a.x, b.y - a.y))

    def _check_interval(self, iv: Interval) -> None:
        if not (0.0 <= iv.t_a < iv.t_b <= self.length):
            raise OutOfRange(f"interval [{iv.t_a}, {iv.t_b}] invalid on [0, {self.length}]")


def build_polyline(points, eps_geom: float | None = None) -> Polyline:
    """Build a polyline from raw points, collapsing near-duplicate vertices.

    eps_geom defaults to 1e-9 of the raw total length. Raises
    DegenerateInput if fewer than 2 distinct points survive cleaning.
    """
    if isinstance(points, (list, tuple)) and points and isinstance(points[0], Point2):
        points = [[p.x, p.y] for p in points]
    pts = np.asarray(points, dtype=float)
    if pts.ndim != 2 or pts.shape[1] != 2 or len(pts) < 2:
        raise DegenerateInput("need at least 2 points")
    if not np.all(np.isfinite(pts)):
        raise DegenerateInput("non-finite input coordinates")
    if eps_geom is None:
        raw_len = float(np.sum(np.hypot(*np.diff(pts, axis=0).T)))
        eps_geom = 1e-9 * raw_len
    kept = [pts[0]]
    for p in pts[1:]:
        if np.hypot(p[0] - kept[-1][0], p[1] - kept[-1][1]) > eps_geom:
            kept.append(p)
    if len(kept) < 2:
        raise DegenerateInput("fewer than 2 distinct points after cleaning")
    return Polyline(np.array(kept))
