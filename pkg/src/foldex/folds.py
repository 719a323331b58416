"""Fold detection: combine minimal and maximal subsets, measure folds.

A maximal subset becomes a fold when a minimal subset falls inside it
(strict mode) or overlaps it (default). Maximal subsets alone
overestimate; minimal subsets alone have no notion of a baseline; only
the combination marks actual folds.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import BadParam
from .geometry import FOLD, Interval, Polyline
from .maximal import (
    AUTO,
    MaximalParams,
    OffsetPolyline,
    back_project,
    offset_polyline,
    resolve_side,
    select_maximal,
    self_intersections,
)
from .minimal import Chirality, MinimalParams, OrientationAnalysis, analyze_orientation

OVERLAP = "overlap"
STRICT = "strict"


@dataclass(frozen=True)
class DetectionParams:
    minimal: MinimalParams
    maximal: MaximalParams
    containment_mode: str = OVERLAP

    def __post_init__(self):
        if self.containment_mode not in (OVERLAP, STRICT):
            raise BadParam(f"containment mode {self.containment_mode!r}")


@dataclass(frozen=True)
class Fold:
    interval: Interval
    minimal_children: list[Interval]
    width: float
    depth: float
    arc_length: float
    label: int


@dataclass(frozen=True)
class FoldReport:
    """Everything one detection run produced, ready for display."""

    polyline: Polyline
    params: DetectionParams
    analysis: OrientationAnalysis
    offset: OffsetPolyline
    minimal_subsets: list[Interval]
    maximal_subsets: list[Interval]
    folds: list[Fold] = field(default_factory=list)

    @property
    def chirality(self) -> Chirality:
        return self.analysis.chirality


def fold_metrics(p: Polyline, interval: Interval) -> tuple[float, float]:
    """Width and depth of a fold interval.

    Width is the baseline chord between the interval's endpoints; depth
    is the maximum perpendicular distance from that chord to the
    subchain. A near-closed fold (chord ~ 0) measures depth from the
    mouth point instead.
    """
    sub = p.subchain(interval)
    a = np.asarray(p.points_at(np.array([interval.t_a]))[0])
    b = np.asarray(p.points_at(np.array([interval.t_b]))[0])
    chord = b - a
    width = float(np.hypot(chord[0], chord[1]))
    rel = sub.vertices - a
    if width < 1e-9 * interval.length:
        depth = float(np.max(np.hypot(rel[:, 0], rel[:, 1])))
    else:
        depth = float(np.max(np.abs(rel[:, 0] * chord[1] - rel[:, 1] * chord[0])) / width)
    return width, depth


def detect_folds(p: Polyline, params: DetectionParams) -> FoldReport:
    """Run both subset pipelines once and combine them into folds."""
    analysis = analyze_orientation(p, params.minimal)
    side = resolve_side(params.maximal.side, analysis.chirality)
    op = offset_polyline(p, params.maximal.delta, side)
    candidates = [back_project(op, x) for x in self_intersections(op)]
    maximal = select_maximal(candidates, p, params.maximal)
    minimal = analysis.intervals

    folds: list[Fold] = []
    for iv in maximal:
        if params.containment_mode == STRICT:
            children = [m for m in minimal if iv.contains(m)]
        else:
            children = [m for m in minimal if iv.overlap_length(m) > 0.0]
        if not children:
            continue
        width, depth = fold_metrics(p, iv)
        folds.append(Fold(
            interval=Interval(iv.t_a, iv.t_b, FOLD),
            minimal_children=children,
            width=width,
            depth=depth,
            arc_length=iv.length,
            label=len(folds) + 1,
        ))
    return FoldReport(
        polyline=p,
        params=params,
        analysis=analysis,
        offset=op,
        minimal_subsets=minimal,
        maximal_subsets=maximal,
        folds=folds,
    )
