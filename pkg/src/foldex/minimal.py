"""Minimal subsets: subchains with a turning angle above the threshold.

Extrema of the smoothed orientation signal are paired in the chain's
consistent chirality order (max/min for left-opening folds, min/max for
right-opening ones); each adjacent pair whose vertical span exceeds the
turning-angle threshold yields one minimal subset.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

from .errors import BadParam
from .geometry import MINIMAL, Interval, Polyline
from .orientation import (
    SampledSignal,
    cutoff_from_factor,
    default_sample_count,
    orientation_function,
    sample_uniform,
    smooth_lowpass,
)

MAX = "max"
MIN = "min"

DEFAULT_TAU = 2.0 * math.pi / 3.0


@dataclass(frozen=True)
class Extremum:
    t: float
    value: float
    kind: str  # MAX or MIN


@dataclass(frozen=True)
class Chirality:
    direction: str  # "left" or "right"
    confident: bool = True

    @property
    def pair_order(self) -> tuple[str, str]:
        return (MAX, MIN) if self.direction == "left" else (MIN, MAX)


@dataclass(frozen=True)
class MinimalParams:
    tau: float = DEFAULT_TAU
    smooth_factor: float = 0.05
    samples: int = 0  # 0 = auto from segment count
    eps_flat: float = 1e-6

    def __post_init__(self):
        if not 0.0 < self.tau < 2.0 * math.pi:
            raise BadParam(f"tau {self.tau} outside (0, 2*pi)")
        if not 0.0 < self.smooth_factor <= 1.0:
            raise BadParam(f"smooth factor {self.smooth_factor} outside (0, 1]")
        if self.samples and self.samples < 8:
            raise BadParam(f"sample count {self.samples} < 8")


@dataclass(frozen=True)
class OrientationAnalysis:
    """Everything the minimal stage computes, kept for reporting."""

    raw: SampledSignal
    smoothed: SampledSignal
    extrema: list[Extremum]
    chirality: Chirality
    intervals: list[Interval] = field(default_factory=list)


def find_local_extrema(s: SampledSignal, eps_flat: float = 1e-6) -> list[Extremum]:
    """Interior extrema of a sampled signal, plateaus collapsed.

    A run of samples whose steps stay within eps_flat counts as one
    plateau; if the signal rises into it and falls out (or vice versa)
    it contributes a single extremum at the plateau's midpoint. Signal
    endpoints are never extrema. Output is sorted by t with alternating
    kinds.
    """
    v = s.values
    d = v[1:] - v[:-1]
    signs = [0 if abs(x) <= eps_flat else (1 if x > 0 else -1) for x in d]
    out: list[Extremum] = []
    prev_sign = 0
    prev_idx = -1
    dt = s.dt
    for k, sk in enumerate(signs):
        if sk == 0:
            continue
        if prev_sign != 0 and sk != prev_sign:
            i0, i1 = prev_idx + 1, k
            t = 0.5 * (i0 + i1) * dt
            value = float(v[i0:i1 + 1].mean())
            kind = MAX if prev_sign > 0 else MIN
            out.append(Extremum(t=t, value=value, kind=kind))
        prev_sign, prev_idx = sk, k
    return out


def detect_chirality(extrema: list[Extremum], tau: float) -> Chirality:
    """Majority vote over adjacent extrema pairs with span above tau.

    Ties or the absence of qualifying pairs default to "right" with the
    confidence flag cleared; the caller surfaces that in the report
    instead of erroring, so the user can tune.
    """
    left = right = 0
    for a, b in zip(extrema, extrema[1:]):
        if abs(a.value - b.value) <= tau:
            continue
        if a.kind == MAX and b.kind == MIN:
            left += 1
        elif a.kind == MIN and b.kind == MAX:
            right += 1
    if left > right:
        return Chirality("left", confident=True)
    if right > left:
        return Chirality("right", confident=True)
    return Chirality("right", confident=False)


def pair_extrema(extrema: list[Extremum], chirality: Chirality, tau: float) -> list[Interval]:
    """Greedy left-to-right pairing of adjacent extrema in chirality order."""
    first, second = chirality.pair_order
    out: list[Interval] = []
    i = 0
    while i + 1 < len(extrema):
        a, b = extrema[i], extrema[i + 1]
        if a.kind == first and b.kind == second and abs(a.value - b.value) > tau:
            out.append(Interval(a.t, b.t, MINIMAL))
            i += 2
        else:
            i += 1
    return out


def analyze_orientation(p: Polyline, params: MinimalParams) -> OrientationAnalysis:
    """Run the full minimal-subset pipeline, keeping intermediates."""
    m = params.samples or default_sample_count(p)
    raw = sample_uniform(orientation_function(p), m)
    smoothed = smooth_lowpass(raw, cutoff_from_factor(params.smooth_factor, m))
    extrema = find_local_extrema(smoothed, params.eps_flat)
    chirality = detect_chirality(extrema, params.tau)
    intervals = pair_extrema(extrema, chirality, params.tau)
    return OrientationAnalysis(raw, smoothed, extrema, chirality, intervals)


def minimal_subsets(p: Polyline, params: MinimalParams) -> list[Interval]:
    """Minimal subsets of p: disjoint, sorted arc-length intervals."""
    return analyze_orientation(p, params).intervals
