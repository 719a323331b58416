"""Synthetic membrane fixtures with known ground truth.

Real microscopy traces come without fold annotations, so tests and the
acceptance suite run on generated combs (U-shaped teeth on a baseline)
and bulges (wide smooth bumps that must NOT count as folds). The
generator records mouth positions, tip, width, depth, and turning angle
per tooth; positions are reported in the emitted polyline's own
arc-length space so they stay valid under vertex jitter.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import BadParam
from .geometry import Interval, Polyline, build_polyline


@dataclass(frozen=True)
class CombSpec:
    teeth: int = 3
    tooth_width: float = 1.0
    tooth_depth: float = 2.0
    spacing: float = 2.0
    rounding: float = 0.45  # near-semicircular tooth bottoms keep the
    # orientation rise through the tip monotone
    point_spacing: float = 0.15
    noise: float = 0.0
    seed: int = 0
    chirality: str = "right"  # right: teeth dig toward -y

    def __post_init__(self):
        if self.teeth < 0:
            raise BadParam("tooth count must be >= 0")
        if min(self.tooth_width, self.tooth_depth, self.spacing) <= 0:
            raise BadParam("tooth width/depth/spacing must be > 0")
        if not 0 <= self.rounding < min(self.tooth_width, self.tooth_depth) / 2:
            raise BadParam("rounding must be < half the tooth width and depth")
        if self.noise >= self.tooth_width / 4:
            raise BadParam("noise amplitude must be < tooth_width / 4")
        if self.point_spacing <= 0:
            raise BadParam("point spacing must be > 0")
        if self.chirality not in ("left", "right"):
            raise BadParam("chirality must be left or right")


@dataclass(frozen=True)
class ToothTruth:
    mouth: Interval
    tip_t: float
    width: float
    depth: float
    turning: float


@dataclass(frozen=True)
class GroundTruth:
    teeth: list[ToothTruth] = field(default_factory=list)

    @property
    def fold_count(self) -> int:
        return len(self.teeth)


class _PathBuilder:
    """Emit densified points along lines and arcs, remembering landmarks."""

    def __init__(self, start, spacing: float):
        self.spacing = spacing
        self.pts: list[tuple[float, float]] = [tuple(start)]
        self.marks: dict[str, int] = {}

    def mark(self, name: str) -> None:
        self.marks[name] = len(self.pts) - 1

    def line_to(self, end) -> None:
        x0, y0 = self.pts[-1]
        dx, dy = end[0] - x0, end[1] - y0
        dist = math.hypot(dx, dy)
        if dist == 0.0:
            return
        n = max(1, int(math.ceil(dist / self.spacing)))
        for k in range(1, n + 1):
            self.pts.append((x0 + dx * k / n, y0 + dy * k / n))

    def arc(self, center, radius: float, a0: float, sweep: float,
            mid_mark: str | None = None) -> None:
        arc_len = abs(sweep) * radius
        n = max(2, int(math.ceil(arc_len / self.spacing)))
        mid = n // 2
        for k in range(1, n + 1):
            a = a0 + sweep * k / n
            self.pts.append((center[0] + radius * math.cos(a),
                             center[1] + radius * math.sin(a)))
            if mid_mark is not None and k == mid:
                self.marks[mid_mark] = len(self.pts) - 1


def _corner(b: _PathBuilder, corner, d_in, d_out, radius: float,
            mid_mark: str | None = None) -> None:
    """Round the 90-degree corner between unit directions d_in and d_out."""
    cross = d_in[0] * d_out[1] - d_in[1] * d_out[0]
    t1 = (corner[0] - d_in[0] * radius, corner[1] - d_in[1] * radius)
    if radius == 0.0:
        b.line_to(corner)
        if mid_mark:
            b.mark(mid_mark)
        return
    b.line_to(t1)
    sign = 1.0 if cross > 0 else -1.0
    normal = (-d_in[1] * sign, d_in[0] * sign)
    center = (t1[0] + normal[0] * radius, t1[1] + normal[1] * radius)
    a0 = math.atan2(t1[1] - center[1], t1[0] - center[0])
    b.arc(center, radius, a0, sign * math.pi / 2, mid_mark)


def generate_comb(spec: CombSpec) -> tuple[Polyline, GroundTruth]:
    """Comb fixture: baseline along +x with k rounded U-teeth.

    Deterministic for a fixed seed. Ground-truth mouth/tip positions are
    arc lengths of marked construction points on the emitted polyline.
    """
    w, d, g, r = spec.tooth_width, spec.tooth_depth, spec.spacing, spec.rounding
    sgn = -1.0 if spec.chirality == "right" else 1.0

    b = _PathBuilder((0.0, 0.0), spec.point_spacing)
    x = g
    for k in range(spec.teeth):
        x0 = x
        # mouth entry shoulder, dive to the tip side
        _corner(b, (x0, 0.0), (1.0, 0.0), (0.0, sgn), r, mid_mark=f"mouth_a_{k}")
        _corner(b, (x0, sgn * d), (0.0, sgn), (1.0, 0.0), r)
        b.line_to((x0 + w / 2, sgn * d))
        b.mark(f"tip_{k}")
        _corner(b, (x0 + w, sgn * d), (1.0, 0.0), (0.0, -sgn), r)
        _corner(b, (x0 + w, 0.0), (0.0, -sgn), (1.0, 0.0), r, mid_mark=f"mouth_b_{k}")
        x = x0 + w + g
    b.line_to((x, 0.0))

    pts = np.array(b.pts)
    if spec.noise > 0.0:
        # bandlimited jitter: segmentation noise wanders smoothly along the
        # contour instead of flipping sign at every vertex, so white noise
        # is low-passed along the arc and rescaled to the requested level
        rng = np.random.default_rng(spec.seed)
        white = rng.normal(size=pts.shape)
        freq = np.fft.rfft(white, axis=0)
        wavelength_min = 10.0 * spec.point_spacing
        cycles = np.fft.rfftfreq(len(pts), d=spec.point_spacing)
        freq[cycles > 1.0 / wavelength_min] = 0.0
        jitter = np.fft.irfft(freq, n=len(pts), axis=0)
        jitter *= spec.noise / max(float(jitter.std()), 1e-12)
        jitter[0] = jitter[-1] = 0.0
        pts = pts + jitter

    poly = build_polyline(pts)
    # marked indices survive cleaning only if no duplicates were dropped;
    # the builder never emits coincident points, so lengths must agree
    assert len(poly) == len(pts)
    cum = poly.cum_lengths

    teeth: list[ToothTruth] = []
    for k in range(spec.teeth):
        ta = float(cum[b.marks[f"mouth_a_{k}"]])
        tb = float(cum[b.marks[f"mouth_b_{k}"]])
        tip = float(cum[b.marks[f"tip_{k}"]])
        turning = math.pi
        if turning <= 2.0 * math.pi / 3.0:
            raise BadParam("tooth turning does not exceed the default threshold")
        teeth.append(ToothTruth(
            mouth=Interval(ta, tb, "fold"),
            tip_t=tip,
            width=w,
            depth=d,
            turning=turning,
        ))
    for a, bb in zip(teeth, teeth[1:]):
        assert a.mouth.t_b <= bb.mouth.t_a
    return poly, GroundTruth(teeth=teeth)


def generate_bulge(mouth_width: float, depth: float,
                   point_spacing: float = 0.1, lead: float | None = None,
                   side: str = "right") -> tuple[Polyline, GroundTruth]:
    """Wide smooth bump: a negative fixture that must yield zero folds.

    Raised-cosine profile, so the walls never come closer than the mouth
    width and there is no narrow baseline for the offset test to find.
    """
    if mouth_width <= 0 or depth < 0 or point_spacing <= 0:
        raise BadParam("mouth width and point spacing must be > 0, depth >= 0")
    if lead is None:
        lead = mouth_width
    sgn = -1.0 if side == "right" else 1.0
    n_bump = max(8, int(math.ceil(4 * mouth_width / point_spacing)))
    xs = np.concatenate([
        np.arange(0.0, lead, point_spacing),
        np.linspace(lead, lead + mouth_width, n_bump),
        np.arange(lead + mouth_width + point_spacing,
                  2 * lead + mouth_width + point_spacing / 2, point_spacing),
    ])
    ys = np.zeros_like(xs)
    in_bump = (xs >= lead) & (xs <= lead + mouth_width)
    phase = (xs[in_bump] - lead) / mouth_width
    ys[in_bump] = sgn * depth * 0.5 * (1.0 - np.cos(2.0 * math.pi * phase))
    poly = build_polyline(np.column_stack([xs, ys]))
    return poly, GroundTruth(teeth=[])
