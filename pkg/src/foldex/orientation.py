"""Orientation function of a polyline and its smoothed, sampled form.

The orientation function maps arc length to the heading angle of the
segment under that parameter; it is piecewise constant. For extrema
analysis it is unwrapped to a continuous signal, sampled uniformly, and
smoothed with a Fourier low-pass filter. The signal is non-periodic, so
smoothing detrends against the endpoint line and mirror-extends the
residual before the transform; this keeps endpoints fixed and avoids
wrap-around bleed.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import BadParam
from .geometry import Polyline


@dataclass(frozen=True)
class OrientationFunction:
    """Piecewise-constant heading angle vs arc length."""

    breakpoints: np.ndarray  # the cumulative lengths l_0 .. l_n
    values: np.ndarray       # one principal-value angle per segment

    @property
    def domain_length(self) -> float:
        return float(self.breakpoints[-1])


@dataclass(frozen=True)
class SampledSignal:
    """Uniform samples of a function on [0, L]."""

    values: np.ndarray
    domain_length: float

    @property
    def m(self) -> int:
        return len(self.values)

    @property
    def dt(self) -> float:
        return self.domain_length / (self.m - 1)

    def times(self) -> np.ndarray:
        return np.linspace(0.0, self.domain_length, self.m)


def orientation_function(p: Polyline) -> OrientationFunction:
    """Heading angle of every segment, atan2 principal value."""
    angles = np.arctan2(p.segments[:, 1], p.segments[:, 0])
    return OrientationFunction(breakpoints=p.cum_lengths, values=angles)


def unwrap(values) -> np.ndarray:
    """Remove 2-pi jumps so consecutive differences are at most pi."""
    return np.unwrap(np.asarray(values, dtype=float))


def sample_uniform(of: OrientationFunction, m: int) -> SampledSignal:
    """Sample the unwrapped orientation at m uniform arc lengths.

    A sample landing exactly on a breakpoint takes the next segment's
    angle (the pieces are half-open on the right); the final sample takes
    the last segment's angle.
    """
    if m < 8:
        raise BadParam(f"sample count {m} < 8")
    cont = unwrap(of.values)
    ts = np.linspace(0.0, of.domain_length, m)
    idx = np.clip(
        np.searchsorted(of.breakpoints, ts, side="right") - 1,
        0,
        len(cont) - 1,
    )
    return SampledSignal(values=cont[idx], domain_length=of.domain_length)


def smooth_lowpass(s: SampledSignal, cutoff: int) -> SampledSignal:
    """Fourier low-pass smoothing keeping harmonics 0..cutoff.

    Steps: subtract the linear trend through the two endpoint samples,
    mirror-extend the residual to even symmetry (length 2m-2), zero all
    DFT coefficients above the cutoff harmonic, invert, re-add the trend.
    """
    m = s.m
    if not 1 <= cutoff < m / 2:
        raise BadParam(f"cutoff {cutoff} outside [1, m/2) for m={m}")
    v = s.values
    k = np.arange(m)
    trend = v[0] + (v[-1] - v[0]) * k / (m - 1)
    resid = v - trend
    ext = np.concatenate([resid, resid[-2:0:-1]])  # even extension, length 2m-2
    spec = np.fft.rfft(ext)
    spec[cutoff + 1:] = 0.0
    smoothed = np.fft.irfft(spec, n=2 * m - 2)[:m] + trend
    return SampledSignal(values=smoothed, domain_length=s.domain_length)


def cutoff_from_factor(factor: float, m: int) -> int:
    """Map the user-facing smoothing factor in (0, 1] to a harmonic index."""
    if not 0.0 < factor <= 1.0:
        raise BadParam(f"smoothing factor {factor} outside (0, 1]")
    return max(1, min(int(round(factor * (m - 1))), m // 2 - 1))


def default_sample_count(p: Polyline) -> int:
    """Resolve enough samples to see every segment, at least 1024."""
    return max(1024, 4 * p.num_segments)
