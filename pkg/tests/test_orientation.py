import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from foldex.errors import BadParam
from foldex.geometry import build_polyline
from foldex.orientation import (
    SampledSignal,
    cutoff_from_factor,
    orientation_function,
    sample_uniform,
    smooth_lowpass,
    unwrap,
)


def staircase():
    return build_polyline([(0, 0), (1, 0), (1, 1), (2, 1), (2, 2)])


class TestOrientationFunction:
    def test_horizontal_segment(self):
        of = orientation_function(build_polyline([(0, 0), (1, 0)]))
        assert of.values[0] == pytest.approx(0.0)

    def test_vertical_segment(self):
        of = orientation_function(build_polyline([(0, 0), (0, 1)]))
        assert of.values[0] == pytest.approx(math.pi / 2)

    def test_staircase_alternation(self):
        of = orientation_function(staircase())
        assert np.allclose(of.values, [0, math.pi / 2, 0, math.pi / 2])

    def test_one_value_per_segment(self):
        p = staircase()
        of = orientation_function(p)
        assert len(of.values) == p.num_segments
        assert np.allclose(of.breakpoints, p.cum_lengths)


class TestUnwrap:
    def test_jump_corrected(self):
        got = unwrap([0, math.pi / 2, math.pi, -math.pi / 2])
        assert np.allclose(got, [0, math.pi / 2, math.pi, 3 * math.pi / 2])

    def test_constant_unchanged(self):
        assert np.allclose(unwrap([1.0, 1.0, 1.0]), [1.0, 1.0, 1.0])

    @settings(max_examples=100, deadline=None)
    @given(st.lists(st.floats(-3.1, 3.1), min_size=1, max_size=40))
    def test_congruent_mod_2pi_and_small_steps(self, angles):
        out = unwrap(angles)
        assert out[0] == angles[0]
        diffs = np.abs((out - np.asarray(angles) + math.pi) % (2 * math.pi) - math.pi)
        assert np.all(diffs < 1e-9)
        assert np.all(np.abs(np.diff(out)) <= math.pi + 1e-12)


class TestSampleUniform:
    def test_single_segment_constant(self):
        of = orientation_function(build_polyline([(0, 0), (2, 1)]))
        s = sample_uniform(of, 32)
        assert np.allclose(s.values, math.atan2(1, 2))
        assert s.m == 32

    def test_breakpoint_takes_next_segment(self):
        of = orientation_function(build_polyline([(0, 0), (1, 0), (1, 1)]))
        s = sample_uniform(of, 9)
        assert np.allclose(s.values[:4], 0.0)
        assert np.allclose(s.values[4:], math.pi / 2)

    def test_m_too_small(self):
        of = orientation_function(build_polyline([(0, 0), (1, 0)]))
        with pytest.raises(BadParam):
            sample_uniform(of, 7)

    def test_matches_linear_scan_oracle(self):
        rng = np.random.default_rng(23)
        pts = rng.uniform(-5, 5, size=(15, 2))
        p = build_polyline(pts, eps_geom=0.0)
        of = orientation_function(p)
        m = 101
        s = sample_uniform(of, m)
        # oracle: find segment by scan, unwrap incrementally
        raw = np.arctan2(p.segments[:, 1], p.segments[:, 0])
        cont = [raw[0]]
        for v in raw[1:]:
            prev = cont[-1]
            dv = v - prev
            while dv > math.pi:
                dv -= 2 * math.pi
            while dv < -math.pi:
                dv += 2 * math.pi
            cont.append(prev + dv)
        for k in range(m):
            t = k * p.length / (m - 1)
            i = p.num_segments - 1
            for j in range(p.num_segments):
                if p.cum_lengths[j] <= t < p.cum_lengths[j + 1]:
                    i = j
                    break
            assert s.values[k] == pytest.approx(cont[i], abs=1e-12)


class TestSmoothLowpass:
    def test_constant_preserved(self):
        s = SampledSignal(np.full(64, 2.5), 10.0)
        out = smooth_lowpass(s, 5)
        assert np.allclose(out.values, 2.5, atol=1e-9)

    def test_linear_ramp_preserved(self):
        s = SampledSignal(np.linspace(-1, 3, 128), 4.0)
        out = smooth_lowpass(s, 3)
        assert np.allclose(out.values, s.values, atol=1e-9)

    def test_bandlimited_composite_recovered(self):
        # residual after endpoint detrend is a pure even harmonic of the
        # mirrored signal, so it must pass through the filter unchanged
        m = 256
        k = np.arange(m)
        ramp = 0.5 + 0.02 * k
        wave = np.cos(2 * math.pi * 4 * k / (2 * m - 2))
        s = SampledSignal(ramp + wave, 1.0)
        out = smooth_lowpass(s, 8)
        assert np.allclose(out.values, s.values, atol=1e-6)

    def test_cutoff_1_strips_high_frequency(self):
        m = 256
        k = np.arange(m)
        ramp = 0.5 + 0.02 * k
        wave = np.cos(2 * math.pi * 4 * k / (2 * m - 2))
        s = SampledSignal(ramp + wave, 1.0)
        out = smooth_lowpass(s, 1)
        in_energy = np.sum((s.values - ramp) ** 2)
        out_energy = np.sum((out.values - ramp) ** 2)
        assert out_energy <= 0.01 * in_energy

    def test_bad_cutoff(self):
        s = SampledSignal(np.zeros(32), 1.0)
        with pytest.raises(BadParam):
            smooth_lowpass(s, 0)
        with pytest.raises(BadParam):
            smooth_lowpass(s, 16)

    def test_idempotent_projection_bandlimited(self):
        # residual built from mirrored harmonics that vanish at both
        # endpoints: the re-trend is then a fixed point and the spectral
        # projection makes repeated smoothing exact
        m = 200
        k = np.arange(m)
        theta = 2 * math.pi * k / (2 * m - 2)
        resid = np.cos(2 * theta) - np.cos(4 * theta)
        s = SampledSignal(0.3 * k / (m - 1) + resid, 5.0)
        once = smooth_lowpass(s, 12)
        twice = smooth_lowpass(once, 12)
        assert np.allclose(twice.values, once.values, atol=1e-9)
        wider = smooth_lowpass(once, 20)
        assert np.allclose(wider.values, once.values, atol=1e-9)

    def test_near_idempotent_generic(self):
        # generic signals re-trend against moved endpoints, so repeated
        # smoothing is only approximately stable
        rng = np.random.default_rng(9)
        s = SampledSignal(rng.normal(size=200), 5.0)
        once = smooth_lowpass(s, 12)
        twice = smooth_lowpass(once, 12)
        span = np.ptp(once.values)
        assert np.max(np.abs(twice.values - once.values)) < 0.05 * span

    def test_parseval_residual(self):
        rng = np.random.default_rng(31)
        v = rng.normal(size=300)
        s = SampledSignal(v, 2.0)
        m = s.m
        cutoff = 10
        k = np.arange(m)
        trend = v[0] + (v[-1] - v[0]) * k / (m - 1)
        resid = v - trend
        ext = np.concatenate([resid, resid[-2:0:-1]])
        n = 2 * m - 2
        spec = np.fft.rfft(ext)
        weights = np.full(len(spec), 2.0)
        weights[0] = weights[-1] = 1.0
        zeroed_energy = np.sum(weights[cutoff + 1:] * np.abs(spec[cutoff + 1:]) ** 2) / n
        out = smooth_lowpass(s, cutoff)
        out_resid = out.values - trend
        out_ext = np.concatenate([out_resid, out_resid[-2:0:-1]])
        resid_energy = np.sum((ext - out_ext) ** 2)
        assert zeroed_energy == pytest.approx(resid_energy, rel=1e-9)


class TestInvariances:
    def _samples(self, pts, m=256):
        p = build_polyline(pts, eps_geom=0.0)
        return p, sample_uniform(orientation_function(p), m)

    def test_rotation_shifts_samples(self):
        rng = np.random.default_rng(41)
        pts = rng.uniform(-1, 1, size=(12, 2))
        phi = 0.37
        R = np.array([[math.cos(phi), -math.sin(phi)],
                      [math.sin(phi), math.cos(phi)]])
        _, s0 = self._samples(pts)
        _, s1 = self._samples(pts @ R.T)
        shift = s1.values - s0.values
        base = (shift[0] - phi) % (2 * math.pi)
        base = min(base, 2 * math.pi - base)
        assert base == pytest.approx(0.0, abs=1e-9)
        assert np.allclose(shift, shift[0], atol=1e-9)

    def test_translation_bit_identical(self):
        # grid-snapped points and a power-of-two shift keep the vertex
        # differences exact, so the angles must match bit for bit
        rng = np.random.default_rng(43)
        pts = np.round(rng.uniform(-1, 1, size=(12, 2)) * 64) / 64
        p0 = build_polyline(pts, eps_geom=0.0)
        p1 = build_polyline(pts + np.array([8.0, -4.0]), eps_geom=0.0)
        of0 = orientation_function(p0)
        of1 = orientation_function(p1)
        assert np.array_equal(of0.values, of1.values)
        s0 = sample_uniform(of0, 256)
        s1 = sample_uniform(of1, 256)
        assert np.array_equal(s0.values, s1.values)

    def test_uniform_scale_same_values(self):
        rng = np.random.default_rng(47)
        pts = rng.uniform(-1, 1, size=(12, 2))
        p0, s0 = self._samples(pts)
        p1, s1 = self._samples(pts * 2.0)
        assert np.array_equal(s0.values, s1.values)
        assert p1.length == pytest.approx(2.0 * p0.length, rel=1e-12)


def test_cutoff_from_factor_clamps():
    assert cutoff_from_factor(0.05, 1024) == 51
    assert cutoff_from_factor(1.0, 64) == 31
    assert cutoff_from_factor(1e-9, 64) == 1
    with pytest.raises(BadParam):
        cutoff_from_factor(0.0, 64)
