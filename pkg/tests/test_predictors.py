import math

import numpy as np
import pytest

from randzeros.geometry import ComplexPolytope
from randzeros.predictors import (
    SlopeConvention,
    expsum_slope,
    kac_asymptotic,
    nd_expected,
    nd_expected_mixed,
    nd_prob,
    pvol_leading_coefficient,
    trig_expected,
    trig_prob,
)
from randzeros.spectra import ComplexSpectrum, Spectrum1D, SpectrumND

TWO_PI = 2 * math.pi


def full_range(m):
    return Spectrum1D(tuple(range(-m, m + 1)))


def box_spectrum():
    return SpectrumND(2, tuple((i, j) for i in (-1, 0, 1) for j in (-1, 0, 1)))


def cross_spectrum():
    return SpectrumND(2, ((0, 0), (1, 0), (-1, 0), (0, 1), (0, -1)))


def random_symmetric_1d(rng):
    pos = rng.choice(np.arange(1, 12), size=rng.integers(1, 5), replace=False)
    pts = sorted({int(k) for k in pos} | {-int(k) for k in pos} | ({0} if rng.random() < 0.5 else set()))
    return Spectrum1D(tuple(pts))


class TestKacAsymptotic:
    def test_m_100(self):
        # (2/pi) ln 100, from direct arithmetic
        assert kac_asymptotic(100) == pytest.approx(2.9317423955177113, abs=1e-12)

    def test_unit_value_inversion(self):
        m = math.e ** (math.pi / 2)
        assert (2 / math.pi) * math.log(m) == pytest.approx(1.0)
        assert kac_asymptotic(round(m)) == pytest.approx((2 / math.pi) * math.log(round(m)))

    def test_m_10(self):
        assert kac_asymptotic(10) == pytest.approx(1.465871, abs=1e-6)

    def test_small_degree_rejected(self):
        with pytest.raises(ValueError):
            kac_asymptotic(1)


class TestTrigExpected:
    def test_full_range_closed_form(self):
        for m in (1, 2, 3, 5, 9):
            assert trig_expected(full_range(m)) == pytest.approx(2 * math.sqrt(m * (m + 1) / 3))
        assert trig_expected(full_range(3)) == pytest.approx(4.0, abs=1e-14)

    def test_two_point_spectrum(self):
        for k in (1, 4, 11):
            assert trig_expected(Spectrum1D((-k, k))) == pytest.approx(2.0 * k)

    def test_zero_spectrum(self):
        assert trig_expected(Spectrum1D((0,))) == 0.0

    def test_monotone_in_degree(self):
        means = [trig_expected(full_range(m)) for m in range(1, 30)]
        assert all(b > a for a, b in zip(means, means[1:]))


class TestTrigProb:
    def test_full_range_closed_form(self):
        assert trig_prob(full_range(3)) == pytest.approx(2.0 / 3.0, abs=1e-14)
        for m in (1, 2, 7):
            assert trig_prob(full_range(m)) == pytest.approx(math.sqrt((m + 1) / (3 * m)))

    def test_limit_value(self):
        assert abs(trig_prob(full_range(10_000)) - 0.57735) < 1e-4

    def test_scaling_invariance_exact(self):
        s = full_range(2)
        assert trig_prob(s.scaled(7)) == trig_prob(s)

    def test_decreasing_toward_limit(self):
        probs = [trig_prob(full_range(m)) for m in range(1, 40)]
        assert all(b < a for a, b in zip(probs, probs[1:]))
        assert probs[-1] > 1 / math.sqrt(3)

    def test_degree_zero_rejected(self):
        with pytest.raises(ValueError):
            trig_prob(Spectrum1D((0,)))


class TestNdExpected:
    def test_recovers_one_dimensional_formula(self):
        for m in (1, 3, 6):
            s1 = SpectrumND(1, tuple((k,) for k in range(-m, m + 1)))
            assert nd_expected(s1) == pytest.approx(trig_expected(full_range(m)), rel=1e-14)

    def test_box(self):
        assert nd_expected(box_spectrum()) == pytest.approx(4 * math.pi / 3, rel=1e-12)

    def test_cross(self):
        assert nd_expected(cross_spectrum()) == pytest.approx(4 * math.pi / 5, rel=1e-12)

    def test_consistency_chain_random(self):
        rng = np.random.default_rng(21)
        for _ in range(50):
            s = random_symmetric_1d(rng)
            s_nd = SpectrumND(1, tuple((k,) for k in s.points))
            assert nd_expected(s_nd) == pytest.approx(trig_expected(s), rel=1e-13)


class TestNdProb:
    def test_box(self):
        assert nd_prob(box_spectrum()) == pytest.approx(math.pi / 6, rel=1e-12)

    def test_one_dim_matches_trig_prob(self):
        for m in (1, 2, 5):
            s1 = SpectrumND(1, tuple((k,) for k in range(-m, m + 1)))
            assert nd_prob(s1) == pytest.approx(trig_prob(full_range(m)), rel=1e-13)

    def test_two_point_probability_one(self):
        for k in (1, 3):
            s1 = SpectrumND(1, ((-k,), (k,)))
            assert nd_prob(s1) == pytest.approx(1.0, rel=1e-13)

    def test_scaling_invariance(self):
        s = box_spectrum()
        for k in (2, 3, 5):
            assert nd_prob(s.scaled(k)) == pytest.approx(nd_prob(s), rel=1e-13)


class TestNdExpectedMixed:
    def test_diagonal_matches_unmixed(self):
        s = box_spectrum()
        assert nd_expected_mixed(s, s) == pytest.approx(nd_expected(s), abs=1e-9)

    def test_box_cross(self):
        # mixed area of two disks is pi r1 r2
        expect = 2 * math.pi * math.sqrt(4.0 / 15.0)
        assert nd_expected_mixed(box_spectrum(), cross_spectrum()) == pytest.approx(expect, rel=1e-9)

    def test_symmetry(self):
        a, b = box_spectrum(), cross_spectrum()
        assert nd_expected_mixed(a, b) == pytest.approx(nd_expected_mixed(b, a), abs=1e-9)

    def test_scaling_linearity(self):
        a, b = box_spectrum(), cross_spectrum()
        v = nd_expected_mixed(a, b)
        for k in (2, 3):
            assert nd_expected_mixed(a.scaled(k), b) == pytest.approx(k * v, rel=1e-9)


class TestExpsumSlope:
    def test_integer_zero_segment(self):
        s = ComplexSpectrum((0, TWO_PI * 1j))
        assert expsum_slope(s, SlopeConvention.PERIMETER) == pytest.approx(2.0, rel=1e-12)
        assert expsum_slope(s, SlopeConvention.SEMIPERIMETER) == pytest.approx(1.0, rel=1e-12)

    def test_sine_segment(self):
        s = ComplexSpectrum((1j, -1j))
        assert expsum_slope(s) == pytest.approx(2.0 / math.pi, rel=1e-12)

    def test_triangle(self):
        s = ComplexSpectrum((0, 1, 1j))
        assert expsum_slope(s) == pytest.approx((2 + math.sqrt(2)) / TWO_PI, rel=1e-12)

    def test_translation_invariance(self):
        s = ComplexSpectrum((0, 1, 1j))
        t = ComplexSpectrum(tuple(z + (2.5 - 1.25j) for z in s.points))
        assert expsum_slope(t) == pytest.approx(expsum_slope(s), rel=1e-12)

    def test_rotation_invariance(self):
        s = ComplexSpectrum((0, 1, 1j))
        w = math.e ** (0.7j)
        t = ComplexSpectrum(tuple(z * w for z in s.points))
        assert expsum_slope(t) == pytest.approx(expsum_slope(s), rel=1e-12)

    def test_single_point_rejected(self):
        with pytest.raises(ValueError):
            expsum_slope(ComplexSpectrum((1j,)))


class TestPvolLeadingCoefficient:
    def test_segment(self):
        seg = ComplexPolytope(1, np.array([[0j], [TWO_PI * 1j]]))
        assert pvol_leading_coefficient(seg) == pytest.approx(1.0, rel=1e-12)

    def test_real_square(self):
        sq = ComplexPolytope(2, np.array([[0j, 0j], [1 + 0j, 0j], [1 + 0j, 1 + 0j], [0j, 1 + 0j]]))
        assert pvol_leading_coefficient(sq) == pytest.approx(1.0 / TWO_PI**2, rel=1e-9)

    def test_triangle(self):
        tri = ComplexPolytope(1, np.array([[0j], [1 + 0j], [1j]]))
        expect = (2 + math.sqrt(2)) / 2 / TWO_PI
        assert pvol_leading_coefficient(tri) == pytest.approx(expect, rel=1e-12)
