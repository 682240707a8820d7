"""Closed-form predictions for expected zero counts, as pure functions of the
spectrum."""

from __future__ import annotations

import enum
import math

import numpy as np

from .geometry import (
    ComplexPolytope,
    convex_hull_2d,
    ellipsoid_volume,
    mixed_area,
    newton_ellipsoid,
    polygon_perimeter,
    pseudovolume,
    spectrum_hull_volume,
)
from .spectra import ComplexSpectrum, Spectrum1D, SpectrumND, degree, is_centrally_symmetric

TWO_PI = 2.0 * math.pi


class SlopeConvention(enum.Enum):
    """Which multiple of the Newton polygon boundary drives the linear zero
    growth of an exponential sum.

    The integer-zero model (zeros of exp(2 pi i z) - 1 are exactly Z, about
    2r of them in radius r) forces PERIMETER; both are computed so experiment
    reports can show the losing convention's residual.
    """

    PERIMETER = "perimeter"
    SEMIPERIMETER = "semiperimeter"


def kac_asymptotic(m: int) -> float:
    """Leading term (2/pi) ln m of the expected real-root count for iid
    standard normal coefficients."""
    if m < 2:
        raise ValueError("asymptotic form needs degree at least 2")
    return (2.0 / math.pi) * math.log(m)


def _second_moment(s: Spectrum1D) -> float:
    pts = np.array(s.points, dtype=float)
    return float(np.mean(pts**2))


def trig_expected(s: Spectrum1D) -> float:
    """Mean number of circle zeros: 2 sqrt((1/#L) sum of l^2)."""
    if not is_centrally_symmetric(s):
        raise ValueError("spectrum must be centrally symmetric")
    return 2.0 * math.sqrt(_second_moment(s))


def trig_prob(s: Spectrum1D) -> float:
    """Probability that a root is real: sqrt((1/#L) sum of l^2) / degree."""
    d = degree(s)
    if d < 1:
        raise ValueError("degree-zero spectrum has no roots to classify")
    if not is_centrally_symmetric(s):
        raise ValueError("spectrum must be centrally symmetric")
    return math.sqrt(_second_moment(s)) / d


def nd_expected(s: SpectrumND) -> float:
    """n! times the volume of the Newton ellipsoid of the spectrum."""
    if not is_centrally_symmetric(s):
        raise ValueError("spectrum must be centrally symmetric")
    return math.factorial(s.dim) * ellipsoid_volume(newton_ellipsoid(s))


def nd_prob(s: SpectrumND) -> float:
    """Newton-ellipsoid volume over Newton-polytope volume."""
    if not is_centrally_symmetric(s):
        raise ValueError("spectrum must be centrally symmetric")
    hull_vol = spectrum_hull_volume(s)
    if hull_vol <= 0.0:
        raise ValueError("spectrum hull is degenerate")
    return ellipsoid_volume(newton_ellipsoid(s)) / hull_vol


def nd_expected_mixed(s1: SpectrumND, s2: SpectrumND) -> float:
    """Mixed form of the planar prediction: 2 V(Ell(s1), Ell(s2))."""
    if s1.dim != 2 or s2.dim != 2:
        raise ValueError("mixed prediction is planar only")
    if not (is_centrally_symmetric(s1) and is_centrally_symmetric(s2)):
        raise ValueError("spectra must be centrally symmetric")
    return 2.0 * mixed_area(newton_ellipsoid(s1), newton_ellipsoid(s2))


def expsum_slope(s: ComplexSpectrum, convention: SlopeConvention = SlopeConvention.PERIMETER) -> float:
    """Zeros per unit radius of an exponential sum with this spectrum.

    The hull is taken of the conjugated frequencies to match the evaluation
    convention exp(conj(l) z); conjugation reflects the hull and leaves its
    perimeter unchanged.
    """
    if len(s) < 2:
        raise ValueError("a single-term exponential sum never vanishes")
    pts = np.array([(z.real, -z.imag) for z in s.points])
    perim = polygon_perimeter(convex_hull_2d(pts))
    if convention is SlopeConvention.PERIMETER:
        return perim / TWO_PI
    return 0.5 * perim / TWO_PI


def pvol_leading_coefficient(p: ComplexPolytope, angle_samples: int = 200_000, seed: int = 0) -> float:
    """Leading growth coefficient pvol / (2 pi)^n for zero counts of systems
    of exponential sums."""
    return pseudovolume(p, angle_samples, seed) / TWO_PI**p.n
