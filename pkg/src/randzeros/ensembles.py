"""Seeded Gaussian sampling of every random model.

All samplers draw from a counter-style substream derived from (seed, index),
so a trial's randomness depends only on its index, never on scheduling.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .spectra import (
    ComplexSpectrum,
    ExpSum,
    Spectrum1D,
    SpectrumND,
    TrigPolynomial,
    TrigPolynomialND,
    is_centrally_symmetric,
)

SQRT2 = math.sqrt(2.0)


@dataclass(frozen=True)
class RngStream:
    """Substream (seed, index): identical values on every platform and under
    any parallel schedule."""

    seed: int
    index: int = 0

    def generator(self) -> np.random.Generator:
        ss = np.random.SeedSequence(entropy=self.seed, spawn_key=(self.index,))
        return np.random.Generator(np.random.PCG64(ss))

    def substream(self, index: int) -> "RngStream":
        return RngStream(self.seed, index)


@dataclass(frozen=True)
class RealPolynomial:
    """Dense real polynomial; coeffs[k] multiplies x^k.

    The nominal degree is len(coeffs) - 1; Gaussian draws may leave the
    leading coefficient arbitrarily close to zero.
    """

    coeffs: tuple[float, ...]

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(float(c) for c in self.coeffs))

    @property
    def nominal_degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, x):
        x = np.asarray(x, dtype=float)
        out = np.zeros(x.shape, dtype=float)
        for c in reversed(self.coeffs):
            out = out * x + c
        return out if out.shape else float(out)

    def is_zero(self) -> bool:
        return not any(self.coeffs)


def sample_kac(m: int, rng: RngStream) -> RealPolynomial:
    """Degree-m polynomial with m+1 iid standard normal coefficients."""
    if m < 1:
        raise ValueError("degree must be at least 1")
    g = rng.generator().standard_normal(m + 1)
    return RealPolynomial(tuple(g))


def sample_kostlan(m: int, rng: RngStream) -> RealPolynomial:
    """Degree-m polynomial with independent N(0, C(m,k)) coefficients.

    Binomials go through lgamma so degrees well beyond 60 stay finite.
    """
    if m < 1:
        raise ValueError("degree must be at least 1")
    k = np.arange(m + 1)
    log_binom = math.lgamma(m + 1) - np.array(
        [math.lgamma(x + 1) + math.lgamma(m - x + 1) for x in k]
    )
    g = rng.generator().standard_normal(m + 1)
    return RealPolynomial(tuple(np.exp(0.5 * log_binom) * g))


def sample_trig(s: Spectrum1D, rng: RngStream) -> TrigPolynomial:
    """Standard normal coordinates on the orthonormal basis {1, sqrt2 cos,
    sqrt2 sin}; returned on the raw cos/sin basis."""
    if not is_centrally_symmetric(s):
        raise ValueError("spectrum must be centrally symmetric")
    gen = rng.generator()
    c0 = float(gen.standard_normal()) if s.has_zero else 0.0
    npos = len(s.positive)
    ab = gen.standard_normal(2 * npos)
    alphas = tuple(SQRT2 * ab[2 * j] for j in range(npos))
    betas = tuple(SQRT2 * ab[2 * j + 1] for j in range(npos))
    return TrigPolynomial(s, c0, alphas, betas)


def sample_trig_nd(s: SpectrumND, gen: np.random.Generator) -> TrigPolynomialND:
    if not is_centrally_symmetric(s):
        raise ValueError("spectrum must be centrally symmetric")
    c0 = float(gen.standard_normal()) if s.has_zero else 0.0
    npos = len(s.positive)
    ab = gen.standard_normal(2 * npos)
    alphas = tuple(SQRT2 * ab[2 * j] for j in range(npos))
    betas = tuple(SQRT2 * ab[2 * j + 1] for j in range(npos))
    return TrigPolynomialND(s, c0, alphas, betas)


def sample_trig_system(spectra: list[SpectrumND], rng: RngStream) -> list[TrigPolynomialND]:
    """One independent random trig polynomial per equation; the number of
    equations must match the torus dimension."""
    if not spectra:
        raise ValueError("need at least one spectrum")
    n = spectra[0].dim
    if len(spectra) != n or any(s.dim != n for s in spectra):
        raise ValueError(f"need exactly {n} spectra of dimension {n}")
    gen = rng.generator()
    return [sample_trig_nd(s, gen) for s in spectra]


MIN_COEFF_ABS = 1e-6  # re-draw below this so the Newton polygon stays honest


def sample_expsum(s: ComplexSpectrum, rng: RngStream) -> ExpSum:
    """Iid standard complex normal coefficients, (g1 + i g2)/sqrt2 each."""
    if len(s) < 2:
        raise ValueError("exponential sum needs at least two frequencies")
    gen = rng.generator()
    n = len(s)
    coeffs = (gen.standard_normal(n) + 1j * gen.standard_normal(n)) / SQRT2
    while np.any(np.abs(coeffs) < MIN_COEFF_ABS):
        redo = np.abs(coeffs) < MIN_COEFF_ABS
        fresh = (gen.standard_normal(n) + 1j * gen.standard_normal(n)) / SQRT2
        coeffs = np.where(redo, fresh, coeffs)
    return ExpSum(s, tuple(coeffs))
