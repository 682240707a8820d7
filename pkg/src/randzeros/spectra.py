"""Frequency spectra and the Laurent/trigonometric correspondence.

A spectrum is the finite set of frequencies of a Laurent polynomial (integers),
of a multivariate Laurent polynomial (integer lattice vectors), or of an
exponential sum (complex numbers).  The types here are immutable value objects;
all validation happens at construction.
"""

from __future__ import annotations

import cmath
import math
import re
from dataclasses import dataclass, field

import numpy as np

COMPLEX_POINT_TOL = 1e-12  # equality tolerance for user-supplied complex frequencies
SQRT2 = math.sqrt(2.0)


class SpectrumParseError(ValueError):
    """Malformed spectrum text; `position` is the offset of the bad token."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


@dataclass(frozen=True)
class Spectrum1D:
    """Finite set of integer frequencies, stored sorted ascending."""

    points: tuple[int, ...]

    def __post_init__(self):
        pts = tuple(int(p) for p in self.points)
        if not pts:
            raise ValueError("spectrum must be nonempty")
        if len(set(pts)) != len(pts):
            raise ValueError("duplicate frequencies are rejected, not deduplicated")
        object.__setattr__(self, "points", tuple(sorted(pts)))

    def __len__(self):
        return len(self.points)

    def scaled(self, k: int) -> "Spectrum1D":
        if k == 0:
            raise ValueError("scale factor must be nonzero")
        return Spectrum1D(tuple(k * p for p in self.points))

    @property
    def positive(self) -> tuple[int, ...]:
        return tuple(p for p in self.points if p > 0)

    @property
    def has_zero(self) -> bool:
        return 0 in self.points


@dataclass(frozen=True)
class SpectrumND:
    """Finite set of integer lattice vectors of a fixed dimension."""

    dim: int
    points: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.dim < 1:
            raise ValueError("dimension must be positive")
        pts = tuple(tuple(int(x) for x in p) for p in self.points)
        if not pts:
            raise ValueError("spectrum must be nonempty")
        for p in pts:
            if len(p) != self.dim:
                raise ValueError(f"point {p} does not have dimension {self.dim}")
        if len(set(pts)) != len(pts):
            raise ValueError("duplicate lattice points are rejected, not deduplicated")
        object.__setattr__(self, "points", tuple(sorted(pts)))

    def __len__(self):
        return len(self.points)

    def scaled(self, k: int) -> "SpectrumND":
        if k == 0:
            raise ValueError("scale factor must be nonzero")
        return SpectrumND(self.dim, tuple(tuple(k * x for x in p) for p in self.points))

    @property
    def positive(self) -> tuple[tuple[int, ...], ...]:
        """Lexicographically positive half: first nonzero coordinate > 0."""
        out = []
        for p in self.points:
            nz = next((x for x in p if x != 0), 0)
            if nz > 0:
                out.append(p)
        return tuple(out)

    @property
    def has_zero(self) -> bool:
        return tuple([0] * self.dim) in self.points

    def as_array(self) -> np.ndarray:
        return np.array(self.points, dtype=float)


@dataclass(frozen=True)
class ComplexSpectrum:
    """Finite set of complex frequencies of an exponential sum.

    Evaluation pairs a frequency lambda with exp(conj(lambda) * z), so the
    Newton polygon of the sum is the convex hull of the stored points.
    """

    points: tuple[complex, ...]

    def __post_init__(self):
        pts = tuple(complex(p) for p in self.points)
        if not pts:
            raise ValueError("spectrum must be nonempty")
        for i in range(len(pts)):
            for j in range(i + 1, len(pts)):
                if abs(pts[i] - pts[j]) <= COMPLEX_POINT_TOL:
                    raise ValueError(f"frequencies {pts[i]} and {pts[j]} coincide within {COMPLEX_POINT_TOL}")
        object.__setattr__(self, "points", tuple(sorted(pts, key=lambda z: (z.real, z.imag))))

    def __len__(self):
        return len(self.points)


def is_centrally_symmetric(s) -> bool:
    """True iff every frequency appears together with its negation."""
    if isinstance(s, Spectrum1D):
        pts = set(s.points)
        return all(-p in pts for p in pts)
    if isinstance(s, SpectrumND):
        pts = set(s.points)
        return all(tuple(-x for x in p) in pts for p in pts)
    raise TypeError(f"unsupported spectrum type {type(s).__name__}")


def degree(s: Spectrum1D) -> int:
    """Max absolute frequency, the degree of the associated Laurent polynomial."""
    return max(abs(p) for p in s.points)


@dataclass(frozen=True)
class TrigPolynomial:
    """Real trig polynomial c0 + sum over positive frequencies of
    alpha*cos(k*theta) + beta*sin(k*theta), on the raw cos/sin basis.

    `c0` multiplies the constant basis vector and must be 0 when 0 is not in
    the spectrum.  `alphas`/`betas` are indexed by `spectrum.positive`.
    """

    spectrum: Spectrum1D
    c0: float
    alphas: tuple[float, ...]
    betas: tuple[float, ...]

    def __post_init__(self):
        if not is_centrally_symmetric(self.spectrum):
            raise ValueError("trig polynomial requires a centrally symmetric spectrum")
        npos = len(self.spectrum.positive)
        if len(self.alphas) != npos or len(self.betas) != npos:
            raise ValueError(f"need {npos} cos and sin coefficients for this spectrum")
        if not self.spectrum.has_zero and self.c0 != 0.0:
            raise ValueError("c0 must be 0 when 0 is not in the spectrum")
        object.__setattr__(self, "alphas", tuple(float(a) for a in self.alphas))
        object.__setattr__(self, "betas", tuple(float(b) for b in self.betas))
        object.__setattr__(self, "c0", float(self.c0))

    @property
    def degree(self) -> int:
        return degree(self.spectrum)

    def __call__(self, theta):
        theta = np.asarray(theta, dtype=float)
        out = np.full(theta.shape, self.c0, dtype=float)
        for k, a, b in zip(self.spectrum.positive, self.alphas, self.betas):
            out += a * np.cos(k * theta) + b * np.sin(k * theta)
        return out if out.shape else float(out)

    def deriv(self, theta):
        theta = np.asarray(theta, dtype=float)
        out = np.zeros(theta.shape, dtype=float)
        for k, a, b in zip(self.spectrum.positive, self.alphas, self.betas):
            out += k * (-a * np.sin(k * theta) + b * np.cos(k * theta))
        return out if out.shape else float(out)

    def orthonormal_coords(self) -> np.ndarray:
        """Coordinates on the orthonormal basis {1, sqrt2*cos, sqrt2*sin} under
        (f,g) = (1/2pi) integral of f*g over the circle."""
        coords = []
        if self.spectrum.has_zero:
            coords.append(self.c0)
        for a, b in zip(self.alphas, self.betas):
            coords.extend((a / SQRT2, b / SQRT2))
        return np.array(coords)

    def is_zero(self) -> bool:
        return self.c0 == 0.0 and not any(self.alphas) and not any(self.betas)


@dataclass(frozen=True)
class TrigPolynomialND:
    """Real trig polynomial on the n-torus with a centrally symmetric lattice
    spectrum; coefficients indexed by the lexicographically positive half."""

    spectrum: SpectrumND
    c0: float
    alphas: tuple[float, ...]
    betas: tuple[float, ...]

    _pos: np.ndarray = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if not is_centrally_symmetric(self.spectrum):
            raise ValueError("trig polynomial requires a centrally symmetric spectrum")
        pos = self.spectrum.positive
        if len(self.alphas) != len(pos) or len(self.betas) != len(pos):
            raise ValueError(f"need {len(pos)} cos and sin coefficients for this spectrum")
        if not self.spectrum.has_zero and self.c0 != 0.0:
            raise ValueError("c0 must be 0 when 0 is not in the spectrum")
        object.__setattr__(self, "alphas", tuple(float(a) for a in self.alphas))
        object.__setattr__(self, "betas", tuple(float(b) for b in self.betas))
        object.__setattr__(self, "c0", float(self.c0))
        object.__setattr__(self, "_pos", np.array(pos, dtype=float))

    @property
    def dim(self) -> int:
        return self.spectrum.dim

    @property
    def degree(self) -> int:
        """Max absolute coordinate over the spectrum; sets grid resolutions."""
        return max(max(abs(x) for x in p) for p in self.spectrum.points)

    def __call__(self, *thetas):
        """Evaluate at broadcastable coordinate arrays theta_1 .. theta_n."""
        th = np.broadcast_arrays(*[np.asarray(t, dtype=float) for t in thetas])
        out = np.full(th[0].shape, self.c0, dtype=float)
        a = np.array(self.alphas)
        b = np.array(self.betas)
        for j in range(self._pos.shape[0]):
            phase = sum(self._pos[j, i] * th[i] for i in range(self.dim))
            out += a[j] * np.cos(phase) + b[j] * np.sin(phase)
        return out if out.shape else float(out)

    def partial(self, axis: int, *thetas):
        """Analytic partial derivative along `axis`."""
        th = np.broadcast_arrays(*[np.asarray(t, dtype=float) for t in thetas])
        out = np.zeros(th[0].shape, dtype=float)
        a = np.array(self.alphas)
        b = np.array(self.betas)
        for j in range(self._pos.shape[0]):
            phase = sum(self._pos[j, i] * th[i] for i in range(self.dim))
            out += self._pos[j, axis] * (-a[j] * np.sin(phase) + b[j] * np.cos(phase))
        return out if out.shape else float(out)

    def is_zero(self) -> bool:
        return self.c0 == 0.0 and not any(self.alphas) and not any(self.betas)


@dataclass(frozen=True)
class LaurentPolynomial:
    """Laurent polynomial sum of a_m z^m over the spectrum; `coeffs` aligned
    with `spectrum.points` (ascending)."""

    spectrum: Spectrum1D
    coeffs: tuple[complex, ...]

    def __post_init__(self):
        if len(self.coeffs) != len(self.spectrum):
            raise ValueError("one coefficient per spectrum point required")
        object.__setattr__(self, "coeffs", tuple(complex(c) for c in self.coeffs))

    def __call__(self, z):
        z = np.asarray(z, dtype=complex)
        out = np.zeros(z.shape, dtype=complex)
        for m, a in zip(self.spectrum.points, self.coeffs):
            out += a * z**m
        return out if out.shape else complex(out)

    def coeff(self, m: int) -> complex:
        """Coefficient of z^m; 0 when m is outside the spectrum."""
        try:
            return self.coeffs[self.spectrum.points.index(m)]
        except ValueError:
            return 0.0


@dataclass(frozen=True)
class ExpSum:
    """Exponential sum f(z) = sum of c * exp(conj(lambda) * z).

    Coefficients must be nonzero: a zero coefficient would silently shrink the
    Newton polygon, so such points must be dropped by the caller.
    """

    spectrum: ComplexSpectrum
    coeffs: tuple[complex, ...]

    def __post_init__(self):
        if len(self.coeffs) != len(self.spectrum):
            raise ValueError("one coefficient per spectrum point required")
        cs = tuple(complex(c) for c in self.coeffs)
        if any(c == 0 for c in cs):
            raise ValueError("zero coefficients are not allowed; drop the spectrum point instead")
        object.__setattr__(self, "coeffs", cs)

    def __call__(self, z):
        z = np.asarray(z, dtype=complex)
        out = np.zeros(z.shape, dtype=complex)
        for lam, c in zip(self.spectrum.points, self.coeffs):
            out += c * np.exp(np.conj(lam) * z)
        return out if out.shape else complex(out)

    def term_magnitudes(self, z):
        """|c * exp(conj(lambda) z)| per term; the local scale of cancellation."""
        z = np.asarray(z, dtype=complex)
        mags = [np.abs(c) * np.exp((np.conj(lam) * z).real) for lam, c in zip(self.spectrum.points, self.coeffs)]
        return np.stack(mags, axis=0)


def trig_to_laurent(f: TrigPolynomial) -> LaurentPolynomial:
    """Inverse of the restriction isomorphism: the Laurent polynomial agreeing
    with f on the unit circle.

    a_0 = c0, a_k = (alpha_k - i beta_k)/2 and a_{-k} = conj(a_k), so that
    L(e^{i theta}) = f(theta).
    """
    coeffs = {}
    if f.spectrum.has_zero:
        coeffs[0] = complex(f.c0)
    for k, a, b in zip(f.spectrum.positive, f.alphas, f.betas):
        coeffs[k] = (a - 1j * b) / 2.0
        coeffs[-k] = (a + 1j * b) / 2.0
    return LaurentPolynomial(f.spectrum, tuple(coeffs[m] for m in f.spectrum.points))


def is_real_on_circle(L: LaurentPolynomial, tol: float = 1e-12) -> bool:
    """True iff a_k = conj(a_{-k}) for every k, missing coefficients read as 0."""
    for m in L.spectrum.points:
        if abs(L.coeff(m) - L.coeff(-m).conjugate()) > tol:
            return False
    return True


# ---------------------------------------------------------------------------
# Spectrum text grammar (CLI and config files)
#
#   1-D:      "-3..3"            inclusive integer range
#             "-5,-2,2,5"        integer list
#   n-D:      "(-1,0);(1,0)"     semicolon-separated integer vectors
#             "(-1,-1)..(1,1)"   full integer box between corners
#   complex:  "0, 1, 1i, 2+3i"   comma-separated complex literals
# ---------------------------------------------------------------------------

_INT_RE = re.compile(r"^[+-]?\d+$")


def _normalize(text: str) -> str:
    return text.replace("−", "-").replace("–", "-")


def parse_spectrum_1d(text: str) -> Spectrum1D:
    s = _normalize(text).strip()
    if ".." in s:
        lo_s, _, hi_s = s.partition("..")
        lo_s, hi_s = lo_s.strip(), hi_s.strip()
        if not _INT_RE.match(lo_s):
            raise SpectrumParseError(f"expected integer, got {lo_s!r}", text.find(lo_s) if lo_s else 0)
        if not _INT_RE.match(hi_s):
            raise SpectrumParseError(f"expected integer, got {hi_s!r}", s.index("..") + 2)
        lo, hi = int(lo_s), int(hi_s)
        if hi < lo:
            raise SpectrumParseError(f"empty range {lo}..{hi}", 0)
        return Spectrum1D(tuple(range(lo, hi + 1)))
    pts = []
    pos = 0
    for tok in s.split(","):
        t = tok.strip()
        if not _INT_RE.match(t):
            raise SpectrumParseError(f"expected integer, got {t!r}", pos + tok.index(t) if t else pos)
        pts.append(int(t))
        pos += len(tok) + 1
    try:
        return Spectrum1D(tuple(pts))
    except ValueError as e:
        raise SpectrumParseError(str(e), 0) from None


def _parse_vector(tok: str, offset: int) -> tuple[int, ...]:
    t = tok.strip()
    if not (t.startswith("(") and t.endswith(")")):
        raise SpectrumParseError(f"expected parenthesized vector, got {t!r}", offset)
    comps = []
    for c in t[1:-1].split(","):
        c = c.strip()
        if not _INT_RE.match(c):
            raise SpectrumParseError(f"expected integer component, got {c!r}", offset)
        comps.append(int(c))
    return tuple(comps)


def parse_spectrum_nd(text: str) -> SpectrumND:
    s = _normalize(text).strip()
    if ")..(" in s:
        lo_s, _, hi_s = s.partition("..")
        lo = _parse_vector(lo_s, 0)
        hi = _parse_vector(hi_s, s.index("..") + 2)
        if len(lo) != len(hi):
            raise SpectrumParseError("box corners have different dimensions", 0)
        if any(h < l for l, h in zip(lo, hi)):
            raise SpectrumParseError("empty box", 0)
        ranges = [range(l, h + 1) for l, h in zip(lo, hi)]
        pts = [()]
        for r in ranges:
            pts = [p + (x,) for p in pts for x in r]
        return SpectrumND(len(lo), tuple(pts))
    pts = []
    pos = 0
    for tok in s.split(";"):
        pts.append(_parse_vector(tok, pos))
        pos += len(tok) + 1
    dims = {len(p) for p in pts}
    if len(dims) != 1:
        raise SpectrumParseError("vectors have inconsistent dimensions", 0)
    try:
        return SpectrumND(dims.pop(), tuple(pts))
    except ValueError as e:
        raise SpectrumParseError(str(e), 0) from None


def parse_complex(text: str, offset: int = 0) -> complex:
    t = _normalize(text).strip()
    offset += len(text) - len(text.lstrip())
    if not t:
        raise SpectrumParseError("empty complex literal", offset)
    u = t.replace(" ", "")
    # bare "i" forms that complex() rejects
    u = re.sub(r"(?<![\dji.])i", "1i", u)
    u = u.replace("i", "j")
    try:
        return complex(u)
    except ValueError:
        raise SpectrumParseError(f"bad complex literal {t!r}", offset) from None


def parse_complex_spectrum(text: str) -> ComplexSpectrum:
    s = _normalize(text)
    pts = []
    pos = 0
    for tok in s.split(","):
        pts.append(parse_complex(tok, pos))
        pos += len(tok) + 1
    try:
        return ComplexSpectrum(tuple(pts))
    except ValueError as e:
        raise SpectrumParseError(str(e), 0) from None


def parse_complex_list(text: str) -> tuple[complex, ...]:
    """Comma-separated complex values (e.g. exponential-sum coefficients)."""
    s = _normalize(text)
    out = []
    pos = 0
    for tok in s.split(","):
        out.append(parse_complex(tok, pos))
        pos += len(tok) + 1
    return tuple(out)


def parse_real_list(text: str) -> tuple[float, ...]:
    s = _normalize(text).strip()
    if not s:
        return ()
    out = []
    pos = 0
    for tok in s.split(","):
        t = tok.strip()
        try:
            out.append(float(t))
        except ValueError:
            raise SpectrumParseError(f"bad number {t!r}", pos) from None
        pos += len(tok) + 1
    return tuple(out)
