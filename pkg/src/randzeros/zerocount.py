"""Empirical zero counters, each certified by a second independent route.

Every counter returns a CountResult whose `certified` flag means two methods
or two resolutions agreed; uncertified results are kept (never silently
dropped) so callers can discard and report them.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

import gmpy2
import numpy as np

from .ensembles import RealPolynomial
from .geometry import SphericalCurve, polygon_mixed_area, spectrum_hull
from .spectra import ExpSum, TrigPolynomial, TrigPolynomialND

TWO_PI = 2.0 * math.pi
GRID_PER_DEGREE = 64          # nodes per unit of oscillation degree
REAL_IMAG_TOL = 1e-8          # |Im| <= tol*(1+|root|) classifies a root as real
REAL_MERGE_TOL = 1e-7         # distinct-root merge tolerance on the real line
WINDING_STEP = math.pi / 2.0  # max argument step; 2x margin under the pi alias limit
WINDING_START_NODES = 512
WINDING_MAX_NODES = 2**20
CONTOUR_ZERO_TOL = 1e-10      # |f| below this times the termwise scale means "zero on contour"
NEWTON_TOL = 1e-10
NEWTON_MAX_STEPS = 50
TORUS_DEDUP_TOL = 1e-6


class ZeroCountError(RuntimeError):
    """A counter could not produce a trustworthy answer at all."""


@dataclass(frozen=True)
class CountResult:
    """Zero count with certification state and numerical diagnostics."""

    count: int
    certified: bool
    min_abs: Optional[float] = None
    depth: int = 1

    def __int__(self):
        return self.count


# ---------------------------------------------------------------------------
# Real roots of dense real polynomials: companion eigenvalues, certified by a
# Sturm sign-variation count with precision escalation.
# ---------------------------------------------------------------------------

class _SturmUnstable(Exception):
    pass


# x -> s*x substitutions preserve the real-root count exactly while reshuffling
# the remainder chain, so a flagged chain gets genuinely independent retries.
_RESCUE_SCALES = (1.0, 0.9372143817462436, 1.0731419283571987, 0.8679301123745218)


def _poly_rem(a: np.ndarray, b: np.ndarray) -> tuple[np.ndarray, float]:
    """Polynomial remainder (ascending coefficients), done by hand: numpy's
    polydiv trims remainder leads with an absolute tolerance, which destroys
    legitimately small coefficients."""
    r = a.copy()
    db, lead = b.size - 1, b[-1]
    amp = 0.0
    for k in range(a.size - b.size, -1, -1):
        q = r[k + db] / lead
        a_q = abs(float(q))
        if a_q > amp:
            amp = a_q
        r[k:k + db] -= q * b[:db]
        r[k + db] = 0.0
    return (r[:db] if db > 0 else r[:1] * 0.0), amp


def _sign_variations(signs: np.ndarray) -> int:
    s = signs[signs != 0]
    return int(np.sum(s[:-1] * s[1:] < 0))


def _sturm_chain_count(c: np.ndarray, dtype, step_noise_limit: float) -> int:
    """Sign variations at -inf minus +inf over a normalized remainder chain.

    Raises _SturmUnstable whenever a division step's rounding noise is not
    safely below the size of the remainder it produced.
    """
    c = np.asarray(c, dtype)
    c = np.trim_zeros(c, "b")
    if c.size <= 1:
        return 0
    eps = float(np.finfo(dtype).eps)
    p0 = c / np.max(np.abs(c))
    dp = p0[1:] * np.arange(1, p0.size, dtype=dtype)
    p1 = dp / np.max(np.abs(dp))
    chain = [p0, p1]
    while chain[-1].size > 1:
        r, amp = _poly_rem(chain[-2], chain[-1])
        M = float(np.max(np.abs(r)))
        if M == 0.0 or not np.isfinite(M):
            raise _SturmUnstable("remainder vanished")
        if eps * max(1.0, amp) / M > step_noise_limit:
            raise _SturmUnstable("division noise exceeds remainder")
        keep = np.nonzero(np.abs(r) > (10.0 * eps) * M)[0]
        r = r[:keep[-1] + 1]
        chain.append(-r / np.max(np.abs(r)))
    leads = np.array([float(q[-1]) for q in chain])
    odd = np.array([(q.size - 1) % 2 for q in chain])
    v_plus = _sign_variations(np.sign(leads))
    v_minus = _sign_variations(np.sign(leads) * np.where(odd == 1, -1.0, 1.0))
    return v_minus - v_plus


def _sturm_float_tier(c: np.ndarray, dtype, step_noise_limit: float) -> Optional[int]:
    powers = np.arange(c.size)
    for s in _RESCUE_SCALES:
        try:
            return _sturm_chain_count(c * s**powers, dtype, step_noise_limit)
        except _SturmUnstable:
            continue
    return None


def _to_exact_ints(c: np.ndarray) -> list:
    parts = [float(x).as_integer_ratio() for x in c]
    shift = max(d.bit_length() - 1 for _, d in parts)
    return [gmpy2.mpz(n) << (shift - (d.bit_length() - 1)) for n, d in parts]


def _int_trim(p: list) -> list:
    while p and p[-1] == 0:
        p.pop()
    return p


def _int_content_div(p: list) -> list:
    g = gmpy2.mpz(0)
    for x in p:
        g = gmpy2.gcd(g, x)
        if g == 1:
            return p
    return [x // g for x in p] if g > 1 else p


def _int_prem_neg(a: list, b: list) -> list:
    """A positive integer multiple of -rem(a, b): fraction-free elimination,
    sign-corrected so the chain stays a genuine Sturm sequence."""
    db = len(b) - 1
    lead = b[-1]
    delta = len(a) - len(b)
    r = list(a)
    for k in range(delta, -1, -1):
        top = r[db + k]
        for i in range(db + k):
            lo = i - k
            r[i] = lead * r[i] - (top * b[lo] if 0 <= lo < db else 0)
        r[db + k] = gmpy2.mpz(0)
    r = _int_trim(r[:db])
    if not r:
        return r
    flip = -1 if (lead > 0 or (delta + 1) % 2 == 0) else 1
    return _int_content_div([flip * x for x in r])


def _sturm_exact_tier(c: np.ndarray) -> int:
    """Exact integer Sturm count; floats are exact dyadic rationals, so the
    answer carries no rounding at all."""
    p0 = _int_content_div(_int_trim(_to_exact_ints(c)))
    if len(p0) <= 1:
        return 0
    p1 = _int_content_div(_int_trim([k * x for k, x in enumerate(p0)][1:]))
    chain = [p0, p1]
    while len(chain[-1]) > 1:
        r = _int_prem_neg(chain[-2], chain[-1])
        if not r:
            break
        chain.append(r)
    lead_sign = [1 if q[-1] > 0 else -1 for q in chain]
    deg = [len(q) - 1 for q in chain]

    def variations(signs):
        s = [x for x in signs if x != 0]
        return sum(1 for i in range(len(s) - 1) if s[i] * s[i + 1] < 0)

    v_plus = variations(lead_sign)
    v_minus = variations([s * (-1) ** d for s, d in zip(lead_sign, deg)])
    return v_minus - v_plus


def sturm_real_roots_count(coeffs) -> int:
    """Distinct real roots by Sturm sign variations alone (no eigenvalues);
    escalates float64 -> longdouble -> exact integers until a chain is stable."""
    c = np.trim_zeros(np.asarray(coeffs, dtype=float), "b")
    if c.size == 0:
        raise ValueError("zero polynomial has no well-defined root count")
    if c.size == 1:
        return 0
    nz = np.abs(c[c != 0])
    wide_range = float(np.max(nz) / np.min(nz)) > 1e10
    if not wide_range:
        got = _sturm_float_tier(c, np.float64, 1e-5)
        if got is not None:
            return got
    got = _sturm_float_tier(c, np.longdouble, 1e-4)
    if got is not None:
        return got
    return _sturm_exact_tier(c)


def _companion_real_count(c: np.ndarray) -> tuple[int, Optional[float]]:
    roots = np.roots(c[::-1])
    rel_imag = np.abs(roots.imag) / (1.0 + np.abs(roots))
    is_real = rel_imag <= REAL_IMAG_TOL
    nonreal_margin = float(np.min(rel_imag[~is_real])) if np.any(~is_real) else None
    real = np.sort(roots[is_real].real)
    if real.size == 0:
        return 0, nonreal_margin
    distinct = 1
    for i in range(1, real.size):
        if abs(real[i] - real[i - 1]) > REAL_MERGE_TOL * (1.0 + abs(real[i])):
            distinct += 1
    return distinct, nonreal_margin


def real_roots_count(p: RealPolynomial) -> CountResult:
    """Distinct real roots: balanced companion eigenvalues, certified by the
    tiered Sturm count; mismatch after the exact tier leaves it uncertified."""
    if p.is_zero():
        raise ValueError("zero polynomial has no well-defined root count")
    c = np.trim_zeros(np.asarray(p.coeffs, dtype=float), "b")
    if c.size == 1:
        return CountResult(0, True, None, 0)
    comp, margin = _companion_real_count(c)

    nz = np.abs(c[c != 0])
    wide_range = float(np.max(nz) / np.min(nz)) > 1e10
    depth = 0
    tiers = []
    if not wide_range:
        tiers.append(lambda: _sturm_float_tier(c, np.float64, 1e-5))
    tiers.append(lambda: _sturm_float_tier(c, np.longdouble, 1e-4))
    tiers.append(lambda: _sturm_exact_tier(c))
    certified = False
    for tier in tiers:
        depth += 1
        got = tier()
        if got == comp:
            certified = True
            break
    return CountResult(comp, certified, margin, depth)


# ---------------------------------------------------------------------------
# Sign-change counting for periodic functions (circle zeros, curve slices)
# ---------------------------------------------------------------------------

def _count_periodic_sign_changes(fn, degree_hint: int, factor: int) -> tuple[int, float, np.ndarray]:
    """Sign changes of a 2pi-periodic function on a uniform grid, brackets
    polished by vectorized bisection; returns (count, min grid |value|, roots)."""
    n = GRID_PER_DEGREE * max(1, degree_hint) * factor
    t = np.arange(n) * (TWO_PI / n)
    vals = np.asarray(fn(t), dtype=float)
    signs = np.sign(vals)
    # a grid point exactly at a zero joins the sign of its right neighbour
    for i in np.nonzero(signs == 0)[0]:
        signs[i] = signs[(i + 1) % n] or 1.0
    flips = np.nonzero(signs != np.roll(signs, -1))[0]
    lo = t[flips]
    hi = lo + TWO_PI / n
    flo = vals[flips]
    for _ in range(25):
        mid = 0.5 * (lo + hi)
        fmid = np.asarray(fn(mid), dtype=float)
        same = (fmid > 0) == (flo > 0)
        lo = np.where(same, mid, lo)
        flo = np.where(same, fmid, flo)
        hi = np.where(same, hi, mid)
    return int(flips.size), float(np.min(np.abs(vals))), 0.5 * (lo + hi)


def _certified_periodic_count(fn, degree_hint: int) -> CountResult:
    """Count at base resolution, certify by recount at 2x plus even parity;
    one escalation to 4x before giving up on certification."""
    c1, m1, _ = _count_periodic_sign_changes(fn, degree_hint, 1)
    c2, m2, _ = _count_periodic_sign_changes(fn, degree_hint, 2)
    if c1 == c2 and c2 % 2 == 0:
        return CountResult(c2, True, min(m1, m2), 2)
    c4, m4, _ = _count_periodic_sign_changes(fn, degree_hint, 4)
    certified = (c2 == c4) and c4 % 2 == 0
    return CountResult(c4, certified, min(m1, m2, m4), 4)


def periodic_zero_locations(fn, degree_hint: int) -> np.ndarray:
    """Bisection-refined zero locations on [0, 2pi) at base resolution."""
    _, _, roots = _count_periodic_sign_changes(fn, degree_hint, 1)
    return np.sort(roots % TWO_PI)


def circle_zeros_count(f: TrigPolynomial) -> CountResult:
    """Zeros of a real trig polynomial on [0, 2pi)."""
    if f.is_zero():
        raise ValueError("identically zero trig polynomial")
    return _certified_periodic_count(f, f.degree)


def hyperplane_curve_intersections(K: SphericalCurve, xi) -> CountResult:
    """Transversal intersections of the curve with the hyperplane normal to xi,
    counted as sign changes of the projected parametrization."""
    xi = np.asarray(xi, dtype=float)
    if xi.shape != (K.dim,) or not np.any(xi):
        raise ValueError("need a nonzero normal vector of the ambient dimension")

    def projected(t):
        return xi @ K.point(t)

    return _certified_periodic_count(projected, K.degree)


# ---------------------------------------------------------------------------
# Argument-principle counting for exponential sums
# ---------------------------------------------------------------------------

def _spectrum_diameter(f: ExpSum) -> float:
    pts = np.array(f.spectrum.points)
    if pts.size < 2:
        return 0.0
    return float(np.max(np.abs(pts[:, None] - pts[None, :])))


def _winding_number(f: ExpSum, r: float, center: complex, start_nodes: int) -> tuple[int, float, int]:
    """Total argument increment / 2pi along |z - center| = r, with node
    doubling until every step turns by less than pi/2.

    Returns (winding, min termwise-relative |f| on the contour, nodes used).
    Near-cancellation is measured against the largest single term at the same
    point, which is the honest local scale for an exponential sum.
    """
    n = max(WINDING_START_NODES, start_nodes)
    while True:
        t = np.arange(n) * (TWO_PI / n)
        z = center + r * np.exp(1j * t)
        w = f(z)
        local_scale = np.max(f.term_magnitudes(z), axis=0)
        rel = np.abs(w) / local_scale
        min_rel = float(np.min(rel))
        if min_rel < CONTOUR_ZERO_TOL:
            return 0, min_rel, n  # caller nudges the radius
        steps = np.angle(np.roll(w, -1) / w)
        if np.max(np.abs(steps)) < WINDING_STEP:
            total = float(np.sum(steps))
            return int(np.rint(total / TWO_PI)), min_rel, n
        n *= 2
        if n > WINDING_MAX_NODES:
            raise ZeroCountError(
                f"winding did not converge below {WINDING_MAX_NODES} nodes "
                f"(zero essentially on the contour?)"
            )


def disk_zeros_count(
    f: ExpSum, r: float, center: complex = 0.0, start_nodes: int = WINDING_START_NODES
) -> CountResult:
    """Zeros of an exponential sum in the open disk of radius r about center,
    by the argument principle; certified by recounting at double the nodes.

    `start_nodes` lets radius sweeps warm-start from the refinement level the
    previous contour needed.
    """
    if r <= 0:
        raise ValueError("radius must be positive")
    diam = _spectrum_diameter(f)
    nudge = 1e-3 * (1.0 + (1.0 / diam if diam > 0 else 1.0))
    radius = float(r)
    for attempt in range(4):
        count, min_rel, nodes = _winding_number(f, radius, center, start_nodes)
        if min_rel >= CONTOUR_ZERO_TOL:
            break
        radius += nudge  # a zero sits on the contour; the count changes by O(1)
    else:
        raise ZeroCountError("could not move the contour off a zero")
    count2, min_rel2, _ = _winding_number(f, radius, center, 2 * nodes)
    certified = count == count2 and min_rel2 >= CONTOUR_ZERO_TOL
    depth = int(math.log2(max(2 * nodes, 2) / WINDING_START_NODES))
    return CountResult(count2, certified, min(min_rel, min_rel2), depth)


# ---------------------------------------------------------------------------
# Common zeros of a 2-variate trig system on the torus
# ---------------------------------------------------------------------------

_MS_SEGMENTS = {
    # corner sign pattern (v00, v10, v11, v01), True = positive:
    # crossing edges are indexed 0: v00-v10, 1: v10-v11, 2: v11-v01, 3: v01-v00
    (True, False, False, False): [(0, 3)],
    (False, True, True, True): [(0, 3)],
    (False, True, False, False): [(0, 1)],
    (True, False, True, True): [(0, 1)],
    (False, False, True, False): [(1, 2)],
    (True, True, False, True): [(1, 2)],
    (False, False, False, True): [(2, 3)],
    (True, True, True, False): [(2, 3)],
    (True, True, False, False): [(1, 3)],
    (False, False, True, True): [(1, 3)],
    (True, False, False, True): [(0, 2)],
    (False, True, True, False): [(0, 2)],
}


def _cell_segments(fv: np.ndarray, corners: np.ndarray) -> list[tuple[np.ndarray, np.ndarray]]:
    """Marching-squares segments of {f = 0} inside one cell; the saddle
    ambiguity is resolved with the corner-average center sign."""
    pos = tuple(bool(x > 0) for x in fv)
    if all(pos) or not any(pos):
        return []
    edge_pts = {}
    for e, (i, j) in enumerate(((0, 1), (1, 2), (2, 3), (3, 0))):
        if (fv[i] > 0) != (fv[j] > 0):
            s = fv[i] / (fv[i] - fv[j])
            edge_pts[e] = corners[i] + s * (corners[j] - corners[i])
    if pos in _MS_SEGMENTS:
        return [(edge_pts[a], edge_pts[b]) for a, b in _MS_SEGMENTS[pos]]
    # saddle: corners alternate; choose the pairing consistent with the center
    center_pos = float(np.mean(fv)) > 0
    if pos[0] == center_pos:
        pairs = [(3, 0), (1, 2)] if pos[0] else [(0, 1), (2, 3)]
    else:
        pairs = [(0, 1), (2, 3)] if pos[0] else [(3, 0), (1, 2)]
    return [(edge_pts[a], edge_pts[b]) for a, b in pairs]


def _torus_candidates(
    f: TrigPolynomialND, g: TrigPolynomialND, n_grid: int
) -> tuple[list[np.ndarray], int, int]:
    """Common-zero candidates: along each extracted f-contour segment, a sign
    change of g starts a 2-d Newton iteration from the midpoint."""
    h = TWO_PI / n_grid
    inner = np.arange(n_grid) * h
    T1, T2 = np.meshgrid(inner, inner, indexing="ij")
    # wrap by copying row/column 0 so the seam is exactly periodic
    F = np.empty((n_grid + 1, n_grid + 1))
    F[:-1, :-1] = f(T1, T2)
    F[-1, :-1] = F[0, :-1]
    F[:, -1] = F[:, 0]
    nodes = np.arange(n_grid + 1) * h
    sF = F > 0
    cell_has_change = (
        (sF[:-1, :-1] != sF[1:, :-1])
        | (sF[1:, :-1] != sF[1:, 1:])
        | (sF[1:, 1:] != sF[:-1, 1:])
        | (sF[:-1, 1:] != sF[:-1, :-1])
    )
    candidates = []
    attempted = diverged = 0
    for i, j in np.argwhere(cell_has_change):
        corners = np.array(
            [
                [nodes[i], nodes[j]],
                [nodes[i + 1], nodes[j]],
                [nodes[i + 1], nodes[j + 1]],
                [nodes[i], nodes[j + 1]],
            ]
        )
        fv = np.array([F[i, j], F[i + 1, j], F[i + 1, j + 1], F[i, j + 1]])
        for p, q in _cell_segments(fv, corners):
            gp = g(p[0], p[1])
            gq = g(q[0], q[1])
            if (gp > 0) == (gq > 0):
                continue
            attempted += 1
            point = _newton_2d(f, g, 0.5 * (p + q))
            if point is None:
                diverged += 1
            else:
                candidates.append(point)
    return candidates, diverged, attempted


def _newton_2d(f: TrigPolynomialND, g: TrigPolynomialND, start: np.ndarray) -> Optional[np.ndarray]:
    x, y = float(start[0]), float(start[1])
    for _ in range(NEWTON_MAX_STEPS):
        fv, gv = f(x, y), g(x, y)
        if abs(fv) < NEWTON_TOL and abs(gv) < NEWTON_TOL:
            return np.array([x % TWO_PI, y % TWO_PI])
        f1, f2 = f.partial(0, x, y), f.partial(1, x, y)
        g1, g2 = g.partial(0, x, y), g.partial(1, x, y)
        det = f1 * g2 - f2 * g1
        if abs(det) < 1e-14:
            return None
        x -= (fv * g2 - gv * f2) / det
        y -= (gv * f1 - fv * g1) / det
    return None


def _dedup_torus(points: list[np.ndarray]) -> list[np.ndarray]:
    kept: list[np.ndarray] = []
    for p in points:
        for q in kept:
            d = np.abs(p - q)
            d = np.minimum(d, TWO_PI - d)
            if float(np.hypot(d[0], d[1])) < TORUS_DEDUP_TOL:
                break
        else:
            kept.append(p)
    return kept


def bkk_bound(f: TrigPolynomialND, g: TrigPolynomialND) -> float:
    """Generic number of complex torus solutions: twice the mixed area of the
    Newton polygons (equal spectra: 2 * hull area)."""
    return 2.0 * polygon_mixed_area(spectrum_hull(f.spectrum), spectrum_hull(g.spectrum))


def torus_common_zeros_count(f: TrigPolynomialND, g: TrigPolynomialND) -> CountResult:
    """Common zeros of two real trig polynomials on the 2-torus.

    Marching squares extracts the f-curve, sign changes of g along it seed
    Newton refinements; certification needs agreement at doubled resolution,
    a sub-1% Newton divergence rate, and the complex solution-count bound.
    """
    if f.dim != 2 or g.dim != 2:
        raise ValueError("torus counting is 2-d only")
    if f.is_zero() or g.is_zero():
        raise ValueError("identically zero polynomial in the system")
    base = GRID_PER_DEGREE * max(1, f.degree, g.degree)

    def level(factor):
        cand, diverged, attempted = _torus_candidates(f, g, base * factor)
        return len(_dedup_torus(cand)), diverged <= 0.01 * max(1, attempted)

    bound = bkk_bound(f, g)
    c1, ok1 = level(1)
    c2, ok2 = level(2)
    if c1 == c2 and ok1 and ok2 and c2 <= bound + 1e-9:
        return CountResult(c2, True, None, 2)
    # the coarse grid missed a near-tangency or chased a spurious crossing;
    # certify on agreement of the two finer resolutions instead
    c4, ok4 = level(4)
    certified = c2 == c4 and ok2 and ok4 and c4 <= bound + 1e-9
    return CountResult(c4, certified, None, 4)
