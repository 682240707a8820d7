"""Convex and Euclidean geometry kernel.

Newton polygons and ellipsoids of spectra, mixed areas by support-function
quadrature, the unit-speed circle embedding into the sphere of trigonometric
polynomial space, and the face-weighted pseudovolume of polytopes in C^n.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Optional, Sequence

import numpy as np

from .ensembles import RngStream
from .spectra import Spectrum1D, SpectrumND, degree, is_centrally_symmetric

QUAD_NODES = 4096        # trapezoid nodes for periodic quadratures
ANGLE_SAMPLES = 200_000  # default Monte Carlo draws per exterior angle
SQRT2 = math.sqrt(2.0)


# ---------------------------------------------------------------------------
# Polygons
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Polygon2D:
    """Convex polygon, vertices counterclockwise; 1 or 2 vertices encode the
    degenerate point and segment cases."""

    vertices: np.ndarray

    def __post_init__(self):
        v = np.atleast_2d(np.asarray(self.vertices, dtype=float))
        if v.ndim != 2 or v.shape[1] != 2 or v.shape[0] < 1:
            raise ValueError("vertices must be an (k, 2) array with k >= 1")
        if v.shape[0] >= 2:
            scale = max(1.0, float(np.max(np.abs(v))))
            if v.shape[0] == 2 and np.allclose(v[0], v[1], atol=1e-12 * scale):
                raise ValueError("segment endpoints coincide")
            if v.shape[0] >= 3:
                nxt = np.roll(v, -1, axis=0)
                prv = np.roll(v, 1, axis=0)
                cross = (v[:, 0] - prv[:, 0]) * (nxt[:, 1] - v[:, 1]) - (
                    v[:, 1] - prv[:, 1]
                ) * (nxt[:, 0] - v[:, 0])
                if np.any(cross <= 1e-12 * scale**2):
                    raise ValueError("vertices must be in strictly convex counterclockwise position")
        v.setflags(write=False)
        object.__setattr__(self, "vertices", v)

    def __len__(self):
        return self.vertices.shape[0]


def convex_hull_2d(points) -> Polygon2D:
    """Minimal convex polygon containing the points (monotone chain);
    collinear input degenerates to a segment, a single point to a point."""
    pts = np.atleast_2d(np.asarray(points, dtype=float))
    if pts.shape[0] < 1 or pts.shape[1] != 2:
        raise ValueError("need at least one 2-d point")
    uniq = np.unique(pts, axis=0)
    order = np.lexsort((uniq[:, 1], uniq[:, 0]))
    p = uniq[order]
    if p.shape[0] == 1:
        return Polygon2D(p)
    scale = max(1.0, float(np.max(np.abs(p))))
    tol = 1e-12 * scale**2

    def half(points_iter):
        chain: list[np.ndarray] = []
        for q in points_iter:
            while len(chain) >= 2:
                a, b = chain[-2], chain[-1]
                if (b[0] - a[0]) * (q[1] - a[1]) - (b[1] - a[1]) * (q[0] - a[0]) <= tol:
                    chain.pop()
                else:
                    break
            chain.append(q)
        return chain

    lower = half(p)
    upper = half(p[::-1])
    hull = lower[:-1] + upper[:-1]
    if len(hull) < 2:
        hull = [p[0], p[-1]]
    return Polygon2D(np.array(hull))


def polygon_perimeter(p: Polygon2D) -> float:
    """Boundary length; a degenerate segment is traversed on both sides, so
    its perimeter is twice its length."""
    v = p.vertices
    if len(p) == 1:
        return 0.0
    if len(p) == 2:
        return 2.0 * float(np.linalg.norm(v[1] - v[0]))
    return float(np.sum(np.linalg.norm(np.roll(v, -1, axis=0) - v, axis=1)))


def polygon_area(p: Polygon2D) -> float:
    v = p.vertices
    if len(p) <= 2:
        return 0.0
    x, y = v[:, 0], v[:, 1]
    return 0.5 * float(np.abs(np.dot(x, np.roll(y, -1)) - np.dot(y, np.roll(x, -1))))


def _polygon_support(p: Polygon2D, u: np.ndarray) -> np.ndarray:
    return np.max(p.vertices @ u.T, axis=0)


def polygon_mixed_area(p: Polygon2D, q: Polygon2D) -> float:
    """Mixed area V(p, q) with V(p, p) = area(p), via the edge-normal support
    sum over q; degenerate segments contribute both sides."""
    v = q.vertices
    if len(q) == 1:
        return 0.0
    if len(q) == 2:
        edges = np.array([v[1] - v[0], v[0] - v[1]])
    else:
        edges = np.roll(v, -1, axis=0) - v
    lengths = np.linalg.norm(edges, axis=1)
    normals = np.stack([edges[:, 1], -edges[:, 0]], axis=1) / lengths[:, None]
    return 0.5 * float(np.sum(_polygon_support(p, normals) * lengths))


# ---------------------------------------------------------------------------
# Ellipsoids
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Ellipsoid:
    """Ellipsoid in support-function form h(x) = sqrt(x' M x), M symmetric PSD."""

    dim: int
    M: np.ndarray

    def __post_init__(self):
        M = np.asarray(self.M, dtype=float)
        if M.shape != (self.dim, self.dim):
            raise ValueError(f"matrix must be {self.dim}x{self.dim}")
        scale = max(1.0, float(np.max(np.abs(M))))
        if np.max(np.abs(M - M.T)) > 1e-12 * scale:
            raise ValueError("matrix must be symmetric")
        if np.min(np.linalg.eigvalsh(M)) < -1e-12 * scale:
            raise ValueError("matrix must be positive semidefinite")
        M = 0.5 * (M + M.T)
        M.setflags(write=False)
        object.__setattr__(self, "M", M)

    def support(self, x) -> np.ndarray:
        x = np.atleast_2d(np.asarray(x, dtype=float))
        return np.sqrt(np.maximum(np.einsum("ki,ij,kj->k", x, self.M, x), 0.0))

    def is_singular(self, tol: float = 1e-12) -> bool:
        eig = np.linalg.eigvalsh(self.M)
        return bool(np.min(eig) <= tol * max(1.0, np.max(eig)))


def newton_ellipsoid(s) -> Ellipsoid:
    """Second-moment ellipsoid of the spectrum: M = (1/#L) sum of l l'."""
    if isinstance(s, Spectrum1D):
        s = SpectrumND(1, tuple((p,) for p in s.points))
    pts = s.as_array()
    M = pts.T @ pts / pts.shape[0]
    return Ellipsoid(s.dim, M)


def unit_ball_volume(n: int) -> float:
    return math.pi ** (n / 2.0) / math.gamma(n / 2.0 + 1.0)


def ellipsoid_volume(e: Ellipsoid) -> float:
    """omega_n sqrt(det M); zero for singular forms."""
    det = float(np.linalg.det(e.M))
    if det <= 0.0:
        return 0.0
    return unit_ball_volume(e.dim) * math.sqrt(det)


def _support_and_deriv(e: Ellipsoid, theta: np.ndarray):
    u = np.stack([np.cos(theta), np.sin(theta)], axis=1)
    du = np.stack([-np.sin(theta), np.cos(theta)], axis=1)
    h = np.sqrt(np.einsum("ki,ij,kj->k", u, e.M, u))
    hp = np.einsum("ki,ij,kj->k", du, e.M, u) / h
    return h, hp


def mixed_area(a: Ellipsoid, b: Ellipsoid) -> float:
    """V(a, b) = (area(a + b) - area(a) - area(b)) / 2 with areas from the
    support quadrature area = (1/2) int (h^2 - h'^2); planar bodies only."""
    if a.dim != 2 or b.dim != 2:
        raise ValueError("mixed area is defined here for dimension 2 only")
    if a.is_singular() or b.is_singular():
        raise ValueError("mixed area requires nonsingular forms")
    theta = np.arange(QUAD_NODES) * (2.0 * math.pi / QUAD_NODES)
    ha, hpa = _support_and_deriv(a, theta)
    hb, hpb = _support_and_deriv(b, theta)

    def area(h, hp):
        return 0.5 * float(np.mean(h**2 - hp**2)) * 2.0 * math.pi

    return 0.5 * (area(ha + hb, hpa + hpb) - area(ha, hpa) - area(hb, hpb))


def spectrum_hull_volume(s: SpectrumND) -> float:
    """Volume of the convex hull of the spectrum, n <= 2."""
    pts = s.as_array()
    if s.dim == 1:
        return float(np.max(pts) - np.min(pts))
    if s.dim == 2:
        return polygon_area(convex_hull_2d(pts))
    raise ValueError("hull volume implemented for n <= 2 only")


def spectrum_hull(s: SpectrumND) -> Polygon2D:
    if s.dim != 2:
        raise ValueError("2-d spectra only")
    return convex_hull_2d(s.as_array())


# ---------------------------------------------------------------------------
# The circle embedding kappa into the unit sphere of Trig(spectrum)
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SphericalCurve:
    """Closed parametric curve on the unit sphere of R^dim.

    `point` and `velocity` accept scalar or array parameters; `degree` is the
    oscillation bandwidth used to size counting grids.
    """

    dim: int
    point: Callable[[np.ndarray], np.ndarray]
    velocity: Callable[[np.ndarray], np.ndarray]
    degree: int = 1

    def __post_init__(self):
        t = np.linspace(0.0, 2.0 * math.pi, 257)
        norms = np.linalg.norm(self.point(t), axis=0)
        if np.max(np.abs(norms - 1.0)) > 1e-10:
            raise ValueError("curve must lie on the unit sphere")


def great_circle(dim: int) -> SphericalCurve:
    if dim < 2:
        raise ValueError("need dimension at least 2")

    def point(t):
        t = np.atleast_1d(np.asarray(t, dtype=float))
        out = np.zeros((dim, t.size))
        out[0] = np.cos(t)
        out[1] = np.sin(t)
        return out

    def velocity(t):
        t = np.atleast_1d(np.asarray(t, dtype=float))
        out = np.zeros((dim, t.size))
        out[0] = -np.sin(t)
        out[1] = np.cos(t)
        return out

    return SphericalCurve(dim, point, velocity, degree=1)


def kappa_curve(s: Spectrum1D) -> SphericalCurve:
    """theta -> coordinates of the reproducing vector F_theta / sqrt(#L) on the
    orthonormal basis {1, sqrt2 cos(l t), sqrt2 sin(l t)}."""
    if not is_centrally_symmetric(s):
        raise ValueError("spectrum must be centrally symmetric")
    n = len(s)
    pos = np.array(s.positive, dtype=float)
    has_zero = s.has_zero
    root_n = math.sqrt(n)

    def point(t):
        t = np.atleast_1d(np.asarray(t, dtype=float))
        rows = []
        if has_zero:
            rows.append(np.ones_like(t))
        for lam in pos:
            rows.append(SQRT2 * np.cos(lam * t))
            rows.append(SQRT2 * np.sin(lam * t))
        return np.stack(rows) / root_n

    def velocity(t):
        t = np.atleast_1d(np.asarray(t, dtype=float))
        rows = []
        if has_zero:
            rows.append(np.zeros_like(t))
        for lam in pos:
            rows.append(-SQRT2 * lam * np.sin(lam * t))
            rows.append(SQRT2 * lam * np.cos(lam * t))
        return np.stack(rows) / root_n

    return SphericalCurve(n, point, velocity, degree=max(1, degree(s)))


def kappa_speed(s: Spectrum1D, theta: float) -> float:
    """Norm of the curve velocity at theta (constant over the circle)."""
    curve = kappa_curve(s)
    return float(np.linalg.norm(curve.velocity(np.array([theta]))[:, 0]))


def kappa_length(s: Spectrum1D) -> float:
    """Curve length by trapezoid quadrature of the velocity norm."""
    curve = kappa_curve(s)
    t = np.arange(QUAD_NODES) * (2.0 * math.pi / QUAD_NODES)
    speeds = np.linalg.norm(curve.velocity(t), axis=0)
    return float(np.mean(speeds)) * 2.0 * math.pi


def crofton_estimate(K: SphericalCurve, trials: int, seed: int) -> tuple[float, float]:
    """Monte Carlo mean of hyperplane intersection counts against standard
    Gaussian normals; unbiased for length(K)/pi."""
    from .zerocount import hyperplane_curve_intersections

    if trials < 1:
        raise ValueError("need at least one trial")
    counts = []
    for trial in range(trials):
        xi = RngStream(seed, trial).generator().standard_normal(K.dim)
        res = hyperplane_curve_intersections(K, xi)
        if res.certified:
            counts.append(res.count)
    arr = np.array(counts, dtype=float)
    mean = float(arr.mean())
    stderr = float(arr.std(ddof=1) / math.sqrt(arr.size)) if arr.size > 1 else 0.0
    return mean, stderr


# ---------------------------------------------------------------------------
# Polytopes in C^n and their pseudovolume
# ---------------------------------------------------------------------------

AFFINE_TOL = 1e-9     # membership tolerance for affine hulls (relative)
SUPPORT_TOL = 1e-9    # slack when testing that a maximum is attained on a face


def _complex_to_real(vertices, n: int) -> np.ndarray:
    """Rows of complex length-n vectors to rows of interleaved real 2n-vectors."""
    arr = np.asarray(vertices)
    if np.iscomplexobj(arr):
        arr = np.atleast_2d(arr)
        out = np.empty((arr.shape[0], 2 * n))
        out[:, 0::2] = arr.real
        out[:, 1::2] = arr.imag
        return out
    arr = np.atleast_2d(np.asarray(arr, dtype=float))
    if arr.shape[1] != 2 * n:
        raise ValueError(f"real vertex rows must have length {2 * n}")
    return arr


def _multiply_by_i(vectors: np.ndarray) -> np.ndarray:
    """Apply complex multiplication by i on interleaved (re, im) coordinates."""
    out = np.empty_like(vectors)
    out[..., 0::2] = -vectors[..., 1::2]
    out[..., 1::2] = vectors[..., 0::2]
    return out


def _affine_frame(points: np.ndarray):
    """Origin and orthonormal direction basis of the affine hull."""
    origin = points[0]
    diffs = points[1:] - origin
    if diffs.shape[0] == 0:
        return origin, np.zeros((points.shape[1], 0))
    u, sv, _ = np.linalg.svd(diffs.T, full_matrices=False)
    scale = max(1.0, float(sv[0]) if sv.size else 1.0)
    rank = int(np.sum(sv > AFFINE_TOL * scale))
    return origin, u[:, :rank]


def _orth_complement(basis: np.ndarray, ambient: int) -> np.ndarray:
    if basis.shape[1] == 0:
        return np.eye(ambient)
    u, sv, _ = np.linalg.svd(basis, full_matrices=True)
    return u[:, basis.shape[1]:]


@dataclass(frozen=True)
class ComplexPolytope:
    """Convex polytope given by vertices in C^n, stored as real 2n-vectors.

    `faces`, when supplied, lists vertex-index subsets that must each be the
    intersection of the polytope with a supporting hyperplane; they are
    validated against the same support test used for enumeration.
    """

    n: int
    vertices: np.ndarray
    faces: Optional[tuple[tuple[int, ...], ...]] = None

    def __post_init__(self):
        v = _complex_to_real(self.vertices, self.n)
        if v.shape[0] < 1:
            raise ValueError("need at least one vertex")
        v.setflags(write=False)
        object.__setattr__(self, "vertices", v)
        if self.faces is not None:
            normalized = tuple(tuple(sorted(int(i) for i in f)) for f in self.faces)
            object.__setattr__(self, "faces", normalized)
            for f in normalized:
                if not _is_face(v, f):
                    raise ValueError(f"listed vertex set {f} is not a face")

    @classmethod
    def from_vertex_rows(cls, rows: Sequence[Sequence[Sequence[float]]]) -> "ComplexPolytope":
        """Build from the JSON form: one row per vertex, each a list of
        [re, im] pairs."""
        comp = np.array([[complex(re, im) for re, im in row] for row in rows])
        return cls(comp.shape[1], comp)


def _affine_closure(vertices: np.ndarray, subset: Sequence[int]) -> tuple[int, ...]:
    pts = vertices[list(subset)]
    origin, basis = _affine_frame(pts)
    scale = max(1.0, float(np.max(np.abs(vertices))))
    diffs = vertices - origin
    inplane = diffs - (diffs @ basis) @ basis.T
    member = np.linalg.norm(inplane, axis=1) <= AFFINE_TOL * scale
    return tuple(int(i) for i in np.nonzero(member)[0])


def _is_face(vertices: np.ndarray, subset: Sequence[int]) -> bool:
    """Support test: some functional constant on the subset is strictly larger
    there than at every other vertex (Gordan-style, exact for spans <= 2)."""
    subset = tuple(subset)
    if _affine_closure(vertices, subset) != tuple(sorted(subset)):
        return False
    pts = vertices[list(subset)]
    origin, basis = _affine_frame(pts)
    comp = _orth_complement(basis, vertices.shape[1])
    if comp.shape[1] == 0:
        return False  # affinely spanning subsets admit no supporting functional
    outside = [i for i in range(vertices.shape[0]) if i not in subset]
    if not outside:
        return True
    q = (vertices[outside] - origin) @ comp
    scale = max(1.0, float(np.max(np.abs(q))))
    if comp.shape[1] == 1:
        col = q[:, 0]
        return bool(np.all(col < -AFFINE_TOL * scale) or np.all(col > AFFINE_TOL * scale))
    if comp.shape[1] == 2:
        ang = np.sort(np.arctan2(q[:, 1], q[:, 0]))
        gaps = np.diff(np.concatenate([ang, [ang[0] + 2.0 * math.pi]]))
        return bool(np.max(gaps) > math.pi + 1e-10)
    # spans beyond 2 do not occur for the supported n <= 2 face dimension
    raise ValueError("unsupported complement dimension")


def _enumerate_n_faces(poly: ComplexPolytope) -> list[tuple[int, ...]]:
    """All faces of real dimension n, by brute force over small vertex
    subsets with affine closure; exact support tests, no hull library."""
    if poly.faces is not None:
        keep = []
        for f in poly.faces:
            _, basis = _affine_frame(poly.vertices[list(f)])
            if basis.shape[1] == poly.n:
                keep.append(tuple(sorted(f)))
        return keep
    v = poly.vertices
    k = v.shape[0]
    n = poly.n
    _, whole_basis = _affine_frame(v)
    if whole_basis.shape[1] == n:
        return [tuple(range(k))]
    if whole_basis.shape[1] < n:
        raise ValueError("polytope has no faces of the required dimension")
    found: set[tuple[int, ...]] = set()
    from itertools import combinations

    for subset in combinations(range(k), n + 1):
        pts = v[list(subset)]
        _, basis = _affine_frame(pts)
        if basis.shape[1] != n:
            continue
        closed = _affine_closure(v, subset)
        if closed in found:
            continue
        _, cbasis = _affine_frame(v[list(closed)])
        if cbasis.shape[1] != n:
            continue
        if _is_face(v, closed):
            found.add(closed)
    return sorted(found)


def _face_volume(poly: ComplexPolytope, face: tuple[int, ...]) -> float:
    pts = poly.vertices[list(face)]
    origin, basis = _affine_frame(pts)
    coords = (pts - origin) @ basis
    if poly.n == 1:
        return float(np.max(coords[:, 0]) - np.min(coords[:, 0]))
    hull = convex_hull_2d(coords)
    return polygon_area(hull)


def _face_cosine(poly: ComplexPolytope, face: tuple[int, ...]) -> float:
    """|det(Q' P)| between the face normal space and i times its tangent."""
    pts = poly.vertices[list(face)]
    _, tangent = _affine_frame(pts)
    normal = _orth_complement(tangent, poly.vertices.shape[1])
    itangent = _multiply_by_i(tangent.T).T
    q, _ = np.linalg.qr(itangent)
    return float(abs(np.linalg.det(normal.T @ q)))


def _attains_on_face(vertices: np.ndarray, face: tuple[int, ...], directions: np.ndarray) -> np.ndarray:
    """For each direction row, whether its maximum over all vertices is
    attained at every vertex of the face (relative slack SUPPORT_TOL)."""
    dots = directions @ vertices.T
    overall = np.max(dots, axis=1)
    on_face = np.min(dots[:, list(face)], axis=1)
    return on_face >= overall - SUPPORT_TOL * (1.0 + np.abs(overall))


def exterior_angle(
    poly: ComplexPolytope,
    face: tuple[int, ...],
    angle_samples: int,
    gen: np.random.Generator,
) -> tuple[float, float]:
    """Normalized angle of the dual cone inside the face's normal space.

    One-dimensional normal spans are enumerated exactly (two directions);
    two-dimensional spans are sampled uniformly on the circle, returning the
    binomial standard error alongside the estimate.
    """
    pts = poly.vertices[list(face)]
    _, tangent = _affine_frame(pts)
    normal = _orth_complement(tangent, poly.vertices.shape[1])
    d = normal.shape[1]
    if d == 1:
        dirs = np.vstack([normal[:, 0], -normal[:, 0]])
        hits = _attains_on_face(poly.vertices, face, dirs)
        return float(np.sum(hits)) / 2.0, 0.0
    if d == 2:
        phi = gen.uniform(0.0, 2.0 * math.pi, size=angle_samples)
        dirs = np.outer(np.cos(phi), normal[:, 0]) + np.outer(np.sin(phi), normal[:, 1])
        hits = _attains_on_face(poly.vertices, face, dirs)
        p = float(np.mean(hits))
        return p, math.sqrt(max(p * (1.0 - p), 0.0) / angle_samples)
    raise ValueError("normal spans beyond dimension 2 are unsupported")


def exterior_angle_exact(poly: ComplexPolytope, face: tuple[int, ...]) -> float:
    """Closed-form angle via circular-arc intersection; cross-check oracle for
    the Monte Carlo estimator."""
    pts = poly.vertices[list(face)]
    origin, tangent = _affine_frame(pts)
    normal = _orth_complement(tangent, poly.vertices.shape[1])
    outside = [i for i in range(poly.vertices.shape[0]) if i not in face]
    if not outside:
        return 1.0
    q = (poly.vertices[outside] - origin) @ normal
    d = normal.shape[1]
    if d == 1:
        col = q[:, 0]
        scale = max(1.0, float(np.max(np.abs(col))))
        a = 0.0
        if np.all(col < AFFINE_TOL * scale):
            a += 0.5
        if np.all(col > -AFFINE_TOL * scale):
            a += 0.5
        return a
    if d == 2:
        # feasible phi avoids, for each outside vertex, the open half-circle
        # where that vertex beats the face
        ang = np.arctan2(q[:, 1], q[:, 0])
        intervals = np.stack([ang - math.pi / 2.0, ang + math.pi / 2.0], axis=1)
        events = []
        for lo, hi in intervals:
            lo = lo % (2.0 * math.pi)
            hi = hi % (2.0 * math.pi)
            if lo <= hi:
                events.append((lo, hi))
            else:
                events.append((lo, 2.0 * math.pi))
                events.append((0.0, hi))
        events.sort()
        covered = 0.0
        cur_lo, cur_hi = -1.0, -1.0
        for lo, hi in events:
            if lo > cur_hi:
                covered += max(0.0, cur_hi - cur_lo)
                cur_lo, cur_hi = lo, hi
            else:
                cur_hi = max(cur_hi, hi)
        covered += max(0.0, cur_hi - cur_lo)
        return 1.0 - covered / (2.0 * math.pi)
    raise ValueError("normal spans beyond dimension 2 are unsupported")


@dataclass(frozen=True)
class FaceContribution:
    indices: tuple[int, ...]
    volume: float
    angle: float
    angle_stderr: float
    cosine: float


@dataclass(frozen=True)
class PseudovolumeResult:
    value: float
    stderr: float
    faces: tuple[FaceContribution, ...]


def pseudovolume_detail(
    poly: ComplexPolytope, angle_samples: int = ANGLE_SAMPLES, seed: int = 0
) -> PseudovolumeResult:
    if poly.n > 2:
        raise ValueError("pseudovolume implemented for n <= 2 only")
    if angle_samples < 1:
        raise ValueError("need at least one angle sample")
    faces = _enumerate_n_faces(poly)
    rows = []
    total = 0.0
    var = 0.0
    for j, face in enumerate(faces):
        vol = _face_volume(poly, face)
        cos = _face_cosine(poly, face)
        gen = RngStream(seed, j).generator()
        ang, err = exterior_angle(poly, face, angle_samples, gen)
        rows.append(FaceContribution(face, vol, ang, err, cos))
        total += cos * ang * vol
        var += (cos * vol * err) ** 2
    return PseudovolumeResult(total, math.sqrt(var), tuple(rows))


def pseudovolume(poly: ComplexPolytope, angle_samples: int = ANGLE_SAMPLES, seed: int = 0) -> float:
    """Sum of cosine * exterior-angle * volume over all n-dimensional faces."""
    return pseudovolume_detail(poly, angle_samples, seed).value
