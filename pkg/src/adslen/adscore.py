"""The 2x2-matrix model of anti-de Sitter 3-space.

SL(2,R) sits in the 4-dimensional matrix space as the locus of norm -1
for the signature-(2,2) form <X,Y> = -tr(X adj(Y))/2, which satisfies
<X,X> = -det X.  Isometries act by (A, B).X = A X B^{-1}.  Boundary
points are rank-one matrices, identified with pairs of points of RP^1
through column and kernel directions.
"""

import math

import numpy as np

from .errors import (
    DegenerateConfigurationError,
    DomainError,
    GeometryError,
    OrthogonalityError,
    RankError,
    SeparationError,
)
from .paracomplex import ProjectivePoint

CAUSAL_TOL = 1e-10

# <vec(X), FORM_MATRIX vec(Y)> with row-major flattening (00, 01, 10, 11)
FORM_MATRIX = -0.5 * np.array([
    [0.0, 0.0, 0.0, 1.0],
    [0.0, 0.0, -1.0, 0.0],
    [0.0, -1.0, 0.0, 0.0],
    [1.0, 0.0, 0.0, 0.0],
])


def ads_form(x, y):
    """Bilinear form -tr(X adj(Y))/2; equals -det X on the diagonal."""
    x = _mat(x)
    y = _mat(y)
    return -0.5 * (x[0, 0] * y[1, 1] + x[1, 1] * y[0, 0]
                   - x[0, 1] * y[1, 0] - x[1, 0] * y[0, 1])


def _mat(obj):
    if isinstance(obj, (AdsPoint, BoundaryPointAds)):
        return obj.m
    if isinstance(obj, AdsVector):
        return obj.v
    return np.asarray(obj, dtype=float)


class AdsPoint:
    """Point of the model: 2x2 matrix of norm -1, up to global sign."""

    __slots__ = ("m",)

    def __init__(self, m):
        m = np.asarray(m, dtype=float)
        n = ads_form(m, m)
        if n >= -1e-14:
            raise GeometryError("not a point of the model: <m,m> = %.6g >= 0" % n)
        m = m / math.sqrt(-n)
        if m[0, 0] + m[1, 1] < 0.0 or (m[0, 0] + m[1, 1] == 0.0 and _first_nonzero(m) < 0.0):
            m = -m
        self.m = m
        self.m.setflags(write=False)

    @classmethod
    def identity(cls):
        return cls(np.eye(2))

    def translate(self, a, b):
        """Isometry image A m B^{-1}."""
        return AdsPoint(a @ self.m @ np.linalg.inv(b))

    def __repr__(self):
        return "AdsPoint(%r)" % (self.m.tolist(),)


def _first_nonzero(m):
    for v in m.ravel():
        if v != 0.0:
            return v
    return 1.0


class AdsVector:
    """Unit tangent vector: matrix v with <base, v> = 0 and <v,v> = +-1."""

    __slots__ = ("base", "v", "norm_sign")

    def __init__(self, base, v):
        if not isinstance(base, AdsPoint):
            base = AdsPoint(base)
        v = np.asarray(v, dtype=float)
        ip = ads_form(base.m, v)
        if abs(ip) > 1e-10:
            raise OrthogonalityError("tangent not orthogonal to base: <x,v> = %.3e" % ip)
        n = ads_form(v, v)
        if abs(abs(n) - 1.0) > 1e-10:
            raise OrthogonalityError("tangent not unit: <v,v> = %.12g" % n)
        self.base = base
        self.v = v / math.sqrt(abs(n))
        self.norm_sign = 1 if n > 0 else -1

    def __repr__(self):
        return "AdsVector(%r, %r)" % (self.base, self.v.tolist())


def geodesic_point(start, t):
    """Point at parameter t on the geodesic with the given initial data.

    Spacelike directions give cosh/sinh combinations, timelike ones
    cos/sin (period pi in the projective model).
    """
    if start.norm_sign > 0:
        m = math.cosh(t) * start.base.m + math.sinh(t) * start.v
    else:
        m = math.cos(t) * start.base.m + math.sin(t) * start.v
    return AdsPoint(m)


def classify_separation(x, y):
    """'spacelike', 'timelike' or 'lightlike-or-equal' by |<x,y>| against 1."""
    a = abs(ads_form(x, y))
    if a > 1.0 + CAUSAL_TOL:
        return "spacelike"
    if a < 1.0 - CAUSAL_TOL:
        return "timelike"
    return "lightlike-or-equal"


def spacelike_distance(x, y):
    """arccosh |<x,y>| for a spacelike pair."""
    a = abs(ads_form(x, y))
    if classify_separation(x, y) != "spacelike":
        raise SeparationError("pair is not spacelike separated: |<x,y>| = %.12g" % a)
    return math.acosh(a)


def timelike_distance(x, y):
    """arccos |<x,y>| if the pair is timelike separated, else 0."""
    a = abs(ads_form(x, y))
    if a >= 1.0:
        return 0.0
    return math.acos(a)


class BoundaryPointAds:
    """Ideal boundary point: rank-one matrix up to scale."""

    __slots__ = ("m",)

    RANK_TOL = 1e-10

    def __init__(self, m):
        m = np.asarray(m, dtype=float)
        scale = np.abs(m).max()
        if scale == 0.0:
            raise RankError("zero matrix is not a boundary point")
        m = m / scale
        d = m[0, 0] * m[1, 1] - m[0, 1] * m[1, 0]
        if abs(d) > self.RANK_TOL:
            raise RankError("matrix has rank 2: det = %.3e after scaling" % d)
        self.m = m
        self.m.setflags(write=False)

    def translate(self, a, b):
        return BoundaryPointAds(a @ self.m @ np.linalg.inv(b))

    def __repr__(self):
        return "BoundaryPointAds(%r)" % (self.m.tolist(),)


def boundary_pair(bp):
    """(image line, kernel line) of a rank-one matrix, as RP^1 points."""
    m = bp.m if isinstance(bp, BoundaryPointAds) else BoundaryPointAds(bp).m
    cols = m.T
    im = cols[0] if cols[0] @ cols[0] >= cols[1] @ cols[1] else cols[1]
    rows = m
    w = rows[0] if rows[0] @ rows[0] >= rows[1] @ rows[1] else rows[1]
    ker = np.array([w[1], -w[0]])
    return ProjectivePoint(im), ProjectivePoint(ker)


def pair_to_boundary(im, ker):
    """Rank-one matrix with the given image and kernel lines."""
    if not isinstance(im, ProjectivePoint):
        im = ProjectivePoint.from_affine(im)
    if not isinstance(ker, ProjectivePoint):
        ker = ProjectivePoint.from_affine(ker)
    k = ker.v
    m = np.outer(im.v, np.array([-k[1], k[0]]))
    return BoundaryPointAds(m)


class SpacelikeLine:
    """Spacelike geodesic through two boundary points.

    Lifts are rescaled so <lp, lm> = -1/2; then point(t) = e^t lp + e^-t lm
    is a unit-speed parametrization moving toward lp.
    """

    __slots__ = ("lp", "lm")

    def __init__(self, plus, minus):
        mp = plus.m if isinstance(plus, BoundaryPointAds) else BoundaryPointAds(plus).m
        mm = minus.m if isinstance(minus, BoundaryPointAds) else BoundaryPointAds(minus).m
        s = ads_form(mp, mm)
        if abs(s) < 1e-12:
            raise DegenerateConfigurationError(
                "boundary points do not span a spacelike line (<lp,lm> = %.3e)" % s)
        alpha = 1.0 / math.sqrt(2.0 * abs(s))
        self.lp = alpha * mp
        self.lm = (-alpha if s > 0 else alpha) * mm
        self.lp.setflags(write=False)
        self.lm.setflags(write=False)

    @classmethod
    def from_factor_endpoints(cls, plus_pair, minus_pair):
        """Line through the boundary points (left, right) and (left, right)."""
        return cls(pair_to_boundary(*plus_pair), pair_to_boundary(*minus_pair))

    def point(self, t):
        return AdsPoint(math.exp(t) * self.lp + math.exp(-t) * self.lm)

    def point_matrix(self, t):
        return math.exp(t) * self.lp + math.exp(-t) * self.lm

    def tangent(self, t):
        m = math.exp(t) * self.lp - math.exp(-t) * self.lm
        return AdsVector(self.point(t), m)

    def sample_matrices(self, ts):
        """Stack of normalized points at parameters ts, shape (n, 2, 2)."""
        ts = np.asarray(ts, dtype=float)
        pts = (np.exp(ts)[:, None, None] * self.lp[None]
               + np.exp(-ts)[:, None, None] * self.lm[None])
        return pts

    def __repr__(self):
        return "SpacelikeLine(%r, %r)" % (self.lp.tolist(), self.lm.tolist())


def project_to_line(y, line):
    """Orthogonal projection of a point onto a spacelike line.

    Returns (foot, m) where m = min over the line of -<y, .> for the lift
    of y with both <y, lp>, <y, lm> negative; m is cos of the timelike
    distance when the segment [y, foot] is timelike, cosh of the
    spacelike distance when spacelike.
    """
    ym = y.m if isinstance(y, AdsPoint) else AdsPoint(y).m
    qp = ads_form(ym, line.lp)
    qm = ads_form(ym, line.lm)
    if qp > 0.0:
        ym = -ym
        qp, qm = -qp, -qm
    if not (qp < -1e-12 and qm < -1e-12):
        raise DegenerateConfigurationError(
            "rays from the point to the line's endpoints are not both spacelike "
            "(<y,lp> = %.3e, <y,lm> = %.3e)" % (qp, qm))
    m_val = 2.0 * math.sqrt(qp * qm)
    foot = AdsPoint(math.sqrt(qm / qp) * line.lp + math.sqrt(qp / qm) * line.lm)
    return foot, m_val


def move_endpoints(x, y, v, w, t):
    """Norm -<p,q> after rotating both endpoints of a spacelike segment
    a timelike angle t along orthogonal unit normals.

    Checks the closed form cos(t)^2 cosh d(x,y) + sin(t)^2 cosh d(v,w)
    and returns the value.
    """
    xm, ym = _mat(x), _mat(y)
    vm = v.v if isinstance(v, AdsVector) else np.asarray(v, dtype=float)
    wm = w.v if isinstance(w, AdsVector) else np.asarray(w, dtype=float)
    for name, base, tang in (("v", xm, vm), ("w", ym, wm)):
        if abs(ads_form(base, tang)) > 1e-9:
            raise OrthogonalityError("%s is not tangent at its base point" % name)
        if abs(ads_form(tang, tang) + 1.0) > 1e-9:
            raise OrthogonalityError("%s is not unit timelike" % name)
    if abs(ads_form(xm, wm)) > 1e-9 or abs(ads_form(ym, vm)) > 1e-9:
        raise OrthogonalityError("normals are not orthogonal to the segment")
    cxy = -ads_form(xm, ym)
    cvw = -ads_form(vm, wm)
    if cxy < 1.0 - 1e-10 or cvw < 1.0 - 1e-10:
        raise OrthogonalityError("lifts are not consistently oriented spacelike pairs")
    p = math.cos(t) * xm + math.sin(t) * vm
    q = math.cos(t) * ym + math.sin(t) * wm
    val = -ads_form(p, q)
    expected = math.cos(t) ** 2 * cxy + math.sin(t) ** 2 * cvw
    if abs(val - expected) > 1e-10 * max(1.0, abs(expected)):
        raise GeometryError("bilinear expansion failed: %.15g vs %.15g" % (val, expected))
    return val


def dual_point(mats):
    """Point dual to the spacelike plane spanned by three matrices.

    The orthogonal complement of the span with respect to the form; dual
    of a point x recovers the plane as {<x, .> = 0}.
    """
    rows = np.array([np.asarray(m, dtype=float).reshape(4) @ FORM_MATRIX for m in mats])
    _, s, vt = np.linalg.svd(rows)
    if s[-1] > 1e-9 * s[0]:
        pass  # rows are rank 3 as expected; nothing to do
    v = vt[-1].reshape(2, 2)
    return AdsPoint(v)


class AnalysisConstants:
    """Constants (kappa, c0) of the hyperbolic-trigonometric comparison bounds.

    kappa = -log(cos(b0)^2 + sin(b0)^2 / cosh(a0)) makes
    cos(b)^2 cosh(a) + sin(b)^2 cosh(a - a0) <= cosh(a - kappa) for all
    a >= a0, b in [b0, pi/2]; c0 = 1/cosh(a0) makes c cosh(a) >=
    cosh(a - eta(c)) for c in [c0, 1], a >= a0.
    """

    __slots__ = ("a0", "b0", "kappa", "c0")

    def __init__(self, a0, b0):
        if not a0 > 0.0:
            raise DomainError("a0 must be positive")
        if not (0.0 < b0 <= math.pi / 2.0):
            raise DomainError("b0 must lie in (0, pi/2]")
        self.a0 = float(a0)
        self.b0 = float(b0)
        self.c0 = 1.0 / math.cosh(a0)
        self.kappa = -math.log(math.cos(b0) ** 2 + math.sin(b0) ** 2 * self.c0)

    def __repr__(self):
        return ("AnalysisConstants(a0=%g, b0=%g, kappa=%g, c0=%g)"
                % (self.a0, self.b0, self.kappa, self.c0))


def analysis_constants(a0, b0):
    return AnalysisConstants(a0, b0)


def eta(c):
    """arccosh(1/c) for c in (0, 1]."""
    if not (0.0 < c <= 1.0):
        raise DomainError("eta requires c in (0, 1], got %.6g" % c)
    return math.acosh(1.0 / c)
