"""The commutative ring B = R[tau]/(tau^2 - 1) and projective cross-ratios.

Elements x + tau*y split through the idempotents e_l = (1+tau)/2,
e_r = (1-tau)/2 into a pair of real coordinates (l, r) = (x+y, x-y) on
which every ring operation acts componentwise.  Points of RP^1 are kept
as homogeneous pairs so cross-ratios reduce to 2x2 determinants and the
point at infinity needs no special case.
"""

import math

import numpy as np

from .errors import DegenerateConfigurationError, DomainError, NonInvertibleError

# Strict-inequality tolerance for membership in B+ (log's domain).
B_PLUS_TOL = 1e-12

# Denominator threshold below which a real cross-ratio is reported infinite.
CROSS_RATIO_TOL = 1e-14


class ParaComplex:
    """Element re + tau*ta of the ring B, immutable."""

    __slots__ = ("re", "ta")

    def __init__(self, re, ta=0.0):
        object.__setattr__(self, "re", float(re))
        object.__setattr__(self, "ta", float(ta))

    def __setattr__(self, name, value):
        raise AttributeError("ParaComplex values are immutable")

    @classmethod
    def from_lr(cls, l, r):
        """Build from idempotent coordinates: l*e_l + r*e_r."""
        return cls((l + r) / 2.0, (l - r) / 2.0)

    @property
    def l(self):
        return self.re + self.ta

    @property
    def r(self):
        return self.re - self.ta

    def conj(self):
        return ParaComplex(self.re, -self.ta)

    def norm_sq(self):
        """Pseudo-norm z*conj(z) = re^2 - ta^2 = l*r."""
        return self.re * self.re - self.ta * self.ta

    def inverse(self):
        n = self.norm_sq()
        scale = max(self.re * self.re + self.ta * self.ta, 1.0)
        if abs(n) <= B_PLUS_TOL * scale:
            raise NonInvertibleError(
                "zero divisor: |z|^2 = %.3e is not invertible" % n)
        return ParaComplex(self.re / n, -self.ta / n)

    def in_b_plus(self):
        """Strict membership in B+ = {re > 0 and norm_sq > 0}."""
        scale = max(abs(self.re), abs(self.ta), 1.0)
        return self.re > B_PLUS_TOL * scale and self.norm_sq() > B_PLUS_TOL * scale * scale

    def __add__(self, other):
        other = _coerce(other)
        return ParaComplex(self.re + other.re, self.ta + other.ta)

    __radd__ = __add__

    def __neg__(self):
        return ParaComplex(-self.re, -self.ta)

    def __sub__(self, other):
        other = _coerce(other)
        return ParaComplex(self.re - other.re, self.ta - other.ta)

    def __rsub__(self, other):
        return _coerce(other) - self

    def __mul__(self, other):
        other = _coerce(other)
        return ParaComplex(self.re * other.re + self.ta * other.ta,
                           self.re * other.ta + self.ta * other.re)

    __rmul__ = __mul__

    def __truediv__(self, other):
        return self * _coerce(other).inverse()

    def __rtruediv__(self, other):
        return _coerce(other) * self.inverse()

    def __eq__(self, other):
        other = _coerce(other)
        return self.re == other.re and self.ta == other.ta

    def __hash__(self):
        return hash((self.re, self.ta))

    def __repr__(self):
        return "ParaComplex(%r, %r)" % (self.re, self.ta)

    def isclose(self, other, tol=1e-12):
        other = _coerce(other)
        scale = max(abs(self.re), abs(self.ta), abs(other.re), abs(other.ta), 1.0)
        return abs(self.re - other.re) <= tol * scale and abs(self.ta - other.ta) <= tol * scale


def _coerce(value):
    if isinstance(value, ParaComplex):
        return value
    return ParaComplex(float(value))


ONE = ParaComplex(1.0, 0.0)
ZERO = ParaComplex(0.0, 0.0)
TAU = ParaComplex(0.0, 1.0)
E_L = ParaComplex(0.5, 0.5)
E_R = ParaComplex(0.5, -0.5)


def pc_exp(z):
    """exp(x + tau*y) = e^x (cosh y + tau sinh y); image is B+.

    Computed componentwise as (e^l, e^r) on idempotent coordinates,
    which avoids the cancellation of e^x cosh y - e^x sinh y.
    """
    z = _coerce(z)
    return ParaComplex.from_lr(math.exp(z.l), math.exp(z.r))


def pc_log(z):
    """Inverse of pc_exp on B+.  Acts as the real log on idempotent coordinates."""
    z = _coerce(z)
    scale = max(abs(z.re), abs(z.ta), 1.0)
    if z.re <= B_PLUS_TOL * scale:
        raise DomainError("log argument outside B+: re = %.6g <= 0" % z.re)
    if z.norm_sq() <= B_PLUS_TOL * scale * scale:
        raise DomainError(
            "log argument outside B+: norm_sq = %.6g <= 0" % z.norm_sq())
    return ParaComplex.from_lr(math.log(z.l), math.log(z.r))


class ProjectivePoint:
    """Point of RP^1 stored as a homogeneous pair of unit Euclidean length.

    The representative's overall sign is not normalized; consumers must
    (and do) tolerate it.
    """

    __slots__ = ("v",)

    def __init__(self, v):
        v = np.asarray(v, dtype=float)
        if v.shape != (2,):
            raise ValueError("homogeneous coordinates must be a pair")
        n = math.hypot(v[0], v[1])
        if n == 0.0:
            raise ValueError("(0, 0) is not a point of RP^1")
        self.v = v / n

    def __setattr__(self, name, value):
        if name == "v" and hasattr(self, "v"):
            raise AttributeError("ProjectivePoint values are immutable")
        object.__setattr__(self, name, value)

    @classmethod
    def from_affine(cls, x):
        """x real, or +-inf for the point at infinity."""
        if math.isinf(x):
            return cls((1.0, 0.0))
        return cls((x, 1.0))

    @property
    def affine(self):
        """Affine value x/y, +inf when the point is [1:0]."""
        if self.v[1] == 0.0:
            return math.inf
        return self.v[0] / self.v[1]

    def apply(self, m):
        """Image under a 2x2 matrix acting on homogeneous coordinates."""
        return ProjectivePoint(np.asarray(m, dtype=float) @ self.v)

    def same_point(self, other, tol=1e-9):
        return abs(proj_det(self, other)) <= tol

    def __repr__(self):
        return "ProjectivePoint([%g : %g])" % (self.v[0], self.v[1])


def proj_det(p, q):
    """Determinant of the 2x2 matrix with columns p, q (homogeneous pairs)."""
    a = p.v if isinstance(p, ProjectivePoint) else np.asarray(p, dtype=float)
    b = q.v if isinstance(q, ProjectivePoint) else np.asarray(q, dtype=float)
    return a[0] * b[1] - a[1] * b[0]


def cyclic_orientation(p, q, r):
    """Sign of the cyclic order of three points on RP^1.

    Positive iff (p, q, r) is counterclockwise, i.e. ordered like
    (0, 1, infinity).  Well defined: flipping any representative's sign
    flips exactly two of the three determinants.
    """
    return proj_det(p, q) * proj_det(q, r) * proj_det(r, p)


def cross_ratio_real(a, b, c, d):
    """Cross-ratio (a-c)(b-d) / ((a-d)(b-c)) on homogeneous representatives.

    Scale invariant; returns math.inf when the denominator vanishes.
    """
    num = proj_det(a, c) * proj_det(b, d)
    den = proj_det(a, d) * proj_det(b, c)
    if abs(den) <= CROSS_RATIO_TOL * max(abs(num), 1.0):
        return math.inf
    return num / den


class ParaProjectivePoint:
    """Point of BP^1 = RP^1 x RP^1, the left and right factor points."""

    __slots__ = ("left", "right")

    def __init__(self, left, right):
        if not isinstance(left, ProjectivePoint):
            left = ProjectivePoint(left)
        if not isinstance(right, ProjectivePoint):
            right = ProjectivePoint(right)
        object.__setattr__(self, "left", left)
        object.__setattr__(self, "right", right)

    def __setattr__(self, name, value):
        raise AttributeError("ParaProjectivePoint values are immutable")

    @classmethod
    def diagonal(cls, p):
        return cls(p, p)

    def __repr__(self):
        return "ParaProjectivePoint(%r, %r)" % (self.left, self.right)


def cross_ratio_para(a, b, c, d):
    """Componentwise cross-ratio e_l*beta(left) + e_r*beta(right).

    Raises when either factor cross-ratio is infinite.
    """
    bl = cross_ratio_real(a.left, b.left, c.left, d.left)
    br = cross_ratio_real(a.right, b.right, c.right, d.right)
    if math.isinf(bl) or math.isinf(br):
        raise DegenerateConfigurationError(
            "component cross-ratio infinite: left=%r right=%r" % (bl, br))
    return ParaComplex.from_lr(bl, br)
