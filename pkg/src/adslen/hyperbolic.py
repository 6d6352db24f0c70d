"""PSL(2,R) elements and punctured-torus holonomies in shear coordinates.

The surface is fixed once and for all: the once-punctured torus, with
fundamental group free on two generators a, b and the peripheral loop
represented by the commutator [a, b].  Its standard ideal triangulation
has two triangles and three edges; a complete structure is a triple of
edge shears summing to zero.

All boundary points of the hyperbolic plane are handled as homogeneous
pairs (see paracomplex.ProjectivePoint); ideal vertices of the lifted
triangulation are expressed as explicit group words applied to the
parabolic fixed point of the commutator, which makes every cross-ratio
formula conjugation invariant.
"""

import math
from math import gcd

import numpy as np

from .errors import (
    ConstraintError,
    DegenerateConfigurationError,
    ElementTypeError,
    GeometryError,
    NonFuchsianError,
)
from .paracomplex import (
    ProjectivePoint,
    cross_ratio_real,
    cyclic_orientation,
    proj_det,
)

TRACE_TOL = 1e-9

_LETTER_INVERSE = {"a": "A", "A": "a", "b": "B", "B": "b"}


# ---------------------------------------------------------------------------
# Matrices

def _normalize_sl2(m):
    m = np.asarray(m, dtype=float)
    d = m[0, 0] * m[1, 1] - m[0, 1] * m[1, 0]
    if d <= 0.0:
        raise GeometryError("matrix has non-positive determinant %.3e" % d)
    m = m / math.sqrt(d)
    t = m[0, 0] + m[1, 1]
    if t < 0.0 or (t == 0.0 and _first_nonzero(m) < 0.0):
        m = -m
    return m


def _first_nonzero(m):
    for v in (m[0, 0], m[0, 1], m[1, 0], m[1, 1]):
        if v != 0.0:
            return v
    return 1.0


class MoebiusElement:
    """2x2 real matrix of determinant one, up to global sign.

    The stored representative has trace >= 0 (first nonzero entry positive
    when the trace vanishes), so outputs are deterministic.
    """

    __slots__ = ("m",)

    def __init__(self, m):
        self.m = _normalize_sl2(m)
        self.m.setflags(write=False)

    @classmethod
    def identity(cls):
        return cls(np.eye(2))

    @property
    def trace(self):
        return self.m[0, 0] + self.m[1, 1]

    def inverse(self):
        a, b, c, d = self.m.ravel()
        return MoebiusElement(np.array([[d, -b], [-c, a]]))

    def __matmul__(self, other):
        return MoebiusElement(self.m @ other.m)

    def apply(self, point):
        """Action on RP^1 via homogeneous coordinates."""
        return point.apply(self.m)

    def same_element(self, other, tol=1e-9):
        return np.allclose(self.m, other.m, atol=tol) or np.allclose(self.m, -other.m, atol=tol)

    def __repr__(self):
        return "MoebiusElement(%r)" % (self.m.tolist(),)


def classify(g):
    """Trace trichotomy: 'identity', 'elliptic', 'parabolic' or 'hyperbolic'."""
    if np.allclose(g.m, np.eye(2), atol=TRACE_TOL) or np.allclose(g.m, -np.eye(2), atol=TRACE_TOL):
        return "identity"
    t = abs(g.trace)
    if t > 2.0 + TRACE_TOL:
        return "hyperbolic"
    if abs(t - 2.0) <= TRACE_TOL:
        return "parabolic"
    return "elliptic"


def translation_length(g):
    """Displacement along the axis of a hyperbolic element: 2 arccosh(|tr|/2)."""
    if classify(g) != "hyperbolic":
        raise ElementTypeError("translation length requires a hyperbolic element, got %s"
                               % classify(g))
    return 2.0 * math.acosh(abs(g.trace) / 2.0)


def fixed_points(g):
    """(attracting, repelling) fixed points on RP^1.

    Parabolic elements return their single fixed point twice.
    """
    kind = classify(g)
    if kind == "hyperbolic":
        a, b, c, d = g.m.ravel()
        t = a + d
        sq = math.sqrt(t * t - 4.0)
        lam_max = (t + math.copysign(sq, t)) / 2.0
        lam_min = (t - math.copysign(sq, t)) / 2.0
        return _eigenvector(g.m, lam_max), _eigenvector(g.m, lam_min)
    if kind == "parabolic":
        p = parabolic_fixed_point(g)
        return p, p
    raise ElementTypeError("fixed points require a hyperbolic or parabolic element, got %s"
                           % kind)


def _eigenvector(m, lam):
    a, b, c, d = m.ravel()
    v1 = np.array([b, lam - a])
    v2 = np.array([lam - d, c])
    v = v1 if v1 @ v1 >= v2 @ v2 else v2
    return ProjectivePoint(v)


def parabolic_fixed_point(g):
    """Fixed point of a parabolic element, computed cancellation-free.

    With |tr| = 2 the fixed direction is the null space of m - (tr/2) I,
    read off either matrix row; the longer candidate is kept.
    """
    if classify(g) != "parabolic":
        raise ElementTypeError("expected a parabolic element, got %s" % classify(g))
    a, b, c, d = g.m.ravel()
    v1 = np.array([2.0 * b, d - a])
    v2 = np.array([d - a, -2.0 * c])
    v = v1 if v1 @ v1 >= v2 @ v2 else v2
    return ProjectivePoint(v)


def translation_matrix(g, t):
    """Translation by t along the axis of g, positive toward g's attracting end."""
    att, rep = fixed_points(g)
    v = np.column_stack([att.v, rep.v])
    diag = np.array([[math.exp(t / 2.0), 0.0], [0.0, math.exp(-t / 2.0)]])
    return MoebiusElement(v @ diag @ np.linalg.inv(v))


# ---------------------------------------------------------------------------
# Words

def reduce_word(word):
    """Freely reduce a word over the letters a, A, b, B."""
    out = []
    for ch in word:
        if ch not in _LETTER_INVERSE:
            raise ValueError("invalid letter %r in word %r" % (ch, word))
        if out and out[-1] == _LETTER_INVERSE[ch]:
            out.pop()
        else:
            out.append(ch)
    return "".join(out)


def word_inverse(word):
    return "".join(_LETTER_INVERSE[ch] for ch in reversed(word))


def cyclic_reduce(word):
    w = reduce_word(word)
    while len(w) > 1 and w[0] == _LETTER_INVERSE[w[-1]]:
        w = w[1:-1]
    return w


# ---------------------------------------------------------------------------
# Surface group representations

class SurfaceGroupRep:
    """Holonomy of a complete finite-area punctured torus.

    Both generators are hyperbolic and the commutator is parabolic
    (peripheral loop around the cusp).
    """

    __slots__ = ("gen_a", "gen_b")

    def __init__(self, gen_a, gen_b):
        if not isinstance(gen_a, MoebiusElement):
            gen_a = MoebiusElement(gen_a)
        if not isinstance(gen_b, MoebiusElement):
            gen_b = MoebiusElement(gen_b)
        for name, g in (("gen_a", gen_a), ("gen_b", gen_b)):
            if classify(g) != "hyperbolic":
                raise ConstraintError("%s must be hyperbolic, got %s (|tr| = %.12g)"
                                      % (name, classify(g), abs(g.trace)))
        comm = gen_a @ gen_b @ gen_a.inverse() @ gen_b.inverse()
        if abs(abs(comm.trace) - 2.0) > TRACE_TOL:
            raise ConstraintError("commutator must be parabolic, |tr| = %.12g" % abs(comm.trace))
        if classify(comm) == "identity":
            raise ConstraintError("commutator is trivial: abelian image")
        self.gen_a = gen_a
        self.gen_b = gen_b

    def commutator(self):
        return self.gen_a @ self.gen_b @ self.gen_a.inverse() @ self.gen_b.inverse()

    def __repr__(self):
        return "SurfaceGroupRep(%r, %r)" % (self.gen_a, self.gen_b)


def evaluate_word(rep, word):
    """Image of a reduced word under the representation, as a MoebiusElement."""
    letters = {
        "a": rep.gen_a.m,
        "A": rep.gen_a.inverse().m,
        "b": rep.gen_b.m,
        "B": rep.gen_b.inverse().m,
    }
    m = np.eye(2)
    for ch in reduce_word(word):
        m = m @ letters[ch]
    return MoebiusElement(m)


def modular_torus():
    """The hexagonally symmetric punctured torus: traces (3, 3, 3)."""
    return SurfaceGroupRep(np.array([[1.0, 1.0], [1.0, 2.0]]),
                           np.array([[1.0, -1.0], [-1.0, 2.0]]))


# ---------------------------------------------------------------------------
# Shear coordinates

class ShearCoordinates:
    """Edge shears (x, y, z) of the standard triangulation, x + y + z = 0.

    x sits on the diagonal edge, y on the edge dual to the slope-0 curve,
    z on the edge dual to the slope-infinity curve.
    """

    __slots__ = ("x", "y", "z")

    COMPLETENESS_TOL = 1e-10

    def __init__(self, x, y, z):
        x, y, z = float(x), float(y), float(z)
        if abs(x + y + z) > self.COMPLETENESS_TOL:
            raise ConstraintError("shears must sum to zero, got %.3e" % (x + y + z))
        object.__setattr__(self, "x", x)
        object.__setattr__(self, "y", y)
        object.__setattr__(self, "z", z)

    def __setattr__(self, name, value):
        raise AttributeError("ShearCoordinates are immutable")

    def as_array(self):
        return np.array([self.x, self.y, self.z])

    @classmethod
    def from_array(cls, v):
        return cls(v[0], v[1], v[2])

    @classmethod
    def projected(cls, v):
        """Nearest point of the completeness plane (orthogonal projection)."""
        v = np.asarray(v, dtype=float)
        return cls.from_array(v - v.sum() / 3.0)

    def __repr__(self):
        return "ShearCoordinates(%g, %g, %g)" % (self.x, self.y, self.z)


def _mobius_to_standard(p1, p2, p3):
    # rows built from determinants: sends p1, p2, p3 to 0, infinity, 1
    d32 = p3[0] * p2[1] - p3[1] * p2[0]
    d31 = p3[0] * p1[1] - p3[1] * p1[0]
    return np.array([[d32 * p1[1], -d32 * p1[0]],
                     [d31 * p2[1], -d31 * p2[0]]])


def _mobius_through(src, dst):
    """Matrix sending the source triple to the destination triple on RP^1.

    Points are homogeneous pairs; dtype follows the inputs, so the
    construction stays differentiable under complex-step perturbation.
    """
    m = np.linalg.inv(_mobius_to_standard(*dst)) @ _mobius_to_standard(*src)
    d = m[0, 0] * m[1, 1] - m[0, 1] * m[1, 0]
    return m / np.sqrt(d + 0j) if np.iscomplexobj(m) else m / math.sqrt(abs(d))


def _holonomy_matrices(x, y, z):
    """Generator matrices of the structure with shears (x, y, z).

    Develops the two base triangles (0, 1, inf) and (0, inf, w) and the
    two neighbors determined by the edge shears, then solves for the side
    pairings.  Works for any dtype supporting exp (used for complex-step
    derivatives of trace functions).
    """
    ex = np.exp(-x)
    ey = np.exp(y)
    ez = np.exp(z)
    w = -ex                 # vertex of the second base triangle
    u = ey / (1.0 + ey)     # neighbor vertex across the edge (0, 1)
    v = w / (1.0 + ez)      # neighbor vertex across the edge (w, 0)
    one = np.ones_like(w)
    zero = np.zeros_like(w)
    p0 = (zero, one)
    p1 = (one, one)
    pinf = (one, zero)
    pw = (w, one)
    pu = (u, one)
    pv = (v, one)
    mat_a = _mobius_through((p0, pinf, pw), (pu, p1, p0))
    mat_b = _mobius_through((p0, p1, pinf), (pv, p0, pw))
    return mat_a, mat_b


def shears_to_holonomy(shears):
    """Holonomy representation of the complete structure with the given shears."""
    a, b = _holonomy_matrices(shears.x, shears.y, shears.z)
    return SurfaceGroupRep(a, b)


def triangulation_vertices(rep):
    """The six ideal vertices of the lifted base triangles, as words at the cusp.

    Returns a dict with keys p0, p1, pm1, pinf, pu, pv.  All vertices are
    images of the commutator's fixed point under explicit group elements,
    so the configuration is equivariant under conjugation of rep.
    """
    a, b = rep.gen_a, rep.gen_b
    x0 = parabolic_fixed_point(rep.commutator())
    return {
        "p0": x0,
        "p1": b.inverse().apply(x0),
        "pm1": a.inverse().apply(x0),
        "pinf": (a @ b).inverse().apply(x0),
        "pu": a.apply(x0),
        "pv": b.apply(x0),
    }


def _edge_shear(lplus, lminus, vleft, vright):
    beta = cross_ratio_real(lplus, lminus, vleft, vright)
    if not (-beta > 0.0) or math.isinf(beta):
        raise NonFuchsianError("edge cross-ratio %.6g not in (-inf, 0)" % beta)
    return math.log(-beta)


def holonomy_to_shears(rep):
    """Edge shears of a punctured-torus holonomy via ideal-vertex cross-ratios."""
    p = triangulation_vertices(rep)
    x = _edge_shear(p["pinf"], p["p0"], p["pm1"], p["p1"])
    y = _edge_shear(p["p1"], p["p0"], p["pinf"], p["pu"])
    z = _edge_shear(p["p0"], p["pm1"], p["pinf"], p["pv"])
    try:
        return ShearCoordinates(x, y, z)
    except ConstraintError:
        raise NonFuchsianError("shears (%.6g, %.6g, %.6g) violate completeness"
                               % (x, y, z))


# ---------------------------------------------------------------------------
# Slopes and simple closed curves

class Slope:
    """Isotopy class p/q of essential simple closed curves, gcd(|p|, |q|) = 1."""

    __slots__ = ("p", "q")

    def __init__(self, p, q):
        p, q = int(p), int(q)
        if p == 0 and q == 0:
            raise ValueError("(0, 0) is not a slope")
        g = gcd(abs(p), abs(q))
        p, q = p // g, q // g
        if q < 0 or (q == 0 and p < 0):
            p, q = -p, -q
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "q", q)

    def __setattr__(self, name, value):
        raise AttributeError("Slope values are immutable")

    def __eq__(self, other):
        return isinstance(other, Slope) and self.p == other.p and self.q == other.q

    def __hash__(self):
        return hash((self.p, self.q))

    def __repr__(self):
        return "Slope(%d, %d)" % (self.p, self.q)


def intersection_number(c1, c2):
    """Geometric intersection number |p1 q2 - p2 q1| of two slopes."""
    return abs(c1.p * c2.q - c2.p * c1.q)


def _farey_moves(p, q):
    """Mediant descent from the basis (0/1, 1/0) to a basis containing p/q.

    Returns (moves, side) where each move 'L' replaces the high slope by
    the mediant and 'R' the low one; side says which member of the final
    basis is the target.  Requires p >= 0.
    """
    lo, hi = (0, 1), (1, 0)
    if (p, q) == lo:
        return [], "lo"
    if (p, q) == hi:
        return [], "hi"
    moves = []
    while True:
        med = (lo[0] + hi[0], lo[1] + hi[1])
        s = p * med[1] - med[0] * q
        if s == 0:
            moves.append("L")
            return moves, "hi"
        if s < 0:
            moves.append("L")
            hi = med
        else:
            moves.append("R")
            lo = med
    raise AssertionError


def slope_basis_words(c):
    """(curve word, dual word) for a slope: a free basis with one crossing.

    Built by Nielsen moves along the Farey mediant path, so the pair is
    always a basis of the free group; negative slopes are reached through
    the letter flip b -> b^{-1}.
    """
    flip = c.p < 0
    moves, side = _farey_moves(abs(c.p), c.q)
    u, v = "a", "b"
    for mv in moves:
        if mv == "L":
            v = u + v
        else:
            u = u + v
    if side == "lo":
        curve, dual = u, v
    else:
        curve, dual = v, u
    if flip:
        table = str.maketrans("bB", "Bb")
        curve, dual = curve.translate(table), dual.translate(table)
    return curve, dual


def slope_to_word(c):
    """Primitive word representing the simple closed curve of a slope."""
    return slope_basis_words(c)[0]


def twist_deformation(rep, c, t):
    """Holonomy of the twist flow of magnitude t along the curve of slope c.

    The dual basis element is post-composed with the translation by t
    along the twisting curve's axis; the generator images are then
    rebuilt by unwinding the Nielsen moves, so t = 0 reproduces rep
    exactly and the flow property holds on the nose.
    """
    flip = c.p < 0
    moves, side = _farey_moves(abs(c.p), c.q)
    mu = rep.gen_a.m
    mv = rep.gen_b.inverse().m if flip else rep.gen_b.m
    for mvn in moves:
        if mvn == "L":
            mv = mu @ mv
        else:
            mu = mu @ mv
    if side == "lo":
        curve_m, dual_is_v = mu, True
    else:
        curve_m, dual_is_v = mv, False
    trans = translation_matrix(MoebiusElement(curve_m), t).m
    if dual_is_v:
        mv = trans @ mv
    else:
        mu = trans @ mu
    for mvn in reversed(moves):
        if mvn == "L":
            mv = np.linalg.inv(mu) @ mv
        else:
            mu = mu @ np.linalg.inv(mv)
    if flip:
        mv = np.linalg.inv(mv)
    return SurfaceGroupRep(mu, mv)


# ---------------------------------------------------------------------------
# Crossing geometry on the boundary circle

def _as_projective(point):
    if isinstance(point, ProjectivePoint):
        return point
    return ProjectivePoint.from_affine(float(point))


def geodesics_cross(pair1, pair2):
    """Whether the geodesics with the given endpoint pairs link on RP^1."""
    a1, a2 = (_as_projective(p) for p in pair1)
    b1, b2 = (_as_projective(p) for p in pair2)
    m = -cross_ratio_real(a1, a2, b1, b2)
    return math.isfinite(m) and m > 1e-12


def intersection_angle(pair1, pair2):
    """Angle in (0, pi) between two crossing oriented geodesics.

    Each pair is (negative endpoint, positive endpoint); the angle is
    measured between the oriented tangents at the crossing, recovered
    from the endpoint cross-ratio, and is symmetric in the arguments.
    """
    a1, a2 = (_as_projective(p) for p in pair1)
    b1, b2 = (_as_projective(p) for p in pair2)
    m = -cross_ratio_real(a1, a2, b1, b2)
    if not math.isfinite(m) or m <= 1e-12:
        raise DegenerateConfigurationError(
            "geodesics do not cross (cross-ratio parameter %.6g)" % m)
    cos_theta = (1.0 - m) / (1.0 + m)
    return math.acos(max(-1.0, min(1.0, cos_theta)))


def ball_words(radius):
    """All freely reduced words of length <= radius, BFS order ('' first)."""
    words = [""]
    frontier = [""]
    for _ in range(radius):
        nxt = []
        for w in frontier:
            last = w[-1] if w else None
            for ch in "aAbB":
                if last is None or ch != _LETTER_INVERSE[last]:
                    nxt.append(w + ch)
        words.extend(nxt)
        frontier = nxt
    return words
