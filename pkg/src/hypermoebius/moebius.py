"""Moebius maps: invertible matrices acting on point classes.

A map is represented by a matrix whose determinant is a unit; matrices that
differ by a unit scalar act identically.  The module provides the action,
composition, equality modulo units, the scalar kernel of the matrix-to-map
projection, the trace-squared classification, and fixed points.

Over the double and dual numbers the classification reduces a det-1
representative to real component matrices and classifies those; fixed-point
search follows the same reduction and can return one-parameter families
(a phenomenon the zero divisors and nilpotents make possible).
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from . import algebra
from .algebra import (
    TAU_ALG,
    TAU_ZERO,
    Hypercomplex,
    Kind,
    decompose,
    invert,
    recompose,
)
from .errors import (
    FixesEverythingError,
    KindMismatchError,
    SingularMatrixError,
)
from .matrix2 import (
    Mat2,
    components_double,
    det,
    identity,
    membership,
    normalize_to_sl,
    parts_dual,
    trace,
)
from .projline import (
    CanonicalClass,
    ClassTag,
    ProjPoint,
    canonical_ratio,
    canonicalize,
)

TAU_CLASS = 1e-9  # half-width of the parabolic band around tr^2 = 4


@dataclass(frozen=True, slots=True)
class MoebiusMap:
    """A class map [x:y] -> [ax+by : cx+dy] carried by an invertible matrix."""

    rep: Mat2

    def __post_init__(self):
        if not membership(self.rep).in_gl:
            raise SingularMatrixError(
                algebra.classify_element(det(self.rep)),
                "a Moebius map needs an invertible representative matrix",
            )

    @property
    def kind(self) -> Kind:
        return self.rep.kind

    def __str__(self) -> str:
        return str(self.rep)


def identity_map(kind: Kind) -> MoebiusMap:
    return MoebiusMap(identity(kind))


def apply_point(m: MoebiusMap, p: ProjPoint) -> ProjPoint:
    """The image point (a representative of the image class)."""
    if m.kind is not p.kind:
        raise KindMismatchError("map and point kinds differ")
    r = m.rep
    return ProjPoint(p.kind, r.a * p.x + r.b * p.y, r.c * p.x + r.d * p.y)


def apply(m: MoebiusMap, p: ProjPoint, tol: float = TAU_ZERO) -> CanonicalClass:
    return canonicalize(apply_point(m, p), tol)


def compose(m1: MoebiusMap, m2: MoebiusMap) -> MoebiusMap:
    if m1.kind is not m2.kind:
        raise KindMismatchError("cannot compose maps of different kinds")
    return MoebiusMap(m1.rep @ m2.rep)


def mob_equal(m1: MoebiusMap, m2: MoebiusMap, tol: float = TAU_ALG) -> bool:
    """True when the representatives differ by a unit scalar.

    The scalar is solved for from the best-conditioned entry (componentwise
    over double, a1-level then eps-level over dual) and then checked against
    all four entries.
    """
    if m1.kind is not m2.kind:
        raise KindMismatchError("cannot compare maps of different kinds")
    e1 = m1.rep.entries()
    e2 = m2.rep.entries()
    kind = m1.kind
    if kind is Kind.DOUBLE:
        p1 = [decompose(v) for v in e1]
        p2 = [decompose(v) for v in e2]
        ip = max(range(4), key=lambda i: abs(p2[i][0]))
        im = max(range(4), key=lambda i: abs(p2[i][1]))
        if abs(p2[ip][0]) <= TAU_ZERO or abs(p2[im][1]) <= TAU_ZERO:
            return False
        u = recompose(p1[ip][0] / p2[ip][0], p1[im][1] / p2[im][1])
    elif kind is Kind.DUAL:
        i1 = max(range(4), key=lambda i: abs(e2[i].a1))
        if abs(e2[i1].a1) <= TAU_ZERO:
            return False
        u1 = e1[i1].a1 / e2[i1].a1
        u2 = (e1[i1].a2 - u1 * e2[i1].a2) / e2[i1].a1
        u = Hypercomplex(Kind.DUAL, u1, u2)
    else:
        i1 = max(range(4), key=lambda i: e2[i].magnitude())
        if e2[i1].magnitude() <= TAU_ZERO:
            return False
        u = e1[i1] * invert(e2[i1])
    scale = 1.0 + max(m1.rep.max_entry_magnitude(), m2.rep.max_entry_magnitude())
    return all(a.close_to(b * u, tol * scale) for a, b in zip(e1, e2))


# ---------------------------------------------------------------------------
# kernel of the matrix -> map projection


def _unit_square_roots_of_one(kind: Kind) -> list[Hypercomplex]:
    roots = algebra.sqrt_all(algebra.one(kind))
    return [r for r in roots if algebra.is_unit(r)]


def kernel_check(kind: "Kind | str", n_probes: int = 100, seed: int = 7):
    """det-1 scalar matrices acting as the identity on a random probe set.

    ``kind`` may be a :class:`Kind` or one of the names "real", "complex",
    "double", "dual".  Real matrices come back as numpy arrays, ring
    matrices as :class:`Mat2`.  Every candidate scalar u with u^2 = 1 is
    checked against ``n_probes`` random points.
    """
    from .projline import equivalent
    from .sampling import random_point, rng_from_seed

    rng = rng_from_seed(seed)
    if isinstance(kind, str) and kind.strip().lower() == "real":
        kernel = []
        for u in (1.0, -1.0):
            m = u * np.eye(2)
            probes = [rng.uniform(-3, 3, size=2) for _ in range(n_probes)]
            if all(_real_same_class(m @ v, v) for v in probes):
                kernel.append(m)
        return kernel
    k = kind if isinstance(kind, Kind) else Kind.from_name(kind)
    kernel = []
    for u in _unit_square_roots_of_one(k):
        m = MoebiusMap(identity(k).scale(u))
        if all(
            equivalent(apply_point(m, p), p)
            for p in (random_point(k, rng) for _ in range(n_probes))
        ):
            kernel.append(m.rep)
    return kernel


def kernel_labels(kind: "Kind | str", **kwargs) -> list[str]:
    """Human-readable names of the kernel scalars, e.g. ["I", "-I", "jI", "-jI"]."""
    mats = kernel_check(kind, **kwargs)
    labels = []
    for m in mats:
        u = m[0, 0] if isinstance(m, np.ndarray) else m.a
        labels.append(_scalar_label(u))
    return labels


def _scalar_label(u) -> str:
    if isinstance(u, (int, float, np.floating)):
        return "I" if u > 0 else "-I"
    if abs(u.a2) <= TAU_ALG:
        return "I" if u.a1 > 0 else "-I"
    sym = u.kind.symbol
    return f"{sym}I" if u.a2 > 0 else f"-{sym}I"


def _real_same_class(v, w, tol: float = TAU_ALG) -> bool:
    cross = v[0] * w[1] - v[1] * w[0]
    return abs(cross) <= tol * (1.0 + math.hypot(*v) * math.hypot(*w))


# ---------------------------------------------------------------------------
# trace-squared classification


class MapTag(Enum):
    IDENTITY = "Identity"
    ELLIPTIC = "Elliptic"
    PARABOLIC = "Parabolic"
    HYPERBOLIC = "Hyperbolic"
    STRICTLY_LOXODROMIC = "StrictlyLoxodromic"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True, slots=True)
class MapClass:
    """Classification record: one tag over a field, a component pair over
    the double numbers (plus component first), the a1-projection's tag over
    the dual numbers."""

    kind: Kind
    tags: tuple[MapTag, ...]
    tr2: Hypercomplex
    is_identity: bool

    def label(self) -> str:
        if self.is_identity:
            return "Identity"
        if len(self.tags) == 2:
            return f"({self.tags[0]}, {self.tags[1]})"
        return str(self.tags[0])


def tr_squared(m: MoebiusMap, tol_zero: float = TAU_ZERO) -> Hypercomplex:
    """(a+d)^2 of the determinant-one representative."""
    sl = normalize_to_sl(m.rep, tol_zero)
    t = trace(sl)
    return t * t


def _classify_real_tr2(t2: float, band: float = TAU_CLASS) -> MapTag:
    if abs(t2 - 4.0) < band:
        return MapTag.PARABOLIC
    if t2 < 4.0:
        return MapTag.ELLIPTIC
    return MapTag.HYPERBOLIC


def _classify_complex_tr2(re: float, im: float, band: float = TAU_CLASS) -> MapTag:
    if abs(im) >= band or re < -band:
        return MapTag.STRICTLY_LOXODROMIC
    return _classify_real_tr2(re, band)


def classify_map(m: MoebiusMap, band: float = TAU_CLASS) -> MapClass:
    t2 = tr_squared(m)
    is_id = mob_equal(m, identity_map(m.kind))
    if m.kind is Kind.DOUBLE:
        if is_id:
            tags = (MapTag.IDENTITY, MapTag.IDENTITY)
        else:
            sl = normalize_to_sl(m.rep)
            gp, gm = components_double(sl)
            tags = (_classify_real_component(gp, band), _classify_real_component(gm, band))
    elif m.kind is Kind.DUAL:
        if is_id:
            tags = (MapTag.IDENTITY,)
        else:
            g1 = parts_dual(normalize_to_sl(m.rep))[0]
            tags = (_classify_real_component(g1, band),)
    else:
        tags = ((MapTag.IDENTITY,) if is_id
                else (_classify_complex_tr2(t2.a1, t2.a2, band),))
    return MapClass(m.kind, tags, t2, is_id)


def _classify_real_component(g: np.ndarray, band: float) -> MapTag:
    if _is_scalar_real(g):
        return MapTag.IDENTITY
    return _classify_real_tr2(float(np.trace(g)) ** 2, band)


def _is_scalar_real(g: np.ndarray, tol: float = TAU_ALG) -> bool:
    return (abs(g[0, 1]) <= tol and abs(g[1, 0]) <= tol
            and abs(g[0, 0] - g[1, 1]) <= tol)


# ---------------------------------------------------------------------------
# fixed points


@dataclass(frozen=True, slots=True)
class FixedFamily:
    """A one-parameter family of fixed classes, described rather than
    enumerated.  ``representatives`` holds a few verified members."""

    description: str
    representatives: tuple[ProjPoint, ...]


@dataclass(frozen=True, slots=True)
class FixedPointSet:
    points: tuple[CanonicalClass, ...]
    families: tuple[FixedFamily, ...] = ()


def fixed_points_real(g: np.ndarray, tol: float = TAU_ALG):
    """Real projective fixed points of a real matrix as (x, y) pairs.

    Returns None when the matrix is scalar (everything is fixed).  Affine
    fixed points solve c x^2 + (d-a) x - b = 0; [1:0] is fixed iff c = 0.
    """
    a, b = float(g[0, 0]), float(g[0, 1])
    c, d = float(g[1, 0]), float(g[1, 1])
    if _is_scalar_real(g, tol):
        return None
    scale = 1.0 + max(abs(a), abs(b), abs(c), abs(d))
    out: list[tuple[float, float]] = []
    if abs(c) <= tol * scale:
        out.append((1.0, 0.0))
        if abs(d - a) > tol * scale:
            out.append((b / (d - a), 1.0))
        return out
    disc = (d - a) ** 2 + 4.0 * c * b
    if abs(disc) <= tol * scale * scale:
        out.append(((a - d) / (2.0 * c), 1.0))
    elif disc > 0:
        r = math.sqrt(disc)
        out.append(((a - d + r) / (2.0 * c), 1.0))
        out.append(((a - d - r) / (2.0 * c), 1.0))
    return out


def _fixed_points_complex(m: MoebiusMap, tol: float) -> list[CanonicalClass]:
    r = m.rep
    a = complex(r.a.a1, r.a.a2)
    b = complex(r.b.a1, r.b.a2)
    c = complex(r.c.a1, r.c.a2)
    d = complex(r.d.a1, r.d.a2)
    scale = 1.0 + max(abs(a), abs(b), abs(c), abs(d))
    out: list[CanonicalClass] = []

    def affine(z: complex) -> CanonicalClass:
        return CanonicalClass(ClassTag.AFFINE,
                              affine=Hypercomplex(Kind.COMPLEX, z.real, z.imag))

    if abs(c) <= tol * scale:
        out.append(CanonicalClass(ClassTag.INFINITY))
        if abs(d - a) > tol * scale:
            out.append(affine(b / (d - a)))
        return out
    disc = (d - a) ** 2 + 4.0 * c * b
    if abs(disc) <= tol * scale * scale:
        out.append(affine((a - d) / (2.0 * c)))
    else:
        root = cmath.sqrt(disc)
        out.append(affine((a - d + root) / (2.0 * c)))
        out.append(affine((a - d - root) / (2.0 * c)))
    return out


def _combine_double(fp: tuple[float, float], fm: tuple[float, float]) -> ProjPoint:
    return ProjPoint(Kind.DOUBLE, recompose(fp[0], fm[0]), recompose(fp[1], fm[1]))


def _fixed_points_double(m: MoebiusMap, tol: float) -> FixedPointSet:
    gp, gm = components_double(normalize_to_sl(m.rep))
    fixed_plus = fixed_points_real(gp, tol)
    fixed_minus = fixed_points_real(gm, tol)
    points: list[CanonicalClass] = []
    families: list[FixedFamily] = []
    if fixed_plus is None and fixed_minus is None:
        raise FixesEverythingError("identity map fixes every class")
    for side, fixed_set, other in (("+", fixed_plus, fixed_minus),
                                   ("-", fixed_minus, fixed_plus)):
        tag = ClassTag.PR_PLUS if side == "+" else ClassTag.PR_MINUS
        if fixed_set is None:
            reps = [_pr_point(tag, v) for v in ((1.0, 0.0), (0.0, 1.0), (1.0, 1.0))]
            families.append(FixedFamily(
                f"every class of the {tag.value} family", tuple(reps)))
        else:
            points.extend(CanonicalClass(tag, ratio=canonical_ratio(*v))
                          for v in fixed_set)
    if fixed_plus is None:
        for fm in fixed_minus:
            reps = tuple(_combine_double(v, fm) for v in ((0.5, 1.0), (1.0, 0.0), (2.0, 1.0)))
            families.append(FixedFamily(
                "free plus-component over a fixed minus-component", reps))
    elif fixed_minus is None:
        for fp in fixed_plus:
            reps = tuple(_combine_double(fp, v) for v in ((0.5, 1.0), (1.0, 0.0), (2.0, 1.0)))
            families.append(FixedFamily(
                "fixed plus-component over a free minus-component", reps))
    else:
        for fp in fixed_plus:
            for fm in fixed_minus:
                points.append(canonicalize(_combine_double(fp, fm)))
    return FixedPointSet(tuple(points), tuple(families))


def _pr_point(tag: ClassTag, v: tuple[float, float]) -> ProjPoint:
    from .projline import bijection_f

    if tag is ClassTag.PR:
        return bijection_f(Kind.DUAL, v[0], v[1])
    return bijection_f(Kind.DOUBLE, v[0], v[1], "+" if tag is ClassTag.PR_PLUS else "-")


def _fixed_points_dual(m: MoebiusMap, tol: float) -> FixedPointSet:
    r = normalize_to_sl(m.rep)
    a1, b1, c1, d1 = (e.a1 for e in r.entries())
    a2, b2, c2, d2 = (e.a2 for e in r.entries())
    scale = 1.0 + r.max_entry_magnitude()
    tol_s = tol * scale
    eps = algebra.generator(Kind.DUAL)
    points: list[CanonicalClass] = []
    families: list[FixedFamily] = []

    def affine_class(x1: float, x2: float) -> CanonicalClass:
        return CanonicalClass(ClassTag.AFFINE, affine=Hypercomplex(Kind.DUAL, x1, x2))

    # level-one (a1-part) fixed equation: c1 x^2 + (d1-a1) x - b1 = 0
    if max(abs(c1), abs(d1 - a1), abs(b1)) <= tol_s:
        # every real x passes level one; the eps-level equation picks the
        # base points and leaves the eps-coordinate free
        for x1 in _real_quadratic_roots(c2, d2 - a2, -b2, tol_s):
            x1 += 0.0  # normalize -0.0
            reps = tuple(ProjPoint(Kind.DUAL, Hypercomplex(Kind.DUAL, x1, s),
                                   algebra.one(Kind.DUAL)) for s in (0.0, 1.0, -2.0))
            families.append(FixedFamily(
                f"affine classes {x1:g} + eps*s for every real s", reps))
    else:
        for x1 in _real_quadratic_roots(c1, d1 - a1, -b1, tol_s):
            lin = 2.0 * c1 * x1 + (d1 - a1)
            rhs = b2 - c2 * x1 * x1 - (d2 - a2) * x1
            if abs(lin) > tol_s:
                points.append(affine_class(x1, rhs / lin))
            elif abs(rhs) <= tol_s:
                reps = tuple(ProjPoint(Kind.DUAL, Hypercomplex(Kind.DUAL, x1, s),
                                       algebra.one(Kind.DUAL)) for s in (0.0, 1.0, -2.0))
                families.append(FixedFamily(
                    f"affine classes {x1:g} + eps*s for every real s", reps))
    # non-affine candidates need a nilpotent (or zero) lower-left entry
    if abs(c1) <= tol_s:
        if abs(c2) <= tol_s:
            points.append(CanonicalClass(ClassTag.INFINITY))
        if abs(a1 - d1) > tol_s:
            lam = c2 / (a1 - d1)
            if abs(lam) > tol_s:
                points.append(CanonicalClass(ClassTag.DUAL_OMEGA, lam=lam))
        elif abs(c2) <= tol_s:
            reps = tuple(ProjPoint(Kind.DUAL, algebra.one(Kind.DUAL), eps * lam)
                         for lam in (1.0, -1.0, 2.0))
            families.append(FixedFamily(
                "every omega class [1 : eps*lam]", reps))
    return FixedPointSet(tuple(points), tuple(families))


def _real_quadratic_roots(q: float, l: float, c: float, tol: float) -> list[float]:
    """Real roots of q x^2 + l x + c = 0 (degenerate cases included)."""
    if abs(q) <= tol:
        if abs(l) <= tol:
            return []
        return [-c / l]
    disc = l * l - 4.0 * q * c
    if abs(disc) <= tol * tol:
        return [-l / (2.0 * q)]
    if disc < 0:
        return []
    r = math.sqrt(disc)
    return [(-l + r) / (2.0 * q), (-l - r) / (2.0 * q)]


def fixed_points(m: MoebiusMap, tol: float = TAU_ALG) -> FixedPointSet:
    """All fixed classes of a non-identity map, families included.

    Raises FixesEverythingError for identity-class maps.  Every returned
    point satisfies apply(m, point) == point; family members are spot
    checked through their stored representatives.
    """
    if mob_equal(m, identity_map(m.kind)):
        raise FixesEverythingError("identity map fixes every class")
    if m.kind is Kind.COMPLEX:
        return FixedPointSet(tuple(_fixed_points_complex(m, tol)))
    if m.kind is Kind.DOUBLE:
        return _fixed_points_double(m, tol)
    return _fixed_points_dual(m, tol)


def class_point(kind: Kind, cls: CanonicalClass) -> ProjPoint:
    """A representative point of a canonical class (used to re-apply maps)."""
    from .algebra import P_MINUS, P_PLUS

    if cls.tag is ClassTag.AFFINE:
        return ProjPoint(kind, cls.affine, algebra.one(kind))
    if cls.tag is ClassTag.INFINITY:
        return ProjPoint(kind, algebra.one(kind), algebra.zero(kind))
    if cls.tag is ClassTag.OMEGA_PLUS:
        return ProjPoint(kind, algebra.one(kind), P_PLUS * cls.lam)
    if cls.tag is ClassTag.OMEGA_MINUS:
        return ProjPoint(kind, algebra.one(kind), P_MINUS * cls.lam)
    if cls.tag is ClassTag.DUAL_OMEGA:
        return ProjPoint(kind, algebra.one(kind), algebra.generator(Kind.DUAL) * cls.lam)
    if cls.tag is ClassTag.SIGMA_ONE:
        return ProjPoint(kind, P_PLUS, P_MINUS)
    if cls.tag is ClassTag.SIGMA_TWO:
        return ProjPoint(kind, P_MINUS, P_PLUS)
    return _pr_point(cls.tag, cls.ratio)
