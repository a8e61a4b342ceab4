"""2x2 matrices with entries in one of the three algebras.

Provides ring matrix arithmetic, the adjugate ("hat") operator, group
membership tests, determinant formulas that reduce a double or dual matrix
to real component matrices, rescaling to determinant one, and a matrix
exponential used as an independent oracle for one-parameter subgroups.

Real 2x2 matrices appear as plain (2, 2) numpy arrays.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

import numpy as np

from . import algebra
from .algebra import (
    TAU_ALG,
    TAU_ZERO,
    ElementClass,
    Hypercomplex,
    Kind,
    classify_element,
    invert,
    is_unit,
    sqrt_all,
    zero,
)
from .errors import (
    InvalidLiteralError,
    KindMismatchError,
    NotNormalizableError,
    SingularMatrixError,
)


@dataclass(frozen=True, slots=True)
class Mat2:
    """Row-major matrix [[a, b], [c, d]]; all entries share one kind."""

    kind: Kind
    a: Hypercomplex
    b: Hypercomplex
    c: Hypercomplex
    d: Hypercomplex

    def __post_init__(self):
        for entry in (self.a, self.b, self.c, self.d):
            if entry.kind is not self.kind:
                raise KindMismatchError("matrix entries must share the matrix kind")

    def entries(self) -> tuple[Hypercomplex, Hypercomplex, Hypercomplex, Hypercomplex]:
        return (self.a, self.b, self.c, self.d)

    def __add__(self, other: "Mat2") -> "Mat2":
        self._check(other)
        return Mat2(self.kind, self.a + other.a, self.b + other.b,
                    self.c + other.c, self.d + other.d)

    def __sub__(self, other: "Mat2") -> "Mat2":
        self._check(other)
        return Mat2(self.kind, self.a - other.a, self.b - other.b,
                    self.c - other.c, self.d - other.d)

    def __matmul__(self, other: "Mat2") -> "Mat2":
        self._check(other)
        return Mat2(
            self.kind,
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def scale(self, s: "Hypercomplex | float") -> "Mat2":
        return Mat2(self.kind, self.a * s, self.b * s, self.c * s, self.d * s)

    def _check(self, other: "Mat2") -> None:
        if self.kind is not other.kind:
            raise KindMismatchError(
                f"mixed matrix kinds {self.kind.name} and {other.kind.name}"
            )

    def max_entry_magnitude(self) -> float:
        return max(entry.magnitude() for entry in self.entries())

    def close_to(self, other: "Mat2", tol: float = TAU_ALG) -> bool:
        return all(p.close_to(q, tol) for p, q in zip(self.entries(), other.entries()))

    def __str__(self) -> str:
        return render_mat(self)


def mat2(kind: Kind, rows) -> Mat2:
    """Build a matrix from a nested 2x2 of Hypercomplex values or reals."""
    (a, b), (c, d) = rows
    conv = lambda v: v if isinstance(v, Hypercomplex) else algebra.number(kind, v)
    return Mat2(kind, conv(a), conv(b), conv(c), conv(d))


def identity(kind: Kind) -> Mat2:
    return mat2(kind, [[1.0, 0.0], [0.0, 1.0]])


def det(x: Mat2) -> Hypercomplex:
    return x.a * x.d - x.b * x.c


def trace(x: Mat2) -> Hypercomplex:
    return x.a + x.d


def hat(x: Mat2) -> Mat2:
    """Adjugate [[d, -b], [-c, a]]; satisfies X @ hat(X) = det(X) * I."""
    return Mat2(x.kind, x.d, -x.b, -x.c, x.a)


def invert_mat(x: Mat2, tol: float = TAU_ZERO) -> Mat2:
    d = det(x)
    cls = classify_element(d, tol)
    if cls is not ElementClass.UNIT:
        raise SingularMatrixError(cls)
    return hat(x).scale(invert(d, tol))


@dataclass(frozen=True, slots=True)
class GroupMembership:
    in_gl: bool
    in_sl: bool
    det: Hypercomplex


def membership(x: Mat2, tol_zero: float = TAU_ZERO, tol_alg: float = TAU_ALG) -> GroupMembership:
    d = det(x)
    in_gl = is_unit(d, tol_zero)
    in_sl = in_gl and d.close_to(algebra.one(x.kind), tol_alg)
    return GroupMembership(in_gl, in_sl, d)


def normalize_to_sl(x: Mat2, tol_zero: float = TAU_ZERO) -> Mat2:
    """Rescale by an invertible square root of det to reach determinant one.

    Root choice is deterministic: the root whose leading coordinate
    (idempotent plus-component for double, a1 otherwise) is largest, with
    the second coordinate breaking ties.
    """
    d = det(x)
    roots = [r for r in sqrt_all(d, tol_zero) if is_unit(r, tol_zero)]
    if not roots:
        raise NotNormalizableError(
            f"determinant {d} has no invertible square root"
        )
    if x.kind is Kind.DOUBLE:
        key = lambda r: algebra.decompose(r)
    else:
        key = lambda r: (r.a1, r.a2)
    u = max(roots, key=key)
    return x.scale(invert(u, tol_zero))


# ---------------------------------------------------------------------------
# component reductions (real 2x2 matrices as numpy arrays)


def double_from_components(a_plus: np.ndarray, a_minus: np.ndarray) -> Mat2:
    """The double matrix A+ P+ + A- P- with real component matrices A+-."""
    entries = [
        algebra.recompose(float(a_plus[i, j]), float(a_minus[i, j]))
        for i in (0, 1)
        for j in (0, 1)
    ]
    return Mat2(Kind.DOUBLE, *entries)


def components_double(x: Mat2) -> tuple[np.ndarray, np.ndarray]:
    plus = np.empty((2, 2))
    minus = np.empty((2, 2))
    for idx, entry in zip(((0, 0), (0, 1), (1, 0), (1, 1)), x.entries()):
        plus[idx], minus[idx] = algebra.decompose(entry)
    return plus, minus


def dual_from_parts(a1: np.ndarray, a2: np.ndarray) -> Mat2:
    """The dual matrix A1 + eps*A2 with real part A1 and eps-part A2."""
    entries = [
        Hypercomplex(Kind.DUAL, float(a1[i, j]), float(a2[i, j]))
        for i in (0, 1)
        for j in (0, 1)
    ]
    return Mat2(Kind.DUAL, *entries)


def parts_dual(x: Mat2) -> tuple[np.ndarray, np.ndarray]:
    part1 = np.empty((2, 2))
    part2 = np.empty((2, 2))
    for idx, entry in zip(((0, 0), (0, 1), (1, 0), (1, 1)), x.entries()):
        part1[idx], part2[idx] = entry.a1, entry.a2
    return part1, part2


def det_split_double(a_plus: np.ndarray, a_minus: np.ndarray) -> Hypercomplex:
    """det(A+ P+ + A- P-) assembled componentwise: det(A+) P+ + det(A-) P-."""
    return algebra.recompose(float(np.linalg.det(a_plus)), float(np.linalg.det(a_minus)))


def det_dual_formula(a1: np.ndarray, a2: np.ndarray) -> Hypercomplex:
    """det(A1 + eps*A2) = det(A1) + eps * tr(A1 @ adj(A2))."""
    adj2 = np.array([[a2[1, 1], -a2[0, 1]], [-a2[1, 0], a2[0, 0]]])
    eps_part = float(np.trace(a1 @ adj2))
    return Hypercomplex(Kind.DUAL, float(np.linalg.det(a1)), eps_part)


# ---------------------------------------------------------------------------
# matrix exponential oracle

_EXP_TERMS = 20
_EXP_SCALE_LIMIT = 0.5


def mat_exp(b: Mat2, t: float) -> Mat2:
    """exp(b*t) by Taylor series with scaling and squaring.

    The argument is halved until its max entry magnitude drops below 0.5,
    the series is summed to 20 terms, and the result squared back up; the
    truncation error is far below the tolerances this oracle is checked
    against.
    """
    m = b.scale(float(t))
    k = 0
    norm = m.max_entry_magnitude()
    while norm > _EXP_SCALE_LIMIT:
        norm /= 2.0
        k += 1
    m = m.scale(0.5 ** k)
    term = identity(b.kind)
    acc = term
    for n in range(1, _EXP_TERMS + 1):
        term = (term @ m).scale(1.0 / n)
        acc = acc + term
    for _ in range(k):
        acc = acc @ acc
    return acc


def mat_exp_real(b: np.ndarray, t: float) -> np.ndarray:
    """Real-matrix twin of :func:`mat_exp` (same algorithm over floats)."""
    m = np.asarray(b, dtype=float) * float(t)
    k = 0
    norm = float(np.max(np.abs(m)))
    while norm > _EXP_SCALE_LIMIT:
        norm /= 2.0
        k += 1
    m = m * 0.5 ** k
    term = np.eye(2)
    acc = np.eye(2)
    for n in range(1, _EXP_TERMS + 1):
        term = term @ m / n
        acc = acc + term
    for _ in range(k):
        acc = acc @ acc
    return acc


# ---------------------------------------------------------------------------
# text form

_ENTRY = r"[^,\[\]]+"
_MAT_RE = re.compile(
    rf"^\[\[({_ENTRY}),({_ENTRY})\],\[({_ENTRY}),({_ENTRY})\]\]$"
)


def parse_mat(kind: Kind, text: str, entry_parser=None) -> Mat2:
    """Parse "[[a,b],[c,d]]" with entries in the algebra grammar."""
    s = text.replace(" ", "")
    m = _MAT_RE.match(s)
    if not m:
        raise InvalidLiteralError(f"cannot parse {text!r} as a 2x2 matrix")
    parse_entry = entry_parser or (lambda raw: algebra.parse_number(kind, raw))
    a, b, c, d = (parse_entry(m.group(i)) for i in (1, 2, 3, 4))
    return Mat2(kind, a, b, c, d)


def render_mat(x: Mat2) -> str:
    a, b, c, d = (algebra.render(entry) for entry in x.entries())
    return f"[[{a},{b}],[{c},{d}]]"
