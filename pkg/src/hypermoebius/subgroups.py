"""Continuous one-parameter matrix subgroups over the three carriers.

The real building block is the rotation family

    H_sigma(t)  = [[cos_sigma t, sigma*sin_sigma t], [sin_sigma t, cos_sigma t]]
    H'_sigma(t) = exp(lam*t) * H_sigma(t)

covering circular (sigma=-1), shear (sigma=0), hyperbolic (sigma=+1) and
trivial (identity) types.  Over the double numbers a subgroup is a pair of
real subgroups riding the two idempotent components, the second one running
at a rescaled time a*t.  Over the dual numbers a subgroup is a real subgroup
plus an eps-deformation t * lam * H(t+t0) driven by a centralizer element.

The det-1 dual family deserves a note: normalizing the general-linear form
exp(lam1*t)*H(t) + eps*lam*t*exp(lam1*(t+t0))*H(t+t0) by the square root of
its determinant gives

    H_sigma(t) + eps*lam*t*exp(lam1*t0) * (H_sigma(t+t0) - cos_sigma(t0)*H_sigma(t))

whose determinant is identically one and which satisfies the one-parameter
law exactly; the corresponding determinant of the general-linear form is
exp(2*lam1*t) * (1 + 2*eps*lam*t*exp(lam1*t0)*cos_sigma(t0)).  A variant of
both formulas with cos_sigma(2t+t0) in place of cos_sigma(t0) circulates;
it fails the group law and the determinant identity for sigma != 0, and the
verification suite reproduces that discrepancy numerically (see
``dual_gl_det_printed_form``).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .algebra import (
    TAU_ALG,
    TAU_ZERO,
    Hypercomplex,
    Kind,
    cos_sigma,
    sin_sigma,
)
from .errors import (
    DomainError,
    InvalidLiteralError,
    NotInCentralizerError,
    SingularMatrixError,
)
from .matrix2 import (
    Mat2,
    det,
    double_from_components,
    dual_from_parts,
    mat_exp,
    mat_exp_real,
)


class SigmaKind(Enum):
    """Subgroup regime: circular K, shear N, hyperbolic A, or trivial I."""

    ELLIPTIC = -1
    PARABOLIC = 0
    HYPERBOLIC = 1
    TRIVIAL = "r"

    @property
    def sigma(self) -> int | None:
        return None if self is SigmaKind.TRIVIAL else self.value

    @property
    def letter(self) -> str:
        return _LETTERS[self]

    @classmethod
    def from_letter(cls, letter: str) -> "SigmaKind":
        key = letter.strip().upper()
        for kind, lt in _LETTERS.items():
            if lt == key:
                return kind
        raise InvalidLiteralError(f"unknown subgroup regime {letter!r}: expected K, N, A or I")


_LETTERS = {
    SigmaKind.ELLIPTIC: "K",
    SigmaKind.PARABOLIC: "N",
    SigmaKind.HYPERBOLIC: "A",
    SigmaKind.TRIVIAL: "I",
}


def rotation_real(sigma_kind: SigmaKind, t: float, lam: float = 0.0) -> np.ndarray:
    """H'_sigma(t) as a real matrix (H_sigma(t) when lam = 0)."""
    scale = math.exp(lam * t)
    if sigma_kind is SigmaKind.TRIVIAL:
        return scale * np.eye(2)
    s = sigma_kind.sigma
    c, sn = cos_sigma(s, t), sin_sigma(s, t)
    return scale * np.array([[c, s * sn], [sn, c]])


@dataclass(frozen=True, slots=True)
class RealGL:
    """t -> exp(lam*t) * H_sigma(t) in the real general linear group."""

    sigma: SigmaKind
    lam: float = 0.0


@dataclass(frozen=True, slots=True)
class DoubleSL:
    """t -> H_{sigma+}(t) P+ + H_{sigma-}(a*t) P-, determinant one."""

    sigma_plus: SigmaKind
    sigma_minus: SigmaKind
    a: float = 1.0


@dataclass(frozen=True, slots=True)
class DoubleGL:
    """Component pair of exp-scaled real subgroups, minus side at time a*t."""

    sigma_plus: SigmaKind
    lam_plus: float
    sigma_minus: SigmaKind
    lam_minus: float
    a: float = 1.0


@dataclass(frozen=True, slots=True)
class DualGL:
    """t -> exp(lam1*t) H(t) + eps*lam*t*exp(lam1*(t+t0)) H(t+t0)."""

    sigma: SigmaKind
    lam1: float
    lam: float
    t0: float = 0.0

    def __post_init__(self):
        if self.lam == 0.0:
            raise DomainError("the eps-deformation strength lam must be nonzero")


@dataclass(frozen=True, slots=True)
class DualSL:
    """Determinant-one dual family (see module docstring for the form)."""

    sigma: SigmaKind
    lam: float
    lam1: float = 0.0
    t0: float = 0.0

    def __post_init__(self):
        if self.sigma is SigmaKind.TRIVIAL:
            raise DomainError("the det-1 dual family needs a non-trivial regime")
        if self.lam == 0.0:
            raise DomainError("the eps-deformation strength lam must be nonzero")


SubgroupSpec = RealGL | DoubleSL | DoubleGL | DualGL | DualSL


def eval_subgroup(spec, t: float):
    """The subgroup matrix at parameter t (numpy for real, Mat2 otherwise)."""
    if hasattr(spec, "eval"):
        return spec.eval(t)
    if isinstance(spec, RealGL):
        return rotation_real(spec.sigma, t, spec.lam)
    if isinstance(spec, DoubleSL):
        plus = rotation_real(spec.sigma_plus, t)
        minus = rotation_real(spec.sigma_minus, spec.a * t)
        return double_from_components(plus, minus)
    if isinstance(spec, DoubleGL):
        plus = rotation_real(spec.sigma_plus, t, spec.lam_plus)
        minus = rotation_real(spec.sigma_minus, spec.a * t, spec.lam_minus)
        return double_from_components(plus, minus)
    if isinstance(spec, DualGL):
        a1 = rotation_real(spec.sigma, t, spec.lam1)
        # rotation_real already carries exp(lam1*(t+t0)) at the shifted time
        a2 = spec.lam * t * rotation_real(spec.sigma, t + spec.t0, spec.lam1)
        return dual_from_parts(a1, a2)
    if isinstance(spec, DualSL):
        s = spec.sigma.sigma
        h_t = rotation_real(spec.sigma, t)
        h_shift = rotation_real(spec.sigma, t + spec.t0)
        a2 = spec.lam * t * math.exp(spec.lam1 * spec.t0) \
            * (h_shift - cos_sigma(s, spec.t0) * h_t)
        return dual_from_parts(h_t, a2)
    raise TypeError(f"not a subgroup description: {spec!r}")


def _entry_gap(x, y) -> float:
    if isinstance(x, np.ndarray):
        return float(np.max(np.abs(x - y)))
    diff = x - y
    return diff.max_entry_magnitude()


def group_law_residual(spec, t1: float, t2: float) -> float:
    """Max entry gap between eval(t1+t2) and eval(t1) @ eval(t2)."""
    lhs = eval_subgroup(spec, t1 + t2)
    rhs = eval_subgroup(spec, t1) @ eval_subgroup(spec, t2)
    return _entry_gap(lhs, rhs)


def sl_membership_check(spec, t: float) -> Hypercomplex:
    """The determinant of the subgroup matrix at t.

    Identically one for the det-1 double and dual families; for the dual
    general-linear family it should match ``dual_gl_det_closed_form``.
    """
    m = eval_subgroup(spec, t)
    if isinstance(m, np.ndarray):
        d = float(np.linalg.det(m))
        return Hypercomplex(Kind.COMPLEX, d, 0.0)
    return det(m)


def dual_gl_det_closed_form(spec: DualGL, t: float) -> Hypercomplex:
    """exp(2*lam1*t) + eps * 2*lam*t*exp(lam1*(2t+t0)) * cos_sigma(t0)."""
    c = 1.0 if spec.sigma is SigmaKind.TRIVIAL else cos_sigma(spec.sigma.sigma, spec.t0)
    real = math.exp(2.0 * spec.lam1 * t)
    eps = 2.0 * spec.lam * t * math.exp(spec.lam1 * (2.0 * t + spec.t0)) * c
    return Hypercomplex(Kind.DUAL, real, eps)


def dual_gl_det_printed_form(spec: DualGL, t: float) -> Hypercomplex:
    """The circulating variant with cos_sigma(2t+t0); wrong for sigma != 0.

    Kept so the verification report can quantify the discrepancy against the
    determinant actually computed from the matrix.
    """
    c = 1.0 if spec.sigma is SigmaKind.TRIVIAL else cos_sigma(spec.sigma.sigma, 2.0 * t + spec.t0)
    real = math.exp(2.0 * spec.lam1 * t)
    eps = 2.0 * spec.lam * t * math.exp(spec.lam1 * (2.0 * t + spec.t0)) * c
    return Hypercomplex(Kind.DUAL, real, eps)


# ---------------------------------------------------------------------------
# centralizer of a rotation family


@dataclass(frozen=True, slots=True)
class CentralizerFit:
    """Membership witness for the centralizer of H_sigma.

    ``lam``/``s0`` give B = lam * H_sigma(s0) when that parametrization
    exists; matrices with equal diagonal and b = sigma*c always commute with
    the family but fall outside the lam*H_sigma(s0) chart in the shear
    regime (a = 0) and in the hyperbolic regime when |c| >= |a|.
    """

    lam: float | None
    s0: float | None


def centralizer_solve(sigma_kind: SigmaKind, b: np.ndarray,
                      tol: float = TAU_ALG) -> CentralizerFit:
    """Solve B = lam * H_sigma(s0) for a matrix commuting with H_sigma.

    Succeeds exactly when B has equal diagonal entries and its off-diagonal
    entries satisfy b = sigma*c; raises NotInCentralizerError otherwise.
    """
    if sigma_kind is SigmaKind.TRIVIAL:
        raise DomainError("the trivial family has no meaningful centralizer condition")
    s = sigma_kind.sigma
    a, bb = float(b[0, 0]), float(b[0, 1])
    c, d = float(b[1, 0]), float(b[1, 1])
    scale = 1.0 + max(abs(a), abs(bb), abs(c), abs(d))
    if abs(a - d) > tol * scale or abs(bb - s * c) > tol * scale:
        raise NotInCentralizerError(
            "matrix lacks the equal-diagonal / b = sigma*c structure")
    if s == -1:
        if abs(a) > tol:
            return CentralizerFit(math.copysign(math.hypot(a, c), a), math.atan(c / a))
        if abs(c) > tol:
            return CentralizerFit(c, math.pi / 2.0)
        return CentralizerFit(None, None)
    if s == 0:
        if abs(a) > tol:
            return CentralizerFit(a, c / a)
        return CentralizerFit(None, None)
    # hyperbolic: lam*cosh(s0) = a, lam*sinh(s0) = c needs |c| < |a|
    if abs(c) < abs(a):
        return CentralizerFit(math.copysign(math.sqrt(a * a - c * c), a),
                              math.atanh(c / a))
    return CentralizerFit(None, None)


# ---------------------------------------------------------------------------
# conjugation and similarity


@dataclass(frozen=True, slots=True)
class ConjugatedSubgroup:
    """t -> K eval(base, t) K^{-1}; still a one-parameter subgroup."""

    base: object
    k: object          # np.ndarray for real specs, Mat2 for ring specs
    k_inv: object

    def eval(self, t: float):
        return self.k @ eval_subgroup(self.base, t) @ self.k_inv


def conjugate_spec(spec, k) -> ConjugatedSubgroup:
    """Conjugated subgroup; ``k`` may be a real or ring matrix or, for the
    double families, a component pair (K+, K-)."""
    if isinstance(k, tuple):
        k = double_from_components(np.asarray(k[0], dtype=float),
                                   np.asarray(k[1], dtype=float))
    if isinstance(k, np.ndarray):
        d = float(np.linalg.det(k))
        if abs(d) <= TAU_ZERO:
            raise SingularMatrixError(None, "conjugating matrix is singular")
        k_inv = np.array([[k[1, 1], -k[0, 1]], [-k[1, 0], k[0, 0]]]) / d
        return ConjugatedSubgroup(spec, k, k_inv)
    from .matrix2 import invert_mat

    return ConjugatedSubgroup(spec, k, invert_mat(k))


def similarity_residual(spec_a, spec_b, ts=None) -> float:
    """Max entry gap between the two subgroups over sampled times."""
    if ts is None:
        ts = np.linspace(-2.0, 2.0, 17)
    return max(_entry_gap(eval_subgroup(spec_a, float(t)),
                          eval_subgroup(spec_b, float(t))) for t in ts)


# ---------------------------------------------------------------------------
# type classification and the component-swap homomorphism


def swap_double(spec):
    """Mirror of a double spec under the component-swap homomorphism.

    Returns (mirrored spec, time_scale) with
    eval(mirrored, time_scale * t) == swap-image of eval(spec, t).
    """
    if isinstance(spec, DoubleSL):
        if spec.sigma_minus is SigmaKind.TRIVIAL or spec.a == 0.0:
            return DoubleSL(SigmaKind.TRIVIAL, spec.sigma_plus, 1.0), 1.0
        return DoubleSL(spec.sigma_minus, spec.sigma_plus, 1.0 / spec.a), spec.a
    if isinstance(spec, DoubleGL):
        if spec.sigma_minus is SigmaKind.TRIVIAL or spec.a == 0.0:
            return DoubleGL(SigmaKind.TRIVIAL, spec.lam_minus,
                            spec.sigma_plus, spec.lam_plus, 1.0), 1.0
        return (DoubleGL(spec.sigma_minus, spec.lam_minus,
                         spec.sigma_plus, spec.lam_plus, 1.0 / spec.a), spec.a)
    raise TypeError("component swap applies to the double families only")


def swap_image(m: Mat2) -> Mat2:
    """X+ P+ + X- P-  ->  X- P+ + X+ P- (a group homomorphism)."""
    from .matrix2 import components_double

    plus, minus = components_double(m)
    return double_from_components(minus, plus)


_SIGMA_ORDER = {SigmaKind.ELLIPTIC: 0, SigmaKind.PARABOLIC: 1,
                SigmaKind.HYPERBOLIC: 2, SigmaKind.TRIVIAL: 3}


@dataclass(frozen=True, slots=True)
class TypeDescriptor:
    family: str
    sigmas: tuple[SigmaKind, ...]
    rescale: float | None
    rescale_sign: int | None
    lams: tuple[float, ...]
    t0: float | None
    label: str


def _component_name(sig: SigmaKind, time: str) -> str:
    if sig is SigmaKind.TRIVIAL:
        return "I"
    return f"{sig.letter}({time})"


def classify_spec(spec) -> TypeDescriptor:
    """Canonical type of a subgroup description.

    Double components are ordered (K before N before A, trivial last) using
    the component swap, and the rescale is reported as |a| with its sign;
    a trivial second component reports a = 0.
    """
    if isinstance(spec, RealGL):
        label = _component_name(spec.sigma, "t")
        if spec.lam != 0.0:
            label = f"exp({_fmt(spec.lam)}t){label}"
        return TypeDescriptor("real-gl", (spec.sigma,), None, None,
                              (spec.lam,), None, label)
    if isinstance(spec, (DoubleSL, DoubleGL)):
        return _classify_double(spec)
    if isinstance(spec, DualGL):
        base = _component_name(spec.sigma, "t")
        label = f"{base}' + eps-deformation(lam={_fmt(spec.lam)}, t0={_fmt(spec.t0)})"
        return TypeDescriptor("dual-gl", (spec.sigma,), None, None,
                              (spec.lam1, spec.lam), spec.t0, label)
    if isinstance(spec, DualSL):
        base = _component_name(spec.sigma, "t")
        label = f"{base} + eps-deformation(lam={_fmt(spec.lam)}, t0={_fmt(spec.t0)})"
        return TypeDescriptor("dual-sl", (spec.sigma,), None, None,
                              (spec.lam, spec.lam1), spec.t0, label)
    raise TypeError(f"not a subgroup description: {spec!r}")


def _classify_double(spec) -> TypeDescriptor:
    is_sl = isinstance(spec, DoubleSL)
    sp, sm = spec.sigma_plus, spec.sigma_minus
    trivial_minus = sm is SigmaKind.TRIVIAL or spec.a == 0.0
    trivial_plus = sp is SigmaKind.TRIVIAL
    if trivial_plus and not trivial_minus:
        spec, _ = swap_double(spec)
        return _classify_double(spec)
    if not trivial_plus and not trivial_minus \
            and _SIGMA_ORDER[sm] < _SIGMA_ORDER[sp]:
        spec, _ = swap_double(spec)
        return _classify_double(spec)
    sp, sm = spec.sigma_plus, spec.sigma_minus
    trivial_minus = sm is SigmaKind.TRIVIAL or spec.a == 0.0
    a_abs = 0.0 if trivial_minus else abs(spec.a)
    a_sign = None if trivial_minus else (1 if spec.a > 0 else -1)
    minus_time = "at" if not trivial_minus else "t"
    minus_name = "I" if trivial_minus else _component_name(sm, minus_time)
    label = f"{_component_name(sp, 't')}P+ + {minus_name}P-"
    if is_sl:
        lams: tuple[float, ...] = ()
        family = "double-sl"
    else:
        lams = (spec.lam_plus, spec.lam_minus)
        family = "double-gl"
        label = f"{label} (exp rates {_fmt(spec.lam_plus)}, {_fmt(spec.lam_minus)})"
    return TypeDescriptor(family, (sp, SigmaKind.TRIVIAL if trivial_minus else sm),
                          a_abs, a_sign, lams, None, label)


def _fmt(v: float) -> str:
    if v == 0.0:
        v = 0.0
    return format(v, ".6g")


# ---------------------------------------------------------------------------
# exponential cross-check


_DIFF_STEP = 1e-5


def generator_of(spec):
    """Central-difference derivative of the subgroup at t = 0."""
    plus = eval_subgroup(spec, _DIFF_STEP)
    minus = eval_subgroup(spec, -_DIFF_STEP)
    if isinstance(plus, np.ndarray):
        return (plus - minus) / (2.0 * _DIFF_STEP)
    return (plus - minus).scale(1.0 / (2.0 * _DIFF_STEP))


def exp_cross_check(spec, ts=None) -> float:
    """Compare the closed form against exp(generator * t) pointwise.

    The generator comes from numerical differentiation at zero, so the
    comparison is an independent check that the closed form really is the
    one-parameter subgroup it claims to be.
    """
    gen = generator_of(spec)
    if ts is None:
        ts = np.linspace(-2.0, 2.0, 9)
    worst = 0.0
    for t in ts:
        t = float(t)
        closed = eval_subgroup(spec, t)
        if isinstance(gen, np.ndarray):
            worst = max(worst, _entry_gap(mat_exp_real(gen, t), closed))
        else:
            worst = max(worst, _entry_gap(mat_exp(gen, t), closed))
    return worst


# ---------------------------------------------------------------------------
# text form


_FAMILIES = {"real-gl": RealGL, "double-sl": DoubleSL, "double-gl": DoubleGL,
             "dual-gl": DualGL, "dual-sl": DualSL}


def parse_spec(text: str):
    """Parse e.g. "double-sl(sigma+=K, sigma-=A, a=2.0)" or
    "dual-sl(sigma=N, lambda=1.0, lambda1=0.5, t0=0.3)"."""
    s = text.strip()
    head, sep, rest = s.partition("(")
    family = head.strip().lower()
    if family not in _FAMILIES or not sep or not rest.rstrip().endswith(")"):
        raise InvalidLiteralError(f"cannot parse subgroup description {text!r}")
    body = rest.rstrip()[:-1]
    fields: dict[str, str] = {}
    if body.strip():
        for item in body.split(","):
            key, eq, value = item.partition("=")
            if not eq:
                raise InvalidLiteralError(f"bad field {item!r} in {text!r}")
            fields[key.strip().lower()] = value.strip()
    try:
        if family == "real-gl":
            spec = RealGL(SigmaKind.from_letter(fields.pop("sigma")),
                          float(fields.pop("lambda", "0")))
        elif family == "double-sl":
            spec = DoubleSL(SigmaKind.from_letter(fields.pop("sigma+")),
                            SigmaKind.from_letter(fields.pop("sigma-")),
                            float(fields.pop("a", "1")))
        elif family == "double-gl":
            spec = DoubleGL(SigmaKind.from_letter(fields.pop("sigma+")),
                            float(fields.pop("lambda+", "0")),
                            SigmaKind.from_letter(fields.pop("sigma-")),
                            float(fields.pop("lambda-", "0")),
                            float(fields.pop("a", "1")))
        elif family == "dual-gl":
            spec = DualGL(SigmaKind.from_letter(fields.pop("sigma")),
                          float(fields.pop("lambda1", "0")),
                          float(fields.pop("lambda")),
                          float(fields.pop("t0", "0")))
        else:
            spec = DualSL(SigmaKind.from_letter(fields.pop("sigma")),
                          float(fields.pop("lambda")),
                          float(fields.pop("lambda1", "0")),
                          float(fields.pop("t0", "0")))
    except KeyError as exc:
        raise InvalidLiteralError(f"missing field {exc.args[0]!r} in {text!r}") from None
    if fields:
        raise InvalidLiteralError(
            f"unknown field(s) {sorted(fields)} for {family} in {text!r}")
    return spec


def render_spec(spec) -> str:
    if isinstance(spec, RealGL):
        return f"real-gl(sigma={spec.sigma.letter}, lambda={_fmt(spec.lam)})"
    if isinstance(spec, DoubleSL):
        return (f"double-sl(sigma+={spec.sigma_plus.letter}, "
                f"sigma-={spec.sigma_minus.letter}, a={_fmt(spec.a)})")
    if isinstance(spec, DoubleGL):
        return (f"double-gl(sigma+={spec.sigma_plus.letter}, lambda+={_fmt(spec.lam_plus)}, "
                f"sigma-={spec.sigma_minus.letter}, lambda-={_fmt(spec.lam_minus)}, "
                f"a={_fmt(spec.a)})")
    if isinstance(spec, DualGL):
        return (f"dual-gl(sigma={spec.sigma.letter}, lambda={_fmt(spec.lam)}, "
                f"lambda1={_fmt(spec.lam1)}, t0={_fmt(spec.t0)})")
    if isinstance(spec, DualSL):
        return (f"dual-sl(sigma={spec.sigma.letter}, lambda={_fmt(spec.lam)}, "
                f"lambda1={_fmt(spec.lam1)}, t0={_fmt(spec.t0)})")
    raise TypeError(f"not a subgroup description: {spec!r}")
