"""The randomized verification suite behind ``hypermoebius verify``.

Every check draws from one seeded generator, so a fixed seed reproduces the
report byte for byte.  Checks are keyed by what they verify; each line of
the report reads "<key>: PASS|FAIL (<counts / worst residuals>)".
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import algebra, sampling
from .algebra import Hypercomplex, Kind, decompose, recompose
from .errors import NotInCentralizerError
from .matrix2 import (
    Mat2,
    det,
    det_dual_formula,
    det_split_double,
    double_from_components,
    dual_from_parts,
    hat,
    identity,
    mat_exp,
    mat_exp_real,
)
from .moebius import (
    MapTag,
    MoebiusMap,
    apply,
    apply_point,
    compose,
    fixed_points,
    fixed_points_real,
    identity_map,
    kernel_labels,
    mob_equal,
    class_point,
)
from .orbits import (
    dual_orbit_report,
    residual_shear_pair,
    residual_trivial_minus,
    residual_two_regime,
    sampled_orbit,
    start_double,
    start_dual,
    t_grid,
)
from .projline import (
    ClassTag,
    ProjPoint,
    admissible,
    bijection_f,
    canonical_ratio,
    canonicalize,
    equivalent,
    pr_base_point,
    project_sl,
    real_apply,
    same_class,
    transporter_nonadmissible,
    transporter_to,
)
from .subgroups import (
    DoubleGL,
    DoubleSL,
    DualGL,
    DualSL,
    RealGL,
    SigmaKind,
    centralizer_solve,
    dual_gl_det_closed_form,
    dual_gl_det_printed_form,
    eval_subgroup,
    exp_cross_check,
    group_law_residual,
    rotation_real,
    sl_membership_check,
    swap_double,
    swap_image,
)

RING_KINDS = (Kind.COMPLEX, Kind.DOUBLE, Kind.DUAL)
NONTRIVIAL = (SigmaKind.ELLIPTIC, SigmaKind.PARABOLIC, SigmaKind.HYPERBOLIC)


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{self.name}: {status} ({self.detail})"


def _fmt(v: float) -> str:
    return format(v, ".3e")


# ---------------------------------------------------------------------------
# algebra checks


def check_ring_laws(rng, n: int = 10_000) -> list[CheckResult]:
    out = []
    for kind in RING_KINDS:
        worst = 0.0
        good = 0
        for _ in range(n):
            x = sampling.random_number(kind, rng)
            y = sampling.random_number(kind, rng)
            z = sampling.random_number(kind, rng)
            scale = 1.0 + max(x.magnitude(), y.magnitude(), z.magnitude()) ** 3
            gaps = (
                ((x * y) - (y * x)).magnitude(),
                ((x * y) * z - x * (y * z)).magnitude(),
                (x * (y + z) - (x * y + x * z)).magnitude(),
            )
            rel = max(gaps) / scale
            worst = max(worst, rel)
            good += rel <= 1e-12
        out.append(CheckResult(
            f"ring-laws/{kind.name.lower()}", good == n,
            f"{good}/{n} triples, worst rel {_fmt(worst)}"))
    return out


def check_generator_squares() -> list[CheckResult]:
    ok = True
    for kind in RING_KINDS:
        u = algebra.generator(kind)
        sq = u * u
        ok = ok and sq.a1 == kind.sigma and sq.a2 == 0.0
    return [CheckResult("generator-squares", ok, "j^2=1, eps^2=0, i^2=-1 exact")]


def check_inverses(rng, n: int = 10_000) -> list[CheckResult]:
    out = []
    for kind in RING_KINDS:
        worst = 0.0
        good = 0
        for _ in range(n):
            x = sampling.random_unit(kind, rng)
            gap = (x * algebra.invert(x) - algebra.one(kind)).magnitude()
            worst = max(worst, gap)
            good += gap <= 1e-12
        out.append(CheckResult(
            f"unit-inverse/{kind.name.lower()}", good == n,
            f"{good}/{n} units, worst {_fmt(worst)}"))
    return out


def check_square_roots(rng, n: int = 10_000) -> list[CheckResult]:
    out = []
    worst = 0.0
    count_ok = 0
    identity_ok = 0
    for i in range(n):
        case = i % 4
        if case == 0:
            x = recompose(rng.uniform(0.05, 9.0), rng.uniform(0.05, 9.0))
            expected = 4
        elif case == 1:
            x = recompose(rng.uniform(0.05, 9.0), 0.0) if rng.random() < 0.5 \
                else recompose(0.0, rng.uniform(0.05, 9.0))
            expected = 2
        elif case == 2:
            x = algebra.zero(Kind.DOUBLE)
            expected = 1
        else:
            x = recompose(-rng.uniform(0.05, 9.0), rng.uniform(-9.0, 9.0))
            expected = 0
        roots = algebra.sqrt_all(x)
        count_ok += len(roots) == expected
        gaps = [(r * r - x).magnitude() for r in roots]
        if gaps:
            worst = max(worst, max(gaps))
        identity_ok += all(g < 1e-9 for g in gaps)
    out.append(CheckResult(
        "square-roots/double", count_ok == n and identity_ok == n,
        f"{count_ok}/{n} counts, worst s^2-x {_fmt(worst)}"))
    worst = 0.0
    count_ok = 0
    identity_ok = 0
    for i in range(n):
        case = i % 3
        if case == 0:
            x = Hypercomplex(Kind.DUAL, rng.uniform(0.05, 9.0), rng.uniform(-9.0, 9.0))
            expected = 2
        elif case == 1:
            x = algebra.zero(Kind.DUAL)
            expected = 1
        else:
            x = Hypercomplex(Kind.DUAL, -rng.uniform(0.05, 9.0), rng.uniform(-9.0, 9.0)) \
                if rng.random() < 0.5 else Hypercomplex(Kind.DUAL, 0.0, rng.uniform(0.2, 9.0))
            expected = 0
        roots = algebra.sqrt_all(x)
        count_ok += len(roots) == expected
        gaps = [(r * r - x).magnitude() for r in roots]
        if gaps:
            worst = max(worst, max(gaps))
        identity_ok += all(g < 1e-9 for g in gaps)
    out.append(CheckResult(
        "square-roots/dual", count_ok == n and identity_ok == n,
        f"{count_ok}/{n} counts, worst s^2-x {_fmt(worst)}"))
    return out


def check_idempotent_census() -> list[CheckResult]:
    expected = {(0.0, 0.0), (1.0, 1.0), (1.0, 0.0), (0.0, 1.0)}
    found = set()
    steps = [(-2.0 + 0.25 * k) for k in range(17)]
    for p in steps:
        for m in steps:
            x = recompose(p, m)
            if (x * x - x).is_zero(algebra.TAU_ZERO):
                found.add((p, m))
    ok = found == expected
    return [CheckResult("idempotent-census/double", ok,
                        f"{len(found)} idempotents on a 17x17 component grid")]


def check_split_isomorphism(rng, n: int = 10_000) -> list[CheckResult]:
    worst = 0.0
    good = 0
    for _ in range(n):
        x = sampling.random_number(Kind.DOUBLE, rng)
        y = sampling.random_number(Kind.DOUBLE, rng)
        xp, xm = decompose(x)
        yp, ym = decompose(y)
        zp, zm = decompose(x * y)
        scale = 1.0 + max(abs(xp * yp), abs(xm * ym))
        rel = max(abs(zp - xp * yp), abs(zm - xm * ym)) / scale
        worst = max(worst, rel)
        good += rel <= 1e-12
    return [CheckResult("split-isomorphism/double", good == n,
                        f"{good}/{n} products, worst rel {_fmt(worst)}")]


def check_trig_roundtrip(rng, n: int = 1_000) -> list[CheckResult]:
    worst = 0.0
    good = 0
    for sigma in (-1, 0, 1):
        for _ in range(n):
            if sigma == -1:
                t = rng.uniform(-math.pi / 2 + 1e-3, math.pi / 2 - 1e-3)
            else:
                t = rng.uniform(-3.0, 3.0)
            back = algebra.arctan_sigma(sigma, algebra.tan_sigma(sigma, t))
            gap = abs(back - t)
            worst = max(worst, gap)
            good += gap <= 1e-10
    return [CheckResult("inverse-trig-roundtrip", good == 3 * n,
                        f"{good}/{3 * n} round trips, worst {_fmt(worst)}")]


# ---------------------------------------------------------------------------
# matrix checks


def check_det_multiplicative(rng, n: int = 10_000) -> list[CheckResult]:
    out = []
    for kind in RING_KINDS:
        worst = 0.0
        good = 0
        for _ in range(n):
            x = Mat2(kind, *(sampling.random_number(kind, rng) for _ in range(4)))
            y = Mat2(kind, *(sampling.random_number(kind, rng) for _ in range(4)))
            gap = (det(x @ y) - det(x) * det(y)).magnitude()
            scale = 1.0 + (det(x) * det(y)).magnitude()
            worst = max(worst, gap / scale)
            good += gap / scale <= 1e-10
        out.append(CheckResult(
            f"det-multiplicative/{kind.name.lower()}", good == n,
            f"{good}/{n} pairs, worst rel {_fmt(worst)}"))
    return out


def check_det_component_formulas(rng, n: int = 10_000) -> list[CheckResult]:
    out = []
    worst = 0.0
    good = 0
    for _ in range(n):
        ap = rng.uniform(-2, 2, size=(2, 2))
        am = rng.uniform(-2, 2, size=(2, 2))
        direct = det(double_from_components(ap, am))
        formula = det_split_double(ap, am)
        gap = (direct - formula).magnitude()
        worst = max(worst, gap)
        good += gap <= 1e-10
    out.append(CheckResult("det-split/double", good == n,
                           f"{good}/{n} component pairs, worst {_fmt(worst)}"))
    worst = 0.0
    good = 0
    for _ in range(n):
        a1 = rng.uniform(-2, 2, size=(2, 2))
        a2 = rng.uniform(-2, 2, size=(2, 2))
        direct = det(dual_from_parts(a1, a2))
        formula = det_dual_formula(a1, a2)
        gap = (direct - formula).magnitude()
        worst = max(worst, gap)
        good += gap <= 1e-10
    out.append(CheckResult("det-epsilon-split/dual", good == n,
                           f"{good}/{n} part pairs, worst {_fmt(worst)}"))
    return out


def check_adjugate_identity(rng, n: int = 2_000) -> list[CheckResult]:
    out = []
    for kind in RING_KINDS:
        worst = 0.0
        good = 0
        for _ in range(n):
            x = Mat2(kind, *(sampling.random_number(kind, rng) for _ in range(4)))
            lhs = x @ hat(x)
            rhs = identity(kind).scale(det(x))
            gap = (lhs - rhs).max_entry_magnitude()
            worst = max(worst, gap)
            good += gap <= 1e-10
        out.append(CheckResult(
            f"adjugate-identity/{kind.name.lower()}", good == n,
            f"{good}/{n} matrices, worst {_fmt(worst)}"))
    return out


def check_exp_law(rng, n: int = 100) -> list[CheckResult]:
    out = []
    for kind in RING_KINDS:
        worst = 0.0
        good = 0
        for _ in range(n):
            b = Mat2(kind, *(sampling.random_number(kind, rng) for _ in range(4)))
            s = rng.uniform(-3, 3)
            t = rng.uniform(-3, 3)
            lhs = mat_exp(b, s + t)
            e_s = mat_exp(b, s)
            e_t = mat_exp(b, t)
            gap = (lhs - e_s @ e_t).max_entry_magnitude()
            # exponentials can reach 1e10 here; compare at the problem's scale
            scale = 1.0 + max(e_s.max_entry_magnitude() * e_t.max_entry_magnitude(),
                              lhs.max_entry_magnitude())
            worst = max(worst, gap / scale)
            good += gap / scale <= 1e-8
        out.append(CheckResult(
            f"exp-one-parameter/{kind.name.lower()}", good == n,
            f"{good}/{n} triples, worst rel {_fmt(worst)}"))
    return out


def check_exp_split(rng, n: int = 100) -> list[CheckResult]:
    worst = 0.0
    good = 0
    for _ in range(n):
        ap = rng.uniform(-2, 2, size=(2, 2))
        am = rng.uniform(-2, 2, size=(2, 2))
        t = rng.uniform(-2, 2)
        ring = mat_exp(double_from_components(ap, am), t)
        split = double_from_components(mat_exp_real(ap, t), mat_exp_real(am, t))
        gap = (ring - split).max_entry_magnitude()
        worst = max(worst, gap)
        good += gap <= 1e-8
    return [CheckResult("exp-component-split/double", good == n,
                        f"{good}/{n} matrices, worst {_fmt(worst)}")]


# ---------------------------------------------------------------------------
# projective line checks


def _double_membership_flags(p: ProjPoint, tol: float) -> list[bool]:
    xp, xm = decompose(p.x)
    yp, ym = decompose(p.y)
    unit = lambda a, b: abs(a) > tol and abs(b) > tol
    x_unit = unit(xp, xm)
    y_unit = unit(yp, ym)
    y_zero = abs(yp) <= tol and abs(ym) <= tol
    plus_zero = abs(xp) <= tol and abs(yp) <= tol
    minus_zero = abs(xm) <= tol and abs(ym) <= tol
    return [
        y_unit,                                                        # affine
        x_unit and y_zero,                                             # infinity
        x_unit and abs(yp) > tol and abs(ym) <= tol,                   # omega plus
        x_unit and abs(ym) > tol and abs(yp) <= tol,                   # omega minus
        abs(xp) > tol and abs(xm) <= tol and abs(ym) > tol and abs(yp) <= tol,  # sigma one
        abs(xm) > tol and abs(xp) <= tol and abs(yp) > tol and abs(ym) <= tol,  # sigma two
        minus_zero and not plus_zero,                                  # PR plus
        plus_zero and not minus_zero,                                  # PR minus
    ]


_DOUBLE_FLAG_TAGS = [ClassTag.AFFINE, ClassTag.INFINITY, ClassTag.OMEGA_PLUS,
                     ClassTag.OMEGA_MINUS, ClassTag.SIGMA_ONE, ClassTag.SIGMA_TWO,
                     ClassTag.PR_PLUS, ClassTag.PR_MINUS]


def _dual_membership_flags(p: ProjPoint, tol: float) -> list[bool]:
    x_unit = abs(p.x.a1) > tol
    y_unit = abs(p.y.a1) > tol
    return [
        y_unit,                                                # affine
        x_unit and not y_unit and abs(p.y.a2) <= tol,          # infinity
        x_unit and not y_unit and abs(p.y.a2) > tol,           # dual omega
        not x_unit and not y_unit,                             # PR
    ]


_DUAL_FLAG_TAGS = [ClassTag.AFFINE, ClassTag.INFINITY, ClassTag.DUAL_OMEGA, ClassTag.PR]


def check_class_partition(rng, n: int = 10_000) -> list[CheckResult]:
    out = []
    tol = algebra.TAU_ZERO
    for kind, flags_of, tags in ((Kind.DOUBLE, _double_membership_flags, _DOUBLE_FLAG_TAGS),
                                 (Kind.DUAL, _dual_membership_flags, _DUAL_FLAG_TAGS)):
        good = 0
        for _ in range(n):
            p = sampling.random_point_mixed(kind, rng)
            flags = flags_of(p, tol)
            cls = canonicalize(p, tol)
            good += sum(flags) == 1 and tags[flags.index(True)] is cls.tag
        out.append(CheckResult(
            f"class-partition/{kind.name.lower()}", good == n,
            f"{good}/{n} points land in exactly one class"))
    return out


def check_unit_scaling(rng, n: int = 1_000) -> list[CheckResult]:
    out = []
    for kind in (Kind.DOUBLE, Kind.DUAL):
        good = 0
        for _ in range(n):
            p = sampling.random_point_mixed(kind, rng)
            u = sampling.random_unit(kind, rng, 0.2, 5.0)
            good += same_class(canonicalize(p.scaled(u)), canonicalize(p))
        out.append(CheckResult(
            f"unit-scaling-stability/{kind.name.lower()}", good == n,
            f"{good}/{n} scaled points keep their class"))
    return out


def check_admissibility_invariance(rng, n: int = 1_000) -> list[CheckResult]:
    out = []
    for kind in (Kind.DOUBLE, Kind.DUAL):
        good = 0
        for _ in range(n):
            p = sampling.random_point_mixed(kind, rng)
            m = MoebiusMap(sampling.random_gl(kind, rng))
            good += admissible(apply_point(m, p)) == admissible(p)
        out.append(CheckResult(
            f"admissibility-invariance/{kind.name.lower()}", good == n,
            f"{good}/{n} images preserve admissibility"))
    return out


def check_transitivity(rng, n: int = 1_000) -> list[CheckResult]:
    out = []
    for kind in RING_KINDS:
        good = 0
        tried = 0
        while tried < n:
            p = sampling.random_point_mixed(kind, rng)
            if not admissible(p):
                continue
            tried += 1
            m = MoebiusMap(transporter_to(p))
            base = ProjPoint(kind, algebra.one(kind), algebra.zero(kind))
            good += equivalent(apply_point(m, base), p)
        out.append(CheckResult(
            f"transitivity-witness/{kind.name.lower()}", good == n,
            f"{good}/{n} transporters land on target"))
    return out


def check_family_transporters(rng, n: int = 1_000) -> list[CheckResult]:
    out = []
    cases = ((Kind.DOUBLE, ClassTag.PR_PLUS), (Kind.DOUBLE, ClassTag.PR_MINUS),
             (Kind.DUAL, ClassTag.PR))
    for kind, tag in cases:
        good = 0
        for i in range(n):
            if i % 10 == 0:
                ratio = canonical_ratio(0.0, sampling._nonzero_real(rng))
            elif i % 10 == 1:
                ratio = canonical_ratio(sampling._nonzero_real(rng), 0.0)
            else:
                ratio = canonical_ratio(rng.uniform(-3, 3), rng.uniform(-3, 3))
            from .projline import CanonicalClass

            target = CanonicalClass(tag, ratio=ratio)
            m = MoebiusMap(transporter_nonadmissible(kind, target))
            image = apply(m, pr_base_point(kind, tag))
            good += same_class(image, target)
        out.append(CheckResult(
            f"family-transporter/{tag.value}", good == n,
            f"{good}/{n} transporters land on target"))
    return out


def check_projection_equivariance(rng, n: int = 1_000) -> list[CheckResult]:
    out = []
    good = 0
    for i in range(n):
        g = sampling.random_sl(Kind.DOUBLE, rng)
        gp, gm = project_sl(g)
        v = (rng.uniform(-3, 3), rng.uniform(-3, 3))
        family = "+" if i % 2 == 0 else "-"
        comp = gp if family == "+" else gm
        lhs = apply_point(MoebiusMap(g), bijection_f(Kind.DOUBLE, v[0], v[1], family))
        rhs_v = real_apply(comp, v)
        rhs = bijection_f(Kind.DOUBLE, rhs_v[0], rhs_v[1], family)
        good += equivalent(lhs, rhs)
    out.append(CheckResult("sl-projection-equivariance/double", good == n,
                           f"{good}/{n} component actions match"))
    good = 0
    for _ in range(n):
        g = sampling.random_sl(Kind.DUAL, rng)
        g1 = project_sl(g)
        v = (rng.uniform(-3, 3), rng.uniform(-3, 3))
        lhs = apply_point(MoebiusMap(g), bijection_f(Kind.DUAL, v[0], v[1]))
        rhs_v = real_apply(g1, v)
        rhs = bijection_f(Kind.DUAL, rhs_v[0], rhs_v[1])
        good += equivalent(lhs, rhs)
    out.append(CheckResult("sl-projection-equivariance/dual", good == n,
                           f"{good}/{n} a1-part actions match"))
    return out


# ---------------------------------------------------------------------------
# Moebius map checks


def check_action_class_preserving(rng, n: int = 1_000) -> list[CheckResult]:
    out = []
    for kind in (Kind.DOUBLE, Kind.DUAL):
        good = 0
        for _ in range(n):
            m = MoebiusMap(sampling.random_gl(kind, rng))
            p = sampling.random_point_mixed(kind, rng)
            u = sampling.random_unit(kind, rng, 0.2, 5.0)
            good += same_class(apply(m, p.scaled(u)), apply(m, p))
        out.append(CheckResult(
            f"action-class-preserving/{kind.name.lower()}", good == n,
            f"{good}/{n} unit rescalings act identically"))
    return out


def check_composition(rng, n: int = 1_000) -> list[CheckResult]:
    out = []
    for kind in RING_KINDS:
        good = 0
        for _ in range(n):
            m1 = MoebiusMap(sampling.random_gl(kind, rng))
            m2 = MoebiusMap(sampling.random_gl(kind, rng))
            p = sampling.random_point_mixed(kind, rng) if kind is not Kind.COMPLEX \
                else sampling.random_point(kind, rng)
            lhs = apply(compose(m1, m2), p)
            rhs = apply(m1, apply_point(m2, p))
            good += same_class(lhs, rhs)
        out.append(CheckResult(
            f"composition-homomorphism/{kind.name.lower()}", good == n,
            f"{good}/{n} compositions agree"))
    return out


def check_kernels(seed: int) -> list[CheckResult]:
    expected = {
        "real": ["I", "-I"],
        "complex": ["I", "-I"],
        "double": ["I", "jI", "-jI", "-I"],
        "dual": ["I", "-I"],
    }
    out = []
    for name, want in expected.items():
        got = kernel_labels(name, n_probes=100, seed=seed)
        out.append(CheckResult(
            f"kernel-scalars/{name}", sorted(got) == sorted(want),
            f"{{{', '.join(got)}}} on 100 probes"))
    return out


def check_fixed_point_reapply(rng, n: int = 200) -> list[CheckResult]:
    out = []
    for kind in RING_KINDS:
        good = 0
        total = 0
        produced = 0
        while total < n:
            m = MoebiusMap(sampling.random_sl(kind, rng))
            if mob_equal(m, identity_map(kind)):
                continue
            total += 1
            fps = fixed_points(m)
            for cls in fps.points:
                produced += 1
                p = class_point(kind, cls)
                good += same_class(apply(m, p), cls)
            for family in fps.families:
                for rep in family.representatives:
                    produced += 1
                    good += same_class(apply(m, rep), canonicalize(rep))
        out.append(CheckResult(
            f"fixed-point-reapply/{kind.name.lower()}", good == produced,
            f"{good}/{produced} fixed classes re-apply to themselves"))
    return out


def check_class_vs_fixed_count(rng, n: int = 1_000) -> list[CheckResult]:
    expected = {MapTag.ELLIPTIC: 0, MapTag.PARABOLIC: 1, MapTag.HYPERBOLIC: 2}
    good = 0
    total = 0
    for i in range(n):
        if i % 5 == 0:
            # conjugated shear: parabolic cases are measure zero otherwise
            k = sampling.random_sl_real(rng)
            s = rng.uniform(0.2, 2.0)
            g = k @ rotation_real(SigmaKind.PARABOLIC, s) @ np.linalg.inv(k)
            sign = 1.0 if rng.random() < 0.5 else -1.0
            g = sign * g
        else:
            g = sampling.random_sl_real(rng)
        t2 = float(np.trace(g)) ** 2
        if abs(t2 - 4.0) < 1e-9:
            tag = MapTag.PARABOLIC
        elif t2 < 4.0:
            tag = MapTag.ELLIPTIC
        else:
            tag = MapTag.HYPERBOLIC
        fps = fixed_points_real(g)
        if fps is None:
            continue
        total += 1
        good += len(fps) == expected[tag]
    return [CheckResult("trace-class-vs-fixed-count/real", good == total,
                        f"{good}/{total} maps match the count table")]


# ---------------------------------------------------------------------------
# subgroup checks


def _random_specs(rng, n_per_family: int = 20):
    families = {}
    families["real-gl"] = [
        RealGL(NONTRIVIAL[int(rng.integers(0, 3))], rng.uniform(-1, 1))
        for _ in range(n_per_family)
    ] + [RealGL(SigmaKind.TRIVIAL, rng.uniform(-1, 1))]
    families["double-sl"] = [
        DoubleSL(NONTRIVIAL[int(rng.integers(0, 3))],
                 NONTRIVIAL[int(rng.integers(0, 3))],
                 rng.uniform(0.5, 2.0))
        for _ in range(n_per_family)
    ] + [DoubleSL(NONTRIVIAL[int(rng.integers(0, 3))], SigmaKind.TRIVIAL)]
    families["double-gl"] = [
        DoubleGL(NONTRIVIAL[int(rng.integers(0, 3))], rng.uniform(-1, 1),
                 NONTRIVIAL[int(rng.integers(0, 3))], rng.uniform(-1, 1),
                 rng.uniform(0.5, 2.0))
        for _ in range(n_per_family)
    ]
    families["dual-gl"] = [
        DualGL(NONTRIVIAL[int(rng.integers(0, 3))], rng.uniform(-1, 1),
               sampling._signed_magnitude(rng, 0.5, 2.0), rng.uniform(-1, 1))
        for _ in range(n_per_family)
    ] + [DualGL(SigmaKind.TRIVIAL, rng.uniform(-1, 1),
                sampling._signed_magnitude(rng, 0.5, 2.0), rng.uniform(-1, 1))]
    families["dual-sl"] = [
        DualSL(NONTRIVIAL[int(rng.integers(0, 3))],
               sampling._signed_magnitude(rng, 0.5, 2.0),
               rng.uniform(-1, 1), rng.uniform(-1, 1))
        for _ in range(n_per_family)
    ]
    return families


def _magnitude_of(m) -> float:
    if isinstance(m, np.ndarray):
        return float(np.max(np.abs(m)))
    return m.max_entry_magnitude()


def check_group_law(rng, n_specs: int = 20, n_pairs: int = 100) -> list[CheckResult]:
    out = []
    for family, specs in _random_specs(rng, n_specs).items():
        worst = 0.0
        good = 0
        total = 0
        for spec in specs:
            for _ in range(n_pairs):
                t1 = rng.uniform(-3, 3)
                t2 = rng.uniform(-3, 3)
                r = group_law_residual(spec, t1, t2)
                # exp-scaled families reach 1e10 at |t1+t2| = 6: relative check
                scale = 1.0 + _magnitude_of(eval_subgroup(spec, t1)) \
                    * _magnitude_of(eval_subgroup(spec, t2))
                worst = max(worst, r / scale)
                good += r / scale < 1e-8
                total += 1
        out.append(CheckResult(
            f"one-parameter-law/{family}", good == total,
            f"{good}/{total} (t1,t2) pairs, worst rel {_fmt(worst)}"))
    return out


def check_det_one(rng, n_specs: int = 20) -> list[CheckResult]:
    out = []
    ts = t_grid(-2.0, 2.0, 0.25)
    specs = _random_specs(rng, n_specs)
    for family in ("double-sl", "dual-sl"):
        worst = 0.0
        good = 0
        total = 0
        for spec in specs[family]:
            for t in ts:
                d = sl_membership_check(spec, t)
                gap = (d - algebra.one(d.kind)).magnitude()
                worst = max(worst, gap)
                good += gap < 1e-8
                total += 1
        out.append(CheckResult(
            f"determinant-one/{family}", good == total,
            f"{good}/{total} grid points, worst {_fmt(worst)}"))
    return out


def check_dual_gl_det(rng, n_specs: int = 20) -> list[CheckResult]:
    ts = t_grid(-2.0, 2.0, 0.25)
    worst = 0.0
    printed_gap = 0.0
    good = 0
    total = 0
    for spec in _random_specs(rng, n_specs)["dual-gl"]:
        for t in ts:
            actual = sl_membership_check(spec, t)
            gap = (actual - dual_gl_det_closed_form(spec, t)).magnitude()
            printed_gap = max(printed_gap,
                              (actual - dual_gl_det_printed_form(spec, t)).magnitude())
            worst = max(worst, gap)
            good += gap < 1e-8
            total += 1
    return [CheckResult(
        "determinant-closed-form/dual-gl", good == total,
        f"{good}/{total} grid points, worst {_fmt(worst)}; "
        f"cos(2t+t0) variant drifts up to {_fmt(printed_gap)}")]


def check_centralizer_grid() -> list[CheckResult]:
    out = []
    values = [-2.0 + 0.5 * k for k in range(9)]
    for sigma_kind in NONTRIVIAL:
        s = sigma_kind.sigma
        good = 0
        total = 0
        commute_ok = 0
        successes = 0
        h = rotation_real(sigma_kind, 0.7)
        for p in values:
            for q in values:
                for r in values:
                    for w in values:
                        total += 1
                        b = np.array([[p, q], [r, w]])
                        structural = (p == w) and (q == s * r)
                        try:
                            centralizer_solve(sigma_kind, b)
                            solved = True
                        except NotInCentralizerError:
                            solved = False
                        good += solved == structural
                        if solved:
                            successes += 1
                            commute_ok += float(np.max(np.abs(b @ h - h @ b))) < 1e-9
        out.append(CheckResult(
            f"centralizer-grid/{sigma_kind.letter}",
            good == total and commute_ok == successes,
            f"{good}/{total} grid matrices, {commute_ok}/{successes} successes commute"))
    return out


def check_exp_cross(rng, n_specs: int = 10) -> list[CheckResult]:
    out = []
    for family, specs in _random_specs(rng, n_specs).items():
        worst = 0.0
        good = 0
        for spec in specs:
            spec = _clamp_params(spec)
            r = exp_cross_check(spec)
            worst = max(worst, r)
            good += r < 1e-5
        out.append(CheckResult(
            f"exp-oracle/{family}", good == len(specs),
            f"{good}/{len(specs)} descriptions, worst {_fmt(worst)}"))
    return out


def _clamp_params(spec):
    clamp = lambda v: max(-1.5, min(1.5, v))
    if isinstance(spec, RealGL):
        return RealGL(spec.sigma, clamp(spec.lam))
    if isinstance(spec, DoubleSL):
        return DoubleSL(spec.sigma_plus, spec.sigma_minus, clamp(spec.a))
    if isinstance(spec, DoubleGL):
        return DoubleGL(spec.sigma_plus, clamp(spec.lam_plus),
                        spec.sigma_minus, clamp(spec.lam_minus), clamp(spec.a))
    if isinstance(spec, DualGL):
        lam = clamp(spec.lam) or 0.5
        return DualGL(spec.sigma, clamp(spec.lam1), lam, clamp(spec.t0))
    lam = clamp(spec.lam) or 0.5
    return DualSL(spec.sigma, lam, clamp(spec.lam1), clamp(spec.t0))


def check_swap_homomorphism(rng, n: int = 200) -> list[CheckResult]:
    good = 0
    worst = 0.0
    for i in range(n):
        if i % 2 == 0:
            spec = DoubleSL(NONTRIVIAL[int(rng.integers(0, 3))],
                            NONTRIVIAL[int(rng.integers(0, 3))],
                            sampling._signed_magnitude(rng, 0.5, 2.0))
        else:
            spec = DoubleGL(NONTRIVIAL[int(rng.integers(0, 3))], rng.uniform(-1, 1),
                            NONTRIVIAL[int(rng.integers(0, 3))], rng.uniform(-1, 1),
                            sampling._signed_magnitude(rng, 0.5, 2.0))
        mirrored, scale = swap_double(spec)
        t = rng.uniform(-2, 2)
        lhs = eval_subgroup(mirrored, scale * t)
        rhs = swap_image(eval_subgroup(spec, t))
        gap = (lhs - rhs).max_entry_magnitude()
        rel = gap / (1.0 + rhs.max_entry_magnitude())
        worst = max(worst, rel)
        good += rel <= 1e-12
    return [CheckResult("component-swap-homomorphism/double", good == n,
                        f"{good}/{n} samples, worst rel {_fmt(worst)}")]


# ---------------------------------------------------------------------------
# orbit checks


def check_orbit_two_regime(rng, n_sets: int = 20) -> list[CheckResult]:
    ts = t_grid(-2.0, 2.0, 0.1)
    worst = 0.0
    good = 0
    total = 0
    for _ in range(n_sets):
        spec = DoubleSL(NONTRIVIAL[int(rng.integers(0, 3))],
                        NONTRIVIAL[int(rng.integers(0, 3))],
                        rng.uniform(0.5, 2.0))
        start = start_double(rng.uniform(0.5, 3.0), rng.uniform(0.5, 3.0))
        sample = sampled_orbit(spec, start, ts)
        for row in sample.rows:
            if row.residual_primary is None:
                continue
            total += 1
            worst = max(worst, abs(row.residual_primary))
            good += abs(row.residual_primary) < 1e-8
    return [CheckResult("orbit-equation/two-regime", good == total,
                        f"{good}/{total} applicable rows, worst {_fmt(worst)}")]


def check_orbit_shear_pair(rng, n_sets: int = 20) -> list[CheckResult]:
    ts = t_grid(-2.0, 2.0, 0.1)
    worst = 0.0
    good = 0
    total = 0
    agree = 0
    agree_total = 0
    for _ in range(n_sets):
        spec = DoubleSL(SigmaKind.PARABOLIC, SigmaKind.PARABOLIC, rng.uniform(0.5, 2.0))
        start = start_double(rng.uniform(0.5, 3.0), rng.uniform(0.5, 3.0))
        sample = sampled_orbit(spec, start, ts)
        for row in sample.rows:
            if row.residual_secondary is not None:
                total += 1
                # rows near projective poles carry coordinates ~1/dist; the
                # quadratic form is then computable only to ~(u^2+v^2)*eps
                scale = 1.0 + row.u * row.u + row.v * row.v
                worst = max(worst, abs(row.residual_secondary) / scale)
                good += abs(row.residual_secondary) < 1e-8 * scale
            if row.residual_primary is not None and row.residual_secondary is not None:
                agree_total += 1
                agree += (abs(row.residual_primary) < 1e-8) \
                    == (abs(row.residual_secondary) < 1e-8)
        # the two forms must also agree off orbit
        for _ in range(5):
            u, v = rng.uniform(-3, 3), rng.uniform(-3, 3)
            r11 = residual_two_regime(0, 0, spec.a, start, u, v)
            r1 = residual_shear_pair(spec.a, start, u, v)
            if r11 is None or r1 is None:
                continue
            agree_total += 1
            agree += (abs(r11) < 1e-8) == (abs(r1) < 1e-8)
    ok = good == total and agree == agree_total
    return [CheckResult("orbit-equation/shear-pair", ok,
                        f"{good}/{total} rows, worst {_fmt(worst)}; "
                        f"{agree}/{agree_total} vanish together with the general form")]


def check_orbit_line(rng, n_sets: int = 20) -> list[CheckResult]:
    ts = t_grid(-2.0, 2.0, 0.1)
    worst_line = 0.0
    worst_corr = 0.0
    good = 0
    total = 0
    printed_pattern_ok = 0
    for i in range(n_sets):
        sigma = NONTRIVIAL[int(rng.integers(0, 3))]
        spec = DoubleSL(sigma, SigmaKind.TRIVIAL)
        y_minus = 1.0 if i % 5 == 0 else rng.uniform(0.5, 3.0)
        start = start_double(rng.uniform(0.5, 3.0), y_minus)
        sample = sampled_orbit(spec, start, ts)
        for row in sample.rows:
            if row.u is None:
                continue
            res = residual_trivial_minus(start, row.u, row.v)
            total += 1
            lin = 1.0 + abs(row.u) + abs(row.v)
            quad = 1.0 + row.u * row.u + row.v * row.v
            worst_line = max(worst_line, abs(res.line) / lin)
            worst_corr = max(worst_corr, abs(res.corrected) / quad)
            good += abs(res.line) < 1e-10 * lin and abs(res.corrected) < 1e-10 * quad
            # on the orbit the circulating variant reduces to 2v(1 - y-)
            predicted = 2.0 * row.v * (1.0 - y_minus)
            printed_pattern_ok += abs(res.printed - predicted) < 1e-9 * quad
    ok = good == total and printed_pattern_ok == total
    return [CheckResult("orbit-equation/trivial-minus-line", ok,
                        f"{good}/{total} rows, worst line {_fmt(worst_line)}, "
                        f"corrected {_fmt(worst_corr)}; unmodified variant = 2v(1-y-) "
                        f"on {printed_pattern_ok}/{total}")]


def check_orbit_dual_report(rng, n_sets: int = 8) -> list[CheckResult]:
    cases = []
    cases.append((DualSL(SigmaKind.PARABOLIC, 1.0, 0.0, 0.0), start_dual(1.0, 0.0)))
    for _ in range(n_sets - 1):
        spec = DualSL(NONTRIVIAL[int(rng.integers(0, 3))],
                      sampling._signed_magnitude(rng, 0.5, 2.0),
                      rng.uniform(-1, 1), rng.uniform(-1, 1))
        cases.append((spec, start_dual(rng.uniform(0.5, 3.0), rng.uniform(0.5, 3.0))))
    verdicts = dual_orbit_report(cases)
    n_agree = sum(1 for v in verdicts if v.agrees)
    complete = len(verdicts) == len(cases) and all(v.n_applicable > 0 for v in verdicts)
    return [CheckResult(
        "orbit-equation/dual-displayed-form", complete,
        f"verdicts for {len(verdicts)} parameter sets: {n_agree} agree with the "
        f"oracle, {len(verdicts) - n_agree} disagree (reported, not asserted)")]


def check_orbit_discrimination(rng, n: int = 500) -> list[CheckResult]:
    hits = 0
    total = 0
    for _ in range(n):
        a = rng.uniform(0.5, 2.0)
        start = start_double(rng.uniform(0.5, 3.0), rng.uniform(0.5, 3.0))
        u, v = rng.uniform(-3, 3), rng.uniform(-3, 3)
        r = residual_shear_pair(a, start, u, v)
        if r is None:
            continue
        total += 1
        hits += abs(r) > 1e-3
    share = hits / max(total, 1)
    return [CheckResult("orbit-equation/off-orbit-discrimination", share > 0.9,
                        f"{hits}/{total} random points rejected")]


# ---------------------------------------------------------------------------
# driver


def run_all(seed: int) -> list[CheckResult]:
    rng = sampling.rng_from_seed(seed)
    results: list[CheckResult] = []
    results += check_ring_laws(rng)
    results += check_generator_squares()
    results += check_inverses(rng)
    results += check_square_roots(rng)
    results += check_idempotent_census()
    results += check_split_isomorphism(rng)
    results += check_trig_roundtrip(rng)
    results += check_det_multiplicative(rng)
    results += check_det_component_formulas(rng)
    results += check_adjugate_identity(rng)
    results += check_exp_law(rng)
    results += check_exp_split(rng)
    results += check_class_partition(rng)
    results += check_unit_scaling(rng)
    results += check_admissibility_invariance(rng)
    results += check_transitivity(rng)
    results += check_family_transporters(rng)
    results += check_projection_equivariance(rng)
    results += check_action_class_preserving(rng)
    results += check_composition(rng)
    results += check_kernels(seed)
    results += check_fixed_point_reapply(rng)
    results += check_class_vs_fixed_count(rng)
    results += check_group_law(rng)
    results += check_det_one(rng)
    results += check_dual_gl_det(rng)
    results += check_centralizer_grid()
    results += check_exp_cross(rng)
    results += check_swap_homomorphism(rng)
    results += check_orbit_two_regime(rng)
    results += check_orbit_shear_pair(rng)
    results += check_orbit_line(rng)
    results += check_orbit_dual_report(rng)
    results += check_orbit_discrimination(rng)
    return results


def format_report(results: list[CheckResult], seed: int) -> str:
    lines = [r.line() for r in results]
    n_pass = sum(r.passed for r in results)
    lines.append(f"passed {n_pass}/{len(results)} checks with seed {seed}")
    return "\n".join(lines) + "\n"
