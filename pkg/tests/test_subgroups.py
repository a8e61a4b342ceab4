import math

import numpy as np
import pytest

from hypermoebius.algebra import Kind, number, one
from hypermoebius.errors import DomainError, InvalidLiteralError, NotInCentralizerError
from hypermoebius.matrix2 import det, identity, mat_exp_real
from hypermoebius.subgroups import (
    DoubleGL,
    DoubleSL,
    DualGL,
    DualSL,
    RealGL,
    SigmaKind,
    centralizer_solve,
    classify_spec,
    conjugate_spec,
    dual_gl_det_closed_form,
    dual_gl_det_printed_form,
    eval_subgroup,
    exp_cross_check,
    generator_of,
    group_law_residual,
    parse_spec,
    render_spec,
    rotation_real,
    similarity_residual,
    sl_membership_check,
    swap_double,
    swap_image,
)
from hypermoebius.sampling import rng_from_seed

NONTRIVIAL = (SigmaKind.ELLIPTIC, SigmaKind.PARABOLIC, SigmaKind.HYPERBOLIC)


class TestEval:
    def test_shear_matrix(self):
        m = eval_subgroup(RealGL(SigmaKind.PARABOLIC), 1.5)
        assert np.allclose(m, [[1, 0], [1.5, 1]])

    def test_double_with_trivial_minus(self):
        m = eval_subgroup(DoubleSL(SigmaKind.HYPERBOLIC, SigmaKind.TRIVIAL), 0.8)
        from hypermoebius.matrix2 import components_double

        plus, minus = components_double(m)
        assert np.allclose(plus, [[math.cosh(0.8), math.sinh(0.8)],
                                  [math.sinh(0.8), math.cosh(0.8)]])
        assert np.allclose(minus, np.eye(2))

    def test_zero_gives_identity(self):
        specs = [RealGL(SigmaKind.ELLIPTIC, 0.3),
                 DoubleSL(SigmaKind.ELLIPTIC, SigmaKind.HYPERBOLIC, 2.0),
                 DualGL(SigmaKind.PARABOLIC, 0.1, 1.0, 0.5),
                 DualSL(SigmaKind.ELLIPTIC, 1.0, 0.2, 0.4)]
        for spec in specs:
            m = eval_subgroup(spec, 0.0)
            if isinstance(m, np.ndarray):
                assert np.allclose(m, np.eye(2))
            else:
                assert m.close_to(identity(m.kind), 1e-12)

    def test_dual_lam_zero_rejected(self):
        with pytest.raises(DomainError):
            DualGL(SigmaKind.ELLIPTIC, 0.0, 0.0, 0.0)
        with pytest.raises(DomainError):
            DualSL(SigmaKind.ELLIPTIC, 0.0)

    def test_dual_sl_needs_active_regime(self):
        with pytest.raises(DomainError):
            DualSL(SigmaKind.TRIVIAL, 1.0)


class TestGroupLaw:
    def test_zero_pair(self):
        assert group_law_residual(DualSL(SigmaKind.ELLIPTIC, 1.0, 0.5, 0.3), 0.0, 0.0) == 0.0

    def test_dual_gl_shear(self):
        spec = DualGL(SigmaKind.PARABOLIC, 0.0, 1.0, 0.0)
        assert group_law_residual(spec, 1.0, 2.0) < 1e-10

    def test_double_mixed_regimes(self):
        rng = rng_from_seed(59)
        spec = DoubleSL(SigmaKind.ELLIPTIC, SigmaKind.HYPERBOLIC, 2.0)
        for _ in range(50):
            assert group_law_residual(spec, rng.uniform(-2, 2), rng.uniform(-2, 2)) < 1e-10

    def test_dual_sl_nonzero_shift(self):
        rng = rng_from_seed(61)
        for sigma in NONTRIVIAL:
            spec = DualSL(sigma, 1.3, 0.4, 0.9)
            for _ in range(50):
                assert group_law_residual(spec, rng.uniform(-2, 2), rng.uniform(-2, 2)) < 1e-9


class TestDeterminants:
    def test_double_sl_unit_det(self):
        spec = DoubleSL(SigmaKind.PARABOLIC, SigmaKind.ELLIPTIC, 1.3)
        for t in (-1.5, -0.2, 0.7, 2.0):
            assert sl_membership_check(spec, t).close_to(one(Kind.DOUBLE), 1e-9)

    def test_dual_sl_unit_det(self):
        spec = DualSL(SigmaKind.HYPERBOLIC, 1.0, 0.5, 0.3)
        assert sl_membership_check(spec, 0.7).close_to(one(Kind.DUAL), 1e-9)

    def test_dual_gl_det_matches_closed_form(self):
        rng = rng_from_seed(67)
        for sigma in (*NONTRIVIAL, SigmaKind.TRIVIAL):
            spec = DualGL(sigma, rng.uniform(-1, 1), 1.5, rng.uniform(-1, 1))
            for t in (-1.2, 0.4, 0.9):
                actual = sl_membership_check(spec, t)
                assert actual.close_to(dual_gl_det_closed_form(spec, t), 1e-9)

    def test_printed_det_variant_disagrees_off_shear(self):
        spec = DualGL(SigmaKind.ELLIPTIC, 1.0, 2.0, 0.0)
        actual = sl_membership_check(spec, 0.5)
        assert actual.close_to(dual_gl_det_closed_form(spec, 0.5), 1e-10)
        gap = (actual - dual_gl_det_printed_form(spec, 0.5)).magnitude()
        assert gap > 1e-2  # the cos(2t+t0) variant is measurably wrong

    def test_printed_det_variant_agrees_for_shear(self):
        spec = DualGL(SigmaKind.PARABOLIC, 0.3, 1.0, 0.8)
        actual = sl_membership_check(spec, 0.6)
        assert actual.close_to(dual_gl_det_printed_form(spec, 0.6), 1e-10)


class TestCentralizer:
    def test_circular_example(self):
        fit = centralizer_solve(SigmaKind.ELLIPTIC, np.array([[3.0, -4.0], [4.0, 3.0]]))
        assert fit.lam == pytest.approx(5.0)
        assert fit.s0 == pytest.approx(math.atan(4 / 3))

    def test_shear_mismatch_rejected(self):
        with pytest.raises(NotInCentralizerError):
            centralizer_solve(SigmaKind.ELLIPTIC, np.array([[1.0, 1.0], [0.0, 1.0]]))

    def test_identity_fit(self):
        for sigma in NONTRIVIAL:
            fit = centralizer_solve(sigma, np.eye(2))
            assert fit.lam == pytest.approx(1.0) and fit.s0 == pytest.approx(0.0)

    def test_structure_iff_success_on_grid(self):
        values = [-1.0, 0.0, 1.5]
        for sigma in NONTRIVIAL:
            s = sigma.sigma
            h = rotation_real(sigma, 0.7)
            for p in values:
                for q in values:
                    for r in values:
                        for w in values:
                            b = np.array([[p, q], [r, w]])
                            structural = p == w and q == s * r
                            try:
                                centralizer_solve(sigma, b)
                                solved = True
                            except NotInCentralizerError:
                                solved = False
                            assert solved == structural
                            if solved:
                                assert np.max(np.abs(b @ h - h @ b)) < 1e-9

    def test_hyperbolic_off_chart_members_still_succeed(self):
        # equal diagonal with b = c but |c| > |a|: commutes, no lam*H(s0) chart
        fit = centralizer_solve(SigmaKind.HYPERBOLIC, np.array([[1.0, 2.0], [2.0, 1.0]]))
        assert fit.lam is None and fit.s0 is None

    def test_parametrized_fit_reproduces_matrix(self):
        rng = rng_from_seed(71)
        for sigma in NONTRIVIAL:
            for _ in range(50):
                lam = rng.uniform(0.3, 2.0) * (1 if rng.random() < 0.5 else -1)
                s0 = rng.uniform(-1.2, 1.2)
                b = lam * rotation_real(sigma, s0)
                fit = centralizer_solve(sigma, b)
                assert fit.lam == pytest.approx(lam, abs=1e-9)
                assert fit.s0 == pytest.approx(s0, abs=1e-9)


class TestConjugation:
    def test_identity_conjugation_residual_zero(self):
        spec = DoubleSL(SigmaKind.ELLIPTIC, SigmaKind.PARABOLIC, 1.2)
        conj = conjugate_spec(spec, identity(Kind.DOUBLE))
        assert similarity_residual(spec, conj) < 1e-12

    def test_componentwise_conjugation(self):
        from hypermoebius.matrix2 import components_double

        spec = DoubleSL(SigmaKind.HYPERBOLIC, SigmaKind.ELLIPTIC, 0.8)
        kp = np.array([[1.0, 1.0], [0.0, 1.0]])
        km = np.array([[2.0, 0.0], [0.5, 1.0]])
        conj = conjugate_spec(spec, (kp, km))
        t = 0.9
        plus, minus = components_double(conj.eval(t))
        want_plus = kp @ rotation_real(SigmaKind.HYPERBOLIC, t) @ np.linalg.inv(kp)
        want_minus = km @ rotation_real(SigmaKind.ELLIPTIC, 0.8 * t) @ np.linalg.inv(km)
        assert np.allclose(plus, want_plus) and np.allclose(minus, want_minus)

    def test_conjugated_shear_still_a_subgroup(self):
        conj = conjugate_spec(RealGL(SigmaKind.PARABOLIC), np.array([[1.0, 1.0], [0.0, 1.0]]))
        rng = rng_from_seed(73)
        for _ in range(30):
            assert group_law_residual(conj, rng.uniform(-2, 2), rng.uniform(-2, 2)) < 1e-10


class TestSwap:
    def test_image_matches_reparametrized_mirror(self):
        spec = DoubleSL(SigmaKind.ELLIPTIC, SigmaKind.HYPERBOLIC, 2.0)
        mirrored, scale = swap_double(spec)
        t = 0.77
        lhs = eval_subgroup(mirrored, scale * t)
        rhs = swap_image(eval_subgroup(spec, t))
        assert (lhs - rhs).max_entry_magnitude() < 1e-12

    def test_trivial_minus_swaps_to_trivial_plus(self):
        mirrored, scale = swap_double(DoubleSL(SigmaKind.PARABOLIC, SigmaKind.TRIVIAL))
        assert mirrored.sigma_plus is SigmaKind.TRIVIAL
        assert scale == 1.0


class TestClassifySpec:
    def test_trivial_minus_label(self):
        d = classify_spec(DoubleSL(SigmaKind.PARABOLIC, SigmaKind.TRIVIAL))
        assert d.label == "N(t)P+ + IP-"
        assert d.rescale == 0.0

    def test_orders_components(self):
        d = classify_spec(DoubleSL(SigmaKind.HYPERBOLIC, SigmaKind.ELLIPTIC, 2.0))
        assert d.sigmas == (SigmaKind.ELLIPTIC, SigmaKind.HYPERBOLIC)
        assert d.rescale == pytest.approx(0.5)

    def test_dual_gl_label(self):
        d = classify_spec(DualGL(SigmaKind.ELLIPTIC, 0.5, 2.0, 0.25))
        assert d.family == "dual-gl"
        assert "K(t)" in d.label

    def test_trivial_spec(self):
        d = classify_spec(RealGL(SigmaKind.TRIVIAL, 0.0))
        assert d.label == "I"


class TestExpOracle:
    def test_hyperbolic_generator(self):
        gen = generator_of(RealGL(SigmaKind.HYPERBOLIC))
        assert np.allclose(gen, [[0, 1], [1, 0]], atol=1e-9)
        assert exp_cross_check(RealGL(SigmaKind.HYPERBOLIC)) < 1e-6

    def test_dual_shear_generator(self):
        spec = DualGL(SigmaKind.PARABOLIC, 0.0, 1.0, 0.0)
        gen = generator_of(spec)
        a1, a2 = np.empty((2, 2)), np.empty((2, 2))
        for idx, e in zip(((0, 0), (0, 1), (1, 0), (1, 1)), gen.entries()):
            a1[idx], a2[idx] = e.a1, e.a2
        assert np.allclose(a1, [[0, 0], [1, 0]], atol=1e-9)
        assert np.allclose(a2, np.eye(2), atol=1e-9)
        assert exp_cross_check(spec) < 1e-5

    def test_trivial_generator(self):
        assert exp_cross_check(RealGL(SigmaKind.TRIVIAL, 0.0)) == 0.0

    def test_all_variants_small(self):
        specs = [DoubleSL(SigmaKind.ELLIPTIC, SigmaKind.PARABOLIC, 1.4),
                 DoubleGL(SigmaKind.HYPERBOLIC, 0.5, SigmaKind.ELLIPTIC, -0.5, 0.9),
                 DualSL(SigmaKind.HYPERBOLIC, 1.0, 0.5, 0.7),
                 DualGL(SigmaKind.ELLIPTIC, 0.4, 1.0, -0.6)]
        for spec in specs:
            assert exp_cross_check(spec) < 1e-5


class TestTextForm:
    def test_parse_examples(self):
        spec = parse_spec("double-sl(sigma+=K, sigma-=A, a=2.0)")
        assert spec == DoubleSL(SigmaKind.ELLIPTIC, SigmaKind.HYPERBOLIC, 2.0)
        spec = parse_spec("dual-sl(sigma=N, lambda=1.0, lambda1=0.5, t0=0.3)")
        assert spec == DualSL(SigmaKind.PARABOLIC, 1.0, 0.5, 0.3)

    def test_round_trip(self):
        specs = [RealGL(SigmaKind.ELLIPTIC, 0.25),
                 DoubleSL(SigmaKind.PARABOLIC, SigmaKind.TRIVIAL, 1.0),
                 DoubleGL(SigmaKind.HYPERBOLIC, 0.5, SigmaKind.ELLIPTIC, -0.25, 2.0),
                 DualGL(SigmaKind.ELLIPTIC, 0.5, 2.0, 0.25),
                 DualSL(SigmaKind.HYPERBOLIC, 1.5, -0.5, 0.125)]
        for spec in specs:
            assert parse_spec(render_spec(spec)) == spec

    def test_bad_fields_rejected(self):
        with pytest.raises(InvalidLiteralError):
            parse_spec("double-sl(sigma+=K)")
        with pytest.raises(InvalidLiteralError):
            parse_spec("dual-sl(sigma=N, lambda=1, bogus=2)")
        with pytest.raises(InvalidLiteralError):
            parse_spec("unheard-of(x=1)")
