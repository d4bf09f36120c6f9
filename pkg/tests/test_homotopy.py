import numpy as np
import pytest

from robustpoly.homotopy import NAMED_FAMILIES

from robustpoly import (
    CrossingKind,
    PolynomialPath,
    RealPolynomial,
    ZeroPolynomial,
    all_roots,
    evaluate,
    find_crossing,
    hg_split,
    is_hurwitz,
    kharitonov_polys,
    sweep_stability,
    wronskian,
    wronskian_identity_check,
)

from conftest import random_poly, random_stable_poly

STABLE_CUBIC = RealPolynomial((10.0, 46.0, 40.0, 12.0))
AXIS_CUBIC = RealPolynomial((1.0, 1.0, 1.0, 1.0))  # (1 + z)(1 + z^2)


class TestPolynomialPath:
    def test_domain_checked(self):
        path = PolynomialPath.convex(STABLE_CUBIC, AXIS_CUBIC)
        with pytest.raises(ValueError):
            path.at(-0.1)
        with pytest.raises(ValueError):
            path.at(1.1)

    def test_convex_endpoints(self):
        path = PolynomialPath.convex(STABLE_CUBIC, AXIS_CUBIC)
        assert path.at(0.0).coeffs == STABLE_CUBIC.coeffs
        assert path.at(1.0).coeffs == AXIS_CUBIC.coeffs

    def test_convex_pads_mismatched_lengths(self):
        path = PolynomialPath.convex(
            RealPolynomial((1.0, 2.0)), RealPolynomial((3.0, 0.0, 4.0))
        )
        assert path.at(0.5).coeffs == (2.0, 1.0, 2.0)

    def test_piecewise_linear(self):
        path = PolynomialPath.piecewise_linear(
            [(0.0, (1.0, 1.0)), (1.0, (3.0, 1.0)), (3.0, (3.0, 5.0))]
        )
        assert path.a == 0.0 and path.b == 3.0
        assert path.at(0.5).coeffs == (2.0, 1.0)
        assert path.at(2.0).coeffs == (3.0, 3.0)
        with pytest.raises(ValueError):
            PolynomialPath.piecewise_linear([(0.0, (1.0,))])

    def test_named_families(self):
        assert set(NAMED_FAMILIES) == {"faedo-loop", "faedo-half"}
        loop = PolynomialPath.named("faedo-loop")
        assert (loop.a, loop.b) == (0.0, 1.0)
        assert loop.at(0.5).coeffs == (1.0, -1.0)
        assert PolynomialPath.named("faedo-half").b == 0.5
        with pytest.raises(ValueError):
            PolynomialPath.named("nope")

    def test_loop_family_root_formula(self):
        # the only root is -1/a1(t), explicit and checkable to full precision
        loop = PolynomialPath.named("faedo-loop")
        for t in np.linspace(0.05, 0.95, 10):
            a1 = (2.0 * t - 1.0) ** 2 - 1.0
            want = -1.0 / a1
            (got,) = all_roots(loop.at(t)).roots
            assert abs(got - want) <= 1e-10 * abs(want)
            assert got.real >= 1.0


class TestSweepStability:
    def test_constant_stable_path(self):
        path = PolynomialPath.convex(STABLE_CUBIC, STABLE_CUBIC)
        res = sweep_stability(path, steps=16)
        assert res.all_stable
        assert len(res.ts) == 16

    def test_transition_located(self):
        path = PolynomialPath.convex(STABLE_CUBIC, RealPolynomial((-1.0, 1.0)))
        res = sweep_stability(path, steps=64)
        assert res.first_unstable_index is not None
        assert res.first_unstable_index > 0

    def test_loop_family_unstable_inside_only(self):
        res = sweep_stability(PolynomialPath.named("faedo-loop"), steps=33)
        assert res.verdicts[0].is_stable
        assert res.verdicts[-1].is_stable
        assert all(not v.is_stable for v in res.verdicts[1:-1])

    def test_zero_polynomial_reported_with_t(self):
        path = PolynomialPath.convex(RealPolynomial((1.0,)), RealPolynomial((-1.0,)))
        with pytest.raises(ZeroPolynomial, match="t=0.5"):
            sweep_stability(path, steps=5)


class TestFindCrossing:
    def test_stable_pair_from_demo_quad(self, demo_quad):
        # k1 is cubic inside a quartic family, so the formal leading
        # coefficient vanishes at t=0: stable throughout, hypotheses not
        out = find_crossing(PolynomialPath.convex(demo_quad.k1, demo_quad.k3))
        assert out.kind is CrossingKind.STABLE_ALL
        assert out.witness is None
        assert not out.hypotheses_ok

    def test_same_degree_stable_pair(self, demo_quad):
        out = find_crossing(PolynomialPath.convex(demo_quad.k2, demo_quad.k3))
        assert out.kind is CrossingKind.STABLE_ALL
        assert out.hypotheses_ok

    def test_axis_endpoint_crossing(self):
        path = PolynomialPath.convex(STABLE_CUBIC, AXIS_CUBIC)
        out = find_crossing(path)
        assert out.kind is CrossingKind.CROSSING
        w = out.witness
        p_star = path.at(w.t_star)
        scale = sum(
            abs(c) * max(1.0, abs(w.omega_star)) ** j
            for j, c in enumerate(p_star.coeffs)
        )
        assert w.residual <= 1e-8 * scale
        assert 0.0 < w.t_star <= 1.0

    def test_interior_crossing_located(self):
        # z^2 + (3 - 6t) z + 2 crosses exactly at t = 1/2, omega = sqrt(2)
        path = PolynomialPath.convex(
            RealPolynomial((2.0, 3.0, 1.0)), RealPolynomial((2.0, -3.0, 1.0))
        )
        out = find_crossing(path, refine_tol=1e-10)
        assert out.kind is CrossingKind.CROSSING
        w = out.witness
        assert abs(w.t_star - 0.5) < 1e-9
        assert abs(abs(w.omega_star) - 2.0**0.5) < 1e-6
        # the bracket below t* is still stable
        assert is_hurwitz(path.at(w.t_star - 1e-10)).is_stable

    def test_loop_family_has_no_crossing(self):
        out = find_crossing(PolynomialPath.named("faedo-loop"))
        assert out.kind is CrossingKind.NO_CROSSING_UNSTABLE
        assert out.witness is None
        assert not out.hypotheses_ok
        assert "leading coefficient vanishes" in out.hypothesis_note
        assert out.first_unstable_t is not None

    def test_half_family_has_no_crossing(self):
        # degree drop at the left endpoint alone already breaks the
        # crossing guarantee: unstable at the right end, no axis crossing
        out = find_crossing(PolynomialPath.named("faedo-half"))
        assert out.kind is CrossingKind.NO_CROSSING_UNSTABLE
        assert not out.hypotheses_ok

    def test_rejects_bad_tolerance(self):
        path = PolynomialPath.convex(STABLE_CUBIC, AXIS_CUBIC)
        with pytest.raises(ValueError):
            find_crossing(path, refine_tol=0.0)

    def test_dichotomy_under_hypotheses(self):
        # stable start plus a never-vanishing leading coefficient force the
        # alternative: stable throughout, or a certified axis crossing
        rng = np.random.default_rng(31)
        for _ in range(100):
            p = random_stable_poly(rng)
            deg = p.degree()
            cs = rng.uniform(-3.0, 3.0, size=deg + 1)
            cs[-1] = rng.uniform(0.1, 3.0)
            path = PolynomialPath.convex(p, RealPolynomial(tuple(cs)))
            out = find_crossing(path, steps=128)
            assert out.hypotheses_ok
            assert out.kind is not CrossingKind.NO_CROSSING_UNSTABLE


class TestWronskianIdentity:
    def test_collapses_to_single_corner(self, demo_quad):
        for alpha, h, g in [
            ((1.0, 0.0, 0.0, 0.0), demo_quad.h_minus, demo_quad.g_minus),
            ((0.0, 0.0, 1.0, 0.0), demo_quad.h_plus, demo_quad.g_plus),
        ]:
            for w in (0.0, 0.7, 1.3):
                lhs, rhs = wronskian_identity_check(alpha, demo_quad, w)
                direct = evaluate(wronskian(h, g), w).real
                assert lhs == pytest.approx(direct, rel=1e-12)
                assert rhs == pytest.approx(direct, rel=1e-12)

    def test_regression_value_at_equal_weights(self, demo_quad):
        lhs, rhs = wronskian_identity_check((0.25,) * 4, demo_quad, 1.0)
        assert lhs == pytest.approx(2481.0, abs=1e-9)
        assert rhs == pytest.approx(2481.0, abs=1e-9)

    def test_identity_on_random_draws(self, demo_quad):
        rng = np.random.default_rng(63)
        for _ in range(200):
            raw = rng.uniform(0.0, 1.0, size=4)
            alpha = tuple(raw / raw.sum())
            w = rng.uniform(-3.0, 3.0)
            lhs, rhs = wronskian_identity_check(alpha, demo_quad, w)
            assert abs(lhs - rhs) <= 1e-10 * (1.0 + abs(lhs))

    def test_weight_validation(self, demo_quad):
        with pytest.raises(ValueError):
            wronskian_identity_check((0.5, 0.5, 0.5, -0.5), demo_quad, 1.0)
        with pytest.raises(ValueError):
            wronskian_identity_check((0.3, 0.3, 0.3, 0.3), demo_quad, 1.0)


class TestWronskianPositivity:
    def test_positive_for_stable_positive_polynomials(self):
        # stability pushes the axis image's winding one way; the Wronskian
        # of its parts must stay strictly positive at every real frequency
        rng = np.random.default_rng(19)
        for _ in range(50):
            p = random_stable_poly(rng, max_degree=6)
            if p.degree() == 0:
                continue
            h, g = hg_split(p)
            w_poly = wronskian(h, g)
            for w in rng.uniform(-4.0, 4.0, size=10):
                assert evaluate(w_poly, w).real > 0.0
