import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from robustpoly import (
    RealPolynomial,
    ZeroPolynomial,
    convex_combine,
    derivative,
    evaluate,
    format_poly,
    hg_split,
    wronskian,
)

K1 = RealPolynomial((10.0, 46.0, 40.0, 12.0))
K2 = RealPolynomial((21.0, 46.0, 38.0, 12.0, 1.0))

coeff_lists = st.lists(
    st.floats(-1e3, 1e3, allow_nan=False, allow_infinity=False),
    min_size=1,
    max_size=9,
)


class TestConstruction:
    def test_rejects_empty(self):
        with pytest.raises(ValueError):
            RealPolynomial(())

    def test_rejects_nonfinite(self):
        with pytest.raises(ValueError):
            RealPolynomial((1.0, float("nan")))
        with pytest.raises(ValueError):
            RealPolynomial((float("inf"),))

    def test_trailing_zero_is_kept(self):
        p = RealPolynomial((1.0, 2.0, 0.0))
        assert p.coeffs == (1.0, 2.0, 0.0)
        assert p.degree() == 1

    def test_zero_polynomial_degree(self):
        assert RealPolynomial((0.0, 0.0)).degree() is None
        assert RealPolynomial((0.0,)).is_zero()

    def test_leading_coefficient(self):
        assert K1.leading_coefficient() == 12.0
        with pytest.raises(ZeroPolynomial):
            RealPolynomial((0.0,)).leading_coefficient()

    def test_zero_tol_scales_with_magnitude(self):
        # a coefficient at 1e-13 of the largest counts as zero by default
        p = RealPolynomial((1e3, 0.0, 1e-10))
        assert p.degree() == 0
        q = RealPolynomial((1e3, 0.0, 1e-10), zero_tol=0.0)
        assert q.degree() == 2


class TestEvaluate:
    def test_axis_root(self):
        assert abs(evaluate(RealPolynomial((1.0, 0.0, 1.0)), 1j)) < 1e-12

    def test_constant_term(self):
        assert evaluate(K1, 0j) == 10.0

    def test_quartic_at_i(self):
        # independent term-by-term sum
        expected = sum(c * (1j) ** i for i, c in enumerate(K2.coeffs))
        assert expected == complex(-16.0, 34.0)
        assert abs(evaluate(K2, 1j) - expected) < 1e-12

    @given(coeff_lists, st.complex_numbers(max_magnitude=10.0))
    def test_matches_power_sum(self, cs, z):
        p = RealPolynomial(tuple(cs))
        naive = sum(c * z**i for i, c in enumerate(cs))
        scale = 1.0 + sum(abs(c) * abs(z) ** i for i, c in enumerate(cs))
        assert abs(evaluate(p, z) - naive) <= 1e-12 * scale


class TestDerivative:
    def test_cubic(self):
        assert derivative(K1).coeffs == (46.0, 80.0, 36.0)

    def test_constant(self):
        assert derivative(RealPolynomial((7.0,))).coeffs == (0.0,)

    @given(coeff_lists)
    def test_degree_drops_by_one(self, cs):
        p = RealPolynomial(tuple(cs), zero_tol=0.0)
        d = p.degree()
        dd = derivative(p).degree()
        if d in (None, 0):
            assert dd is None
        else:
            assert dd == d - 1


class TestWronskian:
    def test_fixture_value_at_zero(self):
        h = RealPolynomial((10.0, 0.0, -40.0))
        g = RealPolynomial((0.0, 46.0, 0.0, -12.0))
        w = wronskian(h, g)
        assert evaluate(w, 0.0).real == 460.0

    def test_antisymmetry_and_self(self):
        rng = np.random.default_rng(7)
        for _ in range(50):
            h = RealPolynomial(tuple(rng.uniform(-2, 2, size=4)))
            g = RealPolynomial(tuple(rng.uniform(-2, 2, size=5)))
            whg = wronskian(h, g).coeffs
            wgh = wronskian(g, h).coeffs
            assert all(abs(a + b) <= 1e-12 * (1 + abs(a)) for a, b in zip(whg, wgh))
            assert all(abs(c) <= 1e-12 for c in wronskian(h, h).coeffs)

    def test_bilinearity(self):
        rng = np.random.default_rng(11)
        for _ in range(50):
            h1 = rng.uniform(-2, 2, size=4)
            h2 = rng.uniform(-2, 2, size=4)
            g = RealPolynomial(tuple(rng.uniform(-2, 2, size=4)))
            a, b = rng.uniform(-3, 3, size=2)
            combo = RealPolynomial(tuple(a * h1 + b * h2))
            lhs = wronskian(combo, g).coeffs
            w1 = wronskian(RealPolynomial(tuple(h1)), g).coeffs
            w2 = wronskian(RealPolynomial(tuple(h2)), g).coeffs
            for x, y1, y2 in zip(lhs, w1, w2):
                want = a * y1 + b * y2
                assert abs(x - want) <= 1e-12 * (1.0 + abs(want))


class TestHgSplit:
    def test_cubic_split(self):
        h, g = hg_split(K1)
        assert h.coeffs[:3] == (10.0, 0.0, -40.0)
        assert all(c == 0.0 for c in h.coeffs[3:])
        assert g.coeffs == (0.0, 46.0, 0.0, -12.0)

    def test_constant(self):
        h, g = hg_split(RealPolynomial((5.0,)))
        assert h.coeffs == (5.0,)
        assert g.is_zero()

    def test_reassembles_on_axis(self):
        rng = np.random.default_rng(3)
        for _ in range(100):
            p = RealPolynomial(tuple(rng.uniform(-5, 5, size=rng.integers(1, 9))))
            h, g = hg_split(p)
            w = rng.uniform(-4, 4)
            direct = evaluate(p, 1j * w)
            split = complex(evaluate(h, w).real, evaluate(g, w).real)
            assert abs(direct - split) <= 1e-10 * (1.0 + abs(direct))


class TestConvexCombine:
    def test_endpoints_exact(self):
        p = RealPolynomial((1.0, 2.0))
        q = RealPolynomial((5.0, -1.0, 3.0))
        assert convex_combine(p, q, 0.0).coeffs == (1.0, 2.0, 0.0)
        assert convex_combine(p, q, 1.0).coeffs == (5.0, -1.0, 3.0)

    def test_midpoint(self):
        p = RealPolynomial((2.0, 0.0))
        q = RealPolynomial((0.0, 4.0))
        assert convex_combine(p, q, 0.5).coeffs == (1.0, 2.0)

    def test_domain(self):
        p = RealPolynomial((1.0,))
        with pytest.raises(ValueError):
            convex_combine(p, p, -0.1)
        with pytest.raises(ValueError):
            convex_combine(p, p, 1.1)


def test_format_poly():
    assert format_poly(K1) == "10 + 46 z + 40 z^2 + 12 z^3"
    assert format_poly(RealPolynomial((0.0,))) == "0"
    assert format_poly(RealPolynomial((-1.0, 0.0, 1.0))) == "-1 + z^2"
