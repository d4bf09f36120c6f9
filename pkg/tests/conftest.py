import numpy as np
import pytest

from robustpoly import IntervalPolynomial, RealPolynomial, kharitonov_polys

DEMO_LO = (10.0, 46.0, 38.0, 6.0, 0.0)
DEMO_HI = (21.0, 50.0, 40.0, 12.0, 1.0)

# published 2-decimal roots of the four corner polynomials of the demo box
CORNER_ROOTS_2DP = {
    "k1": [-0.28 + 0j, -1.53 + 0.81j, -1.53 - 0.81j],
    "k2": [-7.87 + 0j, -2.13 + 0j, -1.00 + 0.51j, -1.00 - 0.51j],
    "k3": [-2.23 + 5.05j, -2.23 - 5.05j, -0.77 + 0.31j, -0.77 - 0.31j],
    "k4": [-5.10 + 0j, -1.32 + 0j, -0.25 + 0j],
}


@pytest.fixture
def demo_box():
    return IntervalPolynomial(DEMO_LO, DEMO_HI)


@pytest.fixture
def demo_quad(demo_box):
    return kharitonov_polys(demo_box)


@pytest.fixture
def demo_problem_path(tmp_path):
    import json

    p = tmp_path / "demo.json"
    p.write_text(
        json.dumps(
            {
                "order": 4,
                "intervals": [list(pair) for pair in zip(DEMO_LO, DEMO_HI)],
            }
        )
    )
    return p


def random_stable_poly(rng, max_degree: int = 8, margin: float = 0.1) -> RealPolynomial:
    """Monic stable polynomial built from roots with real part <= -margin."""
    deg = int(rng.integers(1, max_degree + 1))
    desc = np.array([1.0])
    remaining = deg
    while remaining > 0:
        if remaining >= 2 and rng.uniform() < 0.5:
            re = -rng.uniform(margin, 3.0)
            im = rng.uniform(0.05, 3.0)
            factor = np.array([1.0, -2.0 * re, re * re + im * im])
            remaining -= 2
        else:
            re = -rng.uniform(margin, 3.0)
            factor = np.array([1.0, -re])
            remaining -= 1
        desc = np.convolve(desc, factor)
    return RealPolynomial(tuple(desc[::-1]))


def random_poly(rng, max_degree: int = 8, span: float = 3.0) -> RealPolynomial:
    """Arbitrary polynomial with a leading coefficient bounded away from zero."""
    deg = int(rng.integers(1, max_degree + 1))
    cs = rng.uniform(-span, span, size=deg + 1)
    while abs(cs[-1]) < 0.1:
        cs[-1] = rng.uniform(-span, span)
    return RealPolynomial(tuple(cs))
