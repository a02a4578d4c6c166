import random
from fractions import Fraction

import pytest

from conftest import rand_gauss, rand_rational
from ncresidue.ratfunc import (
    NonIntegrableError,
    PoleLimitedRational,
    ProjectionDomainError,
    integrate_real_line,
    partial_fractions,
    pi_minus,
    pi_plus,
)
from ncresidue.scalars import GaussianRational

I = GaussianRational(0, 1)


def test_reduction_cancels_common_factors():
    # (x - i) / (x - i)^2 == 1 / (x - i)
    f = PoleLimitedRational([-I, 1], 2, 0)
    assert f == PoleLimitedRational([1], 1, 0)


def test_basic_integral():
    assert integrate_real_line(PoleLimitedRational.inv_one_plus_xi2()) == GaussianRational(1)


def test_projection_of_sigma():
    # pi+ of 1/(1+x^2) is i/(2(x+... )) principal part at +i: -i/(2(x-i))
    assert pi_plus(PoleLimitedRational.inv_one_plus_xi2()) == PoleLimitedRational([GaussianRational(0, Fraction(-1, 2))], 1, 0)


def test_partial_fractions_recombine():
    rng = random.Random(3)
    for _ in range(200):
        f = rand_rational(rng, gap=-2)
        plus, minus, poly = partial_fractions(f)
        assert plus + minus + poly == f


def test_pi_plus_properties():
    rng = random.Random(5)
    for _ in range(1000):
        f, g = rand_rational(rng), rand_rational(rng)
        c = rand_gauss(rng)
        pf = pi_plus(f)
        assert pi_plus(pf) == pf
        assert pi_plus(f + g.scale(c)) == pf + pi_plus(g).scale(c)
        assert pi_plus(f.derivative()) == pf.derivative()
        assert pf + pi_minus(f) == f


def test_plus_plus_and_minus_minus_vanish():
    rng = random.Random(9)
    for _ in range(1000):
        f, g = rand_rational(rng), rand_rational(rng)
        assert integrate_real_line(pi_plus(f) * pi_plus(g)) == GaussianRational(0)
        assert integrate_real_line(pi_minus(f) * pi_minus(g)) == GaussianRational(0)


def test_errors():
    with pytest.raises(ProjectionDomainError):
        pi_plus(PoleLimitedRational([0, 0, 1], 1, 1))
    with pytest.raises(NonIntegrableError):
        integrate_real_line(PoleLimitedRational([0, 1], 1, 1))


def test_odd_integrand_vanishes():
    # (-20i x + 88i x^3 + 60i x^5) / (1+x^2)^7
    num = [0, GaussianRational(0, -20), 0, GaussianRational(0, 88), 0, GaussianRational(0, 60)]
    assert integrate_real_line(PoleLimitedRational(num, 7, 7)) == GaussianRational(0)
