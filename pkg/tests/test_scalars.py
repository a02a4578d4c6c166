import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from ncresidue.scalars import (
    GaussianRational,
    MissingAssignmentError,
    ParameterPolynomial,
    ScalarDivisionError,
    substitute_numeric,
)

fractions = st.fractions(max_denominator=50).filter(lambda f: abs(f) < 10**4)
gaussians = st.builds(GaussianRational, fractions, fractions)

PARAMS = ("H1", "H2", "SM", "SB", "TV")
monos = st.dictionaries(st.sampled_from(PARAMS), st.integers(1, 3), max_size=3)


def _mono(m: dict) -> ParameterPolynomial:
    out = ParameterPolynomial.constant(1)
    for name, e in m.items():
        out = out * ParameterPolynomial.var(name, e)
    return out


polys = st.lists(st.tuples(monos, gaussians), max_size=4).map(
    lambda items: sum((_mono(m).scale(c) for m, c in items), ParameterPolynomial({})))


@given(gaussians, gaussians, gaussians)
def test_field_laws(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == GaussianRational(0)
    if not a.is_zero():
        assert a * a.inverse() == GaussianRational(1)


def test_field_laws_bulk():
    rng = random.Random(11)

    def r():
        return GaussianRational(Fraction(rng.randint(-99, 99), rng.randint(1, 30)),
                                Fraction(rng.randint(-99, 99), rng.randint(1, 30)))

    for _ in range(10_000):
        a, b, c = r(), r(), r()
        assert a * (b + c) == a * b + a * c
        if not b.is_zero():
            assert (a / b) * b == a


def test_i_squared_and_conjugate():
    i = GaussianRational(0, 1)
    assert i * i == GaussianRational(-1)
    z = GaussianRational(Fraction(3, 4), -2)
    assert (z * z.conjugate()).is_real()


def test_division_by_zero():
    with pytest.raises(ScalarDivisionError):
        GaussianRational(1) / GaussianRational(0)


def test_normalization_is_canonical():
    assert GaussianRational(Fraction(2, 4), Fraction(-3, 6)) == GaussianRational(Fraction(1, 2), Fraction(-1, 2))
    assert hash(GaussianRational(Fraction(2, 4))) == hash(GaussianRational(Fraction(1, 2)))


@given(gaussians)
def test_gaussian_serialization_roundtrip(a):
    assert GaussianRational.from_list(a.to_list()) == a


@given(polys, polys, polys)
def test_polynomial_ring_laws(p, q, r):
    assert p + q == q + p
    assert p * q == q * p
    assert p * (q + r) == p * q + p * r
    assert (p - p).is_zero()


@given(polys)
def test_polynomial_serialization_roundtrip(p):
    assert ParameterPolynomial.from_list(p.to_list()) == p


def test_render_order_is_stable():
    p = ParameterPolynomial.var("H2").scale(Fraction(-3, 8)) + ParameterPolynomial.var("H1", 2).scale(Fraction(7, 8))
    q = ParameterPolynomial.var("H1", 2).scale(Fraction(7, 8)) + ParameterPolynomial.var("H2").scale(Fraction(-3, 8))
    assert p.render() == q.render()
    assert p.to_list() == q.to_list()


def test_substitute_numeric():
    p = ParameterPolynomial.var("H1", 2).scale(GaussianRational(1, 1)) + ParameterPolynomial.var("SB")
    v = substitute_numeric(p, {"H1": 0.5, "SB": 2.0})
    assert v == pytest.approx(complex(2.25, 0.25))
    with pytest.raises(MissingAssignmentError):
        substitute_numeric(p, {"H1": 0.5})
