import itertools
from fractions import Fraction

import pytest

from ncresidue.curvature import (
    CurvatureContractionError,
    CurvatureTerm,
    canonicalize_riemann,
    components_to_sb,
    contract_with_moment,
)
from ncresidue.scalars import GaussianRational, ParameterPolynomial
from ncresidue.sphere import SPHERE_DIM, OddPatternError, SphereMonomial, pairing_tensor, sphere_moment


def monomials(max_degree: int, dim: int = SPHERE_DIM):
    for exps in itertools.product(range(max_degree + 1), repeat=dim):
        if sum(exps) <= max_degree:
            yield exps


def test_known_moments():
    assert sphere_moment(SphereMonomial.of(1, 1)) == Fraction(1, 6)
    assert sphere_moment(SphereMonomial.of(1, 1, 2, 2)) == Fraction(1, 48)
    assert sphere_moment(SphereMonomial.of(1, 1, 1, 1)) == Fraction(1, 16)
    assert sphere_moment(SphereMonomial.of(1, 2, 2)) == 0
    assert sphere_moment(SphereMonomial.of(3)) == 0


def test_normalization_identity():
    # sum_mu <xi_mu^2 m> = <m> for every monomial of degree <= 6
    for exps in monomials(6):
        lhs = Fraction(0)
        for mu in range(SPHERE_DIM):
            e = list(exps)
            e[mu] += 2
            lhs += sphere_moment(e)
        assert lhs == sphere_moment(exps), exps


def test_pairing_tensor_count():
    assert len(pairing_tensor("abcdef").matchings) == 15
    with pytest.raises(OddPatternError):
        pairing_tensor("abc")


@pytest.mark.parametrize("slots", list(itertools.product(range(1, 5), repeat=4)))
def test_canonicalization_idempotent(slots):
    t = canonicalize_riemann(CurvatureTerm(slots))
    assert canonicalize_riemann(t) == t


def test_canonicalization_symmetries():
    a = canonicalize_riemann(CurvatureTerm((1, 2, 3, 4)))
    b = canonicalize_riemann(CurvatureTerm((2, 1, 3, 4)))
    c = canonicalize_riemann(CurvatureTerm((3, 4, 1, 2)))
    assert a.slots == b.slots == c.slots
    assert a.sign == -b.sign == c.sign
    assert canonicalize_riemann(CurvatureTerm((1, 1, 2, 3))).is_zero()


def test_symmetrized_fourth_moment_vanishes():
    # (R_{i a j b} + R_{i b j a}) contracted with the full pairing of (a, b, i, j)
    pattern = pairing_tensor(("a", "b", "i", "j"))
    terms = [(1, CurvatureTerm(("i", "a", "j", "b"))), (1, CurvatureTerm(("i", "b", "j", "a")))]
    assert contract_with_moment(terms, pattern).is_zero()
    single = contract_with_moment([(1, CurvatureTerm(("i", "a", "j", "b")))], pattern)
    assert single.is_zero()


def test_second_moment_contraction_gives_scalar_curvature():
    # R_{i a i b} xi_a xi_b averaged: delta_ab / 6 gives SB / 6
    pattern = pairing_tensor(("a", "b"))
    out = contract_with_moment([(1, CurvatureTerm(("i", "a", "i", "b")))], pattern)
    assert out == ParameterPolynomial.var("SB").scale(Fraction(1, 6))


def test_case8_type_combination_vanishes():
    # sum_{k} R_{k a k a}-like combination with antisymmetric partner cancels
    combo = {}
    for k in range(1, 7):
        for a in range(1, 7):
            combo[(k, a, a, k)] = combo.get((k, a, a, k), 0) + 1
            combo[(k, a, k, a)] = combo.get((k, a, k, a), 0) + 1
    assert components_to_sb(combo) == GaussianRational(0)


def test_components_to_sb():
    combo = {(k, a, k, a): 1 for k in range(1, 7) for a in range(1, 7)}
    assert components_to_sb(combo) == GaussianRational(1)
    with pytest.raises(CurvatureContractionError):
        components_to_sb({(1, 2, 1, 2): 1})
