import itertools
import random
from fractions import Fraction

import pytest

from conftest import rand_gauss, rand_rational
from ncresidue.clifford import clifford_from_generator
from ncresidue.jets import evaluate_at_boundary
from ncresidue.jets.boundary import BoundaryValue
from ncresidue.jets.symbols import parametrix_symbols
from ncresidue.pipeline import (
    PAPER_CASE_ORDER,
    CaseSpec,
    assemble_phi,
    case_swap_splits,
    compute_case,
    enumerate_cases,
    gravitational_action,
    mean_curvature,
    paper_case_spec,
    phi_from_ledgers,
    pi_plus_swap,
    prefactor,
    theorem_wres,
)
from ncresidue.scalars import GaussianRational, ParameterPolynomial

F = Fraction


def poly(**coeffs) -> ParameterPolynomial:
    out = ParameterPolynomial({})
    for name, c in coeffs.items():
        base, _, exp = name.partition("_")
        out = out + ParameterPolynomial.var(base, int(exp or 1)).scale(c)
    return out


def test_enumeration_in_dimension_seven():
    specs = enumerate_cases(7, 2, 2)
    assert len(specs) == 15
    assert [(s.r, s.l, s.k, s.j, s.alpha_order) for s in specs] == list(PAPER_CASE_ORDER)
    assert all(s.satisfies(7) for s in specs)


def test_enumeration_matches_brute_force():
    n, p1, p2 = 5, 1, 1
    brute = sorted(CaseSpec(r, l, k, j, a)
                   for r, l in itertools.product(range(-10, 0), repeat=2)
                   for k, j, a in itertools.product(range(10), repeat=3)
                   if r <= -p1 and l <= -p2 and CaseSpec(r, l, k, j, a).satisfies(n))
    assert enumerate_cases(n, p1, p2) == brute


def test_even_dimension_rejected():
    with pytest.raises(ValueError):
        enumerate_cases(6, 2, 2)


def test_prefactor():
    # (-i)^{|alpha|+j+k+1} / (alpha! (j+k+1)!)
    assert prefactor((0,) * 6, 0, 0) == GaussianRational(0, -1)
    assert prefactor((2, 0, 0, 0, 0, 0), 0, 0) == GaussianRational(0, F(1, 2))
    assert prefactor((0,) * 6, 1, 1) == GaussianRational(0, F(1, 6))


EXPECTED = {
    1: poly(),
    2: poly(H1_2=F(7, 8), H2=F(-3, 8)),
    4: poly(H1_2=F(-5, 8)),
    5: poly(),
    6: poly(H1_2=F(7, 8), H2=F(-3, 8)),
    7: poly(H1_2=F(21, 8)),
    8: poly(SB=F(5, 16)),
    11: poly(),
    12: poly(H1_2=F(21, 8)),
}


@pytest.mark.parametrize("case_id", sorted(EXPECTED))
def test_reproduced_cases(all_results, case_id):
    assert all_results[case_id].value == EXPECTED[case_id]


def test_engine_values_of_other_cases(all_results):
    assert all_results[3].value == poly(SB=F(1, 8))
    assert all_results[9].value == poly(H2=F(45, 16), H1_2=F(-93, 16))
    assert all_results[10].value == all_results[9].value
    assert all_results[13].value == poly(H1_2=F(-57, 8))
    assert all_results[14].value == all_results[15].value


def test_reading_dependence(all_results):
    r9 = all_results[9]
    assert r9.depends_on_reading
    assert r9.reading_values["antisymmetric"] == poly(H2=F(27, 16), H1_2=F(-75, 16))
    assert not all_results[2].depends_on_reading


def test_reading_switch_changes_default(all_results):
    alt = compute_case(9, reading="antisymmetric")
    assert alt.value == all_results[9].reading_values["antisymmetric"]


def test_phi_assembly(all_results):
    phi = assemble_phi(all_results)
    assert phi == phi_from_ledgers(all_results)
    assert phi == poly(SM=F(-1, 2), SB=F(1, 8), TV=-2, H1_2=F(5, 4), H2=F(-5, 4))
    tv = all_results[14].value.coefficient("TV") + all_results[15].value.coefficient("TV")
    assert phi.coefficient("TV") == tv
    assert phi.imag_part().is_zero()


def test_theorem_reduction(all_results):
    thm = theorem_wres(assemble_phi(all_results))
    assert thm.interior.is_zero()
    assert thm.undeformed.coefficient("TV").is_zero()


def test_mean_curvature_and_action(all_results):
    assert mean_curvature() == poly(H1=-3)
    grav = gravitational_action(assemble_phi(all_results))
    assert grav.I_gr_b == poly(H1=-6)
    assert grav.K_paper == poly(H1=F(-5, 2))
    assert grav.I_gr_b_paper == poly(H1=-5)
    assert "Q0" in grav.corollary(True) and "Q0" in grav.corollary(False)


def test_lower_order_routes_agree():
    ps = parametrix_symbols()
    from ncresidue.jets.symbols import build_sigma_minus3

    a = evaluate_at_boundary(ps.q3)
    b = evaluate_at_boundary(build_sigma_minus3())
    assert a.equals_on_sphere(b)


def test_parametrix_route_case_value():
    v = compute_case(14, route="parametrix").value
    assert v == poly(TV=-1, SB=F(35, 96), SM=F(-1, 4), H2=F(-23, 16), H1_2=F(5, 2))


def test_bad_case_id():
    with pytest.raises(ValueError):
        paper_case_spec(16)


def _random_scalar_value(rng: random.Random) -> BoundaryValue:
    f = rand_rational(rng, max_pole=4, max_deg=6)
    gen = clifford_from_generator(rng.choice(["c", "cbar"]), rng.randint(1, 7))
    return BoundaryValue.rational(f) * BoundaryValue.constant(rand_gauss(rng)) + \
        BoundaryValue.rational(rand_rational(rng, max_pole=4, max_deg=6)) * _gen_value(gen)


def _gen_value(gen) -> BoundaryValue:
    (word, _), = gen.items()
    bar, plain = word
    kind, mask = ("cbar", bar) if bar else ("c", plain)
    return BoundaryValue.generator(kind, mask.bit_length())


def test_swap_identity_on_random_pairs():
    rng = random.Random(21)
    for _ in range(150):
        a, b = _random_scalar_value(rng), _random_scalar_value(rng)
        assert pi_plus_swap(a, b).holds


@pytest.mark.parametrize("case_id", [10, 12, 15])
def test_swap_identity_on_case_factors(case_id):
    splits = case_swap_splits(case_id)
    assert splits and all(s.holds for s in splits)
