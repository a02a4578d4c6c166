"""The fifteen boundary cases, their sum, and the derived boundary quantities.

A case is fixed by the symbol orders ``r, l``, the numbers of normal
derivatives ``k, j`` and a tangential multi-index ``alpha``.  Its integrand is

    pref * tr[ d_xn^j d_xi'^alpha d_xin^k pi+(sigma_r) * d_x'^alpha d_xin^(j+1) d_xn^k sigma_l ]

with ``pref = (-i)^(|alpha|+j+k+1) / (alpha! (j+k+1)!)``, integrated over
``xi_n`` on the real line and over the unit sphere in ``xi'``.  Values are
reported as coefficients of ``pi * Omega_5``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Iterable, Sequence

from .curvature import CurvatureContractionError, components_to_sb
from .jets.boundary import BoundaryValue
from .jets.evaluate import Evaluator
from .jets.expr import Expr, jet_derivative
from .jets.symbols import (
    build_sigma_minus2,
    build_sigma_minus3,
    build_sigma_minus4_DT,
    parametrix_symbols,
)
from .jets.tables import AMBIGUOUS_READINGS, JetTables, TableConfig
from .ratfunc import PoleLimitedRational, integrate_real_line, pi_plus
from .scalars import PARAMETERS, GaussianRational, ParameterPolynomial, parse_monomial
from .sphere import SPHERE_DIM, sphere_moment

__all__ = [
    "CaseComputationError",
    "CaseResult",
    "CaseSpec",
    "GravitationalAction",
    "LedgerEntry",
    "PAPER_CASE_ORDER",
    "PAPER_PHI",
    "PAPER_VALUES",
    "SYMBOL_ROUTES",
    "TheoremReport",
    "alpha_expansions",
    "assemble_phi",
    "case_swap_splits",
    "compute_all",
    "compute_case",
    "enumerate_cases",
    "gravitational_action",
    "mean_curvature",
    "phi_from_ledgers",
    "paper_case_spec",
    "pi_plus_swap",
    "prefactor",
    "theorem_wres",
]

N = 7
SYMBOL_ROUTES = ("lemma", "parametrix")


class CaseComputationError(RuntimeError):
    def __init__(self, case_id: int | None, cause: Exception):
        self.case_id = case_id
        self.cause = cause
        super().__init__(f"case {case_id}: {type(cause).__name__}: {cause}")


# ---------------------------------------------------------------------------
# case shapes


@dataclass(frozen=True, order=True)
class CaseSpec:
    r: int
    l: int
    k: int
    j: int
    alpha_order: int

    def satisfies(self, n: int) -> bool:
        return self.r - self.k - self.alpha_order + self.l - self.j - 1 == -n

    def as_dict(self) -> dict:
        return {"r": self.r, "l": self.l, "k": self.k, "j": self.j, "alpha": self.alpha_order}


# (r, l, k, j, |alpha|) in the order the cases are numbered
PAPER_CASE_ORDER: tuple[tuple[int, int, int, int, int], ...] = (
    (-2, -2, 0, 1, 1),
    (-2, -2, 0, 2, 0),
    (-2, -2, 0, 0, 2),
    (-2, -2, 1, 1, 0),
    (-2, -2, 1, 0, 1),
    (-2, -2, 2, 0, 0),
    (-2, -3, 0, 1, 0),
    (-2, -3, 0, 0, 1),
    (-2, -3, 1, 0, 0),
    (-3, -2, 0, 1, 0),
    (-3, -2, 0, 0, 1),
    (-3, -2, 1, 0, 0),
    (-3, -3, 0, 0, 0),
    (-2, -4, 0, 0, 0),
    (-4, -2, 0, 0, 0),
)


def paper_case_spec(case_id: int) -> CaseSpec:
    if not 1 <= case_id <= len(PAPER_CASE_ORDER):
        raise ValueError(f"case id must be in 1..{len(PAPER_CASE_ORDER)}, got {case_id}")
    return CaseSpec(*PAPER_CASE_ORDER[case_id - 1])


def enumerate_cases(n: int, p1: int, p2: int) -> list[CaseSpec]:
    """All shapes with ``r - k - |alpha| + l - j - 1 = -n``, ``r <= -p1``, ``l <= -p2``.

    Every quantity subtracted on the left is non-negative, so ``r + l >= 1 - n``
    bounds the search.  For ``(7, 2, 2)`` the result is returned in case order.
    """
    if n % 2 == 0:
        raise ValueError("dimension must be odd")
    budget = n - 1
    out = []
    for r in range(-p1, -budget - 1, -1):
        for l in range(-p2, -budget - 1, -1):
            rest = budget + r + l  # = k + j + |alpha|
            if rest < 0:
                continue
            for k in range(rest + 1):
                for j in range(rest - k + 1):
                    out.append(CaseSpec(r, l, k, j, rest - k - j))
    if (n, p1, p2) == (7, 2, 2):
        rank = {s: i for i, s in enumerate(PAPER_CASE_ORDER)}
        out.sort(key=lambda s: rank[(s.r, s.l, s.k, s.j, s.alpha_order)])
    else:
        out.sort()
    return out


def alpha_expansions(order: int, dim: int = SPHERE_DIM) -> list[tuple[int, ...]]:
    """Concrete multi-indices of the given order over ``dim`` tangential directions."""
    out = []
    for combo in itertools.combinations_with_replacement(range(dim), order):
        a = [0] * dim
        for c in combo:
            a[c] += 1
        out.append(tuple(a))
    return out


def _multi_factorial(alpha: Sequence[int]) -> int:
    out = 1
    for a in alpha:
        out *= factorial(a)
    return out


def prefactor(alpha: Sequence[int], j: int, k: int) -> GaussianRational:
    order = sum(alpha) + j + k + 1
    unit = GaussianRational(0, -1) ** order
    return unit / (_multi_factorial(alpha) * factorial(j + k + 1))


# ---------------------------------------------------------------------------
# symbols


@lru_cache(maxsize=None)
def _symbol(order: int, route: str) -> Expr:
    if order == -2:
        return build_sigma_minus2()
    if order == -3:
        return build_sigma_minus3()
    if order == -4:
        if route == "lemma":
            return build_sigma_minus4_DT()
        if route == "parametrix":
            return parametrix_symbols().q4
        raise ValueError(f"unknown symbol route {route!r}")
    raise ValueError(f"no symbol of order {order}")


def _apply(e: Expr, dirs: Iterable[tuple[str, int]]) -> Expr:
    for d in dirs:
        e = jet_derivative(e, d)
    return e


def _alpha_dirs(kind: str, alpha: Sequence[int]) -> list[tuple[str, int]]:
    return [(kind, i + 1) for i, a in enumerate(alpha) for _ in range(a)]


# ---------------------------------------------------------------------------
# per-case evaluation


@dataclass(frozen=True)
class LedgerEntry:
    """One trace component of one concrete alpha."""

    alpha: tuple[int, ...]
    prefactor: GaussianRational
    xi_exponents: tuple[int, ...]
    atoms: tuple
    monomial: tuple[int, ...]
    integrand: PoleLimitedRational
    line_integral: GaussianRational  # coefficient of pi
    moment: Fraction  # normalized by the sphere volume

    def contribution(self) -> GaussianRational:
        return self.prefactor * self.line_integral * self.moment


@dataclass
class CaseResult:
    case_id: int | None
    spec: CaseSpec
    value: ParameterPolynomial
    ledger: list[LedgerEntry]
    ambiguous_entries: tuple = ()
    reading_values: dict = field(default_factory=dict)

    @property
    def depends_on_reading(self) -> bool:
        vals = list(self.reading_values.values())
        return any(v != vals[0] for v in vals[1:])


def _factor_values(spec: CaseSpec, alpha: tuple[int, ...], ev: Evaluator, route: str) -> tuple[BoundaryValue, BoundaryValue]:
    left = _apply(_symbol(spec.r, route), [("x", N)] * spec.j + _alpha_dirs("xi", alpha))
    right = _apply(_symbol(spec.l, route), _alpha_dirs("x", alpha) + [("x", N)] * spec.k)
    a = ev(left).xi_n_derivative(spec.k).pi_plus()
    b = ev(right).xi_n_derivative(spec.j + 1)
    return a, b


def _reduce_ledger(entries: list[LedgerEntry]) -> ParameterPolynomial:
    """Collapse ledger entries to a polynomial; curvature atoms become SB."""
    plain: dict[tuple[int, ...], GaussianRational] = {}
    curved: dict[tuple[int, ...], dict[tuple, GaussianRational]] = {}
    for e in entries:
        c = e.contribution()
        if c.is_zero():
            continue
        if not e.atoms:
            plain[e.monomial] = plain.get(e.monomial, GaussianRational(0)) + c
            continue
        if len(e.atoms) != 1 or e.atoms[0][0] != "R":
            raise CurvatureContractionError(f"unexpected atoms {e.atoms} with nonzero weight")
        combo = curved.setdefault(e.monomial, {})
        slots = tuple(e.atoms[0][1:])
        combo[slots] = combo.get(slots, GaussianRational(0)) + c
    out = ParameterPolynomial(plain)
    sb = PARAMETERS.index("SB")
    for mono, combo in curved.items():
        coeff = components_to_sb(combo)
        m = list(mono)
        m[sb] += 1
        out = out + ParameterPolynomial({tuple(m): coeff})
    return out


def _case_once(spec: CaseSpec, ev: Evaluator, route: str) -> tuple[ParameterPolynomial, list[LedgerEntry]]:
    ledger: list[LedgerEntry] = []
    for alpha in alpha_expansions(spec.alpha_order):
        pref = prefactor(alpha, spec.j, spec.k)
        a, b = _factor_values(spec, alpha, ev, route)
        for (xi_e, atoms, mono), f in sorted((a * b).trace().items(), key=lambda kv: repr(kv[0])):
            moment = sphere_moment(xi_e)
            # odd patterns are dropped only here, after integration is set up
            line = integrate_real_line(f) if moment else GaussianRational(0)
            ledger.append(LedgerEntry(alpha, pref, xi_e, atoms, mono, f, line, moment))
    return _reduce_ledger(ledger), ledger


def compute_case(
    spec: CaseSpec | int,
    *,
    reading: str = "diagonal",
    route: str = "lemma",
    check_readings: bool = True,
) -> CaseResult:
    """Exact value of one case as a coefficient of ``pi * Omega_5``.

    When the computation touches an ambiguous jet entry, it is repeated
    under every reading and the values are kept in ``reading_values``.
    """
    case_id = spec if isinstance(spec, int) else _case_id_of(spec)
    if isinstance(spec, int):
        spec = paper_case_spec(spec)
    try:
        tables = JetTables(TableConfig(ambiguous_reading=reading))
        value, ledger = _case_once(spec, Evaluator(tables), route)
        hits = tuple(sorted(tables.ambiguous_hits))
        readings = {reading: value}
        if hits and check_readings:
            for other in AMBIGUOUS_READINGS:
                if other != reading:
                    readings[other] = _case_once(spec, Evaluator.with_reading(other), route)[0]
    except Exception as exc:  # tag with the case id; the cause is kept
        raise CaseComputationError(case_id, exc) from exc
    return CaseResult(case_id, spec, value, ledger, hits, readings)


def _case_id_of(spec: CaseSpec) -> int | None:
    key = (spec.r, spec.l, spec.k, spec.j, spec.alpha_order)
    return PAPER_CASE_ORDER.index(key) + 1 if key in PAPER_CASE_ORDER else None


def compute_all(case_ids: Iterable[int] | None = None, **kwargs) -> dict[int, CaseResult]:
    ids = sorted(set(case_ids)) if case_ids else range(1, len(PAPER_CASE_ORDER) + 1)
    return {i: compute_case(i, **kwargs) for i in ids}


# ---------------------------------------------------------------------------
# swap identity for pi+ on the left factor


@dataclass(frozen=True)
class SwapSplit:
    """Line integrals per trace component, keyed like :meth:`BoundaryValue.trace`."""

    direct: dict  # of tr[pi+(a) b]
    full: dict  # of tr[a b]
    swapped: dict  # of tr[a pi+(b)]

    @property
    def recombined(self) -> dict:
        keys = set(self.full) | set(self.swapped)
        out = {k: self.full.get(k, ZERO_G) - self.swapped.get(k, ZERO_G) for k in keys}
        return {k: v for k, v in out.items() if not v.is_zero()}

    @property
    def holds(self) -> bool:
        return self.recombined == {k: v for k, v in self.direct.items() if not v.is_zero()}


ZERO_G = GaussianRational(0)


def _integrate_trace(v: BoundaryValue) -> dict:
    return {key: integrate_real_line(f) for key, f in v.trace().items()}


def pi_plus_swap(a: BoundaryValue, b: BoundaryValue) -> SwapSplit:
    """``int tr[pi+(a) b] = int tr[a b] - int tr[a pi+(b)]``, component by component.

    Both sides rest on the vanishing of the ``++`` and ``--`` cross terms.
    """
    return SwapSplit(
        direct=_integrate_trace(a.pi_plus() * b),
        full=_integrate_trace(a * b),
        swapped=_integrate_trace(a * b.pi_plus()),
    )


def case_swap_splits(case_id: int, route: str = "lemma") -> list[SwapSplit]:
    """The swap identity applied to each concrete alpha of a case, before projection."""
    spec = paper_case_spec(case_id)
    ev = Evaluator(JetTables())
    out = []
    for alpha in alpha_expansions(spec.alpha_order):
        left = _apply(_symbol(spec.r, route), [("x", N)] * spec.j + _alpha_dirs("xi", alpha))
        right = _apply(_symbol(spec.l, route), _alpha_dirs("x", alpha) + [("x", N)] * spec.k)
        out.append(pi_plus_swap(ev(left).xi_n_derivative(spec.k), ev(right).xi_n_derivative(spec.j + 1)))
    return out


# ---------------------------------------------------------------------------
# stated values


def _pp(entries: dict[str, tuple[Fraction | int, Fraction | int]]) -> ParameterPolynomial:
    out = {}
    for mono, (re, im) in entries.items():
        out[parse_monomial(mono)] = GaussianRational(Fraction(re), Fraction(im))
    return ParameterPolynomial(out)


F = Fraction
PAPER_TABLE_VERSION = 1

PAPER_VALUES: dict[int, ParameterPolynomial] = {
    1: _pp({}),
    2: _pp({"H1^2": (F(7, 8), 0), "H2": (F(-3, 8), 0)}),
    3: _pp({"SB": (F(1, 6), 0), "H1^2": (F(11, 128), 0)}),
    4: _pp({"H1^2": (F(-5, 8), 0)}),
    5: _pp({}),
    6: _pp({"H1^2": (F(7, 8), 0), "H2": (F(-3, 8), 0)}),
    7: _pp({"H1^2": (F(21, 8), 0)}),
    8: _pp({"SB": (F(5, 16), 0)}),
    9: _pp({"H2": (F(9, 16), 0), "H1^2": (F(-45, 16), 0)}),
    10: _pp({"H2": (F(9, 16), F(-45, 32)), "H1^2": (F(-45, 16), F(45, 32))}),
    11: _pp({}),
    12: _pp({"H1^2": (F(21, 8), 0)}),
    13: _pp({"H1^2": (F(-5, 32) - F(57, 8), 0)}),
    14: _pp({
        "SM": (F(-1, 4), 0),
        "H1": (F(-45, 4), F(-5, 8)),
        "H1^2": (F(-23, 12), F(-3, 2)),
        "H2": (F(235, 64), 0),
        "SB": (F(47, 96), 0),
        "TV": (-1, 0),
    }),
    15: _pp({
        "SM": (F(-1, 4), 0),
        "H1": (F(-45, 4), F(-5, 8)),
        "H1^2": (F(-23, 12), F(3, 2)),
        "H2": (F(235, 64), 0),
        "SB": (F(47, 96), 0),
        "TV": (-1, 0),
    }),
}

PAPER_PHI = _pp({
    "SM": (F(-1, 2), 0),
    "SB": (F(35, 24), 0),
    "TV": (-2, 0),
    "H1": (F(-45, 2), F(-5, 4)),
    "H1^2": (F(-3947, 384), F(45, 32)),
    "H2": (F(247, 32), F(-45, 32)),
})

# the undeformed total stated alongside the theorem
PAPER_THEOREM_LEADING = _pp({"SM": (F(-1, 2), 0), "SB": (F(35, 24), 0)})

PAPER_K = _pp({"H1": (F(-5, 2), 0)})
PAPER_I_GR_B = _pp({"H1": (-5, 0)})  # times Vol of the boundary


# ---------------------------------------------------------------------------
# totals


def assemble_phi(results: dict[int, CaseResult]) -> ParameterPolynomial:
    missing = [i for i in range(1, 16) if i not in results]
    if missing:
        raise ValueError(f"cases missing from the sum: {missing}")
    total = ParameterPolynomial({})
    for i in range(1, 16):
        total = total + results[i].value
    return total


def phi_from_ledgers(results: dict[int, CaseResult]) -> ParameterPolynomial:
    """Recompute the sum from the stored ledgers, independently of ``value``."""
    total = ParameterPolynomial({})
    for i in range(1, 16):
        total = total + _reduce_ledger(results[i].ledger)
    return total


@dataclass(frozen=True)
class TheoremReport:
    boundary_density: ParameterPolynomial  # coefficient of pi Omega_5
    interior: ParameterPolynomial
    undeformed: ParameterPolynomial
    imaginary_part: ParameterPolynomial
    paper: ParameterPolynomial


def theorem_wres(phi: ParameterPolynomial) -> TheoremReport:
    """Boundary-only reduction: orders 2 + 2 differ from the dimension 7."""
    return TheoremReport(
        boundary_density=phi,
        interior=ParameterPolynomial({}),
        undeformed=phi.drop("TV"),
        imaginary_part=phi.imag_part(),
        paper=PAPER_PHI,
    )


@dataclass(frozen=True)
class GravitationalAction:
    K: ParameterPolynomial
    I_gr_b: ParameterPolynomial  # times Vol of the boundary
    K_paper: ParameterPolynomial
    I_gr_b_paper: ParameterPolynomial
    Q0_engine: ParameterPolynomial
    Q0_paper: ParameterPolynomial

    def corollary(self, use_engine: bool = True) -> str:
        q0 = self.Q0_engine if use_engine else self.Q0_paper
        i_gr = self.I_gr_b if use_engine else self.I_gr_b_paper
        coeff = i_gr.render()
        return f"I_Gr,b = ({coeff}) / ((Q0) · πΩ5) · Wres_b,  Q0 = {q0.render()}"


def mean_curvature(tables: JetTables | None = None) -> ParameterPolynomial:
    """``K = -sum_{ij} Gamma^n_{ij} g^{ij}`` over the boundary directions at x0.

    With ``g_nn = 1`` and no mixed components, ``Gamma^n_{ij} = -1/2 d_n g_{ij}``.
    """
    tables = tables or JetTables()
    total = BoundaryValue.zero()
    for i in range(1, N):
        for jj in range(1, N):
            g_inv = tables.lookup("g", (i, jj), ())
            dg = tables.lookup("glow", (i, jj), (N,))
            total = total + (g_inv * dg).scale(Fraction(1, 2))
    out: dict = {}
    for (_xi, _atoms, mono), f in total.trace().items():
        out[mono] = f(0) / 8
    return ParameterPolynomial(out)


def gravitational_action(phi: ParameterPolynomial) -> GravitationalAction:
    k = mean_curvature()
    return GravitationalAction(
        K=k,
        I_gr_b=k.scale(2),
        K_paper=PAPER_K,
        I_gr_b_paper=PAPER_I_GR_B,
        Q0_engine=phi,
        Q0_paper=PAPER_PHI,
    )
