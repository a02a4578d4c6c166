"""Symbols of the inverse squared Witten-deformed operator as expression trees.

Two independent constructions are provided:

* ``build_sigma_minus3`` / ``build_sigma_minus4_DT`` transcribe the closed
  formulas term by term;
* ``parametrix_symbols`` derives the same orders from the symbol of the
  squared operator through the composition rule of left symbols.

Index conventions: ``xi_k`` is the cotangent coordinate, ``xi^k = g^{kl} xi_l``,
``Gamma^k``, ``sigma^k`` and ``a^k`` carry upper indices and lower ones are
obtained with the metric.  Direction 7 is normal to the boundary.

Transcription choices for the closed sigma_{-4} formula (each keeps the
printed coefficient and only fixes what cannot be read literally):

* the free ``mu`` in ``xi^k xi_l xi_a xi_b (Gamma^l - 2 sigma^l) d_mu g^{ab}``
  is read as ``mu = k``;
* the powers ``|xi|^{-2}`` and ``|xi|^{-4}`` of the last two Witten terms are
  replaced by ``|xi|^{-8}`` and ``|xi|^{-6}``, the only powers of homogeneity -4;
* ``d^i a_j``, ``sigma^i a_j``, ``a^i sigma_j``, ``a^i a_j`` are full
  contractions ``g^{ij} d_i a_j``, ``sigma^i a_i``, ``a^i sigma_i``, ``a^i a_i``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ..scalars import GaussianRational
from .expr import Expr, NormSq, Pow, Prim, Xi, XiUp, add, const, derivative, mul

__all__ = [
    "ParametrixSymbols",
    "build_sigma_minus2",
    "build_sigma_minus3",
    "build_sigma_minus4_D",
    "build_sigma_minus4_DT",
    "build_sigma_minus4_witten_part",
    "operator_symbols",
    "parametrix_symbols",
]

N = 7
ALL = range(1, N + 1)
I = const(GaussianRational(0, 1))


def _inv(m: int) -> Expr:
    return Pow(NormSq(), -m)


def _norm(*dirs: int) -> Expr:
    return NormSq(dirs)


def _gamma(k: int) -> Expr:
    return Prim("Gamma", (k,))


def _sigma(k: int) -> Expr:
    return Prim("sigma", (k,))


def _a(k: int) -> Expr:
    return Prim("a", (k,))


def _g(a: int, b: int) -> Expr:
    return Prim("g", (a, b))


def _lower(name: str, k: int) -> Expr:
    return add(*(mul(Prim("glow", (k, j)), Prim(name, (j,))) for j in ALL))


def _dx(e: Expr, j: int) -> Expr:
    return derivative(e, ("x", j))


def _dxi(e: Expr, j: int) -> Expr:
    return derivative(e, ("xi", j))


def _c(q) -> Expr:
    return const(Fraction(q))


def build_sigma_minus2() -> Expr:
    return _inv(1)


def _b(k: int) -> Expr:
    """``Gamma^k - 2 sigma^k``."""
    return _gamma(k) - _c(2) * _sigma(k)


def build_sigma_minus3() -> Expr:
    first = add(*(mul(Xi(k), _gamma(k) - _c(2) * _a(k) - _c(2) * _sigma(k)) for k in ALL))
    second = add(*(mul(XiUp(j), _norm(j)) for j in ALL))
    return mul(-I, _inv(2), first) + mul(-I, _c(2), _inv(3), second)


def build_sigma_minus4_D() -> Expr:
    """The closed formula for the undeformed operator."""
    b_xi = add(*(mul(Xi(k), _b(k)) for k in ALL))
    terms = [
        mul(_c(-1), _inv(3), b_xi, b_xi),
        mul(_c(2), _inv(4), add(*(mul(XiUp(k), Xi(l), _b(l), _norm(k)) for k in ALL for l in ALL))),
        mul(
            _inv(2),
            add(
                *(mul(_g(j, k), _dx(_lower("sigma", k), j)) for j in ALL for k in ALL),
                *(mul(_sigma(k), _lower("sigma", k)) for k in ALL),
                *(mul(_c(-1), _gamma(k), _lower("sigma", k)) for k in ALL),
            ),
        ),
        mul(_c(Fraction(-1, 4)), _inv(2), Prim("sM")),
        mul(_c(-2), _inv(3), add(*(mul(XiUp(k), Xi(l), _dx(_b(l), k)) for k in ALL for l in ALL))),
        mul(_c(12), _inv(5), add(*(mul(XiUp(k), Xi(l), _norm(k), _norm(l)) for k in ALL for l in ALL))),
        mul(_c(-4), _inv(4), add(*(mul(XiUp(k), XiUp(l, (k,)), _norm(l)) for k in ALL for l in ALL))),
        mul(_c(-4), _inv(4), add(*(mul(XiUp(k), XiUp(l), _norm(k, l)) for k in ALL for l in ALL))),
        mul(_inv(3), add(*(mul(_b(k), _norm(k)) for k in ALL))),
        mul(_c(-1), _inv(3), add(*(mul(_g(k, l), _norm(k, l)) for k in ALL for l in ALL))),
        mul(_c(2), _inv(4), add(*(mul(_g(k, l), _norm(k), _norm(l)) for k in ALL for l in ALL))),
    ]
    return add(*terms)


def build_sigma_minus4_witten_part(include_potential: bool = True) -> Expr:
    """The Witten correction: ``sigma_{-4}(D_T^{-2}) - sigma_{-4}(D^{-2})``.

    With ``include_potential=False`` the zeroth-order potential terms (the
    curvature-Clifford term stays) are dropped, which models ``T = 0``.
    """
    s = NormSq()
    b_xi = add(*(mul(_b(k), Xi(k)) for k in ALL))
    a_xi = add(*(mul(_a(k), Xi(k)) for k in ALL))
    grad_pair = add(*(mul(_dxi(s, mu), _dx(s, mu)) for mu in ALL))
    zeroth = [
        *(mul(_g(i, j), _dx(_lower("a", j), i)) for i in ALL for j in ALL),
        *(mul(_sigma(i), _lower("a", i)) for i in ALL),
        *(mul(_a(i), _lower("sigma", i)) for i in ALL),
        *(mul(_a(i), _lower("a", i)) for i in ALL),
        *(mul(_c(-1), _gamma(k), _lower("a", k)) for k in ALL),
        mul(_c(Fraction(1, 8)), Prim("Rcl")),
    ]
    if include_potential:
        zeroth += [mul(_c(-1), Prim("W")), mul(_c(-1), Prim("TV"))]
    terms = [
        mul(_c(-4), I, _inv(3), b_xi, a_xi),
        mul(_c(-4), _inv(3), a_xi, a_xi),
        mul(_c(4), _inv(4), a_xi, grad_pair),
        mul(_inv(2), add(*zeroth)),
        mul(_c(-2), _inv(3), add(*(mul(_dxi(a_xi, mu), _dx(s, mu)) for mu in ALL))),
        mul(_c(-2), _inv(4), grad_pair, a_xi),
        mul(_c(-2), _inv(3), add(*(mul(_dxi(s, mu), _dx(a_xi, mu)) for mu in ALL))),
    ]
    return add(*terms)


def build_sigma_minus4_DT(include_potential: bool = True) -> Expr:
    return build_sigma_minus4_D() + build_sigma_minus4_witten_part(include_potential)


# ---------------------------------------------------------------------------
# independent route: parametrix of the squared operator


def operator_symbols(include_potential: bool = True) -> tuple[Expr, Expr, Expr]:
    """Homogeneous parts ``(p2, p1, p0)`` of the symbol of ``D_T^2``."""
    p2 = NormSq()
    p1 = mul(I, add(*(mul(_gamma(k) - _c(2) * _sigma(k) - _c(2) * _a(k), Xi(k)) for k in ALL)))
    conn = [
        mul(_g(i, j), add(
            _dx(_lower("sigma", j), i),
            _dx(_lower("a", j), i),
            mul(_lower("sigma", i), _lower("sigma", j)),
            mul(_lower("sigma", i), _lower("a", j)),
            mul(_lower("a", i), _lower("sigma", j)),
            mul(_lower("a", i), _lower("a", j)),
        ))
        for i in ALL for j in ALL
    ]
    zeroth = [
        mul(_c(-1), add(*conn)),
        *(mul(_gamma(k), _lower("sigma", k) + _lower("a", k)) for k in ALL),
        mul(_c(Fraction(-1, 8)), Prim("Rcl")),
        mul(_c(Fraction(1, 4)), Prim("sM")),
    ]
    if include_potential:
        zeroth += [Prim("W"), Prim("TV")]
    return p2, p1, add(*zeroth)


@dataclass(frozen=True)
class ParametrixSymbols:
    q2: Expr
    q3: Expr
    q4: Expr


def parametrix_symbols(include_potential: bool = True) -> ParametrixSymbols:
    """Orders -2, -3, -4 of ``q`` solving ``sigma(D_T^2 o Q) = 1``.

    Composition of left symbols: ``sum_alpha (1/alpha!) d_xi^alpha p (-i d_x)^alpha q``.
    """
    p2, p1, p0 = operator_symbols(include_potential)
    q2 = _inv(1)
    minus_i = -I
    q3 = mul(
        _c(-1),
        q2,
        add(
            mul(p1, q2),
            *(mul(minus_i, _dxi(p2, mu), _dx(q2, mu)) for mu in ALL),
        ),
    )
    second = []
    for mu in ALL:
        for nu in ALL:
            coeff = _dxi(_dxi(p2, mu), nu)
            if coeff == const(0):
                continue
            second.append(mul(_c(Fraction(-1, 2)), coeff, _dx(_dx(q2, mu), nu)))
    q4 = mul(
        _c(-1),
        q2,
        add(
            mul(p1, q3),
            mul(p0, q2),
            *(mul(minus_i, _dxi(p2, mu), _dx(q3, mu)) for mu in ALL),
            *(mul(minus_i, _dxi(p1, mu), _dx(q2, mu)) for mu in ALL),
            *second,
        ),
    )
    return ParametrixSymbols(q2, q3, q4)
