"""Floating-point cross-checks for the exact engine.

The real-line integral is split as ``[-L, L]`` plus the two tails, and the
tails are mapped to ``u = 1/xi`` so that every piece is a bounded integral of
a smooth function.  Sphere moments use the Gamma-function closed form.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Mapping, Sequence

import numpy as np
from scipy import integrate
from scipy.special import gammaln

from .ratfunc import PoleLimitedRational
from .scalars import PARAMETERS, GaussianRational, ParameterPolynomial, substitute_numeric

__all__ = [
    "DEFAULT_ASSIGNMENT",
    "OracleVerdict",
    "QuadratureConfig",
    "QuadratureError",
    "numeric_case_check",
    "numeric_line_integral",
    "numeric_sphere_moment",
    "random_curvature_tensor",
]

DEFAULT_ASSIGNMENT = {"H1": 0.3, "H2": 0.7, "SM": 1.1, "SB": 0.9, "TV": 0.5}


class QuadratureError(ArithmeticError):
    pass


@dataclass(frozen=True)
class QuadratureConfig:
    abs_tol: float = 1e-12
    rel_tol: float = 1e-12
    radii: tuple[float, ...] = (1.0, 0.5, 2.0)
    max_subdivisions: int = 200


def _c(x: GaussianRational) -> complex:
    return complex(float(x.real), float(x.imag))


def _coeffs(f: PoleLimitedRational) -> tuple[np.ndarray, int, int]:
    num = np.array([_c(c) for c in f.num], dtype=complex)
    return num, f.p, f.q


def _quad_complex(fn, a: float, b: float, cfg: QuadratureConfig) -> tuple[complex, float]:
    re, e1 = integrate.quad(lambda t: fn(t).real, a, b, epsabs=cfg.abs_tol, epsrel=cfg.rel_tol, limit=cfg.max_subdivisions)
    im, e2 = integrate.quad(lambda t: fn(t).imag, a, b, epsabs=cfg.abs_tol, epsrel=cfg.rel_tol, limit=cfg.max_subdivisions)
    return complex(re, im), e1 + e2


def numeric_line_integral(f: PoleLimitedRational, cfg: QuadratureConfig | None = None) -> tuple[complex, float]:
    """``int_R f`` by quadrature, returned together with an error estimate.

    Raises :class:`QuadratureError` if ``f`` does not decay fast enough or if
    the result moves by more than the tolerance across truncation radii.
    """
    cfg = cfg or QuadratureConfig()
    num, p, q = _coeffs(f)
    if num.size == 0:
        return 0j, 0.0
    deg = num.size - 1
    if deg > p + q - 2:
        raise QuadratureError("integrand decays too slowly")
    rev = num[::-1]  # reversed coefficients for the tail map
    shift = p + q - deg - 2

    def inner(x: float) -> complex:
        return np.polyval(num[::-1], x) / ((x - 1j) ** p * (x + 1j) ** q)

    def tail(u: float) -> complex:
        # xi = 1/u on both tails; d xi = du / u^2 absorbed in the power of u
        return u**shift * np.polyval(rev[::-1], u) / ((1 - 1j * u) ** p * (1 + 1j * u) ** q)

    values = []
    errors = []
    for L in cfg.radii:
        a, ea = _quad_complex(inner, -L, L, cfg)
        b, eb = _quad_complex(tail, -1.0 / L, 1.0 / L, cfg)
        values.append(a + b)
        errors.append(ea + eb)
    spread = max(abs(v - values[0]) for v in values)
    scale = max(1.0, abs(values[0]))
    if spread > 1e-9 * scale:
        raise QuadratureError(f"truncation radii disagree by {spread:.3e}")
    return values[0], max(errors) + spread


def numeric_sphere_moment(exponents: Sequence[int], dim: int = 6) -> float:
    """``int_{S^{dim-1}} xi^a``, unnormalized; exact zero for odd patterns."""
    exps = list(exponents) + [0] * (dim - len(exponents))
    if any(e % 2 for e in exps):
        return 0.0
    log = math.log(2.0) + sum(gammaln((e + 1) / 2) for e in exps) - gammaln((sum(exps) + dim) / 2)
    return math.exp(log)


def random_curvature_tensor(rng: np.random.Generator, dim: int = 6) -> np.ndarray:
    """A tensor with all algebraic curvature symmetries.

    Built as a sum of Kulkarni-Nomizu products of random symmetric matrices,
    which satisfy pair antisymmetry, pair exchange and the first Bianchi identity.
    """
    R = np.zeros((dim,) * 4)
    for _ in range(3):
        a = rng.normal(size=(dim, dim))
        h = a + a.T
        b = rng.normal(size=(dim, dim))
        k = b + b.T
        R += (
            np.einsum("ac,bd->abcd", h, k)
            + np.einsum("bd,ac->abcd", h, k)
            - np.einsum("ad,bc->abcd", h, k)
            - np.einsum("bc,ad->abcd", h, k)
        )
    return R


def _scalar_curvature(R: np.ndarray) -> float:
    return float(np.einsum("abab->", R))


@dataclass(frozen=True)
class OracleVerdict:
    case_id: int | None
    numeric: complex
    exact: complex
    agree: bool
    detail: str = ""

    def as_dict(self) -> dict:
        return {
            "agree": self.agree,
            "numeric": [round(self.numeric.real, 12), round(self.numeric.imag, 12)],
            "exact": [round(self.exact.real, 12), round(self.exact.imag, 12)],
        }


def numeric_case_check(
    result,
    assignment: Mapping[str, float] | None = None,
    *,
    rel_tol: float = 1e-9,
    seed: int = 20261019,
    cfg: QuadratureConfig | None = None,
) -> OracleVerdict:
    """Recompute a case from its ledger with quadrature and Gamma moments.

    Curvature atoms are evaluated on a random curvature tensor rescaled so that
    its scalar curvature equals the assigned ``SB``.
    """
    assignment = dict(DEFAULT_ASSIGNMENT if assignment is None else assignment)
    rng = np.random.default_rng(seed)
    R = random_curvature_tensor(rng)
    s = _scalar_curvature(R)
    R *= assignment["SB"] / s
    omega5 = math.pi**3
    total = 0j
    line_cache: dict[PoleLimitedRational, complex] = {}
    for e in result.ledger:
        moment = numeric_sphere_moment(e.xi_exponents) / omega5
        if moment == 0.0:
            continue
        if e.integrand not in line_cache:
            line_cache[e.integrand] = numeric_line_integral(e.integrand, cfg)[0] / math.pi
        weight = _c(e.prefactor) * line_cache[e.integrand] * moment
        for atom in e.atoms:
            if atom[0] != "R":
                raise ValueError(f"atom {atom} has no numeric model")
            a, b, c, d = (x - 1 for x in atom[1:])
            weight *= R[a, b, c, d]
        for name, power in zip(PARAMETERS, e.monomial):
            if power:
                weight *= assignment[name] ** power
        total += weight
    exact = substitute_numeric(result.value, assignment)
    scale = max(abs(exact), abs(total), 1e-300)
    agree = abs(total - exact) <= rel_tol * scale or abs(total - exact) <= 1e-12
    return OracleVerdict(result.case_id, total, exact, agree)
