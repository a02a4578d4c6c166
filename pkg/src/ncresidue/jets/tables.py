"""Finite jet tables of the geometric primitives at the boundary point x0.

Coordinates: normal coordinates on the boundary, ``x_7`` the collar
coordinate, metric ``(1/h(x_7)) g^{bdry} + dx_7^2`` with ``h(0) = 1``.
Values use ``H1 = h'(0)``, ``H2 = h''(0)`` and boundary curvature components
``R_{abcd}`` (indices 1..6).

Only the entries listed here exist.  Any other access raises
:class:`MissingJetEntry`; nothing defaults to zero.

Two rows (the normal derivative of the normal spin and Witten connection
components) contain a summation index that is never bound.  They are stored
as :class:`AmbiguousEntry` and resolved by :class:`TableConfig`:

* ``"diagonal"`` binds the stray index to the summed one, giving a scalar;
* ``"antisymmetric"`` sums it over all values different from the summed
  index, which makes the antisymmetric product vanish identically.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from .boundary import BoundaryValue

__all__ = [
    "AMBIGUOUS_READINGS",
    "AmbiguousEntry",
    "JetTables",
    "MissingJetEntry",
    "TableConfig",
]

N = 7
TAN = range(1, N)
AMBIGUOUS_READINGS = ("diagonal", "antisymmetric")

F = Fraction
BV = BoundaryValue


class MissingJetEntry(LookupError):
    def __init__(self, name: str, indices: tuple, derivs: tuple):
        self.name = name
        self.indices = indices
        self.derivs = derivs
        dirs = ",".join(f"x{j}" for j in derivs) or "none"
        super().__init__(f"no jet entry for {name}{list(indices)} with derivatives [{dirs}]")


@dataclass(frozen=True)
class TableConfig:
    ambiguous_reading: str = "diagonal"

    def __post_init__(self) -> None:
        if self.ambiguous_reading not in AMBIGUOUS_READINGS:
            raise ValueError(f"unknown reading {self.ambiguous_reading!r}")


@dataclass(frozen=True)
class AmbiguousEntry:
    name: str
    indices: tuple
    derivs: tuple
    readings: dict = field(hash=False, compare=False)


def _h1() -> BV:
    return BV.param("H1")


def _h2() -> BV:
    return BV.param("H2")


def _c(k: int) -> BV:
    return BV.generator("c", k)


def _cb(k: int) -> BV:
    return BV.generator("cbar", k)


def _R(a: int, b: int, c: int, d: int) -> BV:
    return BV.curvature("R", a, b, c, d)


def _sum(values) -> BV:
    out = BV.zero()
    for v in values:
        out = out + v
    return out


class JetTables:
    """Lookup of primitive jets; records every ambiguous entry it hands out."""

    def __init__(self, config: TableConfig | None = None):
        self.config = config or TableConfig()
        self.ambiguous_hits: set[tuple] = set()
        self._cache: dict[tuple, BV] = {}
        self._handlers: dict[str, Callable[[tuple, tuple], BV]] = {
            "g": self._inverse_metric,
            "glow": self._metric,
            "Gamma": self._gamma,
            "sigma": self._sigma,
            "a": self._witten_connection,
            "sM": self._scalar("SM"),
            "TV": self._scalar("TV"),
            "Rcl": self._curvature_clifford,
            "W": self._potential_derivative,
        }

    def lookup(self, name: str, indices: tuple, derivs: tuple) -> BV:
        key = (name, indices, derivs)
        hit = self._cache.get(key)
        if hit is not None:
            return hit
        handler = self._handlers.get(name)
        if handler is None:
            raise MissingJetEntry(name, indices, derivs)
        value = handler(indices, derivs)
        if isinstance(value, AmbiguousEntry):
            self.ambiguous_hits.add(key)
            value = value.readings[self.config.ambiguous_reading]
        self._cache[key] = value
        return value

    # -- metric ------------------------------------------------------------------
    def _inverse_metric(self, idx: tuple, derivs: tuple) -> BV:
        a, b = idx
        tangential = a < N and b < N
        if not derivs:
            return BV.constant(1) if a == b else BV.zero()
        if len(derivs) == 1:
            (j,) = derivs
            if j < N:
                return BV.zero()
            return _h1() if tangential and a == b else BV.zero()
        if len(derivs) == 2:
            u, v = derivs
            if not tangential:
                return BV.zero()
            if u < N and v < N:
                return (_R(u, a, v, b) + _R(u, b, v, a)).scale(F(-1, 3))
            if u < N or v < N:
                return BV.zero()
            return _h2() if a == b else BV.zero()
        raise MissingJetEntry("g", idx, derivs)

    def _metric(self, idx: tuple, derivs: tuple) -> BV:
        """Lower-index metric, derived from the inverse-metric jets.

        At x0 the metric is the identity, so ``dG = -dg`` and
        ``d_u d_v G = -d_u d_v g + d_u g d_v g + d_v g d_u g``.
        """
        a, b = idx
        g = lambda i, j, d: self.lookup("g", (i, j), d)  # noqa: E731
        if not derivs:
            return g(a, b, ())
        if len(derivs) == 1:
            return -g(a, b, derivs)
        if len(derivs) == 2:
            u, v = derivs
            out = -g(a, b, derivs)
            for c in range(1, N + 1):
                out = out + g(a, c, (u,)) * g(c, b, (v,)) + g(a, c, (v,)) * g(c, b, (u,))
            return out
        raise MissingJetEntry("glow", idx, derivs)

    # -- connection terms --------------------------------------------------------
    def _gamma(self, idx: tuple, derivs: tuple) -> BV:
        (k,) = idx
        if not derivs:
            return _h1().scale(3) if k == N else BV.zero()
        if len(derivs) == 1:
            (j,) = derivs
            if j < N:
                if k == N:
                    return BV.zero()
                return _sum(_R(i, j, i, k) for i in TAN).scale(F(5, 6))
            if k < N:
                return BV.zero()
            return _h2().scale(3) - (_h1() * _h1()).scale(F(9, 2))
        raise MissingJetEntry("Gamma", idx, derivs)

    def _spin_like(self, idx: tuple, derivs: tuple, gen: Callable[[int], BV], sign: int, name: str):
        (k,) = idx
        if not derivs:
            if k == N:
                return BV.zero()
            return (_h1() * gen(k) * gen(N)).scale(F(-sign, 4))
        if len(derivs) == 1:
            (j,) = derivs
            if j < N:
                if k == N:
                    return BV.zero()
                terms = (_R(k, j, s, t) * gen(s) * gen(t) for s in TAN for t in TAN if s != t)
                return _sum(terms).scale(F(-sign, 8))
            if k < N:
                coeff = (_h1() * _h1()).scale(F(3, 8)) - _h2().scale(F(1, 4))
                return (coeff * _sum(gen(N) * gen(t) for t in TAN)).scale(-sign)
            coeff = (_h1() * _h1() - _h2()).scale(F(-sign, 8))
            diagonal = coeff * _sum(gen(t) * gen(t) for t in TAN)
            antisym = coeff * _sum(gen(s) * gen(t) for s in TAN for t in TAN if s != t)
            return AmbiguousEntry(name, idx, derivs, {"diagonal": diagonal, "antisymmetric": antisym})
        raise MissingJetEntry(name, idx, derivs)

    def _sigma(self, idx: tuple, derivs: tuple):
        return self._spin_like(idx, derivs, _c, 1, "sigma")

    def _witten_connection(self, idx: tuple, derivs: tuple):
        return self._spin_like(idx, derivs, _cb, -1, "a")

    # -- zeroth-order terms --------------------------------------------------------
    def _scalar(self, name: str) -> Callable[[tuple, tuple], BV]:
        def handler(idx: tuple, derivs: tuple) -> BV:
            if derivs:
                raise MissingJetEntry(name, idx, derivs)
            return BV.param(name)

        return handler

    def _curvature_clifford(self, idx: tuple, derivs: tuple) -> BV:
        """``sum_{ijkl} R^M_{ijkl} cb_i cb_j c_k c_l`` (manifold curvature)."""
        if derivs:
            raise MissingJetEntry("Rcl", idx, derivs)
        rng = range(1, N + 1)
        out = BV.zero()
        for i in rng:
            for j in rng:
                if i == j:
                    continue
                for k in rng:
                    for l in rng:
                        if k == l:
                            continue
                        r = BV.curvature("RM", i, j, k, l)
                        if not r.is_zero():
                            out = out + r * _cb(i) * _cb(j) * _c(k) * _c(l)
        return out

    def _potential_derivative(self, idx: tuple, derivs: tuple) -> BV:
        """``sum_i c_i cb(nabla_{e_i} V)`` with opaque components ``DV(i, j)``."""
        if derivs:
            raise MissingJetEntry("W", idx, derivs)
        rng = range(1, N + 1)
        return _sum(BV.atom(("DV", i, j)) * _c(i) * _cb(j) for i in rng for j in rng)
