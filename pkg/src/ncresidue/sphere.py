"""Exact monomial moments over the unit sphere S^{d-1} in R^d (default d = 6).

Moments are returned as rational multiples of the sphere volume; for d = 6
that volume is pi^3.  The degree-2m moment of a product of coordinates is a
sum over perfect matchings of Kronecker deltas, each matching weighted by

    w(2m) = 1 / (d (d + 2) ... (d + 2m - 2)),

which for d = 6 gives 1/6 at degree two and 1/48 at degree four.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Hashable, Iterator, Sequence

__all__ = [
    "SPHERE_DIM",
    "OddPatternError",
    "PairingTensor",
    "SphereMonomial",
    "pairing_weight",
    "pairing_tensor",
    "perfect_matchings",
    "sphere_moment",
]

SPHERE_DIM = 6


class OddPatternError(ValueError):
    pass


@dataclass(frozen=True)
class SphereMonomial:
    exponents: tuple[int, ...]

    def __post_init__(self) -> None:
        if any(e < 0 for e in self.exponents):
            raise ValueError("exponents must be non-negative")

    @property
    def degree(self) -> int:
        return sum(self.exponents)

    @classmethod
    def of(cls, *indices: int, dim: int = SPHERE_DIM) -> "SphereMonomial":
        """Monomial ``xi_{i1} xi_{i2} ...`` from 1-based coordinate indices."""
        exps = [0] * dim
        for i in indices:
            exps[i - 1] += 1
        return cls(tuple(exps))


def pairing_weight(two_m: int, dim: int = SPHERE_DIM) -> Fraction:
    if two_m % 2:
        raise OddPatternError("odd number of indices")
    w = Fraction(1)
    for k in range(two_m // 2):
        w /= dim + 2 * k
    return w


def perfect_matchings(items: Sequence[Hashable]) -> Iterator[tuple[tuple[Hashable, Hashable], ...]]:
    items = list(items)
    if not items:
        yield ()
        return
    first, rest = items[0], items[1:]
    for k, partner in enumerate(rest):
        remaining = rest[:k] + rest[k + 1:]
        for tail in perfect_matchings(remaining):
            yield ((first, partner),) + tail


@dataclass(frozen=True)
class PairingTensor:
    """``weight * sum over matchings of prod delta(a, b)``."""

    weight: Fraction
    matchings: tuple[tuple[tuple[Hashable, Hashable], ...], ...]


def pairing_tensor(indices: Sequence[Hashable], dim: int = SPHERE_DIM) -> PairingTensor:
    if len(indices) % 2:
        raise OddPatternError(f"odd index count {len(indices)}")
    return PairingTensor(pairing_weight(len(indices), dim), tuple(perfect_matchings(indices)))


def _double_factorial_odd(e: int) -> int:
    """(e - 1)!! for even e: the number of matchings of e equal indices."""
    out = 1
    for k in range(e - 1, 0, -2):
        out *= k
    return out


def sphere_moment(m: SphereMonomial | Sequence[int], dim: int | None = None) -> Fraction:
    """Integral of the monomial over the unit sphere, divided by the sphere volume."""
    exps = m.exponents if isinstance(m, SphereMonomial) else tuple(m)
    if dim is None:
        dim = max(len(exps), SPHERE_DIM)
    if any(e % 2 for e in exps):
        return Fraction(0)
    count = 1
    for e in exps:
        count *= _double_factorial_odd(e)
    return pairing_weight(sum(exps), dim) * count
