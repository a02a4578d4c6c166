"""The Clifford algebra generated by ``c_1..c_7`` (square -1) and ``cb_1..cb_7`` (square +1).

All fourteen generators anticommute pairwise.  Words are stored as a pair of
bitmasks ``(bar_mask, plain_mask)`` and read in the canonical order
``cb`` block (ascending) followed by ``c`` block (ascending).  The trace is the
normalized functional ``tr = 8 * (coefficient of the empty word)``.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Mapping

from .scalars import ZERO, GaussianRational, Number, as_gaussian

__all__ = [
    "DIM",
    "TRACE_OF_IDENTITY",
    "IDENTITY_WORD",
    "CliffordElement",
    "CliffordIndexError",
    "clifford_from_generator",
    "clifford_mul",
    "clifford_trace",
    "render_word",
    "word_product",
]

DIM = 7
TRACE_OF_IDENTITY = 8
IDENTITY_WORD: tuple[int, int] = (0, 0)

Word = tuple[int, int]


class CliffordIndexError(IndexError):
    pass


def _popcount(x: int) -> int:
    return bin(x).count("1")


def _reorder_parity(a: int, b: int) -> int:
    """Parity of transpositions needed to sort the concatenation ``a`` then ``b``."""
    swaps = 0
    a >>= 1
    while a:
        swaps += _popcount(a & b)
        a >>= 1
    return swaps & 1


_PRODUCT_CACHE: dict[tuple[int, int, int, int], tuple[int, Word]] = {}


def word_product(u: Word, v: Word) -> tuple[int, Word]:
    """Return ``(sign, word)`` with ``u * v = sign * word``."""
    key = (u[0], u[1], v[0], v[1])
    hit = _PRODUCT_CACHE.get(key)
    if hit is not None:
        return hit
    b1, p1 = u
    b2, p2 = v
    parity = (_popcount(p1) * _popcount(b2)) & 1  # move cb block of v left past c block of u
    parity ^= _reorder_parity(b1, b2)
    parity ^= _reorder_parity(p1, p2)
    parity ^= _popcount(p1 & p2) & 1  # each c_k c_k = -1
    result = ((-1 if parity else 1), (b1 ^ b2, p1 ^ p2))
    _PRODUCT_CACHE[key] = result
    return result


def render_word(w: Word) -> str:
    bar, plain = w
    parts = [f"cb{i}" for i in range(1, DIM + 1) if bar >> (i - 1) & 1]
    parts += [f"c{i}" for i in range(1, DIM + 1) if plain >> (i - 1) & 1]
    return " ".join(parts) if parts else "1"


class CliffordElement:
    """Finite Q(i)-combination of canonical words. Immutable."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Word, Number] | Iterable[tuple[Word, Number]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Word, GaussianRational] = {}
        for w, c in items:
            acc[w] = acc.get(w, ZERO) + as_gaussian(c)
        self._terms = {w: c for w, c in sorted(acc.items()) if not c.is_zero()}

    @classmethod
    def identity(cls) -> "CliffordElement":
        return cls({IDENTITY_WORD: 1})

    @classmethod
    def scalar(cls, c: Number) -> "CliffordElement":
        return cls({IDENTITY_WORD: c})

    def items(self) -> Iterator[tuple[Word, GaussianRational]]:
        return iter(self._terms.items())

    def __len__(self) -> int:
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __add__(self, other: "CliffordElement") -> "CliffordElement":
        return CliffordElement(list(self._terms.items()) + list(other._terms.items()))

    def __neg__(self) -> "CliffordElement":
        return CliffordElement({w: -c for w, c in self._terms.items()})

    def __sub__(self, other: "CliffordElement") -> "CliffordElement":
        return self + (-other)

    def __mul__(self, other: "CliffordElement | Number") -> "CliffordElement":
        if not isinstance(other, CliffordElement):
            c = as_gaussian(other)
            return CliffordElement({w: v * c for w, v in self._terms.items()})
        out: list[tuple[Word, GaussianRational]] = []
        for w1, c1 in self._terms.items():
            for w2, c2 in other._terms.items():
                sign, w = word_product(w1, w2)
                out.append((w, c1 * c2 if sign > 0 else -(c1 * c2)))
        return CliffordElement(out)

    def __rmul__(self, other: Number) -> "CliffordElement":
        return self * other

    def __eq__(self, other: object) -> bool:
        if isinstance(other, CliffordElement):
            return self._terms == other._terms
        return NotImplemented

    def __hash__(self) -> int:
        return hash(tuple(self._terms.items()))

    def trace(self) -> GaussianRational:
        return self._terms.get(IDENTITY_WORD, ZERO) * TRACE_OF_IDENTITY

    def __repr__(self) -> str:
        if not self._terms:
            return "CliffordElement(0)"
        body = " + ".join(f"({c.render()}) {render_word(w)}" for w, c in self._terms.items())
        return f"CliffordElement({body})"


def generator_word(kind: str, index: int) -> Word:
    if not 1 <= index <= DIM:
        raise CliffordIndexError(f"generator index {index} outside 1..{DIM}")
    bit = 1 << (index - 1)
    if kind == "c":
        return (0, bit)
    if kind == "cbar":
        return (bit, 0)
    raise ValueError(f"unknown generator kind {kind!r}")


def clifford_from_generator(kind: str, index: int) -> CliffordElement:
    return CliffordElement({generator_word(kind, index): 1})


def clifford_mul(a: CliffordElement, b: CliffordElement) -> CliffordElement:
    return a * b


def clifford_trace(a: CliffordElement) -> GaussianRational:
    return a.trace()
