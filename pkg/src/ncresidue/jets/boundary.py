"""Evaluated symbols at the boundary point on the unit cosphere.

A :class:`BoundaryValue` is a finite sum of terms

    f(xi_n) * xi'^e * word * atoms * parameter-monomial

stored as a mapping from the key ``(e, word, atoms, monomial)`` to the
rational function ``f``.  ``word`` is a canonical Clifford word, ``atoms`` a
sorted tuple of opaque tensor components (curvature components and the
Witten-potential derivative) and ``monomial`` an exponent vector over
``PARAMETERS``.  Multiplication is noncommutative through the Clifford word.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Iterator, Mapping

from ..clifford import IDENTITY_WORD, TRACE_OF_IDENTITY, CliffordElement, Word, generator_word, word_product
from ..curvature import canonical_component
from ..ratfunc import ONE_RF, ZERO_RF, PoleLimitedRational, pi_plus
from ..scalars import PARAMETERS, GaussianRational, Number, ParameterPolynomial, as_gaussian
from ..sphere import SPHERE_DIM, SphereMonomial

__all__ = [
    "Atom",
    "BoundarySymbolTerm",
    "BoundaryValue",
    "Key",
    "NDIM",
    "curvature_atom",
]

NDIM = 7
TANGENTIAL = SPHERE_DIM
Atom = tuple
Key = tuple[tuple[int, ...], Word, tuple[Atom, ...], tuple[int, ...]]

_NO_XI = (0,) * TANGENTIAL
_NO_PARAM = (0,) * len(PARAMETERS)
_UNIT_KEY: Key = (_NO_XI, IDENTITY_WORD, (), _NO_PARAM)


def curvature_atom(kind: str, a: int, b: int, c: int, d: int) -> tuple[int, Atom | None]:
    """Canonical atom for a curvature component ``kind`` in {"R", "RM"}; sign 0 if it vanishes."""
    sign, slots = canonical_component(a, b, c, d)
    if sign == 0:
        return 0, None
    return sign, (kind,) + slots


@dataclass(frozen=True)
class BoundarySymbolTerm:
    xi_n_part: PoleLimitedRational
    xi_prime_monomial: SphereMonomial
    clifford_part: CliffordElement
    scalar_part: ParameterPolynomial
    curvature_part: tuple[Atom, ...]


class BoundaryValue:
    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Key, PoleLimitedRational] | Iterable[tuple[Key, PoleLimitedRational]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Key, PoleLimitedRational] = {}
        for k, f in items:
            if f.is_zero():
                continue
            prev = acc.get(k)
            acc[k] = f if prev is None else prev + f
        self._terms = {k: f for k, f in acc.items() if not f.is_zero()}

    @classmethod
    def _trusted(cls, terms: dict[Key, PoleLimitedRational]) -> "BoundaryValue":
        obj = cls.__new__(cls)
        obj._terms = terms
        return obj

    # -- constructors ----------------------------------------------------------
    @classmethod
    def zero(cls) -> "BoundaryValue":
        return cls._trusted({})

    @classmethod
    def constant(cls, c: Number) -> "BoundaryValue":
        return cls.rational(PoleLimitedRational.constant(c))

    @classmethod
    def rational(cls, f: PoleLimitedRational) -> "BoundaryValue":
        return cls({_UNIT_KEY: f})

    @classmethod
    def xi_prime(cls, k: int) -> "BoundaryValue":
        e = [0] * TANGENTIAL
        e[k - 1] = 1
        return cls({(tuple(e), IDENTITY_WORD, (), _NO_PARAM): ONE_RF})

    @classmethod
    def xi_n(cls) -> "BoundaryValue":
        return cls.rational(PoleLimitedRational.xi())

    @classmethod
    def generator(cls, kind: str, index: int) -> "BoundaryValue":
        return cls({(_NO_XI, generator_word(kind, index), (), _NO_PARAM): ONE_RF})

    @classmethod
    def param(cls, name: str, power: int = 1) -> "BoundaryValue":
        m = [0] * len(PARAMETERS)
        m[PARAMETERS.index(name)] = power
        return cls({(_NO_XI, IDENTITY_WORD, (), tuple(m)): ONE_RF})

    @classmethod
    def atom(cls, atom: Atom, coeff: Number = 1) -> "BoundaryValue":
        return cls({(_NO_XI, IDENTITY_WORD, (atom,), _NO_PARAM): PoleLimitedRational.constant(coeff)})

    @classmethod
    def curvature(cls, kind: str, a: int, b: int, c: int, d: int) -> "BoundaryValue":
        sign, atom = curvature_atom(kind, a, b, c, d)
        return cls.zero() if sign == 0 else cls.atom(atom, sign)

    # -- queries -------------------------------------------------------------
    def items(self) -> Iterator[tuple[Key, PoleLimitedRational]]:
        return iter(self._terms.items())

    def __len__(self) -> int:
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __eq__(self, other: object) -> bool:
        if isinstance(other, BoundaryValue):
            return self._terms == other._terms
        return NotImplemented

    def __hash__(self) -> int:  # pragma: no cover - values are used as dict payloads only
        return hash(frozenset(self._terms.items()))

    def as_rational(self) -> PoleLimitedRational:
        """The value as a bare function of xi_n; errors if anything else is present."""
        if not self._terms:
            return ZERO_RF
        if set(self._terms) != {_UNIT_KEY}:
            raise ValueError("value is not a pure function of xi_n")
        return self._terms[_UNIT_KEY]

    # -- ring operations -------------------------------------------------------
    def __add__(self, other: "BoundaryValue") -> "BoundaryValue":
        if not other._terms:
            return self
        if not self._terms:
            return other
        out = dict(self._terms)
        for k, f in other._terms.items():
            prev = out.get(k)
            if prev is None:
                out[k] = f
            else:
                s = prev + f
                if s.is_zero():
                    del out[k]
                else:
                    out[k] = s
        return BoundaryValue._trusted(out)

    def __neg__(self) -> "BoundaryValue":
        return BoundaryValue._trusted({k: -f for k, f in self._terms.items()})

    def __sub__(self, other: "BoundaryValue") -> "BoundaryValue":
        return self + (-other)

    def scale(self, c: Number | PoleLimitedRational) -> "BoundaryValue":
        if isinstance(c, PoleLimitedRational):
            if c.is_zero():
                return BoundaryValue.zero()
            return BoundaryValue({k: f * c for k, f in self._terms.items()})
        c = as_gaussian(c)
        if c.is_zero():
            return BoundaryValue.zero()
        return BoundaryValue._trusted({k: f.scale(c) for k, f in self._terms.items()})

    def __mul__(self, other: "BoundaryValue | Number") -> "BoundaryValue":
        if not isinstance(other, BoundaryValue):
            return self.scale(other)
        if not self._terms or not other._terms:
            return BoundaryValue.zero()
        out: dict[Key, PoleLimitedRational] = {}
        for (e1, w1, a1, m1), f1 in self._terms.items():
            for (e2, w2, a2, m2), f2 in other._terms.items():
                sign, w = word_product(w1, w2)
                key = (
                    e1 if e2 is _NO_XI else (e2 if e1 is _NO_XI else tuple(x + y for x, y in zip(e1, e2))),
                    w,
                    a1 + a2 if not a1 or not a2 else tuple(sorted(a1 + a2)),
                    m1 if m2 is _NO_PARAM else (m2 if m1 is _NO_PARAM else tuple(x + y for x, y in zip(m1, m2))),
                )
                f = f1 * f2
                if sign < 0:
                    f = -f
                prev = out.get(key)
                out[key] = f if prev is None else prev + f
        return BoundaryValue._trusted({k: f for k, f in out.items() if not f.is_zero()})

    def __rmul__(self, other: Number) -> "BoundaryValue":
        return self.scale(other)

    def __pow__(self, n: int) -> "BoundaryValue":
        if n < 0:
            raise ValueError("negative powers are not defined for general boundary values")
        out = BoundaryValue.constant(1)
        for _ in range(n):
            out = out * self
        return out

    # -- xi_n calculus -------------------------------------------------------
    def map_rational(self, fn: Callable[[PoleLimitedRational], PoleLimitedRational]) -> "BoundaryValue":
        return BoundaryValue((k, fn(f)) for k, f in self._terms.items())

    def xi_n_derivative(self, order: int = 1) -> "BoundaryValue":
        return self.map_rational(lambda f: f.derivative(order)) if order else self

    def pi_plus(self) -> "BoundaryValue":
        return self.map_rational(pi_plus)

    # -- traces ----------------------------------------------------------------
    def trace(self) -> dict[tuple, PoleLimitedRational]:
        """Clifford trace, keyed by ``(xi exponents, atoms, monomial)``.

        Atoms of the Witten-potential kind always sit on a non-identity word,
        so they drop out here without special handling.
        """
        out: dict[tuple, PoleLimitedRational] = {}
        for (e, w, a, m), f in self._terms.items():
            if w != IDENTITY_WORD:
                continue
            k = (e, a, m)
            g = f.scale(TRACE_OF_IDENTITY)
            out[k] = g if k not in out else out[k] + g
        return {k: f for k, f in out.items() if not f.is_zero()}

    # -- normal form on the unit sphere ----------------------------------------
    def on_unit_sphere(self) -> "BoundaryValue":
        """Canonical representative modulo ``sum_k xi_k^2 = 1``.

        Powers ``xi_6^e`` with ``e >= 2`` are rewritten as
        ``xi_6^(e-2) (1 - xi_1^2 - ... - xi_5^2)`` until every exponent of
        ``xi_6`` is at most one.
        """
        work = dict(self._terms)
        done: dict[Key, PoleLimitedRational] = {}
        last = TANGENTIAL - 1
        while work:
            (e, w, a, m), f = work.popitem()
            if e[last] < 2:
                done[(e, w, a, m)] = done[(e, w, a, m)] + f if (e, w, a, m) in done else f
                continue
            base = list(e)
            base[last] -= 2
            targets = [(tuple(base), f)]
            for j in range(last):
                e2 = list(base)
                e2[j] += 2
                targets.append((tuple(e2), -f))
            for e2, g in targets:
                k = (e2, w, a, m)
                work[k] = work[k] + g if k in work else g
        return BoundaryValue(done)

    def equals_on_sphere(self, other: "BoundaryValue") -> bool:
        return (self - other).on_unit_sphere().is_zero()

    # -- structured view -------------------------------------------------------
    def terms(self) -> list[BoundarySymbolTerm]:
        out = []
        for (e, w, a, m), f in self._terms.items():
            out.append(
                BoundarySymbolTerm(
                    xi_n_part=f,
                    xi_prime_monomial=SphereMonomial(e),
                    clifford_part=CliffordElement({w: 1}),
                    scalar_part=ParameterPolynomial({m: 1}),
                    curvature_part=a,
                )
            )
        return out

    def __repr__(self) -> str:
        from ..clifford import render_word
        from ..scalars import monomial_name

        if not self._terms:
            return "BoundaryValue(0)"
        parts = []
        for (e, w, a, m), f in sorted(self._terms.items(), key=lambda kv: repr(kv[0])):
            bits = [f.render()]
            xs = "*".join(f"xi{i + 1}" + (f"^{p}" if p > 1 else "") for i, p in enumerate(e) if p)
            if xs:
                bits.append(xs)
            if w != IDENTITY_WORD:
                bits.append(render_word(w))
            for atom in a:
                bits.append(f"{atom[0]}{atom[1:]}")
            if any(m):
                bits.append(monomial_name(m))
            parts.append(" * ".join(bits))
        return "BoundaryValue(" + " + ".join(parts) + ")"
