"""Exact coefficient arithmetic over Q(i) and the parameter-polynomial ring.

Every final answer of the engine is a :class:`ParameterPolynomial` in the five
boundary scalars ``H1 = h'(0)``, ``H2 = h''(0)``, ``SM`` (scalar curvature of
the manifold), ``SB`` (scalar curvature of the boundary) and ``TV = T^2|V|^2``,
with coefficients in the Gaussian rationals.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterable, Iterator, Mapping, Sequence, Union

__all__ = [
    "PARAMETERS",
    "GaussianRational",
    "ParameterPolynomial",
    "ScalarDivisionError",
    "MissingAssignmentError",
    "as_gaussian",
    "gaussian_arith",
    "param_poly_arith",
    "substitute_numeric",
]

PARAMETERS: tuple[str, ...] = ("H1", "H2", "SM", "SB", "TV")
_NPARAM = len(PARAMETERS)

Number = Union[int, Fraction, "GaussianRational"]


class ScalarDivisionError(ZeroDivisionError):
    """Raised on division by an exact zero in Q(i)."""


class MissingAssignmentError(KeyError):
    """Raised when a numeric substitution lacks a value for a present indeterminate."""


class GaussianRational:
    """An element ``(a + b i) / d`` of Q(i) with ``d > 0`` and ``gcd(a, b, d) = 1``."""

    __slots__ = ("_a", "_b", "_d", "_hash")

    def __init__(self, real: Union[int, Fraction] = 0, imag: Union[int, Fraction] = 0):
        re = Fraction(real)
        im = Fraction(imag)
        d = re.denominator * im.denominator // gcd(re.denominator, im.denominator)
        self._set(re.numerator * (d // re.denominator), im.numerator * (d // im.denominator), d)

    def _set(self, a: int, b: int, d: int) -> None:
        g = gcd(gcd(a, b), d)
        if g != 1:
            a //= g
            b //= g
            d //= g
        self._a = a
        self._b = b
        self._d = d
        self._hash = None

    @classmethod
    def _raw(cls, a: int, b: int, d: int) -> "GaussianRational":
        obj = cls.__new__(cls)
        if d < 0:
            a, b, d = -a, -b, -d
        obj._set(a, b, d)
        return obj

    # -- accessors -----------------------------------------------------------
    @property
    def real(self) -> Fraction:
        return Fraction(self._a, self._d)

    @property
    def imag(self) -> Fraction:
        return Fraction(self._b, self._d)

    def is_zero(self) -> bool:
        return self._a == 0 and self._b == 0

    def is_real(self) -> bool:
        return self._b == 0

    def conjugate(self) -> "GaussianRational":
        return GaussianRational._raw(self._a, -self._b, self._d)

    # -- arithmetic ----------------------------------------------------------
    def __add__(self, other: Number) -> "GaussianRational":
        o = as_gaussian(other)
        if self._d == o._d:
            return GaussianRational._raw(self._a + o._a, self._b + o._b, self._d)
        return GaussianRational._raw(
            self._a * o._d + o._a * self._d, self._b * o._d + o._b * self._d, self._d * o._d
        )

    __radd__ = __add__

    def __neg__(self) -> "GaussianRational":
        return GaussianRational._raw(-self._a, -self._b, self._d)

    def __sub__(self, other: Number) -> "GaussianRational":
        return self + (-as_gaussian(other))

    def __rsub__(self, other: Number) -> "GaussianRational":
        return as_gaussian(other) - self

    def __mul__(self, other: Number) -> "GaussianRational":
        o = as_gaussian(other)
        a, b, c, e = self._a, self._b, o._a, o._b
        return GaussianRational._raw(a * c - b * e, a * e + b * c, self._d * o._d)

    __rmul__ = __mul__

    def inverse(self) -> "GaussianRational":
        if self.is_zero():
            raise ScalarDivisionError("division by zero in Q(i)")
        # d / (a + b i) = d (a - b i) / (a^2 + b^2)
        n = self._a * self._a + self._b * self._b
        return GaussianRational._raw(self._d * self._a, -self._d * self._b, n)

    def __truediv__(self, other: Number) -> "GaussianRational":
        return self * as_gaussian(other).inverse()

    def __rtruediv__(self, other: Number) -> "GaussianRational":
        return as_gaussian(other) * self.inverse()

    def __pow__(self, n: int) -> "GaussianRational":
        if n < 0:
            return self.inverse() ** (-n)
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- comparison / hashing ------------------------------------------------
    def __eq__(self, other: object) -> bool:
        if isinstance(other, GaussianRational):
            return self._a == other._a and self._b == other._b and self._d == other._d
        if isinstance(other, (int, Fraction)):
            return self._b == 0 and Fraction(self._a, self._d) == other
        if isinstance(other, complex):
            return complex(self) == other
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            if self._b == 0:
                self._hash = hash(Fraction(self._a, self._d))
            else:
                self._hash = hash((self._a, self._b, self._d))
        return self._hash

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __complex__(self) -> complex:
        return complex(self._a / self._d, self._b / self._d)

    # -- serialization -------------------------------------------------------
    def to_list(self) -> list[int]:
        re, im = self.real, self.imag
        return [re.numerator, re.denominator, im.numerator, im.denominator]

    @classmethod
    def from_list(cls, data: Sequence[int]) -> "GaussianRational":
        if len(data) != 4:
            raise ValueError("expected [re_num, re_den, im_num, im_den]")
        return cls(Fraction(int(data[0]), int(data[1])), Fraction(int(data[2]), int(data[3])))

    def render(self) -> str:
        """Canonical text form: ``7/8``, ``45/32i``-style parts joined as ``a/b + (c/d)i``."""
        re, im = self.real, self.imag
        if im == 0:
            return _frac(re)
        if re == 0:
            return f"({_frac(im)})i"
        sign = "+" if im > 0 else "-"
        return f"{_frac(re)} {sign} ({_frac(abs(im))})i"

    def __repr__(self) -> str:
        return f"GaussianRational({self.render()})"

    __str__ = render


def _frac(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def as_gaussian(x: Number) -> GaussianRational:
    if isinstance(x, GaussianRational):
        return x
    if isinstance(x, (int, Fraction)):
        return GaussianRational(x)
    raise TypeError(f"cannot coerce {type(x).__name__} to GaussianRational")


ZERO = GaussianRational(0)
ONE = GaussianRational(1)
I = GaussianRational(0, 1)


def gaussian_arith(a: GaussianRational, b: GaussianRational, op: str) -> GaussianRational:
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown operation {op!r}")


Monomial = tuple[int, ...]


class ParameterPolynomial:
    """Polynomial in H1, H2, SM, SB, TV with Q(i) coefficients. Immutable."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Monomial, Number] | Iterable[tuple[Monomial, Number]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Monomial, GaussianRational] = {}
        for mono, coeff in items:
            mono = tuple(int(e) for e in mono)
            if len(mono) != _NPARAM or any(e < 0 for e in mono):
                raise ValueError(f"bad monomial exponent vector {mono}")
            acc[mono] = acc.get(mono, ZERO) + as_gaussian(coeff)
        self._terms = {m: c for m, c in sorted(acc.items()) if not c.is_zero()}

    @classmethod
    def constant(cls, c: Number) -> "ParameterPolynomial":
        return cls({(0,) * _NPARAM: c})

    @classmethod
    def var(cls, name: str, power: int = 1) -> "ParameterPolynomial":
        mono = [0] * _NPARAM
        mono[PARAMETERS.index(name)] = power
        return cls({tuple(mono): 1})

    @property
    def terms(self) -> dict[Monomial, GaussianRational]:
        return dict(self._terms)

    def items(self) -> Iterator[tuple[Monomial, GaussianRational]]:
        return iter(self._terms.items())

    def coefficient(self, mono: Monomial | str) -> GaussianRational:
        if isinstance(mono, str):
            mono = parse_monomial(mono)
        return self._terms.get(tuple(mono), ZERO)

    def is_zero(self) -> bool:
        return not self._terms

    def __add__(self, other: "ParameterPolynomial") -> "ParameterPolynomial":
        other = _as_poly(other)
        return ParameterPolynomial(list(self._terms.items()) + list(other._terms.items()))

    __radd__ = __add__

    def __neg__(self) -> "ParameterPolynomial":
        return ParameterPolynomial({m: -c for m, c in self._terms.items()})

    def __sub__(self, other: "ParameterPolynomial") -> "ParameterPolynomial":
        return self + (-_as_poly(other))

    def __mul__(self, other: "ParameterPolynomial | Number") -> "ParameterPolynomial":
        if not isinstance(other, ParameterPolynomial):
            return self.scale(other)
        out = []
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                out.append((tuple(x + y for x, y in zip(m1, m2)), c1 * c2))
        return ParameterPolynomial(out)

    __rmul__ = __mul__

    def scale(self, c: Number) -> "ParameterPolynomial":
        c = as_gaussian(c)
        return ParameterPolynomial({m: v * c for m, v in self._terms.items()})

    def drop(self, name: str) -> "ParameterPolynomial":
        """Remove every monomial containing the indeterminate ``name``."""
        idx = PARAMETERS.index(name)
        return ParameterPolynomial({m: c for m, c in self._terms.items() if m[idx] == 0})

    def real_part(self) -> "ParameterPolynomial":
        return ParameterPolynomial({m: GaussianRational(c.real) for m, c in self._terms.items()})

    def imag_part(self) -> "ParameterPolynomial":
        return ParameterPolynomial({m: GaussianRational(c.imag) for m, c in self._terms.items()})

    def __eq__(self, other: object) -> bool:
        if isinstance(other, ParameterPolynomial):
            return self._terms == other._terms
        if isinstance(other, (int, Fraction, GaussianRational)):
            return self == ParameterPolynomial.constant(other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash(tuple(self._terms.items()))

    def to_list(self) -> list[list]:
        return [[list(m), self._terms[m].to_list()] for m in self._ordered()]

    def _ordered(self) -> list[Monomial]:
        # canonical order: by degree, then by variable order
        return sorted(self._terms, key=lambda m: (sum(m), [-x for x in m]))

    @classmethod
    def from_list(cls, data: Sequence[Sequence]) -> "ParameterPolynomial":
        return cls([(tuple(m), GaussianRational.from_list(c)) for m, c in data])

    def render(self, suffix: str = "") -> str:
        """Human form, one ``coefficient · monomial`` summand per term."""
        if not self._terms:
            return "0" + (f" · {suffix}" if suffix else "")
        parts = []
        for mono in self._ordered():
            c = self._terms[mono]
            bits = [c.render()]
            name = monomial_name(mono)
            if name != "1":
                bits.append(name)
            if suffix:
                bits.append(suffix)
            parts.append(" · ".join(bits))
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"ParameterPolynomial({self.render()})"

    __str__ = render


def _as_poly(x: "ParameterPolynomial | Number") -> ParameterPolynomial:
    return x if isinstance(x, ParameterPolynomial) else ParameterPolynomial.constant(x)


def monomial_name(mono: Monomial) -> str:
    bits = []
    for name, e in zip(PARAMETERS, mono):
        if e == 1:
            bits.append(name)
        elif e > 1:
            bits.append(f"{name}^{e}")
    return "*".join(bits) if bits else "1"


def parse_monomial(text: str) -> Monomial:
    mono = [0] * _NPARAM
    if text.strip() == "1":
        return tuple(mono)
    for factor in text.split("*"):
        name, _, power = factor.strip().partition("^")
        mono[PARAMETERS.index(name)] += int(power) if power else 1
    return tuple(mono)


def param_poly_arith(
    a: ParameterPolynomial, b: "ParameterPolynomial | Number", op: str
) -> ParameterPolynomial:
    if op == "add":
        return a + b
    if op == "mul":
        return a * b
    if op == "scale":
        return a.scale(b)
    raise ValueError(f"unknown operation {op!r}")


def substitute_numeric(p: ParameterPolynomial, assignment: Mapping[str, complex | float]) -> complex:
    total = 0j
    for mono, c in p.items():
        value = complex(c)
        for name, e in zip(PARAMETERS, mono):
            if e:
                if name not in assignment:
                    raise MissingAssignmentError(name)
                value *= complex(assignment[name]) ** e
        total += value
    return total
