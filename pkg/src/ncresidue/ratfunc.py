"""Rational functions of xi_n whose only poles are at +i and -i.

A :class:`PoleLimitedRational` is ``N(x) / ((x - i)^p (x + i)^q)`` with ``N`` a
polynomial over Q(i), kept reduced so that ``N(i) != 0`` when ``p > 0`` and
``N(-i) != 0`` when ``q > 0``.  Poles on the real axis cannot be represented.

Integrals over the real line are returned as the exact coefficient of ``pi``.
"""

from __future__ import annotations

from math import comb, factorial
from typing import Iterable, Sequence

from .scalars import I, ONE, ZERO, GaussianRational, Number, as_gaussian

__all__ = [
    "PoleLimitedRational",
    "ProjectionDomainError",
    "NonIntegrableError",
    "Poly",
    "integrate_real_line",
    "partial_fractions",
    "pi_plus",
    "pi_minus",
    "pi_prime",
    "residue_plus",
    "rf_arith",
    "rf_derivative",
]

Poly = tuple[GaussianRational, ...]  # coefficients, lowest degree first


class ProjectionDomainError(ValueError):
    """pi^+ requested on a function that does not decay at infinity."""


class NonIntegrableError(ValueError):
    """Real-line integral requested for a function decaying slower than 1/x^2."""


# ---------------------------------------------------------------------------
# dense polynomial helpers


def _trim(c: Iterable[GaussianRational]) -> Poly:
    c = list(c)
    while c and c[-1].is_zero():
        c.pop()
    return tuple(c)


def poly_add(a: Poly, b: Poly) -> Poly:
    if len(a) < len(b):
        a, b = b, a
    return _trim([x + y for x, y in zip(a, b)] + list(a[len(b):]))


def poly_scale(a: Poly, c: GaussianRational) -> Poly:
    if c.is_zero():
        return ()
    return tuple(x * c for x in a)


def poly_mul(a: Poly, b: Poly) -> Poly:
    if not a or not b:
        return ()
    out = [ZERO] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x.is_zero():
            continue
        for j, y in enumerate(b):
            out[i + j] = out[i + j] + x * y
    return _trim(out)


def poly_eval(a: Poly, x: GaussianRational) -> GaussianRational:
    acc = ZERO
    for c in reversed(a):
        acc = acc * x + c
    return acc


def poly_deriv(a: Poly) -> Poly:
    return _trim([a[k] * k for k in range(1, len(a))])


def _divide_linear(a: Poly, root: GaussianRational) -> Poly:
    """Quotient of ``a`` by ``(x - root)``, assuming exact division."""
    n = len(a) - 1
    out = [ZERO] * n
    acc = ZERO
    for k in range(n, 0, -1):
        acc = acc * root + a[k]
        out[k - 1] = acc
    return tuple(out)


def poly_divmod(a: Poly, b: Poly) -> tuple[Poly, Poly]:
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(a)
    lead_inv = b[-1].inverse()
    db = len(b) - 1
    if len(rem) - 1 < db:
        return (), _trim(rem)
    quot = [ZERO] * (len(rem) - db)
    for k in range(len(rem) - 1, db - 1, -1):
        c = rem[k] * lead_inv
        if c.is_zero():
            continue
        quot[k - db] = c
        for j in range(db + 1):
            rem[k - db + j] = rem[k - db + j] - c * b[j]
    return _trim(quot), _trim(rem)


_LINEAR_CACHE: dict[tuple[int, int], Poly] = {}


def _power_of_linear(sign: int, m: int) -> Poly:
    """Coefficients of ``(x - sign*i)^m``."""
    key = (sign, m)
    hit = _LINEAR_CACHE.get(key)
    if hit is None:
        root = I if sign > 0 else -I
        hit = tuple(comb(m, k) * (-root) ** (m - k) for k in range(m + 1))
        _LINEAR_CACHE[key] = hit
    return hit


def _taylor_shift(a: Poly, x0: GaussianRational) -> list[GaussianRational]:
    """Coefficients of ``a(x0 + t)`` in powers of ``t``."""
    c = list(a)
    n = len(c)
    for i in range(n):
        for k in range(n - 2, i - 1, -1):
            c[k] = c[k] + x0 * c[k + 1]
    return c


# ---------------------------------------------------------------------------


class PoleLimitedRational:
    """Immutable reduced rational function ``N / ((x - i)^p (x + i)^q)``."""

    __slots__ = ("num", "p", "q", "_hash")

    def __init__(self, numerator: Sequence[Number] = (), p: int = 0, q: int = 0, *, reduced: bool = False):
        if p < 0 or q < 0:
            raise ValueError("pole orders must be non-negative")
        num = _trim(as_gaussian(c) for c in numerator)
        if not num:
            p = q = 0
        elif not reduced:
            while p > 0 and poly_eval(num, I).is_zero():
                num = _divide_linear(num, I)
                p -= 1
            while q > 0 and poly_eval(num, -I).is_zero():
                num = _divide_linear(num, -I)
                q -= 1
        self.num: Poly = num
        self.p = p
        self.q = q
        self._hash = None

    # -- constructors ----------------------------------------------------------
    @classmethod
    def constant(cls, c: Number) -> "PoleLimitedRational":
        return cls((as_gaussian(c),))

    @classmethod
    def xi(cls, power: int = 1) -> "PoleLimitedRational":
        return cls((ZERO,) * power + (ONE,))

    @classmethod
    def inv_one_plus_xi2(cls, power: int = 1) -> "PoleLimitedRational":
        """``1 / (1 + x^2)^power``."""
        return cls((ONE,), power, power, reduced=True)

    # -- queries -------------------------------------------------------------
    @property
    def degree(self) -> int:
        return len(self.num) - 1

    def is_zero(self) -> bool:
        return not self.num

    def is_decaying(self) -> bool:
        return self.is_zero() or self.degree < self.p + self.q

    def is_integrable(self) -> bool:
        return self.is_zero() or self.degree <= self.p + self.q - 2

    def __call__(self, x: Number) -> GaussianRational:
        x = as_gaussian(x)
        return poly_eval(self.num, x) / ((x - I) ** self.p * (x + I) ** self.q)

    # -- arithmetic ----------------------------------------------------------
    def _lift(self, p: int, q: int) -> Poly:
        """Numerator over the larger denominator ``(x-i)^p (x+i)^q``."""
        num = self.num
        if p > self.p:
            num = poly_mul(num, _power_of_linear(1, p - self.p))
        if q > self.q:
            num = poly_mul(num, _power_of_linear(-1, q - self.q))
        return num

    def __add__(self, other: "PoleLimitedRational | Number") -> "PoleLimitedRational":
        other = _as_rf(other)
        if other.is_zero():
            return self
        if self.is_zero():
            return other
        if self.p == other.p and self.q == other.q:
            return PoleLimitedRational(poly_add(self.num, other.num), self.p, self.q)
        p, q = max(self.p, other.p), max(self.q, other.q)
        return PoleLimitedRational(poly_add(self._lift(p, q), other._lift(p, q)), p, q)

    __radd__ = __add__

    def __neg__(self) -> "PoleLimitedRational":
        return PoleLimitedRational(tuple(-c for c in self.num), self.p, self.q, reduced=True)

    def __sub__(self, other: "PoleLimitedRational | Number") -> "PoleLimitedRational":
        return self + (-_as_rf(other))

    def __rsub__(self, other: Number) -> "PoleLimitedRational":
        return _as_rf(other) - self

    def __mul__(self, other: "PoleLimitedRational | Number") -> "PoleLimitedRational":
        if not isinstance(other, PoleLimitedRational):
            return self.scale(other)
        if self.is_zero() or other.is_zero():
            return ZERO_RF
        # reduced * reduced may still cancel across factors
        return PoleLimitedRational(poly_mul(self.num, other.num), self.p + other.p, self.q + other.q)

    def __rmul__(self, other: Number) -> "PoleLimitedRational":
        return self.scale(other)

    def scale(self, c: Number) -> "PoleLimitedRational":
        c = as_gaussian(c)
        if c.is_zero():
            return ZERO_RF
        return PoleLimitedRational(poly_scale(self.num, c), self.p, self.q, reduced=True)

    def derivative(self, order: int = 1) -> "PoleLimitedRational":
        f = self
        for _ in range(order):
            f = f._derivative_once()
        return f

    def _derivative_once(self) -> "PoleLimitedRational":
        if self.is_zero():
            return self
        # d/dx [N (x-i)^-p (x+i)^-q]
        #   = [N' (x-i)(x+i) - p N (x+i) - q N (x-i)] / ((x-i)^(p+1) (x+i)^(q+1))
        n = self.num
        term = poly_mul(poly_deriv(n), _power_of_linear(1, 1))
        term = poly_mul(term, _power_of_linear(-1, 1))
        if self.p:
            term = poly_add(term, poly_scale(poly_mul(n, _power_of_linear(-1, 1)), as_gaussian(-self.p)))
        if self.q:
            term = poly_add(term, poly_scale(poly_mul(n, _power_of_linear(1, 1)), as_gaussian(-self.q)))
        return PoleLimitedRational(term, self.p + 1, self.q + 1)

    # -- equality ------------------------------------------------------------
    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, GaussianRational)):
            other = PoleLimitedRational.constant(other)
        if not isinstance(other, PoleLimitedRational):
            return NotImplemented
        return self.num == other.num and self.p == other.p and self.q == other.q

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.num, self.p, self.q))
        return self._hash

    # -- rendering / serialization -------------------------------------------
    def render(self) -> str:
        terms = []
        for k, c in enumerate(self.num):
            if c.is_zero():
                continue
            mono = "" if k == 0 else ("xin" if k == 1 else f"xin^{k}")
            coeff = c.render()
            if not c.is_real() and c.real != 0:
                coeff = f"({coeff})"
            terms.append(coeff if not mono else (mono if c == ONE else f"{coeff}*{mono}"))
        top = " + ".join(terms) if terms else "0"
        den = []
        if self.p:
            den.append("(xin-i)" + (f"^{self.p}" if self.p > 1 else ""))
        if self.q:
            den.append("(xin+i)" + (f"^{self.q}" if self.q > 1 else ""))
        return f"({top}) / {' '.join(den)}" if den else f"({top})"

    def __repr__(self) -> str:
        return f"PoleLimitedRational({self.render()})"

    def to_dict(self) -> dict:
        return {"num": [c.to_list() for c in self.num], "p": self.p, "q": self.q}

    @classmethod
    def from_dict(cls, data: dict) -> "PoleLimitedRational":
        return cls([GaussianRational.from_list(c) for c in data["num"]], data["p"], data["q"])


def _as_rf(x: "PoleLimitedRational | Number") -> PoleLimitedRational:
    return x if isinstance(x, PoleLimitedRational) else PoleLimitedRational.constant(x)


ZERO_RF = PoleLimitedRational()
ONE_RF = PoleLimitedRational.constant(1)


def rf_arith(a: PoleLimitedRational, b, op: str) -> PoleLimitedRational:
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "scale":
        return a.scale(b)
    raise ValueError(f"unknown operation {op!r}")


def rf_derivative(f: PoleLimitedRational, order: int) -> PoleLimitedRational:
    if order < 0:
        raise ValueError("derivative order must be non-negative")
    return f.derivative(order)


# ---------------------------------------------------------------------------
# partial fractions and projections


def _laurent_head(f: PoleLimitedRational, sign: int) -> list[GaussianRational]:
    """First ``m`` Taylor coefficients of ``(x - sign*i)^m f`` about ``sign*i``.

    Here ``m`` is the pole order at ``sign*i``; entry ``j`` is the coefficient
    of ``(x - sign*i)^(j - m)`` in the Laurent expansion of ``f``.
    """
    m, other = (f.p, f.q) if sign > 0 else (f.q, f.p)
    if m == 0:
        return []
    x0 = I if sign > 0 else -I
    shifted = _taylor_shift(f.num, x0)[:m]
    shifted += [ZERO] * (m - len(shifted))
    # (x + sign*i)^(-other) = (2 sign i + t)^(-other) around t = 0
    a = x0 * 2
    series = []
    a_inv = a.inverse()
    for j in range(m):
        # coefficient of t^j in (a + t)^(-other) = C(-other, j) a^(-other-j)
        coeff = _gen_binom(-other, j) * a_inv ** (other + j)
        series.append(coeff)
    out = []
    for j in range(m):
        acc = ZERO
        for k in range(j + 1):
            acc = acc + shifted[k] * series[j - k]
        out.append(acc)
    return out


def _gen_binom(n: int, k: int) -> GaussianRational:
    num = 1
    for t in range(k):
        num *= n - t
    return GaussianRational(num) / factorial(k)


def _principal_part(f: PoleLimitedRational, sign: int) -> PoleLimitedRational:
    head = _laurent_head(f, sign)
    m = len(head)
    if m == 0:
        return ZERO_RF
    x0 = I if sign > 0 else -I
    # sum_j head[j] (x - x0)^j  over (x - x0)^m
    num: Poly = ()
    for j, c in enumerate(head):
        if c.is_zero():
            continue
        num = poly_add(num, poly_scale(_power_of_linear(sign, j), c))
    return PoleLimitedRational(num, m, 0) if sign > 0 else PoleLimitedRational(num, 0, m)


def partial_fractions(
    f: PoleLimitedRational,
) -> tuple[PoleLimitedRational, PoleLimitedRational, PoleLimitedRational]:
    """Split ``f`` into (principal part at +i, principal part at -i, polynomial part)."""
    plus = _principal_part(f, 1)
    minus = _principal_part(f, -1)
    den = poly_mul(_power_of_linear(1, f.p), _power_of_linear(-1, f.q))
    quot, _ = poly_divmod(f.num, den) if f.num else ((), ())
    return plus, minus, PoleLimitedRational(quot)


def pi_plus(f: PoleLimitedRational) -> PoleLimitedRational:
    if not f.is_decaying():
        raise ProjectionDomainError(f"pi^+ needs a decaying function, got {f.render()}")
    return _principal_part(f, 1)


def pi_minus(f: PoleLimitedRational) -> PoleLimitedRational:
    """``(id - pi^+) f`` for decaying ``f``: the principal part at -i."""
    if not f.is_decaying():
        raise ProjectionDomainError(f"pi^- needs a decaying function, got {f.render()}")
    return _principal_part(f, -1)


def residue_plus(f: PoleLimitedRational) -> GaussianRational:
    head = _laurent_head(f, 1)
    return head[-1] if head else ZERO


def pi_prime(f: PoleLimitedRational) -> GaussianRational:
    return I * residue_plus(f)


def integrate_real_line(f: PoleLimitedRational) -> GaussianRational:
    """Exact ``(1/pi) * integral over R`` of ``f``, i.e. ``2 i Res_{+i} f``."""
    if not f.is_integrable():
        raise NonIntegrableError(f"not absolutely integrable: {f.render()}")
    return I * 2 * residue_plus(f)
