"""Expression trees for symbols and their exact derivatives.

Leaves:

* ``Const``: a Q(i) constant.
* ``Gen``: a constant Clifford generator ``c_k`` or ``cb_k`` of the frame.
* ``Xi``: the cotangent coordinate ``xi_a``; independent of x.
* ``Prim``: an x-dependent primitive with pending x-derivatives (metric,
  Christoffel contraction, spin and Witten connection terms, scalar terms).
* ``NormSq``: ``|xi|^2 = g^{ab} xi_a xi_b`` with pending x-derivatives.
* ``XiUp``: ``xi^c = g^{cb} xi_b`` with pending x-derivatives.

Interior nodes are ``Sum``, ``Prod`` (ordered, since Clifford factors do not
commute) and ``Pow`` (integer power of a commuting scalar node).

Directions are ``("x", j)`` or ``("xi", j)`` with ``1 <= j <= 7``; ``j = 7`` is
the normal direction.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from ..scalars import ONE, ZERO, GaussianRational, Number, as_gaussian

__all__ = [
    "Const",
    "Direction",
    "Expr",
    "Gen",
    "NormSq",
    "Pow",
    "Prim",
    "Prod",
    "Sum",
    "Xi",
    "XiUp",
    "add",
    "const",
    "derivative",
    "jet_derivative",
    "mul",
    "power",
    "ZERO_E",
    "ONE_E",
]

Direction = tuple[str, int]
N = 7


class Expr:
    __slots__ = ("_h",)

    def _key(self) -> tuple:
        raise NotImplementedError

    def __hash__(self) -> int:
        return self._h

    def __eq__(self, other: object) -> bool:
        if self is other:
            return True
        if not isinstance(other, Expr) or self._h != other._h:
            return False
        return self._key() == other._key()

    # operator sugar
    def __add__(self, other: "Expr | Number") -> "Expr":
        return add(self, _wrap(other))

    def __radd__(self, other: Number) -> "Expr":
        return add(_wrap(other), self)

    def __sub__(self, other: "Expr | Number") -> "Expr":
        return add(self, mul(const(-1), _wrap(other)))

    def __rsub__(self, other: Number) -> "Expr":
        return add(_wrap(other), mul(const(-1), self))

    def __neg__(self) -> "Expr":
        return mul(const(-1), self)

    def __mul__(self, other: "Expr | Number") -> "Expr":
        return mul(self, _wrap(other))

    def __rmul__(self, other: Number) -> "Expr":
        return mul(_wrap(other), self)

    def __pow__(self, n: int) -> "Expr":
        return power(self, n)


def _wrap(x: "Expr | Number") -> Expr:
    return x if isinstance(x, Expr) else const(x)


class Const(Expr):
    __slots__ = ("value",)

    def __init__(self, value: Number):
        self.value = as_gaussian(value)
        self._h = hash(("Const", self.value))

    def _key(self) -> tuple:
        return ("Const", self.value)

    def __repr__(self) -> str:
        return self.value.render()


class Gen(Expr):
    __slots__ = ("kind", "index")

    def __init__(self, kind: str, index: int):
        if kind not in ("c", "cbar") or not 1 <= index <= N:
            raise ValueError(f"bad generator {kind}{index}")
        self.kind = kind
        self.index = index
        self._h = hash(("Gen", kind, index))

    def _key(self) -> tuple:
        return ("Gen", self.kind, self.index)

    def __repr__(self) -> str:
        return f"{'cb' if self.kind == 'cbar' else 'c'}{self.index}"


class Xi(Expr):
    __slots__ = ("index",)

    def __init__(self, index: int):
        if not 1 <= index <= N:
            raise ValueError(f"bad xi index {index}")
        self.index = index
        self._h = hash(("Xi", index))

    def _key(self) -> tuple:
        return ("Xi", self.index)

    def __repr__(self) -> str:
        return f"xi{self.index}"


def _sorted_dirs(dirs: Iterable[int]) -> tuple[int, ...]:
    return tuple(sorted(dirs))


class Prim(Expr):
    """An x-dependent, xi-independent primitive carrying pending x-derivatives."""

    __slots__ = ("name", "indices", "derivs")

    def __init__(self, name: str, indices: Sequence[int] = (), derivs: Iterable[int] = ()):
        self.name = name
        self.indices = tuple(indices)
        self.derivs = _sorted_dirs(derivs)
        self._h = hash(("Prim", self.name, self.indices, self.derivs))

    def _key(self) -> tuple:
        return ("Prim", self.name, self.indices, self.derivs)

    def __repr__(self) -> str:
        d = "".join(f"d{j}" for j in self.derivs)
        return f"{d}{self.name}{list(self.indices) if self.indices else ''}"


class NormSq(Expr):
    __slots__ = ("derivs",)

    def __init__(self, derivs: Iterable[int] = ()):
        self.derivs = _sorted_dirs(derivs)
        self._h = hash(("NormSq", self.derivs))

    def _key(self) -> tuple:
        return ("NormSq", self.derivs)

    def __repr__(self) -> str:
        return "".join(f"d{j}" for j in self.derivs) + "|xi|^2"


class XiUp(Expr):
    __slots__ = ("index", "derivs")

    def __init__(self, index: int, derivs: Iterable[int] = ()):
        self.index = index
        self.derivs = _sorted_dirs(derivs)
        self._h = hash(("XiUp", index, self.derivs))

    def _key(self) -> tuple:
        return ("XiUp", self.index, self.derivs)

    def __repr__(self) -> str:
        return "".join(f"d{j}" for j in self.derivs) + f"xi^{self.index}"


class Sum(Expr):
    __slots__ = ("terms",)

    def __init__(self, terms: Sequence[Expr]):
        self.terms = tuple(terms)
        self._h = hash(("Sum", self.terms))

    def _key(self) -> tuple:
        return ("Sum", self.terms)

    def __repr__(self) -> str:
        return "(" + " + ".join(map(repr, self.terms)) + ")"


class Prod(Expr):
    __slots__ = ("factors",)

    def __init__(self, factors: Sequence[Expr]):
        self.factors = tuple(factors)
        self._h = hash(("Prod", self.factors))

    def _key(self) -> tuple:
        return ("Prod", self.factors)

    def __repr__(self) -> str:
        return " ".join(map(repr, self.factors))


class Pow(Expr):
    __slots__ = ("base", "exponent")

    def __init__(self, base: Expr, exponent: int):
        self.base = base
        self.exponent = exponent
        self._h = hash(("Pow", base, exponent))

    def _key(self) -> tuple:
        return ("Pow", self.base, self.exponent)

    def __repr__(self) -> str:
        return f"({self.base!r})^{self.exponent}"


ZERO_E = Const(0)
ONE_E = Const(1)


def const(c: Number) -> Const:
    return Const(c)


def _is_zero(e: Expr) -> bool:
    return isinstance(e, Const) and e.value.is_zero()


def add(*terms: Expr) -> Expr:
    flat: list[Expr] = []
    c = ZERO
    for t in terms:
        parts = t.terms if isinstance(t, Sum) else (t,)
        for p in parts:
            if isinstance(p, Const):
                c = c + p.value
            else:
                flat.append(p)
    if not c.is_zero():
        flat.insert(0, Const(c))
    if not flat:
        return ZERO_E
    if len(flat) == 1:
        return flat[0]
    return Sum(flat)


def mul(*factors: Expr) -> Expr:
    flat: list[Expr] = []
    c = ONE
    for f in factors:
        parts = f.factors if isinstance(f, Prod) else (f,)
        for p in parts:
            if isinstance(p, Const):
                if p.value.is_zero():
                    return ZERO_E
                c = c * p.value
            else:
                flat.append(p)
    if c != ONE or not flat:
        flat.insert(0, Const(c))
    if len(flat) == 1:
        return flat[0]
    return Prod(flat)


def power(base: Expr, n: int) -> Expr:
    if n == 0:
        return ONE_E
    if n == 1:
        return base
    if isinstance(base, Const):
        return Const(base.value ** n)
    if isinstance(base, Pow):
        return power(base.base, base.exponent * n)
    return Pow(base, n)


def _parse_direction(direction: Direction) -> tuple[str, int]:
    kind, j = direction
    if kind not in ("x", "xi") or not 1 <= j <= N:
        raise ValueError(f"bad direction {direction!r}")
    return kind, j


_DERIV_CACHE: dict[tuple[Expr, Direction], Expr] = {}


def derivative(e: Expr, direction: Direction) -> Expr:
    """Exact first derivative of ``e`` along ``direction``."""
    key = (e, direction)
    hit = _DERIV_CACHE.get(key)
    if hit is not None:
        return hit
    kind, j = _parse_direction(direction)
    out = _derivative(e, kind, j, direction)
    if len(_DERIV_CACHE) > 200_000:
        _DERIV_CACHE.clear()
    _DERIV_CACHE[key] = out
    return out


def _derivative(e: Expr, kind: str, j: int, direction: Direction) -> Expr:
    if isinstance(e, (Const, Gen)):
        return ZERO_E
    if isinstance(e, Xi):
        return ONE_E if (kind == "xi" and e.index == j) else ZERO_E
    if isinstance(e, Prim):
        return Prim(e.name, e.indices, e.derivs + (j,)) if kind == "x" else ZERO_E
    if isinstance(e, NormSq):
        if kind == "x":
            return NormSq(e.derivs + (j,))
        return mul(const(2), XiUp(j, e.derivs))
    if isinstance(e, XiUp):
        if kind == "x":
            return XiUp(e.index, e.derivs + (j,))
        return Prim("g", (e.index, j), e.derivs)
    if isinstance(e, Sum):
        return add(*(derivative(t, direction) for t in e.terms))
    if isinstance(e, Prod):
        out = []
        fs = e.factors
        for k, f in enumerate(fs):
            df = derivative(f, direction)
            if _is_zero(df):
                continue
            out.append(mul(*fs[:k], df, *fs[k + 1:]))
        return add(*out)
    if isinstance(e, Pow):
        db = derivative(e.base, direction)
        if _is_zero(db):
            return ZERO_E
        # base is a commuting scalar, so the power rule holds
        return mul(const(e.exponent), power(e.base, e.exponent - 1), db)
    raise TypeError(f"cannot differentiate {type(e).__name__}")


def jet_derivative(e: Expr, direction: Direction, order: int = 1) -> Expr:
    if order < 0:
        raise ValueError("order must be non-negative")
    for _ in range(order):
        e = derivative(e, direction)
    return e
