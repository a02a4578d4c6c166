"""Evaluation of expression trees at (x0, |xi'| = 1)."""

from __future__ import annotations

from ..ratfunc import PoleLimitedRational
from .boundary import NDIM, BoundaryValue
from .expr import Const, Expr, Gen, NormSq, Pow, Prim, Prod, Sum, Xi, XiUp
from .tables import JetTables, TableConfig

__all__ = ["Evaluator", "UnresolvablePrimitive", "evaluate_at_boundary"]


class UnresolvablePrimitive(ValueError):
    pass


class Evaluator:
    """Memoizing evaluator bound to one set of jet tables.

    Negative powers are only defined for ``|xi|^2``, whose value on the unit
    cosphere at x0 is ``1 + xi_n^2``.  Positive powers of ``|xi'|^2`` that
    arise in numerators are kept as explicit monomials.
    """

    def __init__(self, tables: JetTables | None = None):
        self.tables = tables or JetTables()
        self._memo: dict[Expr, BoundaryValue] = {}
        self._xi = {a: (BoundaryValue.xi_prime(a) if a < NDIM else BoundaryValue.xi_n()) for a in range(1, NDIM + 1)}

    @classmethod
    def with_reading(cls, reading: str) -> "Evaluator":
        return cls(JetTables(TableConfig(ambiguous_reading=reading)))

    def __call__(self, e: Expr) -> BoundaryValue:
        hit = self._memo.get(e)
        if hit is not None:
            return hit
        out = self._eval(e)
        self._memo[e] = out
        return out

    def _eval(self, e: Expr) -> BoundaryValue:
        if isinstance(e, Const):
            return BoundaryValue.constant(e.value)
        if isinstance(e, Gen):
            return BoundaryValue.generator(e.kind, e.index)
        if isinstance(e, Xi):
            return self._xi[e.index]
        if isinstance(e, Prim):
            return self.tables.lookup(e.name, e.indices, e.derivs)
        if isinstance(e, NormSq):
            out = BoundaryValue.zero()
            for a in range(1, NDIM + 1):
                for b in range(1, NDIM + 1):
                    g = self.tables.lookup("g", (a, b), e.derivs)
                    if not g.is_zero():
                        out = out + g * self._xi[a] * self._xi[b]
            return out
        if isinstance(e, XiUp):
            out = BoundaryValue.zero()
            for b in range(1, NDIM + 1):
                g = self.tables.lookup("g", (e.index, b), e.derivs)
                if not g.is_zero():
                    out = out + g * self._xi[b]
            return out
        if isinstance(e, Sum):
            out = BoundaryValue.zero()
            for t in e.terms:
                out = out + self(t)
            return out
        if isinstance(e, Prod):
            out = None
            for f in e.factors:
                v = self(f)
                if v.is_zero():
                    return BoundaryValue.zero()
                out = v if out is None else out * v
            return out
        if isinstance(e, Pow):
            if e.exponent > 0:
                return self(e.base) ** e.exponent
            if isinstance(e.base, NormSq) and not e.base.derivs:
                return BoundaryValue.rational(PoleLimitedRational.inv_one_plus_xi2(-e.exponent))
            raise UnresolvablePrimitive(f"negative power of {e.base!r} is not representable")
        raise UnresolvablePrimitive(f"cannot evaluate {type(e).__name__}")


def evaluate_at_boundary(e: Expr, config: TableConfig | None = None) -> BoundaryValue:
    return Evaluator(JetTables(config))(e)
