"""Riemann-tensor factors: canonical forms and contraction to the scalar SB.

Conventions: ``R_{abcd}`` is antisymmetric in (a, b) and in (c, d) and
symmetric under the pair swap (ab) <-> (cd).  The boundary scalar curvature is

    SB = sum_{t, l} R_{t l t l}.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Hashable, Iterable, Mapping, Sequence

from .scalars import GaussianRational, Number, ParameterPolynomial, as_gaussian
from .sphere import SPHERE_DIM, PairingTensor

__all__ = [
    "CurvatureTerm",
    "CurvatureContractionError",
    "bianchi_reduce",
    "canonical_component",
    "canonicalize_riemann",
    "components_to_sb",
    "contract_with_moment",
    "riemann_variants",
]


class CurvatureContractionError(ValueError):
    pass


@dataclass(frozen=True)
class CurvatureTerm:
    """``sign * R_{slots}``; ``sign == 0`` encodes the zero term."""

    slots: tuple[Hashable, Hashable, Hashable, Hashable]
    sign: int = 1

    def is_zero(self) -> bool:
        return self.sign == 0


def riemann_variants(slots: Sequence[Hashable]) -> list[tuple[int, tuple]]:
    """The eight index orderings related by the standard symmetries, with signs."""
    a, b, c, d = slots
    out = []
    for s1, (x, y) in ((1, (a, b)), (-1, (b, a))):
        for s2, (z, w) in ((1, (c, d)), (-1, (d, c))):
            out.append((s1 * s2, (x, y, z, w)))
            out.append((s1 * s2, (z, w, x, y)))
    return out


def _key(slots: tuple) -> tuple:
    return tuple((type(s).__name__, s) for s in slots)


def canonicalize_riemann(t: CurvatureTerm) -> CurvatureTerm:
    if t.sign == 0:
        return t
    a, b, c, d = t.slots
    if a == b or c == d:
        return CurvatureTerm(t.slots, 0)
    variants = riemann_variants(t.slots)
    best_sign, best = min(variants, key=lambda v: _key(v[1]))
    # a representative equal to its own negative would mean the term is zero;
    # impossible once repeated pair indices are excluded, but checked anyway
    if any(s == -best_sign and v == best for s, v in variants):
        return CurvatureTerm(best, 0)
    return CurvatureTerm(best, t.sign * best_sign)


def canonical_component(a: int, b: int, c: int, d: int) -> tuple[int, tuple[int, int, int, int]]:
    """Canonical ``(sign, indices)`` for a concrete component; sign 0 when it vanishes."""
    t = canonicalize_riemann(CurvatureTerm((a, b, c, d)))
    return t.sign, t.slots


def bianchi_reduce(combo: Mapping[tuple, Number]) -> dict[tuple, GaussianRational]:
    """Rewrite canonical components ``R_{adbc}`` (a<b<c<d) via the first Bianchi identity.

    With all four indices distinct and ``a`` smallest, the canonical
    components are ``R_{abcd}``, ``R_{acbd}`` and ``R_{adbc}``, subject to
    ``R_{adbc} = R_{acbd} - R_{abcd}``.
    """
    out: dict[tuple, GaussianRational] = {}

    def add(k: tuple, v: GaussianRational) -> None:
        out[k] = out.get(k, GaussianRational(0)) + v

    for comp, coeff in combo.items():
        coeff = as_gaussian(coeff)
        a, x, y, z = comp
        if len({a, x, y, z}) == 4 and a < y < z < x:
            # comp = R_{a d b c} with d = x, b = y, c = z
            b, c, d = y, z, x
            add((a, c, b, d), coeff)
            add((a, b, c, d), -coeff)
        else:
            add(comp, coeff)
    return {k: v for k, v in out.items() if not v.is_zero()}


def components_to_sb(combo: Mapping[tuple, Number], dim: int = SPHERE_DIM) -> GaussianRational:
    """Coefficient ``c`` with ``sum combo[k] R_k == c * SB`` for every curvature tensor.

    Raises :class:`CurvatureContractionError` when the combination is not a
    multiple of SB after canonicalization and Bianchi reduction.
    """
    canon: dict[tuple, GaussianRational] = {}
    for comp, coeff in combo.items():
        sign, slots = canonical_component(*comp)
        if sign:
            canon[slots] = canon.get(slots, GaussianRational(0)) + as_gaussian(coeff) * sign
    reduced = bianchi_reduce(canon)
    diag = [(t, l, t, l) for t in range(1, dim + 1) for l in range(t + 1, dim + 1)]
    value = reduced.get(diag[0], GaussianRational(0))
    for k in diag:
        if reduced.get(k, GaussianRational(0)) != value:
            raise CurvatureContractionError(f"not isotropic: component {k} differs")
    extra = [k for k in reduced if k not in set(diag)]
    if extra:
        raise CurvatureContractionError(f"non-scalar components survive: {extra[:4]}")
    # sum_{t<l} R_tltl = SB / 2
    return value / 2


def _merge_classes(pairs: Iterable[tuple[Hashable, Hashable]]) -> dict[Hashable, Hashable]:
    parent: dict[Hashable, Hashable] = {}

    def find(x: Hashable) -> Hashable:
        parent.setdefault(x, x)
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b in pairs:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb
    return {x: find(x) for x in parent}


def _full_contraction(slots: Sequence[Hashable], deltas: Sequence[tuple[Hashable, Hashable]]) -> int:
    """Value of ``R_{slots}`` fully contracted by ``deltas``, as a multiple of SB."""
    labels = list(slots) + [x for pair in deltas for x in pair]
    counts: dict[Hashable, int] = {}
    for x in labels:
        counts[x] = counts.get(x, 0) + 1
    if any(v != 2 for v in counts.values()):
        raise CurvatureContractionError(f"unbalanced indices in {slots} with {deltas}")
    # slot-to-slot identifications: slots sharing a label, or linked by a delta
    classes = _merge_classes(
        [(("slot", i), ("slot", j)) for i in range(4) for j in range(i + 1, 4) if slots[i] == slots[j]]
        + [(("lab", a), ("lab", b)) for a, b in deltas]
        + [(("slot", i), ("lab", s)) for i, s in enumerate(slots)]
    )
    root = [classes[("slot", i)] for i in range(4)]
    if root[0] == root[1] or root[2] == root[3]:
        return 0
    if root[0] == root[2] and root[1] == root[3]:
        return 1
    if root[0] == root[3] and root[1] == root[2]:
        return -1
    raise CurvatureContractionError("contraction leaves free indices")


def contract_with_moment(
    terms: CurvatureTerm | Sequence[tuple[Number, CurvatureTerm]],
    pattern: PairingTensor | None = None,
) -> ParameterPolynomial:
    """Contract curvature factors with a delta pattern and return a multiple of SB.

    ``terms`` may be a single term or a list of ``(coefficient, term)``.  With
    ``pattern`` omitted, every index of each term must already occur twice.
    """
    if isinstance(terms, CurvatureTerm):
        terms = [(1, terms)]
    total = GaussianRational(0)
    for coeff, term in terms:
        if term.is_zero():
            continue
        if pattern is None:
            value = Fraction(_full_contraction(term.slots, ()))
        else:
            acc = 0
            for matching in pattern.matchings:
                acc += _full_contraction(term.slots, matching)
            value = pattern.weight * acc
        total = total + as_gaussian(coeff) * term.sign * value
    return ParameterPolynomial.var("SB").scale(total)
