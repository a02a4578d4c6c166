"""A small text grammar for evaluated boundary symbols, used by test fixtures.

::

    expr    := term (('+' | '-') term)*
    term    := unary (('*' | '/' | <juxtaposition>) unary)*
    unary   := '-' unary | power
    power   := atom ('^' INT)?
    atom    := NUMBER | 'i' | 'h1' | 'h2' | 'sm' | 'sb' | 'tv' | 'xin'
             | 'xi' '(' idx ')' | 'c' '(' idx ')' | 'cb' '(' idx ')'
             | 'R' '(' idx ',' idx ',' idx ',' idx ')' | '(' expr ')'
    idx     := INT | LETTER

``n`` denotes the normal direction 7.  Any other letter is a summation index
running over 1..6; it is summed independently inside each top-level term of
the outermost sum.  Division is allowed only by functions of ``xin`` whose
numerator is a product of the factors ``xin - i`` and ``xin + i``.

Example: ``"i * h1 * xi(k) * c(k) c(n) / (1+xin^2)^2"``.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from fractions import Fraction

from ..ratfunc import PoleLimitedRational, poly_divmod
from ..scalars import GaussianRational
from .boundary import NDIM, BoundaryValue

__all__ = ["ParseError", "parse_boundary_value"]

_TOKEN = re.compile(r"\s*(?:(\d+(?:/\d+)?)|([A-Za-z][A-Za-z0-9]*)|(.))")
_NAMES = {"i", "h1", "h2", "sm", "sb", "tv", "xin", "xi", "c", "cb", "R"}
_PARAMS = {"h1": "H1", "h2": "H2", "sm": "SM", "sb": "SB", "tv": "TV"}


class ParseError(ValueError):
    def __init__(self, text: str, pos: int, expected: str):
        self.pos = pos
        self.expected = expected
        super().__init__(f"at position {pos}: expected {expected}, found {text[pos:pos + 8]!r}" if pos < len(text)
                         else f"at position {pos}: expected {expected}, found end of input")


@dataclass(frozen=True)
class _Tok:
    kind: str  # num, name, op, end
    text: str
    pos: int


def _tokenize(text: str) -> list[_Tok]:
    out = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None or m.end() == pos:
            break
        num, name, op = m.groups()
        start = m.start(m.lastindex)
        if num:
            out.append(_Tok("num", num, start))
        elif name:
            out.append(_Tok("name", name, start))
        elif op and not op.isspace():
            out.append(_Tok("op", op, start))
        pos = m.end()
    out.append(_Tok("end", "", len(text)))
    return out


# AST nodes are plain tuples: ("num", Fraction) ("name", str) ("idx", kind, idx)
# ("R", idxs) ("add", [(sign, node)]) ("mul", [(op, node)]) ("pow", node, int) ("neg", node)


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.toks = _tokenize(text)
        self.i = 0

    @property
    def tok(self) -> _Tok:
        return self.toks[self.i]

    def fail(self, expected: str):
        raise ParseError(self.text, self.tok.pos, expected)

    def eat(self, kind: str, text: str | None = None) -> _Tok:
        t = self.tok
        if t.kind != kind or (text is not None and t.text != text):
            self.fail(repr(text) if text else kind)
        self.i += 1
        return t

    def parse(self):
        node = self.expr()
        if self.tok.kind != "end":
            self.fail("operator or end of input")
        return node

    def expr(self):
        terms = [(1, self.term())]
        while self.tok.kind == "op" and self.tok.text in "+-":
            sign = 1 if self.eat("op").text == "+" else -1
            terms.append((sign, self.term()))
        return ("add", terms)

    def _starts_atom(self) -> bool:
        t = self.tok
        return t.kind in ("num", "name") or (t.kind == "op" and t.text == "(")

    def term(self):
        factors = [("*", self.unary())]
        while True:
            t = self.tok
            if t.kind == "op" and t.text in "*/":
                self.i += 1
                factors.append((t.text, self.unary()))
            elif self._starts_atom():
                factors.append(("*", self.unary()))
            else:
                return ("mul", factors)

    def unary(self):
        if self.tok.kind == "op" and self.tok.text == "-":
            self.i += 1
            return ("neg", self.unary())
        return self.power()

    def power(self):
        base = self.atom()
        if self.tok.kind == "op" and self.tok.text == "^":
            self.i += 1
            t = self.tok
            if t.kind != "num" or "/" in t.text:
                self.fail("integer exponent")
            self.i += 1
            return ("pow", base, int(t.text))
        return base

    def index(self):
        t = self.tok
        if t.kind == "num" and "/" not in t.text:
            self.i += 1
            v = int(t.text)
            if not 1 <= v <= NDIM:
                raise ParseError(self.text, t.pos, f"index in 1..{NDIM}")
            return v
        if t.kind == "name" and len(t.text) == 1:
            self.i += 1
            return NDIM if t.text == "n" else t.text
        self.fail("index")

    def atom(self):
        t = self.tok
        if t.kind == "num":
            self.i += 1
            return ("num", Fraction(t.text))
        if t.kind == "op" and t.text == "(":
            self.i += 1
            node = self.expr()
            self.eat("op", ")")
            return node
        if t.kind == "name":
            if t.text not in _NAMES:
                self.fail("symbol name")
            self.i += 1
            if t.text in ("xi", "c", "cb"):
                self.eat("op", "(")
                idx = self.index()
                self.eat("op", ")")
                return ("idx", t.text, idx)
            if t.text == "R":
                self.eat("op", "(")
                idxs = [self.index()]
                for _ in range(3):
                    self.eat("op", ",")
                    idxs.append(self.index())
                self.eat("op", ")")
                return ("R", tuple(idxs))
            return ("name", t.text)
        self.fail("number, name or '('")


def _free_letters(node, acc: set) -> set:
    tag = node[0]
    if tag == "idx" and isinstance(node[2], str):
        acc.add(node[2])
    elif tag == "R":
        acc.update(x for x in node[1] if isinstance(x, str))
    elif tag in ("add", "mul"):
        for _, sub in node[1]:
            _free_letters(sub, acc)
    elif tag in ("pow", "neg"):
        _free_letters(node[1], acc)
    return acc


_XI_MINUS_I = PoleLimitedRational([GaussianRational(0, -1), 1])
_XI_PLUS_I = PoleLimitedRational([GaussianRational(0, 1), 1])


def _invert(f: PoleLimitedRational) -> PoleLimitedRational:
    num = list(f.num)
    if not num:
        raise ZeroDivisionError("division by zero")
    a = b = 0
    for root, counter in ((GaussianRational(0, 1), "a"), (GaussianRational(0, -1), "b")):
        while len(num) > 1:
            quo, rem = poly_divmod(num, [-root, GaussianRational(1)])
            if any(not c.is_zero() for c in rem):
                break
            num = quo
            if counter == "a":
                a += 1
            else:
                b += 1
    if len(num) != 1:
        raise ValueError("divisor has zeros away from xin = +-i")
    out = PoleLimitedRational.constant(num[0].inverse())
    out = out * PoleLimitedRational([1], a, b)
    for _ in range(f.p):
        out = out * _XI_MINUS_I
    for _ in range(f.q):
        out = out * _XI_PLUS_I
    return out


def _eval(node, env: dict) -> BoundaryValue:
    tag = node[0]
    if tag == "num":
        return BoundaryValue.constant(node[1])
    if tag == "name":
        name = node[1]
        if name == "i":
            return BoundaryValue.constant(GaussianRational(0, 1))
        if name == "xin":
            return BoundaryValue.xi_n()
        return BoundaryValue.param(_PARAMS[name])
    if tag == "idx":
        kind, idx = node[1], node[2]
        idx = env.get(idx, idx)
        if kind == "xi":
            return BoundaryValue.xi_n() if idx == NDIM else BoundaryValue.xi_prime(idx)
        return BoundaryValue.generator("c" if kind == "c" else "cbar", idx)
    if tag == "R":
        a, b, c, d = (env.get(x, x) for x in node[1])
        return BoundaryValue.curvature("R", a, b, c, d)
    if tag == "neg":
        return -_eval(node[1], env)
    if tag == "pow":
        return _eval(node[1], env) ** node[2]
    if tag == "add":
        out = BoundaryValue.zero()
        for sign, sub in node[1]:
            v = _eval(sub, env)
            out = out + (v if sign > 0 else -v)
        return out
    if tag == "mul":
        out = BoundaryValue.constant(1)
        for op, sub in node[1]:
            v = _eval(sub, env)
            if op == "*":
                out = out * v
            else:
                out = out.scale(_invert(v.as_rational()))
        return out
    raise AssertionError(tag)


def parse_boundary_value(text: str, dim: int = NDIM - 1) -> BoundaryValue:
    """Parse ``text`` into a :class:`BoundaryValue`, expanding summation letters."""
    tree = _Parser(text).parse()
    total = BoundaryValue.zero()
    for sign, term in tree[1]:
        letters = sorted(_free_letters(term, set()))
        for values in itertools.product(range(1, dim + 1), repeat=len(letters)):
            v = _eval(term, dict(zip(letters, values)))
            total = total + (v if sign > 0 else -v)
    return total
