"""A small expression language for states of V_{L°}.

Grammar (alpha basis only)::

    expr    := term (('+' | '-') term)*
    term    := unary (('*' | '/') unary)*
    unary   := '-' unary | power
    power   := atom ('^' INT)?
    atom    := NUMBER | NAME | NAME '(' args ')' | '(' expr ')'

Names: ``one omega J E F``; calls ``Em(m) Fm(m) e(r) star(u,v) circ(u,v)``;
operators ``a(n)`` (alpha(n)) and ``L(n)``. ``op * state`` applies an operator,
``op * op`` composes, ``scalar * x`` scales, and ``state ^ n`` is the n-th
star power. Rationals are written ``n/d``.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .lattice import E_m, F_m, LatticeState, build_generators, exp_state, from_fock, vertex_mode
from .fock import monomial
from .zhu import circ, star

__all__ = ["ParseError", "parse", "parse_state", "to_string", "Operator"]


class ParseError(ValueError):
    pass


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(.))")


def _tokens(text: str):
    out = []
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            break
        num, name, sym = m.groups()
        if num is not None:
            out.append(("num", int(num)))
        elif name is not None:
            out.append(("name", name))
        elif sym in "+-*/^(),":
            out.append(("sym", sym))
        else:
            raise ParseError(f"unexpected character {sym!r}")
        pos = m.end()
    out.append(("end", None))
    return out


@dataclass(frozen=True)
class Operator:
    """A linear combination of words in alpha(n) and L(n); words act right to left."""

    terms: tuple  # ((word, coeff), ...) with word a tuple of ('a'|'L', n)

    def apply(self, v: LatticeState) -> LatticeState:
        k = v.k
        alpha = from_fock(monomial((1,), k))
        omega = build_generators(k).omega
        total = LatticeState({}, k)
        for word, c in self.terms:
            w = v
            for kind, n in reversed(word):
                w = vertex_mode(alpha, n, w) if kind == "a" else vertex_mode(omega, n + 1, w)
            total = total + w * c
        return total

    def compose(self, other: "Operator") -> "Operator":
        out: dict = {}
        for w1, c1 in self.terms:
            for w2, c2 in other.terms:
                out[w1 + w2] = out.get(w1 + w2, 0) + c1 * c2
        return Operator(tuple((w, c) for w, c in out.items() if c))

    def scale(self, c) -> "Operator":
        return Operator(tuple((w, x * c) for w, x in self.terms if x * c))

    def add(self, other: "Operator") -> "Operator":
        out = dict(self.terms)
        for w, c in other.terms:
            out[w] = out.get(w, 0) + c
        return Operator(tuple((w, c) for w, c in out.items() if c))


class _Parser:
    def __init__(self, text: str, k: int):
        self.toks = _tokens(text)
        self.i = 0
        self.k = k
        self.g = build_generators(k)

    def peek(self):
        return self.toks[self.i]

    def take(self, kind=None, value=None):
        tok = self.toks[self.i]
        if kind and tok[0] != kind or value is not None and tok[1] != value:
            raise ParseError(f"expected {value or kind}, found {tok[1]!r}")
        self.i += 1
        return tok

    def parse(self):
        v = self.expr()
        if self.peek()[0] != "end":
            raise ParseError(f"trailing input at {self.peek()[1]!r}")
        return v

    def expr(self):
        v = self.term()
        while self.peek() in (("sym", "+"), ("sym", "-")):
            op = self.take()[1]
            w = self.term()
            v = _add(v, w if op == "+" else _neg(w))
        return v

    def term(self):
        v = self.unary()
        while self.peek() in (("sym", "*"), ("sym", "/")):
            op = self.take()[1]
            w = self.unary()
            if op == "*":
                v = _mul(v, w)
            else:
                if not isinstance(w, Fraction):
                    raise ParseError("can only divide by a scalar")
                if w == 0:
                    raise ParseError("division by zero")
                v = _mul(v, 1 / w)
        return v

    def unary(self):
        if self.peek() == ("sym", "-"):
            self.take()
            return _neg(self.unary())
        return self.power()

    def power(self):
        v = self.atom()
        if self.peek() == ("sym", "^"):
            self.take()
            n = self.take("num")[1]
            if isinstance(v, Fraction):
                return v ** n
            if isinstance(v, Operator):
                out = Operator((((), Fraction(1)),))
                for _ in range(n):
                    out = out.compose(v)
                return out
            if n == 0:
                return self.g.vacuum
            out = v
            for _ in range(n - 1):
                out = star(v, out)
            return out
        return v

    def _int_arg(self):
        neg = False
        if self.peek() == ("sym", "-"):
            self.take()
            neg = True
        n = self.take("num")[1]
        return -n if neg else n

    def _rational_arg(self):
        n = Fraction(self._int_arg())
        if self.peek() == ("sym", "/"):
            self.take()
            n = n / self.take("num")[1]
        return n

    def atom(self):
        kind, val = self.peek()
        if kind == "num":
            self.take()
            return Fraction(val)
        if kind == "sym" and val == "(":
            self.take()
            v = self.expr()
            self.take("sym", ")")
            return v
        if kind != "name":
            raise ParseError(f"unexpected {val!r}")
        self.take()
        simple = {"one": self.g.vacuum, "omega": self.g.omega, "J": self.g.J,
                  "E": self.g.E, "F": self.g.F}
        if val in simple:
            return simple[val]
        if val in ("beta", "b"):
            raise ParseError("beta-basis input is not supported: write states in the alpha basis "
                             "(beta = alpha / sqrt(2k) would introduce irrational scalars)")
        self.take("sym", "(")
        if val in ("Em", "Fm"):
            m = self._int_arg()
            res = E_m(m, self.k) if val == "Em" else F_m(m, self.k)
        elif val == "e":
            r = self._rational_arg()
            try:
                res = exp_state(r, self.k)
            except ValueError as exc:
                raise ParseError(str(exc)) from None
        elif val in ("a", "L"):
            n = self._int_arg()
            res = Operator(((((val, n),), Fraction(1)),))
        elif val in ("star", "circ"):
            u = self.expr()
            self.take("sym", ",")
            v = self.expr()
            if not (isinstance(u, LatticeState) and isinstance(v, LatticeState)):
                raise ParseError(f"{val} takes two states")
            res = star(u, v) if val == "star" else circ(u, v)
        else:
            raise ParseError(f"unknown name {val!r}")
        self.take("sym", ")")
        return res


def _neg(v):
    if isinstance(v, Operator):
        return v.scale(-1)
    return -v


def _add(v, w):
    if isinstance(v, Operator) and isinstance(w, Operator):
        return v.add(w)
    if isinstance(v, LatticeState) and isinstance(w, LatticeState):
        return v + w
    if isinstance(v, Fraction) and isinstance(w, Fraction):
        return v + w
    # a scalar next to a state stands for a multiple of the vacuum
    if isinstance(v, Fraction) and isinstance(w, LatticeState):
        return build_generators(w.k).vacuum * v + w
    if isinstance(w, Fraction) and isinstance(v, LatticeState):
        return v + build_generators(v.k).vacuum * w
    raise ParseError("cannot add values of different kinds (scalars, states, operators)")


def _mul(v, w):
    if isinstance(v, Fraction):
        if isinstance(w, Operator):
            return w.scale(v)
        return w * v if isinstance(w, LatticeState) else v * w
    if isinstance(w, Fraction):
        return v.scale(w) if isinstance(v, Operator) else v * w
    if isinstance(v, Operator):
        return v.compose(w) if isinstance(w, Operator) else v.apply(w)
    raise ParseError("a product of two states needs star(u, v)")


def parse(text: str, k: int):
    """Evaluate an expression to a Fraction, LatticeState or Operator."""
    return _Parser(text, k).parse()


def parse_state(text: str, k: int) -> LatticeState:
    """Like :func:`parse` but always returns a state (scalars become multiples of ``one``)."""
    v = parse(text, k)
    if isinstance(v, Fraction):
        return build_generators(k).vacuum * v
    if isinstance(v, Operator):
        raise ParseError("expression is an operator; apply it to a state, e.g. L(-2)*one")
    return v


def _fmt_rational(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def to_string(v) -> str:
    """Canonical text for a scalar or state; ``parse_state(to_string(v), k) == v`` for states."""
    if isinstance(v, Fraction):
        return _fmt_rational(v)
    if not isinstance(v, LatticeState):
        raise TypeError("to_string handles scalars and lattice states")
    if not v:
        return "0"

    def order(item):
        (mono, r), _ = item
        return (sum(mono) + v.k * r * r, r, mono)

    pieces = []
    for (mono, r), c in sorted(v, key=order):
        factors = [f"a({-p})" for p in mono]
        r = Fraction(r)
        factors.append("one" if r == 0 else f"e({_fmt_rational(r)})")
        body = "*".join(factors)
        mag = abs(c)
        text = body if mag == 1 else f"{_fmt_rational(mag)}*{body}"
        pieces.append(("-" if c < 0 else "+", text))
    first_sign, first = pieces[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, text in pieces[1:]:
        out += f" {sign} {text}"
    return out
