"""Exact rational arithmetic helpers: generalized binomials, dense univariate
polynomials, small dense matrices and fraction-free elimination.

Rationals are plain :class:`fractions.Fraction` values throughout.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import lcm
from typing import Iterable, Sequence

from . import kernels

__all__ = [
    "binom_gen",
    "Poly",
    "Matrix",
    "determinant",
    "linear_solve",
    "poly_gcd_bezout",
    "InconsistentSystem",
    "UnderdeterminedSystem",
    "SparseEchelon",
]


def _q(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


@lru_cache(maxsize=None)
def binom_gen(a, n: int) -> Fraction:
    """Generalized binomial ``a(a-1)...(a-n+1)/n!`` for rational ``a``."""
    if n < 0:
        raise ValueError("binom_gen needs n >= 0")
    a = _q(a)
    num = Fraction(1)
    for i in range(n):
        num *= a - i
    fact = 1
    for i in range(2, n + 1):
        fact *= i
    return num / fact


# ---------------------------------------------------------------------------
# polynomials


class Poly:
    """Dense polynomial over Q, ``coeffs[i]`` is the coefficient of ``x**i``."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [_q(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(cs)

    @classmethod
    def x(cls) -> "Poly":
        return cls((0, 1))

    @classmethod
    def const(cls, c) -> "Poly":
        return cls((c,))

    @classmethod
    def from_roots(cls, roots: Iterable, lead=1) -> "Poly":
        p = cls.const(lead)
        for r in roots:
            p = p * cls((-_q(r), 1))
        return p

    @classmethod
    def interpolate(cls, points: Sequence[tuple]) -> "Poly":
        """Lagrange interpolation through ``(x, y)`` pairs with distinct x."""
        xs = [_q(x) for x, _ in points]
        if len(set(xs)) != len(xs):
            raise ValueError("interpolation nodes must be distinct")
        total = cls()
        for i, (xi, yi) in enumerate(points):
            basis = cls.const(1)
            for j, xj in enumerate(xs):
                if j != i:
                    basis = basis * cls((-xj, 1)) * (1 / (_q(xi) - xj))
            total = total + basis * _q(yi)
        return total

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lead(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def monic(self) -> "Poly":
        if self.is_zero():
            raise ZeroDivisionError("zero polynomial has no monic form")
        return self * (1 / self.lead)

    def __call__(self, x):
        x = _q(x)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __add__(self, other):
        other = _as_poly(other)
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (Fraction(0),) * (n - len(self.coeffs))
        b = other.coeffs + (Fraction(0),) * (n - len(other.coeffs))
        return Poly(x + y for x, y in zip(a, b))

    __radd__ = __add__

    def __neg__(self):
        return Poly(-c for c in self.coeffs)

    def __sub__(self, other):
        return self + (-_as_poly(other))

    def __rsub__(self, other):
        return _as_poly(other) - self

    def __mul__(self, other):
        if not isinstance(other, Poly):
            c = _q(other)
            return Poly(c * a for a in self.coeffs)
        if self.is_zero() or other.is_zero():
            return Poly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        out = Poly.const(1)
        for _ in range(e):
            out = out * self
        return out

    def __divmod__(self, other: "Poly"):
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = other.degree
        quo = [Fraction(0)] * max(len(rem) - dq, 0)
        inv = 1 / other.lead
        for i in range(len(rem) - 1, dq - 1, -1):
            c = rem[i] * inv
            if c:
                quo[i - dq] = c
                for j, b in enumerate(other.coeffs):
                    rem[i - dq + j] -= c * b
        return Poly(quo), Poly(rem[:dq])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Poly.const(other)
        return isinstance(other, Poly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"Poly({[str(c) for c in self.coeffs]})"

    def __str__(self):
        if self.is_zero():
            return "0"
        parts = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            if mono and c == 1:
                term = mono
            elif mono and c == -1:
                term = "-" + mono
            else:
                term = f"{c}*{mono}" if mono else str(c)
            parts.append(term)
        return " + ".join(parts).replace("+ -", "- ")


def _as_poly(p) -> Poly:
    return p if isinstance(p, Poly) else Poly.const(p)


def poly_gcd_bezout(f: Poly, g: Poly) -> tuple[Poly, Poly, Poly]:
    """Return ``(d, u, v)`` with ``d`` monic, ``d = gcd(f, g)`` and ``u*f + v*g == d``."""
    if f.is_zero() and g.is_zero():
        raise ValueError("gcd of two zero polynomials is undefined")
    r0, r1 = f, g
    s0, s1 = Poly.const(1), Poly()
    t0, t1 = Poly(), Poly.const(1)
    while not r1.is_zero():
        quo, rem = divmod(r0, r1)
        r0, r1 = r1, rem
        s0, s1 = s1, s0 - quo * s1
        t0, t1 = t1, t0 - quo * t1
    inv = 1 / r0.lead
    return r0 * inv, s0 * inv, t0 * inv


# ---------------------------------------------------------------------------
# matrices


@dataclass(frozen=True)
class Matrix:
    rows: int
    cols: int
    entries: tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.entries) != self.rows * self.cols:
            raise ValueError("entries length must equal rows*cols")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> "Matrix":
        rows = [list(r) for r in rows]
        ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise ValueError("ragged rows")
        return cls(len(rows), ncols, tuple(_q(x) for r in rows for x in r))

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls.from_rows([[int(i == j) for j in range(n)] for i in range(n)])

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple[Fraction, ...]:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def tolist(self) -> list[list[Fraction]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise ValueError("dimension mismatch")
        out = []
        for i in range(self.rows):
            ri = self.row(i)
            out.append([sum((ri[t] * other[t, j] for t in range(self.cols)), Fraction(0))
                        for j in range(other.cols)])
        return Matrix.from_rows(out)


class InconsistentSystem(ValueError):
    """The linear system has no solution."""


class UnderdeterminedSystem(ValueError):
    """The linear system has infinitely many solutions.

    ``particular`` holds one solution (free variables set to zero).
    """

    def __init__(self, msg, particular):
        super().__init__(msg)
        self.particular = particular


def _integer_rows(rows: list[list[Fraction]]) -> tuple[list[list[int]], int]:
    """Scale each row to integers; return the rows and the product of scale factors."""
    out, scale = [], 1
    for r in rows:
        m = lcm(*(x.denominator for x in r)) if r else 1
        out.append([int(x * m) for x in r])
        scale *= m
    return out, scale


def determinant(M: Matrix) -> Fraction:
    """Exact determinant via fraction-free (Bareiss) elimination."""
    if M.rows != M.cols:
        raise ValueError("determinant of a non-square matrix")
    if M.rows == 0:
        return Fraction(1)
    rows, scale = _integer_rows(M.tolist())
    return Fraction(kernels.bareiss_det(rows), scale)


def linear_solve(M: Matrix, b: Sequence) -> list[Fraction]:
    """Solve ``M x = b`` exactly.

    Raises :class:`InconsistentSystem` if no solution exists and
    :class:`UnderdeterminedSystem` (carrying a particular solution) if the
    solution is not unique.
    """
    if len(b) != M.rows:
        raise ValueError("dimension mismatch between matrix and right-hand side")
    n = M.cols
    aug = [list(M.row(i)) + [_q(b[i])] for i in range(M.rows)]
    aug, _ = _integer_rows(aug)
    # fraction-free forward elimination to row echelon form
    pivots = []
    r = 0
    prev = 1
    for c in range(n):
        p = next((i for i in range(r, len(aug)) if aug[i][c] != 0), None)
        if p is None:
            continue
        aug[r], aug[p] = aug[p], aug[r]
        piv = aug[r][c]
        for i in range(r + 1, len(aug)):
            f = aug[i][c]
            aug[i] = [(piv * aug[i][j] - f * aug[r][j]) // prev if j >= c else 0
                      for j in range(n + 1)]
        prev = piv
        pivots.append(c)
        r += 1
    if any(row[n] != 0 and all(v == 0 for v in row[:n]) for row in aug[r:]):
        raise InconsistentSystem("linear system is inconsistent")
    x = [Fraction(0)] * n
    for i in range(r - 1, -1, -1):
        c = pivots[i]
        acc = Fraction(aug[i][n]) - sum((aug[i][j] * x[j] for j in range(c + 1, n)), Fraction(0))
        x[c] = acc / aug[i][c]
    if r < n:
        raise UnderdeterminedSystem("linear system has a nontrivial kernel", x)
    return x


class SparseEchelon:
    """Incremental sparse row reduction over Q.

    Vectors are dicts ``key -> Fraction``. Each added vector is reduced
    against the current pivots; the basis remembers how every stored row is
    expressed through the original inputs (by insertion label), so that a
    target found in the span comes with an explicit combination.
    """

    def __init__(self, order=None):
        self._order = order or (lambda key: key)
        self.rows: dict = {}        # pivot key -> (row, combination)

    def _pivot(self, row):
        return max(row, key=self._order)

    def reduce(self, vec: dict, combo: dict | None = None):
        row = dict(vec)
        combo = dict(combo or {})
        while row:
            p = self._pivot(row)
            if p not in self.rows:
                break
            prow, pcombo = self.rows[p]
            f = row[p]
            for key, val in prow.items():
                nv = row.get(key, 0) - f * val
                if nv:
                    row[key] = nv
                else:
                    row.pop(key, None)
            for key, val in pcombo.items():
                nv = combo.get(key, 0) - f * val
                if nv:
                    combo[key] = nv
                else:
                    combo.pop(key, None)
        return row, combo

    def add(self, vec: dict, label) -> bool:
        """Insert ``vec`` (tagged ``label``); return True if it enlarged the span."""
        row, combo = self.reduce(vec, {label: Fraction(1)})
        if not row:
            return False
        p = self._pivot(row)
        inv = 1 / row[p]
        row = {key: val * inv for key, val in row.items()}
        combo = {key: val * inv for key, val in combo.items()}
        self.rows[p] = (row, combo)
        return True

    def express(self, target: dict):
        """Return a combination of labels reproducing ``target``, or None."""
        row, combo = self.reduce(target, {})
        if row:
            return None
        return {key: -val for key, val in combo.items() if val}

    def __len__(self):
        return len(self.rows)
