"""Sparse exact vectors: a dict ``basis key -> Fraction`` with no zero entries."""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable


class SparseVector:
    __slots__ = ("terms", "k")

    def __init__(self, terms: Iterable | dict = (), k: int = 1):
        if isinstance(terms, dict):
            # keys are unique already: only drop zeros and coerce scalars
            self.terms = {key: (c if type(c) is Fraction else Fraction(c))
                          for key, c in terms.items() if c}
            self.k = k
            return
        acc: dict = {}
        for key, c in terms:
            if not c:
                continue
            v = acc.get(key, 0) + c
            if v:
                acc[key] = v if isinstance(v, Fraction) else Fraction(v)
            else:
                del acc[key]
        self.terms = acc
        self.k = k

    def _new(self, terms):
        out = object.__new__(type(self))
        out.terms = terms
        out.k = self.k
        self._copy_extra(out)
        return out

    def _copy_extra(self, out):
        pass

    def _check(self, other):
        if type(other) is not type(self):
            raise TypeError(f"cannot combine {type(self).__name__} with {type(other).__name__}")
        if other.k != self.k:
            raise ValueError("vectors built for different k")

    def __add__(self, other):
        if isinstance(other, int) and other == 0:
            return self
        self._check(other)
        out = dict(self.terms)
        for key, c in other.terms.items():
            v = out.get(key, 0) + c
            if v:
                out[key] = v
            else:
                out.pop(key, None)
        return self._new(out)

    __radd__ = __add__

    def __neg__(self):
        return self._new({key: -c for key, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, scalar):
        if isinstance(scalar, SparseVector):
            return NotImplemented
        scalar = Fraction(scalar)
        if not scalar:
            return self._new({})
        return self._new({key: c * scalar for key, c in self.terms.items()})

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, int) and other == 0:
            return not self.terms
        return type(other) is type(self) and self.k == other.k and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def __iter__(self):
        return iter(self.terms.items())

    def coefficient(self, key) -> Fraction:
        return self.terms.get(key, Fraction(0))

    def is_zero(self) -> bool:
        return not self.terms

    # grading helpers; subclasses define key_weight
    def key_weight(self, key) -> Fraction:
        raise NotImplementedError

    def weights(self) -> set:
        return {self.key_weight(key) for key in self.terms}

    def is_homogeneous(self) -> bool:
        return len(self.weights()) <= 1

    def weight(self) -> Fraction:
        ws = self.weights()
        if len(ws) != 1:
            raise ValueError("vector is not homogeneous")
        return next(iter(ws))

    def homogeneous_components(self) -> dict:
        comps: dict = {}
        for key, c in self.terms.items():
            comps.setdefault(self.key_weight(key), {})[key] = c
        return {w: self._new(t) for w, t in sorted(comps.items())}

    def __repr__(self):
        return f"{type(self).__name__}({self.terms!r}, k={self.k})"
