"""Zhu's algebra products for V_L^+ and explicit O(V) bookkeeping.

``star(u, v) = sum_i binom(wt u, i) u_{i-1} v`` and
``ov_residue(u, v, n) = sum_i binom(wt u, i) u_{i-n-2} v`` (``circ`` is n = 0);
every ``ov_residue`` lies in O(V). Classes ``[omega]^s * [v]`` are represented
by the nested product ``omega * (omega * (... * v))``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import comb

from .exact import Poly, SparseEchelon
from .fock import partitions
from .lattice import (
    LatticeState,
    ModuleDescriptor,
    accumulate_mode,
    build_generators,
    eigenvalue,
    from_fock,
    untwisted_top,
    vertex_mode,
    zero_mode,
)
from .twisted import twisted_top, twisted_zero_mode

__all__ = [
    "star",
    "circ",
    "ov_residue",
    "omega_star_power",
    "poly_star",
    "character",
    "OVEntry",
    "OVCertificate",
    "LReduction",
    "l_reduce",
    "vlplus_basis",
    "certify_in_OV",
]


def _residue(u: LatticeState, v: LatticeState, shift: int) -> LatticeState:
    out: dict = {}
    for wt, comp in u.homogeneous_components().items():
        if wt.denominator != 1 or wt < 0:
            raise ValueError("products need u of nonnegative integral weight")
        wt = int(wt)
        for i in range(wt + 1):
            accumulate_mode(out, comp, i - shift, v, comb(wt, i))
    return LatticeState(out, v.k)


def star(u: LatticeState, v: LatticeState) -> LatticeState:
    return _residue(u, v, 1)


def circ(u: LatticeState, v: LatticeState) -> LatticeState:
    return _residue(u, v, 2)


def ov_residue(u: LatticeState, v: LatticeState, n: int) -> LatticeState:
    """``Res_z (1+z)^{wt u} z^{-2-n} Y(u, z) v``, an element of O(V)."""
    if n < 0:
        raise ValueError("ov_residue needs n >= 0")
    return _residue(u, v, n + 2)


def omega_star_power(s: int, v: LatticeState) -> LatticeState:
    w = from_fock_omega(v.k)
    for _ in range(s):
        v = star(w, v)
    return v


@lru_cache(maxsize=None)
def from_fock_omega(k: int) -> LatticeState:
    return build_generators(k).omega


def poly_star(P: Poly, v: LatticeState) -> LatticeState:
    """``P([omega]) * [v]`` with nested left products."""
    total = LatticeState({}, v.k)
    cur = v
    w = from_fock_omega(v.k)
    for i, c in enumerate(P.coeffs):
        if i:
            cur = star(w, cur)
        if c:
            total = total + cur * c
    return total


# ---------------------------------------------------------------------------
# characters


def _top_and_action(module: ModuleDescriptor | str, k: int):
    mid = module.id if isinstance(module, ModuleDescriptor) else module
    if mid.startswith("T"):
        i, parity = int(mid[1]), (1 if mid[2] == "+" else -1)
        return twisted_top(k, i, parity), twisted_zero_mode
    return untwisted_top(k, mid), zero_mode


def character(v: LatticeState, module: ModuleDescriptor | str) -> Fraction:
    """Scalar by which ``o(v)`` acts on the one-dimensional top level of ``module``."""
    top, act = _top_and_action(module, v.k)
    return eigenvalue(act(v, top), top)


# ---------------------------------------------------------------------------
# O(V) certificates


@dataclass(frozen=True)
class OVEntry:
    """``coeff * omega^{*left} * ov_residue(u, v, n)``."""

    u: LatticeState
    v: LatticeState
    n: int
    coeff: Fraction
    left: int = 0

    def value(self) -> LatticeState:
        return omega_star_power(self.left, ov_residue(self.u, self.v, self.n)) * self.coeff


@dataclass
class OVCertificate:
    target: LatticeState
    entries: list[OVEntry] = field(default_factory=list)
    cutoff: Fraction | None = None

    def replay(self) -> LatticeState:
        total = LatticeState({}, self.target.k)
        for e in self.entries:
            total = total + e.value()
        return total

    def verify(self) -> bool:
        return self.replay() == self.target


@dataclass
class LReduction:
    """``word . base == poly_star(poly, base) + certificate.target`` with the target in O(V)."""

    poly: Poly
    reduced: LatticeState
    certificate: OVCertificate


def _apply_word(word, v):
    for n in reversed(word):
        v = vertex_mode(from_fock_omega(v.k), 1 - n, v)
    return v


def l_reduce(word, base: LatticeState) -> LReduction:
    """Rewrite ``L(-n1) ... L(-ns) base`` as ``P([omega]) * [base]`` modulo O(V).

    ``word = (n1, ..., ns)`` with every ``ni >= 0``; ``base`` homogeneous. Each
    rewrite uses ``omega``-residues, ``x o 1 = (L(-1) + L(0)) x`` and
    ``omega * x = (L(-2) + 2 L(-1) + L(0)) x``; the accumulated difference is
    returned as an explicit certificate.
    """
    if any(n < 0 for n in word):
        raise ValueError("l_reduce handles L(-n) with n >= 0 only")
    if not base.is_homogeneous():
        raise ValueError("l_reduce needs a homogeneous base vector")
    k = base.k
    one = build_generators(k).vacuum
    w = from_fock_omega(k)
    memo: dict = {}

    def scaled(entries, c, lift=0):
        return [OVEntry(e.u, e.v, e.n, e.coeff * c, e.left + lift) for e in entries]

    def red(word):
        if word in memo:
            return memo[word]
        if not word:
            res = (Poly.const(1), [])
        else:
            head, rest = word[0], word[1:]
            x = _apply_word(rest, base)
            if not x:
                res = (Poly(), [])
            else:
                h = x.weight()
                P, cert = red(rest)
                if head == 0:
                    res = (P * h, scaled(cert, h))
                elif head == 1:
                    res = (P * (-h), [OVEntry(x, one, 0, Fraction(1))] + scaled(cert, -h))
                elif head == 2:
                    res = (P * Poly.x() + P * h,
                           scaled(cert, 1, lift=1) + [OVEntry(x, one, 0, Fraction(-2))]
                           + scaled(cert, h))
                else:
                    P1, c1 = red((head - 1,) + rest)
                    P2, c2 = red((head - 2,) + rest)
                    res = (P1 * -2 - P2,
                           [OVEntry(w, x, head - 3, Fraction(1))] + scaled(c1, -2) + scaled(c2, -1))
        memo[word] = res
        return res

    word = tuple(word)
    P, entries = red(word)
    reduced = poly_star(P, base)
    target = _apply_word(word, base) - reduced
    return LReduction(P, reduced, OVCertificate(target, entries))


# ---------------------------------------------------------------------------
# certificate search


def vlplus_basis(k: int, max_weight: int) -> list[LatticeState]:
    """Homogeneous theta-invariant basis of V_L^+ up to ``max_weight``."""
    out = []
    for wt in range(max_weight + 1):
        for mono in partitions(wt):
            if len(mono) % 2 == 0:
                out.append(LatticeState({(mono, 0): 1}, k))
        m = 1
        while k * m * m <= wt:
            for mono in partitions(wt - k * m * m):
                sign = -1 if len(mono) % 2 else 1
                out.append(LatticeState({(mono, m): 1, (mono, -m): sign}, k))
            m += 1
    return out


def _half_keys(v: LatticeState) -> dict:
    # theta-invariant vectors are determined by their labels >= 0
    return {key: c for key, c in v if key[1] >= 0}


def certify_in_OV(target: LatticeState, cutoff: int, budget: int | None = None):
    """Search for ``target`` in the span of ov_residue generators of V_L^+.

    Generators are ``ov_residue(u, v, n)`` for basis vectors ``u`` (weight >= 1),
    ``v`` and ``n >= 0`` with ``wt u + wt v + n + 1 <= cutoff``, so that every
    component stays within the cutoff. Returns an :class:`OVCertificate`, or
    None when the target is not reached (inconclusive, not a disproof).
    """
    k = target.k
    if target and max(target.weights()) > cutoff:
        raise ValueError("cutoff is below the target's top weight")
    if target != LatticeState({}, k) and _theta_odd_part(target):
        raise ValueError("target is not theta-invariant")
    if not target:
        return OVCertificate(target, [], Fraction(cutoff))
    basis = vlplus_basis(k, cutoff)
    by_weight: dict = {}
    for b in basis:
        by_weight.setdefault(int(b.weight()), []).append(b)

    def order(key):
        mono, r = key
        return (sum(mono) + k * r * r, r, mono)

    ech = SparseEchelon(order)
    gens: list[OVEntry] = []
    goal = _half_keys(target)
    for total in range(1, cutoff + 1):
        for wu in range(1, total):
            for wv in range(0, total - wu):
                n = total - wu - wv - 1
                for u in by_weight.get(wu, ()):
                    for v in by_weight.get(wv, ()):
                        if budget is not None and len(gens) >= budget:
                            break
                        val = ov_residue(u, v, n)
                        if not val:
                            continue
                        gens.append(OVEntry(u, v, n, Fraction(1)))
                        ech.add(_half_keys(val), len(gens) - 1)
        combo = ech.express(goal)
        if combo is not None:
            entries = [OVEntry(gens[i].u, gens[i].v, gens[i].n, c) for i, c in combo.items()]
            cert = OVCertificate(target, entries, Fraction(cutoff))
            if cert.verify():
                return cert
    return None


def _theta_odd_part(v: LatticeState) -> bool:
    from .lattice import theta

    return theta(v) != v
