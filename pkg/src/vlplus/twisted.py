"""theta-twisted V_L-modules V_L^{T_i} = M(1)(theta) ⊗ T_i.

Twisted Fock monomials store doubled levels: the key ``(3, 1)`` is
``alpha(-3/2) alpha(-1/2) t``. ``e_alpha`` acts on ``T_1`` by +1 and on
``T_2`` by -1.

Conventions
-----------
For ``v`` in M(1) ⊗ e^{m alpha} (m in {0, +1, -1})::

    Y(v, z) = W(exp(Delta_z) v, z)

``W`` is the normal-ordered product of twisted fields
``d^(n-1) alpha(z) = sum_{j in 1/2 + Z} binom(-j-1, n-1) alpha(j) z^(-j-n)``
times, for m != 0, ``2^(-2k m^2) e_{m alpha} z^(-k m^2) E^-(-m alpha, z) E^+(-m alpha, z)``.
``Delta_z = (1/2k) sum_{a, b >= 0} c_ab alpha(a) alpha(b) z^(-a-b)`` where
``sum c_ab x^a y^b = -log(((1+x)^(1/2) + (1+y)^(1/2)) / 2)`` and ``alpha(0)``
is the momentum ``2km``. The factor ``1/2k`` converts the orthonormal-basis
form of ``Delta_z`` to the alpha basis. These choices give the top of
``V_L^{T_1}`` conformal weight 1/16.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from . import kernels
from .exact import binom_gen
from .fock import FockVector
from .lattice import LatticeState, eigenvalue, from_fock, build_generators
from .fock import omega as _fock_omega
from .vectors import SparseVector

__all__ = [
    "TwistedState",
    "TWISTED_IDS",
    "twisted_state",
    "twisted_top",
    "apply_alpha_twisted",
    "delta_coefficients",
    "delta_expand",
    "twisted_heis_mode",
    "twisted_exp_mode",
    "twisted_vertex_mode",
    "twisted_zero_mode",
    "twisted_virasoro",
    "twisted_top_scalars",
]

TWISTED_IDS = ("T1+", "T1-", "T2+", "T2-")
TOP_WEIGHT = Fraction(1, 16)


class TwistedState(SparseVector):
    __slots__ = ("sector",)

    def __init__(self, terms=(), k: int = 1, sector: int = 1):
        super().__init__(terms, k)
        if sector not in (1, 2):
            raise ValueError("sector must be 1 or 2")
        self.sector = sector

    def _copy_extra(self, out):
        out.sector = self.sector

    def _check(self, other):
        super()._check(other)
        if other.sector != self.sector:
            raise ValueError("twisted states from different sectors")

    def __eq__(self, other):
        if isinstance(other, int) and other == 0:
            return not self.terms
        return super().__eq__(other) and self.sector == other.sector

    __hash__ = SparseVector.__hash__

    def key_weight(self, key) -> Fraction:
        return TOP_WEIGHT + Fraction(sum(key), 2)


def twisted_state(levels, k: int, sector: int, coeff=1) -> TwistedState:
    """Monomial with half-odd-integer creation levels, e.g. ``levels=(Fraction(1, 2),)``."""
    doubled = []
    for lv in levels:
        d = Fraction(lv) * 2
        if d.denominator != 1 or d.numerator % 2 == 0 or d <= 0:
            raise ValueError(f"twisted level {lv} is not a positive half-odd integer")
        doubled.append(int(d))
    return TwistedState({tuple(sorted(doubled, reverse=True)): coeff}, k, sector)


def twisted_top(k: int, i: int, parity: int) -> TwistedState:
    """Top level of (V_L^{T_i})^{parity}: ``t`` for +, ``alpha(-1/2) t`` for -."""
    return TwistedState({() if parity == 1 else (1,): 1}, k, i)


def apply_alpha_twisted(n, w: TwistedState) -> TwistedState:
    """``alpha(n) w`` for ``n`` in 1/2 + Z."""
    n2 = Fraction(n) * 2
    if n2.denominator != 1 or n2.numerator % 2 == 0:
        raise ValueError("twisted Heisenberg modes are half-odd integers")
    n2 = int(n2)
    two_k = 2 * w.k
    out: dict = {}
    for mono, c in w:
        if n2 < 0:
            key, f = tuple(sorted(mono + (-n2,), reverse=True)), Fraction(1)
        else:
            mult = mono.count(n2)
            if not mult:
                continue
            i = mono.index(n2)
            key, f = mono[:i] + mono[i + 1:], Fraction(two_k * n2 * mult, 2)
        val = out.get(key, 0) + c * f
        if val:
            out[key] = val
        else:
            out.pop(key, None)
    return TwistedState(out, w.k, w.sector)


@lru_cache(maxsize=None)
def delta_coefficients(degree: int) -> dict:
    """``c_ab`` with ``a + b <= degree`` from ``-log(((1+x)^(1/2) + (1+y)^(1/2))/2)``."""
    half = Fraction(1, 2)
    sq = [binom_gen(half, i) for i in range(degree + 1)]
    # t = ((1+x)^(1/2) + (1+y)^(1/2))/2 - 1, no constant term
    t = {}
    for i in range(1, degree + 1):
        t[(i, 0)] = t.get((i, 0), 0) + sq[i] / 2
        t[(0, i)] = t.get((0, i), 0) + sq[i] / 2

    def mul(f, g):
        out = {}
        for (a, b), x in f.items():
            for (c, d), y in g.items():
                if a + b + c + d <= degree:
                    out[(a + c, b + d)] = out.get((a + c, b + d), 0) + x * y
        return out

    result = {}
    power = {(0, 0): Fraction(1)}
    for p in range(1, degree + 1):
        power = mul(power, t)
        sign = Fraction((-1) ** p, p)  # -log(1+t) = sum (-1)^p t^p / p
        for key, val in power.items():
            result[key] = result.get(key, 0) + sign * val
    return {key: val for key, val in result.items() if val}


def _delta_once(terms: dict, m: int, k: int, coeffs: dict) -> dict:
    """Apply Delta_z once to ``{(mono, d): c}``; d accumulates the power of 1/z."""
    two_k = 2 * k
    out: dict = {}

    def remove(mono, p):
        mult = mono.count(p)
        if not mult:
            return None, 0
        i = mono.index(p)
        return mono[:i] + mono[i + 1:], two_k * p * mult

    for (mono, d), c in terms.items():
        distinct = sorted(set(mono), reverse=True)
        # quadratic part: ordered pairs (a, b), alpha(b) acts first
        for b in distinct:
            mono_b, fb = remove(mono, b)
            for a in sorted(set(mono_b), reverse=True):
                cab = coeffs.get((a, b))
                if not cab:
                    continue
                mono_ab, fa = remove(mono_b, a)
                key = (mono_ab, d + a + b)
                out[key] = out.get(key, 0) + c * cab * fa * fb / two_k
        # cross terms with the momentum alpha(0) = 2km; both orders (a, 0) and (0, a)
        if m:
            for a in distinct:
                ca0 = coeffs.get((a, 0))
                if not ca0:
                    continue
                mono_a, fa = remove(mono, a)
                key = (mono_a, d + a)
                out[key] = out.get(key, 0) + c * 2 * ca0 * fa * (two_k * m) / two_k
    return {key: val for key, val in out.items() if val}


def delta_expand(mono: tuple, m: int, k: int) -> dict:
    """``exp(Delta_z)`` applied to one monomial ⊗ e^{m alpha}: ``{d: {mono: coeff}}`` for z^(-d)."""
    coeffs = delta_coefficients(max(sum(mono), 1))
    acc = {(mono, 0): Fraction(1)}
    term = dict(acc)
    p = 1
    while term:
        term = {key: val / p for key, val in _delta_once(term, m, k, coeffs).items()}
        for key, val in term.items():
            acc[key] = acc.get(key, 0) + val
        p += 1
    out: dict = {}
    for (mn, d), c in acc.items():
        if c:
            out.setdefault(d, {})[mn] = c
    return out


def _W_mode(umono, m, power, w: TwistedState) -> dict:
    """Coefficient of ``z^power`` in ``W(umono ⊗ e^{m alpha}, z) w``."""
    k = w.k
    target2 = power * 2
    const = Fraction(1)
    if m:
        target2 += 2 * k * m * m
        const = Fraction(1, 2 ** (2 * k * m * m))
        if w.sector == 2 and m % 2:
            const = -const
    if target2.denominator != 1:
        return {}
    out: dict = {}
    for wmono, wc in w:
        for key, f in kernels.apply_field(umono, m, int(target2), wmono, 2 * k, 2, 0).items():
            out[key] = out.get(key, 0) + const * wc * f
    return out


def twisted_vertex_mode(u, n, w: TwistedState) -> TwistedState:
    """``u_n w`` on a twisted module, for ``u`` in M(1) ⊗ span{e^{m alpha} : |m| <= 1}."""
    if isinstance(u, FockVector):
        u = from_fock(u)
    if not u.is_homogeneous():
        raise ValueError("twisted_vertex_mode needs a homogeneous u")
    n = Fraction(n)
    if (2 * n).denominator != 1:
        raise ValueError(f"mode index {n} is not in (1/2)Z")
    k = w.k
    out: dict = {}
    for (umono, r), uc in u:
        if r.denominator != 1 or abs(r) > 1:
            raise ValueError("twisted vertex operators are implemented for |m| <= 1 only")
        m = int(r)
        for d, terms in delta_expand(umono, m, k).items():
            for mono_d, dc in terms.items():
                for key, f in _W_mode(mono_d, m, -n - 1 + d, w).items():
                    val = out.get(key, 0) + uc * dc * f
                    if val:
                        out[key] = val
                    else:
                        out.pop(key, None)
    return TwistedState(out, k, w.sector)


def twisted_heis_mode(u: FockVector, n, w: TwistedState) -> TwistedState:
    """Mode of ``Y(u, z)`` for ``u`` in M(1), quadratic correction included."""
    return twisted_vertex_mode(from_fock(u), n, w)


def twisted_exp_mode(sign: int, n, w: TwistedState) -> TwistedState:
    """Mode ``n`` of ``Y(e^{sign*alpha}, z)`` on the twisted module."""
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    return twisted_vertex_mode(LatticeState({((), Fraction(sign)): 1}, w.k), n, w)


def twisted_zero_mode(u, w: TwistedState) -> TwistedState:
    if isinstance(u, FockVector):
        u = from_fock(u)
    total = TwistedState({}, w.k, w.sector)
    for wt, comp in u.homogeneous_components().items():
        total = total + twisted_vertex_mode(comp, wt - 1, w)
    return total


def twisted_virasoro(n, w: TwistedState) -> TwistedState:
    return twisted_heis_mode(_fock_omega(w.k), Fraction(n) + 1, w)


def twisted_top_scalars(k: int, i: int, parity: int) -> tuple[Fraction, Fraction, Fraction]:
    """(lambda_omega, lambda_E, lambda_J) on the top of (V_L^{T_i})^{parity}, by mode action."""
    g = build_generators(k)
    top = twisted_top(k, i, parity)
    return tuple(eigenvalue(twisted_zero_mode(u, top), top) for u in (g.omega, g.E, g.J))
