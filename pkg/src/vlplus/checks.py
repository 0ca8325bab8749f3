"""Randomized exact commutator checks on sampled basis states."""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .fock import monomial, partitions
from .lattice import (
    LatticeState,
    build_generators,
    from_fock,
    state,
    vertex_mode,
)
from .twisted import (
    TwistedState,
    apply_alpha_twisted,
    twisted_virasoro,
)

__all__ = [
    "SampleResult",
    "random_lattice_state",
    "random_twisted_state",
    "heisenberg_samples",
    "virasoro_samples",
    "LJ_samples",
    "LE_samples",
    "twisted_heisenberg_samples",
    "twisted_virasoro_samples",
    "run_commutator_suite",
]


@dataclass
class SampleResult:
    name: str
    total: int
    failures: list

    @property
    def passed(self) -> bool:
        return not self.failures and self.total > 0


def random_lattice_state(rng: random.Random, k: int, max_weight: int = 10,
                         labels=(-1, 0, 1, Fraction(1, 2))) -> LatticeState:
    """A basis monomial ``alpha(-n1)...alpha(-ns) ⊗ e^{r alpha}`` of weight <= max_weight."""
    r = rng.choice([x for x in labels if k * x * x <= max_weight])
    budget = int(max_weight - k * r * r)
    wt = rng.randint(0, budget)
    mono = rng.choice(list(partitions(wt)))
    return state(mono, r, k)


def random_twisted_state(rng: random.Random, k: int, sector: int, max_doubled: int = 12) -> TwistedState:
    """A twisted monomial of doubled weight above the top <= max_doubled."""
    wt = rng.randint(0, max_doubled)
    monos = [m for m in partitions(wt) if all(p % 2 for p in m)]
    while not monos:
        wt = rng.randint(0, max_doubled)
        monos = [m for m in partitions(wt) if all(p % 2 for p in m)]
    return TwistedState({rng.choice(monos): 1}, k, sector)


def _alpha(k):
    return from_fock(monomial((1,), k))


def heisenberg_samples(k: int, count: int, seed: int = 0) -> SampleResult:
    """``[alpha(m), alpha(n)] = 2k m delta_{m+n,0}`` on V_L basis states."""
    rng = random.Random(seed)
    a = _alpha(k)
    fails = []
    for _ in range(count):
        m = rng.choice([x for x in range(-6, 7) if x])
        n = rng.choice([-m] + [x for x in range(-6, 7) if x])
        w = random_lattice_state(rng, k)
        lhs = vertex_mode(a, m, vertex_mode(a, n, w)) - vertex_mode(a, n, vertex_mode(a, m, w))
        rhs = w * (2 * k * m) if m + n == 0 else LatticeState({}, k)
        if lhs != rhs:
            fails.append((m, n, w))
    return SampleResult("heisenberg", count, fails)


def _L(n, w):
    return vertex_mode(build_generators(w.k).omega, n + 1, w)


def virasoro_samples(k: int, count: int, seed: int = 1) -> SampleResult:
    """``[L(m), L(n)] = (m-n) L(m+n) + (m^3-m)/12 delta_{m+n,0}`` (central charge 1)."""
    rng = random.Random(seed)
    fails = []
    for _ in range(count):
        m = rng.randint(-4, 4)
        n = rng.choice([-m, rng.randint(-4, 4)])
        w = random_lattice_state(rng, k)
        lhs = _L(m, _L(n, w)) - _L(n, _L(m, w))
        rhs = _L(m + n, w) * (m - n)
        if m + n == 0:
            rhs = rhs + w * Fraction(m ** 3 - m, 12)
        if lhs != rhs:
            fails.append((m, n, w))
    return SampleResult("virasoro", count, fails)


def _mode_commutator_samples(name, u, coeff, k, count, seed):
    rng = random.Random(seed)
    fails = []
    for _ in range(count):
        m = rng.randint(-3, 3)
        n = rng.randint(-4, 6)
        w = random_lattice_state(rng, k)
        lhs = _L(m, vertex_mode(u, n, w)) - vertex_mode(u, n, _L(m, w))
        rhs = vertex_mode(u, m + n, w) * coeff(m, n)
        if lhs != rhs:
            fails.append((m, n, w))
    return SampleResult(name, count, fails)


def LJ_samples(k: int, count: int, seed: int = 2) -> SampleResult:
    """``[L(m), J_n] = (3(m+1) - n) J_{m+n}``."""
    return _mode_commutator_samples("[L,J]", build_generators(k).J,
                                    lambda m, n: 3 * (m + 1) - n, k, count, seed)


def LE_samples(k: int, count: int, seed: int = 3) -> SampleResult:
    """``[L(m), E_n] = ((k-1)(m+1) - n) E_{m+n}``."""
    return _mode_commutator_samples("[L,E]", build_generators(k).E,
                                    lambda m, n: (k - 1) * (m + 1) - n, k, count, seed)


def twisted_heisenberg_samples(k: int, count: int, seed: int = 4) -> SampleResult:
    rng = random.Random(seed)
    halves = [Fraction(2 * i + 1, 2) for i in range(-6, 6)]
    fails = []
    for _ in range(count):
        m = rng.choice(halves)
        n = rng.choice([-m, rng.choice(halves)])
        w = random_twisted_state(rng, k, rng.choice((1, 2)))
        lhs = apply_alpha_twisted(m, apply_alpha_twisted(n, w)) - apply_alpha_twisted(n, apply_alpha_twisted(m, w))
        rhs = w * (2 * k * m) if m + n == 0 else TwistedState({}, k, w.sector)
        if lhs != rhs:
            fails.append((m, n, w))
    return SampleResult("twisted heisenberg", count, fails)


def twisted_virasoro_samples(k: int, count: int, seed: int = 5) -> SampleResult:
    rng = random.Random(seed)
    fails = []
    for _ in range(count):
        m = rng.randint(-3, 3)
        n = rng.choice([-m, rng.randint(-3, 3)])
        w = random_twisted_state(rng, k, rng.choice((1, 2)), max_doubled=8)
        L = twisted_virasoro
        lhs = L(m, L(n, w)) - L(n, L(m, w))
        rhs = L(m + n, w) * (m - n)
        if m + n == 0:
            rhs = rhs + w * Fraction(m ** 3 - m, 12)
        if lhs != rhs:
            fails.append((m, n, w))
    return SampleResult("twisted virasoro", count, fails)


def run_commutator_suite(k: int, count: int = 100, seed: int = 0, twisted: bool = True) -> list[SampleResult]:
    out = [
        heisenberg_samples(k, count, seed),
        virasoro_samples(k, count, seed + 1),
        LJ_samples(k, count, seed + 2),
        LE_samples(k, count, seed + 3),
    ]
    if twisted:
        out += [twisted_heisenberg_samples(k, count, seed + 4),
                twisted_virasoro_samples(k, count, seed + 5)]
    return out
