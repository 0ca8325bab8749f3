"""States of V_{L°} = M(1) ⊗ C[L°] for L = Z alpha, <alpha, alpha> = 2k.

A basis key is ``(monomial, r)`` standing for ``alpha(-n1)...alpha(-ns) ⊗ e^{r alpha}``
with ``r`` a Fraction in ``(1/2k) Z``. The group-algebra cocycle is trivial,
so ``Y(e^{m alpha}, z) e^{s alpha} = sum_j p_j(m alpha) e^{(m+s) alpha} z^{2kms + j}``
with no signs.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import kernels
from .fock import FockVector, schur_p
from .fock import J_state as _fock_J
from .fock import omega as _fock_omega
from .vectors import SparseVector

__all__ = [
    "LatticeState",
    "state",
    "exp_state",
    "from_fock",
    "E_m",
    "F_m",
    "theta",
    "theta_project",
    "vertex_mode",
    "accumulate_mode",
    "zero_mode",
    "virasoro",
    "exp_exp_expansion",
    "Generators",
    "build_generators",
    "ModuleDescriptor",
    "K1Notice",
    "untwisted_ids",
    "untwisted_top",
    "untwisted_top_scalars",
    "module_catalog",
    "eigenvalue",
]


class LatticeState(SparseVector):
    __slots__ = ()

    def key_weight(self, key) -> Fraction:
        mono, r = key
        return sum(mono) + self.k * r * r

    def labels(self) -> set:
        return {r for (_, r) in self.terms}

    def sector(self, r) -> "LatticeState":
        r = Fraction(r)
        return self._new({key: c for key, c in self.terms.items() if key[1] == r})

    def fock_part(self, r=0) -> FockVector:
        r = Fraction(r)
        return FockVector({m: c for (m, s), c in self.terms.items() if s == r}, self.k)


def state(parts, r, k: int, coeff=1) -> LatticeState:
    parts = tuple(sorted(parts, reverse=True))
    r = Fraction(r)
    if (2 * k * r).denominator != 1:
        raise ValueError(f"e^({r} alpha) is not in the dual lattice for k={k}")
    return LatticeState({(parts, _norm_label(r)): coeff}, k)


def exp_state(r, k: int) -> LatticeState:
    return state((), r, k)


def from_fock(v: FockVector, r=0) -> LatticeState:
    r = _norm_label(Fraction(r))
    return LatticeState({(m, r): c for m, c in v}, v.k)


def E_m(m: int, k: int) -> LatticeState:
    """``e^{m alpha} + e^{-m alpha}``."""
    return exp_state(m, k) + exp_state(-m, k)


def F_m(m: int, k: int) -> LatticeState:
    """``e^{m alpha} - e^{-m alpha}``."""
    return exp_state(m, k) - exp_state(-m, k)


def theta(v: LatticeState) -> LatticeState:
    """The involution: ``alpha(n) -> -alpha(n)``, ``e^{r alpha} -> e^{-r alpha}``."""
    return LatticeState({(m, -r): (-c if len(m) % 2 else c) for (m, r), c in v}, v.k)


def theta_project(v: LatticeState, sign: int) -> LatticeState:
    t = theta(v)
    return (v + t) * Fraction(1, 2) if sign == 1 else (v - t) * Fraction(1, 2)


def _norm_label(r):
    # integral labels are stored as ints: same hash and equality, much cheaper to hash
    if type(r) is Fraction and r.denominator == 1:
        return r.numerator
    return r


def _coset(r: Fraction) -> Fraction:
    return r - (r.numerator // r.denominator)


def vertex_mode(u: LatticeState, n, w: LatticeState) -> LatticeState:
    """``u_n w`` for ``u`` in V_L (integral labels) and ``w`` in one coset V_{L+lambda}."""
    out: dict = {}
    accumulate_mode(out, u, n, w)
    return LatticeState(out, w.k)


def accumulate_mode(out: dict, u: LatticeState, n, w: LatticeState, scale=1) -> None:
    """Add ``scale * u_n w`` into the term dict ``out`` in place."""
    k = w.k
    if not u.is_homogeneous():
        raise ValueError("vertex_mode needs a homogeneous u (split it first)")
    if any(r.denominator != 1 for r in u.labels()):
        raise ValueError("u must lie in V_L (integral lattice labels)")
    if len({_coset(r) for r in w.labels()}) > 1:
        raise ValueError("w mixes several cosets of L")
    n = Fraction(n)
    if n.denominator != 1:
        raise ValueError(f"mode index {n} is not integral on an untwisted module")
    two_k = 2 * k
    get = out.get
    for (umono, m), uc in u:
        m = int(m)
        for (wmono, s), wc in w:
            momentum = two_k * s
            target = -n - 1 - m * momentum
            if target.denominator != 1:
                raise ValueError("z-exponent is not integral; mode index incompatible with sector")
            label = _norm_label(m + s)
            c = uc * wc * scale
            terms = kernels.apply_field(umono, m, int(target), wmono, two_k, 1, int(momentum))
            if c != 1:
                terms = {key: c * f for key, f in terms.items()}
            for key, f in terms.items():
                kk = (key, label)
                prev = get(kk)
                if prev is None:
                    out[kk] = f
                else:
                    val = prev + f
                    if val:
                        out[kk] = val
                    else:
                        del out[kk]


def zero_mode(u: LatticeState, w: LatticeState) -> LatticeState:
    """``o(u) w``: the weight-preserving mode ``u_{wt u - 1}``, extended linearly."""
    total = LatticeState({}, w.k)
    for wt, comp in u.homogeneous_components().items():
        total = total + vertex_mode(comp, wt - 1, w)
    return total


def virasoro(n: int, w: LatticeState) -> LatticeState:
    return vertex_mode(from_fock(_fock_omega(w.k)), n + 1, w)


def exp_exp_expansion(m: int, s: int, j: int, k: int) -> LatticeState:
    """Coefficient of ``z^{2kms+j}`` in ``Y(e^{m alpha}, z) e^{s alpha}``."""
    return from_fock(schur_p(j, m, k), m + s)


@dataclass(frozen=True)
class Generators:
    k: int
    vacuum: LatticeState
    omega: LatticeState
    J: LatticeState
    E: LatticeState
    F: LatticeState

    def Em(self, m: int) -> LatticeState:
        return E_m(m, self.k)

    def Fm(self, m: int) -> LatticeState:
        return F_m(m, self.k)


def build_generators(k: int) -> Generators:
    if k < 1:
        raise ValueError("k must be a positive integer")
    return Generators(
        k=k,
        vacuum=exp_state(0, k),
        omega=from_fock(_fock_omega(k)),
        J=from_fock(_fock_J(k)),
        E=E_m(1, k),
        F=F_m(1, k),
    )


# ---------------------------------------------------------------------------
# irreducible modules and their top levels


@dataclass(frozen=True)
class ModuleDescriptor:
    """One irreducible V_L^+-module: id, top weight, and (omega, E, J) scalars on its top level."""

    id: str
    top_weight: Fraction
    omega: Fraction
    E: Fraction
    J: Fraction

    @property
    def twisted(self) -> bool:
        return self.id.startswith("T")

    @property
    def character(self) -> tuple[Fraction, Fraction, Fraction]:
        return (self.omega, self.E, self.J)


class K1Notice(ValueError):
    """Raised for k = 1, where V_L^+ is itself a lattice VOA (rank one, square length 8)."""

    module_count = 8

    def __init__(self):
        super().__init__(
            "k = 1: V_L^+ is isomorphic to the lattice VOA V_{L'} with L' of rank one "
            "and square length 8 (the k = 4 lattice); it has exactly 8 irreducible "
            "modules. Run with --k 4 for the lattice computations."
        )


UNTWISTED_IDS = ("VL+", "VL-", "VLhalf+", "VLhalf-")


def untwisted_ids(k: int) -> list[str]:
    return ["VL+", "VL-"] + [f"VL[{r}]" for r in range(1, k)] + ["VLhalf+", "VLhalf-"]


def untwisted_top(k: int, mid: str) -> LatticeState:
    """The explicit one-dimensional top level of an untwisted module."""
    if mid == "VL+":
        return exp_state(0, k)
    if mid == "VL-":
        return state((1,), 0, k)
    if mid == "VLhalf+":
        return exp_state(Fraction(1, 2), k) + exp_state(Fraction(-1, 2), k)
    if mid == "VLhalf-":
        return exp_state(Fraction(1, 2), k) - exp_state(Fraction(-1, 2), k)
    if mid.startswith("VL[") and mid.endswith("]"):
        r = int(mid[3:-1])
        if not 1 <= r <= k - 1:
            raise ValueError(f"coset index must lie in 1..{k - 1}")
        return exp_state(Fraction(r, 2 * k), k)
    raise ValueError(f"unknown untwisted module id {mid!r}")


def eigenvalue(image, top) -> Fraction:
    """The scalar c with ``image == c * top``; raises if ``image`` is not proportional."""
    if not image:
        return Fraction(0)
    key, c0 = next(iter(top))
    lam = image.coefficient(key) / c0
    if image != top * lam:
        raise ValueError("top level is not an eigenvector of this operator")
    return lam


def untwisted_top_scalars(k: int, mid: str) -> tuple[Fraction, Fraction, Fraction]:
    """(lambda_omega, lambda_E, lambda_J) on the top of an untwisted module, by mode action."""
    if mid.startswith("T"):
        raise ValueError("twisted modules are handled by vlplus.twisted")
    g = build_generators(k)
    top = untwisted_top(k, mid)
    return tuple(eigenvalue(zero_mode(u, top), top) for u in (g.omega, g.E, g.J))


def module_catalog(k: int) -> list[ModuleDescriptor]:
    """All k+7 irreducible V_L^+-modules with computed top-level scalars."""
    if k < 1:
        raise ValueError("k must be a positive integer")
    if k == 1:
        raise K1Notice()
    from .twisted import TWISTED_IDS, twisted_top, twisted_top_scalars

    out = []
    for mid in untwisted_ids(k):
        top = untwisted_top(k, mid)
        lw, le, lj = untwisted_top_scalars(k, mid)
        out.append(ModuleDescriptor(mid, top.weight(), lw, le, lj))
    for mid in TWISTED_IDS:
        i, parity = int(mid[1]), (1 if mid[2] == "+" else -1)
        lw, le, lj = twisted_top_scalars(k, i, parity)
        out.append(ModuleDescriptor(mid, twisted_top(k, i, parity).weight(), lw, le, lj))
    return out
