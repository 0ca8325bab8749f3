"""The Heisenberg Fock space M(1) of a rank-one lattice with <alpha, alpha> = 2k.

States are written in the alpha basis: the monomial ``(n1, n2, ..., nr)``
(descending) is ``alpha(-n1) alpha(-n2) ... alpha(-nr) 1``. The conformal
vector and the weight-four generator J are even in alpha, so their
coefficients stay rational after rescaling from an orthonormal basis.
"""
from __future__ import annotations

from fractions import Fraction

from . import kernels
from .vectors import SparseVector

__all__ = [
    "FockVector",
    "vacuum",
    "monomial",
    "apply_alpha",
    "heis_vertex_mode",
    "virasoro",
    "omega",
    "J_state",
    "schur_p",
    "q_state",
    "theta_project",
    "partitions",
]


class FockVector(SparseVector):
    """Element of M(1); keys are descending tuples of positive integers."""

    __slots__ = ()

    def key_weight(self, key) -> Fraction:
        return Fraction(sum(key))

    def parity(self, key) -> int:
        return -1 if len(key) % 2 else 1


def vacuum(k: int) -> FockVector:
    return FockVector({(): 1}, k)


def monomial(parts, k: int, coeff=1) -> FockVector:
    parts = tuple(sorted(parts, reverse=True))
    if any(p < 1 for p in parts):
        raise ValueError("Fock monomial levels must be positive")
    return FockVector({parts: coeff}, k)


def _alpha_on_mono(n: int, mono: tuple, two_k: int, momentum) -> dict:
    if n < 0:
        return {tuple(sorted(mono + (-n,), reverse=True)): Fraction(1)}
    if n == 0:
        return {mono: Fraction(momentum)} if momentum else {}
    c = mono.count(n)
    if not c:
        return {}
    i = mono.index(n)
    return {mono[:i] + mono[i + 1:]: Fraction(two_k * n * c)}


def apply_alpha(n: int, v: FockVector, k: int | None = None) -> FockVector:
    """``alpha(n) v`` with ``[alpha(m), alpha(n)] = 2k m delta_{m+n,0}``; alpha(0) = 0 on M(1)."""
    k = v.k if k is None else k
    out: dict = {}
    for mono, c in v:
        for key, f in _alpha_on_mono(n, mono, 2 * k, 0).items():
            val = out.get(key, 0) + c * f
            if val:
                out[key] = val
            else:
                out.pop(key, None)
    return FockVector(out, k)


def _check_homogeneous(u: FockVector):
    if not u.is_homogeneous():
        raise ValueError("vertex operator input must be homogeneous")


def heis_vertex_mode(u: FockVector, n, w: FockVector, k: int | None = None) -> FockVector:
    """``u_n w`` for ``Y(u, z) = sum u_n z^(-n-1)``, u and w in M(1)."""
    k = w.k if k is None else k
    _check_homogeneous(u)
    n = Fraction(n)
    if n.denominator != 1:
        return FockVector({}, k)
    target = int(-n - 1)
    out: dict = {}
    for umono, uc in u:
        for wmono, wc in w:
            for key, f in kernels.apply_field(umono, 0, target, wmono, 2 * k, 1, 0).items():
                val = out.get(key, 0) + uc * wc * f
                if val:
                    out[key] = val
                else:
                    out.pop(key, None)
    return FockVector(out, k)


def omega(k: int) -> FockVector:
    """Conformal vector ``(1/4k) alpha(-1)^2 1``."""
    return FockVector({(1, 1): Fraction(1, 4 * k)}, k)


def J_state(k: int) -> FockVector:
    """Weight-four Virasoro singular vector generating M(1)^+ together with omega."""
    return FockVector({
        (1, 1, 1, 1): Fraction(1, 4 * k * k),
        (3, 1): Fraction(-1, k),
        (2, 2): Fraction(3, 4 * k),
    }, k)


def virasoro(n: int, w: FockVector) -> FockVector:
    """``L(n) w = omega_{n+1} w``."""
    return heis_vertex_mode(omega(w.k), n + 1, w)


def schur_p(j: int, c, k: int) -> FockVector:
    """Coefficient of ``z^j`` in ``exp(sum_n c alpha(-n) z^n / n)`` applied to the vacuum."""
    if j < 0:
        raise ValueError("schur_p needs j >= 0")
    c = Fraction(c)
    return FockVector(dict(kernels.creation_series(j, c.numerator, c.denominator, 1)), k)


def q_state(j: int, c, k: int) -> FockVector:
    """``p_j(c alpha) + p_j(-c alpha)``: the even part of schur_p, doubled."""
    return schur_p(j, c, k) + schur_p(j, -Fraction(c), k)


def theta_project(v: FockVector, sign: int) -> FockVector:
    """Projection onto the ``sign`` eigenspace of theta (parity of monomial length)."""
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    return FockVector({m: c for m, c in v if (-1) ** len(m) == sign}, v.k)


def partitions(n: int, maxpart: int | None = None):
    """Partitions of ``n`` as descending tuples."""
    if maxpart is None:
        maxpart = n
    if n == 0:
        yield ()
        return
    for p in range(min(n, maxpart), 0, -1):
        for rest in partitions(n - p, p):
            yield (p,) + rest
