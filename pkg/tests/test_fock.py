from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

from vlplus.fock import (
    FockVector,
    J_state,
    apply_alpha,
    heis_vertex_mode,
    monomial,
    omega,
    partitions,
    schur_p,
    theta_project,
    vacuum,
    virasoro,
)

K = st.integers(1, 5)
nonzero_mode = st.integers(-6, 6).filter(bool)


def basis_state(k, wt, idx):
    parts = list(partitions(wt))
    return monomial(parts[idx % len(parts)], k)


def test_apply_alpha_examples():
    k = 3
    assert apply_alpha(1, monomial((1,), k)) == vacuum(k) * (2 * k)
    assert apply_alpha(0, monomial((2, 1), k)) == 0
    assert apply_alpha(2, monomial((2, 1), k)) == monomial((1,), k) * (4 * k)
    assert apply_alpha(-3, vacuum(k)) == monomial((3,), k)


@given(K, nonzero_mode, nonzero_mode, st.integers(0, 10), st.integers(0, 100))
def test_heisenberg_relation(k, m, n, wt, idx):
    w = basis_state(k, wt, idx)
    lhs = apply_alpha(m, apply_alpha(n, w)) - apply_alpha(n, apply_alpha(m, w))
    rhs = w * (2 * k * m) if m + n == 0 else FockVector({}, k)
    assert lhs == rhs


def test_omega_and_J_normalisation():
    k = 4
    assert omega(k) == monomial((1, 1), k) * F(1, 16)
    J = J_state(k)
    assert J.coefficient((3, 1)) == F(-1, k)
    assert J.coefficient((1, 1, 1, 1)) == F(1, 4 * k * k)
    assert J.coefficient((2, 2)) == F(3, 4 * k)


@pytest.mark.parametrize("k", [1, 2, 3, 7])
def test_L0_grading_and_J_singular(k):
    a1 = monomial((1,), k)
    assert heis_vertex_mode(omega(k), 1, a1) == a1
    J = J_state(k)
    assert virasoro(0, J) == J * 4
    for n in (1, 2, 3, 4):
        assert virasoro(n, J) == 0
    assert heis_vertex_mode(omega(k), 0, J) == virasoro(-1, J)


def test_J_modes_on_vacuum():
    k = 2
    assert heis_vertex_mode(J_state(k), 3, vacuum(k)) == 0
    assert heis_vertex_mode(J_state(k), -1, vacuum(k)) == J_state(k)


def test_vertex_mode_rejects_inhomogeneous():
    k = 2
    with pytest.raises(ValueError):
        heis_vertex_mode(monomial((1,), k) + monomial((2,), k), 0, vacuum(k))


@given(st.integers(1, 4), st.integers(-4, 4), st.integers(-4, 4), st.integers(0, 8), st.integers(0, 50))
def test_virasoro_c1(k, m, n, wt, idx):
    w = basis_state(k, wt, idx)
    lhs = virasoro(m, virasoro(n, w)) - virasoro(n, virasoro(m, w))
    rhs = virasoro(m + n, w) * (m - n)
    if m + n == 0:
        rhs = rhs + w * F(m ** 3 - m, 12)
    assert lhs == rhs


@given(st.integers(1, 4), st.integers(-3, 3), st.integers(-2, 6), st.integers(0, 7), st.integers(0, 50))
def test_L_J_commutator(k, m, n, wt, idx):
    w = basis_state(k, wt, idx)
    J = J_state(k)
    lhs = virasoro(m, heis_vertex_mode(J, n, w)) - heis_vertex_mode(J, n, virasoro(m, w))
    assert lhs == heis_vertex_mode(J, m + n, w) * (3 * (m + 1) - n)


@pytest.mark.parametrize("m,n", [(0, 0), (1, 2), (2, -1), (3, 1), (-1, 3)])
def test_borcherds_commutator(m, n):
    k = 2
    w = monomial((3, 1), k) + monomial((2, 1, 1), k)
    states = {"omega": omega(k), "J": J_state(k)}
    for u in states.values():
        for v in states.values():
            lhs = heis_vertex_mode(u, m, heis_vertex_mode(v, n, w)) - heis_vertex_mode(v, n, heis_vertex_mode(u, m, w))
            rhs = FockVector({}, k)
            for i in range(0, 12):
                c = 1
                for t in range(i):
                    c = c * (m - t) // (t + 1) if i else 1
                from vlplus.exact import binom_gen
                uiv = heis_vertex_mode(u, i, v)
                for comp in uiv.homogeneous_components().values():
                    rhs = rhs + heis_vertex_mode(comp, m + n - i, w) * binom_gen(m, i)
            assert lhs == rhs


@given(K, st.integers(-3, 3), st.integers(0, 6), st.integers(0, 6), st.integers(0, 40), st.integers(0, 40))
def test_weight_grading(k, n, wu, ww, i, j):
    u = basis_state(k, wu, i)
    w = basis_state(k, ww, j)
    out = heis_vertex_mode(u, n, w)
    if out:
        assert out.weight() == wu + ww - n - 1


def test_schur_examples():
    k = 2
    assert schur_p(0, 1, k) == vacuum(k)
    assert schur_p(1, 1, k) == monomial((1,), k)
    assert schur_p(2, 1, k) == monomial((2,), k) * F(1, 2) + monomial((1, 1), k) * F(1, 2)


@pytest.mark.parametrize("c", [1, -1, 2, F(1, 2)])
def test_schur_newton_recurrence(c):
    k = 3
    for j in range(1, 9):
        rhs = FockVector({}, k)
        for i in range(1, j + 1):
            rhs = rhs + apply_alpha(-i, schur_p(j - i, c, k)) * c
        assert schur_p(j, c, k) * j == rhs


def test_theta_project_examples():
    k = 2
    assert theta_project(monomial((1,), k), 1) == 0
    assert theta_project(omega(k), 1) == omega(k)
    v = monomial((2,), k) + monomial((1, 1), k)
    assert theta_project(v, -1) == monomial((2,), k)
