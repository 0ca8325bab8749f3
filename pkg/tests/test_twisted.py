from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

from vlplus.closed_forms import twisted_table
from vlplus.fock import J_state, monomial, omega
from vlplus.twisted import (
    TwistedState,
    apply_alpha_twisted,
    delta_coefficients,
    twisted_heis_mode,
    twisted_state,
    twisted_top,
    twisted_top_scalars,
    twisted_virasoro,
)

half_odd = st.integers(-5, 4).map(lambda i: F(2 * i + 1, 2))


@st.composite
def twisted_states(draw):
    from vlplus.fock import partitions

    k = draw(st.integers(1, 4))
    wt = draw(st.integers(0, 8))
    monos = [m for m in partitions(wt) if all(p % 2 for p in m)] or [()]
    mono = monos[draw(st.integers(0, len(monos) - 1))]
    return TwistedState({mono: 1}, k, draw(st.sampled_from([1, 2])))


def test_delta_low_order():
    c = delta_coefficients(2)
    assert c.get((0, 0), 0) == 0
    assert c[(1, 0)] == c[(0, 1)] == F(-1, 4)
    assert c[(1, 1)] == F(1, 16)
    assert c[(2, 0)] == F(3, 32)


def test_twisted_state_levels():
    v = twisted_state((F(3, 2), F(1, 2)), 2, 1)
    assert v == TwistedState({(3, 1): 1}, 2, 1)
    assert v.weight() == F(1, 16) + 2
    with pytest.raises(ValueError):
        twisted_state((1,), 2, 1)
    with pytest.raises(ValueError):
        TwistedState({}, 2, 3)


def test_sectors_do_not_mix():
    with pytest.raises(ValueError):
        twisted_top(2, 1, 1) + twisted_top(2, 2, 1)


@given(twisted_states(), half_odd, half_odd)
def test_twisted_heisenberg(w, m, n):
    lhs = apply_alpha_twisted(m, apply_alpha_twisted(n, w)) - apply_alpha_twisted(n, apply_alpha_twisted(m, w))
    rhs = w * (2 * w.k * m) if m + n == 0 else TwistedState({}, w.k, w.sector)
    assert lhs == rhs


@given(twisted_states(), st.integers(-3, 3), st.integers(-3, 3))
def test_twisted_virasoro(w, m, n):
    L = twisted_virasoro
    lhs = L(m, L(n, w)) - L(n, L(m, w))
    rhs = L(m + n, w) * (m - n)
    if m + n == 0:
        rhs = rhs + w * F(m ** 3 - m, 12)
    assert lhs == rhs


@given(twisted_states(), st.integers(-2, 2), half_odd)
def test_L_alpha_commutator(w, m, n):
    lhs = twisted_virasoro(m, apply_alpha_twisted(n, w)) - apply_alpha_twisted(n, twisted_virasoro(m, w))
    assert lhs == apply_alpha_twisted(m + n, w) * (-n)


@given(twisted_states())
def test_L0_is_weight(w):
    assert twisted_virasoro(0, w) == w * w.weight()


def test_twisted_J_mode_on_top_is_scalar():
    k = 3
    top = twisted_top(k, 1, 1)
    assert twisted_heis_mode(J_state(k), 3, top) == top * F(3, 128)
    assert twisted_heis_mode(omega(k), 1, twisted_top(k, 2, -1)) == twisted_top(k, 2, -1) * F(9, 16)


@pytest.mark.parametrize("k", [2, 3, 4, 5])
def test_twisted_table(k):
    table = twisted_table(k)
    for mid, want in table.items():
        assert twisted_top_scalars(k, int(mid[1]), 1 if mid[2] == "+" else -1) == want


def test_twisted_E_example():
    assert twisted_top_scalars(2, 1, -1)[1] == F(-7, 8)
    assert twisted_top_scalars(2, 2, 1)[1] == F(-1, 8)


@pytest.mark.parametrize("k", [2, 3, 4])
def test_lambda_E_products(k):
    e = {(i, p): twisted_top_scalars(k, i, p)[1] for i in (1, 2) for p in (1, -1)}
    # e_alpha acts by opposite signs on T1, T2; the odd level is -(4k-1) times the even one
    assert e[(1, 1)] == -e[(2, 1)]
    assert e[(1, -1)] == -e[(2, -1)]
    assert e[(1, 1)] * e[(1, -1)] == -F(4 * k - 1, 2 ** (4 * k - 2))


def test_alpha_mode_parity():
    with pytest.raises(ValueError):
        apply_alpha_twisted(1, twisted_top(2, 1, 1))
    assert apply_alpha_twisted(F(1, 2), twisted_top(2, 1, -1)) == twisted_top(2, 1, 1) * 2
    assert twisted_heis_mode(monomial((1,), 2), F(1, 2), twisted_top(2, 1, 1)) == 0
