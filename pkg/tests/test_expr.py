from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

from vlplus.expr import Operator, ParseError, parse, parse_state, to_string
from vlplus.lattice import LatticeState, build_generators, state, vertex_mode, virasoro
from vlplus.zhu import circ, star

K = 3
G = build_generators(K)


@st.composite
def states(draw):
    from vlplus.fock import partitions

    terms = {}
    offset = draw(st.sampled_from([0, F(1, 2), F(1, 6)]))
    for _ in range(draw(st.integers(0, 4))):
        parts = list(partitions(draw(st.integers(0, 5))))
        mono = parts[draw(st.integers(0, len(parts) - 1))]
        c = draw(st.fractions(min_value=-5, max_value=5, max_denominator=7))
        terms[(mono, offset + draw(st.integers(-2, 2)))] = c
    return LatticeState(terms, K)


@given(states())
def test_round_trip(v):
    assert parse_state(to_string(v), K) == v


def test_names():
    assert parse("omega", K) == G.omega
    assert parse("one", K) == G.vacuum
    assert parse("E - F", K) == G.E - G.F
    assert parse("Em(2)", K) == G.Em(2)
    assert parse("e(1/2)", K) == state((), F(1, 2), K)
    assert parse("3/4", K) == F(3, 4)
    assert parse("2^3", K) == 8


def test_operators():
    assert parse("a(-1)*a(-1)*one", K) == state((1, 1), 0, K)
    assert parse("a(-1)^2*one", K) == state((1, 1), 0, K)
    assert parse("L(-2)*one", K) == G.omega
    assert parse("(L(-1) + L(0))*J", K) == virasoro(-1, G.J) + G.J * 4
    assert isinstance(parse("a(1)", K), Operator)


def test_products():
    assert parse("star(omega, E)", K) == star(G.omega, G.E)
    assert parse("circ(omega, one)", K) == circ(G.omega, G.vacuum)
    assert parse("omega^2", K) == star(G.omega, G.omega)
    assert parse("E^0", K) == G.vacuum


def test_scalar_plus_state():
    assert parse_state("2 + omega", K) == G.vacuum * 2 + G.omega
    assert parse_state("5", K) == G.vacuum * 5


def test_to_string_examples():
    assert to_string(G.vacuum) == "one"
    assert to_string(state((2, 1), F(1, 2), K, -2)) == "-2*a(-2)*a(-1)*e(1/2)"
    assert to_string(LatticeState({}, K)) == "0"
    assert to_string(F(-3, 7)) == "-3/7"


@pytest.mark.parametrize("text", ["", "E +", "beta(-1)", "b", "foo", "E * E", "E / E", "1/0", "(E", "E $", "L(-2)"])
def test_errors(text):
    with pytest.raises(ParseError):
        parse_state(text, K)


def test_non_lattice_exponent():
    with pytest.raises(ParseError):
        parse("e(1/7)", K)
