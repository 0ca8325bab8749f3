from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

from vlplus.exact import (
    InconsistentSystem,
    Matrix,
    Poly,
    SparseEchelon,
    UnderdeterminedSystem,
    binom_gen,
    determinant,
    linear_solve,
    poly_gcd_bezout,
)

small = st.integers(-9, 9)
rationals = st.fractions(min_value=-20, max_value=20, max_denominator=12)


def square(n):
    return st.lists(st.lists(small, min_size=n, max_size=n), min_size=n, max_size=n)


def polys(max_deg=4):
    return st.lists(rationals, min_size=0, max_size=max_deg + 1).map(Poly)


@pytest.mark.parametrize("a,n,want", [(4, 2, 6), (-2, 1, -2), (-4, 3, -20), (7, 0, 1), (3, 5, 0)])
def test_binom_examples(a, n, want):
    assert binom_gen(a, n) == want


def test_binom_rational_upper():
    assert binom_gen(F(1, 2), 2) == F(-1, 8)


def test_binom_negative_n():
    with pytest.raises(ValueError):
        binom_gen(3, -1)


@given(st.integers(-30, 30), st.integers(1, 12))
def test_pascal(a, n):
    assert binom_gen(a, n) == binom_gen(a - 1, n) + binom_gen(a - 1, n - 1)


def test_det_examples():
    assert determinant(Matrix.from_rows([[7]])) == 7
    assert determinant(Matrix.from_rows([[1, 2], [3, 4]])) == -2
    assert determinant(Matrix.from_rows([[0, 1], [1, 0]])) == -1
    assert determinant(Matrix.from_rows([[F(1, 2), 0], [0, F(2, 3)]])) == F(1, 3)


def test_det_non_square():
    with pytest.raises(ValueError):
        determinant(Matrix.from_rows([[1, 2, 3], [4, 5, 6]]))


@given(st.integers(1, 5).flatmap(lambda n: st.tuples(square(n), square(n))))
def test_det_multiplicative(pair):
    A, B = (Matrix.from_rows(x) for x in pair)
    assert determinant(A @ B) == determinant(A) * determinant(B)


def test_solve_identity():
    b = [F(1, 3), -2, 5]
    assert linear_solve(Matrix.identity(3), b) == b


def test_solve_inconsistent():
    with pytest.raises(InconsistentSystem):
        linear_solve(Matrix.from_rows([[0, 0], [0, 0]]), [1, 0])


def test_solve_underdetermined_carries_particular():
    M = Matrix.from_rows([[1, 1], [2, 2]])
    with pytest.raises(UnderdeterminedSystem) as info:
        linear_solve(M, [2, 4])
    x = info.value.particular
    assert x[0] + x[1] == 2


def test_solve_dimension_mismatch():
    with pytest.raises(ValueError):
        linear_solve(Matrix.identity(2), [1, 2, 3])


def test_solve_r_system_k2():
    # r(x) = c0 + c1 x + c2 x^2 through the characters (1/2, 1/2), (1/16, 3/128), (9/16, -45/128)
    pts = [(F(1, 2), F(1, 2)), (F(1, 16), F(3, 128)), (F(9, 16), F(-45, 128))]
    M = Matrix.from_rows([[1, x, x * x] for x, _ in pts])
    assert linear_solve(M, [y for _, y in pts]) == [F(-27, 28), F(247, 14), F(-206, 7)]


@given(st.integers(1, 5).flatmap(lambda n: st.tuples(square(n), st.lists(small, min_size=n, max_size=n))))
def test_solve_satisfies_system(data):
    rows, b = data
    M = Matrix.from_rows(rows)
    try:
        x = linear_solve(M, b)
    except InconsistentSystem:
        assert determinant(M) == 0
        return
    except UnderdeterminedSystem as exc:
        x = exc.particular
        assert determinant(M) == 0
    for i in range(M.rows):
        assert sum(M[i, j] * x[j] for j in range(M.cols)) == b[i]


@given(st.lists(st.lists(small, min_size=3, max_size=3), min_size=1, max_size=5),
       st.lists(small, min_size=5, max_size=5))
def test_solve_rectangular(rows, b):
    M = Matrix.from_rows(rows)
    b = b[:M.rows]
    try:
        x = linear_solve(M, b)
    except InconsistentSystem:
        return
    except UnderdeterminedSystem as exc:
        x = exc.particular
    for i in range(M.rows):
        assert sum(M[i, j] * x[j] for j in range(M.cols)) == b[i]


def test_poly_basics():
    x = Poly.x()
    p = (x - 1) * (x + 1)
    assert p == Poly([-1, 0, 1])
    assert p(3) == 8
    assert p.degree == 2 and Poly().degree == -1
    assert str(Poly([F(-27, 28), F(247, 14), F(-206, 7)])) == "-206/7*x^2 + 247/14*x - 27/28"
    q, r = divmod(x ** 3 + 1, x + 1)
    assert q == x * x - x + 1 and r.is_zero()


def test_interpolate():
    p = Poly.interpolate([(0, 1), (1, 3), (2, 7)])
    assert p == Poly([1, 1, 1])


def test_bezout_examples():
    x = Poly.x()
    d, u, v = poly_gcd_bezout(x - 1, x + 1)
    assert d == 1 and u == F(-1, 2) and v == F(1, 2)
    f = x * x * 2 - 2
    d, u, v = poly_gcd_bezout(f, f)
    assert d == f.monic() and u * f + v * f == d


def test_bezout_zero():
    with pytest.raises(ValueError):
        poly_gcd_bezout(Poly(), Poly())


@given(polys(), polys())
def test_bezout_identity(f, g):
    if f.is_zero() and g.is_zero():
        return
    d, u, v = poly_gcd_bezout(f, g)
    assert u * f + v * g == d
    assert d.lead == 1
    assert (f % d).is_zero() and (g % d).is_zero()


@given(polys(), polys())
def test_poly_ring_axioms(f, g):
    assert f * g == g * f
    assert (f + g) - g == f
    if not g.is_zero():
        q, r = divmod(f, g)
        assert q * g + r == f and r.degree < g.degree


def test_sparse_echelon_express():
    ech = SparseEchelon()
    ech.add({"a": 1, "b": 1}, 0)
    ech.add({"b": 1, "c": 2}, 1)
    assert not ech.add({"a": 1, "c": -2}, 2)
    combo = ech.express({"a": 2, "b": 3, "c": 2})
    assert combo == {0: 2, 1: 1}
    assert ech.express({"d": 1}) is None
