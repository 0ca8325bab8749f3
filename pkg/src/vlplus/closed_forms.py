"""Closed-form expectations used as independent checks of computed data."""
from __future__ import annotations

from fractions import Fraction
from math import factorial

from .exact import Poly

F = Fraction
X = Poly.x()

P_POLY = Poly([0, F(-27, 70), F(89, 10), F(-212, 5), F(1816, 35)])
Q_POLY = Poly([F(-27, 70), F(89, 14), F(-314, 35)])


def _den(k: int) -> int:
    d = (4 * k - 1) * (4 * k - 9)
    if d == 0:
        raise ValueError("4k must avoid 1 and 9")
    return d


def r_closed(k: int) -> Poly:
    d = _den(k)
    return Poly([
        F(27 * k * (k - 1), 8 * d),
        F(9 + 80 * k - 104 * k * k, 2 * d),
        F(2 * (32 * k * k - 8 * k - 9), d),
    ])


def t_poly(k: int) -> Poly:
    return Poly.from_roots([F(k, 4), F(1, 16), F(9, 16)])


def a0_closed(k: int) -> Fraction:
    return F(2 * (4 * k) ** k, factorial(2 * k))


def qr_difference_closed(k: int) -> Poly:
    """``q - r + x - 4x^2`` in factored closed form."""
    c = F(9 * (-12 + 65 * k - 33 * k * k), 280 * _den(k))
    return (X * 16 - 1) * (X * 16 - 9) * c


def b1_ratio_closed(k: int) -> Fraction:
    """``b(1) / a(1)``."""
    return F((k - 4) * (29 * k - 9), 8 * _den(k))


def r_shift_closed(k: int) -> Poly:
    """``r - 4x^2 + x`` in factored closed form."""
    c = F(9, 8 * _den(k))
    return (X * 4 - k) * (X * (32 * k - 12) - (3 * k - 3)) * c


def weight_k6_table(k: int) -> list[list[int]]:
    """Expected coordinates of the eleven weight-(k+6) vectors in the g-basis."""
    return [
        [5, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0],
        [0, 4, 1, 1, 0, 0, 0, 0, 0, 0, 0],
        [0, 0, 3, 0, 2, 1, 0, 0, 0, 0, 0],
        [0, 0, 0, 3, 0, 2, 1, 0, 0, 0, 0],
        [0, 0, 0, 0, 0, 4, 0, 1, 1, 0, 0],
        [0, 0, 0, 0, 0, 0, 2, 0, 3, 1, 0],
        [0, 0, 0, 0, 0, 0, 0, 0, 0, 5, 1],
        [6 * k, 0, 0, 0, 2 * k, 1, 0, 0, 0, 0, 0],
        [0, 4 * k, 2 * k, 0, 0, 2 * k, 0, 0, 1, 0, 0],
        [0, 0, 0, 6 * k, 0, 0, 2 * k, 0, 0, 1, 0],
        [32 * k ** 3, 48 * k * k, 48 * k * k, 24 * k, 24 * k * k, 48 * k, 4, 8 * k, 6, 0, 0],
    ]


def weight_k6_det(k: int) -> int:
    return 6144 * (1 - k) * k * k


def square_class(k: int) -> str:
    """'nonsquare', 'even_square' (k = 4m^2) or 'odd_square' (k = (2m+1)^2, m >= 1)."""
    from math import isqrt

    s = isqrt(k)
    if s * s != k:
        return "nonsquare"
    return "even_square" if s % 2 == 0 else "odd_square"


def twisted_table(k: int) -> dict:
    """Twisted character triples (omega, E, J)."""
    c = F(1, 2 ** (2 * k - 1))
    return {
        "T1+": (F(1, 16), c, F(3, 128)),
        "T1-": (F(9, 16), -c * (4 * k - 1), F(-45, 128)),
        "T2+": (F(1, 16), -c, F(3, 128)),
        "T2-": (F(9, 16), c * (4 * k - 1), F(-45, 128)),
    }


def untwisted_table(k: int) -> dict:
    out = {"VL+": (F(0), F(0), F(0)), "VL-": (F(1), F(0), F(-6))}
    for r in range(1, k):
        c2 = F(r * r, 2 * k)
        out[f"VL[{r}]"] = (F(r * r, 4 * k), F(0), c2 * c2 - c2 / 2)
    lj = F(k * k, 4) - F(k, 4)
    out["VLhalf+"] = (F(k, 4), F(1), lj)
    out["VLhalf-"] = (F(k, 4), F(-1), lj)
    return out
