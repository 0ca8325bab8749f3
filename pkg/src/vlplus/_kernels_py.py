"""Pure-Python reference implementations of the hot kernels.

``_kernels.pyx`` mirrors these functions one for one; ``kernels`` picks the
compiled module when it is importable.

Conventions shared by all kernels
---------------------------------
A Fock monomial is a tuple of positive integers sorted in descending order;
entry ``p`` stands for the creation operator ``alpha(-p/den)``. ``den`` is 1
for the untwisted Heisenberg algebra and 2 for the twisted one (where only
odd ``p`` occur). Exponents of the formal variable ``z`` are likewise
integers in units of ``1/den``.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd


def bareiss_det(rows):
    """Determinant of a square integer matrix (list of lists); rows are copied."""
    a = [list(r) for r in rows]
    n = len(a)
    sign = 1
    prev = 1
    for c in range(n - 1):
        if a[c][c] == 0:
            swap = next((i for i in range(c + 1, n) if a[i][c] != 0), None)
            if swap is None:
                return 0
            a[c], a[swap] = a[swap], a[c]
            sign = -sign
        piv = a[c][c]
        rc = a[c]
        for i in range(c + 1, n):
            ri = a[i]
            f = ri[c]
            for j in range(c + 1, n):
                ri[j] = (piv * ri[j] - f * rc[j]) // prev
            ri[c] = 0
        prev = piv
    return sign * a[n - 1][n - 1]


@lru_cache(maxsize=4096)
def creation_series(total, c_num, c_den, den):
    """Terms of ``exp(sum_n c*alpha(-n) z^n / n)`` at ``z^(total/den)``.

    ``c = c_num/c_den``; sums run over positive ``n`` in ``(1/den)``-units
    (odd units when ``den == 2``). Returns a tuple of (monomial, Fraction).
    The coefficient of ``prod alpha(-p)^e`` is ``prod (c*den/p)^e / e!``.
    """
    if total < 0:
        return ()
    out = []
    cn = c_num * den
    maxpart = total if den == 1 or total % 2 else total - 1
    _series_rec(total, maxpart, den, cn, c_den, (), 1, 1, out)
    return tuple(out)


def _series_rec(rest, maxpart, step, cn, cd, mono, num, dn, out):
    if rest == 0:
        g = gcd(num, dn)
        out.append((mono, Fraction(num // g, dn // g)))
        return
    p = maxpart if maxpart <= rest else (rest if step == 1 or rest % 2 else rest - 1)
    while p >= 1:
        n1, d1, m1 = num, dn, mono
        for e in range(1, rest // p + 1):
            n1 *= cn
            d1 *= cd * p * e
            m1 = m1 + (p,)
            _series_rec(rest - e * p, p - step, step, cn, cd, m1, n1, d1, out)
        p -= step


@lru_cache(maxsize=None)
def _field_binom(upper_num, den, n):
    # binom(upper_num/den, n)
    num = 1
    for i in range(n):
        num *= upper_num - i * den
    d = den ** n
    for i in range(2, n + 1):
        d *= i
    return Fraction(num, d)


def _sub_multisets(mono):
    """Yield (remaining monomial, removed size, removed count, multiplicity weight)."""
    distinct = []
    for p in mono:
        if distinct and distinct[-1][0] == p:
            distinct[-1][1] += 1
        else:
            distinct.append([p, 1])
    choices = [(p, c) for p, c in distinct]

    def rec(i, kept, size, count, weight):
        if i == len(choices):
            yield tuple(kept), size, count, weight
            return
        p, c = choices[i]
        binom = 1
        for e in range(c + 1):
            if e:
                binom = binom * (c - e + 1) // e
            yield from rec(i + 1, kept + [p] * (c - e), size + e * p, count + e, weight * binom)

    yield from rec(0, [], 0, 0, 1)


def _remove_one(mono, p):
    i = mono.index(p)
    return mono[:i] + mono[i + 1:]


def _merge(mono, extra):
    if not extra:
        return mono
    return tuple(sorted(mono + tuple(extra), reverse=True))


def _bump(d, key, val):
    v = d.get(key, 0) + val
    if v:
        d[key] = v
    else:
        d.pop(key, None)


def apply_field(factors, m, target, mono, two_k, den, momentum):
    """One monomial ``mono`` hit by a normal-ordered product of fields.

    The product is ``:d^(n_1-1)alpha(z) ... d^(n_r-1)alpha(z) E^-(-m a, z) E^+(-m a, z):``
    with ``factors = (n_1, ..., n_r)`` (divided-power derivatives). Only the
    coefficient of ``z^(target/den)`` is returned, as a dict monomial ->
    Fraction. ``momentum`` is the eigenvalue of ``alpha(0)`` (untwisted only).
    """
    # annihilation side: states keyed by (remaining monomial, creating factors, z-power)
    states = {}
    for mono1, size, count, weight in (_sub_multisets(mono) if m else [(mono, 0, 0, 1)]):
        c1 = Fraction(weight * (-two_k * m) ** count) if count else Fraction(weight)
        _bump(states, (mono1, (), -size), c1)
    for n in factors:
        nd = den * n
        nxt = {}
        for (mn, cr, zp), c in states.items():
            _bump(nxt, (mn, tuple(sorted(cr + (n,))), zp), c)
            if den == 1 and momentum:
                _bump(nxt, (mn, cr, zp - nd), c * momentum * _field_binom(-1, 1, n - 1))
            last = None
            for p in mn:
                if p == last:
                    continue
                last = p
                f = Fraction(two_k * p * mn.count(p), den) * _field_binom(-p - den, den, n - 1)
                _bump(nxt, (_remove_one(mn, p), cr, zp - p - nd), c * f)
        states = nxt
    # creation side
    out = {}
    for (mn, cr, zp), c in states.items():
        budget = target - zp + den * sum(cr)
        if budget < 0:
            continue
        for levels, lc in creation_levels(cr, budget, den):
            rem = budget - sum(levels)
            coeff = c * lc
            if m == 0:
                if rem == 0:
                    _bump(out, _merge(mn, levels), coeff)
                continue
            q = Fraction(m)
            series = creation_series(rem, q.numerator, q.denominator, den)
            if not mn and not levels and coeff == 1 and not out:
                out.update(series)
                continue
            for extra, cc in series:
                _bump(out, _merge(mn, levels + extra), coeff * cc)
    return out


@lru_cache(maxsize=4096)
def creation_levels(creators, budget, den):
    """Creation parts of the fields ``creators``: ``((levels, coeff), ...)`` with sum(levels) <= budget."""
    states = {(): Fraction(1)}
    for n in creators:
        start = n if den == 1 else 1
        nxt = {}
        for levels, c in states.items():
            room = budget - sum(levels)
            for level in range(start, room + 1, den):
                b = _field_binom(level - den, den, n - 1)
                if b:
                    _bump(nxt, tuple(sorted(levels + (level,), reverse=True)), c * b)
        states = nxt
    return tuple(states.items())
