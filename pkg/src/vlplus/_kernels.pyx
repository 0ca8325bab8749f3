# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled versions of the kernels in ``_kernels_py``; same signatures and results."""
from fractions import Fraction
from math import gcd

from ._kernels_py import _field_binom, _sub_multisets


def bareiss_det(rows):
    cdef Py_ssize_t n, c, i, j, swap
    cdef int sign = 1
    a = [list(r) for r in rows]
    n = len(a)
    prev = 1
    for c in range(n - 1):
        if a[c][c] == 0:
            swap = -1
            for i in range(c + 1, n):
                if a[i][c] != 0:
                    swap = i
                    break
            if swap < 0:
                return 0
            a[c], a[swap] = a[swap], a[c]
            sign = -sign
        piv = a[c][c]
        rc = a[c]
        for i in range(c + 1, n):
            ri = a[i]
            f = ri[c]
            if f == 0:
                if piv != prev:
                    for j in range(c + 1, n):
                        ri[j] = (piv * ri[j]) // prev
            else:
                for j in range(c + 1, n):
                    ri[j] = (piv * ri[j] - f * rc[j]) // prev
            ri[c] = 0
        prev = piv
    return sign * a[n - 1][n - 1]


cdef dict _series_cache = {}


def clear_cache():
    _series_cache.clear()
    _levels_cache.clear()


def creation_series(long total, c_num, c_den, long den):
    key = (total, c_num, c_den, den)
    hit = _series_cache.get(key)
    if hit is not None:
        return hit
    if total < 0:
        return ()
    cdef list out = []
    cdef long maxpart = total if (den == 1 or total % 2) else total - 1
    _series_rec(total, maxpart, den, c_num * den, c_den, (), 1, 1, out)
    res = tuple(out)
    if len(_series_cache) > 4096:
        _series_cache.clear()
    _series_cache[key] = res
    return res


cdef void _series_rec(long rest, long maxpart, long step, object cn, object cd,
                      tuple mono, object num, object dn, list out):
    cdef long p, e, top
    if rest == 0:
        g = gcd(num, dn)
        out.append((mono, Fraction(num // g, dn // g)))
        return
    if maxpart <= rest:
        p = maxpart
    elif step == 1 or rest % 2:
        p = rest
    else:
        p = rest - 1
    while p >= 1:
        n1 = num
        d1 = dn
        m1 = mono
        top = rest // p
        for e in range(1, top + 1):
            n1 = n1 * cn
            d1 = d1 * (cd * p * e)
            m1 = m1 + (p,)
            _series_rec(rest - e * p, p - step, step, cn, cd, m1, n1, d1, out)
        p -= step


cdef tuple _remove_one(tuple mono, long p):
    cdef Py_ssize_t i = mono.index(p)
    return mono[:i] + mono[i + 1:]


cdef tuple _merge(tuple mono, tuple extra):
    if not extra:
        return mono
    return tuple(sorted(mono + extra, reverse=True))


cdef inline void _bump(dict d, object key, object val):
    v = d.get(key, 0) + val
    if v:
        d[key] = v
    else:
        d.pop(key, None)


def apply_field(tuple factors, long m, long target, tuple mono, long two_k, long den, long momentum):
    cdef dict states = {}
    cdef dict nxt, out
    cdef long n, nd, zp, budget, rem, p, last, s
    cdef tuple mn, cr, levels
    if m:
        items = _sub_multisets(mono)
    else:
        items = [(mono, 0, 0, 1)]
    for mono1, size, count, weight in items:
        if count:
            c1 = Fraction(weight * (-two_k * m) ** count)
        else:
            c1 = Fraction(weight)
        _bump(states, (mono1, (), -size), c1)
    for n in factors:
        nd = den * n
        nxt = {}
        for key, c in states.items():
            mn, cr, zp = key
            _bump(nxt, (mn, tuple(sorted(cr + (n,))), zp), c)
            if den == 1 and momentum:
                _bump(nxt, (mn, cr, zp - nd), c * momentum * _field_binom(-1, 1, n - 1))
            last = -1
            for p in mn:
                if p == last:
                    continue
                last = p
                f = Fraction(two_k * p * mn.count(p), den) * _field_binom(-p - den, den, n - 1)
                _bump(nxt, (_remove_one(mn, p), cr, zp - p - nd), c * f)
        states = nxt
    out = {}
    q = Fraction(m)
    for key, c in states.items():
        mn, cr, zp = key
        s = 0
        for n in cr:
            s += n
        budget = target - zp + den * s
        if budget < 0:
            continue
        for levels, lc in creation_levels(cr, budget, den):
            rem = budget
            for p in levels:
                rem -= p
            coeff = c * lc
            if m == 0:
                if rem == 0:
                    _bump(out, _merge(mn, levels), coeff)
                continue
            series = creation_series(rem, q.numerator, q.denominator, den)
            if not mn and not levels and coeff == 1 and not out:
                out.update(series)
                continue
            for extra, cc in series:
                _bump(out, _merge(mn, levels + extra), coeff * cc)
    return out


cdef dict _levels_cache = {}


def creation_levels(tuple creators, long budget, long den):
    key = (creators, budget, den)
    hit = _levels_cache.get(key)
    if hit is not None:
        return hit
    cdef dict states = {(): Fraction(1)}
    cdef dict nxt
    cdef long n, start, room, level, t
    cdef tuple levels
    for n in creators:
        start = n if den == 1 else 1
        nxt = {}
        for levels, c in states.items():
            room = budget
            for t in levels:
                room -= t
            for level in range(start, room + 1, den):
                b = _field_binom(level - den, den, n - 1)
                if b:
                    _bump(nxt, tuple(sorted(levels + (level,), reverse=True)), c * b)
        states = nxt
    res = tuple(states.items())
    if len(_levels_cache) > 4096:
        _levels_cache.clear()
    _levels_cache[key] = res
    return res
