# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled versions of the loops in ``_pykernels``."""

from fractions import Fraction


def least_exponent(num, den):
    return (den // num).bit_length()


def margin_search(lower, upper, Py_ssize_t fuel):
    cdef Py_ssize_t m
    cdef object hi, lo, a, b, num, den
    for m in range(fuel + 1):
        hi = upper(m)
        lo = lower(m)
        # hi - lo = a/b without normalising; only the sign of a and the
        # ratio matter below
        a = hi.numerator * lo.denominator - lo.numerator * hi.denominator
        if a <= 0:
            continue
        b = hi.denominator * lo.denominator
        if m >= 2:
            num = (a << m) - (b << 2)
            den = b << m
        else:
            num = a - (b << (2 - m))
            den = b
        if num <= 0:
            continue
        n = (den // num).bit_length()
        if n <= fuel:
            return m, n
    return None


def twisted_product(xs, ys, p, Py_ssize_t dim):
    cdef dict out = {}
    cdef dict powers = {0: Fraction(1)}
    cdef Py_ssize_t j
    cdef list prefix
    cdef object acc, e, f, a, b, xa, yb, idx
    for a, xa in xs:
        prefix = [0] * dim
        acc = 0
        for j in range(dim):
            prefix[j] = acc
            acc = acc + a[j]
        for b, yb in ys:
            e = 0
            for j in range(1, dim):
                e = e + prefix[j] * b[j]
            f = powers.get(e)
            if f is None:
                f = p ** e
                powers[e] = f
            idx = tuple([a[j] + b[j] for j in range(dim)])
            out[idx] = out.get(idx, 0) + f * xa * yb
    return {k: v for k, v in out.items() if v != 0}


def lex_first_difference(dict xs, dict ys):
    cdef list keys = sorted(set(xs) | set(ys))
    for k in keys:
        a = xs.get(k, 0)
        b = ys.get(k, 0)
        if a != b:
            return k, a, b
    return None
