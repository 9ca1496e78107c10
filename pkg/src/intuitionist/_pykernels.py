"""Pure-Python implementations of the hot loops.

These mirror ``_ckernels.pyx`` line for line; ``intuitionist.kernels`` picks
whichever is importable.
"""

from fractions import Fraction


def least_exponent(num, den):
    """Least ``n >= 0`` with ``2**-n < num/den``; requires ``num/den > 0``."""
    # 2**n > den/num  <=>  2**n > den // num
    return (den // num).bit_length()


def margin_search(lower, upper, fuel):
    """Scan ``m = 0..fuel`` for the first index where ``upper - lower`` clears
    the slack ``2**(2-m)`` by more than ``2**-n`` for some ``n <= fuel``.

    ``lower`` and ``upper`` are callables from index to Fraction.  Returns
    ``(m, n)`` or ``None``.
    """
    for m in range(fuel + 1):
        hi = upper(m)
        lo = lower(m)
        # hi - lo = a/b without normalising; only the sign of a and the
        # ratio matter below
        a = hi.numerator * lo.denominator - lo.numerator * hi.denominator
        if a <= 0:
            continue
        b = hi.denominator * lo.denominator
        # r = a/b - 2**(2-m) = num/den
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


def twisted_product(xs, ys, p, dim):
    """Sparse twisted convolution.

    ``xs`` and ``ys`` are sequences of ``(index_tuple, Fraction)``.  Each pair
    contributes ``p**B(a, b) * x_a * y_b`` at ``a + b`` where
    ``B(a, b) = sum_{i<j} a_i * b_j``.  Zero coefficients are dropped.
    """
    out = {}
    powers = {0: Fraction(1)}
    for a, xa in xs:
        # prefix sums of a give B(a, b) = sum_j b_j * (a_0 + ... + a_{j-1})
        prefix = [0] * dim
        acc = 0
        for j in range(dim):
            prefix[j] = acc
            acc += a[j]
        for b, yb in ys:
            e = 0
            for j in range(1, dim):
                e += prefix[j] * b[j]
            f = powers.get(e)
            if f is None:
                f = powers[e] = p ** e
            idx = tuple([a[j] + b[j] for j in range(dim)])
            out[idx] = out.get(idx, 0) + f * xa * yb
    return {k: v for k, v in out.items() if v != 0}


def lex_first_difference(xs, ys):
    """First index (in lexicographic order) where two sparse maps disagree,
    with the two coefficients there, or ``None`` if equal."""
    keys = sorted(set(xs) | set(ys))
    for k in keys:
        a = xs.get(k, 0)
        b = ys.get(k, 0)
        if a != b:
            return k, a, b
    return None
