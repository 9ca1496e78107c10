import random
import threading
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from intuitionist import creals
from intuitionist.creals import (
    ApartCert,
    Disproved,
    MeasurablyCert,
    Proved,
    Side,
    Unknown,
    apart,
    const_rational,
    measurably_greater,
    measurably_smaller,
    not_measurably_smaller,
)
from intuitionist.subject import PROVED_P, SyntheticOracle, brouwer_alpha

from conftest import audit_cert
from generators import random_generator, regularity_violation


def brute_force_cert(beta, gamma, fuel):
    """Reference search: literal double loop over (m, n) with exact Fractions."""
    for m in range(fuel + 1):
        for n in range(fuel + 1):
            if gamma(m) - beta(m) > Fraction(1, 2**n) + Fraction(4, 2**m):
                return m, n
    return None


def step(at, value):
    """approx(v) = value for v >= at, else 0."""
    value = Fraction(value)
    return creals.RealGen(lambda v: value if v >= at else Fraction(0))


class TestRational:
    def test_lowest_terms(self):
        assert creals.format_rational(Fraction(6, -4)) == "-3/2"
        assert creals.format_rational(Fraction(8, 4)) == "2"

    @pytest.mark.parametrize("q,k", [(0, 0), (1, 0), (2, 1), (3, 2), (Fraction(17, 16), 1), (16, 4), (17, 5)])
    def test_ceil_log2(self, q, k):
        assert creals.ceil_log2(q) == k
        assert 2**k >= q and (k == 0 or 2 ** (k - 1) < q)


class TestArithmetic:
    @pytest.mark.parametrize("q", [0, 1, Fraction(3, 2)])
    def test_const(self, q):
        x = const_rational(q)
        assert x.approx(10) == q
        assert x.lower == x.upper == q

    def test_add_constants(self):
        assert {creals.add(const_rational(1), const_rational(2)).approx(v) for v in range(20)} == {3}

    def test_add_zero_shifts_index(self):
        x = step(5, Fraction(1, 32))
        y = creals.add(x, const_rational(0))
        assert [y.approx(v) for v in range(8)] == [x.approx(v + 1) for v in range(8)]

    def test_add_self_hand_computed(self):
        x = step(5, Fraction(1, 32))
        assert creals.add(x, x).approx(6) == Fraction(1, 16)

    def test_neg_scale_mul(self):
        assert creals.neg(const_rational(Fraction(3, 7))).approx(4) == Fraction(-3, 7)
        assert creals.scale_nat(17, const_rational(Fraction(1, 16))).approx(3) == Fraction(17, 16)
        assert creals.mul(const_rational(3), const_rational(4)).approx(0) == 12

    def test_bounds_propagate(self):
        x = creals.add(const_rational(1), const_rational(2))
        assert (x.lower, x.upper) == (3, 3)
        y = creals.mul(const_rational(-2), const_rational(3))
        assert (y.lower, y.upper) == (-6, -6)
        z = creals.abs_real(y)
        assert (z.lower, z.upper) == (6, 6)

    def test_mul_padding_covers_magnitude(self):
        # |x|, |y| <= 3 without facts; the naive pad ceil(log2(1+3)) = 2 breaks regularity
        osc = creals.RealGen(lambda v: 3 - Fraction(1, 2**v) if v else Fraction(2))
        assert regularity_violation(osc, 16) is None
        assert regularity_violation(creals.mul(osc, osc), 16) is None

    def test_regularity_random(self):
        rng = random.Random(7)
        for _ in range(200):
            x = random_generator(rng)
            assert regularity_violation(x) is None

    def test_bounds_respected_random(self):
        rng = random.Random(11)
        for _ in range(200):
            x = random_generator(rng)
            for v in range(13):
                q = x.approx(v)
                assert x.lower is None or q >= x.lower
                assert x.upper is None or q <= x.upper

    def test_determinism_concurrent(self):
        rng = random.Random(3)
        gens = [random_generator(rng) for _ in range(30)]
        fresh = [[g.approx(v) for v in range(12)] for g in gens]
        results = []

        def worker(order):
            results.append([[gens[i].approx(v) for v in order] for i in range(len(gens))])

        orders = [list(range(12)), list(reversed(range(12))), [5, 0, 11, 3, 7, 1, 9, 2, 10, 4, 8, 6]]
        threads = [threading.Thread(target=worker, args=(o,)) for o in orders]
        for t in threads:
            t.start()
        for t in threads:
            t.join()
        for res in results:
            for i, g_vals in enumerate(res):
                assert sorted(g_vals) == sorted(fresh[i])
        for g_idx, g in enumerate(gens):
            assert [g.approx(v) for v in range(12)] == fresh[g_idx]
        assert len(results) == 3


class TestMeasurably:
    def test_zero_below_one(self):
        assert measurably_smaller(const_rational(0), const_rational(1), 8) == Proved(MeasurablyCert(3, 2))
        assert brute_force_cert(const_rational(0), const_rational(1), 8) == (3, 2)

    def test_equal_constants_disproved_at_any_fuel(self):
        for fuel in (0, 1, 8, 100):
            assert isinstance(measurably_smaller(const_rational(1), const_rational(1), fuel), Disproved)

    def test_fuel_zero_unknown(self):
        assert measurably_smaller(step(0, 0), step(0, 10), 0) == Unknown(0)

    def test_undecided_alpha_unknown(self):
        alpha = brouwer_alpha(SyntheticOracle())
        assert isinstance(measurably_smaller(alpha, const_rational(0), 100), Disproved)
        assert measurably_greater(alpha, const_rational(0), 100) == Unknown(100)

    def test_greater(self):
        assert measurably_greater(const_rational(1), const_rational(0), 8) == Proved(MeasurablyCert(3, 2))
        assert isinstance(measurably_greater(const_rational(0), const_rational(0), 8), Disproved)

    def test_alpha_decided_at_5(self):
        alpha = brouwer_alpha(SyntheticOracle(5, PROVED_P))
        assert measurably_greater(alpha, const_rational(0), 10) == Proved(MeasurablyCert(8, 7))
        assert brute_force_cert(const_rational(0), alpha, 10) == (8, 7)

    def test_search_matches_brute_force(self):
        rng = random.Random(5)
        for _ in range(150):
            b, g = random_generator(rng, 2), random_generator(rng, 2)
            fuel = rng.randint(0, 14)
            got = measurably_smaller(b, g, fuel)
            expected = brute_force_cert(b, g, fuel)
            if isinstance(got, Proved):
                assert (got.cert.m, got.cert.n) == expected
            elif isinstance(got, Unknown):
                assert expected is None or fuel == 0
            else:
                assert expected is None

    def test_anti_symmetry(self):
        rng = random.Random(9)
        for _ in range(150):
            b, g = random_generator(rng, 2), random_generator(rng, 2)
            left = measurably_smaller(b, g, 20)
            right = measurably_greater(b, g, 20)
            assert not (isinstance(left, Proved) and isinstance(right, Proved))

    def test_certificates_sound_on_long_window(self):
        rng = random.Random(13)
        for _ in range(100):
            b, g = random_generator(rng, 2), random_generator(rng, 2)
            v = measurably_smaller(b, g, 24)
            if isinstance(v, Proved):
                assert audit_cert(b, g, v.cert.m, v.cert.n, window=128)
                assert creals.verify_measurably_cert(b, g, v.cert)

    def test_verify_rejects_bad_cert(self):
        assert not creals.verify_measurably_cert(const_rational(0), const_rational(1), MeasurablyCert(2, 2))
        assert not creals.verify_measurably_cert(const_rational(0), const_rational(1), MeasurablyCert(3, 1))


class TestApart:
    def test_zero_one(self):
        v = apart(const_rational(0), const_rational(1), 8)
        assert v == Proved(ApartCert(2, Side.LEFT_SMALLER, MeasurablyCert(3, 2)))

    def test_reflexive(self):
        x = step(3, Fraction(1, 3))
        assert isinstance(apart(x, x, 50), Disproved)

    def test_undecided_alpha(self):
        assert apart(brouwer_alpha(SyntheticOracle()), const_rational(0), 100) == Unknown(100)

    def test_exactly_one_direction(self):
        rng = random.Random(17)
        for _ in range(150):
            b, g = random_generator(rng, 2), random_generator(rng, 2)
            v = apart(b, g, 16)
            directed = [measurably_smaller(b, g, 16), measurably_greater(b, g, 16)]
            n_proved = sum(isinstance(d, Proved) for d in directed)
            assert isinstance(v, Proved) == (n_proved == 1)
            if isinstance(v, Proved):
                inner = directed[0] if v.cert.side is Side.LEFT_SMALLER else directed[1]
                assert inner.cert == v.cert.inner
                # the certified margin exceeds 2**-n, so k = n is admissible
                assert v.cert.k == v.cert.inner.n

    def test_printing(self):
        assert str(measurably_smaller(const_rational(0), const_rational(1), 8)) == "PROVED m=3 n=2"
        assert str(measurably_smaller(const_rational(1), const_rational(1), 8)) == "DISPROVED"
        assert str(Unknown(100)) == "UNKNOWN fuel=100"


class TestNotMeasurablySmaller:
    def test_alpha_never_below_zero(self):
        for oracle in (SyntheticOracle(), SyntheticOracle(4, PROVED_P)):
            v = not_measurably_smaller(brouwer_alpha(oracle), const_rational(0))
            assert isinstance(v, Proved)

    def test_constants(self):
        assert isinstance(not_measurably_smaller(const_rational(1), const_rational(0)), Proved)

    def test_without_facts(self):
        assert not_measurably_smaller(step(2, 1), step(3, 1)) == Unknown(0)


@settings(max_examples=60, deadline=None)
@given(
    a=st.fractions(min_value=-20, max_value=20, max_denominator=50),
    b=st.fractions(min_value=-20, max_value=20, max_denominator=50),
)
def test_constant_order_agrees_with_rationals(a, b):
    v = measurably_smaller(const_rational(a), const_rational(b), 40)
    if a >= b:
        assert isinstance(v, Disproved)
    elif b - a > Fraction(1, 2**30):
        assert isinstance(v, Proved)
