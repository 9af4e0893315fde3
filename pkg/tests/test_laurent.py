import random

import pytest

from flagtutte.errors import (BadWeights, DimensionMismatch, InexactDivision,
                              PoleAtOne)
from flagtutte.laurent import (KRational, LaurentPoly, evaluate_at_one,
                               format_poly)


def mono(*exp):
    return LaurentPoly.monomial(exp)


def rand_poly(rng, nvars, nterms, span=3, cmax=4):
    terms = {}
    for _ in range(nterms):
        e = tuple(rng.randint(-span, span) for _ in range(nvars))
        terms[e] = terms.get(e, 0) + rng.randint(-cmax, cmax)
    return LaurentPoly(nvars, terms)


class TestRingOps:
    def test_figure_product(self):
        # t1^2*t2 * (1 - t1^-1*t3) = t1^2*t2 - t1*t2*t3
        left = LaurentPoly.one_minus((-1, 0, 1)) * mono(2, 1, 0)
        assert left == LaurentPoly(3, {(2, 1, 0): 1, (1, 1, 1): -1})

    def test_additive_inverse(self):
        rng = random.Random(7)
        for _ in range(25):
            p = rand_poly(rng, 3, 5)
            assert (p + (-p)).is_zero()

    def test_ring_axioms_fuzzed(self):
        rng = random.Random(11)
        for _ in range(40):
            a, b, c = (rand_poly(rng, 2, 4) for _ in range(3))
            assert (a * b) * c == a * (b * c)
            assert a * (b + c) == a * b + a * c
            assert a + b == b + a
            assert a * b == b * a

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionMismatch):
            LaurentPoly.one(2) + LaurentPoly.one(3)

    def test_power(self):
        p = LaurentPoly.one_minus((1,))
        assert p ** 3 == LaurentPoly(1, {(0,): 1, (1,): -3, (2,): 3, (3,): -1})

    def test_no_zero_coefficients_stored(self):
        p = LaurentPoly(2, {(0, 0): 1}) - LaurentPoly.one(2)
        assert p.terms == {}

    def test_canonical_term_order(self):
        p = LaurentPoly(2, {(1, 0): 2, (-1, 3): 1, (0, 0): -1})
        exps = [e for e, _ in p.sorted_terms()]
        assert exps == sorted(exps)


class TestExactDivide:
    def test_geometric(self):
        num = LaurentPoly(1, {(0,): 1, (2,): -1})  # 1 - t^2
        assert num.exact_divide(LaurentPoly.one_minus((1,))) == \
            LaurentPoly(1, {(0,): 1, (1,): 1})

    def test_multiply_back_roundtrip(self):
        rng = random.Random(3)
        for _ in range(40):
            q = rand_poly(rng, 2, 3)
            r = rand_poly(rng, 2, 3)
            if q.is_zero():
                continue
            assert (q * r).exact_divide(q) == r

    def test_inexact_detected(self):
        one = LaurentPoly.one(1)
        with pytest.raises(InexactDivision):
            one.exact_divide(LaurentPoly.one_minus((1,)))

    def test_laurent_normalization(self):
        # (t1 - t3)^2 * t2 / (1 - t1^-1 t3) recovers t1^2 t2 - t1 t2 t3
        sq = (mono(1, 0, 0) - mono(0, 0, 1)) ** 2 * mono(0, 1, 0)
        quot = sq.exact_divide(LaurentPoly.one_minus((-1, 0, 1)))
        assert quot * LaurentPoly.one_minus((-1, 0, 1)) == sq
        assert quot == LaurentPoly(3, {(2, 1, 0): 1, (1, 1, 1): -1})


class TestKRational:
    def test_common_denominator_sum(self):
        # 1/(1-t1) + 1/(1-t2) = (2 - t1 - t2)/((1-t1)(1-t2))
        a = KRational(LaurentPoly.one(2), [(1, 0)])
        b = KRational(LaurentPoly.one(2), [(0, 1)])
        s = a + b
        assert s.den == ((0, 1), (1, 0))
        assert s.num == LaurentPoly(2, {(0, 0): 2, (1, 0): -1, (0, 1): -1})

    def test_reduction_cancels_factors(self):
        num = LaurentPoly.one_minus((1, 0)) * LaurentPoly.one(2)
        kr = KRational(num, [(1, 0)])
        assert kr.is_laurent() and kr.as_laurent() == LaurentPoly.one(2)

    def test_zero_numerator_clears_denominator(self):
        kr = KRational(LaurentPoly.zero(2), [(1, 0), (0, 1)])
        assert kr.den == ()

    def test_rational_equality_cross_multiplied(self):
        one = LaurentPoly.one(1)
        a = KRational(LaurentPoly(1, {(0,): 1, (1,): 1}), [(2,)])  # (1+t)/(1-t^2)
        b = KRational(one, [(1,)])  # 1/(1-t)
        assert a == b

    def test_as_laurent_raises_when_uncancelled(self):
        kr = KRational(LaurentPoly.one(1), [(1,)])
        with pytest.raises(InexactDivision):
            kr.as_laurent()


class TestEvaluateAtOne:
    def test_binomial_vanishes(self):
        f = LaurentPoly.one_minus((-1, 0, 1))  # 1 - t1^-1 t3
        assert evaluate_at_one(f, (1, 2, 3)) == 0

    def test_exact_quotient_value(self):
        f = KRational(LaurentPoly(1, {(0,): 1, (2,): -1}), [(1,)])
        assert evaluate_at_one(f, (1,)) == 2
        assert evaluate_at_one(f, (5,)) == 2

    def test_pole_detected(self):
        f = KRational(LaurentPoly(2, {(0, 0): 2, (1, 0): -1, (0, 1): -1}),
                      [(1, 0), (0, 1)])
        with pytest.raises(PoleAtOne) as info:
            evaluate_at_one(f, (1, 2))
        assert info.value.num_order == 1 and info.value.den_order == 2

    def test_bad_weights(self):
        f = KRational(LaurentPoly.one(2), [(1, -1)])
        with pytest.raises(BadWeights):
            evaluate_at_one(f, (3, 3))

    def test_weight_independence_on_laurent_values(self):
        rng = random.Random(5)
        for _ in range(20):
            p = rand_poly(rng, 3, 4)
            vals = {evaluate_at_one(p, w)
                    for w in [(1, 2, 3), (2, 5, 11), (7, 3, 1)]}
            assert vals == {p.subs_one()}

    def test_krational_weight_independence_when_globally_laurent(self):
        # (1-t1^2 t2)/(1-t1) * 1/(1-t1) with numerator divisible twice
        num = LaurentPoly.one_minus((1, 0)) ** 2 * LaurentPoly(2, {(3, 1): 5})
        f = KRational(num, [(1, 0), (1, 0)], reduce=False)
        for w in [(1, 2), (4, 9), (2, -1)]:
            assert evaluate_at_one(f, w) == 5


class TestFormat:
    def test_pretty(self):
        p = LaurentPoly(3, {(0, 0, 0): 1, (-1, 0, 1): -1})
        assert format_poly(p) == "1 - t1^-1*t3"
