import cmath
import math
from fractions import Fraction

import numpy as np
import pytest

from polytrig import cyclotomic
from polytrig.cyclotomic import (CyclotomicError, addition_rule,
                                 apply_addition, delta, det_M_constant,
                                 det_M_cyclo, eval_S_cyclo,
                                 factorial_identity_check, make_cyclotomic,
                                 matrix_A, rescale_consistency,
                                 taylor_eval_cyclo)


def test_m2_is_cos_sin():
    sys = make_cyclotomic(2)
    for x in (0.0, 0.7, -2.1, 1.3):
        assert eval_S_cyclo(sys, 0, x) == pytest.approx(math.cos(x), abs=1e-14)
        assert eval_S_cyclo(sys, 1, x) == pytest.approx(math.sin(x), abs=1e-14)


def test_m1_is_exp():
    sys = make_cyclotomic(1)
    assert eval_S_cyclo(sys, 0, 0.6) == pytest.approx(cmath.exp(-0.6), abs=1e-14)


def test_value_at_zero_is_kronecker():
    for m in range(1, 8):
        sys = make_cyclotomic(m)
        for l in range(m):
            want = 1.0 if l == 0 else 0.0
            assert eval_S_cyclo(sys, l, 0.0) == pytest.approx(want, abs=1e-13)


def test_real_up_to_phase_on_real_arguments():
    # the power series of zeta^l * S_l has real coefficients
    for m in (3, 4, 5):
        sys = make_cyclotomic(m)
        for x in (-1.7, 0.3, 2.4):
            for l in range(m):
                assert abs((sys.zeta ** l * eval_S_cyclo(sys, l, x)).imag) < 1e-12


def test_index_validation():
    sys = make_cyclotomic(3)
    with pytest.raises(CyclotomicError):
        eval_S_cyclo(sys, 3, 0.0)
    with pytest.raises(CyclotomicError):
        make_cyclotomic(0)


def test_taylor_matches_direct():
    for m in range(1, 6):
        sys = make_cyclotomic(m)
        terms = 170 // m
        for l in range(m):
            for x in (0.5, -1.4, 1.1):
                assert taylor_eval_cyclo(sys, l, x, terms) == pytest.approx(
                    eval_S_cyclo(sys, l, x), abs=1e-12)


def test_taylor_term_cap():
    with pytest.raises(CyclotomicError):
        taylor_eval_cyclo(make_cyclotomic(4), 0, 0.1, 60)


def test_rescale_consistency():
    for m in range(1, 7):
        sys = make_cyclotomic(m)
        for l in range(m):
            for x in (0.4, -0.9 + 0.3j):
                lhs, rhs = rescale_consistency(sys, l, x)
                assert lhs == pytest.approx(rhs, abs=1e-12)


class TestAddition:
    def test_sign_rule(self):
        rule = addition_rule(4, 2)
        assert rule.signs == (1, 1, 1, -1)
        assert rule.partners == (2, 1, 0, 3)

    def test_m2_reduces_to_trig_laws(self):
        sys = make_cyclotomic(2)
        x1, x2 = 0.8, -0.35
        cos_rule = addition_rule(2, 0)
        sin_rule = addition_rule(2, 1)
        assert apply_addition(sys, cos_rule, x1, x2) == pytest.approx(
            math.cos(x1) * math.cos(x2) - math.sin(x1) * math.sin(x2), abs=1e-13)
        assert apply_addition(sys, sin_rule, x1, x2) == pytest.approx(
            math.sin(x1) * math.cos(x2) + math.cos(x1) * math.sin(x2), abs=1e-13)

    def test_random_points(self):
        rng = np.random.default_rng(31)
        for m in range(2, 7):
            sys = make_cyclotomic(m)
            for _ in range(5):
                x1 = complex(rng.uniform(-1, 1), rng.uniform(-1, 1))
                x2 = complex(rng.uniform(-1, 1), rng.uniform(-1, 1))
                for l in range(m):
                    rule = addition_rule(m, l)
                    assert apply_addition(sys, rule, x1, x2) == pytest.approx(
                        eval_S_cyclo(sys, l, x1 + x2), abs=1e-11)

    def test_order_mismatch(self):
        with pytest.raises(CyclotomicError):
            apply_addition(make_cyclotomic(3), addition_rule(4, 0), 0.1, 0.2)


class TestDeterminant:
    def test_constant_values(self):
        assert [det_M_constant(m) for m in range(1, 8)] == [1, -1, -1, 1, 1, -1, -1]

    def test_constant_in_x(self):
        rng = np.random.default_rng(32)
        for m in range(2, 7):
            sys = make_cyclotomic(m)
            c = det_M_constant(m)
            for _ in range(8):
                x = complex(rng.uniform(-2, 2), rng.uniform(-2, 2))
                assert det_M_cyclo(sys, x) == pytest.approx(c, abs=1e-9)

    def test_m3_cubic_relation(self):
        # expanded form of the m = 3 determinant
        sys = make_cyclotomic(3)
        for x in (-2.0, 0.1, 1.7):
            s0, s1, s2 = (eval_S_cyclo(sys, l, x) for l in range(3))
            assert -s0 ** 3 + s1 ** 3 - s2 ** 3 - 3 * s0 * s1 * s2 == pytest.approx(
                -1, abs=1e-11)


class TestFactorialIdentity:
    def test_small_case_by_hand(self):
        # n = 3: same-residue triples are the permutations of (0,0,3) plus (1,1,1)
        sum_a, sum_b, holds = factorial_identity_check(3)
        assert sum_a == Fraction(3, 6) + Fraction(1, 1)
        assert holds
        assert sum_a == 3 * sum_b

    def test_range(self):
        for n in range(3, 31, 3):
            *_, holds = factorial_identity_check(n)
            assert holds

    def test_rejects_bad_n(self):
        with pytest.raises(CyclotomicError):
            factorial_identity_check(4)
        with pytest.raises(CyclotomicError):
            factorial_identity_check(123)


class TestBoundaryJump:
    def test_delta_m2(self):
        sys = make_cyclotomic(2)
        assert delta(sys, 0) == pytest.approx(0.0, abs=1e-13)  # cos is periodic
        assert delta(sys, 1) == pytest.approx(2 * math.sin(math.pi), abs=1e-13)

    def test_determinant_routes_agree(self):
        for m in (1, 3, 4, 5, 7, 8):
            sys = make_cyclotomic(m)
            _, det, fact = matrix_A(sys)
            assert abs(det) == pytest.approx(fact, rel=1e-8)
            assert abs(det) > 1e-6

    def test_singular_orders(self):
        # a sinh factor vanishes exactly when the order is 2 mod 4
        for m in (2, 6):
            _, det, fact = matrix_A(make_cyclotomic(m))
            assert abs(det) < 1e-10
            assert fact < 1e-10
