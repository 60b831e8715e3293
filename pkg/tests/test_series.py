import cmath
import math

import numpy as np
import pytest

from polytrig import gentrig, series
from polytrig.poly import Polynomial, parse_polynomial
from polytrig.series import (IntegerRootError, SeriesError, associated_matrix,
                             brute_force_sum, eval_R, evaluate_sums,
                             fourier_coefficient)


def _random_system(rng, degree):
    while True:
        roots = rng.uniform(-1, 1, degree) + 1j * rng.uniform(-1, 1, degree)
        if np.min(np.abs(roots.imag)) > 0.05:  # comfortably off the integers
            return gentrig.from_roots(roots)


class TestBoundaryFunctions:
    def test_quadratic_closed_form(self):
        # roots +-i: R_0(x) = sinh(x)/sinh(pi), R_1(x) = i cosh(x)/sinh(pi)
        sys = gentrig.make_system(parse_polynomial("x^2+1"))
        for x in (0.0, 1.2, -2.5):
            assert eval_R(sys, 0, x) == pytest.approx(
                math.sinh(x) / math.sinh(math.pi), abs=1e-13)
            assert eval_R(sys, 1, x) == pytest.approx(
                1j * math.cosh(x) / math.sinh(math.pi), abs=1e-13)

    def test_integer_root_rejected(self):
        sys = gentrig.make_system(parse_polynomial("x^2-1"))
        with pytest.raises(IntegerRootError) as exc:
            eval_R(sys, 0, 0.0)
        assert exc.value.distance < 1e-12

    def test_fourier_consistency_identity(self):
        # c_{n,l} must equal (-1)^n * sum_k C[l][k] n^k / P(n) for integer n
        rng = np.random.default_rng(41)
        for _ in range(10):
            sys = _random_system(rng, int(rng.integers(2, 6)))
            C = associated_matrix(sys).C
            for n in (-3, -1, 0, 2, 5):
                pn = sys.poly(n)
                for l in range(sys.m):
                    predicted = ((-1) ** n) * sum(
                        C[l, k] * n ** k for k in range(sys.m)) / pn
                    assert fourier_coefficient(sys, l, n) == pytest.approx(
                        predicted, abs=1e-10)


class TestAssociatedMatrix:
    def test_known_cubic(self):
        sys = gentrig.make_system(parse_polynomial("x^3+x^2+1"))
        am = associated_matrix(sys)
        got = am.C * series.TWO_PI_I
        expected_desc = np.array([[3, 2, 0], [-1, 0, -3], [0, 3, 2]])
        assert np.max(np.abs(got[:, ::-1] - expected_desc)) < 1e-10
        assert am.condition_estimate < 100

    def test_two_routes_on_random_polys(self):
        # associated_matrix itself raises if its two internal routes disagree
        rng = np.random.default_rng(42)
        for _ in range(50):
            sys = _random_system(rng, int(rng.integers(2, 8)))
            am = associated_matrix(sys)
            assert am.C.shape == (sys.m, sys.m)
            assert np.all(np.isfinite(am.C.view(float)))


class TestOracle:
    def test_quadratic_reference_values(self):
        p = parse_polynomial("x^2+1")
        est, err = brute_force_sum(p, 0, alternating=False)
        assert abs(est - math.pi / math.tanh(math.pi)) < 1e-9
        assert abs(est - math.pi / math.tanh(math.pi)) < 10 * err + 1e-11
        est, err = brute_force_sum(p, 0, alternating=True)
        assert abs(est - math.pi / math.sinh(math.pi)) < 1e-9

    def test_odd_powers_cancel(self):
        est, _ = brute_force_sum(parse_polynomial("x^2+1"), 1, alternating=False)
        assert abs(est) < 1e-12

    def test_power_out_of_range(self):
        with pytest.raises(SeriesError):
            brute_force_sum(parse_polynomial("x^2+1"), 2, alternating=False)


class TestEvaluateSums:
    def test_quadratic(self):
        res = evaluate_sums(parse_polynomial("x^2+1"))
        assert res.A[0] == pytest.approx(math.pi / math.tanh(math.pi), abs=1e-12)
        assert res.B[0] == pytest.approx(math.pi / math.sinh(math.pi), abs=1e-12)
        assert abs(res.A[1]) < 1e-12 and abs(res.B[1]) < 1e-12

    def test_shifted_quadratic(self):
        # P(n) = (n - 1/2)^2 + 1: closed form via the digamma reflection is
        # avoided; the oracle is the reference
        p = Polynomial((1.25, -1.0, 1.0))
        res = evaluate_sums(p)
        for k in range(2):
            assert abs(res.A[k] - res.oracle_A[k][0]) < 1e-6
            assert abs(res.B[k] - res.oracle_B[k][0]) < 1e-6

    def test_nonmonic_scaling(self):
        res1 = evaluate_sums(parse_polynomial("x^2+1"))
        res3 = evaluate_sums(Polynomial((3.0, 0.0, 3.0)))
        for k in range(2):
            assert res3.A[k] == pytest.approx(res1.A[k] / 3, abs=1e-12)
            assert res3.B[k] == pytest.approx(res1.B[k] / 3, abs=1e-12)

    def test_complex_coefficients(self):
        p = Polynomial((1 + 0.5j, 0.25, 1.0))
        res = evaluate_sums(p)
        for k in range(2):
            assert abs(res.A[k] - res.oracle_A[k][0]) < 1e-5
            assert abs(res.B[k] - res.oracle_B[k][0]) < 1e-6

    def test_quartic_against_oracle(self):
        res = evaluate_sums(parse_polynomial("x^4+1"), oracle_n=50_000)
        for k in range(4):
            assert abs(res.A[k] - res.oracle_A[k][0]) < 1e-6
            assert abs(res.B[k] - res.oracle_B[k][0]) < 1e-6

    def test_top_power_principal_value(self):
        # the k = m-1 terms decay like 1/n; symmetric summation still converges
        res = evaluate_sums(parse_polynomial("x^3+x^2+1"))
        assert abs(res.A[2] - res.oracle_A[2][0]) < 1e-6
        assert abs(res.B[2] - res.oracle_B[2][0]) < 1e-6

    def test_degree_one_rejected(self):
        with pytest.raises(SeriesError):
            evaluate_sums(parse_polynomial("x+5"))

    def test_integer_root_rejected(self):
        with pytest.raises(IntegerRootError):
            evaluate_sums(parse_polynomial("x^2-4"))

    def test_oracle_skippable(self):
        res = evaluate_sums(parse_polynomial("x^2+1"), run_oracle=False)
        assert math.isnan(res.oracle_A[0][0].real)
        assert res.A[0] == pytest.approx(math.pi / math.tanh(math.pi), abs=1e-12)
