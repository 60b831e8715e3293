"""Closed-form evaluation of sum(n**k / P(n)) and sum((-1)**n n**k / P(n)) over all integers.

Route: boundary functions R_l built from the exponential-sum system of P, their
Fourier data packed into the associated matrix C(P), and a linear solve against
the boundary values.  Every output is cross-checked by a brute-force symmetric
summation oracle with extrapolation.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from . import linalg
from .gentrig import GenTrigSystem, make_system
from .poly import Polynomial, synthetic_divide

#: refuse roots closer than this to an integer (the boundary kernel blows up)
INTEGER_ROOT_TOL = 1e-8

TWO_PI_I = 2j * math.pi


class SeriesError(ValueError):
    pass


class IntegerRootError(SeriesError):
    """A root sits (numerically) on the integer lattice where sin(pi r) vanishes."""

    def __init__(self, root: complex, distance: float):
        super().__init__(
            f"root {root} is within {distance:.3e} of an integer; "
            f"the boundary functions are undefined there"
        )
        self.root = root
        self.distance = distance


class DegenerateMatrixError(SeriesError):
    """C(P) is singular, violating the non-degeneracy hypothesis of the solve."""


def _check_roots(sys: GenTrigSystem):
    for r in sys.roots:
        nearest = round(r.real)
        distance = abs(r - nearest)
        if distance < INTEGER_ROOT_TOL:
            raise IntegerRootError(r, distance)


def eval_R(sys: GenTrigSystem, l: int, x: complex) -> complex:
    """R_l(x) = sum_j T[l][j] exp(-i r_j x) / (exp(-i r_j pi) - exp(i r_j pi))."""
    _check_roots(sys)
    x = complex(x)
    acc = 0j
    for j, r in enumerate(sys.roots):
        denom = cmath.exp(-1j * r * math.pi) - cmath.exp(1j * r * math.pi)
        acc += sys.T[l, j] * cmath.exp(-1j * r * x) / denom
    return acc


def fourier_coefficient(sys: GenTrigSystem, l: int, n: int) -> complex:
    """Closed-form Fourier coefficient of R_l: (-1)^n/(2 pi i) sum_j T[l][j]/(n - r_j)."""
    _check_roots(sys)
    acc = sum(sys.T[l, j] / (n - r) for j, r in enumerate(sys.roots))
    return ((-1) ** n) * acc / TWO_PI_I


@dataclass(frozen=True)
class AssociatedMatrix:
    """C[l][k] with columns in ascending powers of n; condition from the solve kernel."""

    m: int
    C: np.ndarray
    condition_estimate: float


def associated_matrix(sys: GenTrigSystem) -> AssociatedMatrix:
    """C(P) by two independent routes, cross-checked entrywise.

    Route 1 expands sum_j T[l][j] * quotient_j(n) for the deflated quotients
    of P; route 2 uses the Vieta substitution directly on the T grid.
    Disagreement beyond 1e-9 means the inputs are inconsistent and is an error.
    """
    _check_roots(sys)
    m = sys.m
    C1 = np.zeros((m, m), dtype=complex)
    for j, r in enumerate(sys.roots):
        quotient, _ = synthetic_divide(sys.poly, r)
        for l in range(m):
            for k in range(m):
                C1[l, k] += sys.T[l, j] * quotient.coeffs[k]

    a = sys.poly.coeffs
    C2 = np.zeros((m, m), dtype=complex)
    for l in range(m):
        for k in range(m - 1):
            sign = (-1) ** (m - k - 1)
            C2[l, k] = sum(
                sys.T[l, j] * (a[k + 1] - sign * sys.T[m - k - 1, j]) for j in range(m)
            )
        C2[l, m - 1] = sys.T[l, :].sum()

    mismatch = float(np.max(np.abs(C1 - C2)))
    if mismatch > 1e-9:
        raise ArithmeticError(
            f"associated-matrix cross-check failed (entrywise gap {mismatch:.3e})"
        )
    C = C1 / TWO_PI_I
    return AssociatedMatrix(m, C, linalg.condition_number(C))


def brute_force_sum(p: Polynomial, k: int, alternating: bool, n_terms: int = 100_000):
    """Oracle: symmetric partial sums with (n, -n) pairing, then extrapolation.

    Non-alternating sums use three-level Richardson over N, 2N, 4N; alternating
    sums use iterated averaging of the tail partial sums.  Returns
    ``(estimate, error_bar)``.
    """
    m = p.degree
    if not 0 <= k <= m - 1:
        raise SeriesError(f"power {k} out of range 0..{m - 1}")
    _check_roots(make_system(p))
    desc = np.array(p.coeffs[::-1], dtype=complex)

    def paired_terms(limit: int) -> np.ndarray:
        n = np.arange(1.0, limit + 1.0)
        t = n ** k / np.polyval(desc, n) + (-n) ** k / np.polyval(desc, -n)
        if alternating:
            t = t * np.where(np.arange(1, limit + 1) % 2 == 0, 1.0, -1.0)
        return t

    center = 1.0 / p(0) if k == 0 else 0j  # n = 0 term; 0**0 == 1

    if not alternating:
        t = paired_terms(4 * n_terms)
        s1 = center + np.sum(t[:n_terms])
        s2 = center + np.sum(t[:2 * n_terms])
        s4 = center + np.sum(t)
        r1a = 2 * s2 - s1
        r1b = 2 * s4 - s2
        estimate = (4 * r1b - r1a) / 3
        error_bar = max(abs(estimate - r1b), 1e-12)
        return complex(estimate), float(error_bar)

    t = paired_terms(n_terms)
    partial = center + np.cumsum(t)
    depth = min(40, len(partial) - 1)
    tail = partial[-(depth + 1):]
    previous = tail[-1]
    while len(tail) > 1:
        previous = tail[-1]
        tail = 0.5 * (tail[1:] + tail[:-1])
    estimate = tail[0]
    error_bar = max(abs(estimate - previous), 1e-12)
    return complex(estimate), float(error_bar)


@dataclass(frozen=True)
class SeriesResult:
    """Closed-form sums with oracle estimates; index k matches the power of n."""

    A: tuple  # sum over all integers of n**k / P(n)
    B: tuple  # same with alternating sign (-1)**n
    oracle_A: tuple  # (estimate, error_bar) pairs
    oracle_B: tuple
    condition_estimate: float


def evaluate_sums(p: Polynomial, oracle_n: int = 100_000, run_oracle: bool = True) -> SeriesResult:
    """Solve C(P) . A = boundary averages and C(P) . B = midpoint values.

    The top-degree sum (terms decaying like 1/n) is the symmetric
    principal-value limit; that is the limit the Fourier boundary data
    represents.
    """
    if p.degree < 2:
        raise SeriesError("degree must be at least 2 for the sums to converge")
    sys = make_system(p)
    _check_roots(sys)
    lead = p.coeffs[-1]  # solve against the monic system, then undo the scaling
    am = associated_matrix(sys)
    m = sys.m
    rhs_a = np.array([(eval_R(sys, l, math.pi) + eval_R(sys, l, -math.pi)) / 2 for l in range(m)])
    rhs_b = np.array([eval_R(sys, l, 0.0) for l in range(m)])
    try:
        A, cond = linalg.solve(am.C, rhs_a)
        B, _ = linalg.solve(am.C, rhs_b)
    except linalg.SingularMatrixError as exc:
        raise DegenerateMatrixError(
            "associated matrix C(P) is singular; the non-degeneracy hypothesis "
            "of the closed-form solve fails for this polynomial"
        ) from exc
    A = A / lead
    B = B / lead

    if run_oracle:
        oracle_a = tuple(brute_force_sum(p, k, False, oracle_n) for k in range(m))
        oracle_b = tuple(brute_force_sum(p, k, True, oracle_n) for k in range(m))
    else:
        nan = complex(math.nan, math.nan)
        oracle_a = tuple((nan, math.inf) for _ in range(m))
        oracle_b = tuple((nan, math.inf) for _ in range(m))
    return SeriesResult(tuple(map(complex, A)), tuple(map(complex, B)), oracle_a, oracle_b, cond)
