"""Complex polynomials: parsing, printing, root finding and symmetric functions."""
from __future__ import annotations

import cmath
import math
import random
import re
from dataclasses import dataclass
from typing import Sequence

MAX_DEGREE = 24


class PolynomialError(ValueError):
    """Base class for errors raised by this package's polynomial layer."""


class ParseError(PolynomialError):
    """Syntax error in a polynomial expression; carries the character offset."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (at position {offset})")
        self.offset = offset


class RootFindingError(PolynomialError):
    """Non-convergence of the simultaneous root iteration.

    Carries the best iterate seen so far and its residual.
    """

    def __init__(self, message: str, best_roots: Sequence[complex], residual: float):
        super().__init__(message)
        self.best_roots = tuple(best_roots)
        self.residual = residual


def _require_finite(z: complex) -> complex:
    z = complex(z)
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise PolynomialError(f"non-finite value {z!r}")
    return z


@dataclass(frozen=True)
class Polynomial:
    """Immutable polynomial; ``coeffs[k]`` multiplies ``x**k`` (ascending powers).

    Exact trailing zeros are stripped; the zero polynomial is rejected.
    """

    coeffs: tuple

    def __post_init__(self):
        coeffs = tuple(_require_finite(c) for c in self.coeffs)
        while len(coeffs) > 1 and coeffs[-1] == 0:
            coeffs = coeffs[:-1]
        if not coeffs:
            raise PolynomialError("empty coefficient sequence")
        if coeffs[-1] == 0:
            raise PolynomialError("zero polynomial is not representable")
        object.__setattr__(self, "coeffs", coeffs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, x: complex) -> complex:
        acc = 0j
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> "Polynomial":
        if self.degree == 0:
            raise PolynomialError("derivative of a constant is the zero polynomial")
        return Polynomial(tuple(k * c for k, c in enumerate(self.coeffs) if k > 0))

    def monic(self) -> "Polynomial":
        lead = self.coeffs[-1]
        if lead == 1:
            return self
        return Polynomial(tuple(c / lead for c in self.coeffs))

    @classmethod
    def from_roots(cls, roots: Sequence[complex], leading: complex = 1.0) -> "Polynomial":
        coeffs = [1 + 0j]
        for r in roots:
            coeffs.append(0j)
            for k in range(len(coeffs) - 1, 0, -1):
                coeffs[k] = coeffs[k - 1] - r * coeffs[k]
            coeffs[0] = -r * coeffs[0]
        return cls(tuple(leading * c for c in coeffs))


_NUMBER_RE = re.compile(r"(?:\d+(?:\.\d*)?|\.\d+)(?:[eE][+-]?\d+)?")


class _Scanner:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def fail(self, message: str):
        raise ParseError(message, self.pos)

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def take(self, ch: str) -> bool:
        if self.peek() == ch:
            self.pos += 1
            return True
        return False

    def number(self) -> float:
        self.skip_ws()
        m = _NUMBER_RE.match(self.text, self.pos)
        if m is None:
            self.fail("expected a numeric literal")
        self.pos = m.end()
        return float(m.group())


def _parse_simple_coeff(s: _Scanner) -> complex:
    # number, number followed by 'i', or a bare 'i'
    if s.peek() == "i":
        s.pos += 1
        return 1j
    value = s.number()
    if s.peek() == "i":
        s.pos += 1
        return value * 1j
    return complex(value)


def _parse_paren_coeff(s: _Scanner) -> complex:
    # '(' already consumed: a+bi, a-bi, bi, bi+a ...
    total = 0j
    sign = 1.0
    if s.take("-"):
        sign = -1.0
    elif s.take("+"):
        pass
    total += sign * _parse_simple_coeff(s)
    while s.peek() in "+-":
        sign = -1.0 if s.take("-") else (s.take("+"), 1.0)[1]
        total += sign * _parse_simple_coeff(s)
    if not s.take(")"):
        s.fail("expected ')'")
    return total


def _parse_x_part(s: _Scanner) -> int:
    # 'x' already consumed; returns the exponent
    if not s.take("^"):
        return 1
    s.skip_ws()
    m = re.match(r"\d+", s.text[s.pos:])
    if m is None:
        s.fail("expected a non-negative integer exponent")
    s.pos += m.end()
    return int(m.group())


def parse_polynomial(text: str) -> Polynomial:
    """Parse a polynomial expression such as ``"x^3+x^2+1"`` or ``"(1+2i)x^2-3"``.

    Terms are ``c``, ``c*x^k``, ``x^k`` or ``x`` with a real, imaginary or
    parenthesized complex coefficient; whitespace is ignored.
    """
    s = _Scanner(text)
    powers: dict[int, complex] = {}
    first = True
    while True:
        s.skip_ws()
        if s.pos >= len(s.text):
            if first:
                s.fail("empty input")
            break
        sign = 1.0
        if s.take("-"):
            sign = -1.0
        elif s.take("+"):
            if first:
                s.fail("unexpected leading '+'")
        elif not first:
            s.fail("expected '+' or '-' between terms")
        first = False

        ch = s.peek()
        coeff = 1 + 0j
        have_coeff = False
        if ch == "(":
            s.pos += 1
            coeff = _parse_paren_coeff(s)
            have_coeff = True
        elif ch == "i" or ch.isdigit() or ch == ".":
            coeff = _parse_simple_coeff(s)
            have_coeff = True
        exponent = 0
        s.take("*") if have_coeff else None
        if s.peek() == "x":
            s.pos += 1
            exponent = _parse_x_part(s)
        elif not have_coeff:
            s.fail("expected a term")
        if exponent > MAX_DEGREE:
            s.fail(f"exponent {exponent} exceeds the supported maximum {MAX_DEGREE}")
        powers[exponent] = powers.get(exponent, 0j) + sign * coeff

    degree = max(powers)
    coeffs = [powers.get(k, 0j) for k in range(degree + 1)]
    if all(c == 0 for c in coeffs):
        raise ParseError("polynomial is identically zero", 0)
    while coeffs[-1] == 0:
        coeffs.pop()
    return Polynomial(tuple(coeffs))


def _format_real(x: float) -> str:
    if x == int(x) and abs(x) < 1e15:
        return str(int(x))
    return repr(x)


def _format_coeff(c: complex) -> str:
    if c.imag == 0:
        return _format_real(c.real)
    if c.real == 0:
        if c.imag == 1:
            return "i"
        if c.imag == -1:
            return "-i"
        return _format_real(c.imag) + "i"
    op = "+" if c.imag > 0 else "-"
    return f"({_format_real(c.real)}{op}{_format_real(abs(c.imag))}i)"


def format_polynomial(p: Polynomial) -> str:
    """Canonical text form; ``parse_polynomial(format_polynomial(p))`` equals ``p``."""
    parts = []
    for k in range(p.degree, -1, -1):
        c = p.coeffs[k]
        if c == 0:
            continue
        xs = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
        if not xs:
            term = _format_coeff(c)
        elif c == 1:
            term = xs
        elif c == -1:
            term = "-" + xs
        else:
            term = _format_coeff(c) + "*" + xs
        parts.append(term)
    out = parts[0]
    for term in parts[1:]:
        out += term if term.startswith("-") else "+" + term
    return out


@dataclass(frozen=True)
class RootSet:
    """All roots of a polynomial (with multiplicity), lexicographically sorted."""

    roots: tuple
    residual: float

    def __len__(self) -> int:
        return len(self.roots)

    def __iter__(self):
        return iter(self.roots)


def find_roots(p: Polynomial, tol: float = 1e-13, max_iter: int = 500) -> RootSet:
    """All roots simultaneously by Aberth-Ehrlich iteration.

    Raises :class:`RootFindingError` after ``max_iter`` sweeps without
    convergence; the error carries the best iterate and its residual.
    """
    m = p.degree
    if m < 1:
        raise PolynomialError("degree must be at least 1")
    mon = p.monic()
    if m == 1:
        root = -mon.coeffs[0]
        return RootSet((root,), abs(p(root)))

    dmon = mon.derivative()
    radius = 1.0 + max(abs(c) for c in mon.coeffs[:-1])
    z = [0.6 * radius * cmath.exp(2j * math.pi * (j + 0.35) / m) for j in range(m)]
    rng = random.Random(0x5EED)

    best: list[complex] = list(z)
    best_residual = math.inf
    stall = 0
    prev_step = math.inf
    for _ in range(max_iter):
        step_max = 0.0
        for j in range(m):
            pv = mon(z[j])
            dv = dmon(z[j])
            if dv == 0:
                z[j] += (tol + 1e-8) * (1 + abs(z[j])) * cmath.exp(2j * math.pi * rng.random())
                step_max = math.inf
                continue
            w = pv / dv
            s = sum(1.0 / (z[j] - z[k]) for k in range(m) if k != j)
            denom = 1.0 - w * s
            corr = w if denom == 0 else w / denom
            z[j] -= corr
            step_max = max(step_max, abs(corr))

        residual = max(abs(mon(zj)) for zj in z)
        if residual < best_residual:
            best_residual = residual
            best = list(z)
        scale = 1.0 + max(abs(zj) for zj in z)
        if step_max < tol * scale:
            break
        # random kick on stagnation; only worthwhile while the residual is poor
        stall = stall + 1 if step_max > 0.25 * prev_step else 0
        prev_step = step_max
        if stall > 30 and residual > 1e-10:
            for j in range(m):
                z[j] += 1e-6 * radius * cmath.exp(2j * math.pi * rng.random())
            stall = 0
    else:
        raise RootFindingError(
            f"root iteration did not converge within {max_iter} sweeps "
            f"(residual {best_residual:.3e})",
            sorted(best, key=lambda r: (r.real, r.imag)),
            max(abs(p(r)) for r in best),
        )

    roots = tuple(sorted(z, key=lambda r: (r.real, r.imag)))
    return RootSet(roots, max(abs(p(r)) for r in roots))


def synthetic_divide(p: Polynomial, r: complex):
    """Divide by ``(x - r)``: returns ``(quotient, remainder)`` with ``remainder == p(r)``."""
    if p.degree < 1:
        raise PolynomialError("degree must be at least 1")
    r = _require_finite(r)
    quotient = [0j] * p.degree
    acc = p.coeffs[-1]
    for k in range(p.degree - 1, -1, -1):
        quotient[k] = acc
        acc = acc * r + p.coeffs[k]
    return Polynomial(tuple(quotient)), acc


def elementary_symmetric(roots) -> list:
    """``[e_0, ..., e_m]`` by incremental product expansion; ``e_0 == 1``."""
    rs = tuple(getattr(roots, "roots", roots))
    e = [1 + 0j]
    for r in rs:
        e.append(0j)
        for k in range(len(e) - 1, 0, -1):
            e[k] = e[k] + r * e[k - 1]
    return e


def power_sums(roots, K: int) -> list:
    """``[p_1, ..., p_K]`` with ``p_k = sum(r**k)`` via Newton's identities."""
    if K < 1:
        raise PolynomialError("K must be at least 1")
    rs = tuple(getattr(roots, "roots", roots))
    m = len(rs)
    e = elementary_symmetric(rs)
    p: list[complex] = []
    for k in range(1, K + 1):
        acc = 0j
        for j in range(1, min(k - 1, m) + 1):
            acc += ((-1) ** (j - 1)) * e[j] * p[k - j - 1]
        if k <= m:
            acc += ((-1) ** (k - 1)) * k * e[k]
        p.append(acc)
    return p
