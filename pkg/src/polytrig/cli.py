"""Command-line front end.

Subcommands: roots, eval, taylor, identity, cyclo, matrix-c, sum, verify.
Every command emits either aligned text or a JSON document with the stable
top-level keys {command, inputs, results, diagnostics}.  Exit codes: 0 on
success, 2 on input errors, 3 on numerical failures, 1 when verify finds
failing checks.
"""
from __future__ import annotations

import argparse
import json
import math
import os
import sys

import numpy as np

from . import cyclotomic, gentrig, linalg, series, verify
from .poly import (ParseError, Polynomial, PolynomialError, RootFindingError,
                   find_roots, format_polynomial, parse_polynomial)

EXIT_OK = 0
EXIT_FAILED_CHECKS = 1
EXIT_INPUT = 2
EXIT_NUMERICAL = 3


def cformat(z: complex) -> str:
    """Text rendering ``a+bi`` with 12 significant digits."""
    z = complex(z)
    re, im = f"{z.real:.12g}", f"{abs(z.imag):.12g}"
    sign = "+" if z.imag >= 0 else "-"
    return f"{re}{sign}{im}i"


def cjson(z: complex) -> dict:
    z = complex(z)
    return {"re": z.real, "im": z.imag}


def _jsonify(value):
    if isinstance(value, complex):
        return cjson(value)
    if isinstance(value, (np.floating, np.integer, np.bool_)):
        return value.item()
    if isinstance(value, np.complexfloating):
        return cjson(complex(value))
    if isinstance(value, np.ndarray):
        return [_jsonify(v) for v in value.tolist()]
    if isinstance(value, (list, tuple)):
        return [_jsonify(v) for v in value]
    if isinstance(value, dict):
        return {k: _jsonify(v) for k, v in value.items()}
    return value


def _textify(value, indent=""):
    if isinstance(value, (complex, np.complexfloating)):
        return cformat(complex(value))
    if isinstance(value, float):
        return f"{value:.12g}"
    if isinstance(value, np.ndarray):
        return _textify(value.tolist(), indent)
    if isinstance(value, (list, tuple)):
        parts = [_textify(v, indent) for v in value]
        if any("\n" in p or len(p) > 40 for p in parts):
            inner = "\n".join(indent + "  " + p for p in parts)
            return "[\n" + inner + "\n" + indent + "]"
        return "[" + ", ".join(parts) + "]"
    if isinstance(value, dict):
        lines = []
        for k, v in value.items():
            lines.append(f"{indent}{k}: {_textify(v, indent + '  ')}")
        return "\n".join(lines)
    return str(value)


def emit(doc: dict, as_json: bool):
    if as_json:
        print(json.dumps(_jsonify(doc), indent=2, sort_keys=False))
    else:
        print(f"== {doc['command']} ==")
        for section in ("inputs", "results", "diagnostics"):
            print(f"{section}:")
            print(_textify(doc[section], "  ") or "  (none)")


def _get_poly(args) -> Polynomial:
    if getattr(args, "coeffs", None):
        coeffs = [complex(parse_complex(c)) for c in args.coeffs.split(",")]
        return Polynomial(tuple(coeffs))
    if not getattr(args, "poly", None):
        raise ParseError("one of --poly or --coeffs is required", 0)
    return parse_polynomial(args.poly)


def parse_complex(text: str) -> complex:
    """Parse a standalone complex literal such as ``0.3+0.1i`` or ``-2``."""
    text = text.strip()
    try:
        p = parse_polynomial(text)
    except ParseError as exc:
        # the polynomial grammar has no zero constant; the literal grammar does
        if "identically zero" in str(exc) and "x" not in text:
            return 0j
        raise
    if p.degree != 0:
        raise ParseError("expected a constant complex value", 0)
    return p.coeffs[0]


def _matrix_rows(M: np.ndarray):
    return [[complex(v) for v in row] for row in M]


def cmd_roots(args) -> dict:
    p = _get_poly(args)
    rs = find_roots(p, tol=args.tol)
    return {
        "command": "roots",
        "inputs": {"poly": format_polynomial(p), "tol": args.tol},
        "results": {"roots": list(rs.roots)},
        "diagnostics": {"residual": rs.residual},
    }


def cmd_eval(args) -> dict:
    p = _get_poly(args)
    sys_ = gentrig.make_system(p, tol=args.tol)
    x = parse_complex(args.x)
    value = gentrig.eval_S(sys_, args.l, x)
    return {
        "command": "eval",
        "inputs": {"poly": format_polynomial(p), "l": args.l, "x": x},
        "results": {"value": value},
        "diagnostics": {"root_residual": sys_.roots.residual},
    }


def cmd_taylor(args) -> dict:
    p = _get_poly(args)
    sys_ = gentrig.make_system(p, tol=args.tol)
    coeffs = gentrig.taylor_coeffs(sys_, args.l, args.order)
    return {
        "command": "taylor",
        "inputs": {"poly": format_polynomial(p), "l": args.l, "order": args.order},
        "results": {"coefficients": coeffs},
        "diagnostics": {"root_residual": sys_.roots.residual},
    }


def cmd_identity(args) -> dict:
    p = _get_poly(args)
    sys_ = gentrig.make_system(p, tol=args.tol)
    cert = gentrig.identity_certificate(sys_)
    rng = np.random.default_rng(args.seed)
    deviation = 0.0
    for _ in range(20):
        x = complex(rng.uniform(-1, 1), rng.uniform(-1, 1))
        deviation = max(deviation, abs(gentrig.eval_det_M(cert, sys_, x) - cert.det_ref))
    return {
        "command": "identity",
        "inputs": {"poly": format_polynomial(p), "seed": args.seed},
        "results": {
            "eigenvalue": cert.lam,
            "left_vector": [complex(v) for v in cert.L],
            "det_reference": cert.det_ref,
        },
        "diagnostics": {
            "eigen_residual": cert.eigen_residual,
            "max_constancy_deviation": deviation,
        },
    }


def cmd_cyclo(args) -> dict:
    sys_ = cyclotomic.make_cyclotomic(args.m)
    inputs = {"m": args.m, "seed": args.seed}
    results: dict = {}
    diagnostics: dict = {}
    if args.check == "identity":
        rng = np.random.default_rng(args.seed)
        constant = cyclotomic.det_M_constant(args.m)
        worst = max(
            abs(cyclotomic.det_M_cyclo(sys_, complex(rng.uniform(-2, 2), rng.uniform(-2, 2)))
                - constant)
            for _ in range(20)
        )
        inputs["check"] = "identity"
        results = {"constant": constant, "max_deviation": worst}
        diagnostics = {"samples": 20, "tolerance": 1e-8, "within_tolerance": bool(worst <= 1e-8)}
    elif args.check == "addition":
        rng = np.random.default_rng(args.seed)
        worst = 0.0
        for _ in range(20):
            x1 = complex(rng.uniform(-1, 1), rng.uniform(-1, 1))
            x2 = complex(rng.uniform(-1, 1), rng.uniform(-1, 1))
            for l in range(args.m):
                rule = cyclotomic.addition_rule(args.m, l)
                worst = max(worst, abs(
                    cyclotomic.eval_S_cyclo(sys_, l, x1 + x2)
                    - cyclotomic.apply_addition(sys_, rule, x1, x2)))
        inputs["check"] = "addition"
        results = {"max_deviation": worst}
        diagnostics = {"samples": 20, "tolerance": 1e-9, "within_tolerance": bool(worst <= 1e-9)}
    elif args.check == "matrix-a":
        _, det, fact = cyclotomic.matrix_A(sys_)
        inputs["check"] = "matrix-a"
        results = {"det": det, "det_modulus": abs(det), "factorization_modulus": fact}
        diagnostics = {"modulus_gap": abs(abs(det) - fact)}
    else:
        if args.l is None or args.x is None:
            raise ParseError("cyclo evaluation needs --l and --x (or use --check)", 0)
        x = parse_complex(args.x)
        inputs.update({"l": args.l, "x": x})
        results = {"value": cyclotomic.eval_S_cyclo(sys_, args.l, x)}
        diagnostics = {}
    return {"command": "cyclo", "inputs": inputs, "results": results,
            "diagnostics": diagnostics}


def cmd_matrix_c(args) -> dict:
    p = _get_poly(args)
    sys_ = gentrig.make_system(p, tol=args.tol)
    am = series.associated_matrix(sys_)
    C = am.C[:, ::-1] if args.descending_columns else am.C
    scaled = C * series.TWO_PI_I
    return {
        "command": "matrix-c",
        "inputs": {"poly": format_polynomial(p),
                   "column_order": "descending" if args.descending_columns else "ascending"},
        "results": {"C": _matrix_rows(C), "two_pi_i_C": _matrix_rows(scaled)},
        "diagnostics": {"condition_estimate": am.condition_estimate},
    }


def cmd_sum(args) -> dict:
    p = _get_poly(args)
    res = series.evaluate_sums(p, oracle_n=args.oracle_n)
    order = slice(None, None, -1) if args.descending_columns else slice(None)
    ks = list(range(p.degree))[order]
    return {
        "command": "sum",
        "inputs": {"poly": format_polynomial(p), "oracle_n": args.oracle_n,
                   "power_order": "descending" if args.descending_columns else "ascending"},
        "results": {
            "powers": ks,
            "A": [res.A[k] for k in ks],
            "B": [res.B[k] for k in ks],
        },
        "diagnostics": {
            "condition_estimate": res.condition_estimate,
            "oracle_A": [{"estimate": res.oracle_A[k][0], "error_bar": res.oracle_A[k][1],
                          "gap": abs(res.A[k] - res.oracle_A[k][0])} for k in ks],
            "oracle_B": [{"estimate": res.oracle_B[k][0], "error_bar": res.oracle_B[k][1],
                          "gap": abs(res.B[k] - res.oracle_B[k][0])} for k in ks],
        },
    }


def cmd_verify(args) -> tuple[dict, int]:
    checks = verify.run_all(seed=args.seed, oracle_n=args.oracle_n, sum_tol=args.sum_tol)
    for c in checks:
        print(c.line(), file=sys.stderr)
    doc = {
        "command": "verify",
        "inputs": {"seed": args.seed, "oracle_n": args.oracle_n, "sum_tol": args.sum_tol},
        "results": {
            "passed": sum(c.passed for c in checks),
            "failed": sum(not c.passed for c in checks),
            "checks": [{"name": c.name, "passed": c.passed, "measured": c.measured,
                        "threshold": c.threshold, "detail": c.detail} for c in checks],
        },
        "diagnostics": {"total_seconds": sum(c.seconds for c in checks)},
    }
    return doc, EXIT_OK if all(c.passed for c in checks) else EXIT_FAILED_CHECKS


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="polytrig",
        description="Exponential-sum trigonometric systems of a polynomial and "
                    "closed-form two-sided rational series.",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def common(p, poly=True):
        if poly:
            p.add_argument("--poly", help="polynomial expression, e.g. 'x^3+x^2+1'")
            p.add_argument("--coeffs", help="comma-separated ascending coefficients")
        p.add_argument("--json", action="store_true", help="emit a JSON document")
        p.add_argument("--text", action="store_true", help="force aligned text output")
        p.add_argument("--tol", type=float, default=1e-13, help="root-finder tolerance")
        p.add_argument("--seed", type=int, default=0, help="seed for sampled checks")

    p = sub.add_parser("roots", help="all roots of the polynomial")
    common(p)
    p = sub.add_parser("eval", help="evaluate the l-th exponential-sum function at x")
    common(p)
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--x", required=True, help="complex argument, e.g. '0.3+0.1i'")
    p = sub.add_parser("taylor", help="Taylor coefficients of the l-th function")
    common(p)
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--order", type=int, default=20)
    p = sub.add_parser("identity", help="constant-determinant identity certificate")
    common(p)
    p = sub.add_parser("cyclo", help="x^m-1 special case: evaluate or run a check")
    common(p, poly=False)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--l", type=int)
    p.add_argument("--x")
    p.add_argument("--check", choices=["identity", "addition", "matrix-a"])
    p = sub.add_parser("matrix-c", help="the associated matrix C(P)")
    common(p)
    p.add_argument("--descending-columns", action="store_true",
                   help="print columns in descending powers of n")
    p = sub.add_parser("sum", help="closed-form two-sided sums of n^k/P(n)")
    common(p)
    p.add_argument("--descending-columns", action="store_true",
                   help="report powers in descending order")
    p.add_argument("--oracle-n", type=int, default=100_000)
    p = sub.add_parser("verify", help="run every reproducibility check")
    common(p, poly=False)
    p.add_argument("--oracle-n", type=int, default=100_000)
    p.add_argument("--sum-tol", type=float, default=None,
                   help="override the series-check tolerances")
    return parser


def _wants_json(args) -> bool:
    if getattr(args, "json", False):
        return True
    if getattr(args, "text", False):
        return False
    return os.environ.get("POLYTRIG_FORMAT", "").lower() == "json"


_COMMANDS = {
    "roots": cmd_roots,
    "eval": cmd_eval,
    "taylor": cmd_taylor,
    "identity": cmd_identity,
    "cyclo": cmd_cyclo,
    "matrix-c": cmd_matrix_c,
    "sum": cmd_sum,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "oracle_n", 100_000) is not None and getattr(args, "oracle_n", 100_000) < 1000:
        print("error: --oracle-n must be at least 1000", file=sys.stderr)
        return EXIT_INPUT
    if args.tol is not None and args.tol <= 0:
        print("error: --tol must be positive", file=sys.stderr)
        return EXIT_INPUT
    try:
        if args.subcommand == "verify":
            doc, code = cmd_verify(args)
            emit(doc, _wants_json(args))
            return code
        doc = _COMMANDS[args.subcommand](args)
        emit(doc, _wants_json(args))
        return EXIT_OK
    except (ParseError, cyclotomic.CyclotomicError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (RootFindingError, gentrig.GenTrigError, series.SeriesError,
            linalg.SingularMatrixError, ArithmeticError) as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL
    except PolynomialError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


def entry():
    raise SystemExit(main())


if __name__ == "__main__":
    entry()
