"""Command-line front end: exp, spin, rotate, decompose, verify, sample.

Text mode prints ``key = value`` lines (matrices one row per line);
``--format json`` emits one JSON record per result with a fixed key order.
Exit codes: 0 success/pass, 1 verification failure or domain error, 2 usage
error.
"""

from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from .algebra import DEFAULT_TOL, Signature
from .errors import SpinParamError
from .mvtext import MvParseError, format_float, parse, serialize
from .rotations import (
    OrthoMatrix,
    random_spin_element,
    spin_to_so,
    verify_orthogonal,
)
from .spinors import (
    Bivector,
    SpinElement,
    beta_of,
    decompose,
    decompose_low_dim,
    lambda_of,
    parametrize_adjoint,
    parametrize_low_dim,
    parametrize_regular,
    rho_of,
    spin_residuals,
)


class UsageError(Exception):
    pass


def _parse_signature(text: str) -> Signature:
    try:
        p_str, q_str = text.split(",")
        return Signature(int(p_str), int(q_str))
    except (ValueError, TypeError) as exc:
        raise argparse.ArgumentTypeError(f"invalid signature {text!r}: {exc}") from None


def _parse_floats(text: str) -> list[float]:
    try:
        return [float(part) for part in text.split(",")]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"invalid number list {text!r}: {exc}") from None


def _parse_sign(text: str) -> int:
    mapping = {"+1": 1, "1": 1, "+": 1, "-1": -1, "-": -1}
    if text not in mapping:
        raise argparse.ArgumentTypeError(f"sign must be +1 or -1, got {text!r}")
    return mapping[text]


def _parse_matrix(text: str) -> list[list[float]]:
    try:
        return [[float(x) for x in row.split(",")] for row in text.split(";")]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"invalid matrix {text!r}: {exc}") from None


def _bivector(args) -> Bivector:
    sig = args.signature
    expected = sig.n * (sig.n - 1) // 2
    if expected == 0:
        raise UsageError(f"{sig} has no bivector coefficients")
    if len(args.b) != expected:
        raise UsageError(
            f"{sig} needs {expected} bivector coefficients "
            f"(pairs in lexicographic order), got {len(args.b)}"
        )
    return Bivector(sig, tuple(args.b))


def _spin_from_text(text: str, sig: Signature, tol: float) -> SpinElement:
    return SpinElement(parse(text, sig), tol)


def _branch(args) -> str:
    branch = args.branch
    n = args.signature.n
    if branch == "auto":
        branch = "regular" if n == 4 else "low"
    if branch in ("regular", "adjoint") and n != 4:
        raise UsageError(f"branch {branch!r} requires a signature with p + q = 4")
    if branch == "low" and n not in (2, 3):
        raise UsageError("branch 'low' requires a signature with p + q in (2, 3)")
    return branch


def _parametrize(args) -> SpinElement:
    b = _bivector(args)
    branch = _branch(args)
    if branch == "regular":
        return parametrize_regular(b, args.sign, args.tolerance)
    if branch == "adjoint":
        return parametrize_adjoint(b, args.sign, args.tolerance)
    return parametrize_low_dim(b, args.sign, args.tolerance)


def _emit(record: dict, args) -> None:
    if args.format == "json":
        print(json.dumps(record))
        return
    for key, value in record.items():
        if value is None:
            continue
        if key == "matrix":
            print("matrix:")
            for row in value:
                print(" ".join(format_float(x) for x in row))
        elif isinstance(value, bool):
            print(f"{key} = {'true' if value else 'false'}")
        elif isinstance(value, float):
            print(f"{key} = {format_float(value)}")
        elif isinstance(value, list):
            print(f"{key} = {','.join(format_float(x) for x in value)}")
        else:
            print(f"{key} = {value}")


def _sig_text(sig: Signature) -> str:
    return f"{sig.p},{sig.q}"


def cmd_exp(args) -> int:
    from .spinors import ext_exp

    b = _bivector(args)
    sig = args.signature
    record = {
        "command": "exp",
        "signature": _sig_text(sig),
        "b": list(b.coeffs),
        "ext_exp": serialize(ext_exp(b)),
        "lambda": lambda_of(b, args.tolerance) if sig.n == 4 else None,
        "beta": beta_of(b),
        "rho": rho_of(b) if sig.n == 4 else None,
    }
    _emit(record, args)
    return 0


def cmd_spin(args) -> int:
    s = _parametrize(args)
    b = _bivector(args)
    sig = args.signature
    record = {
        "command": "spin",
        "signature": _sig_text(sig),
        "branch": _branch(args),
        "b": list(b.coeffs),
        "sign": args.sign,
        "spin": serialize(s.value),
        "lambda": lambda_of(b, args.tolerance) if sig.n == 4 else None,
        "beta": beta_of(b),
        "rho": rho_of(b) if sig.n == 4 else None,
    }
    _emit(record, args)
    return 0


def _spin_input(args) -> SpinElement:
    if args.s is not None:
        return _spin_from_text(args.s, args.signature, args.tolerance)
    if args.b is None:
        raise UsageError("provide a spin element with --s or a bivector with --b")
    return _parametrize(args)


def cmd_rotate(args) -> int:
    s = _spin_input(args)
    matrix = spin_to_so(s, args.tolerance)
    record = {
        "command": "rotate",
        "signature": _sig_text(args.signature),
        "spin": serialize(s.value),
        "matrix": [[float(x) for x in row] for row in matrix.entries],
    }
    _emit(record, args)
    return 0


def cmd_decompose(args) -> int:
    sig = args.signature
    s = _spin_from_text(args.s, sig, args.tolerance)
    record = {
        "command": "decompose",
        "signature": _sig_text(sig),
        "spin": serialize(s.value),
    }
    if sig.n == 4:
        param = decompose(s, tol=args.tolerance)
        record["branch"] = param.branch
        record["b"] = list(param.bivector.coeffs)
        record["sign"] = param.sign
        record["lambda"] = param.lam if param.branch == "regular" else None
        record["rho"] = param.rho if param.branch == "adjoint" else None
        record["beta"] = beta_of(param.bivector)
    elif sig.n in (2, 3):
        b, sign = decompose_low_dim(s)
        record["branch"] = "low"
        record["b"] = list(b.coeffs)
        record["sign"] = sign
        record["lambda"] = None
        record["rho"] = None
        record["beta"] = beta_of(b)
    else:
        raise UsageError("decompose requires a signature with p + q in (2, 3, 4)")
    _emit(record, args)
    return 0


def cmd_verify(args) -> int:
    sig = args.signature
    if (args.s is None) == (args.p is None):
        raise UsageError("provide exactly one of --s (spin element) or --p (matrix)")
    if args.s is not None:
        value = parse(args.s, sig)
        odd, group = spin_residuals(value)
        passed = odd <= args.tolerance and group <= args.tolerance
        record = {
            "command": "verify",
            "kind": "spin",
            "signature": _sig_text(sig),
            "odd_residual": odd,
            "group_residual": group,
            "tolerance": args.tolerance,
            "passed": passed,
        }
    else:
        matrix = OrthoMatrix(sig, np.array(args.p, dtype=float))
        report = verify_orthogonal(matrix, args.tolerance)
        passed = report.in_identity_component
        record = {
            "command": "verify",
            "kind": "matrix",
            "signature": _sig_text(sig),
            "metric_residual": report.metric_residual,
            "det_residual": report.det_residual,
            "block_det": report.block_det,
            "component_positive": report.component_positive,
            "tolerance": args.tolerance,
            "passed": passed,
        }
    _emit(record, args)
    return 0 if passed else 1


def cmd_sample(args) -> int:
    rng = np.random.default_rng(args.seed)
    for index in range(args.count):
        element = random_spin_element(args.signature, rng, args.factors)
        record = {
            "command": "sample",
            "signature": _sig_text(args.signature),
            "seed": args.seed,
            "index": index,
            "factors": args.factors,
            "spin": serialize(element.value),
            "trace": element.trace,
        }
        _emit(record, args)
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--signature",
        type=_parse_signature,
        default=Signature(1, 3),
        metavar="P,Q",
        help="algebra signature as 'p,q' (default: 1,3)",
    )
    common.add_argument(
        "--format",
        choices=("text", "json"),
        default="text",
        help="output mode: human-readable text or JSON records (default: text)",
    )
    common.add_argument(
        "--tolerance",
        type=float,
        default=DEFAULT_TOL,
        metavar="TOL",
        help=f"absolute tolerance for verification verdicts (default: {DEFAULT_TOL})",
    )
    common.add_argument(
        "--seed", type=int, default=0, help="seed for random sampling (default: 0)"
    )

    parser = argparse.ArgumentParser(
        prog="cliffspin",
        description="Spinor-group parametrisation and rotation-matrix tools for Cl(p,q).",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("exp", parents=[common], help="exterior exponential of a bivector")
    sp.add_argument("--b", type=_parse_floats, required=True, metavar="B12,B13,...")
    sp.set_defaults(func=cmd_exp)

    sp = sub.add_parser("spin", parents=[common], help="parametrise a spin element")
    sp.add_argument("--b", type=_parse_floats, required=True, metavar="B12,B13,...")
    sp.add_argument("--sign", type=_parse_sign, default=1)
    sp.add_argument("--branch", choices=("auto", "regular", "adjoint", "low"), default="auto")
    sp.set_defaults(func=cmd_spin)

    sp = sub.add_parser("rotate", parents=[common], help="rotation matrix of a spin element")
    sp.add_argument("--s", metavar="MV", help="spin element in multivector text form")
    sp.add_argument("--b", type=_parse_floats, metavar="B12,B13,...")
    sp.add_argument("--sign", type=_parse_sign, default=1)
    sp.add_argument("--branch", choices=("auto", "regular", "adjoint", "low"), default="auto")
    sp.set_defaults(func=cmd_rotate)

    sp = sub.add_parser("decompose", parents=[common], help="recover branch, B and sign")
    sp.add_argument("--s", required=True, metavar="MV")
    sp.set_defaults(func=cmd_decompose)

    sp = sub.add_parser("verify", parents=[common], help="check group membership")
    sp.add_argument("--s", metavar="MV")
    sp.add_argument("--p", type=_parse_matrix, metavar="R1C1,..;R2C1,..")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("sample", parents=[common], help="seeded random spin elements")
    sp.add_argument("--count", type=int, default=1)
    sp.add_argument("--factors", type=int, default=3)
    sp.set_defaults(func=cmd_sample)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.tolerance <= 0:
        parser.error("tolerance must be positive")
    try:
        return args.func(args)
    except (UsageError, MvParseError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except SpinParamError as exc:
        if args.format == "json":
            print(json.dumps({"error": exc.code, "message": str(exc)}))
        else:
            print(f"{exc.code}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
