"""Command-line frontend: basis evaluation, kernel values, Toeplitz
eigenvalues and blocks, and the self-verification suites.

Output is machine-readable (JSON or CSV) and byte-deterministic: field order
is fixed and every float is rendered with 17 significant digits.  Complex
numbers on the command line are written as a+bi with no spaces; values that
start with a minus sign need the --flag=value form.

Exit codes: 0 success, 1 computation or verification failure, 2 bad arguments.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass

import numpy as np

from .fock_spaces import (SpaceId, kernel_partial_sum, kernel_poly, kernel_true)
from .hermite_basis import HermiteIndex, b_eval, basis_json_dict
from .toeplitz import (DEFAULT_D_MAX, DEFAULT_P_MAX, lambda_seq,
                       symbol_from_spec, toeplitz_block)
from .verify import SUITE_NAMES, run_suites


@dataclass(frozen=True)
class RunConfig:
    """Validated knobs shared by the computational commands."""

    n: int = 1
    p_truncation: int = DEFAULT_P_MAX
    d_max: int = DEFAULT_D_MAX
    radial_nodes: int = 64
    angles: int = 64
    rel_tol: float = 1e-9
    out_format: str = "json"
    path: str | None = None

    def __post_init__(self):
        if min(self.p_truncation, self.d_max, self.radial_nodes, self.angles) < 1:
            raise ValueError("truncations and rule sizes must be positive")
        if not 0.0 < self.rel_tol <= 1e-2:
            raise ValueError("rel_tol must lie in (0, 1e-2]")


def format_float(x: float) -> str:
    """Fixed 17-significant-digit rendering used for all emitted floats."""
    return format(float(x), ".17g")


def dumps_fixed(obj) -> str:
    """Deterministic JSON: insertion-ordered dicts, floats at 17 digits."""
    if isinstance(obj, dict):
        inner = ",".join(f"{dumps_fixed(str(k))}:{dumps_fixed(v)}"
                         for k, v in obj.items())
        return "{" + inner + "}"
    if isinstance(obj, (list, tuple)):
        return "[" + ",".join(dumps_fixed(v) for v in obj) + "]"
    if isinstance(obj, bool):
        return "true" if obj else "false"
    if isinstance(obj, str):
        escaped = obj.replace("\\", "\\\\").replace('"', '\\"')
        return f'"{escaped}"'
    if isinstance(obj, (int, np.integer)):
        return str(int(obj))
    if isinstance(obj, (float, np.floating)):
        return format_float(float(obj))
    if obj is None:
        return "null"
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def parse_complex(text: str) -> complex:
    """Parse a+bi with no spaces (also plain reals and bare i terms)."""
    try:
        return complex(text.replace("i", "j").replace("I", "j"))
    except ValueError as exc:
        raise ValueError(f"cannot parse complex number {text!r}") from exc


def _emit(text: str, path: str | None) -> None:
    if path:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_basis(args) -> int:
    idx = HermiteIndex(args.p, args.q)
    record: dict = {"p": args.p, "q": args.q}
    if args.eval is not None:
        z = parse_complex(args.eval)
        value = b_eval(idx, z)
        record["z"] = [z.real, z.imag]
        record["value_re"] = value.real
        record["value_im"] = value.imag
    if args.coeffs or args.eval is None:
        record.update(basis_json_dict(idx))
    _emit(dumps_fixed(record) + "\n", args.out)
    return 0


def cmd_kernel(args) -> int:
    series = args.series if args.series is not None else DEFAULT_P_MAX
    config = RunConfig(n=args.n, p_truncation=series, path=args.out)
    kind = "poly" if args.kind == "poly" else "true_poly"
    z, w = parse_complex(args.z), parse_complex(args.w)
    closed = kernel_poly(config.n, z, w) if kind == "poly" \
        else kernel_true(config.n, z, w)
    record = {
        "n": config.n,
        "kind": args.kind,
        "z": [z.real, z.imag],
        "w": [w.real, w.imag],
        "value_re": closed.real,
        "value_im": closed.imag,
    }
    if args.series is not None:
        partial = kernel_partial_sum(SpaceId(kind, config.n), z, w,
                                     config.p_truncation)
        record["series_re"] = partial.real
        record["series_im"] = partial.imag
        record["series_residual"] = abs(partial - closed)
    _emit(dumps_fixed(record) + "\n", config.path)
    return 0


def _eigenvalues_csv(seq) -> str:
    lines = ["p,re,im"]
    for p, v in enumerate(seq.values):
        lines.append(f"{p},{format_float(v.real)},{format_float(v.imag)}")
    return "\n".join(lines) + "\n"


def cmd_toeplitz(args) -> int:
    config = RunConfig(n=args.n, p_truncation=args.pmax, d_max=args.dmax,
                       rel_tol=args.rel_tol, out_format=args.format,
                       path=args.out)
    symbol = symbol_from_spec(args.symbol)
    if args.blocks:
        blocks = []
        for d in range(-config.n + 1, config.d_max + 1):
            block = toeplitz_block(symbol, config.n, d, rel_tol=config.rel_tol)
            blocks.append([[[v.real, v.imag] for v in row] for row in block])
        record = {"n": config.n, "symbol": symbol.name, "d_min": -config.n + 1,
                  "d_max": config.d_max, "blocks": blocks}
        _emit(dumps_fixed(record) + "\n", config.path)
        return 0
    seq = lambda_seq(symbol, config.n, config.p_truncation,
                     rel_tol=config.rel_tol)
    if config.out_format == "json":
        record = {"n": config.n, "symbol": symbol.name,
                  "p_max": config.p_truncation,
                  "values": [[v.real, v.imag] for v in seq.values]}
        _emit(dumps_fixed(record) + "\n", config.path)
    else:
        _emit(_eigenvalues_csv(seq), config.path)
    return 0


def cmd_verify(args) -> int:
    names = list(SUITE_NAMES) if args.suite == "all" else [args.suite]
    results = run_suites(names, quick=args.quick, corrupt=args.inject_corruption)
    lines = [r.line() for r in results]
    passed = sum(r.passed for r in results)
    lines.append(f"{passed}/{len(results)} checks passed")
    _emit("\n".join(lines) + "\n", args.out)
    return 0 if passed == len(results) else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="polyfock",
        description="polyanalytic Fock space computations")
    sub = parser.add_subparsers(dest="command", required=True)

    p_basis = sub.add_parser("basis", help="evaluate or print a basis function")
    p_basis.add_argument("--p", type=int, required=True)
    p_basis.add_argument("--q", type=int, required=True)
    p_basis.add_argument("--eval", type=str, default=None, metavar="Z",
                         help="evaluate at the complex point a+bi")
    p_basis.add_argument("--coeffs", action="store_true",
                         help="include exact coefficients")
    p_basis.add_argument("--out", type=str, default=None)
    p_basis.set_defaults(func=cmd_basis)

    p_kernel = sub.add_parser("kernel", help="reproducing kernel values")
    p_kernel.add_argument("--n", type=int, required=True)
    p_kernel.add_argument("--kind", choices=("poly", "true"), required=True)
    p_kernel.add_argument("--z", type=str, required=True)
    p_kernel.add_argument("--w", type=str, required=True)
    p_kernel.add_argument("--series", type=int, default=None, metavar="P",
                          help="also report the P-term basis series")
    p_kernel.add_argument("--out", type=str, default=None)
    p_kernel.set_defaults(func=cmd_kernel)

    p_toe = sub.add_parser("toeplitz", help="radial Toeplitz data")
    p_toe.add_argument("--n", type=int, required=True)
    p_toe.add_argument("--symbol", type=str, required=True,
                       help="const:c | indicator:u | gauss:s | rational")
    p_toe.add_argument("--pmax", type=int, default=DEFAULT_P_MAX)
    p_toe.add_argument("--blocks", action="store_true",
                       help="emit block JSON instead of eigenvalue CSV")
    p_toe.add_argument("--dmax", type=int, default=DEFAULT_D_MAX)
    p_toe.add_argument("--format", choices=("csv", "json"), default="csv")
    p_toe.add_argument("--rel-tol", type=float, default=1e-9)
    p_toe.add_argument("--out", type=str, default=None)
    p_toe.set_defaults(func=cmd_toeplitz)

    p_verify = sub.add_parser("verify", help="run self-verification suites")
    p_verify.add_argument("--suite", choices=("all",) + SUITE_NAMES,
                          default="all")
    p_verify.add_argument("--quick", action="store_true")
    p_verify.add_argument("--inject-corruption", action="store_true",
                          help=argparse.SUPPRESS)  # negative-control test hook
    p_verify.add_argument("--out", type=str, default=None)
    p_verify.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OverflowError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
