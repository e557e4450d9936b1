"""Command-line interface.

Exit codes: 0 success, 1 invariant failure, 2 invalid state, 3 I/O or
malformed input, 4 unsupported basis/dimension combination.
"""
from __future__ import annotations

import argparse
import contextlib
import io
import json
import sys
from typing import Sequence

import numpy as np

from .checks import run_checks
from .errors import InvalidStateError, UnsupportedDimensionError
from .sun import DensityMatrix, make_generators, structure_constants, toy_admissible
from .wigner import toy_model, wigner_direct

EXIT_OK, EXIT_CHECK, EXIT_STATE, EXIT_INPUT, EXIT_UNSUPPORTED = 0, 1, 2, 3, 4


class CliError(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


class _Parser(argparse.ArgumentParser):
    """Argument errors are malformed input (exit 3), not the argparse default 2."""

    def error(self, message: str):  # type: ignore[override]
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def _u64(text: str) -> int:
    v = int(text)
    if not 0 <= v < 2**64:
        raise argparse.ArgumentTypeError("seed must be an unsigned 64-bit integer")
    return v


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--n", type=int, help="dimension N")
    common.add_argument("--out", choices=("csv", "json"), help="output format")
    common.add_argument("--output", help="output file (default: stdout)")

    parser = _Parser(prog="dwigner", description="Discrete phase-space numerics for N-level systems.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    w = sub.add_parser("wigner", parents=[common], help="Wigner grid of a density matrix")
    w.add_argument("--rho", required=True, help='JSON file {"n": N, "re": [[..]], "im": [[..]]}')
    w.add_argument("--basis", choices=("g", "delta"), default="g")

    g = sub.add_parser("generators", parents=[common], help="SU(N) generator matrices")
    g.add_argument("--order", choices=("gellmann",), default="gellmann")

    c = sub.add_parser("constants", parents=[common], help="structure constants")
    c.add_argument("--tensor", choices=("f", "d"), default="f")
    c.add_argument("--order", choices=("gellmann",), default="gellmann")

    t = sub.add_parser("toy", parents=[common], help="equal-population qutrit")
    for name in ("--p1", "--p2", "--p3"):
        t.add_argument(name, type=float, default=0.0)

    k = sub.add_parser("check", parents=[common], help="run the invariant suite")
    k.add_argument("--seed", type=_u64, default=0)
    return parser


# ---------------------------------------------------------------------------
# formatting


def _fmt(x: float) -> str:
    return "%.17g" % x


def grid_csv(values: np.ndarray, mu_labels: Sequence[int], nu_labels: Sequence[int]) -> str:
    lines = ["mu,nu,w"]
    for i, mu in enumerate(mu_labels):
        for j, nu in enumerate(nu_labels):
            lines.append(f"{mu},{nu},{_fmt(float(values[i, j]))}")
    return "\n".join(lines) + "\n"


def _dump(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _emit(text: str, path: str | None) -> None:
    if path is None:
        sys.stdout.write(text)
        return
    try:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    except OSError as exc:
        raise CliError(EXIT_INPUT, f"cannot write {path}: {exc}") from exc


def _require_n(args, default: int | None = None) -> int:
    n = args.n if args.n is not None else default
    if n is None:
        raise CliError(EXIT_INPUT, "--n is required")
    if n < 2:
        raise CliError(EXIT_INPUT, f"N must be >= 2, got {n}")
    return n


# ---------------------------------------------------------------------------
# density-matrix input


def load_density(path: str, n: int | None = None) -> DensityMatrix:
    """Read and validate a density matrix file.

    Raises
    ------
    CliError
        Code 3 for unreadable/malformed files, code 2 for invalid states.
    """
    try:
        with open(path, encoding="utf-8") as fh:
            data = json.load(fh)
    except (OSError, ValueError) as exc:
        raise CliError(EXIT_INPUT, f"cannot read {path}: {exc}") from exc
    try:
        size = data["n"]
        re = np.array(data["re"], dtype=float)
        im = np.array(data["im"], dtype=float)
    except (KeyError, TypeError, ValueError) as exc:
        raise CliError(EXIT_INPUT, f"malformed density matrix file: {exc}") from exc
    if not isinstance(size, int) or isinstance(size, bool) or size < 2:
        raise CliError(EXIT_INPUT, f"field n must be an integer >= 2, got {size!r}")
    if re.shape != (size, size) or im.shape != (size, size):
        raise CliError(EXIT_INPUT, f"re/im must be {size}x{size} arrays")
    if n is not None and n != size:
        raise CliError(EXIT_INPUT, f"--n {n} does not match file dimension {size}")
    try:
        return DensityMatrix(re + 1j * im)
    except InvalidStateError as exc:
        raise CliError(EXIT_STATE, f"invalid state: {exc}") from exc


# ---------------------------------------------------------------------------
# subcommands


def cmd_wigner(args) -> int:
    rho = load_density(args.rho, args.n)
    n = rho.dim
    tag = "Delta" if args.basis == "delta" else "G"
    if tag == "Delta" and n % 2 == 0:
        raise CliError(EXIT_UNSUPPORTED, f"delta basis needs odd N, got {n}")
    grid = wigner_direct(rho, tag)
    if tag == "Delta":
        ell = (n - 1) // 2
        labels = list(range(-ell, ell + 1))
        order = [k % n for k in labels]
        values = grid.values[np.ix_(order, order)]
    else:
        labels = list(range(n))
        values = grid.values
    if (args.out or "csv") == "csv":
        text = grid_csv(values, labels, labels)
    else:
        text = _dump({"n": n, "basis": tag, "labels": labels, "values": values.tolist()})
    _emit(text, args.output)
    return EXIT_OK


def cmd_generators(args) -> int:
    n = _require_n(args)
    gens = make_generators(n, args.order)
    items = [
        {
            "index": i + 1,
            "label": str(idx),
            "re": m.real.tolist(),
            "im": m.imag.tolist(),
        }
        for i, (idx, m) in enumerate(gens.items)
    ]
    _emit(_dump({"n": n, "order": args.order, "generators": items}), args.output)
    return EXIT_OK


def cmd_constants(args) -> int:
    n = _require_n(args)
    sc = structure_constants(make_generators(n, args.order))
    table = sc.f_sparse if args.tensor == "f" else sc.d_sparse
    entries = [[i, j, k, v] for (i, j, k), v in sorted(table.items())]
    if args.out == "csv":
        lines = ["i,j,k,value"] + [f"{i},{j},{k},{_fmt(v)}" for i, j, k, v in entries]
        text = "\n".join(lines) + "\n"
    else:
        text = _dump({"n": n, "tensor": args.tensor, "entries": entries})
    _emit(text, args.output)
    return EXIT_OK


def cmd_toy(args) -> int:
    if args.n is not None and args.n != 3:
        raise CliError(EXIT_UNSUPPORTED, "the toy model is defined for N=3 only")
    ps = (args.p1, args.p2, args.p3)
    if not toy_admissible(*ps):
        raise CliError(EXIT_STATE, "parameters violate p_i >= 0 and p1^2 + p2^2 + p3^2 <= 1/3")
    res = toy_model(ps)
    vals = res.grid.values
    if not res.positive:
        print(f"warning: toy matrix is not positive semidefinite "
              f"(min eigenvalue {res.min_eigenvalue:.6g})", file=sys.stderr)
    if args.out == "csv":
        text = grid_csv(vals, range(3), range(3))
    else:
        text = _dump({
            "n": 3,
            "p": list(ps),
            "values": vals.tolist(),
            "min_value": float(vals.min()),
            "max_value": float(vals.max()),
            "purity": res.purity,
            "bloch_norm": res.bloch_norm,
            "min_eigenvalue": res.min_eigenvalue,
            "positive_semidefinite": res.positive,
        })
    _emit(text, args.output)
    return EXIT_OK


def cmd_check(args) -> int:
    n = _require_n(args, default=3)
    results = run_checks(n, args.seed)
    lines = [f"check N={n} seed={args.seed}"]
    for r in results:
        status = "PASS" if r.passed else "FAIL"
        lines.append(f"{status} {r.name} max_dev={r.deviation:.3e} tol={r.tol:.0e}")
    failed = sum(not r.passed for r in results)
    lines.append(f"{len(results) - failed}/{len(results)} passed")
    _emit("\n".join(lines) + "\n", args.output)
    return EXIT_CHECK if failed else EXIT_OK


COMMANDS = {
    "wigner": cmd_wigner,
    "generators": cmd_generators,
    "constants": cmd_constants,
    "toy": cmd_toy,
    "check": cmd_check,
}


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return COMMANDS[args.command](args)
    except CliError as exc:
        print(f"dwigner: {exc}", file=sys.stderr)
        return exc.code
    except UnsupportedDimensionError as exc:
        print(f"dwigner: {exc}", file=sys.stderr)
        return EXIT_UNSUPPORTED
    except ValueError as exc:
        print(f"dwigner: {exc}", file=sys.stderr)
        return EXIT_INPUT


def run(argv: Sequence[str] | None = None) -> tuple[int, str, str]:
    """Run :func:`main` capturing stdout and stderr (used by tests)."""
    out, err = io.StringIO(), io.StringIO()
    with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
        code = main(argv)
    return code, out.getvalue(), err.getvalue()


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
