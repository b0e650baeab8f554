"""Command-line front end.

Exit codes: 0 success, 1 verification mismatch, 2 bad arguments,
3 numeric failure in the root finder.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from contextlib import contextmanager
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, TextIO

from fibdet.closed_form import (
    alpha_period_analysis,
    beta_tail_analysis,
    classify,
    closed_det_original,
    closed_det_tilde,
    radical,
)
from fibdet.det import determinant
from fibdet.errors import AnalysisError, ConvergenceError, ParameterError
from fibdet.matrices import build_original_matrix, build_tilde_matrix
from fibdet.recurrence import (
    Params,
    classic_fibonacci,
    miles_sequence,
    original_sequence,
    tilde_sequence,
)
from fibdet.series import (
    MAX_NUMERIC_DEGREE,
    char_poly_eval,
    find_roots,
    h_coefficients,
    product_formula_det,
    schur_h_check,
    verify_root_identities,
)

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE, EXIT_NUMERIC = 0, 1, 2, 3

SWEEP_COLUMNS = ("k", "l", "j", "brute_det", "closed_det", "case", "match")
DERIVATION_COLUMNS = ("k", "l", "check", "residual", "tol", "status")


@dataclass(frozen=True)
class SweepConfig:
    k_range: range
    l_range: range
    j_range: range
    tol: float = 1e-8
    output_format: str = "table"
    output_path: Optional[str] = None
    init: str = "tilde"


def parse_range(text: str) -> range:
    """``"2..5"`` -> range(2, 6); a bare integer is a one-element range."""
    try:
        if ".." in text:
            lo, hi = (int(t) for t in text.split("..", 1))
        else:
            lo = hi = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected N or A..B, got {text!r}") from None
    if hi < lo:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return range(lo, hi + 1)


def positive_float(text: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None
    if not value > 0:
        raise argparse.ArgumentTypeError(f"must be positive, got {text!r}")
    return value


# -- output -----------------------------------------------------------------

@contextmanager
def _open_out(path: Optional[str]) -> Iterator[TextIO]:
    if path is None:
        yield sys.stdout
    else:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            yield fh


def _cell(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return f"{value:.3e}"
    if value is None:
        return "none"
    return str(value)


def write_table(out: TextIO, rows: list[dict], columns: Iterable[str]) -> None:
    columns = list(columns)
    cells = [[_cell(r[c]) for c in columns] for r in rows]
    widths = [max([len(c)] + [len(row[i]) for row in cells]) for i, c in enumerate(columns)]
    out.write("  ".join(c.rjust(w) for c, w in zip(columns, widths)).rstrip() + "\n")
    for row in cells:
        out.write("  ".join(v.rjust(w) for v, w in zip(row, widths)).rstrip() + "\n")


def _csv_writer(out: TextIO, columns: Iterable[str]) -> csv.DictWriter:
    writer = csv.DictWriter(out, fieldnames=list(columns), lineterminator="\n")
    writer.writeheader()
    return writer


def _csv_row(row: dict) -> dict:
    return {k: _cell(v) if isinstance(v, (bool, type(None))) else v for k, v in row.items()}


def emit(rows: Iterable[dict], columns: Iterable[str], fmt: str, out: TextIO) -> list[dict]:
    """Write rows in the chosen format; csv rows stream as they arrive."""
    columns = list(columns)
    if fmt == "csv":
        writer = _csv_writer(out, columns)
        seen = []
        for row in rows:
            writer.writerow(_csv_row(row))
            out.flush()
            seen.append(row)
        return seen
    rows = list(rows)
    if fmt == "json":
        json.dump(rows, out, indent=2)
        out.write("\n")
    else:
        write_table(out, rows, columns)
    return rows


# -- theorem sweeps ---------------------------------------------------------

def sweep_cell(k: int, ell: int, j: int, init: str = "tilde") -> dict:
    p = Params(k, ell)
    if init == "original":
        brute = determinant(build_original_matrix(p, j)).value
        closed = closed_det_original(p, j)
    else:
        brute = determinant(build_tilde_matrix(p, j)).value
        closed = closed_det_tilde(p, j)
    return {
        "k": k, "l": ell, "j": j,
        "brute_det": brute, "closed_det": closed,
        "case": str(classify(p)), "match": brute == closed,
    }


def _sweep_cell_args(args: tuple) -> dict:
    return sweep_cell(*args)


def iter_sweep(cfg: SweepConfig, jobs: int = 1, fail_fast: bool = False) -> Iterator[dict]:
    """Rows in (k, l, j) order, computed serially or on a process pool."""
    cells = [(k, ell, j, cfg.init) for k in cfg.k_range for ell in cfg.l_range for j in cfg.j_range]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for row in pool.map(_sweep_cell_args, cells, chunksize=4):
                yield row
                if fail_fast and not row["match"]:
                    pool.shutdown(cancel_futures=True)
                    return
    else:
        for cell in cells:
            row = sweep_cell(*cell)
            yield row
            if fail_fast and not row["match"]:
                return


def run_verify_theorem(cfg: SweepConfig, jobs: int = 1, fail_fast: bool = False,
                       mismatches_first: bool = True) -> tuple[int, list[dict]]:
    """Compare brute-force and closed-form determinants over a sweep.

    CSV and JSON output keep (k, l, j) order. The table format prints any
    mismatches in their own block ahead of the full listing.
    """
    with _open_out(cfg.output_path) as out:
        rows_iter = iter_sweep(cfg, jobs, fail_fast)
        if cfg.output_format == "table" and mismatches_first:
            rows = list(rows_iter)
            bad = [r for r in rows if not r["match"]]
            if bad:
                out.write(f"MISMATCHES ({len(bad)})\n")
                write_table(out, bad, SWEEP_COLUMNS)
                out.write("\n")
            write_table(out, rows, SWEEP_COLUMNS)
            out.write(f"{len(rows) - len(bad)}/{len(rows)} cells match\n")
        else:
            rows = emit(rows_iter, SWEEP_COLUMNS, cfg.output_format, out)
    status = EXIT_OK if all(r["match"] for r in rows) else EXIT_MISMATCH
    return status, rows


# -- derivation checks ------------------------------------------------------

SCHUR_SAMPLES = ((0, (2, 3, 5)), (1, (2, 3)), (2, (2, 3, 5)), (3, (1, -2, 4, 7)))


def derivation_rows(p: Params, tol: float) -> list[dict]:
    base = {"k": p.k, "l": p.ell}
    if p.dim > MAX_NUMERIC_DEGREE:
        return [{**base, "check": "all", "residual": None, "tol": tol, "status": "skipped"}]
    rows = []
    for c in verify_root_identities(p, tol):
        rows.append({**base, "check": c.name, "residual": c.residual, "tol": tol,
                     "status": "pass" if c.passed else "fail"})
    exact = determinant(build_tilde_matrix(p, 0)).value
    residual = abs(product_formula_det(p) - exact)
    rows.append({**base, "check": "product_formula", "residual": residual, "tol": tol,
                 "status": "pass" if residual < tol else "fail"})
    recip = find_roots(p).reciprocals
    schur = schur_h_check(p.ell - 1, recip, tol)
    rows.append({**base, "check": "schur_h_roots", "residual": schur.residual, "tol": tol,
                 "status": "pass" if schur.passed else "fail"})
    return rows


# -- argument parsing -------------------------------------------------------

def _add_output(sp: argparse.ArgumentParser, tol: bool = True) -> None:
    sp.add_argument("--format", choices=("table", "csv", "json"), default="table")
    sp.add_argument("--out", metavar="PATH", default=None, help="output file (default stdout)")
    if tol:
        sp.add_argument("--tol", type=positive_float, default=1e-8)


def _add_kl(sp: argparse.ArgumentParser) -> None:
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--l", type=int, required=True, dest="ell", metavar="L")


def _add_sweep(sp: argparse.ArgumentParser) -> None:
    sp.add_argument("--k", type=parse_range, required=True, metavar="A..B")
    sp.add_argument("--l", type=parse_range, required=True, dest="ell", metavar="A..B")
    sp.add_argument("--j", type=parse_range, default=range(0, 1), metavar="A..B")
    sp.add_argument("--init", choices=("tilde", "original"), default="tilde")
    sp.add_argument("--jobs", type=int, default=1)
    sp.add_argument("--fail-fast", action="store_true")
    _add_output(sp)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fibdet",
        description="Exact determinants of generalized Fibonacci (dying rabbit) matrices.",
    )
    sub = parser.add_subparsers(dest="command", metavar="COMMAND")
    sub.required = True

    sp = sub.add_parser("gen", help="print sequence terms")
    sp.add_argument("--seq", choices=("dying", "miles", "fibonacci"), default="dying")
    sp.add_argument("--k", type=int)
    sp.add_argument("--l", type=int, dest="ell", metavar="L")
    sp.add_argument("--init", choices=("tilde", "original"), default="tilde")
    sp.add_argument("--count", type=int, default=20)
    _add_output(sp, tol=False)

    sp = sub.add_parser("det", help="brute-force and closed-form determinant for one (k, l, j)")
    _add_kl(sp)
    sp.add_argument("--j", type=int, default=0)
    sp.add_argument("--init", choices=("tilde", "original"), default="tilde")
    sp.add_argument("--show-matrix", action="store_true")
    _add_output(sp)

    sp = sub.add_parser("table", help="determinant values over a (k, l, j) sweep")
    _add_sweep(sp)
    sp = sub.add_parser("verify-theorem", help="check the closed form over a sweep")
    _add_sweep(sp)

    sp = sub.add_parser("verify-derivation", help="numeric checks of the derivation chain")
    sp.add_argument("--k", type=parse_range, required=True, metavar="A..B")
    sp.add_argument("--l", type=parse_range, required=True, dest="ell", metavar="A..B")
    _add_output(sp)

    sp = sub.add_parser("series", help="coefficients h_m of the reciprocal-root series")
    _add_kl(sp)
    sp.add_argument("--m-max", type=int, default=10)
    _add_output(sp, tol=False)

    sp = sub.add_parser("roots", help="roots of the characteristic polynomial")
    _add_kl(sp)
    sp.add_argument("--tol", type=positive_float, default=1e-10)
    _add_output(sp, tol=False)

    sp = sub.add_parser("period", help="period of |det| in l for fixed k0")
    sp.add_argument("--k0", type=int, required=True)
    sp.add_argument("--l-max", type=int)
    _add_output(sp, tol=False)

    sp = sub.add_parser("tail", help="vanishing of |det| in k for fixed l0")
    sp.add_argument("--l0", type=int, required=True)
    sp.add_argument("--k-max", type=int)
    _add_output(sp, tol=False)
    return parser


def _validate(parser: argparse.ArgumentParser, args: argparse.Namespace) -> None:
    cmd = args.command
    if cmd in ("table", "verify-theorem", "verify-derivation"):
        if args.k.start < 2 or args.ell.start < 2:
            parser.error("k and l ranges must start at 2 or above")
        if cmd != "verify-derivation":
            if args.j.start < 0:
                parser.error("j range must be nonnegative")
            if args.jobs < 1:
                parser.error("--jobs must be >= 1")
    if cmd in ("det", "series", "roots"):
        if args.k < 2 or args.ell < 2:
            parser.error("--k and --l must be >= 2")
    if cmd == "det" and args.j < 0:
        parser.error("--j must be >= 0")
    if cmd == "series" and args.m_max < 0:
        parser.error("--m-max must be >= 0")
    if cmd == "gen":
        if args.count < 0:
            parser.error("--count must be >= 0")
        if args.seq == "dying" and (args.k is None or args.ell is None):
            parser.error("gen --seq dying needs --k and --l")
        if args.seq == "miles" and args.k is None:
            parser.error("gen --seq miles needs --k")


# -- subcommands ------------------------------------------------------------

def _cmd_gen(args) -> int:
    if args.seq == "fibonacci":
        values = classic_fibonacci(args.count)
    elif args.seq == "miles":
        values = miles_sequence(args.k, args.count)
    else:
        gen = original_sequence if args.init == "original" else tilde_sequence
        values = gen(Params(args.k, args.ell), args.count)
    rows = [{"n": n, "value": v} for n, v in enumerate(values)]
    with _open_out(args.out) as out:
        if args.format == "table":
            out.write(" ".join(str(v) for v in values) + "\n")
        else:
            emit(rows, ("n", "value"), args.format, out)
    return EXIT_OK


def _cmd_det(args) -> int:
    row = sweep_cell(args.k, args.ell, args.j, args.init)
    p = Params(args.k, args.ell)
    with _open_out(args.out) as out:
        if args.format == "table":
            if args.show_matrix:
                build = build_original_matrix if args.init == "original" else build_tilde_matrix
                rows = build(p, args.j).rows
                width = max(len(str(x)) for r in rows for x in r)
                for r in rows:
                    out.write(" ".join(str(x).rjust(width) for x in r) + "\n")
            out.write(
                f"k={row['k']} l={row['l']} j={row['j']} init={args.init} "
                f"brute={row['brute_det']} closed={row['closed_det']} "
                f"case={row['case']} match={_cell(row['match'])}\n"
            )
        else:
            emit([row], SWEEP_COLUMNS, args.format, out)
    return EXIT_OK if row["match"] else EXIT_MISMATCH


def _sweep_config(args) -> SweepConfig:
    return SweepConfig(args.k, args.ell, args.j, args.tol, args.format, args.out, args.init)


def _cmd_table(args) -> int:
    status, _ = run_verify_theorem(_sweep_config(args), args.jobs, args.fail_fast,
                                   mismatches_first=False)
    return status


def _cmd_verify_theorem(args) -> int:
    status, _ = run_verify_theorem(_sweep_config(args), args.jobs, args.fail_fast)
    return status


def _cmd_verify_derivation(args) -> int:
    rows = []
    for k in args.k:
        for ell in args.ell:
            rows.extend(derivation_rows(Params(k, ell), args.tol))
    for m, xs in SCHUR_SAMPLES:
        check = schur_h_check(m, xs, args.tol)
        rows.append({"k": None, "l": None, "check": f"schur_h m={m} xs={list(xs)}",
                     "residual": check.residual, "tol": args.tol,
                     "status": "pass" if check.passed else "fail"})
    with _open_out(args.out) as out:
        emit(rows, DERIVATION_COLUMNS, args.format, out)
    return EXIT_MISMATCH if any(r["status"] == "fail" for r in rows) else EXIT_OK


def _cmd_series(args) -> int:
    p = Params(args.k, args.ell)
    coeffs = h_coefficients(p, args.m_max).coeffs
    with _open_out(args.out) as out:
        if args.format == "table":
            out.write(f"h_m for k={p.k} l={p.ell}, m=0..{args.m_max}:\n")
            out.write(", ".join(str(c) for c in coeffs) + "\n")
        else:
            emit([{"m": m, "h": c} for m, c in enumerate(coeffs)], ("m", "h"), args.format, out)
    return EXIT_OK


def _cmd_roots(args) -> int:
    p = Params(args.k, args.ell)
    rs = find_roots(p, args.tol)
    rows = [{"i": i, "real": r.real, "imag": r.imag, "abs": abs(r),
             "residual": abs(char_poly_eval(p, r))} for i, r in enumerate(rs.roots)]
    with _open_out(args.out) as out:
        if args.format == "table":
            for r in rows:
                out.write(f"{r['i']:3d}  {r['real']: .15f}  {r['imag']: .15f}i  "
                          f"|r|={r['abs']:.12f}  |g(r)|={r['residual']:.2e}\n")
            out.write(f"residual_bound={rs.residual_bound:.3e} separation={rs.separation:.6f} "
                      f"iterations={rs.iterations}\n")
        else:
            emit(rows, ("i", "real", "imag", "abs", "residual"), args.format, out)
    return EXIT_OK


def _cmd_period(args) -> int:
    if args.k0 < 2:
        raise ParameterError(f"k0 must be >= 2, got {args.k0}")
    l_max = args.l_max if args.l_max is not None else 2 + 3 * args.k0 * radical(args.k0 - 1)
    report = alpha_period_analysis(args.k0, l_max)
    row = {"k0": report.k0, "period": report.period, "bound": report.bound,
           "divides": report.divides_bound,
           "values": "".join(str(v) for v in report.observed_values)}
    with _open_out(args.out) as out:
        if args.format == "table":
            out.write(f"k0={row['k0']} period={_cell(row['period'])} bound={row['bound']} "
                      f"divides={_cell(row['divides'])}\n")
            out.write(f"alpha_l for l=2..: {row['values']}\n")
        else:
            emit([row], ("k0", "period", "bound", "divides", "values"), args.format, out)
    return EXIT_OK if report.divides_bound else EXIT_MISMATCH


def _cmd_tail(args) -> int:
    k_max = args.k_max if args.k_max is not None else args.l0 + 10
    report = beta_tail_analysis(args.l0, k_max)
    row = {"l0": report.l0, "k_max": k_max, "tail_zero_from": report.tail_zero_from,
           "nonzero_k": " ".join(str(k) for k in report.nonzero_ks())}
    with _open_out(args.out) as out:
        if args.format == "table":
            out.write(f"l0={row['l0']} k_max={k_max} tail_zero_from={_cell(row['tail_zero_from'])} "
                      f"nonzero_k=[{row['nonzero_k']}]\n")
            if report.tail_zero_from is None:
                out.write("note: values do not die out within the window\n")
        else:
            emit([row], ("l0", "k_max", "tail_zero_from", "nonzero_k"), args.format, out)
    return EXIT_OK


COMMANDS = {
    "gen": _cmd_gen,
    "det": _cmd_det,
    "table": _cmd_table,
    "verify-theorem": _cmd_verify_theorem,
    "verify-derivation": _cmd_verify_derivation,
    "series": _cmd_series,
    "roots": _cmd_roots,
    "period": _cmd_period,
    "tail": _cmd_tail,
}


def run_subcommand(name: str, args: list[str]) -> int:
    return main([name, *args])


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else EXIT_OK
    try:
        _validate(parser, args)
    except SystemExit as exc:
        return int(exc.code)
    try:
        return COMMANDS[args.command](args)
    except (ParameterError, AnalysisError) as exc:
        print(f"fibdet {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ConvergenceError as exc:
        print(f"fibdet {args.command}: numeric failure: {exc}", file=sys.stderr)
        return EXIT_NUMERIC


def entry_point() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry_point()
