"""Command-line front end.

Exit codes: 0 success, 1 failed check, 2 usage error, 3 empty solver result.
The output format defaults to markdown on a terminal and JSON otherwise;
``CANONICAL_COVERS_FORMAT`` overrides the default and ``--format`` wins over both.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys

from .catalog import DEFAULT_CATALOG, Catalog, OutOfRangeError, pair_invariants
from .numeric import LinForm, fmt_rational
from .pipeline import PipelineError, run_pipeline, symbolic_pipeline
from .quotients import solve_fixed_point_profile
from .sections import WeightConfig, format_monomial, invariant_monomial_basis, parse_residues
from .verify import verify

FORMATS = ("json", "csv", "markdown")
ENV_FORMAT = "CANONICAL_COVERS_FORMAT"

TABLE_COLUMNS = ("k", "K2_X", "chi_X", "K2_Y", "chi_Y", "pg_Y", "K2_T", "pg_T", "sigma_a1", "checks_passed")


class UsageError(Exception):
    pass


def resolve_format(flag: str | None, stream=None) -> str:
    if flag:
        return flag
    env = os.environ.get(ENV_FORMAT)
    if env in FORMATS:
        return env
    stream = stream or sys.stdout
    return "markdown" if getattr(stream, "isatty", lambda: False)() else "json"


def cell(v, csv_mode: bool = False) -> str:
    if isinstance(v, str):
        return v
    if isinstance(v, LinForm):
        return v.expr() if csv_mode else str(v)
    if isinstance(v, bool) or v is None:
        return str(v)
    if isinstance(v, int):
        return str(v)
    return fmt_rational(v)


def dump_json(obj) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"


def dump_csv(header, rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    for r in rows:
        w.writerow([cell(v, csv_mode=True) for v in r])
    return buf.getvalue()


def dump_markdown(header, rows) -> str:
    lines = ["| " + " | ".join(header) + " |", "|" + "---|" * len(header)]
    lines += ["| " + " | ".join(cell(v) for v in r) + " |" for r in rows]
    return "\n".join(lines) + "\n"


def parse_k_range(text: str) -> list[int]:
    """``"3"``, ``"1..5"`` or ``"1,4,7"``."""
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            ks = list(range(int(lo), int(hi) + 1))
        else:
            ks = [int(p) for p in text.split(",")]
    except ValueError:
        raise UsageError(f"malformed k range {text!r}") from None
    if not ks:
        raise UsageError(f"empty k range {text!r}")
    if min(ks) < 1:
        raise UsageError("k must be >= 1")
    return ks


def parse_pair(text: str) -> tuple[int, int]:
    vals = parse_residues(text)
    if len(vals) != 2:
        raise ValueError(f"expected two residues, got {text!r}")
    return vals


# commands -------------------------------------------------------------------

SURFACE_FIELDS = (("q", "q"), ("pg", "p_g"), ("K2", "K2"), ("chi", "chi"), ("e", "e"))


def cmd_pair(args, catalog: Catalog, out) -> int:
    if args.symbolic == (args.n is not None):
        raise UsageError("give exactly one of --n and --symbolic")
    try:
        X, S = pair_invariants(args.id, None if args.symbolic else args.n, catalog=catalog)
    except (OutOfRangeError, KeyError) as exc:
        raise UsageError(str(exc)) from None
    fmt = resolve_format(args.format, out)
    surfaces = (("X", X), ("S", S))
    if fmt == "json":
        out.write(dump_json({"pair": args.id, "n": args.n,
                             "surfaces": {name: s.to_json() for name, s in surfaces}}))
    elif fmt == "csv":
        out.write(dump_csv(["surface"] + [f for f, _ in SURFACE_FIELDS],
                           [[name] + [getattr(s, a) for _, a in SURFACE_FIELDS] for name, s in surfaces]))
    else:
        where = "symbolic in n" if args.symbolic else f"n = {args.n}"
        out.write(f"## Generating pair {args.id} ({where})\n\n")
        for name, s in surfaces:
            if args.symbolic:
                for f, a in SURFACE_FIELDS:
                    out.write(f"{f}_{name} = {cell(getattr(s, a))}\n")
            else:
                out.write(f"{name}: " + " ".join(f"{f}={cell(getattr(s, a))}" for f, a in SURFACE_FIELDS) + "\n")
    return 0


def _table_row(rep) -> list:
    passed = sum(c.passed for c in rep.checks) + sum(g.ok for g in rep.geography)
    total = len(rep.checks) + len(rep.geography)
    return [
        rep.k if rep.k is not None else "k",
        rep.X.K2, rep.X.chi, rep.Y.K2, rep.Y.chi, rep.Y.p_g, rep.T.K2, rep.T.p_g,
        rep.sigma_locus.a1_count, f"{passed}/{total}",
    ]


def cmd_table(args, catalog: Catalog, out) -> int:
    if args.symbolic:
        runs = [lambda: symbolic_pipeline(args.example, catalog=catalog)]
    else:
        ks = parse_k_range(args.k)
        runs = [lambda k=k: run_pipeline(args.example, k, catalog=catalog) for k in ks]
    reports = []
    for run in runs:
        try:
            reports.append(run())
        except PipelineError as exc:
            sys.stderr.write(f"error: {exc}\n")
            return 1
    fmt = resolve_format(args.format, out)
    if fmt == "json":
        out.write(dump_json({"example": args.example, "reports": [r.to_json() for r in reports]}))
    else:
        rows = [_table_row(r) for r in reports]
        out.write(dump_csv(TABLE_COLUMNS, rows) if fmt == "csv" else dump_markdown(TABLE_COLUMNS, rows))
    bad = [(r.example_id, r.k, r.failures()) for r in reports if not r.ok]
    for ex, k, names in bad:
        sys.stderr.write(f"failed checks (example {ex}, k={k}): {', '.join(names)}\n")
    return 1 if bad else 0


def cmd_solve(args, catalog: Catalog, out) -> int:
    if args.fixed < 0:
        raise UsageError("--fixed must be nonnegative")
    sols = solve_fixed_point_profile(args.k2, args.chi, args.fixed,
                                     beta_min=args.beta_min, require_K2_Y_nonneg=args.require_k2_nonneg)
    fmt = resolve_format(args.format, out)
    if fmt == "json":
        out.write(dump_json({"profiles": [{"alpha": p.alpha, "beta": p.beta} for p in sols]}))
    elif fmt == "csv":
        out.write(dump_csv(["alpha", "beta"], [[p.alpha, p.beta] for p in sols]))
    else:
        for p in sols:
            out.write(f"{p}\n")
        if not sols:
            out.write("no feasible (alpha, beta)\n")
    return 0 if sols else 3


def cmd_basis(args, catalog: Catalog, out) -> int:
    try:
        weights = parse_residues(args.weights)
        u0, u1 = parse_pair(args.u)
        cfg = WeightConfig(weights, u0, u1, args.degree)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    basis = invariant_monomial_basis(cfg)
    lines = [format_monomial(m, cfg.degree) for m in basis]
    fmt = resolve_format(args.format, out)
    if fmt == "json":
        out.write(dump_json({"weights": list(weights), "u": [u0, u1], "degree": cfg.degree,
                             "elements": lines, "dim": len(basis)}))
    elif fmt == "csv":
        out.write(dump_csv(["section", "a", "b"], [[i, a, cfg.degree - a] for i, a in basis]))
    else:
        out.write("".join(line + "\n" for line in lines))
        out.write(f"dim = {len(basis)}\n")
    return 0


def cmd_verify(args, catalog: Catalog, out) -> int:
    if args.k_max < 1:
        raise UsageError("--k-max must be >= 1")
    res = verify(args.k_max, catalog)
    fmt = resolve_format(args.format, out)
    if fmt == "json":
        out.write(dump_json(res.to_json()))
    else:
        rows = [[g, p, f] for g, (p, f) in res.counts.items()]
        out.write(dump_csv(["check", "passed", "failed"], rows) if fmt == "csv"
                  else dump_markdown(["check", "passed", "failed"], rows))
        if res.ok:
            out.write("all checks passed\n")
        else:
            out.write(f"{len(res.failures)} check(s) failed\n")
            sys.stderr.write(dump_json(res.failures))
    return 0 if res.ok else 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="canonical-covers", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, func, help):
        sp = sub.add_parser(name, help=help)
        sp.add_argument("--format", choices=FORMATS)
        sp.set_defaults(func=func)
        return sp

    sp = add("pair", cmd_pair, "invariants of a generating pair series")
    sp.add_argument("--id", required=True, choices=("I", "II", "III"))
    sp.add_argument("--n", type=int)
    sp.add_argument("--symbolic", action="store_true")

    sp = add("table", cmd_table, "pipeline table for an example, one row per k")
    sp.add_argument("--example", type=int, required=True, choices=(1, 2, 3))
    sp.add_argument("--k", default="1..5", help="k, a..b, or a comma list")
    sp.add_argument("--symbolic", action="store_true")

    sp = add("solve", cmd_solve, "feasible fixed-point profiles (alpha, beta)")
    sp.add_argument("--k2", type=int, required=True)
    sp.add_argument("--chi", type=int, required=True)
    sp.add_argument("--fixed", type=int, required=True)
    sp.add_argument("--beta-min", type=int, default=0)
    sp.add_argument("--require-k2-nonneg", action="store_true")

    sp = add("basis", cmd_basis, "invariant monomial basis")
    sp.add_argument("--weights", required=True)
    sp.add_argument("--u", required=True)
    sp.add_argument("--degree", type=int, required=True)

    sp = add("verify", cmd_verify, "run every check over k = 1..k-max")
    sp.add_argument("--k-max", type=int, default=50)
    return p


def main(argv=None, catalog: Catalog = DEFAULT_CATALOG, out=None) -> int:
    parser = build_parser()
    out = out or sys.stdout
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, catalog, out)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        sys.stderr.write(f"{parser.prog} {args.command}: error: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
