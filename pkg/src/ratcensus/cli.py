"""Command-line front end and cached table persistence.

Exit codes: 0 success, 1 usage or I/O error, 2 verification mismatch
(oracle vs. formula, or a failed identity).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction
from pathlib import Path

from . import analysis, census, contfrac, fourplat, rdecomp
from .errors import InputError

CACHE_ENV = "RATCENSUS_CACHE"
CACHE_SCHEMA = 1
EXIT_OK = 0
EXIT_USAGE = 1
EXIT_MISMATCH = 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}\n{self.format_usage()}")


def decimal12(value: Fraction) -> str:
    """Render an exact rational with exactly 12 fractional digits."""
    scaled = value.numerator * 10 ** 12
    q, r = divmod(scaled, value.denominator)
    if 2 * r >= value.denominator:
        q += 1
    sign = "-" if q < 0 else ""
    q = abs(q)
    return f"{sign}{q // 10 ** 12}.{q % 10 ** 12:012d}"


def parse_fraction(text: str) -> contfrac.ProperFraction:
    try:
        p, q = (int(x) for x in text.split("/"))
    except ValueError:
        raise InputError(f"expected P/Q, got {text!r}") from None
    return contfrac.ProperFraction(p, q)


def parse_vector(text: str) -> tuple[int, ...]:
    try:
        entries = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise InputError(f"expected a comma-separated integer vector, got {text!r}") from None
    return contfrac.validate_vector(entries)


def parse_range(text: str) -> tuple[int, int]:
    try:
        a, b = (int(x) for x in text.split(":"))
    except ValueError:
        raise InputError(f"expected A:B, got {text!r}") from None
    if not 2 <= a <= b:
        raise InputError(f"need 2 <= A <= B, got {a}:{b}")
    return a, b


# -- table cache -------------------------------------------------------------

def _cache_path(cache_dir: str, name: str) -> Path:
    return Path(cache_dir) / f"{name}.json"


def load_cached_rows(cache_dir: str, name: str, max_n: int):
    """Return cached (n, s, count, kind) rows if the cache covers max_n."""
    path = _cache_path(cache_dir, name)
    if not path.is_file():
        return None
    try:
        data = json.loads(path.read_text())
    except (OSError, json.JSONDecodeError):
        return None
    if data.get("schema") != CACHE_SCHEMA or data.get("kind") != name:
        return None
    if data.get("max_n", 0) < max_n:
        return None
    rows = []
    for key, count in data["entries"].items():
        n, s = (int(x) for x in key.split(","))
        if n <= max_n:
            rows.append((n, s, int(count), census.kind_of(n, s)))
    rows.sort()
    return rows


def store_cached_rows(cache_dir: str, name: str, max_n: int, rows):
    os.makedirs(cache_dir, exist_ok=True)
    data = {
        "schema": CACHE_SCHEMA,
        "kind": name,
        "max_n": max_n,
        "entries": {f"{n},{s}": str(count) for n, s, count, _ in rows},
    }
    _cache_path(cache_dir, name).write_text(json.dumps(data, sort_keys=True))


def table_rows(name: str, max_n: int, cache_dir: str | None):
    if cache_dir:
        cached = load_cached_rows(cache_dir, name, max_n)
        if cached is not None:
            return cached
    rows = census.table_rows(name, max_n)
    if cache_dir:
        store_cached_rows(cache_dir, name, max_n, rows)
    return rows


# -- output helpers ----------------------------------------------------------

def emit(text: str, out: str | None):
    if out:
        with open(out, "w", newline="\n") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)


def render_records(records, columns, fmt) -> str:
    """Render a list of dicts as csv, json or a markdown table."""
    if fmt == "json":
        return json.dumps(records, indent=2) + "\n"
    if fmt == "md":
        lines = ["| " + " | ".join(columns) + " |",
                 "| " + " | ".join("---" for _ in columns) + " |"]
        for rec in records:
            lines.append("| " + " | ".join(str(rec[c]) for c in columns) + " |")
        return "\n".join(lines) + "\n"
    lines = [",".join(columns)]
    for rec in records:
        lines.append(",".join(str(rec[c]) for c in columns))
    return "\n".join(lines) + "\n"


# -- subcommand implementations ----------------------------------------------

def cmd_cf(args) -> int:
    if args.cf_action == "expand":
        vector = contfrac.expand(parse_fraction(args.fraction))
        emit(",".join(str(a) for a in vector) + "\n", args.out)
    else:
        frac = contfrac.evaluate(parse_vector(args.vector))
        emit(f"{frac}\n", args.out)
    return EXIT_OK


def cmd_diagram(args) -> int:
    orient = fourplat.Orient2.REVERSED if args.orient2 == "rev" else fourplat.Orient2.FORWARD
    diagram = fourplat.build(parse_vector(args.vector), orient)
    data = fourplat.seifert_decompose(diagram)
    sv = fourplat.signed_vector_and_type(diagram)
    record = {
        "vector": " ".join(str(a) for a in diagram.vector),
        "c": data.c,
        "s": data.s,
        "mu": data.mu,
        "genus": data.genus,
        "signed": " ".join(str(b) for b in sv.signed_entries),
        "type": sv.type,
    }
    emit(render_records([record], list(record), args.format), args.out)
    return EXIT_OK


def cmd_census_count(args) -> int:
    func = {"r": census.count_r, "rs": census.count_rs, "lambda": census.lambda_count}[args.which]
    emit(f"{func(args.n, args.s)}\n", args.out)
    return EXIT_OK


def cmd_census_genus(args) -> int:
    func = census.psi if args.kind == "knot" else census.phi
    emit(f"{func(args.n, args.g)}\n", args.out)
    return EXIT_OK


def cmd_census_avg(args) -> int:
    lo, hi = parse_range(args.n_range)
    avg = census.avg_genus_knots if args.kind == "knot" else census.avg_genus_links
    total = census.rk_total if args.kind == "knot" else census.rl_total
    records = []
    for n in range(lo, hi + 1):
        count = total(n)
        if count == 0:
            continue
        value = avg(n)
        records.append({
            "n": n,
            "count_total": count,
            "avg_exact_num": value.numerator,
            "avg_exact_den": value.denominator,
            "avg_decimal": decimal12(value),
        })
    columns = ["n", "count_total", "avg_exact_num", "avg_exact_den", "avg_decimal"]
    emit(render_records(records, columns, args.format), args.out)
    return EXIT_OK


def cmd_census_table(args) -> int:
    rows = table_rows(args.name, args.max_n, args.cache)
    records = [{"n": n, "s": s, "count": count, "kind": kind} for n, s, count, kind in rows]
    emit(render_records(records, ["n", "s", "count", "kind"], args.format), args.out)
    return EXIT_OK


def cmd_verify_oracle(args) -> int:
    lines = []
    mismatches = 0
    for n in range(2, args.max_n + 1):
        for s in range(2, n + 1):
            oracle_r = rdecomp.oracle_count(n, s)
            formula_r = census.count_r(n, s)
            oracle_rs = rdecomp.oracle_symmetric_count(n, s)
            formula_rs = census.count_rs(n, s)
            ok = oracle_r == formula_r and oracle_rs == formula_rs
            if not ok:
                mismatches += 1
            lines.append(
                f"n={n},s={s},oracle_r={oracle_r},formula_r={formula_r},"
                f"oracle_rs={oracle_rs},formula_rs={formula_rs},ok={ok}"
            )
    lines.append(f"MISMATCHES: {mismatches}")
    emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK if mismatches == 0 else EXIT_MISMATCH


def cmd_verify_identities(args) -> int:
    checks = analysis.check_identities(args.max_n)
    failures = sum(1 for c in checks if not c.passed)
    lines = []
    for c in checks:
        line = f"{c.name},cases={c.cases},pass={c.passed}"
        if c.first_failure:
            line += f",first_failure={c.first_failure}"
        lines.append(line)
    lines.append(f"MISMATCHES: {failures}")
    emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK if failures == 0 else EXIT_MISMATCH


def _fit_record(kind: str, lo: int, hi: int):
    series = analysis.genus_series(kind, lo, hi)
    result = analysis.fit(series)
    record = {
        "kind": kind,
        "n_min": lo,
        "n_max": hi,
        "slope": f"{result.slope:.12f}",
        "intercept": f"{result.intercept:.12f}",
        "r_squared": f"{result.r_squared:.12f}",
    }
    return series, record


def cmd_fit(args) -> int:
    lo, hi = parse_range(args.n_range)
    _, record = _fit_record(args.kind, lo, hi)
    emit(render_records([record], list(record), args.format), args.out)
    return EXIT_OK


def cmd_report_shape(args) -> int:
    records = [
        {
            "n": row.n,
            "peaks": " ".join(str(s) for s in row.peaks),
            "predicted": row.predicted,
            "unimodal": row.unimodal,
            "tie": row.tie,
        }
        for row in analysis.shape_report(args.max_n)
    ]
    emit(render_records(records, ["n", "peaks", "predicted", "unimodal", "tie"],
                        args.format), args.out)
    return EXIT_OK


def cmd_report_conjecture(args) -> int:
    try:
        ns = [int(x) for x in args.n.split(",")]
    except ValueError:
        raise InputError(f"expected a comma-separated n list, got {args.n!r}") from None
    records = [
        {
            "n": row.n,
            "kind": row.kind,
            "avg_num": row.average.numerator,
            "avg_den": row.average.denominator,
            "ratio_decimal": decimal12(row.ratio),
            "gap_to_quarter": decimal12(row.ratio - Fraction(1, 4)),
        }
        for row in analysis.conjecture_probe(ns)
    ]
    columns = ["n", "kind", "avg_num", "avg_den", "ratio_decimal", "gap_to_quarter"]
    emit(render_records(records, columns, args.format), args.out)
    return EXIT_OK


def cmd_emit_plot_data(args) -> int:
    lo, hi = parse_range(args.n_range)
    series, record = _fit_record(args.kind, lo, hi)
    out = args.out or f"genus_{args.kind}.dat"
    lines = [f"{n},{decimal12(value)}" for n, value in series.points]
    with open(out, "w", newline="\n") as handle:
        handle.write("\n".join(lines) + "\n")
    sidecar = {key: record[key] for key in ("kind", "n_min", "n_max", "slope",
                                            "intercept", "r_squared")}
    with open(out + ".fit.json", "w", newline="\n") as handle:
        json.dump(sidecar, handle, indent=2)
        handle.write("\n")
    return EXIT_OK


# -- parser wiring -----------------------------------------------------------

def build_parser() -> _Parser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["csv", "json", "md"], default="csv")
    common.add_argument("--out", metavar="PATH")
    common.add_argument("--cache", metavar="DIR", default=os.environ.get(CACHE_ENV))

    parser = _Parser(prog="ratcensus", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p_cf = sub.add_parser("cf", help="continued-fraction conversions", parents=[common])
    cf_sub = p_cf.add_subparsers(dest="cf_action", required=True)
    p = cf_sub.add_parser("expand", parents=[common])
    p.add_argument("fraction", help="reduced fraction P/Q with 0 < P < Q")
    p = cf_sub.add_parser("eval", parents=[common])
    p.add_argument("vector", help="comma-separated odd-length positive vector")

    p_diagram = sub.add_parser("diagram", help="4-plat diagram statistics", parents=[common])
    diagram_sub = p_diagram.add_subparsers(dest="diagram_action", required=True)
    p = diagram_sub.add_parser("info", parents=[common])
    p.add_argument("--vector", required=True)
    p.add_argument("--orient2", choices=["fwd", "rev"], default="fwd")

    p_census = sub.add_parser("census", help="closed-form counts", parents=[common])
    census_sub = p_census.add_subparsers(dest="census_action", required=True)
    p = census_sub.add_parser("count", parents=[common])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--which", choices=["r", "rs", "lambda"], default="r")
    p = census_sub.add_parser("genus", parents=[common])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--g", type=int, required=True)
    p.add_argument("--kind", choices=["knot", "link"], default="knot")
    p = census_sub.add_parser("avg", parents=[common])
    p.add_argument("--kind", choices=["knot", "link"], required=True)
    p.add_argument("--n-range", required=True)
    p = census_sub.add_parser("table", parents=[common])
    p.add_argument("--name", choices=["t1", "t2", "t3"], required=True)
    p.add_argument("--max-n", type=int, required=True)

    p_verify = sub.add_parser("verify", help="oracle and identity checks", parents=[common])
    verify_sub = p_verify.add_subparsers(dest="verify_action", required=True)
    p = verify_sub.add_parser("oracle", parents=[common])
    p.add_argument("--max-n", type=int, required=True)
    p = verify_sub.add_parser("identities", parents=[common])
    p.add_argument("--max-n", type=int, required=True)

    p = sub.add_parser("fit", help="least-squares fit of average genus", parents=[common])
    p.add_argument("--kind", choices=["knot", "link"], required=True)
    p.add_argument("--n-range", required=True)

    p_report = sub.add_parser("report", help="shape and conjecture reports", parents=[common])
    report_sub = p_report.add_subparsers(dest="report_action", required=True)
    p = report_sub.add_parser("shape", parents=[common])
    p.add_argument("--max-n", type=int, required=True)
    p = report_sub.add_parser("conjecture", parents=[common])
    p.add_argument("--n", required=True, help="comma-separated list of crossing numbers")

    p = sub.add_parser("emit-plot-data", help="two-column data file plus fit sidecar",
                       parents=[common])
    p.add_argument("--kind", choices=["knot", "link"], required=True)
    p.add_argument("--n-range", required=True)

    return parser


_DISPATCH = {
    "cf": cmd_cf,
    "diagram": cmd_diagram,
    ("census", "count"): cmd_census_count,
    ("census", "genus"): cmd_census_genus,
    ("census", "avg"): cmd_census_avg,
    ("census", "table"): cmd_census_table,
    ("verify", "oracle"): cmd_verify_oracle,
    ("verify", "identities"): cmd_verify_identities,
    "fit": cmd_fit,
    ("report", "shape"): cmd_report_shape,
    ("report", "conjecture"): cmd_report_conjecture,
    "emit-plot-data": cmd_emit_plot_data,
}


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command == "census":
            handler = _DISPATCH[("census", args.census_action)]
        elif args.command == "verify":
            handler = _DISPATCH[("verify", args.verify_action)]
        elif args.command == "report":
            handler = _DISPATCH[("report", args.report_action)]
        else:
            handler = _DISPATCH[args.command]
        return handler(args)
    except UsageError as exc:
        sys.stderr.write(str(exc))
        return EXIT_USAGE
    except InputError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE
    except OSError as exc:
        sys.stderr.write(f"i/o error: {exc}\n")
        return EXIT_USAGE


def console_main():
    sys.exit(run())


if __name__ == "__main__":
    console_main()
