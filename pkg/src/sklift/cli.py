"""Command-line surface: build lifts, check tables, extract eigenvalues, classify.

Commands
--------
lift      build the full chain (elliptic eigenform -> plus space -> Jacobi ->
          degree-2 table) and write the table as versioned JSON
check     run the coefficient-relation checkers on a table file
eigen     extract prime and prime-square eigenvalues from a table file
classify  run the single-prime criteria, spectral solve, growth and sign
          scans over an eigenvalue-record file

Exit codes: 0 success, 1 violations/eigenform failures found, 2 usage or
input errors, 3 internal inconsistency (an exact cross-check failed).
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from dataclasses import dataclass
from pathlib import Path

from .cache import ExpansionCache
from .characterize import (
    EigenvalueRecord,
    format_exact,
    growth_check,
    load_records,
    positivity_scan,
    theorem41,
)
from .elliptic import dim_cusp_forms, eigenforms
from .errors import (
    EXIT_OK,
    EXIT_USAGE,
    EXIT_VIOLATION,
    NotAnEigenformError,
    SkliftError,
    UsageError,
)
from .jacobi import ez_lift
from .kohnen import PlusSpaceForm, plus_space_basis, shimura_match
from .numeric import is_prime
from .qseries import QSeries
from .siegel import (
    SiegelFourierTable,
    check_maass_p_space,
    check_maass_space,
    hecke_eigenvalue,
    maass_lift,
)


@dataclass
class RunConfig:
    """Validated knobs shared by the commands."""

    weight: int | None = None
    bound: int | None = None
    primes: tuple = ()
    scan_depth: int = 50
    cache_dir: Path | None = None
    output: str = "human"
    constraint_bound: int | None = None
    use_cache: bool = True

    def cache(self) -> ExpansionCache | None:
        if not self.use_cache:
            return None
        return ExpansionCache(self.cache_dir)


@dataclass
class BoundPlan:
    """Truncations the chain needs, derived by walking it backwards."""

    weight: int
    bound: int
    elliptic_prec: int
    halfint_prec: int
    constraint_bound: int
    jacobi_disc: int

    def lines(self) -> list[str]:
        return [
            f"plan: degree-2 index bound {self.bound} "
            f"(discriminants to {self.jacobi_disc})",
            f"plan: half-integral truncation {self.halfint_prec}, "
            f"plus-space constraint bound {self.constraint_bound}",
            f"plan: elliptic truncation {self.elliptic_prec}",
        ]


def plan_bounds(weight: int, bound: int, primes=(2,), constraint_bound=None) -> BoundPlan:
    """Minimal truncations implied by a requested table bound and prime set."""
    k = weight
    largest = max(primes) if primes else 2
    cb = constraint_bound if constraint_bound is not None else 4 * k
    jacobi_disc = 4 * bound * bound
    halfint = max(jacobi_disc, cb, 16 * largest * largest)
    elliptic = max(16, 4 * largest * bound)
    return BoundPlan(k, bound, elliptic, halfint, cb, jacobi_disc)


# ---------------------------------------------------------------------------
# cached pipeline pieces
# ---------------------------------------------------------------------------

def _cached_plus_basis(config: RunConfig, k: int, prec: int) -> list[PlusSpaceForm]:
    cache = config.cache()
    if cache is None or config.constraint_bound is not None:
        return plus_space_basis(k, prec, config.constraint_bound)
    dim = dim_cusp_forms(2 * k - 2)
    rows = []
    for i in range(dim):
        got = cache.fetch("kohnen", f"plus_basis_{i}", k, prec)
        if got is None:
            rows = None
            break
        rows.append(got)
    if rows is not None and dim > 0:
        return [PlusSpaceForm(k, QSeries(row, prec)) for row in rows]
    basis = plus_space_basis(k, prec)
    for i, g in enumerate(basis):
        cache.store("kohnen", f"plus_basis_{i}", k, prec, g.series.coeffs)
    return basis


def _cached_eigenform(config: RunConfig, weight: int, prec: int):
    cache = config.cache()
    if cache is not None:
        got = cache.fetch("elliptic", "eigenform_0", weight, prec)
        if got is not None:
            from .elliptic import EllipticEigenform

            return [EllipticEigenform(weight, QSeries(got, prec))]
    forms = eigenforms(weight, prec)
    if cache is not None and len(forms) == 1 and forms[0].field_disc is None:
        cache.store("elliptic", "eigenform_0", weight, prec, forms[0].series.coeffs)
    return forms


def build_lift(config: RunConfig, weight: int, bound: int, log) -> SiegelFourierTable:
    """The full chain with cross-checks; raises on any failure."""
    k = weight
    if k % 2:
        raise UsageError(f"weight must be even, got {k}")
    dim = dim_cusp_forms(2 * k - 2)
    if dim == 0:
        raise UsageError(f"dim S_{2 * k - 2} = 0, no lift exists at weight {k}")
    if dim > 1:
        raise UsageError(
            f"weight {k} has {dim} eigenforms with irrational eigenvalues; "
            "table files carry rational data only, so pick a weight with a "
            "one-dimensional input space (10, 12, or 14)"
        )
    plan = plan_bounds(k, bound, primes=(2,), constraint_bound=config.constraint_bound)
    for line in plan.lines():
        log(line)
    basis = _cached_plus_basis(config, k, plan.halfint_prec)
    g = basis[0]
    candidates = _cached_eigenform(config, 2 * k - 2, plan.elliptic_prec)
    f = shimura_match(g, candidates)
    log(f"matched eigenform of weight {f.weight} with a(2) = {f.a(2)}")
    phi = ez_lift(g)
    table = maass_lift(phi, bound)
    report = check_maass_space(table)
    if not report.ok:
        raise SkliftError(
            f"constructed table violates its defining relation at {report.violations[0][0]}"
        )
    log(
        f"lift built: {len(table.entries)} nonzero reduced coefficients, "
        f"self-check {report.checked} instances clean"
    )
    return table


# ---------------------------------------------------------------------------
# output plumbing
# ---------------------------------------------------------------------------

def _emit(config: RunConfig, payload: dict, human_lines: list[str], csv_rows=None, out=None):
    out = out if out is not None else sys.stdout
    if config.output == "json":
        print(json.dumps(payload, indent=2, sort_keys=True), file=out)
    elif config.output == "csv":
        writer = csv.writer(out)
        for row in csv_rows or []:
            writer.writerow(row)
    else:
        for line in human_lines:
            print(line, file=out)


def _load_table(path: str) -> SiegelFourierTable:
    try:
        with open(path, "r", encoding="utf-8") as handle:
            data = json.load(handle)
    except OSError as exc:
        raise UsageError(f"cannot read table file {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise UsageError(f"table file {path} is not valid JSON: {exc}") from exc
    return SiegelFourierTable.from_json_dict(data)


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------

def cmd_lift(config: RunConfig, args) -> int:
    log = (lambda s: None) if config.output != "human" else lambda s: print(s)
    table = build_lift(config, args.weight, args.bound, log)
    out_path = args.out or f"sk_lift_w{args.weight}_b{args.bound}.json"
    with open(out_path, "w", encoding="utf-8") as handle:
        json.dump(table.to_json_dict(), handle)
    payload = {
        "table": out_path,
        "weight": table.weight,
        "bound": table.bound,
        "nonzero_entries": len(table.entries),
        "first_coefficient": str(table.value(1, 1, 1)),
    }
    _emit(
        config,
        payload,
        [f"wrote {out_path} ({len(table.entries)} nonzero entries)"],
        [["table", out_path], ["nonzero_entries", len(table.entries)]],
    )
    return EXIT_OK


def cmd_check(config: RunConfig, args) -> int:
    table = _load_table(args.table)
    reports = []
    if args.all or args.maass:
        reports.append(check_maass_space(table))
    primes = list(args.maass_p or [])
    if args.all:
        primes = sorted(set(primes) | {2, 3, 5})
    for p in primes:
        if not is_prime(p):
            raise UsageError(f"--maass-p got {p}, which is not prime")
        reports.append(check_maass_p_space(table, p))
    if not reports:
        raise UsageError("nothing to do: pass --maass, --maass-p P, or --all")
    payload = {"table": args.table, "reports": []}
    lines = []
    csv_rows = [["check", "p", "checked", "skipped", "violations"]]
    bad = False
    for rep in reports:
        tag = rep.kind if rep.p is None else f"{rep.kind}({rep.p})"
        lines.append(
            f"{tag}: checked={rep.checked} skipped={rep.skipped} "
            f"violations={len(rep.violations)}"
        )
        for idx, lhs, rhs in rep.violations[:20]:
            lines.append(f"  violated at {idx}: lhs={lhs} rhs={rhs}")
        payload["reports"].append(
            {
                "kind": rep.kind,
                "p": rep.p,
                "checked": rep.checked,
                "skipped": rep.skipped,
                "violations": [
                    {"index": list(idx), "lhs": str(lhs), "rhs": str(rhs)}
                    for idx, lhs, rhs in rep.violations
                ],
            }
        )
        csv_rows.append([rep.kind, rep.p or "", rep.checked, rep.skipped, len(rep.violations)])
        bad = bad or not rep.ok
    _emit(config, payload, lines, csv_rows)
    return EXIT_VIOLATION if bad else EXIT_OK


def _parse_primes(text: str) -> tuple:
    try:
        primes = tuple(int(x) for x in text.split(",") if x.strip())
    except ValueError as exc:
        raise UsageError(f"bad prime list {text!r}") from exc
    if not primes:
        raise UsageError("empty prime list")
    for p in primes:
        if not is_prime(p):
            raise UsageError(f"{p} is not prime")
    return primes


def cmd_eigen(config: RunConfig, args) -> int:
    table = _load_table(args.table)
    primes = _parse_primes(args.primes)
    need = max(p * p for p in primes)
    if table.bound < need:
        raise UsageError(
            f"table bound {table.bound} too small for primes {list(primes)}; "
            f"prime-square extraction needs bound >= {need}"
        )
    records = []
    for p in primes:
        mu_p = hecke_eigenvalue(table, p)
        mu_p2 = hecke_eigenvalue(table, p * p)
        records.append(EigenvalueRecord(table.weight, p, mu_p, mu_p2))
    lines = []
    csv_rows = [["weight", "p", "mu_p", "mu_p2"]]
    for rec in records:
        lines.append(
            f"p={rec.p}: mu(p)={format_exact(rec.mu_p)} mu(p^2)={format_exact(rec.mu_p2)}"
        )
        csv_rows.append([rec.weight, rec.p, format_exact(rec.mu_p), format_exact(rec.mu_p2)])
    if args.out:
        with open(args.out, "w", encoding="utf-8") as handle:
            for rec in records:
                handle.write(json.dumps(rec.to_json_dict(), sort_keys=True) + "\n")
        lines.append(f"wrote {args.out}")
    payload = {"records": [rec.to_json_dict() for rec in records]}
    _emit(config, payload, lines, csv_rows)
    return EXIT_OK


def cmd_classify(config: RunConfig, args) -> int:
    records = load_records(args.records)
    if not records:
        raise UsageError(f"{args.records}: no records found")
    depth = args.scan if args.scan is not None else config.scan_depth
    results = []
    lines = []
    csv_rows = [
        ["weight", "p", "verdict", "inconsistent", "conditions",
         "first_weak_growth_violation", "all_positive"]
    ]
    any_inconsistent = False
    for rec in records:
        cert = theorem41(rec)
        growth = growth_check(rec, depth)
        signs = positivity_scan(rec, depth)
        entry = cert.to_json_dict()
        entry["growth"] = growth.to_json_dict()
        entry["positivity"] = signs.to_json_dict()
        results.append(entry)
        any_inconsistent = any_inconsistent or cert.inconsistent
        lines.append(
            f"weight {rec.weight}, p={rec.p}: {cert.verdict}"
            + (" [INCONSISTENT DATA]" if cert.inconsistent else "")
        )
        lines.append(f"  conditions fired: {', '.join(cert.conditions_fired) or 'none'}")
        lines.append(
            f"  spectral pair: {cert.satake.classification}"
            + (f", x = {cert.satake.to_json_dict()['x']}" if cert.satake.x is not None else "")
            + (f", y = {cert.satake.to_json_dict()['y']}" if cert.satake.y is not None else "")
        )
        weak = growth.first_weak_violation
        lines.append(
            f"  growth to r={depth}: "
            + ("both bounds hold" if growth.ok else f"weak bound first fails at r={weak}")
        )
        lines.append(
            f"  signs to r={depth}: "
            + ("all positive" if signs.all_positive else f"sign changes at {list(signs.sign_changes)}")
        )
        csv_rows.append(
            [rec.weight, rec.p, cert.verdict, cert.inconsistent,
             "|".join(cert.conditions_fired), weak, signs.all_positive]
        )
    payload = {"records": results}
    _emit(config, payload, lines, csv_rows)
    return EXIT_VIOLATION if any_inconsistent else EXIT_OK


# ---------------------------------------------------------------------------
# argument parsing
# ---------------------------------------------------------------------------

def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sklift",
        description="Exact Saito-Kurokawa lifts and eigenvalue characterizations.",
    )
    parser.add_argument(
        "--output", choices=("human", "json", "csv"), default="human",
        help="report format (default: human)",
    )
    parser.add_argument(
        "--cache-dir", type=Path, default=None,
        help="expansion cache directory (default: $SKLIFT_CACHE_DIR or ~/.cache/sklift)",
    )
    parser.add_argument(
        "--no-cache", action="store_true", help="disable the expansion cache"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_lift = sub.add_parser("lift", help="build a lift and write its table")
    p_lift.add_argument("--weight", type=int, required=True)
    p_lift.add_argument("--bound", type=int, default=6)
    p_lift.add_argument("--out", type=str, default=None)
    p_lift.add_argument(
        "--constraint-bound", type=int, default=None,
        help="override the plus-space constraint bound (default 4*weight)",
    )
    p_lift.set_defaults(func=cmd_lift)

    p_check = sub.add_parser("check", help="run coefficient-relation checks")
    p_check.add_argument("table")
    p_check.add_argument("--maass", action="store_true")
    p_check.add_argument("--maass-p", type=int, action="append")
    p_check.add_argument("--all", action="store_true")
    p_check.set_defaults(func=cmd_check)

    p_eigen = sub.add_parser("eigen", help="extract Hecke eigenvalues from a table")
    p_eigen.add_argument("table")
    p_eigen.add_argument("--primes", type=str, required=True)
    p_eigen.add_argument("--out", type=str, default=None)
    p_eigen.set_defaults(func=cmd_eigen)

    p_classify = sub.add_parser("classify", help="classify eigenvalue records")
    p_classify.add_argument("records")
    p_classify.add_argument("--scan", type=int, default=None)
    p_classify.set_defaults(func=cmd_classify)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors and 0 on --help
        return int(exc.code or 0)
    config = RunConfig(
        cache_dir=args.cache_dir,
        output=args.output,
        use_cache=not args.no_cache,
        constraint_bound=getattr(args, "constraint_bound", None),
        bound=getattr(args, "bound", None),
    )
    try:
        if config.bound is not None and config.bound < 1:
            raise UsageError("--bound must be at least 1")
        return args.func(config, args)
    except NotAnEigenformError as exc:
        print(f"error: {exc} (witness {exc.witness})", file=sys.stderr)
        return exc.exit_code
    except SkliftError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.exit_code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
