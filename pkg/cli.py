"""
Command line - 命令行
=====================================
Subcommands:

    scheme     build a scheme, verify axioms, dump adjacency matrices
    code       build (B1 | B2), choose rows, print generators
    distance   certify the minimum distance of a code
    search     enumerate subset pairs over a scheme
    reproduce  rebuild a code table (4, 5, 10) or a printed generator list
    catalog    query the record catalog

Exit codes: 0 ok, 1 library error, 2 usage error, 3 scheme axiom failure,
4 a requested assertion failed (--expect, discrepant rows, listing mismatch).

JSON output (--json) is sorted and carries no timings unless --timing is
given; status lines go to stderr.
"""

import json
import re
import sys
from typing import List, Optional, Tuple

import click
from termcolor import cprint

from config import DEFAULT_MIN_D, DEFAULT_TIME_BUDGET, DEFAULT_WORKERS, EXACT_CEILING
from distance.policy import certify, parse_method
from errors import AssocCodesError, PauliFormatError, SchemeSpecError
from schemes.registry import dump_scheme, format_scheme_text, parse_scheme_spec
from schemes.scheme import intersection_numbers, verify_scheme
from search.catalog import CatalogQuery, CodeCatalog
from search.enumerate import run_search
from search.records import SearchConfig
from search.reproduce import DISCREPANT, check_generator_listing, reproduce_table
from search.tables import GENERATOR_LISTINGS, table_rows
from stabilizer.check_matrix import CheckMatrix, build_check_matrix, build_check_matrix_from_formulas
from stabilizer.code import StabilizerCode, select_generators, select_generators_subset
from stabilizer.pauli import (
    check_matrix_from_json,
    check_matrix_to_json,
    format_pauli_block,
    from_pauli,
    parse_pauli_text,
    to_pauli,
)

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_USAGE = 2
EXIT_AXIOMS = 3
EXIT_ASSERTION = 4


class Context:
    def __init__(self, as_json: bool, workers: int, timing: bool, catalog: Optional[str]):
        self.as_json = as_json
        self.workers = workers
        self.timing = timing
        self.catalog = catalog


def _emit_json(payload) -> None:
    click.echo(json.dumps(payload, sort_keys=True, indent=2))


def _status(message: str, color: str = "cyan") -> None:
    cprint(message, color, file=sys.stderr)


def _fail(exc: Exception, code: int = EXIT_ERROR):
    _status(f"❌ {exc}", "red")
    sys.exit(code)


def _parse_indices(text: str) -> Tuple[int, ...]:
    try:
        return tuple(int(t) for t in text.split(",") if t.strip())
    except ValueError:
        raise click.BadParameter(f"{text!r} is not a comma-separated index list") from None


def _is_index_list(text: str) -> bool:
    return all(part.strip().isdigit() for part in text.split(",") if part.strip())


def _scheme(spec: str):
    try:
        return parse_scheme_spec(spec)
    except SchemeSpecError as exc:
        raise click.UsageError(str(exc)) from None


def _check_matrix(spec: str, b1: str, b2: str) -> CheckMatrix:
    s = _scheme(spec)
    if _is_index_list(b1) and _is_index_list(b2):
        return build_check_matrix(s, _parse_indices(b1), _parse_indices(b2))
    return build_check_matrix_from_formulas(s, b1, b2)


def _select(c: CheckMatrix, drop: Optional[int], keep: Optional[str]) -> StabilizerCode:
    if keep:
        return select_generators_subset(c, _parse_indices(keep))
    return select_generators(c, drop or 0)


def _code_summary(code: StabilizerCode) -> dict:
    return {
        "n": code.n,
        "k": code.k,
        "n_minus_k": code.r,
        "provenance": code.provenance.to_dict(),
        "generators_pauli": to_pauli(code),
        "generators": check_matrix_to_json(code.gens),
        "rowspace": code.rowspace_key(),
    }


@click.group()
@click.option("--json", "as_json", is_flag=True, help="Machine-readable output.")
@click.option("--workers", type=int, default=DEFAULT_WORKERS, show_default=True, help="Worker threads.")
@click.option("--timing", is_flag=True, help="Include elapsed times in JSON output.")
@click.option("--catalog", "catalog_path", default=None, help="Catalog file (default: $ASSOC_CODES_CATALOG).")
@click.pass_context
def cli(ctx, as_json, workers, timing, catalog_path):
    """Stabilizer codes from association schemes."""
    if workers < 1:
        raise click.BadParameter("--workers must be >= 1")
    ctx.obj = Context(as_json, workers, timing, catalog_path)


# ============================================================================
# scheme
# ============================================================================

@cli.command()
@click.argument("spec")
@click.option("--verify", is_flag=True, help="Check the association-scheme axioms.")
@click.option("--dump", is_flag=True, help="Print adjacency matrices (hex rows in JSON).")
@click.option("--intersections", is_flag=True, help="Print nonzero intersection numbers p^l_ij.")
@click.pass_obj
def scheme(obj: Context, spec, verify, dump, intersections):
    """Build SPEC (cyclic:12, u6n:2, product:cyclic:2,cyclic:4, C_3×C_3, ...)."""
    s = _scheme(spec)
    report = verify_scheme(s) if verify or intersections else None
    if report is not None and not report.passed:
        if obj.as_json:
            _emit_json(dump_scheme(s, report) if dump else {"verification": report.to_dict()})
        for check in report.failures():
            _status(f"❌ {check.name}: {check.witness}", "red")
        sys.exit(EXIT_AXIOMS)

    p = intersection_numbers(s) if intersections else None
    if obj.as_json:
        payload = dump_scheme(s, report)
        if not dump:
            payload.pop("adjacency")
        if p is not None:
            payload["intersections"] = _nonzero_intersections(p)
        _emit_json(payload)
        return
    click.echo(format_scheme_text(s, with_matrices=dump))
    if report is not None:
        kind = "symmetric" if report.symmetric else ("commutative" if report.commutative else "non-commutative")
        click.echo(f"axioms   pass ({kind}, {s.classes} classes)")
    if p is not None:
        for (l, i, j), value in sorted(_nonzero_intersections(p).items()):
            click.echo(f"p^{l}_{i},{j} = {value}")


def _nonzero_intersections(p) -> dict:
    out = {}
    size = p.size
    for l in range(size):
        for i in range(size):
            for j in range(size):
                if p[l, i, j]:
                    out[f"{l},{i},{j}"] = p[l, i, j]
    return out


# ============================================================================
# code
# ============================================================================

@cli.command()
@click.argument("spec")
@click.option("--b1", required=True, help="Indices (1,4,5) or a formula (A1+A4+A5, I_2A_2+XA_1).")
@click.option("--b2", required=True, help="Indices or formula for B2.")
@click.option("--drop", type=int, default=0, show_default=True, help="Trailing rows to remove.")
@click.option("--keep", default=None, help="Explicit rows to keep (overrides --drop).")
@click.option("--format", "fmt", type=click.Choice(["pauli", "json", "matrix"]), default="pauli", show_default=True)
@click.pass_obj
def code(obj: Context, spec, b1, b2, drop, keep, fmt):
    """Build the check matrix (B1 | B2) and select generators."""
    try:
        c = _check_matrix(spec, b1, b2)
        result = _select(c, drop, keep)
    except AssocCodesError as exc:
        _fail(exc)
    if obj.as_json or fmt == "json":
        _emit_json(_code_summary(result))
        return
    _status(f"✅ {result.label()}  n-k={result.r}", "green")
    if fmt == "matrix":
        click.echo("\n".join(result.gens.m.to_strings()))
    else:
        click.echo(format_pauli_block(to_pauli(result)))


# ============================================================================
# distance
# ============================================================================

def _load_code(spec, b1, b2, drop, keep, pauli_file, matrix_file) -> StabilizerCode:
    if pauli_file:
        with open(pauli_file, encoding="utf-8") as f:
            c = from_pauli(parse_pauli_text(f.read()))
        return select_generators(c, 0)
    if matrix_file:
        with open(matrix_file, encoding="utf-8") as f:
            try:
                payload = json.load(f)
            except json.JSONDecodeError as exc:
                raise PauliFormatError(f"{matrix_file}: {exc}") from exc
        return select_generators(check_matrix_from_json(payload), 0)
    if not (spec and b1 and b2):
        raise click.UsageError("give SPEC with --b1/--b2, or --pauli FILE, or --matrix FILE")
    return _select(_check_matrix(spec, b1, b2), drop, keep)


@cli.command()
@click.argument("spec", required=False)
@click.option("--b1", default=None)
@click.option("--b2", default=None)
@click.option("--drop", type=int, default=0, show_default=True)
@click.option("--keep", default=None)
@click.option("--pauli", "pauli_file", type=click.Path(exists=True, dir_okay=False), default=None,
              help="Generators as Pauli strings, one per line.")
@click.option("--matrix", "matrix_file", type=click.Path(exists=True, dir_okay=False), default=None,
              help="Check-matrix JSON {n, rows}.")
@click.option("--method", default="auto", show_default=True, help="auto | exact | oracle | bounded:W")
@click.option("--ceiling", type=int, default=EXACT_CEILING, show_default=True, help="Largest n + k for exact.")
@click.option("--expect", type=int, default=None, help="Exit 4 unless the certificate is Exact(EXPECT).")
@click.pass_obj
def distance(obj: Context, spec, b1, b2, drop, keep, pauli_file, matrix_file, method, ceiling, expect):
    """Certify the minimum distance: Exact(d) with a witness, or LowerBound(d)."""
    try:
        method_spec = parse_method(method)
    except AssocCodesError as exc:
        raise click.BadParameter(str(exc), param_hint="--method") from None
    try:
        result = _load_code(spec, b1, b2, drop, keep, pauli_file, matrix_file)
        cert = certify(result, method_spec, workers=obj.workers, ceiling=ceiling)
    except AssocCodesError as exc:
        _fail(exc)

    if obj.as_json:
        _emit_json({"code": {"n": result.n, "k": result.k}, "certificate": cert.to_json(obj.timing)})
    else:
        d = cert.value if cert.is_exact else f">={cert.value}"
        click.echo(f"{result.label(d)}  {cert.describe()}  method={cert.method}")
        if cert.witness is not None:
            click.echo(f"witness  {cert.witness.to_pauli()}")
        for note in cert.notes:
            click.echo(f"note     {note}")
    if expect is not None and not (cert.is_exact and cert.value == expect):
        _status(f"❌ expected Exact({expect}), got {cert.describe()}", "red")
        sys.exit(EXIT_ASSERTION)


# ============================================================================
# search
# ============================================================================

def _drop_range(text: Optional[str]):
    if not text:
        return None
    lo, sep, hi = text.partition(":")
    try:
        return (int(lo), int(hi)) if sep else (int(lo), int(lo))
    except ValueError:
        raise click.BadParameter(f"{text!r} is not LO:HI", param_hint="--drops") from None


@cli.command()
@click.argument("spec")
@click.option("--min-d", type=int, default=DEFAULT_MIN_D, show_default=True)
@click.option("--max-size", type=int, default=None, help="Largest subset size per side.")
@click.option("--drops", default=None, help="Trailing-drop range LO:HI (default all).")
@click.option("--w-max", type=int, default=None, help="Weight limit when exact enumeration is out of reach.")
@click.option("--budget", type=float, default=DEFAULT_TIME_BUDGET, show_default=True, help="Seconds.")
@click.option("--include-k0", is_flag=True, help="Keep stabilizer states (k = 0).")
@click.option("--save", is_flag=True, help="Append the records to the catalog.")
@click.pass_obj
def search(obj: Context, spec, min_d, max_size, drops, w_max, budget, include_k0, save):
    """Enumerate subset pairs over SPEC and certify every resulting code."""
    s = _scheme(spec)
    kwargs = {} if w_max is None else {"w_max": w_max}
    try:
        cfg = SearchConfig(spec=s.spec, max_subset_size=max_size, drop_range=_drop_range(drops),
                           min_d=min_d, time_budget=budget, workers=obj.workers,
                           include_k0=include_k0, **kwargs)
    except AssocCodesError as exc:
        raise click.UsageError(str(exc)) from None
    try:
        report = run_search(cfg, scheme=s, verbose=not obj.as_json)
    except AssocCodesError as exc:
        _fail(exc)

    if save and report.records:
        CodeCatalog(obj.catalog).extend(report.records)
        _status(f"💾 {len(report.records)} records appended to {CodeCatalog(obj.catalog).path}", "green")

    if obj.as_json:
        _emit_json(report.to_json(obj.timing))
        return
    for r in report.records:
        click.echo(f"{r.label:<16} sel1={','.join(map(str, r.sel1))} sel2={','.join(map(str, r.sel2))} "
                   f"drop={r.drop_last} {r.certificate.method}")
    if report.truncated is not None:
        _status(f"⚠️ truncated after {report.truncated.pairs_done}/{report.truncated.pairs_total} pairs", "yellow")


# ============================================================================
# reproduce
# ============================================================================

_ROW_TOKEN = re.compile(r"\[\[[^\]]*\]\]|[^,\s][^,]*")


def _row_filter(text: Optional[str]) -> Optional[List[str]]:
    """Split on commas outside [[n,k,d]] brackets."""
    if not text:
        return None
    return [t.strip() for t in _ROW_TOKEN.findall(text) if t.strip()]


@cli.command()
@click.option("--table", "table_id", default=None, help="4, 5 or 10 (or abelian, cyclic-long, nonabelian).")
@click.option("--rows", default=None, help="Comma-separated group labels or [[n,k,d]] labels.")
@click.option("--max-n", type=int, default=None, help="Skip rows longer than this.")
@click.option("--ceiling", type=int, default=EXACT_CEILING, show_default=True)
@click.option("--listing", "listings", multiple=True, help="Check a printed generator list, e.g. [[11,1,5]].")
@click.option("--save", is_flag=True, help="Append certified rows to the catalog.")
@click.pass_obj
def reproduce(obj: Context, table_id, rows, max_n, ceiling, listings, save):
    """Rebuild the rows of a code table and report a status per row."""
    if table_id is None and not listings:
        raise click.UsageError("give --table and/or --listing")
    failed = False
    payload = {}

    if listings:
        checks = []
        for name in listings:
            if name not in GENERATOR_LISTINGS:
                raise click.BadParameter(f"unknown listing {name!r}; known: {', '.join(GENERATOR_LISTINGS)}")
            check = check_generator_listing(name)
            failed |= not check.matches
            checks.append(check)
            if not obj.as_json:
                mark = "✅" if check.matches else "❌"
                click.echo(f"{mark} {name}: {len(check.emitted)} generators emitted, {len(check.printed)} printed")
                if check.missing:
                    click.echo("   printed list omits " + ", ".join(f"g_{i + 1}" for i in check.missing))
        payload["listings"] = [c.to_json() for c in checks]

    if table_id is not None:
        filt = _row_filter(rows)
        try:
            if filt and not table_rows(table_id, filt):
                raise click.BadParameter(f"no row of table {table_id} matches {rows!r}", param_hint="--rows")
            report = reproduce_table(table_id, filt, ceiling=ceiling, workers=obj.workers,
                                     max_n=max_n, verbose=not obj.as_json)
        except AssocCodesError as exc:
            raise click.UsageError(str(exc)) from None
        failed |= any(r.status == DISCREPANT for r in report.rows)
        payload["table"] = report.to_json(obj.timing)
        if save:
            records = [r.to_record(i) for i, r in enumerate(report.rows, start=1) if r.status != DISCREPANT]
            CodeCatalog(obj.catalog).extend([r for r in records if r is not None])
        if not obj.as_json:
            click.echo(report.to_markdown())
            counts = report.counts()
            click.echo(" ".join(f"{k}={v}" for k, v in counts.items()))
            for r in report.rows:
                for line in r.evidence:
                    click.echo(f"  {r.row.key()}: {line}")

    if obj.as_json:
        _emit_json(payload)
    if failed:
        sys.exit(EXIT_ASSERTION)


# ============================================================================
# catalog
# ============================================================================

@cli.group()
def catalog():
    """Query the append-only record catalog."""


@catalog.command("query")
@click.option("--n", type=int, default=None)
@click.option("--k", type=int, default=None)
@click.option("--d", type=int, default=None)
@click.option("--min-d", type=int, default=None)
@click.option("--scheme", "scheme_label", default=None)
@click.option("--kind", type=click.Choice(["exact", "lower-bound"]), default=None)
@click.pass_obj
def catalog_query_cmd(obj: Context, n, k, d, min_d, scheme_label, kind):
    flt = CatalogQuery(n=n, k=k, d=d, min_d=min_d, scheme=scheme_label, kind=kind)
    try:
        records = CodeCatalog(obj.catalog).query(flt)
    except AssocCodesError as exc:
        _fail(exc)
    if obj.as_json:
        _emit_json([r.to_json(obj.timing) for r in records])
        return
    for r in records:
        click.echo(f"{r.label:<16} {r.scheme:<12} {r.certificate.kind.value}")


def main():
    cli(standalone_mode=True)


if __name__ == "__main__":
    main()
