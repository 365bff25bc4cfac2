"""
Category O homological calculator

Command-line entry point:
1. Builds the Weyl group of the requested type and rank
2. Loads the KL table from the cache (or computes and stores it)
3. Runs one command: pd-table, verify, kl, cells, ext or quiver
4. Prints the result as a text table, JSON, CSV or markdown on stdout

Status lines go to stderr. Exit codes: 0 success, 1 verification failure,
2 configuration or input error.

Generators use the Bourbaki labels 1..n: in type B the short simple root is
n, in type D the branch node is n-2. Elements are given as label words
("1 2 1", "121", "s1s2s1"), as "sts"-style letters in rank <= 3, or in type A
as one-line permutations ("3412").
"""

import argparse
import os
import sys
from pathlib import Path
from typing import Callable, List, Optional, Tuple

from dotenv import load_dotenv
from pydantic import ValidationError

# Add project root to path
script_dir = Path(__file__).parent
project_root = script_dir.parent.parent
sys.path.insert(0, str(project_root))

from src.category_o.config import (
    CACHE_DIR_ENV,
    DEFAULT_CACHE_DIR,
    EXIT_CONFIG_ERROR,
    EXIT_OK,
    EXIT_VERIFICATION_FAILED,
    EXT_FAMILIES,
    FORMULAS,
    OUTPUT_FORMATS,
    PROJECT_ROOT,
)
from src.category_o.homology import HomologyError, HomologyTable
from src.category_o.models import GradedExtEntry, RunConfig
from src.category_o.oracles import KLOracles, OracleValidationError
from src.category_o.poset import BruhatPoset
from src.category_o.report import Report, render
from src.category_o.verification import CHECKS, VerificationContext, run_checks
from src.coxeter.system import CoxeterError, CoxeterSystem, GroupElement, build_system
from src.coxeter.words import parse_element
from src.kazhdan_lusztig.bar_oracle import BarInvarianceOracle, OracleCapError
from src.kazhdan_lusztig.cache import CacheFormatError, cache_path, load_table, save_table
from src.kazhdan_lusztig.cells import CELL_SIDES, cell_decomposition
from src.kazhdan_lusztig.klpoly import KazhdanLusztigError, KLTable

Log = Callable[[str, str], None]


def make_log(quiet: bool) -> Log:
    """Status printer: `[TAG] message` on stderr unless quiet."""
    def log(tag: str, message: str) -> None:
        if not quiet:
            print(f"[{tag}] {message}", file=sys.stderr)
    return log


def resolve_cache_dir(cache_dir: Optional[Path]) -> Path:
    """--cache-dir, then $KLO_CACHE_DIR (.env honored), then data/cache."""
    if cache_dir is not None:
        return Path(cache_dir)
    load_dotenv(PROJECT_ROOT / ".env")
    from_env = os.getenv(CACHE_DIR_ENV)
    if from_env:
        return Path(from_env)
    return DEFAULT_CACHE_DIR


def load_kl_table(system: CoxeterSystem, config: RunConfig, log: Log) -> KLTable:
    """
    Cached KL table of a system, computing and storing it on a miss.

    A corrupt or mismatching cache file is reported and recomputed.
    """
    cache_dir = resolve_cache_dir(config.cache_dir)
    if config.use_cache:
        try:
            table = load_table(system, cache_dir)
        except CacheFormatError as e:
            log("WARNING", f"Ignoring cache file: {e}")
            table = None
        if table is not None:
            log("OK", f"Loaded KL table from {cache_path(cache_dir, system)}")
            return table

    log("INFO", f"Computing KL table for {system.label} ({system.order} elements, {config.workers} worker(s))")
    table = KLTable.build(system, workers=config.workers, progress=not config.quiet)
    log("OK", f"KL table complete: {len(table)} nonzero polynomials")
    if config.use_cache:
        try:
            path = save_table(table, cache_dir)
            log("OK", f"Saved KL table to {path}")
        except OSError as e:
            log("WARNING", f"Could not write cache: {e}")
    return table


def base_report(config: RunConfig, title: str, columns: List[str]) -> Report:
    return Report(
        command=config.command, title=title, type_label=config.type_label,
        rank=config.rank, columns=columns,
    )


# ----------------------------------------------------------------------
# commands

def cmd_pd_table(config: RunConfig, system: CoxeterSystem, log: Log) -> Tuple[Report, int]:
    """Projective dimensions of every module family, one row per element."""
    table = load_kl_table(system, config, log)
    log("STEP 2", "Computing two-sided cells and the a-function...")
    homology = HomologyTable(cell_decomposition(table, "twosided"))
    columns = [
        "word", "length", "a_value", "pd_standard", "pd_simple", "pd_costandard",
        "pd_tilting", "tilting_status", "pd_injective", "injective_status",
    ]
    report = base_report(config, f"Projective dimensions in type {system.label}", columns)
    report.rows = [row.model_dump() for row in homology.rows()]
    report.formulas = {
        key: FORMULAS[key]
        for key in ("length", "a_value", "pd_standard", "pd_simple", "pd_costandard",
                    "pd_tilting", "pd_injective", "global_dimension")
    }
    summary = system.summary()
    report.metadata = {
        "order": summary.order,
        "longest_length": summary.longest_length,
        "w0": summary.w0,
        "global_dimension": homology.global_dimension(),
        "tilting_status": homology.tilting_status,
    }
    return report, EXIT_OK


def cmd_verify(config: RunConfig, system: CoxeterSystem, log: Log) -> Tuple[Report, int]:
    """Run the named checks; exit 1 if any fails."""
    table = load_kl_table(system, config, log)
    log("STEP 2", f"Running {len(config.checks) or len(CHECKS)} check(s)...")
    verification = run_checks(VerificationContext(system, table), config.checks, progress=not config.quiet)

    report = base_report(config, f"Verification of {system.label}", ["check", "result", "cases", "detail"])
    for result in verification.results:
        outcome = "SKIP" if result.skipped else ("PASS" if result.passed else "FAIL")
        report.rows.append({"check": result.name, "result": outcome, "cases": result.cases, "detail": result.detail})
        report.formulas[result.name] = result.formula
    report.metadata = {
        "order": system.order,
        "passed": verification.passed,
        "failed": len(verification.failures),
    }
    if verification.passed:
        log("OK", "All checks passed")
        return report, EXIT_OK
    for failure in verification.failures:
        log("ERROR", f"{failure.name}: {failure.detail}")
    return report, EXIT_VERIFICATION_FAILED


def cmd_kl(config: RunConfig, system: CoxeterSystem, log: Log, y_text: str, w_text: str) -> Tuple[Report, int]:
    """P_{y,w} and mu(y,w); with --verify the bar-invariance oracle must agree."""
    y = parse_element(system, y_text)
    w = parse_element(system, w_text)
    table = load_kl_table(system, config, log)
    polynomial = table.kl_polynomial(y, w)
    report = base_report(config, f"Kazhdan-Lusztig polynomial in {system.label}", ["y", "w", "P", "mu", "verified"])
    row = {
        "y": str(y), "w": str(w), "P": str(polynomial),
        "coefficients": list(polynomial.coefficients),
        "mu": table.mu(y, w), "verified": None,
    }
    report.rows = [row]
    report.plain = str(polynomial)
    exit_code = EXIT_OK
    if config.verify:
        log("STEP 2", "Recomputing with the bar-invariance oracle...")
        expected = BarInvarianceOracle(system).kl_polynomial(y, w)
        row["verified"] = expected == polynomial
        if row["verified"]:
            log("OK", "Oracle agrees")
        else:
            log("ERROR", f"Oracle gives {expected}, recursion gives {polynomial}")
            exit_code = EXIT_VERIFICATION_FAILED
    return report, exit_code


def cmd_cells(config: RunConfig, system: CoxeterSystem, log: Log, side: str) -> Tuple[Report, int]:
    """Cells of one side, with a-values for two-sided cells."""
    table = load_kl_table(system, config, log)
    log("STEP 2", f"Computing {side} cells...")
    cells = cell_decomposition(table, side)
    report = base_report(config, f"{side.capitalize()} cells of {system.label}",
                         ["cell_id", "size", "a_value", "members", "below"])
    for record in cells.records():
        row = record.model_dump()
        row["size"] = len(record.members)
        row["members"] = ", ".join(str(x) for x in cells.members(record.cell_id))
        row["member_words"] = record.members
        report.rows.append(row)
    report.formulas = {"a_value": FORMULAS["a_value"]}
    report.metadata = {"side": side, "count": cells.count}
    log("OK", f"{cells.count} {side} cells")
    return report, EXIT_OK


def _ext_entries(family: str,
                 homology: HomologyTable,
                 oracles: Callable[[], KLOracles],
                 x: Optional[GroupElement],
                 y: Optional[GroupElement],
                 i: Optional[int],
                 j: Optional[int]) -> List[GradedExtEntry]:
    system = homology.system

    def need(element: Optional[GroupElement], flag: str) -> GroupElement:
        if element is None:
            raise HomologyError(f"--family {family} needs {flag}")
        return element

    if family == "std-std-linear":
        x, y = need(x, "--x"), need(y, "--y")
        return [homology.linear_entry(x, y, x.length - y.length if i is None else i)]
    if family == "carlin":
        return [homology.carlin_entry(need(x, "--x"), need(y, "--y"))]
    if family == "ext1-dominant":
        x = need(x, "--x")
        return [homology.ext1_dominant_entry(x, x.length - 2 if j is None else j)]
    if family == "from-dominant":
        z = need(y, "--y")
        degree = z.length - 1 if i is None else i
        return [homology.from_dominant_entry(z, degree, 1 - degree if j is None else j)]
    if family == "hom":
        x, y = need(x, "--x"), need(y, "--y")
        return [homology.hom_entry(x, y, x.length - y.length if j is None else j)]
    if family == "duality":
        x, y = need(x, "--x"), need(y, "--y")
        return homology.duality_entries(x, y, x.length - y.length if i is None else i)

    x, y = need(x, "--x"), need(y, "--y")
    if family == "std-simple":
        degrees = range(x.length + 1) if i is None else [i]
        return [
            GradedExtEntry(family=family, source=f"Delta({x})", target=f"L({y})",
                           i=d, j=0, dim=oracles().ext_std_simple_dim(x, y, d))
            for d in degrees
        ]
    # simple-simple
    degrees = range(homology.global_dimension() + 1) if i is None else [i]
    return [
        GradedExtEntry(family=family, source=f"L({x})", target=f"L({y})",
                       i=n, j=0, dim=oracles().ext_simple_simple_dim(x, y, n))
        for n in degrees
    ]


def cmd_ext(config: RunConfig, system: CoxeterSystem, log: Log, family: str,
            x_text: Optional[str], y_text: Optional[str],
            i: Optional[int], j: Optional[int]) -> Tuple[Report, int]:
    """One Ext family evaluated at the given elements and degrees."""
    x = parse_element(system, x_text) if x_text is not None else None
    y = parse_element(system, y_text) if y_text is not None else None
    table = load_kl_table(system, config, log)
    homology = HomologyTable(cell_decomposition(table, "twosided"))
    oracle_holder: List[KLOracles] = []

    def oracles() -> KLOracles:
        if not oracle_holder:
            oracle_holder.append(KLOracles(table))
        return oracle_holder[0]

    entries = _ext_entries(family, homology, oracles, x, y, i, j)
    report = base_report(config, f"Ext family {family} in {system.label}",
                         ["family", "source", "target", "i", "j", "dim", "total_degree"])
    report.rows = [entry.model_dump() for entry in entries]
    report.formulas = {family: FORMULAS[family]}
    return report, EXIT_OK


def cmd_quiver(config: RunConfig, system: CoxeterSystem, log: Log) -> Tuple[Report, int]:
    """Arrows x -> y of the quiver of the endomorphism algebra of the standard modules."""
    poset = BruhatPoset(system)
    arrows = poset.end_delta_quiver()
    report = base_report(config, f"Homomorphism quiver of {system.label}",
                         ["source", "target", "length_gap"])
    report.rows = [
        {"source": str(x), "target": str(y), "source_word": x.labels(),
         "target_word": y.labels(), "length_gap": x.length - y.length}
        for x, y in arrows
    ]
    report.formulas = {"quiver": FORMULAS["quiver"]}
    report.metadata = {
        "arrows": len(arrows),
        "hasse_edges": len(poset.hasse_edges()),
        "incidence_dimension": poset.incidence_dimension(),
    }
    return report, EXIT_OK


# ----------------------------------------------------------------------
# argument parsing

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--type", dest="type_label", default="A", help="Weyl type: A, B or D (default A)")
    common.add_argument("--rank", type=int, default=2, help="Number of simple reflections (default 2)")
    common.add_argument("--format", dest="output_format", default="table", choices=OUTPUT_FORMATS,
                        help="Output format (default table)")
    common.add_argument("--json", dest="output_format", action="store_const", const="json",
                        help="Shorthand for --format json")
    common.add_argument("--cache-dir", type=Path, default=None,
                        help=f"KL table cache directory (default ${CACHE_DIR_ENV} or data/cache)")
    common.add_argument("--no-cache", dest="use_cache", action="store_false", help="Neither read nor write the cache")
    common.add_argument("--workers", type=int, default=1,
                        help="Threads for the KL table build (default 1); output is identical for any value. "
                             "The build is pure Python, so threads give no speedup under the GIL")
    common.add_argument("--quiet", action="store_true", help="Suppress status lines and progress bars")

    parser = argparse.ArgumentParser(
        description="Kazhdan-Lusztig data and homological dimensions in category O",
        epilog="Generators are labelled 1..n in Bourbaki order.",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    commands.add_parser("pd-table", parents=[common], help="Projective dimension table")

    verify = commands.add_parser("verify", parents=[common], help="Run the verification suite")
    verify.add_argument("--check", dest="checks", action="append", default=[], choices=sorted(CHECKS),
                        help="Run only this check (repeatable)")

    kl = commands.add_parser("kl", parents=[common], help="Kazhdan-Lusztig polynomial P_{y,w}")
    kl.add_argument("y", help="Lower element")
    kl.add_argument("w", help="Upper element")
    kl.add_argument("--verify", action="store_true", help="Cross-check with the bar-invariance oracle")

    cells = commands.add_parser("cells", parents=[common], help="Cell decomposition")
    cells.add_argument("--side", default="twosided", choices=CELL_SIDES, help="Cell side (default twosided)")

    ext = commands.add_parser("ext", parents=[common], help="Graded Ext dimensions")
    ext.add_argument("--family", required=True, choices=EXT_FAMILIES, help="Ext family")
    ext.add_argument("--x", dest="x", default=None, help="Source element")
    ext.add_argument("--y", dest="y", default=None, help="Target element")
    ext.add_argument("--i", dest="i", type=int, default=None, help="Homological degree")
    ext.add_argument("--j", dest="j", type=int, default=None, help="Grading shift")

    commands.add_parser("quiver", parents=[common], help="Quiver of the homomorphism algebra of standard modules")
    return parser


def run(args: argparse.Namespace, log: Log) -> Tuple[Report, int]:
    config = RunConfig(
        command=args.command,
        type_label=args.type_label,
        rank=args.rank,
        output_format=args.output_format,
        cache_dir=args.cache_dir,
        use_cache=args.use_cache,
        workers=args.workers,
        checks=getattr(args, "checks", []),
        verify=getattr(args, "verify", False),
        quiet=args.quiet,
    )
    log("STEP 1", f"Building the Weyl group {config.label}...")
    system = build_system(config.type_label, config.rank)
    log("OK", f"{system.order} elements, l(w0) = {system.w0.length}")

    if config.command == "pd-table":
        return cmd_pd_table(config, system, log)
    if config.command == "verify":
        return cmd_verify(config, system, log)
    if config.command == "kl":
        return cmd_kl(config, system, log, args.y, args.w)
    if config.command == "cells":
        return cmd_cells(config, system, log, args.side)
    if config.command == "ext":
        return cmd_ext(config, system, log, args.family, args.x, args.y, args.i, args.j)
    return cmd_quiver(config, system, log)


def main(argv: Optional[List[str]] = None) -> int:
    """Main execution function; returns the exit code."""
    args = build_parser().parse_args(argv)
    log = make_log(args.quiet)
    try:
        report, exit_code = run(args, log)
    except ValidationError as e:
        first = e.errors()[0]
        log("ERROR", f"Invalid configuration: {first['msg']}")
        return EXIT_CONFIG_ERROR
    except (CoxeterError, OracleCapError, HomologyError) as e:
        if isinstance(e, OracleValidationError):
            log("ERROR", f"{e.__class__.__name__}: {e}")
            return EXIT_VERIFICATION_FAILED
        log("ERROR", f"{e.__class__.__name__}: {e}")
        return EXIT_CONFIG_ERROR
    except KazhdanLusztigError as e:
        log("ERROR", f"{e.__class__.__name__}: {e}")
        return EXIT_VERIFICATION_FAILED

    sys.stdout.write(render(report, args.output_format))
    return exit_code


if __name__ == "__main__":
    sys.exit(main())
