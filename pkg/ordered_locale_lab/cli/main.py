"""Typer CLI entry point for the ordered-locale workbench.

Every command takes a space or grid JSON file, a library locale name (CHAIN3,
VEE, STAR, LVFAIL, EQUALITY3, UPPER3) or a grid scenario name:

- olab check-axioms STAR
- olab cover VEE --region x --target z
- olab domain CONE_CUT --semantics all
- olab scenario "TWO_SLOPES(1,2)" --format json

Exit codes: 0 holds/covered, 1 violation/not covered, 2 unknown within the
bounds, 3 input error.
"""

import io
import os
import re
import sys
import uuid
from collections.abc import Iterator
from contextlib import contextmanager
from enum import Enum
from pathlib import Path

from dotenv import load_dotenv

# Load .env file before anything else
load_dotenv()

import click
import typer
from rich.console import Console

from ordered_locale_lab import __version__
from ordered_locale_lab.cli.formatters import (
    dump_json,
    format_axioms,
    format_cover,
    format_domain_report,
    format_gt,
    format_rows,
)
from ordered_locale_lab.cli.loaders import LoadedInput, load_input
from ordered_locale_lab.config import get_settings
from ordered_locale_lab.coverage import CoverageConfig, CoverageEngine, basis_of
from ordered_locale_lab.dependence import FromOrderedLocale, domain_of_dependence
from ordered_locale_lab.errors import OrderedLocaleError, RestrictionError
from ordered_locale_lab.locales import Axiom, check_axioms
from ordered_locale_lab.monitoring import bind_run_id, configure_logging, get_logger, unbind_run_id
from ordered_locale_lab.paths import make_path, restrict_future, restrict_past
from ordered_locale_lab.sites import kleisli_counterexample, verify_canonical_gt_axioms, verify_down_gt_axioms
from ordered_locale_lab.spacetime import (
    GridDocument,
    cell_label,
    chain_cover_minus,
    domains_all,
    render_svg,
    scenario,
    sort_cells,
)

log = get_logger(__name__)

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_UNKNOWN = 2
EXIT_INPUT = 3

cli = typer.Typer(
    name="olab",
    help="""Ordered Locale Lab - finite-model checks for ordered locales and causal coverage.

INPUTS:
  A space JSON file, a grid JSON file ("kind": "grid"), a library locale
  (CHAIN3, VEE, STAR, LVFAIL, EQUALITY3, UPPER3) or a grid scenario
  (MINKOWSKI_PLAIN, POINT_REMOVED, CONE_CUT, CURVE_REMOVED_FROM_A,
  REGION_REMOVED, TWO_SLOPES(a,b)).

REGIONS:
  Point labels separated by commas ("a,b"); grid cells as x:t ("2:0,3:0")
  or a region name stored with the grid (A, U).

EXIT CODES:
  0 holds / covered, 1 violation / not covered, 2 unknown, 3 input error.
""",
    add_completion=False,
)
paths_cli = typer.Typer(help="Operations on localic paths.", add_completion=False)
cli.add_typer(paths_cli, name="paths")

# Reports go to stdout through typer.echo; Rich tables through console
console = Console(force_terminal=True, no_color=os.getenv("NO_COLOR") is not None)
err_console = Console(stderr=True, no_color=os.getenv("NO_COLOR") is not None)


class OutputFormat(str, Enum):
    JSON = "json"
    ASCII = "ascii"
    SVG = "svg"


class Semantics(str, Enum):
    LOCALIC = "localic"
    CHAIN_CAUSAL = "chain-causal"
    CHAIN_CHRON = "chain-chron"
    INEXT_CAUSAL = "inext-causal"
    INEXT_CHRON = "inext-chron"
    ALL = "all"


# CLI semantics → grid domain column
_GRID_DOMAINS = {
    Semantics.LOCALIC: "localic",
    Semantics.CHAIN_CAUSAL: "bounded_causal",
    Semantics.CHAIN_CHRON: "bounded_chron",
    Semantics.INEXT_CAUSAL: "inext_causal",
    Semantics.INEXT_CHRON: "inext_chron",
}

BASES = ("all", "singletons", "rectangles")


@contextmanager
def input_errors() -> Iterator[None]:
    """Map malformed input onto exit code 3.

    pydantic's ValidationError and json.JSONDecodeError are ValueErrors.
    """
    try:
        yield
    except (OrderedLocaleError, ValueError, OSError) as e:
        err_console.print(f"[bold red]Error:[/bold red] {e}", style="red", markup=True, highlight=False)
        raise typer.Exit(code=EXIT_INPUT)


def _choice(enum: type[Enum], value: str, option: str):
    try:
        return enum(value)
    except ValueError:
        allowed = ", ".join(m.value for m in enum)
        raise ValueError(f"{option} must be one of {allowed}, got '{value}'") from None


def _direction(value: str) -> str:
    if value not in ("past", "future"):
        raise ValueError(f"--direction must be past or future, got '{value}'")
    return value


def _basis(inp: LoadedInput, basis: str | None) -> str:
    """Resolve --basis; grids default to their rectangles, spaces to every open."""
    name = basis or ("rectangles" if inp.grid is not None else "all")
    if name not in BASES:
        raise ValueError(f"--basis must be one of {', '.join(BASES)}, got '{name}'")
    if name == "rectangles" and inp.grid is None:
        raise ValueError("--basis rectangles needs a grid input")
    return name


def _basis_masks(inp: LoadedInput, name: str) -> tuple[int, ...] | None:
    if name == "rectangles":
        return inp.grid.rectangles()
    return basis_of(inp.locale, name)


def _coverage_config(
    inp: LoadedInput,
    basis: str,
    max_path_len: int | None,
    max_refinement_len: int | None,
    budget: int | None,
    keep_certificates: bool = False,
) -> CoverageConfig:
    return CoverageConfig(
        basis=_basis_masks(inp, basis),
        max_target_path_len=max_path_len,
        max_refinement_len=max_refinement_len,
        budget=budget,
        keep_certificates=keep_certificates,
    )


def _bounds(budget: int | None, basis: str | None = None, effective: dict | None = None) -> dict:
    """Report header with the bounds the search actually ran under.

    effective is ResolvedCoverageConfig.bounds(): unset options appear as the
    values derived from the frame.
    """
    header = {"budget": budget or get_settings().budget}
    if basis is not None:
        header["basis"] = basis
    if effective:
        header["universe_size"] = effective["universe_size"]
        header["max_path_len"] = effective["max_target_path_len"]
        header["max_refinement_len"] = effective["max_refinement_len"]
    return header


def _emit(text: str, out: Path | None) -> None:
    if out is None:
        typer.echo(text, nl=False)
        return
    out.parent.mkdir(parents=True, exist_ok=True)
    out.write_text(text, encoding="utf-8")
    err_console.print(f"Wrote {out}", highlight=False)


def _show(data: dict, fmt: OutputFormat, table, out: Path | None) -> None:
    """JSON or the ascii rendering to stdout, or to --out as plain text."""
    if fmt is OutputFormat.JSON:
        _emit(dump_json(data), out)
    elif isinstance(table, str):
        _emit(table, out)
    elif out is not None:
        buffer = io.StringIO()
        Console(file=buffer, width=120, no_color=True).print(table)
        _emit(buffer.getvalue(), out)
    else:
        console.print(table)


def _no_svg(fmt: OutputFormat) -> None:
    if fmt is OutputFormat.SVG:
        raise ValueError("svg output is only available for grid domains and scenarios")


def _status_code(statuses: list[str]) -> int:
    if "violated" in statuses or "not_covered" in statuses:
        return EXIT_VIOLATION
    if "unknown" in statuses:
        return EXIT_UNKNOWN
    return EXIT_OK


@cli.command("check-axioms")
def check_axioms_cmd(
    source: str = typer.Argument(..., help="Space/grid JSON file or library name"),
    axiom: list[str] = typer.Option(
        None, "--axiom", "-x", help="Axiom to check (repeatable): join, c-order, c-join, wedge+, wedge-, bottom, F+, F-, parallel"
    ),
    fmt: str = typer.Option("json", "--format", "-f", help="json or ascii"),
    workers: int = typer.Option(None, "--workers", "-w", min=1, help="Threads for tuple scans"),
    budget: int = typer.Option(None, "--budget", min=1, help="Tuples per axiom (default OLAB_BUDGET)"),
    out: Path = typer.Option(None, "--out", "-o", help="Write the report to a file"),
):
    """Check the ordered-locale axioms and print a witness for each violation.

    Examples:
      olab check-axioms CHAIN3
      olab check-axioms STAR --axiom F- --format ascii
    """
    with input_errors():
        output = _choice(OutputFormat, fmt, "--format")
        _no_svg(output)
        selection = [_choice(Axiom, a, "--axiom") for a in axiom] if axiom else None
        inp = load_input(source)
        L = inp.locale
        reports = check_axioms(L, selection, workers, budget)
    data = {
        "command": "check-axioms",
        "input": inp.name,
        "bounds": _bounds(budget),
        "axioms": [r.to_dict(L) for r in reports],
    }
    _show(data, output, format_axioms(data), out)
    raise typer.Exit(code=_status_code([r.status.value for r in reports]))


@cli.command()
def cones(
    source: str = typer.Argument(..., help="Space/grid JSON file or library name"),
    region: str = typer.Option(..., "--region", "-a", help="Open region"),
    fmt: str = typer.Option("json", "--format", "-f", help="json or ascii"),
    out: Path = typer.Option(None, "--out", "-o", help="Write the report to a file"),
):
    """Print the future cone ⇑A and past cone ⇓A of a region."""
    with input_errors():
        output = _choice(OutputFormat, fmt, "--format")
        _no_svg(output)
        inp = load_input(source)
        L = inp.locale
        a = inp.mask(region)
    labels = L.space.labels
    data = {
        "command": "cones",
        "input": inp.name,
        "order": L.source.kind,
        "region": labels(a),
        "cone_up": labels(L.cone_up(a)),
        "cone_down": labels(L.cone_down(a)),
    }
    pairs = {"region": L.format(a), "⇑": L.format(L.cone_up(a)), "⇓": L.format(L.cone_down(a))}
    _show(data, output, format_rows(f"Cones in {inp.name}", pairs), out)
    raise typer.Exit(code=EXIT_OK)


@cli.command()
def cover(
    source: str = typer.Argument(..., help="Space/grid JSON file or library name"),
    region: str = typer.Option(..., "--region", "-a", help="Covering region A"),
    target: str = typer.Option(..., "--target", "-u", help="Covered region U"),
    direction: str = typer.Option("past", "--direction", "-d", help="past (Cov⁻) or future (Cov⁺)"),
    semantics: str = typer.Option(
        "localic", "--semantics", "-s", help="localic, or for grids chain-causal, chain-chron, inext-causal, inext-chron"
    ),
    basis: str = typer.Option(
        None, "--basis", help="Step universe: all, singletons or rectangles (default: rectangles for grids, all otherwise)"
    ),
    max_path_len: int = typer.Option(None, "--max-path-len", min=1, help="Longest target path"),
    max_refinement_len: int = typer.Option(None, "--max-refinement-len", min=1, help="Longest refinement"),
    budget: int = typer.Option(None, "--budget", min=1, help="Suffix states per target (default OLAB_BUDGET)"),
    workers: int = typer.Option(None, "--workers", "-w", min=1, help="Threads for refinement checks"),
    certificates: bool = typer.Option(True, "--certificates/--no-certificates", help="Attach refinement families"),
    fmt: str = typer.Option("json", "--format", "-f", help="json or ascii"),
    out: Path = typer.Option(None, "--out", "-o", help="Write the verdict to a file"),
):
    """Decide A ∈ Cov⁻(U) (or Cov⁺) with a witness path or certificates.

    Examples:
      olab cover VEE --region x --target z
      olab cover CONE_CUT --region A --target U --semantics inext-causal
    """
    with input_errors():
        output = _choice(OutputFormat, fmt, "--format")
        _no_svg(output)
        direction = _direction(direction)
        mode = _choice(Semantics, semantics, "--semantics")
        if mode is Semantics.ALL:
            raise ValueError("cover decides one semantics at a time")
        inp = load_input(source)
        basis = _basis(inp, basis)
        if mode is Semantics.LOCALIC:
            cfg = _coverage_config(inp, basis, max_path_len, max_refinement_len, budget, certificates)
            engine = CoverageEngine(inp.locale, cfg, workers)
            verdict = engine.decide(direction, inp.mask(region), inp.mask(target))
            effective = engine.resolved.bounds()
            payload = verdict.to_dict()
            status = verdict.outcome.value
        else:
            if inp.grid is None:
                raise ValueError(f"--semantics {mode.value} needs a grid input")
            if direction != "past":
                raise ValueError("chain covers are decided from below (--direction past)")
            effective = None
            chain_mode = "chron" if mode in (Semantics.CHAIN_CHRON, Semantics.INEXT_CHRON) else "causal"
            inextendible = mode in (Semantics.INEXT_CAUSAL, Semantics.INEXT_CHRON)
            chain_verdict = chain_cover_minus(
                inp.grid, inp.cells(region), inp.cells(target), chain_mode, inextendible=inextendible
            )
            payload = chain_verdict.to_dict()
            status = "covered" if chain_verdict.covered else "not_covered"
    data = {
        "command": "cover",
        "input": inp.name,
        "semantics": mode.value,
        "bounds": _bounds(budget, basis, effective),
        "verdict": payload,
    }
    _show(data, output, format_cover(data), out)
    raise typer.Exit(code=_status_code([status]))


def _grid_domain(inp: LoadedInput, region: str, mode: Semantics, cfg_args: dict, workers: int | None):
    selection = None if mode is Semantics.ALL else [_GRID_DOMAINS[mode]]
    basis = cfg_args["basis"]
    if basis == "rectangles":
        # localic_domain fills in the rectangles itself
        masks = None
    elif basis == "all":
        masks = inp.locale.frame
    else:
        masks = _basis_masks(inp, basis)
    cfg = CoverageConfig(
        basis=masks,
        max_target_path_len=cfg_args["max_path_len"],
        max_refinement_len=cfg_args["max_refinement_len"],
        budget=cfg_args["budget"],
        keep_certificates=False,
    )
    return domains_all(inp.grid, inp.cells(region), selection, cfg, workers)


@cli.command()
def domain(
    source: str = typer.Argument(..., help="Space/grid JSON file or library name"),
    region: str = typer.Option(None, "--region", "-a", help="Region A (grids default to their stored A)"),
    semantics: str = typer.Option(
        "all", "--semantics", "-s", help="localic, chain-causal, chain-chron, inext-causal, inext-chron or all"
    ),
    direction: str = typer.Option("future", "--direction", "-d", help="future (D⁺) or past (D⁻)"),
    basis: str = typer.Option(
        None, "--basis", help="Step universe: all, singletons or rectangles (default: rectangles for grids, all otherwise)"
    ),
    max_path_len: int = typer.Option(None, "--max-path-len", min=1, help="Longest target path"),
    max_refinement_len: int = typer.Option(None, "--max-refinement-len", min=1, help="Longest refinement"),
    budget: int = typer.Option(None, "--budget", min=1, help="Suffix states per target (default OLAB_BUDGET)"),
    workers: int = typer.Option(None, "--workers", "-w", min=1, help="Threads for the localic column"),
    fmt: str = typer.Option("json", "--format", "-f", help="json, ascii or svg (grids)"),
    out: Path = typer.Option(None, "--out", "-o", help="Write the report to a file"),
):
    """Domain of dependence of a region.

    Grids report the chain domains and the localic domain side by side with
    their inclusion matrix; spaces report D⁺ (future) or D⁻ (past).

    Examples:
      olab domain CONE_CUT --semantics all
      olab domain CHAIN3 --region a --direction future --semantics localic
    """
    with input_errors():
        output = _choice(OutputFormat, fmt, "--format")
        mode = _choice(Semantics, semantics, "--semantics")
        direction = _direction(direction)
        inp = load_input(source)
        basis = _basis(inp, basis)
        cfg_args = {
            "basis": basis,
            "max_path_len": max_path_len,
            "max_refinement_len": max_refinement_len,
            "budget": budget,
        }
        if region is None:
            if inp.grid is None:
                raise ValueError("--region is required for space inputs")
            region = "A"
        if inp.grid is not None:
            if direction != "future":
                raise ValueError("grid domains are future domains of dependence (--direction future)")
            report = _grid_domain(inp, region, mode, cfg_args, workers)
            effective = report.bounds
        else:
            if mode not in (Semantics.LOCALIC, Semantics.ALL):
                raise ValueError(f"--semantics {mode.value} needs a grid input")
            _no_svg(output)
            a = inp.mask(region)
            coverage = FromOrderedLocale(
                inp.locale, _coverage_config(inp, basis, max_path_len, max_refinement_len, budget), workers
            )
            effective = coverage.engine.resolved.bounds()
            result = domain_of_dependence(coverage)
    header = {"command": "domain", "input": inp.name, "semantics": mode.value, "direction": direction}
    header["bounds"] = _bounds(budget, basis, effective)

    if inp.grid is not None:
        data = {**header, "report": report.to_dict()}
        if output is OutputFormat.ASCII:
            text = format_domain_report(inp.grid, report)
        else:
            text = render_svg(inp.grid, report.region, inp.regions.get("U", ()), report)
        _show(data, output, text, out)
        code = EXIT_VIOLATION if report.violations else EXIT_UNKNOWN if report.undecided else EXIT_OK
        raise typer.Exit(code=code)

    space = inp.locale.space
    sign = "plus" if direction == "future" else "minus"
    unknown = result.provenance[sign][a]["unknown"]
    data = {
        **header,
        "region": space.labels(a),
        "domain": space.labels(result.of(sign)[a]),
        "partial": bool(unknown),
        "unknown": [space.labels(v) for v in unknown],
    }
    symbol = "D⁺" if sign == "plus" else "D⁻"
    pairs = {"region": space.format(a), symbol: space.format(result.of(sign)[a]), "partial": str(bool(unknown))}
    _show(data, output, format_rows(f"Domain of dependence in {inp.name}", pairs), out)
    raise typer.Exit(code=EXIT_UNKNOWN if unknown else EXIT_OK)


@cli.command()
def gtop(
    source: str = typer.Argument(..., help="Space/grid JSON file or library name"),
    canonical: bool = typer.Option(False, "--canonical", help="Check the canonical topology ⋁R = U instead of J⁻"),
    kleisli: bool = typer.Option(False, "--kleisli", help="Also search for a stability failure on W ⊑ ⇓U arrows"),
    basis: str = typer.Option(
        None, "--basis", help="Step universe: all, singletons or rectangles (default: rectangles for grids, all otherwise)"
    ),
    max_path_len: int = typer.Option(None, "--max-path-len", min=1, help="Longest target path"),
    max_refinement_len: int = typer.Option(None, "--max-refinement-len", min=1, help="Longest refinement"),
    budget: int = typer.Option(None, "--budget", min=1, help="Sieves per root and searches per target"),
    fmt: str = typer.Option("json", "--format", "-f", help="json or ascii"),
    out: Path = typer.Option(None, "--out", "-o", help="Write the report to a file"),
):
    """Check that causal coverage forms a ⇓-Grothendieck topology."""
    with input_errors():
        output = _choice(OutputFormat, fmt, "--format")
        _no_svg(output)
        inp = load_input(source)
        L = inp.locale
        basis = _basis(inp, basis)
        cfg = _coverage_config(inp, basis, max_path_len, max_refinement_len, budget)
        if canonical:
            reports = verify_canonical_gt_axioms(L.space, budget)
        else:
            reports = verify_down_gt_axioms(L, cfg, budget)
        found = kleisli_counterexample(L, cfg, budget) if kleisli else None
        effective = None if canonical else cfg.resolve(L).bounds()
    data = {
        "command": "gtop",
        "input": inp.name,
        "topology": "canonical" if canonical else "J-",
        "bounds": _bounds(budget, basis, effective),
        "axioms": [r.to_dict(L.space) for r in reports],
    }
    if found is not None:
        data["kleisli"] = found.to_dict(L.space)
    _show(data, output, format_gt(data), out)
    raise typer.Exit(code=_status_code([r.status.value for r in reports]))


@paths_cli.command("restrict")
def restrict(
    source: str = typer.Argument(..., help="Space/grid JSON file or library name"),
    step: list[str] = typer.Option(..., "--step", "-s", help="Path step as a region, repeated in order"),
    to: str = typer.Option(..., "--to", help="Region W inside the endpoint (or V inside the start)"),
    direction: str = typer.Option("past", "--direction", "-d", help="past: p|_W, future: p|^V"),
    fmt: str = typer.Option("json", "--format", "-f", help="json or ascii"),
    out: Path = typer.Option(None, "--out", "-o", help="Write the result to a file"),
):
    """Restrict a path to a subregion of its endpoint (past) or start (future).

    Exits 1 when a restricted step comes out empty, which happens only on
    locales that are not parallel ordered.

    Example:
      olab paths restrict CHAIN3 --step a --step b,c --to b
    """
    error = None
    restricted = None
    with input_errors():
        output = _choice(OutputFormat, fmt, "--format")
        _no_svg(output)
        direction = _direction(direction)
        inp = load_input(source)
        L = inp.locale
        p = make_path(L, [inp.mask(s) for s in step])
        w = inp.mask(to)
        try:
            restricted = restrict_past(p, w) if direction == "past" else restrict_future(p, w)
        except RestrictionError as e:
            error = e
    data = {
        "command": "paths restrict",
        "input": inp.name,
        "direction": direction,
        "path": p.labels(),
        "to": L.space.labels(w),
        "restricted": None if restricted is None else restricted.labels(),
    }
    if error is not None:
        data["error"] = str(error)
        data["index"] = error.index
    pairs = {
        "path": p.format(),
        "to": L.format(w),
        "restricted": "-" if restricted is None else restricted.format(),
    }
    _show(data, output, format_rows(f"Restriction in {inp.name}", pairs), out)
    raise typer.Exit(code=EXIT_VIOLATION if error is not None else EXIT_OK)


def _slug(name: str) -> str:
    return re.sub(r"[^a-z0-9]+", "_", name.lower()).strip("_")


@cli.command("scenario")
def scenario_cmd(
    name: str = typer.Argument(..., help="Scenario name, e.g. CONE_CUT or TWO_SLOPES(1,2)"),
    fmt: str = typer.Option("json", "--format", "-f", help="json, ascii or svg"),
    out: Path = typer.Option(None, "--out", "-o", help="Directory for the artifact (file <scenario>.<format>)"),
    workers: int = typer.Option(None, "--workers", "-w", min=1, help="Threads for the localic column"),
):
    """Run a grid scenario: all five domains, their inclusions and the expected outcome.

    Exits 1 when the report differs from the scenario's expected fragment.

    Examples:
      olab scenario MINKOWSKI_PLAIN --format svg --out artifacts/
      olab scenario REGION_REMOVED --format ascii
    """
    with input_errors():
        output = _choice(OutputFormat, fmt, "--format")
        sc = scenario(name)
        G = sc.grid
        report = domains_all(G, sc.region, workers=workers)
        parallel = G.parallel_report(workers).status.value if "parallel" in sc.expected else None
    problems = sc.mismatches(report, parallel)
    if problems:
        log.warning("scenario_mismatch", scenario=sc.name, problems=problems)

    if output is OutputFormat.JSON:
        data = {
            "command": "scenario",
            "scenario": sc.name,
            "bounds": report.bounds,
            "grid": GridDocument.from_grid(G, sc.regions()).model_dump(mode="json"),
            "target": [cell_label(c) for c in sort_cells(sc.target)],
            "expected": sc.expected,
            "matches_expected": not problems,
            "problems": problems,
            "report": report.to_dict(),
        }
        if parallel is not None:
            data["parallel"] = parallel
        text = dump_json(data)
    elif output is OutputFormat.ASCII:
        text = format_domain_report(G, report, problems)
    else:
        text = render_svg(G, sc.region, sc.target, report)

    with input_errors():
        _emit(text, None if out is None else out / f"{_slug(sc.name)}.{output.value}")
    raise typer.Exit(code=EXIT_VIOLATION if problems else EXIT_OK)


@cli.command()
def version():
    """Show version and effective settings."""
    settings = get_settings()
    console.print(f"[bold cyan]Ordered Locale Lab[/bold cyan] v{__version__}")
    console.print()
    console.print("[bold]Settings:[/bold]")
    console.print(f"  Budget (OLAB_BUDGET): {settings.budget}", highlight=False)
    console.print(f"  Workers (OLAB_WORKERS): {settings.workers}", highlight=False)
    console.print(f"  Discrete cap (OLAB_DISCRETE_CAP): {settings.discrete_cap}", highlight=False)
    console.print(f"  Max points (OLAB_MAX_POINTS): {settings.max_points}", highlight=False)
    console.print(f"  Log level (OLAB_LOG_LEVEL): {settings.log_level}", highlight=False)


def main():
    """Entry point for CLI.

    Usage errors reported by the argument parser exit with the input-error code.
    """
    log_mode = os.getenv("LOG_MODE", "development")
    configure_logging(log_mode, get_settings().log_level)
    bind_run_id(uuid.uuid4().hex[:8])
    try:
        code = cli(standalone_mode=False)
    except click.ClickException as e:
        e.show()
        code = EXIT_INPUT
    except click.Abort:
        code = EXIT_INPUT
    finally:
        unbind_run_id()
    sys.exit(code if isinstance(code, int) else EXIT_OK)


if __name__ == "__main__":
    main()
