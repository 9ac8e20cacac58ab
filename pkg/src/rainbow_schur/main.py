# src/rainbow_schur/main.py
import json
import logging
import time
from contextlib import contextmanager
from fractions import Fraction
from pathlib import Path
from typing import Any, Iterator, Optional

import mpmath
import typer
from rich.console import Console
from rich.progress import (
    BarColumn,
    MofNCompleteColumn,
    Progress,
    SpinnerColumn,
    TextColumn,
    TimeElapsedColumn,
)
from rich.table import Table

from rainbow_schur.ap.base import KColoring
from rainbow_schur.ap.equinumerous import equinumerous_ap3_max
from rainbow_schur.ap.progressions import (
    classify_aps,
    count_aps,
    cs_ceiling,
    modular_rainbow_count,
    totient_fraction,
)
from rainbow_schur.bounds.constants import simple_alpha_root
from rainbow_schur.bounds.solver import (
    compare_printed_point,
    region_rows,
    solve_fixed_gamma,
    solve_minmax,
    write_region_csv,
)
from rainbow_schur.config.logging_config import setup_logging
from rainbow_schur.config.settings import settings
from rainbow_schur.core.base import Coloring
from rainbow_schur.core.constructions import build_modular, parse_construction
from rainbow_schur.core.graphmap import count_rainbow_triangles
from rainbow_schur.core.triples import classify
from rainbow_schur.search.anneal import AnnealSchedule, anneal_max
from rainbow_schur.search.base import ProgressCallback, SearchIntegrityError, SearchResult
from rainbow_schur.search.checkpoint import CheckpointError, load_checkpoint
from rainbow_schur.search.exhaustive import exhaustive_max
from rainbow_schur.utils.io import ColoringFileError, read_coloring, read_kcoloring
from rainbow_schur.utils.report import RunReport, digest, to_jsonable, tool_version
from rainbow_schur.verify.suites import SUITES, run_suite

logger = logging.getLogger("rainbow_schur")

EXIT_IDENTITY_FAILURE = 1
EXIT_INPUT_ERROR = 2
EXIT_STATE_CORRUPTION = 3
EXIT_INTERRUPTED = 130

app = typer.Typer(
    name="rainbow-schur",
    help="Exact counts, bounds and searches for rainbow Schur triples",
    add_completion=False,
)
search_app = typer.Typer(
    help="Search for colorings with many rainbow triples", no_args_is_help=True
)
app.add_typer(search_app, name="search")

console = Console()
err_console = Console(stderr=True)


@app.callback()
def main(
    verbose: bool = typer.Option(False, "--verbose", "-v", help="Log debug output to stderr"),
):
    """Rainbow Schur triple workbench."""
    setup_logging(verbose)


@contextmanager
def _handle_errors(command: str) -> Iterator[None]:
    """Map failures onto the exit-code contract."""
    try:
        yield
    except typer.Exit:
        raise
    except KeyboardInterrupt:
        logger.warning(f"{command} interrupted by user")
        err_console.print(f"\n[yellow]{command} interrupted by user")
        raise typer.Exit(EXIT_INTERRUPTED)
    except CheckpointError as e:
        logger.error(f"{command}: {e}")
        err_console.print(f"[red]Corrupt checkpoint: {e}")
        raise typer.Exit(EXIT_STATE_CORRUPTION)
    except ColoringFileError as e:
        logger.error(f"{command}: {e}")
        err_console.print(f"[red]Invalid coloring file: {e}")
        raise typer.Exit(EXIT_INPUT_ERROR)
    except SearchIntegrityError as e:
        logger.error(f"{command}: {e}")
        err_console.print(f"[red]Integrity check failed: {e}")
        raise typer.Exit(EXIT_IDENTITY_FAILURE)
    except ValueError as e:
        logger.error(f"{command}: {e}")
        err_console.print(f"[red]Invalid input: {e}")
        raise typer.Exit(EXIT_INPUT_ERROR)
    except Exception as e:
        logger.error(f"Error during {command}: {str(e)}", exc_info=True)
        err_console.print(f"[red]Error during {command}: {str(e)}")
        raise typer.Exit(1)


def _argv(command: list[str], params: dict[str, Any]) -> list[str]:
    """Re-runnable argument list from the parsed options; False and None are left out."""
    argv = ["rainbow-schur", *command]
    for name, value in params.items():
        if value is None or value is False:
            continue
        flag = "--json" if name == "as_json" else "--" + name.replace("_", "-")
        argv.extend([flag] if value is True else [flag, str(value)])
    return argv


def _report(argv: list[str], started: float, results: dict, input_bytes: bytes | None = None):
    if input_bytes is None:
        input_bytes = json.dumps([a for a in argv if a != "--json"]).encode("utf-8")
    return RunReport(
        command=argv,
        input_digest=digest(input_bytes),
        elapsed_seconds=round(time.perf_counter() - started, 6),
        results=to_jsonable(results),
        tool_version=tool_version(),
    )


def _fraction_text(value: Fraction) -> str:
    return f"{value.numerator}/{value.denominator} ({float(value):.6f})"


def _emit(report: RunReport, as_json: bool, table: Table | None = None) -> None:
    if as_json:
        typer.echo(report.model_dump_json(indent=2))
        return
    if table is not None:
        console.print(table)
    console.print(f"[dim]{report.elapsed_seconds:.3f}s, rainbow-schur {report.tool_version}")


def _table(title: str, rows: list[tuple[str, Any]]) -> Table:
    table = Table(title=title)
    table.add_column("Quantity", style="cyan")
    table.add_column("Value", justify="right")
    for name, value in rows:
        if isinstance(value, Fraction):
            value = _fraction_text(value)
        elif isinstance(value, mpmath.mpf):
            value = mpmath.nstr(value, 20)
        elif isinstance(value, float):
            value = f"{value:.8f}"
        table.add_row(name, str(value))
    return table


def _load_coloring(
    coloring: Optional[Path], construction: Optional[str], n: Optional[int]
) -> tuple[Coloring, bytes | None]:
    if (coloring is None) == (construction is None):
        raise ValueError("give exactly one of --coloring or --construction")
    if coloring is not None:
        base = read_coloring(coloring)
        if n is not None and n != base.n:
            raise ValueError(f"--n {n} does not match the file's n = {base.n}")
        return base, coloring.read_bytes()
    if n is None:
        raise ValueError("--construction needs --n")
    return parse_construction(construction).build(n), None


@app.command()
def count(
    ctx: typer.Context,
    n: Optional[int] = typer.Option(None, "--n", help="Universe size [n]"),
    construction: Optional[str] = typer.Option(
        None, "--construction", "-c", help="c0, mod:3, constant:c or interval:b1,b2/c1,c2,c3"
    ),
    coloring: Optional[Path] = typer.Option(None, "--coloring", "-f", help="Coloring file"),
    profiles: bool = typer.Option(False, "--profiles", help="Include r(z), nr(z) and mono(z)"),
    triangles: bool = typer.Option(False, "--triangles", help="Add induced triangle counts"),
    method: str = typer.Option("auto", "--method", help="auto, direct or fft convolution"),
    as_json: bool = typer.Option(False, "--json", help="Print the JSON report"),
):
    """Count rainbow, monochromatic and bichromatic Schur triples of a coloring."""
    started = time.perf_counter()
    argv = _argv(["count"], ctx.params)
    with _handle_errors("count"):
        if method not in ("auto", "direct", "fft"):
            raise ValueError(f"--method must be auto, direct or fft, got {method}")
        base, raw = _load_coloring(coloring, construction, n)
        stats = classify(base, method=method)
        results: dict[str, Any] = {
            "n": stats.n,
            "total": stats.total,
            "rainbow": stats.rainbow,
            "mono": stats.mono,
            "bichromatic": stats.bichromatic,
            "fraction": stats.fraction,
        }
        if profiles:
            results["r_profile"] = stats.r_profile
            results["nr_profile"] = stats.nr_profile
            results["mono_profile"] = stats.mono_profile
        if triangles:
            tri = count_rainbow_triangles(base)
            results["total_triangles"] = tri.total_triangles
            results["rainbow_triangles"] = tri.rainbow_triangles
            results["triangle_density"] = (
                Fraction(tri.rainbow_triangles, tri.total_triangles) if tri.total_triangles else 0
            )
        report = _report(argv, started, results, raw)
        rows = [(k, v) for k, v in results.items() if not k.endswith("_profile")]
        _emit(report, as_json, _table(f"Schur triples of [{stats.n}]", rows))


@search_app.command("exhaustive")
def search_exhaustive(
    ctx: typer.Context,
    n: int = typer.Option(..., "--n", help="Universe size [n]"),
    threads: int = typer.Option(1, "--threads", "-t", help="Worker processes"),
    checkpoint: Optional[Path] = typer.Option(None, "--checkpoint", help="Checkpoint file"),
    resume: bool = typer.Option(False, "--resume", help="Continue from --checkpoint"),
    all_optima: bool = typer.Option(False, "--all-optima", help="Collect every optimum"),
    no_prune: bool = typer.Option(False, "--no-prune", help="Disable bound pruning"),
    node_budget: Optional[int] = typer.Option(None, "--node-budget", help="Stop after N nodes"),
    as_json: bool = typer.Option(False, "--json", help="Print the JSON report"),
):
    """Exact maximum rainbow count over all colorings of [n]."""
    started = time.perf_counter()
    argv = _argv(["search", "exhaustive"], ctx.params)
    with _handle_errors("search exhaustive"):
        state = None
        if resume:
            if checkpoint is None:
                raise ValueError("--resume needs --checkpoint")
            state = load_checkpoint(checkpoint)
        with _search_progress(f"Exhaustive search n={n}", enabled=not as_json) as advance:
            result = exhaustive_max(
                n,
                collect_all_optima=all_optima,
                threads=threads,
                checkpoint=checkpoint,
                prune=not no_prune,
                node_budget=node_budget,
                resume=state,
                on_progress=advance,
            )
        _emit_search(argv, started, result, as_json)


@search_app.command("anneal")
def search_anneal(
    ctx: typer.Context,
    n: int = typer.Option(..., "--n", help="Universe size [n]"),
    seed: int = typer.Option(0, "--seed", help="Root seed"),
    iters: Optional[int] = typer.Option(None, "--iters", help="Moves per restart"),
    restarts: Optional[int] = typer.Option(None, "--restarts", help="Independent restarts"),
    temperature: Optional[float] = typer.Option(
        None, "--temperature", help="Initial temperature (calibrated when omitted)"
    ),
    threads: int = typer.Option(1, "--threads", "-t", help="Worker processes"),
    as_json: bool = typer.Option(False, "--json", help="Print the JSON report"),
):
    """Simulated annealing from c0 and random starts."""
    started = time.perf_counter()
    argv = _argv(["search", "anneal"], ctx.params)
    with _handle_errors("search anneal"):
        overrides = {"iters": iters, "restarts": restarts, "temperature": temperature}
        schedule = AnnealSchedule(**{k: v for k, v in overrides.items() if v is not None})
        with _search_progress(f"Annealing n={n}", enabled=not as_json) as advance:
            result = anneal_max(
                n, seed=seed, schedule=schedule, threads=threads, on_progress=advance
            )
        _emit_search(argv, started, result, as_json)


@contextmanager
def _search_progress(description: str, enabled: bool) -> Iterator[ProgressCallback]:
    """Transient spinner and task counter on stderr; nothing is drawn when disabled."""
    with Progress(
        SpinnerColumn(),
        TextColumn("[progress.description]{task.description}"),
        BarColumn(),
        MofNCompleteColumn(),
        TimeElapsedColumn(),
        console=err_console,
        transient=True,
        disable=not enabled,
    ) as progress:
        task = progress.add_task(description, total=None)

        def advance(done: int, total: int) -> None:
            progress.update(task, completed=done, total=total)

        yield advance


def _emit_search(argv: list[str], started: float, result: SearchResult, as_json: bool) -> None:
    report = _report(argv, started, result.model_dump())
    rows = [
        ("n", result.n),
        ("best count", result.best_count),
        ("fraction", Fraction(result.best_count, result.n * (result.n - 1) // 2 or 1)),
        ("optima", len(result.optima)),
        ("nodes visited", result.nodes_visited),
        ("pruned", result.pruned),
        ("partial", result.partial),
    ]
    if result.optima:
        rows.append(("first optimum", result.optima[0]))
    if result.notable:
        err_console.print(f"[bold yellow]Notable: fraction above {settings.CONJECTURE_CEILING}")
    _emit(report, as_json, _table(f"Search over colorings of [{result.n}]", rows))


@app.command()
def bounds(
    ctx: typer.Context,
    gamma: Optional[float] = typer.Option(None, "--gamma", help="Solve at one gamma"),
    optimize: bool = typer.Option(False, "--optimize", help="Min-max over gamma"),
    printed_point: bool = typer.Option(
        False,
        "--printed-point",
        "--paper-point",
        help="Printed closed-form point against the solver at gamma0",
    ),
    simple: bool = typer.Option(False, "--simple", help="Root of the simple cubic bound"),
    grid_steps: Optional[int] = typer.Option(None, "--grid-steps", help="Alpha grid size"),
    tol: Optional[float] = typer.Option(None, "--tol", help="Golden-section tolerance"),
    no_disjunction: bool = typer.Option(
        False, "--no-disjunction", help="Drop the disjunction constraint"
    ),
    curve: bool = typer.Option(False, "--curve", help="Include the gamma curve (--optimize)"),
    export_region: Optional[Path] = typer.Option(
        None, "--export-region", help="Write the feasible-region CSV"
    ),
    region_steps: int = typer.Option(1000, "--region-steps", help="Alpha rows in the CSV"),
    as_json: bool = typer.Option(False, "--json", help="Print the JSON report"),
):
    """Constants and the continuous optimization behind the upper bound."""
    started = time.perf_counter()
    argv = _argv(["bounds"], ctx.params)
    with _handle_errors("bounds"):
        modes = sum([gamma is not None, optimize, printed_point, simple])
        if modes > 1 or (modes == 0 and export_region is None):
            raise ValueError("give exactly one of --gamma, --optimize, --printed-point, --simple")

        results: dict[str, Any] = {}
        rows: list[tuple[str, Any]] = []
        if simple:
            root = simple_alpha_root()
            results = root.model_dump()
            rows = [
                ("alpha (closed form)", root.closed_form),
                ("alpha (Newton)", root.newton),
                ("residual", root.residual),
                ("coefficient", root.coefficient),
                ("fraction bound", root.fraction_bound),
            ]
        elif printed_point:
            comparison = compare_printed_point()
            results = comparison.model_dump()
            rows = [
                ("gamma0", comparison.printed.gamma0),
                ("printed alpha*", comparison.printed.alpha_star),
                ("printed fraction", comparison.printed.fraction),
                ("beta2 gap", comparison.printed.beta2_gap),
                ("solver alpha", comparison.solver.alpha_star),
                ("solver fraction", comparison.solver.fraction),
                ("fraction gap", comparison.fraction_gap),
            ]
        elif optimize:
            outcome = solve_minmax(resolution=grid_steps, with_curve=curve)
            results = outcome.model_dump()
            rows = _solution_rows(outcome.best)
        elif gamma is not None:
            solution = solve_fixed_gamma(
                gamma, resolution=grid_steps, use_disjunction=not no_disjunction, tol=tol
            )
            results = solution.model_dump()
            rows = _solution_rows(solution)

        if export_region is not None:
            region_gamma = gamma if gamma is not None else settings.GAMMA0
            write_region_csv(export_region, region_rows(region_gamma, region_steps))
            results["region_csv"] = str(export_region)

        report = _report(argv, started, results)
        _emit(report, as_json, _table("Upper-bound optimization", rows) if rows else None)


def _solution_rows(solution) -> list[tuple[str, Any]]:
    rows = [("gamma", solution.gamma), ("feasible", solution.feasible)]
    if solution.feasible:
        rows += [
            ("alpha*", solution.alpha_star),
            ("beta*", solution.beta_star),
            ("fraction", solution.fraction),
            ("binding disjunct", solution.binding.disjunct),
        ]
    return rows


@app.command()
def verify(
    ctx: typer.Context,
    family: str = typer.Option(..., "--family", help=f"One of {', '.join(SUITES)}"),
    trials: Optional[int] = typer.Option(None, "--trials", help="Random cases to draw"),
    max_n: Optional[int] = typer.Option(None, "--max-n", help="Largest universe size"),
    seed: int = typer.Option(0, "--seed", help="RNG seed"),
    exhaustive: bool = typer.Option(False, "--exhaustive", help="Enumerate all small cases"),
    as_json: bool = typer.Option(False, "--json", help="Print the JSON report"),
):
    """Check an exact identity or inequality on many inputs."""
    started = time.perf_counter()
    argv = _argv(["verify"], ctx.params)
    with _handle_errors("verify"):
        result = run_suite(family, trials=trials, max_n=max_n, seed=seed, exhaustive=exhaustive)
        report = _report(argv, started, result.model_dump())
        rows = [
            ("family", result.family),
            ("cases", result.trials),
            ("failures", result.failures),
            ("passed", result.passed),
        ]
        _emit(report, as_json, _table("Verification", rows))
        if not result.passed:
            err_console.print(f"[red]Failing case: {json.dumps(to_jsonable(result.witness))}")
            raise typer.Exit(EXIT_IDENTITY_FAILURE)


def _ap_coloring(
    coloring: Optional[Path], construction: Optional[str], n: Optional[int], k: int
) -> tuple[KColoring, bytes | None]:
    if (coloring is None) == (construction is None):
        raise ValueError("give exactly one of --coloring or --construction")
    if coloring is not None:
        colors = read_kcoloring(coloring, k)
        if n is not None and n != colors.n:
            raise ValueError(f"--n {n} does not match the file's n = {colors.n}")
        return colors, coloring.read_bytes()
    if n is None:
        raise ValueError("--construction needs --n")
    if construction.strip().lower() in ("mod", "modular"):
        return build_modular(n, k), None
    ident = parse_construction(construction)
    if ident.tag == "MODULAR":
        if ident.k != k:
            raise ValueError(f"construction modulus {ident.k} differs from --k {k}")
        return build_modular(n, k), None
    if ident.tag == "CONSTANT":
        return KColoring(n=n, k=k, colors=(ident.color,) * n), None
    raise ValueError(f"construction '{construction}' is not available as a {k}-coloring")


@app.command()
def ap(
    ctx: typer.Context,
    k: Optional[int] = typer.Option(None, "--k", help="Progression length and color count"),
    n: Optional[int] = typer.Option(None, "--n", help="Universe size [n]"),
    coloring: Optional[Path] = typer.Option(None, "--coloring", "-f", help="Coloring file"),
    construction: Optional[str] = typer.Option(
        None, "--construction", "-c", help="mod or constant:c"
    ),
    totient: bool = typer.Option(False, "--totient", help="phi(k)/k only"),
    equinumerous_max: Optional[int] = typer.Option(
        None, "--equinumerous-max", help="Exhaustive rainbow 3-AP maximum on [3m]"
    ),
    node_budget: Optional[int] = typer.Option(None, "--node-budget", help="Equinumerous budget"),
    as_json: bool = typer.Option(False, "--json", help="Print the JSON report"),
):
    """Rainbow k-term arithmetic progressions."""
    started = time.perf_counter()
    argv = _argv(["ap"], ctx.params)
    with _handle_errors("ap"):
        raw = None
        if equinumerous_max is not None:
            outcome = equinumerous_ap3_max(equinumerous_max, node_budget=node_budget)
            results = outcome.model_dump()
            rows = [
                ("m", outcome.m),
                ("exhaustive maximum", outcome.max_count),
                ("floor(3m^2/2)", outcome.formula),
                ("matches", outcome.matches),
                ("optima", len(outcome.optima)),
                ("complete", outcome.complete),
            ]
        elif totient:
            if k is None:
                raise ValueError("--totient needs --k")
            value = totient_fraction(k)
            results = {"k": k, "totient_fraction": value}
            rows = [("k", k), ("phi(k)/k", value)]
        else:
            if k is None:
                raise ValueError("--k is required")
            colors, raw = _ap_coloring(coloring, construction, n, k)
            stats = classify_aps(colors)
            results = stats.model_dump()
            results["fraction"] = stats.fraction
            results["expected_total"] = count_aps(colors.n, k)
            results["cs_ceiling"] = cs_ceiling(colors.n, k)
            if construction is not None and construction.strip().lower().startswith("mod"):
                results["modular_formula"] = modular_rainbow_count(colors.n, k)
            rows = [
                ("n", stats.n),
                ("k", stats.k),
                ("total APs", stats.total_aps),
                ("rainbow APs", stats.rainbow_aps),
                ("fraction", stats.fraction),
                ("endpoint-pair estimate", stats.cs_estimate),
                ("n^2/(2k)", results["cs_ceiling"]),
            ]
        report = _report(argv, started, results, raw)
        _emit(report, as_json, _table("Arithmetic progressions", rows))


@app.command()
def version():
    """Show Rainbow Schur version information."""
    console.print(f"Rainbow Schur v{tool_version()}")


if __name__ == "__main__":
    app()
