"""nilgraph CLI entrypoint."""

from __future__ import annotations

import asyncio
import json
import re
from collections.abc import Callable
from importlib.metadata import PackageNotFoundError
from importlib.metadata import version as get_distribution_version
from pathlib import Path
from typing import TYPE_CHECKING, Any, TypeVar

import typer
from rich.console import Console
from rich.panel import Panel
from rich.table import Table

from nilgraph import __version__
from nilgraph.core.exceptions import NilGraphError, RingSpecSyntaxError

if TYPE_CHECKING:
    from nilgraph.census.analyze import RingReport
    from nilgraph.census.runner import CensusResult
    from nilgraph.core.config import NilGraphConfig
    from nilgraph.core.types import TheoremVerdict

app = typer.Typer(
    name="nilgraph",
    help="Nil-graphs of ideals of finite commutative rings: analysis, genus and theorem census.",
    add_completion=True,
    no_args_is_help=True,
)
config_app = typer.Typer(
    name="config",
    help="Inspect effective configuration and defaults.",
    no_args_is_help=True,
)
app.add_typer(config_app)
console = Console()

T = TypeVar("T")

STATUS_STYLE = {"pass": "green", "fail": "red", "not-applicable": "dim"}

# Options shared by every analysis command.
SEED_OPTION = typer.Option(None, "--seed", help="Seed for the embedding search")
BUDGET_OPTION = typer.Option(None, "--budget-ms", help="Genus search time cap per ring (ms)")
MAX_ORDER_OPTION = typer.Option(None, "--max-ring-order", help="Largest ring order analyzed")
WORKERS_OPTION = typer.Option(None, "--workers", "-w", help="Rings analyzed in parallel")
PROFILE_OPTION = typer.Option(None, "--profile", "-p", help="Budget profile: quick, default, thorough")
CONFIG_OPTION = typer.Option(None, "--config", "-c", help="Config file path (nilgraph.toml)")
CENSUS_OPTION = typer.Option(
    None, "--census", help="Census file, or a bundled census name (default, genus_boundary)"
)
JSON_OPTION = typer.Option(False, "--json", help="Output as JSON")


def _version_string() -> str:
    try:
        installed = get_distribution_version("nilgraph")
    except PackageNotFoundError:
        installed = None
    text = f"nilgraph {__version__}"
    if installed and installed != __version__:
        text += f" (installed: {installed})"
    return text


def _load(
    config_file: Path | None,
    profile: str | None = None,
    *,
    json_output: bool = False,
    **overrides: Any,
) -> NilGraphConfig:
    """Effective config: CLI values over environment over file over defaults."""
    from nilgraph.core.config import load_config
    from nilgraph.logging import configure_logging

    config = load_config(config_file, overrides)
    if profile:
        config = config.apply_profile(profile)
    # JSON output keeps the terminal to the document itself.
    level = "ERROR" if json_output else ("DEBUG" if config.verbose else config.log_level)
    configure_logging(level)
    return config


def _fail(error: Exception, json_output: bool) -> typer.Exit:
    if json_output:
        typer.echo(json.dumps({"success": False, "error": str(error)}, indent=2))
    else:
        body = str(error)
        if isinstance(error, RingSpecSyntaxError):
            body += "\n\n" + error.pointer()
        console.print(Panel(body, title="Error", border_style="red"))
    return typer.Exit(1)


def _guarded(json_output: bool, action: Callable[[], T]) -> T:
    try:
        return action()
    except typer.Exit:
        raise
    except NilGraphError as e:
        raise _fail(e, json_output) from None


def _safe_name(label: str) -> str:
    return re.sub(r"[^A-Za-z0-9]+", "_", label).strip("_")


def _verdict_table(verdicts: list[TheoremVerdict], title: str = "Theorem Checks") -> Table:
    table = Table(title=title)
    table.add_column("Theorem", style="cyan")
    table.add_column("Status")
    table.add_column("Notes", style="dim")
    for verdict in verdicts:
        style = STATUS_STYLE[verdict.status.value]
        note = verdict.reason or verdict.erratum or ""
        if verdict.unexpected and verdict.counterexample:
            note = json.dumps(verdict.counterexample, sort_keys=True)
        table.add_row(verdict.theorem_id, f"[{style}]{verdict.status.value}[/{style}]", note)
    return table


def _print_report(report: RingReport) -> None:
    table = Table(title=f"Ring {report.label}")
    table.add_column("Property", style="cyan")
    table.add_column("Value", style="green")
    table.add_row("Order", str(report.order))
    table.add_row("Ideals", str(report.ideal_count))
    table.add_row("Maximal ideals", str(report.max_count))
    table.add_row("Minimal primes", str(report.min_count))
    table.add_row("Reduced", "yes" if report.is_reduced else "no")
    table.add_row("Local", "yes" if report.is_local else "no")
    table.add_row("Vertices / edges", f"{report.graph_order} / {report.graph_size}")
    table.add_row("AG(R) edges", str(report.ag_size))
    table.add_row("alpha (strict / with R)", f"{report.alpha_strict} / {report.alpha_unit}")
    histogram = ", ".join(f"{d}:{c}" for d, c in report.degree_histogram.items())
    table.add_row("Degree histogram", histogram or "-")
    table.add_row("Genus", str(report.genus.verdict))
    console.print(table)
    console.print(_verdict_table(report.theorems))


def _print_summary(result: CensusResult) -> None:
    summary = result.summary
    table = Table(title=f"Census Summary ({summary.ring_count} rings)")
    table.add_column("Theorem", style="cyan")
    table.add_column("Pass", style="green")
    table.add_column("Fail", style="red")
    table.add_column("N/A", style="dim")
    for theorem_id, counts in summary.to_dict()["theorems"].items():
        table.add_row(
            theorem_id, str(counts["pass"]), str(counts["fail"]), str(counts["not-applicable"])
        )
    console.print(table)
    for label, theorem_id in summary.errata_failures:
        console.print(f"[yellow]Known erratum:[/yellow] {theorem_id} on {label}")
    for label, theorem_id in summary.unexpected_failures:
        console.print(f"[red]Unexpected failure:[/red] {theorem_id} on {label}")
    for failure in result.failures:
        console.print(f"[red]Skipped:[/red] {failure.label} ({failure.error})")
    border = "green" if result.ok else "red"
    status = "all checks consistent" if result.ok else "unexpected failures found"
    console.print(Panel(f"{status} in {result.duration_ms / 1000:.1f}s", border_style=border))


def _run_census(
    census_source: str | None,
    config: NilGraphConfig,
    theorem_ids: list[str] | None,
    json_output: bool,
) -> CensusResult:
    from nilgraph.census.runner import load_census, run_census

    entries = load_census(census_source)
    if json_output:
        return asyncio.run(run_census(entries, config, theorem_ids=theorem_ids))
    with console.status(f"[bold green]Analyzing {len(entries)} rings..."):
        return asyncio.run(run_census(entries, config, theorem_ids=theorem_ids))


@app.callback(invoke_without_command=True)
def main(
    ctx: typer.Context,
    version: bool = typer.Option(
        False,
        "--version",
        "-V",
        help="Show version information and exit",
        is_eager=True,
    ),
) -> None:
    """Top-level CLI callback."""
    if version:
        console.print(_version_string())
        raise typer.Exit()

    if ctx.invoked_subcommand is None and ctx.command is not None:
        return


@app.command()
def analyze(
    spec: str = typer.Argument(..., help='Ring spec, e.g. "Z6[x]/(x^2)" or "GF(2)*Z16"'),
    dot: Path | None = typer.Option(None, "--dot", help="Also write the nil-graph as DOT"),
    json_output: bool = JSON_OPTION,
    seed: int | None = SEED_OPTION,
    budget_ms: int | None = BUDGET_OPTION,
    max_ring_order: int | None = MAX_ORDER_OPTION,
    profile: str | None = PROFILE_OPTION,
    config_file: Path | None = CONFIG_OPTION,
) -> None:
    """Analyze one ring: lattice, nil-graph invariants, genus and theorem checks."""
    from nilgraph.census.analyze import analyze_ring
    from nilgraph.census.export import to_dot, to_json, write_export

    def _execute() -> RingReport:
        config = _load(
            config_file,
            profile,
            json_output=json_output,
            seed=seed,
            budget_ms=budget_ms,
            max_ring_order=max_ring_order,
        )
        if json_output:
            analysis = analyze_ring(spec, config)
        else:
            with console.status(f"[bold green]Analyzing {spec}..."):
                analysis = analyze_ring(spec, config)
        if dot is not None:
            write_export(dot, to_dot(analysis.nil_graph))
        return analysis.report()

    report = _guarded(json_output, _execute)
    if json_output:
        typer.echo(to_json(report), nl=False)
    else:
        _print_report(report)
        if dot is not None:
            console.print(f"[dim]DOT written to {dot}[/dim]")
    if any(v.unexpected for v in report.theorems):
        raise typer.Exit(1)


@app.command()
def census(
    census_source: str | None = CENSUS_OPTION,
    output_dir: Path | None = typer.Option(
        None, "--output-dir", "-o", help="Write census.json, census.csv and one DOT per ring"
    ),
    json_output: bool = JSON_OPTION,
    seed: int | None = SEED_OPTION,
    budget_ms: int | None = BUDGET_OPTION,
    max_ring_order: int | None = MAX_ORDER_OPTION,
    workers: int | None = WORKERS_OPTION,
    profile: str | None = PROFILE_OPTION,
    config_file: Path | None = CONFIG_OPTION,
) -> None:
    """Run every theorem check over a census of rings."""
    from nilgraph.census.export import census_to_json, to_csv, to_dot, write_export
    from nilgraph.logging import CensusRunLogger

    def _execute() -> CensusResult:
        config = _load(
            config_file,
            profile,
            json_output=json_output,
            seed=seed,
            budget_ms=budget_ms,
            max_ring_order=max_ring_order,
            max_workers=workers,
        )
        result = _run_census(census_source, config, None, json_output)
        if output_dir is not None:
            write_export(output_dir / "census.json", census_to_json(result.reports, result.summary))
            write_export(output_dir / "census.csv", to_csv(result.reports))
            for report in result.reports:
                if report.graph is not None:
                    write_export(
                        output_dir / "dot" / f"{_safe_name(report.label)}.dot",
                        to_dot(report.graph),
                    )
        CensusRunLogger(config.log_dir, verbose=config.verbose).log_run(
            result,
            seed=config.seed,
            budget_ms=config.budget_ms,
            source=census_source or "default",
        )
        return result

    result = _guarded(json_output, _execute)
    if json_output:
        typer.echo(census_to_json(result.reports, result.summary), nl=False)
    else:
        _print_summary(result)
        if output_dir is not None:
            console.print(f"[dim]Reports written to {output_dir}[/dim]")
    if not result.ok:
        raise typer.Exit(1)


@app.command()
def verify(
    theorem: list[str] | None = typer.Option(
        None, "--theorem", "-t", help="Theorem id to check (repeatable), e.g. T4.4"
    ),
    census_source: str | None = CENSUS_OPTION,
    json_output: bool = JSON_OPTION,
    seed: int | None = SEED_OPTION,
    budget_ms: int | None = BUDGET_OPTION,
    max_ring_order: int | None = MAX_ORDER_OPTION,
    workers: int | None = WORKERS_OPTION,
    profile: str | None = PROFILE_OPTION,
    config_file: Path | None = CONFIG_OPTION,
) -> None:
    """Check selected theorems over a census and list every failure."""
    from nilgraph.core.exceptions import InvalidParameterError
    from nilgraph.core.types import THEOREM_IDS

    def _execute() -> CensusResult:
        unknown = [t for t in theorem or [] if t not in THEOREM_IDS]
        if unknown:
            raise InvalidParameterError("theorem", unknown[0], f"one of {', '.join(THEOREM_IDS)}")
        config = _load(
            config_file,
            profile,
            json_output=json_output,
            seed=seed,
            budget_ms=budget_ms,
            max_ring_order=max_ring_order,
            max_workers=workers,
        )
        return _run_census(census_source, config, theorem or None, json_output)

    result = _guarded(json_output, _execute)
    if json_output:
        payload = {
            "success": result.ok,
            "summary": result.summary.to_dict(),
            "failures": [
                {"ring": r.label, **v.to_dict()}
                for r in result.reports
                for v in r.theorems
                if v.status.value == "fail"
            ],
            "skipped": [f.to_dict() for f in result.failures],
        }
        typer.echo(json.dumps(payload, indent=2, sort_keys=True))
    else:
        _print_summary(result)
        for report in result.reports:
            failing = [v for v in report.theorems if v.unexpected]
            if failing:
                console.print(_verdict_table(failing, title=f"Failures on {report.label}"))
    if not result.ok:
        raise typer.Exit(1)


@app.command()
def export(
    spec: str | None = typer.Argument(None, help="Ring spec to export"),
    fmt: str = typer.Option("json", "--format", "-f", help="dot, json or csv"),
    output: Path = typer.Option(..., "--output", "-o", help="Output file"),
    census_source: str | None = CENSUS_OPTION,
    seed: int | None = SEED_OPTION,
    budget_ms: int | None = BUDGET_OPTION,
    max_ring_order: int | None = MAX_ORDER_OPTION,
    workers: int | None = WORKERS_OPTION,
    profile: str | None = PROFILE_OPTION,
    config_file: Path | None = CONFIG_OPTION,
) -> None:
    """Export one ring (DOT, JSON, CSV) or a census (JSON, CSV) to a file."""
    from nilgraph.census.analyze import analyze_ring
    from nilgraph.census.export import FORMATS, render, write_export
    from nilgraph.core.exceptions import InvalidParameterError

    def _execute() -> Path:
        if fmt not in FORMATS:
            raise InvalidParameterError("format", fmt, f"one of {', '.join(FORMATS)}")
        config = _load(
            config_file,
            profile,
            seed=seed,
            budget_ms=budget_ms,
            max_ring_order=max_ring_order,
            max_workers=workers,
        )
        if spec is not None:
            with console.status(f"[bold green]Analyzing {spec}..."):
                analysis = analyze_ring(spec, config)
            text = render(fmt, [analysis.report()], graph=analysis.nil_graph)
        else:
            if fmt == "dot":
                raise InvalidParameterError("format", fmt, "json or csv for a census export")
            result = _run_census(census_source, config, None, False)
            text = render(fmt, result.reports, summary=result.summary)
        return write_export(output, text)

    path = _guarded(False, _execute)
    console.print(f"[green]Wrote[/green] {path}")


@app.command()
def logs(
    run_id: str | None = typer.Argument(None, help="Census run ID to view"),
    log_dir: Path = typer.Option(Path("./logs"), "--dir", "-d", help="Log directory"),
    tail: int = typer.Option(10, "--tail", "-n", help="Number of recent runs to show"),
    json_output: bool = JSON_OPTION,
) -> None:
    """View census run ledgers."""
    from nilgraph.logging import CensusRunLogger

    run_log = CensusRunLogger(log_dir=log_dir)

    if run_id:
        records = run_log.load_run(run_id)
        if not records:
            console.print(f"[red]Census run not found:[/red] {run_id}")
            raise typer.Exit(1)
        if json_output:
            typer.echo(json.dumps(records, indent=2))
            return
        table = Table(title=f"Census Run {run_id}")
        table.add_column("Ring", style="cyan")
        table.add_column("Genus", style="magenta")
        table.add_column("Statuses", style="green")
        table.add_column("Unexpected", style="red")
        for record in records:
            if "error" in record:
                table.add_row(record["ring"], "-", f"skipped at {record.get('stage')}", "")
                continue
            counts = ", ".join(f"{k}={v}" for k, v in record["status_counts"].items())
            table.add_row(record["ring"], record["genus"], counts, " ".join(record["unexpected"]))
        console.print(table)
        return

    runs = run_log.list_recent(tail)
    if not runs:
        console.print("[dim]No census runs found[/dim]")
        return
    if json_output:
        typer.echo(json.dumps(runs, indent=2))
        return
    table = Table(title="Recent Census Runs")
    table.add_column("ID", style="cyan")
    table.add_column("Timestamp", style="dim")
    table.add_column("Source")
    table.add_column("Rings", style="green")
    table.add_column("Unexpected", style="red")
    table.add_column("Duration", style="magenta")
    for run in runs:
        table.add_row(
            run["id"],
            run["timestamp"][:19],
            run["source"],
            str(run["rings"]),
            str(run["unexpected"]),
            f"{run['duration_ms']}ms",
        )
    console.print(table)


@config_app.command("show")
def config_show(
    config_file: Path | None = CONFIG_OPTION,
    profile: str | None = PROFILE_OPTION,
    json_output: bool = JSON_OPTION,
) -> None:
    """Show the effective configuration."""

    def _execute() -> dict[str, Any]:
        config = _load(config_file, profile, json_output=json_output)
        payload: dict[str, Any] = config.model_dump(mode="json")
        payload["genus_budget"] = config.genus_budget().to_dict()
        return payload

    payload = _guarded(json_output, _execute)
    if json_output:
        typer.echo(json.dumps(payload, indent=2, sort_keys=True))
        return

    table = Table(title="Effective Configuration")
    table.add_column("Setting", style="cyan")
    table.add_column("Value", style="green")
    for key, value in payload.items():
        if key != "genus_budget":
            table.add_row(key, str(value))
    console.print(table)


@app.command()
def version() -> None:
    """Show version information."""
    console.print(_version_string())


if __name__ == "__main__":
    app()
