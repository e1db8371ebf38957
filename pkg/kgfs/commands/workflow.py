"""
This file contains the report, scan and preset commands for the typer cli.py file.
"""
import json
import logging
from pathlib import Path
from typing import List, Optional

import typer
from rich import print as rprint
from rich.console import Console
from rich.logging import RichHandler
from rich.table import Table

from kgfs.core.errors import DomainError, KGFSError, ValidationError
from kgfs.core.kg_states import QuantumNumbers
from kgfs.core.output import error_record, format_rows, write_rows, write_svg
from kgfs.core.runner import (
    PRESETS,
    ComplexityRunner,
    ScanRow,
    ScanSpec,
    parse_int_list,
    parse_models,
    parse_z_range,
    parse_z_values,
    preset_spec,
)
from kgfs.core.settings import Settings, load_settings, write_config_template

EXIT_VALIDATION = 2
EXIT_NUMERICAL = 3

console = Console(stderr=True)


def _configure_logging(verbose: bool) -> None:
    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.WARNING,
        format="%(message)s",
        handlers=[RichHandler(console=console, show_path=False)],
        force=True,
    )


def _load(config: Optional[Path], **overrides) -> Settings:
    try:
        return load_settings(config, **overrides)
    except ValidationError as e:
        console.print(f"[red]Invalid configuration: {e}[/red]")
        raise typer.Exit(EXIT_VALIDATION)


def _emit(rows: List[ScanRow], spec: ScanSpec) -> None:
    """Write or print the rows, then exit 3 if any state failed."""
    if spec.out is not None:
        write_rows(rows, spec.out, spec.fmt, spec.measures)
        console.print(f"[green]Wrote {len(rows)} rows to {spec.out}[/green]")
    else:
        typer.echo(format_rows(rows, spec.fmt, spec.measures), nl=False)
    if spec.svg is not None:
        write_svg(rows, spec.svg, spec.title)
        console.print(f"[green]Wrote figure to {spec.svg}[/green]")

    summary = ComplexityRunner.summarize(rows)
    if summary["regularized"]:
        console.print(
            f"[yellow]{summary['regularized']} row(s) used the inner cutoff for a "
            "functional divergent at the origin[/yellow]"
        )
    if summary["failed"]:
        console.print(f"[red]{summary['failed']} of {summary['rows']} row(s) failed[/red]")
        for row in rows:
            if not row.success:
                console.print(f"   [dim]{row.model.value} Z={row.Z:g} n={row.n} l={row.l} m={row.m}: {row.error}[/dim]")
        raise typer.Exit(EXIT_NUMERICAL)


def report(
    z: float = typer.Option(..., "--Z", help="Nuclear charge"),
    n: int = typer.Option(1, "--n", help="Principal quantum number"),
    l: int = typer.Option(0, "--l", help="Orbital quantum number"),
    m: int = typer.Option(0, "--m", help="Magnetic quantum number"),
    model: str = typer.Option("both", "--model", help="kg, sch or both"),
    mass: Optional[float] = typer.Option(None, "--mass", help="Particle mass in electron masses"),
    alpha: Optional[float] = typer.Option(None, "--alpha", help="Fine-structure constant"),
    tol: Optional[float] = typer.Option(None, "--tol", help="Relative quadrature tolerance"),
    cutoff: Optional[float] = typer.Option(None, "--cutoff", help="Inner cutoff in reduced Compton wavelengths (0 disables)"),
    fmt: str = typer.Option("json", "--format", "-f", help="Output file format: csv or json"),
    out: Optional[Path] = typer.Option(None, "--out", "-o", help="Also write the rows to this file"),
    config: Optional[Path] = typer.Option(None, "--config", "-c", help="Flat KEY=VALUE config file"),
    verbose: bool = typer.Option(False, "--verbose", "-v", help="Debug logging"),
):
    """Compute the information measures of a single state."""
    _configure_logging(verbose)
    settings = _load(config, mass_me=mass, alpha_fs=alpha, rel_tol=tol, inner_cutoff=cutoff)
    try:
        models = parse_models(model)
        qn = QuantumNumbers(n, l, m)
        spec = ScanSpec(models, (z,), (n,), (l,), (m,), settings=settings, fmt=fmt, out=out)
    except (ValidationError, DomainError) as e:
        rprint(f"[red]Invalid state: {e}[/red]")
        raise typer.Exit(EXIT_VALIDATION)

    rprint(f"\n[bold blue]{qn.label} state, Z={z:g}, m={m}[/bold blue]")
    rows = ComplexityRunner.run_pair(z, qn, models, settings)

    table = Table(show_header=True, header_style="bold cyan")
    table.add_column("measure")
    for row in rows:
        table.add_column(row.model.value, justify="right")
    fields = [
        ("epsilon/mc^2", "epsilon_over_mc2"), ("S", "shannon_S"), ("I", "fisher_I"),
        ("J", "entropic_power_J"), ("<rho>", "disequilibrium"), ("C_FS", "c_fs"),
        ("C_LMC", "c_lmc"),
    ]
    for name, attribute in fields:
        table.add_row(name, *(
            f"{getattr(r.report, attribute):.10g}" if r.report else "[red]-[/red]" for r in rows
        ))
    rprint(table)
    if rows[0].zeta_fs is not None:
        rprint(f"[green]zeta_FS = {rows[0].zeta_fs:.10g}   zeta_LMC = {rows[0].zeta_lmc:.10g}[/green]")
    if any(r.report and r.report.fisher_regularized for r in rows):
        rprint(f"[yellow]Fisher information regularized with inner cutoff {settings.inner_cutoff:g}[/yellow]")

    if out is not None:
        write_rows(rows, out, fmt, spec.measures)
        rprint(f"[cyan]Wrote {out}[/cyan]")

    failed = [r for r in rows if not r.success]
    if failed:
        for row in failed:
            typer.echo(json.dumps(error_record(row)))
        raise typer.Exit(EXIT_NUMERICAL)


def scan(
    z: Optional[str] = typer.Option(None, "--Z", help="Comma-separated nuclear charges"),
    z_range: Optional[str] = typer.Option(None, "--Z-range", help="min:max:step, inclusive"),
    n: str = typer.Option("1", "--n", help="n values, e.g. 1,2,3 or 1..6"),
    l: Optional[str] = typer.Option(None, "--l", help="l values (default: every l < n)"),
    m: Optional[str] = typer.Option(None, "--m", help="m values (default: 0)"),
    model: str = typer.Option("both", "--model", help="kg, sch or both"),
    measures: Optional[str] = typer.Option(None, "--measures", help="Subset of S,I,J,diseq,C_FS,C_LMC,zeta"),
    mass: Optional[float] = typer.Option(None, "--mass", help="Particle mass in electron masses"),
    alpha: Optional[float] = typer.Option(None, "--alpha", help="Fine-structure constant"),
    tol: Optional[float] = typer.Option(None, "--tol", help="Relative quadrature tolerance"),
    cutoff: Optional[float] = typer.Option(None, "--cutoff", help="Inner cutoff in reduced Compton wavelengths (0 disables)"),
    workers: Optional[int] = typer.Option(None, "--workers", "-w", help="Worker processes"),
    fmt: str = typer.Option("csv", "--format", "-f", help="csv or json"),
    out: Optional[Path] = typer.Option(None, "--out", "-o", help="Output file (default: stdout)"),
    svg: Optional[Path] = typer.Option(None, "--svg", help="Also write an SVG figure"),
    config: Optional[Path] = typer.Option(None, "--config", "-c", help="Flat KEY=VALUE config file"),
    verbose: bool = typer.Option(False, "--verbose", "-v", help="Debug logging"),
):
    """Evaluate a grid of states over Z, n, l and m."""
    _configure_logging(verbose)
    settings = _load(config, mass_me=mass, alpha_fs=alpha, rel_tol=tol,
                     inner_cutoff=cutoff, workers=workers)
    try:
        if (z is None) == (z_range is None):
            raise ValidationError("give exactly one of --Z or --Z-range", field="Z")
        spec = ScanSpec(
            models=parse_models(model),
            z_values=parse_z_values(z) if z is not None else parse_z_range(z_range),
            n_values=parse_int_list(n, "n"),
            l_values=parse_int_list(l, "l") if l is not None else None,
            m_values=parse_int_list(m, "m") if m is not None else None,
            measures=tuple(s.strip() for s in measures.split(",")) if measures else None,
            settings=settings,
            fmt=fmt,
            out=out,
            svg=svg,
        )
    except ValidationError as e:
        console.print(f"[red]Invalid scan: {e}[/red]")
        raise typer.Exit(EXIT_VALIDATION)

    console.print(f"[bold blue]Scanning {len(spec.points())} point(s)[/bold blue]")
    try:
        rows = ComplexityRunner.run_scan(spec)
    except KGFSError as e:
        console.print(f"[red]Scan failed: {e}[/red]")
        raise typer.Exit(EXIT_NUMERICAL)
    _emit(rows, spec)


def preset(
    name: str = typer.Argument(..., help=f"One of {', '.join(PRESETS)}"),
    fmt: str = typer.Option("csv", "--format", "-f", help="csv or json"),
    out: Optional[Path] = typer.Option(None, "--out", "-o", help="Output file (default: <name>.<format>)"),
    svg: Optional[Path] = typer.Option(None, "--svg", help="Also write an SVG figure"),
    mass: Optional[float] = typer.Option(None, "--mass", help="Particle mass in electron masses"),
    alpha: Optional[float] = typer.Option(None, "--alpha", help="Fine-structure constant"),
    tol: Optional[float] = typer.Option(None, "--tol", help="Relative quadrature tolerance"),
    cutoff: Optional[float] = typer.Option(None, "--cutoff", help="Inner cutoff in reduced Compton wavelengths"),
    workers: Optional[int] = typer.Option(None, "--workers", "-w", help="Worker processes"),
    config: Optional[Path] = typer.Option(None, "--config", "-c", help="Flat KEY=VALUE config file"),
    verbose: bool = typer.Option(False, "--verbose", "-v", help="Debug logging"),
):
    """Run one of the predefined figure grids."""
    _configure_logging(verbose)
    settings = _load(config, mass_me=mass, alpha_fs=alpha, rel_tol=tol,
                     inner_cutoff=cutoff, workers=workers)
    try:
        spec = preset_spec(name, settings, fmt=fmt, out=out or Path(f"{name}.{fmt}"), svg=svg)
    except ValidationError as e:
        console.print(f"[red]{e}[/red]")
        raise typer.Exit(EXIT_VALIDATION)

    console.print(f"[bold blue]Preset {name}: {len(spec.points())} point(s)[/bold blue]")
    _emit(ComplexityRunner.run_scan(spec), spec)


def init_config(
    path: Path = typer.Argument(Path("kgfs.env"), help="Config file to create"),
    force: bool = typer.Option(False, "--force", "-f", help="Overwrite an existing file"),
):
    """Write a config file holding the built-in defaults."""
    try:
        written = write_config_template(path, force)
    except ValidationError as e:
        rprint(f"[red]{e}[/red]")
        raise typer.Exit(EXIT_VALIDATION)
    rprint(f"[green]Created config: {written}[/green]")
