#!/usr/bin/env python3
"""
kgfs CLI
Information-theoretic complexity of Klein-Gordon and Schrödinger Coulomb states.
"""
import typer

from kgfs.commands import workflow

app = typer.Typer(
    name="kgfs",
    help="Fisher-Shannon and LMC complexity of Klein-Gordon and Schrödinger Coulomb states",
    no_args_is_help=True,
)

app.command("report", help="Information measures of a single state")(workflow.report)
app.command("scan", help="Evaluate a grid of states over Z, n, l and m")(workflow.scan)
app.command("preset", help="Run a predefined figure grid: fig1, fig2 or fig3")(workflow.preset)
app.command("init-config", help="Write a config file with the built-in defaults")(workflow.init_config)

if __name__ == "__main__":
    app()
