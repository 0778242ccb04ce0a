"""Diagnostics for the command line, written to standard error only."""

import click

from ..exceptions import HyperfactorError


def set_flash(message: str, category: str = "error") -> None:
    click.echo(f"{category}: {message}", err=True)


def flash_error(exc: HyperfactorError) -> None:
    set_flash(exc.detail, "error")
