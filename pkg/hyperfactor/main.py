import logging
import sys
from typing import Optional

import click

from .config import get_caps, log_level
from .exceptions import HyperfactorError
from .routers import factorize, oracle, products, structure, tools
from .utils.flash import flash_error

CAP_FLAGS = (
    ("--max-vertices", "max_vertices"),
    ("--max-edges", "max_edges"),
    ("--iso-cap", "iso_vertices"),
    ("--rank-cap", "rank"),
    ("--oracle-pfd-cap", "oracle_pfd_vertices"),
    ("--oracle-distance-cap", "oracle_distance_vertices"),
    ("--oracle-dispensable-cap", "oracle_dispensable_vertices"),
    ("--oracle-map-cap", "oracle_map_size"),
    ("--gen-attempts", "gen_attempts"),
    ("--max-classes", "max_classes"),
)


class HyperfactorGroup(click.Group):
    """Maps package errors onto exit codes with a one-line diagnostic on stderr."""

    def invoke(self, ctx: click.Context):
        try:
            return super().invoke(ctx)
        except HyperfactorError as exc:
            flash_error(exc)
            ctx.exit(exc.exit_code)


def cap_options(func):
    for flag, name in reversed(CAP_FLAGS):
        func = click.option(flag, name, type=click.IntRange(min=0), default=None, help=f"Override cap {name}.")(func)
    return func


def _configure_logging(verbose: int) -> None:
    if verbose >= 2:
        level = "DEBUG"
    elif verbose == 1:
        level = "INFO"
    else:
        level = log_level()
    logging.basicConfig(
        level=getattr(logging, level, logging.WARNING),
        stream=sys.stderr,
        format="%(levelname)s %(name)s: %(message)s",
    )


@click.group(cls=HyperfactorGroup)
@click.option("-v", "--verbose", count=True, help="-v for info, -vv for debug logging.")
@cap_options
@click.pass_context
def cli(ctx: click.Context, verbose: int, **caps: Optional[int]) -> None:
    """Products and prime factor decompositions of finite simple hypergraphs."""
    _configure_logging(verbose)
    ctx.ensure_object(dict)["caps"] = get_caps().override(**caps)


for router in (structure.router, products.router, factorize.router, oracle.router, tools.router):
    for command in router.commands:
        cli.add_command(command)


def main() -> None:
    cli(prog_name="hyperfactor")
