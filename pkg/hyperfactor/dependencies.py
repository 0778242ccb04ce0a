"""Command-line plumbing shared by the routers: caps, inputs, output selection."""

from functools import wraps
from pathlib import Path
from typing import Callable, Optional

import click

from .config import Caps, get_caps
from .models import Hypergraph, ProductKind
from .services.formats import dump_document, read_hypergraph

FORMAT_TEXT = "text"
FORMAT_JSON = "json"

KIND_CHOICES = [kind.value for kind in ProductKind]
NONCARTESIAN_CHOICES = [ProductKind.NORMAL.value, ProductKind.STRONG.value]

input_path = click.Path(exists=True, dir_okay=False, path_type=Path)
output_path = click.Path(dir_okay=False, writable=True, path_type=Path)


def current_caps() -> Caps:
    ctx = click.get_current_context()
    state = ctx.find_object(dict) or {}
    return state.get("caps") or get_caps()


def load_hypergraph(path: Path) -> Hypergraph:
    return read_hypergraph(path)


def kind_option(choices=KIND_CHOICES, default: Optional[str] = None) -> Callable:
    return click.option(
        "--kind",
        type=click.Choice(choices, case_sensitive=False),
        default=default,
        required=default is None,
        help="Product kind.",
    )


def output_format(func: Callable) -> Callable:
    """Add ``--format text|json`` and the ``--json`` shorthand; the command receives ``fmt``."""

    @click.option("--format", "format_", type=click.Choice([FORMAT_TEXT, FORMAT_JSON]), default=None)
    @click.option("--json", "as_json", is_flag=True, help="Same as --format json.")
    @wraps(func)
    def wrapper(*args, format_: Optional[str], as_json: bool, **kwargs):
        fmt = FORMAT_JSON if as_json else (format_ or FORMAT_TEXT)
        return func(*args, fmt=fmt, **kwargs)

    return wrapper


def emit(text: str, out: Optional[Path] = None) -> None:
    if out is None:
        click.echo(text, nl=False)
        return
    with out.open("w", encoding="utf-8", newline="\n") as handle:
        handle.write(text)


def emit_document(document, out: Optional[Path] = None) -> None:
    emit(dump_document(document), out)
