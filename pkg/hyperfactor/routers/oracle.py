from pathlib import Path

import click

from ..dependencies import (
    FORMAT_JSON,
    KIND_CHOICES,
    NONCARTESIAN_CHOICES,
    current_caps,
    emit,
    emit_document,
    input_path,
    kind_option,
    load_hypergraph,
    output_format,
)
from ..models import ProductKind
from ..schemas import HypergraphDocument, OracleDocument
from ..services import oracle as brute
from ..services import reports
from ..services.audit import log_action
from . import Router

router = Router()


@router.group("oracle")
def oracle_group() -> None:
    """Brute-force counterparts of the fast commands, for small inputs."""


@oracle_group.command("pfd")
@kind_option(KIND_CHOICES)
@click.argument("path", type=input_path)
@output_format
def oracle_pfd(kind: str, path: Path, fmt: str) -> None:
    kind = ProductKind.parse(kind)
    h = load_hypergraph(path)
    factors = brute.brute_pfd(h, kind, current_caps())
    if fmt == FORMAT_JSON:
        emit_document(OracleDocument(command="pfd", factors=[HypergraphDocument.from_model(f) for f in factors]))
    else:
        emit(reports.oracle_report("pfd", factors=factors))
    log_action("oracle", "pfd", kind=kind.value, n=h.n, factors=len(factors))


@oracle_group.command("count")
@kind_option(NONCARTESIAN_CHOICES)
@click.argument("a", type=int)
@click.argument("b", type=int)
@output_format
def oracle_count(kind: str, a: int, b: int, fmt: str) -> None:
    """Injective (normal) or surjective (strong) maps from an A-set to a B-set."""
    value = brute.brute_count_maps(a, b, kind, current_caps())
    if fmt == FORMAT_JSON:
        emit_document(OracleDocument(command="count", value=value))
    else:
        emit(reports.oracle_report("count", value=value))
    log_action("oracle", "count", kind=kind, a=a, b=b)


@oracle_group.command("dispensable")
@click.argument("path", type=input_path)
@output_format
def oracle_dispensable(path: Path, fmt: str) -> None:
    h = load_hypergraph(path)
    edges = sorted(brute.brute_dispensable(h, current_caps()))
    if fmt == FORMAT_JSON:
        emit_document(OracleDocument(command="dispensable", edges=[list(e) for e in edges]))
    else:
        emit(reports.oracle_report("dispensable", edges=edges))
    log_action("oracle", "dispensable", n=h.n, removed=len(edges))


@oracle_group.command("distance")
@click.argument("path", type=input_path)
@click.argument("u", type=int)
@click.argument("v", type=int)
@output_format
def oracle_distance(path: Path, u: int, v: int, fmt: str) -> None:
    h = load_hypergraph(path)
    d = brute.brute_distance(h, u, v, current_caps())
    value = None if d == float("inf") else int(d)
    if fmt == FORMAT_JSON:
        emit_document(OracleDocument(command="distance", value=value))
    else:
        emit(reports.oracle_report("distance", value="inf" if value is None else value))
    log_action("oracle", "distance", n=h.n, u=u, v=v)
