from pathlib import Path
from typing import Optional

import click

from ..dependencies import (
    FORMAT_JSON,
    current_caps,
    emit,
    emit_document,
    input_path,
    load_hypergraph,
    output_format,
    output_path,
)
from ..exceptions import NotConnectedError, NotSimpleError, NotThinError
from ..guards import require_vertex
from ..schemas import IsomorphismDocument, OracleDocument, ValidationDocument
from ..services import reports
from ..services.audit import log_action
from ..services.formats import write_json, write_text
from ..services.hypergraphs import distance, twin_classes, two_section, validate
from ..services.isomorphism import find_isomorphism
from . import Router

router = Router()


@router.command("validate")
@click.argument("path", type=input_path)
@output_format
def validate_command(path: Path, fmt: str) -> None:
    """Check simplicity, connectivity and thinness; exit 1 when any fails."""
    h = load_hypergraph(path)
    report = validate(h)
    if fmt == FORMAT_JSON:
        emit_document(ValidationDocument.from_model(report))
    else:
        emit(reports.validation_report(report))
    log_action("validate", "hypergraph", n=h.n, m=h.m, simple=report.simple, thin=report.thin)
    if not report.simple:
        raise NotSimpleError(report.simple_witness)
    if not report.connected:
        raise NotConnectedError(*report.connected_witness)
    if not report.thin:
        raise NotThinError(twin_classes(h))


@router.command("two-section")
@click.argument("path", type=input_path)
@click.option("-o", "--output", "out", type=output_path, default=None, help="Write here instead of stdout.")
@output_format
def two_section_command(path: Path, out: Optional[Path], fmt: str) -> None:
    """Write the 2-section as a rank-2 hypergraph."""
    h = load_hypergraph(path)
    section = two_section(h).as_hypergraph()
    emit(write_json(section) if fmt == FORMAT_JSON else write_text(section), out)
    log_action("two-section", "hypergraph", n=h.n, m=h.m, pairs=section.m)


@router.command("distance")
@click.argument("path", type=input_path)
@click.argument("u", type=int)
@click.argument("v", type=int)
@output_format
def distance_command(path: Path, u: int, v: int, fmt: str) -> None:
    """Distance between two vertices (inf when unreachable)."""
    h = load_hypergraph(path)
    require_vertex(h, u)
    require_vertex(h, v)
    d = distance(h, u, v)
    value = None if d == float("inf") else int(d)
    if fmt == FORMAT_JSON:
        emit_document(OracleDocument(command="distance", value=value))
    else:
        emit(f"{'inf' if value is None else value}\n")
    log_action("distance", "hypergraph", n=h.n, u=u, v=v)


@router.command("iso")
@click.argument("first", type=input_path)
@click.argument("second", type=input_path)
@output_format
def iso_command(first: Path, second: Path, fmt: str) -> None:
    """Decide isomorphism and print a witness bijection first -> second."""
    h1, h2 = load_hypergraph(first), load_hypergraph(second)
    bijection = find_isomorphism(h1, h2, current_caps())
    if fmt == FORMAT_JSON:
        emit_document(
            IsomorphismDocument(
                isomorphic=bijection is not None,
                bijection=list(bijection) if bijection is not None else None,
            )
        )
    else:
        emit(reports.isomorphism_report(bijection))
    log_action("iso", "hypergraph", n1=h1.n, n2=h2.n, isomorphic=bijection is not None)

