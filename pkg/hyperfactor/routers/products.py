from pathlib import Path
from typing import Optional

import click

from ..dependencies import (
    FORMAT_JSON,
    NONCARTESIAN_CHOICES,
    current_caps,
    emit,
    emit_document,
    input_path,
    kind_option,
    load_hypergraph,
    output_format,
    output_path,
)
from ..models import ProductKind
from ..schemas import CoordinatesDocument, CountDocument, HypergraphDocument, ProductDocument
from ..services import reports
from ..services.audit import log_action
from ..services.counting import count_noncartesian_formula
from ..services.formats import write_coordinates, write_json, write_text
from ..services.products import classify_edges, count_noncartesian_exact, product
from . import Router

router = Router()


@router.command("product")
@kind_option()
@click.argument("first", type=input_path)
@click.argument("second", type=input_path)
@click.option("-o", "--output", "out", type=output_path, default=None, help="Write here instead of stdout.")
@click.option("--coords", "coords_out", type=output_path, default=None, help="Write coordinates JSON here.")
@output_format
def product_command(
    kind: str, first: Path, second: Path, out: Optional[Path], coords_out: Optional[Path], fmt: str
) -> None:
    """Build FIRST ⊛ SECOND; vertex (v1, v2) gets id v1 * n2 + v2."""
    kind = ProductKind.parse(kind)
    h1, h2 = load_hypergraph(first), load_hypergraph(second)
    h, coords = product(h1, h2, kind, current_caps())
    if fmt == FORMAT_JSON:
        emit_document(
            ProductDocument(
                kind=kind,
                hypergraph=HypergraphDocument.from_model(h),
                coordinates=CoordinatesDocument.from_model(coords),
                classification=list(classify_edges(h, coords).labels),
            ),
            out,
        )
    else:
        emit(write_json(h) if out is not None and out.suffix.lower() == ".json" else write_text(h), out)
    if coords_out is not None:
        emit(write_coordinates(coords), coords_out)
    log_action("product", kind.value, n1=h1.n, n2=h2.n, n=h.n, m=h.m)


@router.command("count")
@kind_option(NONCARTESIAN_CHOICES)
@click.argument("first", type=input_path)
@click.argument("second", type=input_path)
@click.option("--formula-only", is_flag=True, help="Skip building the product.")
@output_format
def count_command(kind: str, first: Path, second: Path, formula_only: bool, fmt: str) -> None:
    """Count non-Cartesian edges by formula and, unless --formula-only, by enumeration."""
    kind = ProductKind.parse(kind)
    h1, h2 = load_hypergraph(first), load_hypergraph(second)
    caps = current_caps()
    if formula_only:
        document = CountDocument(kind=kind, formula_value=count_noncartesian_formula(h1, h2, kind, caps))
    else:
        document = CountDocument.from_model(count_noncartesian_exact(h1, h2, kind, caps))
    if fmt == FORMAT_JSON:
        emit_document(document)
    else:
        emit(reports.count_report(document))
    log_action("count", kind.value, n1=h1.n, n2=h2.n, formula=document.formula_value)
