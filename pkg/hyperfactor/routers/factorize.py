from pathlib import Path
from typing import Optional, Sequence

import click

from ..dependencies import (
    FORMAT_JSON,
    current_caps,
    emit,
    emit_document,
    input_path,
    kind_option,
    load_hypergraph,
    output_format,
    output_path,
)
from ..models import Hypergraph, ProductKind
from ..schemas import FactorizationDocument, SkeletonDocument
from ..services import reports
from ..services.audit import log_action
from ..services.cartesian import hypergraph_cartesian_pfd
from ..services.formats import write_coordinates, write_hypergraph, write_text
from ..services.skeleton import cartesian_skeleton
from ..services.strong import pfd
from . import Router

router = Router()


@router.command("skeleton")
@click.argument("path", type=input_path)
@click.option("-o", "--output", "out", type=output_path, default=None, help="Write the skeleton here.")
@click.option("--removed", "removed_out", type=output_path, default=None, help="Write the removed edges here.")
@output_format
def skeleton_command(path: Path, out: Optional[Path], removed_out: Optional[Path], fmt: str) -> None:
    """Cartesian skeleton: drop every hyperedge holding a dispensable pair of the 2-section."""
    h = load_hypergraph(path)
    result = cartesian_skeleton(h)
    if removed_out is not None:
        write_hypergraph(Hypergraph(h.n, result.removed.hyperedges), removed_out)
    if fmt == FORMAT_JSON:
        emit_document(SkeletonDocument.from_model(result), out)
    elif out is not None:
        write_hypergraph(result.skeleton, out)
        emit(reports.skeleton_report(result))
    else:
        emit(write_text(result.skeleton))
    log_action("skeleton", "hypergraph", n=h.n, m=h.m, removed=len(result.removed.hyperedges))


def _write_factors(factors: Sequence[Hypergraph], out_dir: Path) -> None:
    out_dir.mkdir(parents=True, exist_ok=True)
    for i, factor in enumerate(factors):
        write_hypergraph(factor, out_dir / f"factor_{i}.hg")


@router.command("factorize")
@kind_option()
@click.argument("path", type=input_path)
@click.option("--coords", "coords_out", type=output_path, default=None, help="Write coordinates JSON here.")
@click.option(
    "--out-dir",
    type=click.Path(file_okay=False, path_type=Path),
    default=None,
    help="Write factors as factor_<i>.hg files.",
)
@click.option("--certificate", is_flag=True, help="Include the reconstruction certificate.")
@click.option("--timing", is_flag=True, help="Include phase timings (output is no longer reproducible).")
@output_format
def factorize_command(
    kind: str,
    path: Path,
    coords_out: Optional[Path],
    out_dir: Optional[Path],
    certificate: bool,
    timing: bool,
    fmt: str,
) -> None:
    """Prime factor decomposition with respect to the chosen product.

    The Cartesian stage searches groupings of at most --max-classes colour
    classes (default 16); more classes exit with code 3 naming max_classes.
    Normal and strong factorizations also print the nesting the factors
    were split off in.
    """
    kind = ProductKind.parse(kind)
    h = load_hypergraph(path)
    caps = current_caps()
    if kind is ProductKind.CARTESIAN:
        result = hypergraph_cartesian_pfd(h, caps)
        factors, coords = result.factors, result.coords
        document = FactorizationDocument.from_cartesian(result)
        text = reports.cartesian_report(result)
    else:
        report = pfd(h, kind, caps)
        factors, coords = report.factors, report.coords
        document = FactorizationDocument.from_report(report, certificate=certificate, timings=timing)
        text = reports.prime_report(report, certificate=certificate, timings=timing)
    if fmt == FORMAT_JSON:
        emit_document(document)
    else:
        emit(text)
    if coords_out is not None:
        emit(write_coordinates(coords), coords_out)
    if out_dir is not None:
        _write_factors(factors, out_dir)
    log_action("factorize", kind.value, n=h.n, m=h.m, factors=len(factors))
