import json
from pathlib import Path
from typing import Optional, Tuple

import click

from ..dependencies import (
    FORMAT_JSON,
    NONCARTESIAN_CHOICES,
    current_caps,
    emit,
    emit_document,
    output_format,
    output_path,
)
from ..models import GeneratorSpec, ProductKind
from ..schemas import DOCUMENTS, BenchDocument
from ..services import reports
from ..services.audit import log_action
from ..services.bench import DEFAULT_LENGTHS, DEFAULT_THRESHOLD, run_bench
from ..services.formats import write_json, write_text
from ..services.generator import generate, provenance
from . import Router

router = Router()

REQUIREMENTS = ["simple", "connected", "thin", "prime"]


@router.command("gen")
@click.option("--n", "n", type=int, required=True, help="Vertex count.")
@click.option("--rank-max", type=int, default=3, show_default=True)
@click.option("--degree-max", type=int, default=3, show_default=True)
@click.option("--seed", type=int, default=0, show_default=True)
@click.option(
    "--require",
    type=click.Choice(REQUIREMENTS),
    multiple=True,
    help="Property the instance must have (repeatable); simple is always required.",
)
@click.option("--prime-kind", type=click.Choice(NONCARTESIAN_CHOICES), default=ProductKind.STRONG.value)
@click.option("-o", "--output", "out", type=output_path, default=None, help="Write here instead of stdout.")
def gen_command(
    n: int,
    rank_max: int,
    degree_max: int,
    seed: int,
    require: Tuple[str, ...],
    prime_kind: str,
    out: Optional[Path],
) -> None:
    """Sample a random simple hypergraph with the requested properties."""
    spec = GeneratorSpec(
        n=n,
        rank_max=rank_max,
        degree_max=degree_max,
        seed=seed,
        require=frozenset(require) | {"simple"},
        prime_kind=ProductKind.parse(prime_kind),
    )
    h, attempts = generate(spec, current_caps())
    as_json = out is not None and out.suffix.lower() == ".json"
    emit(write_json(h) if as_json else write_text(h, provenance(spec, attempts)), out)
    log_action("gen", "hypergraph", seed=seed, n=n, m=h.m, attempts=attempts)


@router.command("schema")
@click.argument("document", type=click.Choice(sorted(DOCUMENTS)))
def schema_command(document: str) -> None:
    """Print the JSON schema of a report document."""
    schema = DOCUMENTS[document].model_json_schema()
    emit(json.dumps(schema, indent=2, sort_keys=True) + "\n")


@router.command("bench")
@click.option(
    "--lengths",
    default=",".join(map(str, DEFAULT_LENGTHS)),
    show_default=True,
    help="Comma-separated path lengths k; instances are T ⊛ P_k.",
)
@click.option("--kind", type=click.Choice(NONCARTESIAN_CHOICES), default=ProductKind.STRONG.value)
@click.option("--repeats", type=int, default=3, show_default=True)
@click.option("--threshold", type=float, default=DEFAULT_THRESHOLD, show_default=True)
@output_format
def bench_command(lengths: str, kind: str, repeats: int, threshold: float, fmt: str) -> None:
    """Time skeleton + PFD at growing sizes and report the log-log slope."""
    try:
        parsed = [int(part) for part in lengths.split(",") if part.strip()]
    except ValueError:
        raise click.BadParameter("expected comma-separated integers", param_hint="--lengths")
    report = run_bench(parsed, kind, repeats, threshold, current_caps())
    if fmt == FORMAT_JSON:
        emit_document(BenchDocument.from_model(report))
    else:
        emit(reports.bench_report(report))
    log_action("bench", kind, sizes=list(report.sizes), slope=round(report.slope, 3))
