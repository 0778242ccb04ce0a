"""Human-readable renderings of command results."""

from typing import Any, Dict, Mapping, Optional, Sequence

from ..models import (
    BenchReport,
    CompletenessVerdict,
    Hypergraph,
    HypergraphFactorization,
    PrimeFactorReport,
    ProductKind,
    ReconstructionCertificate,
    SkeletonResult,
    ValidationReport,
    VertexBijection,
)
from ..schemas import CountDocument
from .products import format_bracketing
from ..template_loader import templates


def render_template(name: str, context: Dict[str, Any]) -> str:
    template = templates.get_template(name)
    return template.render(**context)


def validation_report(report: ValidationReport) -> str:
    return render_template("validation.txt.j2", {"report": report})


def _factorization(
    kind: ProductKind,
    factors: Sequence[Hypergraph],
    partition: Optional[Sequence[Sequence[int]]] = None,
    bracketing: Optional[str] = None,
    certificate: Optional[ReconstructionCertificate] = None,
    verdicts: Sequence[CompletenessVerdict] = (),
    timings: Optional[Mapping[str, float]] = None,
) -> str:
    return render_template(
        "factorization.txt.j2",
        {
            "kind": kind.value,
            "factors": factors,
            "partition": partition,
            "bracketing": bracketing,
            "certificate": certificate,
            "verdicts": verdicts,
            "timings": timings or {},
        },
    )


def cartesian_report(f: HypergraphFactorization) -> str:
    return _factorization(ProductKind.CARTESIAN, f.factors)


def prime_report(report: PrimeFactorReport, certificate: bool = False, timings: bool = False) -> str:
    return _factorization(
        report.kind,
        report.factors,
        partition=report.index_partition,
        bracketing=format_bracketing(report.bracketing) if len(report.factors) > 1 else None,
        certificate=report.certificate if certificate else None,
        verdicts=report.verdicts,
        timings=report.timings if timings else None,
    )


def skeleton_report(result: SkeletonResult) -> str:
    return render_template(
        "skeleton.txt.j2", {"result": result, "pairs": sorted(result.removed.graph_pairs)}
    )


def count_report(document: CountDocument) -> str:
    return render_template("count.txt.j2", {"document": document})


def isomorphism_report(bijection: Optional[VertexBijection]) -> str:
    return render_template("isomorphism.txt.j2", {"bijection": bijection})


def oracle_report(
    command: str,
    factors: Optional[Sequence[Hypergraph]] = None,
    edges: Optional[Sequence[Sequence[int]]] = None,
    value: Any = None,
) -> str:
    return render_template(
        "oracle.txt.j2", {"command": command, "factors": factors, "edges": edges, "value": value}
    )


def bench_report(report: BenchReport) -> str:
    return render_template(
        "bench.txt.j2", {"document": report, "rows": list(zip(report.sizes, report.seconds))}
    )
