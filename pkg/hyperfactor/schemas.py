"""JSON documents written by the command line, with their JSON schema."""

from typing import Dict, List, Optional, Type

from pydantic import BaseModel, Field

from .models import (
    BenchReport,
    CompletenessVerdict,
    Coordinates,
    CountReport,
    Hypergraph,
    HypergraphFactorization,
    PrimeFactorReport,
    ProductKind,
    SkeletonResult,
    ValidationReport,
)
from .services.products import format_bracketing


class HypergraphDocument(BaseModel):
    n: int = Field(..., ge=1, description="Vertex count; vertices are 0..n-1")
    edges: List[List[int]] = Field(default_factory=list, description="Ascending edges in lexicographic order")

    @classmethod
    def from_model(cls, h: Hypergraph) -> "HypergraphDocument":
        return cls(n=h.n, edges=[list(e) for e in h.edges])

    def to_model(self) -> Hypergraph:
        return Hypergraph.from_edges(self.n, self.edges)


class CoordinatesDocument(BaseModel):
    dims: List[int]
    coord: List[List[int]]

    @classmethod
    def from_model(cls, c: Coordinates) -> "CoordinatesDocument":
        return cls(dims=list(c.dims), coord=[list(t) for t in c.coord])

    def to_model(self) -> Coordinates:
        return Coordinates(tuple(self.dims), tuple(tuple(t) for t in self.coord))


class ValidationDocument(BaseModel):
    simple: bool
    connected: bool
    thin: bool
    simple_witness: List[List[int]] = Field(default_factory=list)
    connected_witness: Optional[List[int]] = None
    thin_witness: Optional[List[int]] = None

    @classmethod
    def from_model(cls, report: ValidationReport) -> "ValidationDocument":
        return cls(
            simple=report.simple,
            connected=report.connected,
            thin=report.thin,
            simple_witness=[list(e) for e in report.simple_witness],
            connected_witness=list(report.connected_witness) if report.connected_witness else None,
            thin_witness=list(report.thin_witness) if report.thin_witness else None,
        )


class ProductDocument(BaseModel):
    kind: ProductKind
    hypergraph: HypergraphDocument
    coordinates: CoordinatesDocument
    classification: List[Optional[int]] = Field(..., description="Colour per edge, null for non-Cartesian")


class SkeletonDocument(BaseModel):
    skeleton: HypergraphDocument
    removed: List[List[int]]
    dispensable_pairs: List[List[int]]
    thin: bool

    @classmethod
    def from_model(cls, result: SkeletonResult) -> "SkeletonDocument":
        return cls(
            skeleton=HypergraphDocument.from_model(result.skeleton),
            removed=[list(e) for e in result.removed.hyperedges],
            dispensable_pairs=[list(p) for p in sorted(result.removed.graph_pairs)],
            thin=result.thin,
        )


class CountDocument(BaseModel):
    kind: ProductKind
    formula_value: int
    enumerated_value: Optional[int] = None
    discrepancy: Optional[int] = None

    @classmethod
    def from_model(cls, report: CountReport) -> "CountDocument":
        return cls(
            kind=report.kind,
            formula_value=report.formula_value,
            enumerated_value=report.enumerated_value,
            discrepancy=report.discrepancy,
        )


class CompletenessDocument(BaseModel):
    exact: bool
    counting: bool
    counted: int
    formula: int
    overlapping: bool

    @classmethod
    def from_model(cls, verdict: CompletenessVerdict) -> "CompletenessDocument":
        return cls(
            exact=verdict.exact,
            counting=verdict.counting,
            counted=verdict.counted,
            formula=verdict.formula,
            overlapping=verdict.overlapping,
        )


class CertificateDocument(BaseModel):
    valid: bool
    bijection: List[int]


class FactorizationDocument(BaseModel):
    kind: ProductKind
    factors: List[HypergraphDocument]
    index_partition: List[List[int]] = Field(default_factory=list)
    bracketing: Optional[str] = None
    coordinates: CoordinatesDocument
    edge_color: Optional[List[int]] = None
    certificate: Optional[CertificateDocument] = None
    verdicts: List[CompletenessDocument] = Field(default_factory=list)
    timings: Optional[Dict[str, float]] = None

    @classmethod
    def from_cartesian(cls, f: HypergraphFactorization) -> "FactorizationDocument":
        return cls(
            kind=ProductKind.CARTESIAN,
            factors=[HypergraphDocument.from_model(h) for h in f.factors],
            index_partition=[[i] for i in range(len(f.factors))],
            coordinates=CoordinatesDocument.from_model(f.coords),
            edge_color=list(f.edge_color),
        )

    @classmethod
    def from_report(
        cls, report: PrimeFactorReport, certificate: bool = False, timings: bool = False
    ) -> "FactorizationDocument":
        return cls(
            kind=report.kind,
            factors=[HypergraphDocument.from_model(h) for h in report.factors],
            index_partition=[list(s) for s in report.index_partition],
            bracketing=format_bracketing(report.bracketing) if report.bracketing is not None else None,
            coordinates=CoordinatesDocument.from_model(report.coords),
            certificate=CertificateDocument(
                valid=report.certificate.valid, bijection=list(report.certificate.bijection)
            )
            if certificate
            else None,
            verdicts=[CompletenessDocument.from_model(v) for v in report.verdicts],
            timings=dict(report.timings) if timings else None,
        )


class IsomorphismDocument(BaseModel):
    isomorphic: bool
    bijection: Optional[List[int]] = None


class OracleDocument(BaseModel):
    command: str
    factors: Optional[List[HypergraphDocument]] = None
    edges: Optional[List[List[int]]] = None
    value: Optional[int] = Field(None, description="Integer result; null encodes an infinite distance")


class BenchDocument(BaseModel):
    sizes: List[int]
    seconds: List[float]
    slope: float
    threshold: float
    within_threshold: bool

    @classmethod
    def from_model(cls, report: BenchReport) -> "BenchDocument":
        return cls(
            sizes=list(report.sizes),
            seconds=list(report.seconds),
            slope=report.slope,
            threshold=report.threshold,
            within_threshold=report.within_threshold,
        )


DOCUMENTS: Dict[str, Type[BaseModel]] = {
    "hypergraph": HypergraphDocument,
    "coordinates": CoordinatesDocument,
    "validation": ValidationDocument,
    "product": ProductDocument,
    "skeleton": SkeletonDocument,
    "count": CountDocument,
    "factorization": FactorizationDocument,
    "isomorphism": IsomorphismDocument,
    "oracle": OracleDocument,
    "bench": BenchDocument,
}
