"""Reading and writing hypergraphs in the line-oriented text format and in JSON."""

import json
from pathlib import Path
from typing import Iterable, List, Tuple

from pydantic import ValidationError

from ..exceptions import InputFormatError
from ..models import Coordinates, Hypergraph
from ..schemas import CoordinatesDocument, HypergraphDocument

TEXT_HEADER = "hypergraph"
EDGE_PREFIX = "e"


def _parse_ints(tokens: List[str], lineno: int) -> List[int]:
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise InputFormatError(f"line {lineno}: expected integers, got {' '.join(tokens)!r}")


def parse_text(text: str) -> Hypergraph:
    header = None
    edges: List[Tuple[int, ...]] = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        tokens = stripped.split()
        if header is None:
            if tokens[0] != TEXT_HEADER or len(tokens) != 3:
                raise InputFormatError(f"line {lineno}: expected 'hypergraph <n> <m>'")
            header = _parse_ints(tokens[1:], lineno)
            continue
        if tokens[0] != EDGE_PREFIX:
            raise InputFormatError(f"line {lineno}: expected an 'e' edge line")
        vertices = _parse_ints(tokens[1:], lineno)
        if not vertices:
            raise InputFormatError(f"line {lineno}: empty edge")
        if any(b <= a for a, b in zip(vertices, vertices[1:])):
            raise InputFormatError(f"line {lineno}: edge vertices must be strictly ascending")
        edges.append(tuple(vertices))
    if header is None:
        raise InputFormatError("missing 'hypergraph <n> <m>' header")
    n, m = header
    if len(edges) != m:
        raise InputFormatError(f"header announces {m} edges but {len(edges)} were given")
    if len(set(edges)) != len(edges):
        raise InputFormatError("duplicate edge (multi-edges are not supported)")
    return Hypergraph(n, tuple(sorted(edges)))


def write_text(h: Hypergraph, comments: Iterable[str] = ()) -> str:
    lines = [f"# {c}" for c in comments]
    lines.append(f"{TEXT_HEADER} {h.n} {h.m}")
    lines.extend(f"{EDGE_PREFIX} " + " ".join(map(str, e)) for e in h.edges)
    return "\n".join(lines) + "\n"


def parse_json(text: str) -> Hypergraph:
    try:
        document = HypergraphDocument.model_validate_json(text)
    except ValidationError as exc:
        raise InputFormatError(f"invalid hypergraph JSON: {exc.errors()[0]['msg']}")
    for edge in document.edges:
        if any(b <= a for a, b in zip(edge, edge[1:])):
            raise InputFormatError(f"edge {edge} is not strictly ascending")
    if len({tuple(e) for e in document.edges}) != len(document.edges):
        raise InputFormatError("duplicate edge (multi-edges are not supported)")
    return document.to_model()


def write_json(h: Hypergraph) -> str:
    return HypergraphDocument.from_model(h).model_dump_json() + "\n"


def write_coordinates(c: Coordinates) -> str:
    return CoordinatesDocument.from_model(c).model_dump_json() + "\n"


def read_coordinates(path: Path) -> Coordinates:
    try:
        return CoordinatesDocument.model_validate_json(path.read_text(encoding="utf-8")).to_model()
    except ValidationError as exc:
        raise InputFormatError(f"invalid coordinates JSON: {exc.errors()[0]['msg']}")


def is_json_path(path: Path) -> bool:
    return path.suffix.lower() == ".json"


def read_hypergraph(path: Path) -> Hypergraph:
    """Parse a hypergraph file; the format is chosen by suffix (.json or text)."""
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise InputFormatError(f"cannot read {path}: {exc.strerror}")
    if is_json_path(path) or text.lstrip().startswith("{"):
        return parse_json(text)
    return parse_text(text)


def write_hypergraph(h: Hypergraph, path: Path, comments: Iterable[str] = ()) -> Path:
    body = write_json(h) if is_json_path(path) else write_text(h, comments)
    with path.open("w", encoding="utf-8", newline="\n") as handle:
        handle.write(body)
    return path


def dump_document(document) -> str:
    """Stable JSON text for any pydantic document."""
    return json.dumps(document.model_dump(mode="json"), indent=2, sort_keys=True) + "\n"
