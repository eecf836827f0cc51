"""Canonical text documents for subset partition graphs and transform
results.

One versioned, self-describing JSON schema covers plain graphs,
spindles (via an apices annotation), and transform results (via
vertex-map and edge-path annotations).  Serialization is canonical --
sets sorted, keys sorted, two-space indent, trailing newline -- so equal
objects produce byte-equal documents and parse(serialize(x)) == x.
Parsing validates everything: structural errors and invariant violations
are reported as :class:`DocumentError` with field context, never as a
silently repaired object.
"""

from __future__ import annotations

import json
from typing import Any, Union

from .core import (
    FacetSet,
    Spg,
    Spindle,
    SymbolTable,
    validate,
    witness_text,
)
from .transform import TransformResult

FORMAT_VERSION = 1

Payload = Union[Spg, Spindle, TransformResult]


class DocumentError(ValueError):
    """Malformed or invariant-violating document."""


class DocumentVersionError(DocumentError):
    """Document declares a format version this code does not speak."""


def _spg_fields(spg: Spg) -> dict[str, Any]:
    return {
        "format_version": FORMAT_VERSION,
        "symbols": list(spg.symbols.labels),
        "dimension": spg.dimension,
        "vertices": [[list(fs.elements) for fs in vertex] for vertex in spg.vertices],
        "edges": [list(e) for e in spg.edges],
        "flags": {"is_restriction": spg.is_restriction},
    }


def serialize(obj: Payload) -> str:
    """Canonical text form of a graph, spindle, or transform result."""
    if isinstance(obj, Spindle):
        doc = _spg_fields(obj.spg)
        doc["kind"] = "spg"
        doc["annotations"] = {
            "apices": [list(obj.apex1.elements), list(obj.apex2.elements)],
        }
    elif isinstance(obj, TransformResult):
        doc = _spg_fields(obj.spg)
        doc["kind"] = "transform-result"
        annotations: dict[str, Any] = {
            "vertex_map": list(obj.vertex_map),
            "edge_paths": [list(path) for path in obj.edge_paths],
            "rounds_used": obj.rounds_used,
        }
        if obj.apices is not None:
            annotations["apices"] = [
                list(obj.apices[0].elements), list(obj.apices[1].elements)]
        doc["annotations"] = annotations
    elif isinstance(obj, Spg):
        doc = _spg_fields(obj)
        doc["kind"] = "spg"
    else:
        raise TypeError(f"cannot serialize {type(obj).__name__}")
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def _expect(doc: dict, key: str, types, context: str = "document"):
    if key not in doc:
        raise DocumentError(f"{context}: missing field {key!r}")
    value = doc[key]
    if not isinstance(value, types):
        raise DocumentError(
            f"{context}.{key}: expected {getattr(types, '__name__', types)}, "
            f"got {type(value).__name__}")
    return value


def _parse_facet(elements, n: int, context: str) -> FacetSet:
    if not isinstance(elements, list) or not all(
            isinstance(e, int) and not isinstance(e, bool) for e in elements):
        raise DocumentError(f"{context}: facet set must be a list of integers")
    try:
        fs = FacetSet(elements)
    except ValueError as err:
        raise DocumentError(f"{context}: {err}") from None
    if fs.elements and fs.elements[-1] >= n:
        raise DocumentError(
            f"{context}: symbol index {fs.elements[-1]} out of range (n={n})")
    return fs


def parse(text: str) -> Payload:
    """Parse and fully validate a document.

    Returns a plain graph, a spindle (when an apices annotation is
    present on an "spg" document), or a transform result.  Any invariant
    violation -- duplicate sets, disconnected non-restriction, bad
    indices, unknown version -- raises with the offending field named.
    """
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as err:
        raise DocumentError(
            f"malformed document: line {err.lineno}, column {err.colno}: "
            f"{err.msg}") from None
    if not isinstance(doc, dict):
        raise DocumentError("document root must be an object")

    version = _expect(doc, "format_version", int)
    if version != FORMAT_VERSION:
        raise DocumentVersionError(
            f"unsupported format_version {version} (this build reads "
            f"{FORMAT_VERSION})")

    kind = _expect(doc, "kind", str)
    if kind not in ("spg", "transform-result"):
        raise DocumentError(f"kind: unknown document kind {kind!r}")

    labels = _expect(doc, "symbols", list)
    if not all(isinstance(lbl, str) for lbl in labels):
        raise DocumentError("symbols: labels must be strings")
    try:
        table = SymbolTable(tuple(labels))
    except ValueError as err:
        raise DocumentError(f"symbols: {err}") from None

    dimension = _expect(doc, "dimension", int)
    if dimension < 0:
        raise DocumentError(f"dimension: must be non-negative, got {dimension}")

    raw_vertices = _expect(doc, "vertices", list)
    vertices = []
    for vi, raw_vertex in enumerate(raw_vertices):
        if not isinstance(raw_vertex, list):
            raise DocumentError(f"vertices[{vi}]: expected a list of facet sets")
        vertices.append([
            _parse_facet(raw, table.n, f"vertices[{vi}][{fi}]")
            for fi, raw in enumerate(raw_vertex)
        ])

    raw_edges = _expect(doc, "edges", list)
    edges = []
    for ei, raw_edge in enumerate(raw_edges):
        if (not isinstance(raw_edge, list) or len(raw_edge) != 2
                or not all(isinstance(x, int) and not isinstance(x, bool)
                           for x in raw_edge)):
            raise DocumentError(f"edges[{ei}]: expected a pair of vertex indices")
        edges.append((raw_edge[0], raw_edge[1]))

    flags = doc.get("flags", {})
    if not isinstance(flags, dict):
        raise DocumentError("flags: expected an object")
    is_restriction = flags.get("is_restriction", False)
    if not isinstance(is_restriction, bool):
        raise DocumentError("flags.is_restriction: expected a boolean")

    spg = Spg.build(table, dimension, vertices, edges,
                    is_restriction=is_restriction)
    report = validate(spg)
    if not report.holds:
        shown = "; ".join(
            witness_text(w, table) for w in report.witnesses[:3])
        raise DocumentError(
            f"document violates graph invariants "
            f"({len(report.witnesses)} violations): {shown}")

    annotations = doc.get("annotations", {})
    if not isinstance(annotations, dict):
        raise DocumentError("annotations: expected an object")

    apices = None
    if "apices" in annotations:
        raw_apices = annotations["apices"]
        if not isinstance(raw_apices, list) or len(raw_apices) != 2:
            raise DocumentError("annotations.apices: expected a pair of facet sets")
        apices = tuple(
            _parse_facet(raw, table.n, f"annotations.apices[{i}]")
            for i, raw in enumerate(raw_apices))
        family = set(spg.family())
        for i, apex in enumerate(apices):
            if apex not in family:
                raise DocumentError(
                    f"annotations.apices[{i}]: {apex.render(table)} is not a "
                    f"member of the family")

    if kind == "spg":
        if apices is not None:
            try:
                return Spindle(spg, apices[0], apices[1])
            except ValueError as err:
                raise DocumentError(f"annotations.apices: {err}") from None
        return spg

    vertex_map = annotations.get("vertex_map")
    edge_paths = annotations.get("edge_paths")
    rounds_used = annotations.get("rounds_used", 0)
    if not isinstance(vertex_map, list) or not all(
            isinstance(v, int) and 0 <= v < len(vertices) for v in vertex_map):
        raise DocumentError(
            "annotations.vertex_map: expected a list of vertex indices")
    if not isinstance(edge_paths, list):
        raise DocumentError("annotations.edge_paths: expected a list of paths")
    parsed_paths = []
    for pi, path in enumerate(edge_paths):
        if (not isinstance(path, list) or len(path) < 2 or not all(
                isinstance(v, int) and 0 <= v < len(vertices) for v in path)):
            raise DocumentError(
                f"annotations.edge_paths[{pi}]: expected a list of at least "
                f"two vertex indices")
        parsed_paths.append(tuple(path))
    if not isinstance(rounds_used, int) or rounds_used < 0:
        raise DocumentError(
            "annotations.rounds_used: expected a non-negative integer")

    return TransformResult(
        spg=spg,
        vertex_map=tuple(vertex_map),
        edge_paths=tuple(parsed_paths),
        rounds_used=rounds_used,
        apices=apices,
    )
