"""Domain types for subset partition graphs and exhaustive property verifiers.

A subset partition graph (SPG) is a connected undirected graph whose
vertices partition a family of d-element subsets ("facet sets") of a
symbol set.  Symbols abstract the facets of a simple polyhedron: a
polyhedron vertex is identified with the d facets containing it, and the
graph abstracts the polyhedron's vertex-edge graph.

The verifiers in this module decide, by exhaustive enumeration, whether a
graph carries the combinatorial properties such abstractions may satisfy
(adjacency, strong adjacency, end-point count, the singleton property,
dimension reduction under restriction).  Verifiers never raise on a
violation: they return a :class:`PropertyReport` whose witnesses name
every offending set, vertex, or restriction, so callers can localize
failures.  Only malformed *calls* (precondition breaches) raise.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from enum import Enum
from itertools import combinations
from typing import Iterable, Iterator


class InvalidSpgError(ValueError):
    """A verifier was handed a graph that fails basic validation."""

    def __init__(self, report: "PropertyReport"):
        self.report = report
        first = witness_text(report.witnesses[0]) if report.witnesses else "unknown"
        super().__init__(
            f"invalid subset partition graph "
            f"({len(report.witnesses)} violations; first: {first})"
        )


class BudgetExceededError(RuntimeError):
    """An enumeration-bounded check refused to run past its budget."""

    def __init__(self, needed: int, budget: int):
        self.needed = needed
        self.budget = budget
        super().__init__(
            f"restriction enumeration needs more than {budget} "
            f"connectivity checks (at least {needed}); refusing rather than "
            f"reporting a partial result"
        )


def _mask_elements(mask: int) -> tuple[int, ...]:
    """Indices of the set bits of ``mask``, ascending."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return tuple(out)


@dataclass(frozen=True)
class SymbolTable:
    """Named symbols with a stable integer encoding 0..n-1.

    Set arithmetic everywhere else runs on the integer indices (packed
    into bit masks); labels exist only for input and output.
    """

    labels: tuple[str, ...]

    def __post_init__(self):
        object.__setattr__(self, "labels", tuple(self.labels))
        # n = 0 is tolerated so that restricting a degenerate d = n graph
        # by a full member stays representable; validate() still demands
        # d >= 1 (hence n >= 1) for anything that is not a restriction.
        if len(set(self.labels)) != len(self.labels):
            raise ValueError("symbol labels must be pairwise distinct")

    @property
    def n(self) -> int:
        return len(self.labels)

    def index(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise KeyError(f"unknown symbol label {label!r}") from None

    def lifted(self, r: int) -> "SymbolTable":
        """Table for the r-fold replicated symbol set.

        The copy of base symbol x in row j (1-based) is labelled
        ``"x@j"`` and encoded at index ``x*r + (j-1)``.
        """
        if r < 1:
            raise ValueError("row count must be at least 1")
        return SymbolTable(
            tuple(f"{base}@{j}" for base in self.labels for j in range(1, r + 1))
        )

    @classmethod
    def alphabetic(cls, n: int) -> "SymbolTable":
        """n symbols labelled a, b, c, ... (s26, s27, ... past the alphabet)."""
        letters = "abcdefghijklmnopqrstuvwxyz"
        return cls(
            tuple(letters[i] if i < 26 else f"s{i}" for i in range(n))
        )


class FacetSet:
    """An immutable, canonically sorted set of symbol indices.

    One member of the partitioned family: the d facets identifying one
    abstract polyhedron vertex.  Equality is structural; a bit mask is
    kept alongside the sorted tuple so intersection sizes cost one AND
    plus a popcount.
    """

    __slots__ = ("elements", "mask")

    def __init__(self, elements: Iterable[int]):
        elems = tuple(sorted(elements))
        mask = 0
        for e in elems:
            if e < 0:
                raise ValueError(f"negative symbol index {e}")
            mask |= 1 << e
        if mask.bit_count() != len(elems):
            raise ValueError(f"duplicate symbol indices in {elems}")
        self.elements = elems
        self.mask = mask

    @classmethod
    def from_mask(cls, mask: int) -> "FacetSet":
        fs = cls.__new__(cls)
        fs.elements = _mask_elements(mask)
        fs.mask = mask
        return fs

    @classmethod
    def from_labels(cls, table: SymbolTable, labels: Iterable[str]) -> "FacetSet":
        return cls(table.index(lbl) for lbl in labels)

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[int]:
        return iter(self.elements)

    def __contains__(self, index: int) -> bool:
        return index >= 0 and (self.mask >> index) & 1 == 1

    def __eq__(self, other) -> bool:
        return isinstance(other, FacetSet) and self.mask == other.mask

    def __hash__(self) -> int:
        return hash(self.mask)

    def __lt__(self, other: "FacetSet") -> bool:
        return self.elements < other.elements

    def __repr__(self) -> str:
        return f"FacetSet({list(self.elements)})"

    def intersection_size(self, other: "FacetSet") -> int:
        return (self.mask & other.mask).bit_count()

    def issubset(self, other: "FacetSet") -> bool:
        return self.mask & other.mask == self.mask

    def without(self, other: "FacetSet") -> "FacetSet":
        """Set difference self minus other."""
        return FacetSet.from_mask(self.mask & ~other.mask)

    def render(self, table: SymbolTable | None = None) -> str:
        if table is None:
            inner = ",".join(str(e) for e in self.elements)
        else:
            inner = ",".join(table.labels[e] for e in self.elements)
        return "{" + inner + "}"


@dataclass(frozen=True)
class Spg:
    """A (possibly invalid) subset partition graph.

    ``vertices[i]`` is the tuple of facet sets forming graph vertex i;
    ``edges`` are unordered index pairs.  Construction never rejects:
    structural violations (duplicate sets, disconnectedness, wrong set
    sizes) are data for :func:`validate`, not constructor errors --
    intermediate products of the randomized construction may be invalid
    on purpose.

    ``is_restriction`` exempts the graph from the connectivity
    requirement: restrictions routinely disconnect, and measuring
    exactly that is the point of dimension reduction.
    """

    symbols: SymbolTable
    dimension: int
    vertices: tuple[tuple[FacetSet, ...], ...]
    edges: tuple[tuple[int, int], ...]
    is_restriction: bool = False

    @classmethod
    def build(
        cls,
        symbols: SymbolTable,
        dimension: int,
        vertices: Iterable[Iterable[FacetSet]],
        edges: Iterable[tuple[int, int]] = (),
        is_restriction: bool = False,
    ) -> "Spg":
        """Canonical constructor: sorts facet sets within each vertex and
        normalizes edges to sorted (low, high) pairs.  Duplicates and
        self-loops are preserved for validate() to flag."""
        vtx = tuple(tuple(sorted(v)) for v in vertices)
        edg = tuple(sorted((min(u, w), max(u, w)) if u != w else (u, w)
                           for u, w in edges))
        return cls(symbols, dimension, vtx, edg, is_restriction)

    @property
    def num_vertices(self) -> int:
        return len(self.vertices)

    def family(self) -> list[FacetSet]:
        """All facet sets in vertex order (the family the vertices partition)."""
        return [fs for vertex in self.vertices for fs in vertex]

    def facets_with_vertex(self) -> list[tuple[int, FacetSet]]:
        return [(vi, fs) for vi, vertex in enumerate(self.vertices) for fs in vertex]

    def neighbors(self) -> list[list[int]]:
        adj: list[list[int]] = [[] for _ in self.vertices]
        for u, w in self.edges:
            adj[u].append(w)
            adj[w].append(u)
        return adj

    def edge_set(self) -> frozenset[tuple[int, int]]:
        return frozenset((min(u, w), max(u, w)) for u, w in self.edges)


@dataclass(frozen=True)
class Spindle:
    """An SPG on n = 2d symbols with two distinguished apex sets covering S."""

    spg: Spg
    apex1: FacetSet
    apex2: FacetSet

    def __post_init__(self):
        d = self.spg.dimension
        n = self.spg.symbols.n
        if n != 2 * d:
            raise ValueError(f"a spindle needs n = 2d, got n={n}, d={d}")
        if (self.apex1.mask | self.apex2.mask) != (1 << n) - 1:
            raise ValueError("apex sets must cover the whole symbol set")
        fam = set(self.spg.family())
        for apex in (self.apex1, self.apex2):
            if apex not in fam:
                raise ValueError(f"apex {apex!r} is not a member of the family")

    def apex_vertices(self) -> tuple[int, int]:
        v1 = v2 = -1
        for vi, vertex in enumerate(self.spg.vertices):
            if self.apex1 in vertex:
                v1 = vi
            if self.apex2 in vertex:
                v2 = vi
        return v1, v2

    def length(self) -> int:
        """Graph distance between the vertices holding the two apices."""
        v1, v2 = self.apex_vertices()
        return graph_distance(self.spg, v1, v2)


class SpgProperty(Enum):
    VALIDITY = "validity"
    PARTITION = "partition"
    CONNECTIVITY = "connectivity"
    ADJACENCY = "adjacency"
    STRONG_ADJACENCY = "strong-adjacency"
    ENDPOINT_COUNT = "endpoint-count"
    SINGLETON = "singleton"
    DIMENSION_REDUCTION = "dimension-reduction"
    LOCALIZATION = "localization"


@dataclass(frozen=True)
class PropertyReport:
    """Outcome of one verifier: pass/fail plus every violating witness.

    Witnesses are tuples whose first element is a short kind tag; the
    remaining entries name the facet sets, vertex indices, or restriction
    faces involved.  ``holds`` is true exactly when there are none.
    """

    property: SpgProperty
    witnesses: tuple[tuple, ...] = ()

    @property
    def holds(self) -> bool:
        return not self.witnesses

    def describe(self, table: SymbolTable | None = None) -> list[str]:
        return [witness_text(w, table) for w in self.witnesses]


def witness_text(witness: tuple, table: SymbolTable | None = None) -> str:
    """Render one witness tuple as a stable, human-readable line."""
    kind, *payload = witness
    parts = []
    for item in payload:
        if isinstance(item, FacetSet):
            parts.append(item.render(table))
        elif isinstance(item, tuple):
            parts.append("(" + ", ".join(
                p.render(table) if isinstance(p, FacetSet) else str(p)
                for p in item) + ")")
        else:
            parts.append(str(item))
    return f"{kind}: " + " ".join(parts) if parts else str(kind)


def _sorted_witnesses(witnesses: list[tuple]) -> tuple[tuple, ...]:
    # Deterministic order regardless of internal iteration (parallel-safe).
    return tuple(sorted(witnesses, key=lambda w: (w[0], str(w[1:]))))


def require_valid(spg: Spg) -> None:
    report = validate(spg)
    if not report.holds:
        raise InvalidSpgError(report)


def validate(spg: Spg) -> PropertyReport:
    """Gatekeeper check: partition property, uniform set size, simple
    connected graph.  Violations are data, never exceptions."""
    witnesses: list[tuple] = []
    n = spg.symbols.n
    d = spg.dimension

    min_dim = 0 if spg.is_restriction else 1
    if not (min_dim <= d <= n):
        witnesses.append(("dimension-out-of-range", d, n))

    if not spg.vertices:
        witnesses.append(("no-vertices",))

    seen: dict[int, int] = {}
    for vi, vertex in enumerate(spg.vertices):
        if not vertex:
            witnesses.append(("empty-vertex", vi))
        for fs in vertex:
            if len(fs) != d:
                witnesses.append(("wrong-size-set", fs, vi))
            if fs.elements and fs.elements[-1] >= n:
                witnesses.append(("symbol-out-of-range", fs, vi))
            if fs.mask in seen:
                witnesses.append(("duplicate-set", fs, seen[fs.mask], vi))
            else:
                seen[fs.mask] = vi

    edges_ok = True
    seen_edges: set[tuple[int, int]] = set()
    for u, w in spg.edges:
        if not (0 <= u < len(spg.vertices) and 0 <= w < len(spg.vertices)):
            witnesses.append(("edge-endpoint-out-of-range", u, w))
            edges_ok = False
            continue
        if u == w:
            witnesses.append(("self-loop", u))
            continue
        key = (min(u, w), max(u, w))
        if key in seen_edges:
            witnesses.append(("parallel-edge", key[0], key[1]))
        seen_edges.add(key)

    if not spg.is_restriction and spg.vertices and edges_ok:
        comp = _components(len(spg.vertices), spg.edges)
        if len(comp) > 1:
            witnesses.append(
                ("disconnected", len(comp), tuple(min(c) for c in comp)))

    return PropertyReport(SpgProperty.VALIDITY, _sorted_witnesses(witnesses))


def check_partition(spg: Spg) -> PropertyReport:
    """Partition aspect of validity only (duplicate or ill-formed sets)."""
    kinds = {"duplicate-set", "wrong-size-set", "symbol-out-of-range",
             "empty-vertex", "no-vertices"}
    ws = tuple(w for w in validate(spg).witnesses if w[0] in kinds)
    return PropertyReport(SpgProperty.PARTITION, ws)


def check_connectivity(spg: Spg) -> PropertyReport:
    """Actual connectivity, reported even for restriction-flagged graphs
    (which validate() exempts from the connectivity invariant)."""
    witnesses: list[tuple] = []
    if spg.vertices:
        nv = len(spg.vertices)
        usable = [(u, w) for u, w in spg.edges if 0 <= u < nv and 0 <= w < nv]
        comp = _components(nv, usable)
        if len(comp) > 1:
            witnesses.append(
                ("disconnected", len(comp), tuple(min(c) for c in comp)))
    return PropertyReport(SpgProperty.CONNECTIVITY, tuple(witnesses))


def _components(num_vertices: int, edges: Iterable[tuple[int, int]]) -> list[list[int]]:
    adj: list[list[int]] = [[] for _ in range(num_vertices)]
    for u, w in edges:
        if u != w:
            adj[u].append(w)
            adj[w].append(u)
    seen = [False] * num_vertices
    comps = []
    for start in range(num_vertices):
        if seen[start]:
            continue
        queue = deque([start])
        seen[start] = True
        comp = []
        while queue:
            v = queue.popleft()
            comp.append(v)
            for w in adj[v]:
                if not seen[w]:
                    seen[w] = True
                    queue.append(w)
        comps.append(comp)
    return comps


def check_adjacency(spg: Spg) -> PropertyReport:
    """Every pair of facet sets sharing d-1 symbols must sit in the same
    vertex or in adjacent vertices."""
    require_valid(spg)
    d = spg.dimension
    pairs = spg.facets_with_vertex()
    edge_set = spg.edge_set()
    witnesses: list[tuple] = []
    for i in range(len(pairs)):
        vi, a = pairs[i]
        for j in range(i + 1, len(pairs)):
            vj, b = pairs[j]
            if (a.mask & b.mask).bit_count() != d - 1:
                continue
            if vi == vj:
                continue
            if (min(vi, vj), max(vi, vj)) not in edge_set:
                witnesses.append(("non-adjacent-pair", a, b, vi, vj))
    return PropertyReport(SpgProperty.ADJACENCY, _sorted_witnesses(witnesses))


def check_strong_adjacency(spg: Spg) -> PropertyReport:
    """Adjacency, plus: every graph edge is witnessed by some pair of
    facet sets sharing d-1 symbols across it."""
    require_valid(spg)
    d = spg.dimension
    witnesses = list(check_adjacency(spg).witnesses)
    for u, w in spg.edges:
        if not any(
            a.intersection_size(b) == d - 1
            for a in spg.vertices[u]
            for b in spg.vertices[w]
        ):
            witnesses.append(("unwitnessed-edge", u, w))
    return PropertyReport(SpgProperty.STRONG_ADJACENCY, _sorted_witnesses(witnesses))


def check_endpoint_count(spg: Spg) -> PropertyReport:
    """Every (d-1)-subset of symbols is contained in at most two family
    members.

    Counts over each set's own d subsets of size d-1 (hash map on bit
    masks), so cost is |family| * d rather than C(n, d-1).
    """
    require_valid(spg)
    containing: dict[int, list[FacetSet]] = {}
    for fs in spg.family():
        for e in fs.elements:
            sub = fs.mask ^ (1 << e)
            containing.setdefault(sub, []).append(fs)
    witnesses: list[tuple] = []
    for sub, sets in containing.items():
        if len(sets) > 2:
            witnesses.append(
                ("over-counted-face", FacetSet.from_mask(sub), tuple(sorted(sets))))
    return PropertyReport(SpgProperty.ENDPOINT_COUNT, _sorted_witnesses(witnesses))


def check_singleton(spg: Spg) -> PropertyReport:
    """Every vertex holds exactly one facet set."""
    require_valid(spg)
    witnesses = [
        ("non-singleton-vertex", vi, len(vertex))
        for vi, vertex in enumerate(spg.vertices)
        if len(vertex) != 1
    ]
    return PropertyReport(SpgProperty.SINGLETON, _sorted_witnesses(witnesses))


def restrict(spg: Spg, face: FacetSet) -> Spg | None:
    """The restriction of the graph to the sets containing ``face``.

    Each surviving set drops the face's symbols; the symbol table shrinks
    to the complement; the induced graph keeps an edge iff both endpoint
    vertices survive.  Returns None when no set contains the face.  The
    result is flagged as a restriction (connectivity may legitimately
    fail, and the dimension may reach zero).
    """
    require_valid(spg)
    if len(face) > spg.dimension:
        raise ValueError(
            f"restriction face has {len(face)} symbols, dimension is {spg.dimension}")
    return _restrict_validated(spg, face)


def _restrict_validated(spg: Spg, face: FacetSet) -> Spg | None:
    kept_syms = [i for i in range(spg.symbols.n) if i not in face]
    remap = {old: new for new, old in enumerate(kept_syms)}

    new_vertices = []
    surviving = {}
    for vi, vertex in enumerate(spg.vertices):
        restricted = [
            FacetSet(remap[e] for e in fs.elements if e not in face)
            for fs in vertex
            if face.issubset(fs)
        ]
        if restricted:
            surviving[vi] = len(new_vertices)
            new_vertices.append(restricted)
    if not new_vertices:
        return None

    new_edges = [
        (surviving[u], surviving[w])
        for u, w in spg.edges
        if u in surviving and w in surviving
    ]
    table = SymbolTable(tuple(spg.symbols.labels[i] for i in kept_syms))
    return Spg.build(
        table,
        spg.dimension - len(face),
        new_vertices,
        new_edges,
        is_restriction=True,
    )


def check_dimension_reduction(spg: Spg, budget: int = 10_000_000) -> PropertyReport:
    """Every restriction by at most d symbols is connected or empty.

    Only faces contained in some family member are enumerated (all other
    restrictions are empty, hence vacuous).  Refuses outright with
    :class:`BudgetExceededError` when the enumeration would exceed
    ``budget`` restriction-connectivity checks; it never silently reports
    a partial pass.
    """
    require_valid(spg)
    d = spg.dimension
    if spg.vertices and d < 64 and (1 << d) > budget:
        # Every subset of a single member is already a candidate face.
        raise BudgetExceededError(1 << d, budget)

    witnesses: list[tuple] = []
    seen_faces: set[int] = set()
    checked = 0
    for fs in spg.family():
        for k in range(0, d + 1):
            for combo in combinations(fs.elements, k):
                mask = 0
                for e in combo:
                    mask |= 1 << e
                if mask in seen_faces:
                    continue
                seen_faces.add(mask)
                checked += 1
                if checked > budget:
                    raise BudgetExceededError(checked, budget)
                sub = _restrict_validated(spg, FacetSet(combo))
                if sub is None:
                    continue
                if len(_components(len(sub.vertices), sub.edges)) > 1:
                    witnesses.append(("disconnecting-face", FacetSet(combo)))
    return PropertyReport(
        SpgProperty.DIMENSION_REDUCTION, _sorted_witnesses(witnesses))


def graph_distance(spg: Spg, v1: int, v2: int) -> int:
    """Shortest-path distance in the underlying graph (breadth-first)."""
    if not (0 <= v1 < len(spg.vertices) and 0 <= v2 < len(spg.vertices)):
        raise ValueError(f"vertex index out of range: {v1}, {v2}")
    if v1 == v2:
        return 0
    adj = spg.neighbors()
    dist = {v1: 0}
    queue = deque([v1])
    while queue:
        v = queue.popleft()
        for w in adj[v]:
            if w not in dist:
                dist[w] = dist[v] + 1
                if w == v2:
                    return dist[w]
                queue.append(w)
    raise ValueError(f"vertex {v2} unreachable from {v1}")


def max_degree(spg: Spg) -> int:
    """Largest vertex degree of the graph."""
    deg = [0] * len(spg.vertices)
    for u, w in spg.edges:
        deg[u] += 1
        deg[w] += 1
    return max(deg, default=0)


def diameter(spg: Spg) -> int:
    """Largest pairwise graph distance; raises on disconnected input."""
    best = 0
    adj = spg.neighbors()
    for v in range(len(spg.vertices)):
        dist = {v: 0}
        queue = deque([v])
        while queue:
            x = queue.popleft()
            for w in adj[x]:
                if w not in dist:
                    dist[w] = dist[x] + 1
                    queue.append(w)
        if len(dist) != len(spg.vertices):
            raise ValueError("graph is disconnected")
        best = max(best, max(dist.values()))
    return best
