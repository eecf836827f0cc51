"""Randomized row-permutation subdivision of singleton subset partition graphs.

The construction turns any singleton SPG into one that additionally
satisfies strong adjacency and end-point count, at the cost of
multiplying the dimension and the symbol count by a row multiplier r.
It has two steps:

1. *Product lift*: every facet set A becomes A x [r] (r stacked copies,
   "rows") over the replicated symbol set.
2. *Edge subdivision*: every template edge between sets A and A' is
   replaced by a path of length r * (d - |A intersect A'|) that swaps
   exactly one lifted symbol per step, finishing one row before touching
   the next.  The order in which rows are adjusted is a permutation of
   [r] drawn uniformly and independently per edge; within a row, retired
   and introduced symbols are paired by ascending base-symbol rank.

Adjacency of the result can only fail where two subdivision paths
incident to a common template vertex come too close: a *bad event* for an
edge pair (e1, e2) at a shared vertex is a pair of subdivision sets, one
per path, agreeing in all but at most one lifted symbol.  Bad events are
detected exhaustively and resampled away by redrawing the row
permutations of the participating edges; for r >= ceil(16 * e * delta)
(delta the template's maximum degree) an assignment without bad events
exists and the resampling loop finds one quickly in practice.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from enum import Enum
from typing import Sequence

import numpy as np

from .core import (
    FacetSet,
    InvalidSpgError,
    PropertyReport,
    Spg,
    SpgProperty,
    _sorted_witnesses,
    check_adjacency,
    check_endpoint_count,
    check_singleton,
    check_strong_adjacency,
    require_valid,
    validate,
)


class Strategy(Enum):
    """How to redraw after a round with bad events: only the permutations
    of participating edges (partial resampling) or all of them (rejection)."""

    RESAMPLE = "resample"
    REJECT = "reject"


@dataclass(frozen=True)
class TransformConfig:
    r: int
    seed: int
    max_rounds: int = 1000
    strategy: Strategy = Strategy.RESAMPLE

    def __post_init__(self):
        if self.r < 2:
            raise ValueError(
                "row multiplier must be at least 2 for the lift to satisfy "
                "the end-point count")
        if self.max_rounds < 0:
            raise ValueError("max_rounds must be non-negative")


@dataclass(frozen=True)
class PermutationAssignment:
    """One row permutation per template edge.

    ``perms[i]`` belongs to ``edges[i]`` and is read from the
    lower-indexed endpoint: its j-th entry is the (1-based) row adjusted
    by the j-th segment when walking from the lower endpoint to the
    higher.  The view from the opposite endpoint is the reversal of the
    segment order, computed where needed rather than stored twice.
    """

    perms: tuple[tuple[int, ...], ...]

    def require_covers(self, edge_count: int, r: int) -> None:
        if len(self.perms) != edge_count:
            raise ValueError(
                f"assignment covers {len(self.perms)} edges, graph has {edge_count}")
        expected = frozenset(range(1, r + 1))
        for i, p in enumerate(self.perms):
            if frozenset(p) != expected or len(p) != r:
                raise ValueError(f"entry {i} is not a permutation of 1..{r}: {p}")

    @classmethod
    def draw(cls, rng: np.random.Generator, edge_count: int, r: int
             ) -> "PermutationAssignment":
        return cls(tuple(_fisher_yates(rng, r) for _ in range(edge_count)))


@dataclass(frozen=True)
class BadEvent:
    """Two subdivision sets on distinct edges at a common template vertex
    that agree in all but at most one lifted symbol."""

    vertex: int
    edges: tuple[int, int]
    witness: tuple[FacetSet, FacetSet]


@dataclass(frozen=True)
class TransformResult:
    """The constructed graph plus the bookkeeping tying it back to the
    template: where each original vertex went and which new vertices make
    up each subdivided edge.  ``resample_log`` is diagnostic only and
    excluded from structural equality."""

    spg: Spg
    vertex_map: tuple[int, ...]
    edge_paths: tuple[tuple[int, ...], ...]
    rounds_used: int = 0
    resample_log: tuple[tuple[int, tuple[BadEvent, ...]], ...] = field(
        default=(), compare=False)
    apices: tuple[FacetSet, FacetSet] | None = None


class ResamplingExhaustedError(RuntimeError):
    """The resampling budget ran out with bad events still present.

    Carries the last bad-event list and the full log; no partial graph is
    ever returned as a success.
    """

    def __init__(self, bad_events, resample_log, max_rounds):
        self.bad_events = tuple(bad_events)
        self.resample_log = tuple(resample_log)
        self.max_rounds = max_rounds
        super().__init__(
            f"still {len(self.bad_events)} bad events after {max_rounds} "
            f"resampling rounds")


class ConstructionVerificationError(RuntimeError):
    """A bad-event-free assignment failed re-verification (possible only
    below the localization regime r >= 4)."""

    def __init__(self, failed: Sequence[PropertyReport], resample_log=()):
        self.failed = tuple(failed)
        self.resample_log = tuple(resample_log)
        names = ", ".join(rep.property.value for rep in self.failed)
        super().__init__(f"constructed graph failed verification: {names}")


def min_multiplier(delta: int) -> int:
    """Smallest row multiplier the sufficiency bound certifies for a
    template of maximum degree ``delta``: ceil(16 * e * delta).

    A degree-0 template has no edges and hence no bad events; the floor
    of 2 (needed by the lift alone) is returned for it.
    """
    if delta < 0:
        raise ValueError("maximum degree cannot be negative")
    if delta == 0:
        return 2
    return math.ceil(16 * math.e * delta)


def lll_sufficient(delta: int, r: int) -> bool:
    """Whether (4*delta - 5) * (4/r) * e < 1, the local-lemma sufficiency
    condition for a bad-event-free assignment to exist: each bad event
    has probability at most 4/r and depends on at most 4*delta - 6
    others."""
    if r < 1:
        raise ValueError("row multiplier must be positive")
    return (4 * delta - 5) * (4.0 / r) * math.e < 1.0


def _fisher_yates(rng: np.random.Generator, r: int) -> tuple[int, ...]:
    rows = list(range(1, r + 1))
    for i in range(r - 1, 0, -1):
        j = int(rng.integers(0, i + 1))
        rows[i], rows[j] = rows[j], rows[i]
    return tuple(rows)


def lift_facet(fs: FacetSet, r: int) -> FacetSet:
    """A x [r]: the copy of base symbol x in row j sits at index x*r + (j-1)."""
    mask = 0
    block = (1 << r) - 1
    for e in fs.elements:
        mask |= block << (e * r)
    return FacetSet.from_mask(mask)


def lift_product(spg: Spg, r: int) -> Spg:
    """First construction step: replicate every facet set r times.

    Graph structure is unchanged; dimension becomes r*d over the
    replicated symbol set.  Requires a singleton input and r >= 2.
    """
    if r < 2:
        raise ValueError("row multiplier must be at least 2")
    singleton = check_singleton(spg)
    if not singleton.holds:
        raise InvalidSpgError(singleton)
    return Spg.build(
        spg.symbols.lifted(r),
        r * spg.dimension,
        [[lift_facet(fs, r) for fs in vertex] for vertex in spg.vertices],
        spg.edges,
    )


def _subdivision_masks(
    a: FacetSet, a2: FacetSet, r: int, perm: Sequence[int]
) -> list[int]:
    """Bit masks of the full subdivision sequence from A x [r] to A2 x [r].

    Segment j adjusts row perm[j-1]: each step retires one lifted copy of
    A minus A2 and introduces the rank-paired copy of A2 minus A, both in
    ascending base-symbol order.
    """
    out = [e for e in a.elements if e not in a2]
    inn = [e for e in a2.elements if e not in a]
    mask = lift_facet(a, r).mask
    seq = [mask]
    for row in perm:
        offset = row - 1
        for gone, came in zip(out, inn):
            mask &= ~(1 << (gone * r + offset))
            mask |= 1 << (came * r + offset)
            seq.append(mask)
    return seq


def subdivision_path(
    a: FacetSet, a2: FacetSet, r: int, perm: Sequence[int]
) -> list[FacetSet]:
    """The sequence of r*d-sized sets interpolating between two lifted
    endpoints, 1 + r * (d - |A intersect A2|) entries, one symbol swapped
    per consecutive pair."""
    if len(a) != len(a2):
        raise ValueError("endpoint sets must have equal size")
    if a == a2:
        raise ValueError("endpoint sets must differ")
    if r < 1:
        raise ValueError("row multiplier must be positive")
    if sorted(perm) != list(range(1, r + 1)):
        raise ValueError(f"not a permutation of 1..{r}: {perm}")
    return [FacetSet.from_mask(m) for m in _subdivision_masks(a, a2, r, perm)]


def build_subdivision(
    spg: Spg, r: int, perms: PermutationAssignment
) -> TransformResult:
    """Second construction step, deterministic given the permutations.

    Every template edge is replaced by its subdivision path; interior
    path sets become fresh singleton vertices.  Original vertices keep
    their indices, so the vertex map is the identity embedding.
    """
    require_valid(spg)
    singleton = check_singleton(spg)
    if not singleton.holds:
        raise InvalidSpgError(singleton)
    if r < 2:
        raise ValueError("row multiplier must be at least 2")
    perms.require_covers(len(spg.edges), r)

    lifted_vertices: list[tuple[FacetSet, ...]] = [
        (lift_facet(vertex[0], r),) for vertex in spg.vertices
    ]
    new_vertices = list(lifted_vertices)
    new_edges: list[tuple[int, int]] = []
    edge_paths: list[tuple[int, ...]] = []

    for ei, (u, w) in enumerate(spg.edges):
        a = spg.vertices[u][0]
        a2 = spg.vertices[w][0]
        path_sets = subdivision_path(a, a2, r, perms.perms[ei])
        assert path_sets[0] == lifted_vertices[u][0]
        assert path_sets[-1] == lifted_vertices[w][0]
        path_idx = [u]
        for fs in path_sets[1:-1]:
            path_idx.append(len(new_vertices))
            new_vertices.append((fs,))
        path_idx.append(w)
        new_edges.extend(
            (path_idx[i], path_idx[i + 1]) for i in range(len(path_idx) - 1))
        edge_paths.append(tuple(path_idx))

    result_spg = Spg.build(
        spg.symbols.lifted(r), r * spg.dimension, new_vertices, new_edges)
    assert result_spg.dimension == r * spg.dimension
    assert result_spg.symbols.n == r * spg.symbols.n
    assert all(len(v) == 1 for v in result_spg.vertices)
    return TransformResult(
        spg=result_spg,
        vertex_map=tuple(range(len(spg.vertices))),
        edge_paths=tuple(edge_paths),
    )


def find_bad_events(result: TransformResult, original: Spg) -> tuple[BadEvent, ...]:
    """Exhaustive bad-event scan of a built subdivision.

    For every template vertex V and unordered pair of distinct edges
    incident to V, examine every pair of subdivision sets (one per path,
    excluding V's own image but including the opposite endpoints) and
    report the pair of edges as bad if some two sets agree in rd - 1 or
    more lifted symbols.  Using >= rather than exact equality also
    catches outright duplicates, which would break the partition
    property.  At most one witness pair, the first in path order, is
    recorded per edge pair.
    """
    rd = result.spg.dimension
    threshold = rd - 1
    facet_of = [vertex[0] for vertex in result.spg.vertices]

    incident: list[list[int]] = [[] for _ in original.vertices]
    for ei, (u, w) in enumerate(original.edges):
        incident[u].append(ei)
        incident[w].append(ei)

    events: list[BadEvent] = []
    for v, edge_ids in enumerate(incident):
        if len(edge_ids) < 2:
            continue
        own = result.vertex_map[v]
        candidates = {
            ei: [idx for idx in result.edge_paths[ei] if idx != own]
            for ei in edge_ids
        }
        for i in range(len(edge_ids)):
            for j in range(i + 1, len(edge_ids)):
                e1, e2 = edge_ids[i], edge_ids[j]
                witness = None
                for b1 in candidates[e1]:
                    m1 = facet_of[b1].mask
                    for b2 in candidates[e2]:
                        if (m1 & facet_of[b2].mask).bit_count() >= threshold:
                            witness = (facet_of[b1], facet_of[b2])
                            break
                    if witness:
                        break
                if witness:
                    events.append(BadEvent(v, (e1, e2), witness))
    return tuple(events)


def _verify_construction(result: TransformResult, resample_log) -> None:
    reports = [
        validate(result.spg),
        check_singleton(result.spg),
        check_adjacency(result.spg),
        check_strong_adjacency(result.spg),
        check_endpoint_count(result.spg),
    ]
    failed = [rep for rep in reports if not rep.holds]
    if failed:
        raise ConstructionVerificationError(failed, resample_log)


def construct_with_resampling(spg: Spg, config: TransformConfig) -> TransformResult:
    """Full construction: draw row permutations, build, and resample away
    bad events until none remain.

    All randomness flows from one generator seeded with ``config.seed``;
    permutations are drawn per edge in canonical index order, and redraws
    consume the same stream, so identical inputs give bit-identical
    output.  With strategy RESAMPLE only edges participating in a bad
    event are redrawn each round; REJECT redraws all of them.  On success
    the result is re-verified (validity, singleton, adjacency, strong
    adjacency, end-point count) before being returned; exhausting
    ``max_rounds`` raises with the surviving bad events attached.
    """
    rng = np.random.default_rng(config.seed)
    perms = [_fisher_yates(rng, config.r) for _ in spg.edges]
    log: list[tuple[int, tuple[BadEvent, ...]]] = []

    for attempt in range(config.max_rounds + 1):
        result = build_subdivision(
            spg, config.r, PermutationAssignment(tuple(perms)))
        events = find_bad_events(result, spg)
        if not events:
            result = replace(
                result, rounds_used=attempt, resample_log=tuple(log))
            _verify_construction(result, tuple(log))
            return result
        log.append((attempt, events))
        if attempt == config.max_rounds:
            raise ResamplingExhaustedError(events, log, config.max_rounds)
        if config.strategy is Strategy.RESAMPLE:
            targets = sorted({ei for ev in events for ei in ev.edges})
        else:
            targets = range(len(spg.edges))
        for ei in targets:
            perms[ei] = _fisher_yates(rng, config.r)
    raise AssertionError("unreachable")


@dataclass(frozen=True)
class BadEventEstimate:
    frequency: float
    analytic_bound: float
    trials: int
    occurrences: int


def bad_event_occurs(
    center: FacetSet,
    leaf1: FacetSet,
    leaf2: FacetSet,
    r: int,
    perm1: Sequence[int],
    perm2: Sequence[int],
) -> bool:
    """Whether the two subdivision paths out of ``center`` (rows adjusted
    per ``perm1``/``perm2``) contain sets agreeing in rd - 1 or more
    lifted symbols, the center's own lift excluded."""
    rd = r * len(center)
    masks1 = _subdivision_masks(center, leaf1, r, perm1)[1:]
    masks2 = _subdivision_masks(center, leaf2, r, perm2)[1:]
    return any(
        (m1 & m2).bit_count() >= rd - 1 for m1 in masks1 for m2 in masks2)


def estimate_bad_event_probability(
    center: FacetSet,
    leaf1: FacetSet,
    leaf2: FacetSet,
    r: int,
    trials: int,
    seed: int,
) -> BadEventEstimate:
    """Monte-Carlo frequency of the bad event on a degree-2 star, next to
    the analytic bound 4/r it should respect once r >= 4."""
    if trials < 1:
        raise ValueError("trials must be positive")
    if r < 2:
        raise ValueError("row multiplier must be at least 2")
    if len({center, leaf1, leaf2}) != 3:
        raise ValueError("star sets must be pairwise distinct")
    if not (len(center) == len(leaf1) == len(leaf2)):
        raise ValueError("star sets must have uniform size")

    rng = np.random.default_rng(seed)
    hits = 0
    for _ in range(trials):
        p1 = _fisher_yates(rng, r)
        p2 = _fisher_yates(rng, r)
        if bad_event_occurs(center, leaf1, leaf2, r, p1, p2):
            hits += 1
    return BadEventEstimate(
        frequency=hits / trials,
        analytic_bound=4.0 / r,
        trials=trials,
        occurrences=hits,
    )


def check_localization(result: TransformResult, original: Spg) -> PropertyReport:
    """Exhaustive check that near-coincidences stay local: every pair of
    constructed sets agreeing in exactly rd - 1 lifted symbols must lie
    on a single subdivided edge or on two edges sharing a template
    endpoint.  Refuses below r = 4, where the guarantee does not apply.
    """
    if original.dimension == 0 or result.spg.dimension % original.dimension:
        raise ValueError("result dimension is not a multiple of the template's")
    r = result.spg.dimension // original.dimension
    if r < 4:
        raise ValueError(f"localization is only guaranteed for r >= 4, got r={r}")

    on_edges: list[set[int]] = [set() for _ in result.spg.vertices]
    for ei, path in enumerate(result.edge_paths):
        for idx in path:
            on_edges[idx].add(ei)

    def share_endpoint(e1: int, e2: int) -> bool:
        if e1 == e2:
            return True
        u1, w1 = original.edges[e1]
        u2, w2 = original.edges[e2]
        return u1 in (u2, w2) or w1 in (u2, w2)

    rd = result.spg.dimension
    facet_of = [vertex[0] for vertex in result.spg.vertices]
    witnesses: list[tuple] = []
    for i in range(len(facet_of)):
        mi = facet_of[i].mask
        for j in range(i + 1, len(facet_of)):
            if (mi & facet_of[j].mask).bit_count() != rd - 1:
                continue
            if not any(
                share_endpoint(e1, e2)
                for e1 in on_edges[i]
                for e2 in on_edges[j]
            ):
                witnesses.append(
                    ("delocalized-pair", facet_of[i], facet_of[j], i, j))
    return PropertyReport(SpgProperty.LOCALIZATION, _sorted_witnesses(witnesses))


def facet_rows(fs: FacetSet, r: int) -> dict[int, frozenset[int]]:
    """Split a lifted set into its per-row base-symbol sets, keyed by the
    1-based row index."""
    rows: dict[int, set[int]] = {j: set() for j in range(1, r + 1)}
    for e in fs.elements:
        rows[e % r + 1].add(e // r)
    return {j: frozenset(s) for j, s in rows.items()}


def row_structure_violations(
    result: TransformResult, original: Spg
) -> tuple[tuple, ...]:
    """Constructed sets must agree row-wise with one endpoint or the other
    of their edge, in all but at most one row.  Returns one violation
    tuple per offending set (empty when the structural law holds)."""
    r = result.spg.dimension // original.dimension
    facet_of = [vertex[0] for vertex in result.spg.vertices]
    violations: list[tuple] = []
    for ei, (u, w) in enumerate(original.edges):
        end_u = frozenset(original.vertices[u][0].elements)
        end_w = frozenset(original.vertices[w][0].elements)
        for idx in result.edge_paths[ei]:
            rows = facet_rows(facet_of[idx], r)
            differing = sum(
                1 for row_set in rows.values()
                if row_set != end_u and row_set != end_w)
            if differing > 1:
                violations.append(("row-structure", idx, ei, differing))
    return tuple(sorted(violations, key=str))
