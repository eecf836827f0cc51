"""Template builders: the exponential-length abstract spindle and the
path/star fixtures used by the experiment harness.

An abstract spindle lives on n = 2d symbols and distinguishes two apex
sets whose union is the whole symbol set; its length is the graph
distance between the two apex vertices.  Arranging *all* C(2d, d)
d-subsets of the symbols on a path, apices at the ends, gives a singleton
spindle whose length C(2d, d) - 1 is exponential in d.  The template
violates end-point count (for d >= 2 every symbol lies in far more than
two sets), which is exactly what the row-permutation subdivision then
repairs without shortening the path.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from itertools import combinations
from math import comb

from .core import (
    FacetSet,
    Spg,
    Spindle,
    SymbolTable,
    graph_distance,
    require_valid,
)
from .transform import (
    TransformConfig,
    TransformResult,
    construct_with_resampling,
    lift_facet,
)


@dataclass(frozen=True)
class SpindleTemplate:
    """A spindle whose path enumerates every d-subset exactly once,
    apices first and last."""

    spindle: Spindle
    order: tuple[FacetSet, ...]

    def __post_init__(self):
        d = self.spindle.spg.dimension
        n = self.spindle.spg.symbols.n
        if len(set(self.order)) != len(self.order):
            raise ValueError("subset order contains duplicates")
        if len(self.order) != comb(n, d):
            raise ValueError(
                f"order has {len(self.order)} subsets, expected {comb(n, d)}")
        if self.order[0] != self.spindle.apex1 or self.order[-1] != self.spindle.apex2:
            raise ValueError("apices must come first and last in the order")

    @property
    def length(self) -> int:
        return len(self.order) - 1


def build_spindle_template(d: int, max_dimension: int = 8) -> SpindleTemplate:
    """Path over all C(2d, d) d-subsets of 2d symbols, as singletons.

    Symbols are the pairs (i, side) for i in 1..d and side in {1, 2},
    labelled "i.side"; apex 1 is side 1, apex 2 is side 2.  Interior
    subsets follow colexicographic order, a fixed choice among the many
    that work.  Enumeration is desk-capped at ``max_dimension`` (C(16, 8)
    = 12870 vertices) unless overridden.
    """
    if d < 1:
        raise ValueError("dimension must be at least 1")
    if d > max_dimension:
        raise ValueError(
            f"d={d} exceeds the enumeration cap {max_dimension} "
            f"(C({2 * d},{d}) = {comb(2 * d, d)} vertices); raise max_dimension "
            f"to override")

    labels = tuple(f"{i}.1" for i in range(1, d + 1)) + tuple(
        f"{i}.2" for i in range(1, d + 1))
    table = SymbolTable(labels)
    apex1 = FacetSet(range(d))
    apex2 = FacetSet(range(d, 2 * d))

    order = [
        FacetSet(c)
        for c in sorted(combinations(range(2 * d), d), key=lambda c: c[::-1])
    ]
    assert order[0] == apex1 and order[-1] == apex2

    spg = Spg.build(
        table,
        d,
        [[fs] for fs in order],
        [(i, i + 1) for i in range(len(order) - 1)],
    )
    require_valid(spg)
    return SpindleTemplate(Spindle(spg, apex1, apex2), tuple(order))


def build_exponential_spindle(d: int, config: TransformConfig) -> TransformResult:
    """Run the full randomized construction on the spindle template.

    The result is again a spindle: apices are the lifted apex sets, the
    dimension is r*d over 2*r*d symbols, and the length grows to at least
    r * (C(2d, d) - 1) since every template edge becomes a path of length
    at least r.  Strong adjacency and end-point count hold on success
    (re-verified by the construction itself)."""
    template = build_spindle_template(d)
    result = construct_with_resampling(template.spindle.spg, config)

    apex1 = lift_facet(template.spindle.apex1, config.r)
    apex2 = lift_facet(template.spindle.apex2, config.r)
    v1 = result.vertex_map[0]
    v2 = result.vertex_map[len(template.order) - 1]
    assert result.spg.vertices[v1] == (apex1,)
    assert result.spg.vertices[v2] == (apex2,)
    assert result.spg.dimension == config.r * d
    assert result.spg.symbols.n == 2 * config.r * d
    assert graph_distance(result.spg, v1, v2) >= config.r * template.length
    return replace(result, apices=(apex1, apex2))


def build_path_template(symbols: SymbolTable, sets: list[FacetSet]) -> Spg:
    """Singleton path in the given order; generic experiment fixture."""
    _check_uniform_distinct(sets)
    spg = Spg.build(
        symbols,
        len(sets[0]),
        [[fs] for fs in sets],
        [(i, i + 1) for i in range(len(sets) - 1)],
    )
    require_valid(spg)
    return spg


def build_star_template(
    symbols: SymbolTable, center: FacetSet, leaves: list[FacetSet]
) -> Spg:
    """Singleton star with the given center; max degree = number of leaves."""
    _check_uniform_distinct([center, *leaves])
    spg = Spg.build(
        symbols,
        len(center),
        [[center]] + [[leaf] for leaf in leaves],
        [(0, i + 1) for i in range(len(leaves))],
    )
    require_valid(spg)
    return spg


def sliding_window_path(d: int) -> Spg:
    """The canonical d-dimensional path template: d+1 windows of width d
    sliding over 2d symbols ({a,b}, {b,c}, ... for d = 2)."""
    if d < 1:
        raise ValueError("dimension must be at least 1")
    symbols = SymbolTable.alphabetic(2 * d)
    sets = [FacetSet(range(i, i + d)) for i in range(d + 1)]
    return build_path_template(symbols, sets)


def _check_uniform_distinct(sets: list[FacetSet]) -> None:
    if not sets:
        raise ValueError("at least one facet set is required")
    if len(set(sets)) != len(sets):
        raise ValueError("facet sets must be pairwise distinct")
    size = len(sets[0])
    if any(len(fs) != size for fs in sets):
        raise ValueError("facet sets must have uniform size")
