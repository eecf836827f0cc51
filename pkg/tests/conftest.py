"""Shared strategies and random-instance generators for the test suite."""

from __future__ import annotations

import random
from itertools import combinations

from hypothesis import strategies as st

from spgraphs import FacetSet, Spg, SymbolTable


@st.composite
def spg_instances(draw, singleton=False, max_symbols=7, max_dim=3, max_sets=8):
    """Random valid SPGs: distinct d-subsets grouped into vertices and
    connected by a random spanning tree plus a few extra edges."""
    n = draw(st.integers(2, max_symbols))
    d = draw(st.integers(1, min(max_dim, n)))
    pool = [FacetSet(c) for c in combinations(range(n), d)]
    m = draw(st.integers(1, min(len(pool), max_sets)))
    sets = draw(st.lists(st.sampled_from(pool), min_size=m, max_size=m,
                         unique=True))

    if singleton:
        vertices = [[fs] for fs in sets]
    else:
        k = draw(st.integers(1, m))
        assignment = [draw(st.integers(0, k - 1)) for _ in sets]
        groups: dict[int, list[FacetSet]] = {}
        for fs, g in zip(sets, assignment):
            groups.setdefault(g, []).append(fs)
        vertices = [groups[g] for g in sorted(groups)]

    edges = [(draw(st.integers(0, i - 1)), i) for i in range(1, len(vertices))]
    possible_extra = [
        (u, w) for u in range(len(vertices)) for w in range(u + 1, len(vertices))
        if (u, w) not in set(edges)
    ]
    if possible_extra:
        edges += draw(st.lists(st.sampled_from(possible_extra), unique=True,
                               max_size=min(3, len(possible_extra))))
    return Spg.build(SymbolTable.alphabetic(n), d, vertices, edges)


def random_singleton_spg(rng: random.Random, max_vertices: int = 6,
                         max_dim: int = 3) -> Spg:
    """Plain-random singleton SPG on a random tree (for seeded corpora)."""
    d = rng.randint(1, max_dim)
    n = rng.randint(d + 1, d + 4)
    pool = list(combinations(range(n), d))
    count = rng.randint(2, min(max_vertices, len(pool)))
    sets = [FacetSet(c) for c in rng.sample(pool, count)]
    edges = [(rng.randrange(i), i) for i in range(1, count)]
    return Spg.build(SymbolTable.alphabetic(n), d, [[fs] for fs in sets], edges)


def random_general_spg(rng: random.Random, max_sets: int = 200) -> Spg:
    """Plain-random (non-singleton) valid SPG with up to max_sets members."""
    d = rng.randint(1, 4)
    n = rng.randint(d + 1, 12)
    pool = list(combinations(range(n), d))
    count = rng.randint(1, min(max_sets, len(pool)))
    sets = [FacetSet(c) for c in rng.sample(pool, count)]
    k = rng.randint(1, count)
    groups: dict[int, list[FacetSet]] = {}
    for i, fs in enumerate(sets):
        groups.setdefault(i % k, []).append(fs)
    vertices = [groups[g] for g in sorted(groups)]
    edges = [(rng.randrange(i), i) for i in range(1, len(vertices))]
    return Spg.build(SymbolTable.alphabetic(n), d, vertices, edges)


def brute_force_endpoint_violations(spg: Spg) -> set[frozenset[int]]:
    """Independent end-point-count oracle: for every (d-1)-subset of every
    member, scan the whole family with plain set containment."""
    family = [frozenset(fs.elements) for fs in spg.family()]
    violating: set[frozenset[int]] = set()
    seen: set[frozenset[int]] = set()
    for member in family:
        for face in combinations(sorted(member), len(member) - 1):
            fface = frozenset(face)
            if fface in seen:
                continue
            seen.add(fface)
            holders = [m for m in family if fface <= m]
            if len(holders) > 2:
                violating.add(fface)
    return violating
