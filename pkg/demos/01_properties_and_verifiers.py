"""Walk through the domain: build small subset partition graphs and run
every verifier on them.

A subset partition graph (SPG) abstracts the vertex-edge graph of a
simple polyhedron: symbols play the facets, each d-subset of symbols is
an abstract vertex, and the graph's vertices partition the family of
subsets.  Verifiers return witness lists, so a failed property tells you
exactly which sets or faces break it.
"""

from spgraphs import (
    FacetSet,
    Spg,
    SymbolTable,
    check_adjacency,
    check_connectivity,
    check_dimension_reduction,
    check_endpoint_count,
    check_singleton,
    check_strong_adjacency,
    restrict,
    validate,
    witness_text,
)

table = SymbolTable.alphabetic(4)


def show(title, report, symbols=table):
    status = "holds" if report.holds else "VIOLATED"
    print(f"  {title}: {status}")
    for witness in report.witnesses:
        print(f"    - {witness_text(witness, symbols)}")


# A path whose consecutive sets overlap in d-1 = 1 symbols.
good = Spg.build(
    table, 2,
    [[FacetSet([0, 1])], [FacetSet([1, 2])], [FacetSet([2, 3])]],
    [(0, 1), (1, 2)],
)
print("path {a,b} - {b,c} - {c,d}:")
for check in (validate, check_adjacency, check_strong_adjacency,
              check_endpoint_count, check_singleton, check_dimension_reduction):
    show(check.__name__, check(good))

# The same three sets in a different order break almost everything:
# {a,b} and {b,c} share a symbol pair but are no longer adjacent.
print()
bad = Spg.build(
    table, 2,
    [[FacetSet([0, 1])], [FacetSet([2, 3])], [FacetSet([1, 2])]],
    [(0, 1), (1, 2)],
)
print("path {a,b} - {c,d} - {b,c}:")
show("adjacency", check_adjacency(bad))
show("strong adjacency", check_strong_adjacency(bad))
show("dimension reduction", check_dimension_reduction(bad))

# Restriction by {b} keeps only the sets containing b and drops b from
# them; in the reordered path the middle vertex vanishes and the two
# survivors are stranded.  That is exactly what dimension reduction
# measures.
print()
restricted = restrict(bad, FacetSet([1]))
print("restriction of the reordered path by {b}:")
print("  vertices:", [[f.render(restricted.symbols) for f in v]
                      for v in restricted.vertices])
print("  edges:", list(restricted.edges))
show("connectivity", check_connectivity(restricted), restricted.symbols)

# End-point count: a (d-1)-face of a polyhedron edge has two endpoints,
# so no (d-1)-subset may lie in three or more sets.
print()
crowded = Spg.build(
    table, 2,
    [[FacetSet([0, 1])], [FacetSet([1, 2])], [FacetSet([1, 3])]],
    [(0, 1), (1, 2)],
)
print("family {a,b}, {b,c}, {b,d} (three sets through b):")
show("end-point count", check_endpoint_count(crowded))
