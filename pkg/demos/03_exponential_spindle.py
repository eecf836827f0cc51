"""Build abstract spindles of exponential length.

A spindle distinguishes two apex sets covering all 2d symbols; its
length is the graph distance between them.  Putting *all* C(2d, d)
subsets on a path gives length C(2d, d) - 1, exponential in d, but the
template badly violates end-point count.  Running the randomized
construction on it repairs end-point count and strong adjacency while
multiplying the length by at least r.
"""

from math import comb

from spgraphs import (
    TransformConfig,
    build_exponential_spindle,
    build_spindle_template,
    check_endpoint_count,
    check_strong_adjacency,
    graph_distance,
    min_multiplier,
)

print("template growth (all d-subsets of 2d symbols on a path):")
for d in range(1, 7):
    template = build_spindle_template(d)
    print(f"  d={d}: {comb(2 * d, d):5d} vertices, length {template.length}")

template = build_spindle_template(2)
print("\nd=2 template end-point count:",
      "holds" if check_endpoint_count(template.spindle.spg).holds
      else "violated (every symbol lies in 3 sets)")

# The certified multiplier for a path (max degree 2).
r = min_multiplier(2)
print(f"\ncertified multiplier for max degree 2: r = {r}")

result = build_exponential_spindle(2, TransformConfig(r=r, seed=7))
spg = result.spg
locate = {v[0]: i for i, v in enumerate(spg.vertices)}
length = graph_distance(spg, locate[result.apices[0]], locate[result.apices[1]])

print(f"constructed spindle: dimension {spg.dimension} on {spg.symbols.n} "
      f"symbols, {len(spg.vertices)} vertices")
print(f"length {length} (template had 5; guaranteed floor {r * 5})")
print("strong adjacency:",
      "holds" if check_strong_adjacency(spg).holds else "violated")
print("end-point count:",
      "holds" if check_endpoint_count(spg).holds else "violated")
print(f"resampling rounds used: {result.rounds_used}")
