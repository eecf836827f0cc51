"""Measure what the analysis only bounds.

The sufficiency bound r >= ceil(16 * e * delta) is loose: bad events are
rare well below it.  These probes measure the actual bad-event frequency
against its analytic ceiling 4/r, sweep the success rate of the
construction across small multipliers, and test whether dimension
reduction survives the transform on path templates.
"""

from spgraphs import (
    FacetSet,
    SymbolTable,
    build_star_template,
    estimate_bad_event_probability,
    min_multiplier,
    sweep_r,
    verify_dimension_reduction_on_paths,
)

# --- bad-event frequency vs the 4/r ceiling ---------------------------------

center, leaf1, leaf2 = FacetSet([0, 1]), FacetSet([2, 3]), FacetSet([4, 5])
trials = 10_000
print("bad-event frequency on the disjoint degree-2 star "
      f"({trials} trials per r):")
print("  r    frequency   4/r ceiling")
for r in (4, 8, 16, 32, 64):
    est = estimate_bad_event_probability(center, leaf1, leaf2, r, trials, seed=r)
    print(f"  {r:3d}  {est.frequency:9.4f}   {est.analytic_bound:.4f}")

# --- how far below the certified multiplier does the construction work? -----

# A star whose leaves share a symbol is the structure that actually
# provokes bad events; the certified multiplier for its degree is 87.
star = build_star_template(
    SymbolTable.alphabetic(5), FacetSet([0, 1]),
    [FacetSet([2, 3]), FacetSet([2, 4])])
r_certified = min_multiplier(2)
print(f"\nsuccess rate on the shared-leaf star (certified r = {r_certified}),")
print("20 trials per r, resampling budget 1000:")
report = sweep_r(star, [2, 3, 4, 8, 16, r_certified], trials=20, seed=515)
print("  r    successes  mean rounds  mean round-0 bad events")
for row in report.rows:
    mean_rounds = "-" if row.mean_rounds is None else f"{row.mean_rounds:.2f}"
    print(f"  {row.r:3d}  {row.successes:3d}/{row.trials:<5d} {mean_rounds:>8}"
          f"     {row.mean_round0_bad_events:.2f}")
print("(the bound is sufficient, visibly not necessary: resampling wins")
print("far below it)")

# --- dimension reduction on transformed paths -------------------------------

print("\ndimension reduction after transforming path templates:")
for d, r in ((1, 4), (2, 4)):
    summary = verify_dimension_reduction_on_paths(d=d, r=r, trials=3, seed=99)
    print(f"  d={d}, r={r}: {summary.holds_count}/{summary.constructions} "
          f"constructions preserve it "
          f"({summary.violation_count} violations)")
print("star templates are a different story; restriction can disconnect")
print("the two far leaves, which is why only paths are probed here.")
