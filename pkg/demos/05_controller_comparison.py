"""Comparing the 3-, 5- and 7-MF controllers on one benchmark scenario.

Runs all three built-in rule bases over the identical 24.41 m / 0.1 s
scenario and prints the comparison table: rule count, time to target,
time to angle alignment, and path length, plus which controller was
fastest.
"""
from fuzzynav import benchmark_scenario, compare, ordering_report

entries = compare(benchmark_scenario())

print(f"{'controller':>10} {'rules':>6} {'t_target':>9} {'t_aligned':>10} {'path [m]':>9} {'reached':>8}")
for entry in entries:
    m = entry.metrics
    print(
        f"{entry.controller + '-MF':>10} {m.rule_count:>6} {m.time_to_target:>9.1f} "
        f"{m.time_angle_aligned:>10.1f} {m.path_length:>9.2f} {str(m.reached):>8}"
    )

report = ordering_report(entries)
print(f"\nfastest: {report['fastest']}-MF")
if report["three_mf_fastest"]:
    print("the fewest-terms controller wins under the default membership layout:")
    print("its coarse distance partition keeps the far (= fast) terms firing")
    print("longer, while the 5/7-MF controllers start easing off earlier and")
    print("crawl on their very-slow terms near the goal.")
else:
    print("the fewest-terms controller does not win under this layout.")
