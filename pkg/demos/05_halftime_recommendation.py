#!/usr/bin/env python3
"""The halftime walk-through, end to end.

Six categorical observations from a real youth match: offense High,
defense Medium, two transition readings (both High, collapsed to their
max), pressing Medium, energy Medium. Energy is then discounted by 0.15
for the expected second-half fatigue, and the five canonical templates are
ranked on the observable 5-attribute subspace.
"""

from touchline import builtin_canonical
from touchline.evaluation import pilot_replication, pilot_team_vector

team = pilot_team_vector()
print("Projected second-half team state:")
for a in team.active:
    print(f"  {a.name:<4} {a.display_name:<26} {team[a]:.2f}")

report = pilot_replication()
print("\nDistances to the canonical templates:")
for name, d in sorted(report.distances, key=lambda pair: pair[1]):
    print(f"  {name:<22} {d:.4f}")
print(f"\nRecommended: {report.chosen}")

print("\nWhy (strategy demand minus team state):")
for entry in report.recommendation.diagnostics:
    print(f"  {entry.attribute.name:<4} {entry.delta:+.2f}  [{entry.label}]")

chosen = builtin_canonical().by_name(report.chosen)
print(
    f"\nReading: the team over-delivers on transition speed "
    f"({team.components[2]:.2f} vs {chosen.profile[team.active[2]]:.2f} required) "
    f"and under-delivers on energy, so a tempo-controlling possession plan fits."
)
