#!/usr/bin/env python3
"""From raw match observables to macro-attributes.

Raw provider metrics (xG, key passes, sprint distances...) are min-max
normalized against benchmarks, combined inside role-level nodes, and rolled
up into the 14 macro-attributes. The shipped default profile aggregates
offensive strength and residual energy from leaves and takes everything
else as directly supplied scores.
"""

from touchline import AttributeId, apply_fatigue_discount, evaluate_tree, normalize_leaf
from touchline.context_tree import load_benchmarks, load_tree
from touchline.library import default_library_path

data_dir = default_library_path().parent
tree = load_tree(data_dir / "context_tree.json")
benchmarks = load_benchmarks(data_dir / "leaf_benchmarks.json")

# Min-max scaling against a league benchmark
print(f"2.4 key passes against a 0..4 benchmark -> {normalize_leaf(2.4, 0, 4):.2f}")

# A matchday's raw observations for the aggregated attributes
leaves = {
    "xg_striker": 0.9, "shot_accuracy_striker": 0.55, "xg_wings": 0.35,
    "xa_attacking_mid": 0.5, "key_passes_central_mid": 2.4,
    "crosses_completed": 7.0, "dribbles_completed": 9.0,
    "stamina_reserve": 0.8, "repeat_sprint_capacity": 0.75,
    "rest_days": 4.0, "recovery_quality": 0.7,
    "minutes_freshness": 0.8, "intensity_sustain": 0.7,
}
# ... and analyst-supplied scores for the rest
direct = {
    AttributeId.A2: 0.62, AttributeId.A3: 0.58, AttributeId.A4: 0.75,
    AttributeId.A5: 0.66, AttributeId.A6: 0.51, AttributeId.A7: 0.64,
    AttributeId.A9: 0.70, AttributeId.A10: 0.55, AttributeId.A11: 0.72,
    AttributeId.A12: 0.65, AttributeId.A13: 0.69, AttributeId.A14: 0.60,
}

team = evaluate_tree(tree, leaves=leaves, benchmarks=benchmarks, direct=direct)
print("\nAggregated team vector:")
for a in team.active:
    bar = "#" * round(team[a] * 40)
    print(f"  {a.name:<4} {team[a]:.3f}  {bar}")

# Projecting fatigue ahead of the second half: shift residual energy down
projected = apply_fatigue_discount(team, AttributeId.A8, -0.15)
print(f"\nA8 now {team[AttributeId.A8]:.3f}; projected after fatigue discount: "
      f"{projected[AttributeId.A8]:.3f}")
