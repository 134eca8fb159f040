#!/usr/bin/env python3
"""Counterfactual exploration: edit the inputs, watch the ranking move.

Two experiments on the halftime state: (1) what if energy were restored to
0.80 (fresh legs after substitutions)? (2) what if the match were nearly
over with the team trailing?
"""

from touchline import AttributeId, ParamSet, builtin_canonical, whatif
from touchline.evaluation import PILOT_STATE, pilot_team_vector

team = pilot_team_vector()
library = builtin_canonical()
params = ParamSet()


def show(result, title):
    print(title)
    print(f"  base variant  strategy")
    for delta in sorted(result.rank_deltas, key=lambda d: d.new_rank):
        marker = ""
        if delta.delta > 0:
            marker = f"  (up {delta.delta})"
        elif delta.delta < 0:
            marker = f"  (down {-delta.delta})"
        print(f"  {delta.base_rank:>4} {delta.new_rank:>7}  {delta.name}{marker}")
    print(f"  chosen: {result.base.chosen.name} -> {result.variant.chosen.name}\n")


fresh_legs = whatif(
    team, None, library, PILOT_STATE, params,
    attribute_edits={AttributeId.A8: 0.80},
)
show(fresh_legs, "Energy restored to 0.80:")

desperate = whatif(
    team, None, library, PILOT_STATE, params,
    state_overrides={"time_remaining": 0.08, "score_state": -1},
)
show(desperate, "Five minutes left, trailing:")
