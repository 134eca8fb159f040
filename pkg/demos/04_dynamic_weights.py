#!/usr/bin/env python3
"""How match context bends the distance metric.

Multipliers react to three pressures: depleted energy shifts salience from
pressing and raw athleticism toward time management; being out-gunned
shifts it from attack toward defense and cohesion; chasing a result late
boosts transition speed and offense. Normalized weights always sum to the
active dimensionality, so the metric's overall scale never drifts.
"""

from touchline import (
    ALL_ATTRIBUTES,
    GapEstimate,
    MatchState,
    ParamSet,
    compute_multipliers,
    normalize_weights,
)

params = ParamSet()
print(f"defaults: tau_e={params.tau_e} gamma_e={params.gamma_e} gamma_g={params.gamma_g} "
      f"tau_t={params.tau_t} gamma_t={params.gamma_t} alpha={params.alpha}")

situations = [
    ("fresh, balanced, early", 0.8, GapEstimate(), MatchState(time_remaining=0.9)),
    ("tired (e=0.3)", 0.3, GapEstimate(), MatchState(time_remaining=0.9)),
    ("outmatched (-0.2 tech)", 0.7, GapEstimate(delta_tech=-0.2), MatchState(time_remaining=0.9)),
    ("chasing late (t=0.1)", 0.7, GapEstimate(), MatchState(time_remaining=0.1, score_state=-1)),
    ("tired + outmatched + late", 0.3, GapEstimate(delta_tech=-0.2, delta_phys=-0.1),
     MatchState(time_remaining=0.1, score_state=-1)),
]

header = " ".join(f"{a.name:>5}" for a in ALL_ATTRIBUTES)
print(f"\n{'situation':<28}{header}")
for label, energy, gaps, state in situations:
    m = compute_multipliers(energy, gaps, state, params)
    row = " ".join(f"{m[a]:>5.2f}" for a in ALL_ATTRIBUTES)
    print(f"{label:<28}{row}")

print("\nNormalized weights for the tired case (sum = 14):")
weights = normalize_weights(
    compute_multipliers(0.3, GapEstimate(), MatchState(), params), ALL_ATTRIBUTES
)
for a in (ALL_ATTRIBUTES[4], ALL_ATTRIBUTES[9], ALL_ATTRIBUTES[12]):
    print(f"  w[{a.name}] = {weights[a]:.4f}")
print(f"  total = {sum(weights.weights):.12f}")
