#!/usr/bin/env python3
"""Tour of the shared attribute space.

Every object the engine reasons about (a team's current state, an
opponent profile, a tactical template) is a point in the same
14-dimensional unit cube. This script builds a few of those points and
shows masking, categorical ingestion, and validation behavior.
"""

from touchline import (
    ALL_ATTRIBUTES,
    AttributeId,
    from_categorical,
    make_vector,
    project,
)
from touchline.errors import OutOfRangeError

# The 14 axes, with their display names and categories
print("The semantic space:")
for a in ALL_ATTRIBUTES:
    print(f"  {a.name:<4} {a.display_name:<26} ({a.category.value})")
print()

# A full team vector: one score per attribute, ordered A1..A14
team = make_vector([0.72, 0.65, 0.58, 0.81, 0.70, 0.55, 0.66, 0.74, 0.69, 0.60, 0.77, 0.68, 0.73, 0.71])
print(f"Team A4 (transition speed): {team[AttributeId.A4]}")

# Scouting reports often arrive on a High/Medium/Low scale; the standard
# anchors map them into the unit interval.
print(f"'High' maps to   {from_categorical('High')}")
print(f"'Medium' maps to {from_categorical('Medium')}")
print(f"'Low' maps to    {from_categorical('Low')}")

# When only a handful of attributes are observable, project onto them and
# keep working in the reduced subspace.
observable = (AttributeId.A1, AttributeId.A2, AttributeId.A4, AttributeId.A5, AttributeId.A8)
reduced = project(team, observable)
print(f"\nReduced view over {[a.name for a in reduced.active]}:")
print(f"  values = {reduced.components}")

# Validation is strict by default: data errors fail loudly.
try:
    make_vector([1.3] + [0.5] * 13)
except OutOfRangeError as exc:
    print(f"\nRejected out-of-range input as expected: {exc}")

# Noisy-ingestion paths can opt into clamping instead.
clamped = make_vector([1.3] + [0.5] * 13, clamp=True)
print(f"Clamping constructor instead yields A1 = {clamped[AttributeId.A1]}")
