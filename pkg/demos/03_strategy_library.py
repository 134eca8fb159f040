#!/usr/bin/env python3
"""Browsing and stress-testing the strategy library.

The shipped library holds twenty templates: five hand-validated canonical
profiles plus fifteen further named tactics authored on the same
qualitative encoding scale. Perturbation shows how sensitive a given
matchup is to the exact numbers in a profile.
"""

import numpy as np

from touchline import builtin_canonical, load_default_library, perturb_template

library = load_default_library()
print(f"{len(library)} templates, by category:")
by_cat = {}
for t in library:
    by_cat.setdefault(t.category.value, []).append(t.name)
for cat, names in sorted(by_cat.items()):
    print(f"  {cat:<11} {', '.join(names)}")

print("\nCanonical profiles (the validated five):")
canonical = builtin_canonical()
header = "  ".join(f"{a.name:>4}" for a in canonical[0].profile.active)
print(f"{'template':<22}{header}")
for t in canonical:
    row = "  ".join(f"{t.profile[a]:>4.2f}" for a in t.profile.active)
    print(f"{t.name:<22}{row}")

# Intensity drives the bounded multiplier used in exponential mode
print("\nIntensity (mean of transition-speed and pressing demands):")
for t in canonical:
    print(f"  {t.name:<22}{t.intensity:.2f}")

# Encoding uncertainty: jiggle a profile by sigma = 0.05 and look at drift
rng = np.random.default_rng(41)
original = canonical.by_name("Gegenpressing")
shaken = perturb_template(original, 0.05, rng)
drift = max(
    abs(shaken.profile[a] - original.profile[a]) for a in original.profile.active
)
print(f"\nAfter sigma=0.05 noise, Gegenpressing's largest component drift: {drift:.3f}")
print(f"Perturbed copies drop the canonical flag: canonical={shaken.canonical}")
