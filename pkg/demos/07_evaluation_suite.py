#!/usr/bin/env python3
"""The full evaluation protocol in one run.

Executes the four shipped scenario fixtures, measures robustness to input
noise and to template re-encoding noise, sweeps the opponent factor, runs
the attribute ablation, replays the halftime case, and drops the figure
CSVs into ./figure_data/.
"""

from touchline.evaluation import (
    NoiseSpec,
    export_figure_data,
    load_default_scenarios,
    run_full_evaluation,
)

results = run_full_evaluation(noise=NoiseSpec(sigma=0.05, k=100, seed=41))

print("Scenario checks:")
for r in results.scenarios:
    flag = "PASS" if r.passed else "FAIL"
    print(f"  {r.spec.name:<40} -> {r.recommendation.chosen.name:<22} {flag}")

print("\nRobustness to +/-5% input noise (K=100):")
for r in results.robustness:
    print(f"  {r.scenario:<40} R = {r.r:.2f}")
mean_r = sum(r.r for r in results.robustness) / len(results.robustness)
print(f"  mean R = {mean_r:.3f}")

print("\nTemplate-perturbation stability (sigma=0.05, K=100):")
for name, value in results.stability:
    print(f"  {name:<40} {value:.2f}")

print("\nOpponent-factor sweep (0.1 .. 0.6):")
for report in results.sensitivity:
    print(f"  {report.scenario:<40} stable = {report.stable}")

print("\nMost influential attributes (largest top-strategy shift per scenario):")
for report in results.ablation:
    worst = max(report.entries, key=lambda e: abs(e.top_shift))
    print(f"  {report.scenario:<40} {worst.attribute.name} (shift {worst.top_shift:+.3f})")

print(f"\nHalftime replay chose: {results.pilot.chosen}")

paths = export_figure_data(results, "figure_data")
print("\nFigure data written:")
for p in paths:
    print(f"  {p}")
