"""Evaluation harness: scenario checks, noise robustness, stability, ablation.

Everything here is deterministic given its seed: Monte Carlo runs derive a
fresh generator from (seed, run_index), so runs are independent and the
whole report is reproducible byte-for-byte. CSV exports carry the data
behind the usual diagnostic figures (radar comparison, sensitivity curves,
robustness histograms, ablation bars).
"""

from __future__ import annotations

import csv
import json
from dataclasses import dataclass
from pathlib import Path
from typing import Dict, List, Mapping, Optional, Sequence, Tuple, Union

import numpy as np

from .attributes import (
    ALL_ATTRIBUTES,
    AttributeId,
    AttributeVector,
    MatchState,
    ParamSet,
    PartialAttributeVector,
    Vector,
    from_categorical,
    make_vector,
)
from .context_tree import apply_fatigue_discount
from .distance import CombineMode
from .errors import IoFailureError, MissingOpponentError, NegativeSigmaError
from .library import (
    StrategyLibrary,
    builtin_canonical,
    default_library_path,
    load_default_library,
    perturb_template,
)
from .recommend import Recommendation, rank_strategies

DEFAULT_SEED = 41
DEFAULT_ALPHA_GRID = (0.1, 0.2, 0.3, 0.4, 0.5, 0.6)


@dataclass(frozen=True)
class ScenarioSpec:
    """One simulated match situation plus the tactically expected winners."""

    name: str
    team: AttributeVector
    opponent: Optional[AttributeVector]
    state: MatchState
    expected_top: Tuple[str, ...]
    note: str = ""

    def __post_init__(self):
        if not self.expected_top:
            raise ValueError(f"scenario {self.name!r} has an empty expected-top set")

    @classmethod
    def from_mapping(cls, obj: Mapping) -> "ScenarioSpec":
        opponent = obj.get("opponent")
        return cls(
            name=str(obj["name"]),
            team=AttributeVector.from_mapping(obj["team"]),
            opponent=None if opponent is None else AttributeVector.from_mapping(opponent),
            state=MatchState.from_mapping(obj.get("state", {})),
            expected_top=tuple(obj["expected_top"]),
            note=str(obj.get("note", "")),
        )


def load_scenarios(path: Union[str, Path]) -> List[ScenarioSpec]:
    with open(path, "r", encoding="utf-8") as fh:
        return [ScenarioSpec.from_mapping(obj) for obj in json.load(fh)]


def default_scenarios_path() -> Path:
    return default_library_path().parent / "scenarios.json"


def load_default_scenarios() -> List[ScenarioSpec]:
    return load_scenarios(default_scenarios_path())


@dataclass(frozen=True)
class NoiseSpec:
    """Gaussian input-noise protocol: relative scale, run count, seed."""

    sigma: float = 0.05
    k: int = 100
    seed: int = DEFAULT_SEED
    additive: bool = False  # absolute instead of proportional noise

    def __post_init__(self):
        if self.sigma < 0:
            raise NegativeSigmaError(self.sigma)
        if self.k < 1:
            raise ValueError(f"run count must be >= 1, got {self.k}")


@dataclass(frozen=True)
class ScenarioResult:
    spec: ScenarioSpec
    recommendation: Recommendation
    passed: bool


@dataclass(frozen=True)
class RobustnessReport:
    scenario: str
    baseline: str
    per_run: Tuple[str, ...]
    r: float


@dataclass(frozen=True)
class SensitivityRow:
    alpha: float
    chosen: str
    d_comb: Dict[str, float]


@dataclass(frozen=True)
class SensitivityReport:
    scenario: str
    rows: Tuple[SensitivityRow, ...]
    stable: bool


@dataclass(frozen=True)
class AblationEntry:
    attribute: AttributeId
    chosen: str
    top_shift: float
    rank_changes: int


@dataclass(frozen=True)
class AblationReport:
    scenario: str
    baseline: str
    entries: Tuple[AblationEntry, ...]


@dataclass(frozen=True)
class PilotReport:
    team: PartialAttributeVector
    distances: Tuple[Tuple[str, float], ...]
    chosen: str
    recommendation: Recommendation


def run_scenarios(
    fixtures: Sequence[ScenarioSpec],
    library: Optional[StrategyLibrary] = None,
    params: Optional[ParamSet] = None,
    mode: CombineMode = CombineMode.SUBTRACTIVE,
) -> List[ScenarioResult]:
    """Execute each fixture and check the chosen strategy against expectations."""
    library = library or load_default_library()
    params = params or ParamSet()
    results = []
    for spec in fixtures:
        rec = rank_strategies(spec.team, spec.opponent, library, spec.state, params, mode)
        results.append(
            ScenarioResult(spec=spec, recommendation=rec, passed=rec.chosen.name in spec.expected_top)
        )
    return results


def _perturb_team(team: AttributeVector, noise: NoiseSpec, rng: np.random.Generator) -> AttributeVector:
    values = team.as_array()
    eps = rng.normal(0.0, noise.sigma, values.shape)
    noisy = values + eps if noise.additive else values * (1.0 + eps)
    return make_vector(np.clip(noisy, 0.0, 1.0).tolist(), clamp=True)


def robustness(
    spec: ScenarioSpec,
    noise: NoiseSpec,
    library: Optional[StrategyLibrary] = None,
    params: Optional[ParamSet] = None,
    mode: CombineMode = CombineMode.SUBTRACTIVE,
) -> RobustnessReport:
    """Fraction of noisy re-runs that preserve the clean top recommendation."""
    library = library or load_default_library()
    params = params or ParamSet()
    baseline = rank_strategies(spec.team, spec.opponent, library, spec.state, params, mode).chosen.name
    per_run = []
    for k in range(noise.k):
        rng = np.random.default_rng((noise.seed, k))
        noisy_team = _perturb_team(spec.team, noise, rng)
        rec = rank_strategies(noisy_team, spec.opponent, library, spec.state, params, mode)
        per_run.append(rec.chosen.name)
    matches = sum(name == baseline for name in per_run)
    return RobustnessReport(
        scenario=spec.name, baseline=baseline, per_run=tuple(per_run), r=matches / noise.k
    )


def template_stability(
    spec: ScenarioSpec,
    sigma: float,
    k: int,
    seed: int = DEFAULT_SEED,
    library: Optional[StrategyLibrary] = None,
    params: Optional[ParamSet] = None,
    mode: CombineMode = CombineMode.SUBTRACTIVE,
) -> float:
    """Proportion of runs whose winner survives re-encoding noise on every template."""
    if sigma < 0:
        raise NegativeSigmaError(sigma)
    library = library or load_default_library()
    params = params or ParamSet()
    baseline = rank_strategies(spec.team, spec.opponent, library, spec.state, params, mode).chosen.name
    kept = 0
    for run in range(k):
        rng = np.random.default_rng((seed, run))
        shaken = StrategyLibrary([perturb_template(t, sigma, rng) for t in library])
        rec = rank_strategies(spec.team, spec.opponent, shaken, spec.state, params, mode)
        kept += rec.chosen.name == baseline
    return kept / k


def sensitivity_sweep(
    spec: ScenarioSpec,
    alphas: Sequence[float] = DEFAULT_ALPHA_GRID,
    library: Optional[StrategyLibrary] = None,
    params: Optional[ParamSet] = None,
) -> SensitivityReport:
    """Subtractive-mode scores over an opponent-factor grid."""
    if spec.opponent is None:
        raise MissingOpponentError(f"scenario {spec.name!r} has no opponent vector")
    library = library or load_default_library()
    params = params or ParamSet()
    rows = []
    for alpha in alphas:
        rec = rank_strategies(
            spec.team,
            spec.opponent,
            library,
            spec.state,
            params.replace(alpha=float(alpha)),
            CombineMode.SUBTRACTIVE,
        )
        rows.append(
            SensitivityRow(
                alpha=float(alpha),
                chosen=rec.chosen.name,
                d_comb={e.name: e.d_comb for e in rec.entries},
            )
        )
    stable = len({row.chosen for row in rows}) <= 1
    return SensitivityReport(scenario=spec.name, rows=tuple(rows), stable=stable)


def ablation(
    spec: ScenarioSpec,
    library: Optional[StrategyLibrary] = None,
    params: Optional[ParamSet] = None,
    mode: CombineMode = CombineMode.SUBTRACTIVE,
) -> AblationReport:
    """Suppress each team attribute in turn and record the fallout."""
    library = library or load_default_library()
    params = params or ParamSet()
    base = rank_strategies(spec.team, spec.opponent, library, spec.state, params, mode)
    base_ranks = {e.strategy_id: e.rank for e in base.entries}
    base_top_id = base.chosen_id
    entries = []
    for attribute in spec.team.active:
        suppressed = spec.team.with_value(attribute, 0.0)
        rec = rank_strategies(suppressed, spec.opponent, library, spec.state, params, mode)
        shift = rec.entry_for(base_top_id).d_comb - base.chosen.d_comb
        changes = sum(
            1 for e in rec.entries if base_ranks[e.strategy_id] != e.rank
        )
        entries.append(
            AblationEntry(
                attribute=attribute,
                chosen=rec.chosen.name,
                top_shift=shift,
                rank_changes=changes,
            )
        )
    return AblationReport(scenario=spec.name, baseline=base.chosen.name, entries=tuple(entries))


# Halftime observations from the pilot match, recorded on the three-level
# scale. The two transition readings collapse to their maximum.
PILOT_OBSERVATIONS = {
    AttributeId.A1: "High",
    AttributeId.A2: "Medium",
    AttributeId.A5: "Medium",
    AttributeId.A8: "Medium",
}
PILOT_TRANSITION_OBSERVATIONS = ("High", "High")
PILOT_FATIGUE_DISCOUNT = -0.15
PILOT_STATE = MatchState(time_remaining=0.5, score_state=0)


def pilot_team_vector() -> PartialAttributeVector:
    """Projected second-half team state from the halftime observations."""
    values = {a: from_categorical(level) for a, level in PILOT_OBSERVATIONS.items()}
    values[AttributeId.A4] = max(from_categorical(v) for v in PILOT_TRANSITION_OBSERVATIONS)
    team = PartialAttributeVector.build(values)
    return apply_fatigue_discount(team, AttributeId.A8, PILOT_FATIGUE_DISCOUNT)


def pilot_replication(library: Optional[StrategyLibrary] = None) -> PilotReport:
    """Re-run the halftime recommendation on the observable 5-attribute subspace."""
    library = library or builtin_canonical()
    team = pilot_team_vector()
    rec = rank_strategies(team, None, library, PILOT_STATE, ParamSet())
    distances = tuple(
        (t.name, rec.entry_for(t.id).d_eucl) for t in library
    )
    return PilotReport(team=team, distances=distances, chosen=rec.chosen.name, recommendation=rec)


@dataclass(frozen=True)
class EvaluationResults:
    """Bundle of every report the harness can produce, ready for export."""

    scenarios: Tuple[ScenarioResult, ...] = ()
    robustness: Tuple[RobustnessReport, ...] = ()
    stability: Tuple[Tuple[str, float], ...] = ()
    sensitivity: Tuple[SensitivityReport, ...] = ()
    ablation: Tuple[AblationReport, ...] = ()
    pilot: Optional[PilotReport] = None


def run_full_evaluation(
    fixtures: Optional[Sequence[ScenarioSpec]] = None,
    library: Optional[StrategyLibrary] = None,
    params: Optional[ParamSet] = None,
    noise: Optional[NoiseSpec] = None,
    alphas: Sequence[float] = DEFAULT_ALPHA_GRID,
    seed: int = DEFAULT_SEED,
) -> EvaluationResults:
    fixtures = list(fixtures) if fixtures is not None else load_default_scenarios()
    library = library or load_default_library()
    params = params or ParamSet()
    noise = noise or NoiseSpec(seed=seed)
    return EvaluationResults(
        scenarios=tuple(run_scenarios(fixtures, library, params)),
        robustness=tuple(robustness(s, noise, library, params) for s in fixtures),
        stability=tuple(
            (s.name, template_stability(s, noise.sigma, noise.k, seed, library, params))
            for s in fixtures
        ),
        sensitivity=tuple(
            sensitivity_sweep(s, alphas, library, params) for s in fixtures if s.opponent is not None
        ),
        ablation=tuple(ablation(s, library, params) for s in fixtures),
        pilot=pilot_replication(),
    )


def _write_rows(path: Path, header: Sequence[str], rows: Sequence[Sequence]) -> None:
    try:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            writer = csv.writer(fh)
            writer.writerow(header)
            writer.writerows(rows)
    except OSError as exc:
        raise IoFailureError(path, exc) from exc


def export_figure_data(results: EvaluationResults, out_dir: Union[str, Path]) -> List[Path]:
    """Write one CSV per figure family; output is deterministic."""
    out_dir = Path(out_dir)
    try:
        out_dir.mkdir(parents=True, exist_ok=True)
    except OSError as exc:
        raise IoFailureError(out_dir, exc) from exc
    written = []

    if results.pilot is not None:
        pilot = results.pilot
        strategy = builtin_canonical().by_name(pilot.chosen)
        rows = [
            (a.name, repr(pilot.team[a]), repr(strategy.profile[a]))
            for a in pilot.team.active
        ]
        path = out_dir / "radar_pilot.csv"
        _write_rows(path, ("attribute", "team", "strategy"), rows)
        written.append(path)

    if results.sensitivity:
        rows = []
        for report in results.sensitivity:
            for row in report.rows:
                for name in sorted(row.d_comb):
                    rows.append((report.scenario, repr(row.alpha), name, repr(row.d_comb[name])))
        path = out_dir / "sensitivity.csv"
        _write_rows(path, ("scenario", "alpha", "strategy", "d_comb"), rows)
        written.append(path)

    if results.robustness:
        rows = []
        for report in results.robustness:
            counts: Dict[str, int] = {}
            for name in report.per_run:
                counts[name] = counts.get(name, 0) + 1
            for name in sorted(counts):
                rows.append((report.scenario, name, counts[name]))
        path = out_dir / "robustness.csv"
        _write_rows(path, ("scenario", "strategy", "wins"), rows)
        written.append(path)

    if results.ablation:
        rows = []
        for report in results.ablation:
            for entry in report.entries:
                rows.append(
                    (
                        report.scenario,
                        entry.attribute.name,
                        entry.chosen,
                        repr(entry.top_shift),
                        entry.rank_changes,
                    )
                )
        path = out_dir / "ablation.csv"
        _write_rows(path, ("scenario", "attribute", "chosen", "top_shift", "rank_changes"), rows)
        written.append(path)

    return written
