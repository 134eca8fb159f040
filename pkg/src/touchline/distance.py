"""Distance metrics and the dynamic weighting scheme.

The baseline metric is plain Euclidean distance over the active attributes.
Context (energy deficit, capability gaps, time pressure) turns into
per-attribute multipliers, which normalize into a weight vector whose sum
equals the active dimensionality; the adapted distance applies those weights
to the squared differences. Two opponent-aware combination modes exist:
subtractive (default) and an exponential-decay variant paired with a bounded
intensity multiplier.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from enum import Enum
from pathlib import Path
from typing import Dict, Sequence, Tuple, Union

import numpy as np

from .attributes import (
    ALL_ATTRIBUTES,
    N_ATTRIBUTES,
    AttributeId,
    AttributeVector,
    MatchState,
    ParamSet,
    Vector,
)
from .errors import (
    DegenerateMultipliersError,
    EmptyMaskError,
    ShapeMismatchError,
)
from .library import StrategyTemplate

# Floor keeping pathological parameter overrides from producing negative
# weights; Table-4 defaults never reach it (worst case m5 = 0.25).
MULTIPLIER_FLOOR = 0.05

WEIGHT_SUM_TOLERANCE = 1e-9


class CombineMode(str, Enum):
    SUBTRACTIVE = "subtractive"
    EXPONENTIAL = "exponential"


@dataclass(frozen=True)
class GapEstimate:
    """Signed technical/physical capability gaps (team minus opponent)."""

    delta_tech: float = 0.0
    delta_phys: float = 0.0

    def __post_init__(self):
        for name, v in (("delta_tech", self.delta_tech), ("delta_phys", self.delta_phys)):
            if not (-1.0 <= v <= 1.0):
                raise ValueError(f"{name} must lie in [-1, 1], got {v!r}")

    @classmethod
    def from_vectors(cls, team: AttributeVector, opponent: AttributeVector) -> "GapEstimate":
        return cls(
            delta_tech=team[AttributeId.A12] - opponent[AttributeId.A12],
            delta_phys=team[AttributeId.A13] - opponent[AttributeId.A13],
        )

    def to_mapping(self) -> Dict[str, float]:
        return {"delta_tech": self.delta_tech, "delta_phys": self.delta_phys}


@dataclass(frozen=True)
class ContextMultipliers:
    """Per-attribute salience multipliers, 1.0 where context is neutral."""

    factors: Tuple[float, ...]

    def __post_init__(self):
        if len(self.factors) != N_ATTRIBUTES:
            raise ValueError(f"expected {N_ATTRIBUTES} multipliers, got {len(self.factors)}")

    def __getitem__(self, attribute: AttributeId) -> float:
        return self.factors[AttributeId(attribute) - 1]

    def as_array(self) -> np.ndarray:
        return np.asarray(self.factors, dtype=float)

    @classmethod
    def neutral(cls) -> "ContextMultipliers":
        return cls((1.0,) * N_ATTRIBUTES)


@dataclass(frozen=True)
class WeightVector:
    """Nonnegative weights over an active mask, summing to its size."""

    active: Tuple[AttributeId, ...]
    weights: Tuple[float, ...]

    def __getitem__(self, attribute: AttributeId) -> float:
        return self.weights[self.active.index(AttributeId(attribute))]

    def as_array(self) -> np.ndarray:
        return np.asarray(self.weights, dtype=float)

    def to_mapping(self) -> Dict[str, float]:
        return {a.name: w for a, w in zip(self.active, self.weights)}

    @classmethod
    def uniform(cls, mask: Sequence[AttributeId]) -> "WeightVector":
        mask = tuple(sorted(AttributeId(a) for a in mask))
        return cls(mask, (1.0,) * len(mask))


def compute_multipliers(
    energy: float,
    gaps: GapEstimate,
    state: MatchState,
    params: ParamSet,
) -> ContextMultipliers:
    """Turn match context into per-attribute multipliers.

    Energy deficit shifts salience from pressing and raw athleticism toward
    time management; being out-gunned technically or physically shifts it
    from attack and width toward defensive strength and cohesion; chasing a
    result late boosts transition speed and offense.
    """
    m = [1.0] * N_ATTRIBUTES

    def set_m(attribute: AttributeId, value: float) -> None:
        m[attribute - 1] = value

    delta_e = max(0.0, params.tau_e - float(energy))
    set_m(AttributeId.A5, 1.0 - params.gamma_e * delta_e)
    set_m(AttributeId.A10, 1.0 + params.gamma_e * delta_e)
    set_m(AttributeId.A13, 1.0 - 0.5 * params.gamma_e * delta_e)

    tech_deficit = max(0.0, -gaps.delta_tech)
    phys_deficit = max(0.0, -gaps.delta_phys)
    set_m(AttributeId.A2, 1.0 + params.gamma_g * tech_deficit)
    set_m(AttributeId.A11, 1.0 + params.gamma_g * phys_deficit)
    set_m(AttributeId.A1, 1.0 - 0.5 * params.gamma_g * tech_deficit)
    set_m(AttributeId.A6, 1.0 - 0.5 * params.gamma_g * phys_deficit)

    delta_t = max(0.0, params.tau_t - state.time_remaining) if state.score_state <= 0 else 0.0
    set_m(AttributeId.A4, 1.0 + params.gamma_t * delta_t)
    set_m(AttributeId.A1, m[AttributeId.A1 - 1] + params.gamma_t * delta_t)

    return ContextMultipliers(tuple(max(v, MULTIPLIER_FLOOR) for v in m))


def normalize_weights(
    multipliers: ContextMultipliers,
    mask: Sequence[AttributeId],
) -> WeightVector:
    """Scale masked multipliers so the weights sum to the mask size."""
    mask = tuple(sorted({AttributeId(a) for a in mask}))
    if not mask:
        raise EmptyMaskError()
    values = np.array([multipliers[a] for a in mask], dtype=float)
    total = float(values.sum())
    if total <= 0.0:
        raise DegenerateMultipliersError()
    weights = values * (len(mask) / total)
    return WeightVector(mask, tuple(float(w) for w in weights))


def _check_shapes(x: Vector, y: Vector) -> None:
    if tuple(x.active) != tuple(y.active):
        raise ShapeMismatchError(x.active, y.active)


def euclidean(x: Vector, y: Vector) -> float:
    """Baseline metric: root sum of squared differences over active attributes."""
    _check_shapes(x, y)
    diff = x.as_array() - y.as_array()
    return float(np.sqrt(np.dot(diff, diff)))


def adapted_distance(x: Vector, y: Vector, weights: WeightVector) -> float:
    """Weighted Euclidean distance; weights scale squared differences."""
    _check_shapes(x, y)
    if tuple(weights.active) != tuple(x.active):
        raise ShapeMismatchError(weights.active, x.active)
    diff = x.as_array() - y.as_array()
    return float(np.sqrt(float(np.dot(weights.as_array(), diff * diff))))


def combine(d_team: float, d_opp: float, alpha: float, mode: CombineMode) -> float:
    """Fold the opponent's distance into the team's score.

    Subtractive rewards strategies the opponent fits poorly; the exponential
    variant instead penalizes strategies the opponent fits well, with the
    penalty decaying as the opponent's distance grows.
    """
    if mode is CombineMode.SUBTRACTIVE:
        return d_team - alpha * d_opp
    if mode is CombineMode.EXPONENTIAL:
        return d_team + alpha * math.exp(-d_opp)
    raise ValueError(f"unknown combine mode {mode!r}")


def prototype_multiplier(
    state: MatchState,
    energy: float,
    template: StrategyTemplate,
    params: ParamSet,
) -> float:
    """Bounded intensity penalty used by the exponential combination mode.

    High-intensity templates cost more when energy is depleted; low-intensity
    ones are mildly favored. Always within [0.4, 2.0].
    """
    delta_e = max(0.0, params.tau_e - float(energy))
    mu = 1.0 + 2.0 * params.gamma_e * delta_e * (template.intensity - 0.5)
    return float(min(max(mu, 0.4), 2.0))


def load_params(path: Union[str, Path]) -> Tuple[ParamSet, CombineMode]:
    """Read parameter overrides plus combine mode from a JSON config."""
    with open(path, "r", encoding="utf-8") as fh:
        doc = json.load(fh)
    params = ParamSet.from_mapping(doc)
    mode = CombineMode(doc.get("combine_mode", CombineMode.SUBTRACTIVE.value))
    return params, mode
