"""Strategy ranking: gap estimation, weight construction, scoring, diagnostics.

The entry point is rank_strategies, which scores every template in the
library against the team's state and returns a deterministic ranking plus
per-attribute diagnostics for the chosen strategy. Scoring is pure and
vectorized; identical inputs always produce identical output.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Mapping, Optional, Tuple

import numpy as np

from .attributes import (
    AttributeId,
    AttributeVector,
    MatchState,
    ParamSet,
    PartialAttributeVector,
    Vector,
)
from .distance import (
    CombineMode,
    ContextMultipliers,
    GapEstimate,
    WeightVector,
    combine,
    compute_multipliers,
    normalize_weights,
    prototype_multiplier,
)
from .errors import EmptyLibraryError, InactiveAttributeError, ShapeMismatchError
from .library import StrategyLibrary, StrategyTemplate

# Per-attribute delta beyond which a requirement counts as a deficit (or,
# negated, a surplus) in the diagnostics.
DIAGNOSTIC_THRESHOLD = 0.10

# Scores are compared at this resolution when ranking, so profiles whose
# distances are equal in decimal arithmetic stay tied (and fall back to
# library order) instead of being reordered by float rounding noise.
RANK_TIE_QUANTUM = 1e-9

LABEL_DEFICIT = "deficit"
LABEL_ALIGNED = "aligned"
LABEL_SURPLUS = "surplus"


@dataclass(frozen=True)
class RankedEntry:
    strategy_id: int
    name: str
    d_eucl: float
    d_adapt: float
    d_comb: float
    rank: int
    mu: float = 1.0

    def to_mapping(self) -> Dict[str, object]:
        return {
            "id": self.strategy_id,
            "name": self.name,
            "d_eucl": self.d_eucl,
            "d_adapt": self.d_adapt,
            "d_comb": self.d_comb,
            "rank": self.rank,
            "mu": self.mu,
        }


@dataclass(frozen=True)
class DiagnosticEntry:
    attribute: AttributeId
    delta: float
    label: str


@dataclass(frozen=True)
class Diagnostics:
    """Per-attribute gaps between a strategy's demands and the team's state."""

    entries: Tuple[DiagnosticEntry, ...]

    def __iter__(self):
        return iter(self.entries)

    def __getitem__(self, attribute: AttributeId) -> DiagnosticEntry:
        attribute = AttributeId(attribute)
        for entry in self.entries:
            if entry.attribute is attribute:
                return entry
        raise InactiveAttributeError(attribute)

    def to_mapping(self) -> Dict[str, Dict[str, object]]:
        return {e.attribute.name: {"delta": e.delta, "label": e.label} for e in self.entries}


@dataclass(frozen=True)
class Recommendation:
    entries: Tuple[RankedEntry, ...]
    chosen_id: int
    weights: WeightVector
    gaps: GapEstimate
    state: MatchState
    diagnostics: Diagnostics

    @property
    def chosen(self) -> RankedEntry:
        return self.entries[0]

    def entry_for(self, strategy_id: int) -> RankedEntry:
        for e in self.entries:
            if e.strategy_id == strategy_id:
                return e
        raise KeyError(strategy_id)

    def to_mapping(self) -> Dict[str, object]:
        return {
            "chosen": self.chosen.name,
            "chosen_id": self.chosen_id,
            "entries": [e.to_mapping() for e in self.entries],
            "weights": self.weights.to_mapping(),
            "gaps": self.gaps.to_mapping(),
            "state": self.state.to_mapping(),
            "diagnostics": self.diagnostics.to_mapping(),
        }


def estimate_gaps(team: AttributeVector, opponent: AttributeVector) -> GapEstimate:
    """Technical and physical gaps from the two full vectors."""
    return GapEstimate.from_vectors(team, opponent)


def _resolve_energy(team: Vector, state: MatchState, params: ParamSet) -> float:
    if state.energy is not None:
        return state.energy
    if isinstance(team, PartialAttributeVector):
        if team.has(AttributeId.A8):
            return team[AttributeId.A8]
        # No reading at all: treat energy as non-deficient rather than guess.
        return params.tau_e
    return team[AttributeId.A8]


def _resolve_gaps(team: Vector, opponent: Optional[Vector]) -> GapEstimate:
    if opponent is None:
        return GapEstimate(0.0, 0.0)
    if isinstance(team, AttributeVector) and isinstance(opponent, AttributeVector):
        return estimate_gaps(team, opponent)
    needed = (AttributeId.A12, AttributeId.A13)
    if all(team.has(a) and opponent.has(a) for a in needed):
        return GapEstimate(
            delta_tech=team[AttributeId.A12] - opponent[AttributeId.A12],
            delta_phys=team[AttributeId.A13] - opponent[AttributeId.A13],
        )
    return GapEstimate(0.0, 0.0)


def diagnostics(team: Vector, chosen: StrategyTemplate) -> Diagnostics:
    """Signed strategy-minus-team deltas with deficit/aligned/surplus labels."""
    entries = []
    for attribute in team.active:
        delta = chosen.profile[attribute] - team[attribute]
        if delta > DIAGNOSTIC_THRESHOLD:
            label = LABEL_DEFICIT
        elif delta < -DIAGNOSTIC_THRESHOLD:
            label = LABEL_SURPLUS
        else:
            label = LABEL_ALIGNED
        entries.append(DiagnosticEntry(attribute, delta, label))
    return Diagnostics(tuple(entries))


def rank_strategies(
    team: Vector,
    opponent: Optional[Vector],
    library: StrategyLibrary,
    state: MatchState,
    params: ParamSet,
    mode: CombineMode = CombineMode.SUBTRACTIVE,
) -> Recommendation:
    """Score and rank every template; ties break by library order.

    Strategy profiles are projected onto the team's active mask before
    scoring. Without an opponent the opponent factor is forced to zero and
    both gaps vanish.
    """
    if len(library) == 0:
        raise EmptyLibraryError()
    mask = tuple(team.active)
    if opponent is not None and tuple(opponent.active) != mask:
        raise ShapeMismatchError(opponent.active, mask)

    energy = _resolve_energy(team, state, params)
    gaps = _resolve_gaps(team, opponent)
    multipliers = compute_multipliers(energy, gaps, state, params)
    weights = normalize_weights(multipliers, mask)

    profiles = library.profile_matrix(mask)
    x = team.as_array()
    w = weights.as_array()
    sq = (profiles - x) ** 2
    d_eucl = np.sqrt(sq.sum(axis=1))
    d_adapt = np.sqrt(sq @ w)

    alpha = params.alpha if opponent is not None else 0.0
    mus = np.ones(len(library))
    if opponent is not None and alpha > 0.0:
        sq_opp = (profiles - opponent.as_array()) ** 2
        d_opp = np.sqrt(sq_opp @ w)
        if mode is CombineMode.EXPONENTIAL:
            mus = np.array(
                [prototype_multiplier(state, energy, t, params) for t in library]
            )
            d_comb = mus * (d_adapt + alpha * np.exp(-d_opp))
        else:
            d_comb = d_adapt - alpha * d_opp
    else:
        d_comb = d_adapt

    order = np.argsort(np.round(d_comb / RANK_TIE_QUANTUM).astype(np.int64), kind="stable")
    entries: List[RankedEntry] = []
    for rank, idx in enumerate(order, start=1):
        template = library[int(idx)]
        entries.append(
            RankedEntry(
                strategy_id=template.id,
                name=template.name,
                d_eucl=float(d_eucl[idx]),
                d_adapt=float(d_adapt[idx]),
                d_comb=float(d_comb[idx]),
                rank=rank,
                mu=float(mus[idx]),
            )
        )
    chosen_template = library[int(order[0])]
    return Recommendation(
        entries=tuple(entries),
        chosen_id=chosen_template.id,
        weights=weights,
        gaps=gaps,
        state=state,
        diagnostics=diagnostics(team, chosen_template),
    )


@dataclass(frozen=True)
class RankDelta:
    strategy_id: int
    name: str
    base_rank: int
    new_rank: int

    @property
    def delta(self) -> int:
        """Positive means the variant promoted the strategy."""
        return self.base_rank - self.new_rank

    def to_mapping(self) -> Dict[str, object]:
        return {
            "id": self.strategy_id,
            "name": self.name,
            "base_rank": self.base_rank,
            "new_rank": self.new_rank,
            "delta": self.delta,
        }


@dataclass(frozen=True)
class WhatIfResult:
    base: Recommendation
    variant: Recommendation
    rank_deltas: Tuple[RankDelta, ...]

    def to_mapping(self) -> Dict[str, object]:
        return {
            "base": self.base.to_mapping(),
            "variant": self.variant.to_mapping(),
            "rank_deltas": [d.to_mapping() for d in self.rank_deltas],
        }


def _apply_edits(vector: Vector, edits: Mapping[AttributeId, float]) -> Vector:
    out = vector
    for attribute, value in edits.items():
        out = out.with_value(AttributeId(attribute), float(value))
    return out


def whatif(
    team: Vector,
    opponent: Optional[Vector],
    library: StrategyLibrary,
    state: MatchState,
    params: ParamSet,
    mode: CombineMode = CombineMode.SUBTRACTIVE,
    state_overrides: Optional[Mapping[str, object]] = None,
    attribute_edits: Optional[Mapping[AttributeId, float]] = None,
) -> WhatIfResult:
    """Re-rank under edited inputs and report rank movement vs the base run."""
    base = rank_strategies(team, opponent, library, state, params, mode)

    new_state = state
    if state_overrides:
        merged = state.to_mapping()
        merged.update({k: v for k, v in state_overrides.items() if k in merged})
        new_state = MatchState.from_mapping(merged)
    new_team = _apply_edits(team, attribute_edits) if attribute_edits else team

    variant = rank_strategies(new_team, opponent, library, new_state, params, mode)

    deltas = []
    for entry in base.entries:
        new_rank = variant.entry_for(entry.strategy_id).rank
        deltas.append(RankDelta(entry.strategy_id, entry.name, entry.rank, new_rank))
    return WhatIfResult(base=base, variant=variant, rank_deltas=tuple(deltas))
