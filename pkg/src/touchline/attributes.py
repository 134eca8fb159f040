"""The shared 14-attribute semantic space.

Teams, opponents and strategy profiles are all points in the same space:
one dimensionless score in [0, 1] per macro-attribute A1..A14. This module
defines the attribute identifiers, full and partial (masked) vectors, the
in-match context snapshot, and the global parameter set for dynamic
weighting. Every type here is an immutable value and safe to share across
threads.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from enum import Enum, IntEnum
from pathlib import Path
from typing import Dict, Iterable, Mapping, Optional, Sequence, Tuple, Union

import numpy as np

from .errors import (
    EmptyMaskError,
    InactiveAttributeError,
    OutOfRangeError,
    UnknownLevelError,
    WrongArityError,
)

N_ATTRIBUTES = 14


class AttributeCategory(str, Enum):
    TECHNICAL = "technical"
    PHYSICAL = "physical"
    PSYCHOLOGICAL = "psychological"


class AttributeId(IntEnum):
    """Macro-attribute identifiers, totally ordered A1 < A2 < ... < A14."""

    A1 = 1
    A2 = 2
    A3 = 3
    A4 = 4
    A5 = 5
    A6 = 6
    A7 = 7
    A8 = 8
    A9 = 9
    A10 = 10
    A11 = 11
    A12 = 12
    A13 = 13
    A14 = 14

    @property
    def display_name(self) -> str:
        return _ATTRIBUTE_INFO[self][0]

    @property
    def category(self) -> AttributeCategory:
        return _ATTRIBUTE_INFO[self][1]

    @classmethod
    def from_key(cls, key: str) -> "AttributeId":
        try:
            return cls[key]
        except KeyError:
            raise KeyError(f"unknown attribute key {key!r}") from None


_ATTRIBUTE_INFO: Dict[AttributeId, Tuple[str, AttributeCategory]] = {
    AttributeId.A1: ("Offensive Strength", AttributeCategory.TECHNICAL),
    AttributeId.A2: ("Defensive Strength", AttributeCategory.TECHNICAL),
    AttributeId.A3: ("Midfield Control", AttributeCategory.TECHNICAL),
    AttributeId.A4: ("Transition Speed", AttributeCategory.TECHNICAL),
    AttributeId.A5: ("High Press Capability", AttributeCategory.TECHNICAL),
    AttributeId.A6: ("Width Utilization", AttributeCategory.TECHNICAL),
    AttributeId.A7: ("Psychological Resilience", AttributeCategory.PSYCHOLOGICAL),
    AttributeId.A8: ("Residual Energy", AttributeCategory.PHYSICAL),
    AttributeId.A9: ("Team Morale", AttributeCategory.PSYCHOLOGICAL),
    AttributeId.A10: ("Time Management", AttributeCategory.PSYCHOLOGICAL),
    AttributeId.A11: ("Tactical Cohesion", AttributeCategory.PSYCHOLOGICAL),
    AttributeId.A12: ("Technical Base", AttributeCategory.PHYSICAL),
    AttributeId.A13: ("Physical Base", AttributeCategory.PHYSICAL),
    AttributeId.A14: ("Relational Cohesion", AttributeCategory.PSYCHOLOGICAL),
}

ALL_ATTRIBUTES: Tuple[AttributeId, ...] = tuple(AttributeId)


def _unit_value(value: float, where, clamp: bool) -> float:
    v = float(value)
    if clamp:
        return min(max(v, 0.0), 1.0)
    if not (0.0 <= v <= 1.0):
        raise OutOfRangeError(where, value)
    return v


@dataclass(frozen=True)
class AttributeVector:
    """A full point in [0,1]^14, indexed by AttributeId."""

    components: Tuple[float, ...]

    def __post_init__(self):
        if len(self.components) != N_ATTRIBUTES:
            raise WrongArityError(len(self.components))

    @property
    def active(self) -> Tuple[AttributeId, ...]:
        return ALL_ATTRIBUTES

    def __getitem__(self, attribute: AttributeId) -> float:
        return self.components[AttributeId(attribute) - 1]

    def as_array(self) -> np.ndarray:
        return np.asarray(self.components, dtype=float)

    def with_value(self, attribute: AttributeId, value: float, clamp: bool = False) -> "AttributeVector":
        v = _unit_value(value, attribute, clamp)
        idx = AttributeId(attribute) - 1
        comps = list(self.components)
        comps[idx] = v
        return AttributeVector(tuple(comps))

    def to_mapping(self) -> Dict[str, float]:
        return {a.name: self.components[a - 1] for a in ALL_ATTRIBUTES}

    @classmethod
    def from_mapping(cls, mapping: Mapping[str, float], clamp: bool = False) -> "AttributeVector":
        values = []
        for a in ALL_ATTRIBUTES:
            if a.name not in mapping:
                raise WrongArityError(len(mapping))
            values.append(mapping[a.name])
        return make_vector(values, clamp=clamp)


@dataclass(frozen=True)
class PartialAttributeVector:
    """Values for a non-empty subset of the attributes (the active mask)."""

    active: Tuple[AttributeId, ...]
    components: Tuple[float, ...]

    def __post_init__(self):
        if not self.active:
            raise EmptyMaskError()
        if len(self.active) != len(self.components):
            raise WrongArityError(len(self.components))

    @classmethod
    def build(
        cls,
        values: Mapping[AttributeId, float],
        clamp: bool = False,
    ) -> "PartialAttributeVector":
        if not values:
            raise EmptyMaskError()
        mask = tuple(sorted(AttributeId(a) for a in values))
        comps = tuple(_unit_value(values[a], a, clamp) for a in mask)
        return cls(mask, comps)

    def __getitem__(self, attribute: AttributeId) -> float:
        attribute = AttributeId(attribute)
        try:
            idx = self.active.index(attribute)
        except ValueError:
            raise InactiveAttributeError(attribute) from None
        return self.components[idx]

    def has(self, attribute: AttributeId) -> bool:
        return AttributeId(attribute) in self.active

    def as_array(self) -> np.ndarray:
        return np.asarray(self.components, dtype=float)

    def with_value(self, attribute: AttributeId, value: float, clamp: bool = False) -> "PartialAttributeVector":
        attribute = AttributeId(attribute)
        if attribute not in self.active:
            raise InactiveAttributeError(attribute)
        v = _unit_value(value, attribute, clamp)
        comps = list(self.components)
        comps[self.active.index(attribute)] = v
        return PartialAttributeVector(self.active, tuple(comps))

    def to_mapping(self) -> Dict[str, float]:
        out: Dict[str, float] = {a.name: v for a, v in zip(self.active, self.components)}
        return out

    @classmethod
    def from_mapping(cls, mapping: Mapping[str, float], clamp: bool = False) -> "PartialAttributeVector":
        values = {AttributeId.from_key(k): v for k, v in mapping.items()}
        return cls.build(values, clamp=clamp)


Vector = Union[AttributeVector, PartialAttributeVector]


def make_vector(values: Sequence[float], clamp: bool = False) -> AttributeVector:
    """Build a full vector from 14 components ordered A1..A14.

    Out-of-range components raise OutOfRangeError unless ``clamp`` is set;
    clamping is meant for noisy-ingestion paths only.
    """
    values = list(values)
    if len(values) != N_ATTRIBUTES:
        raise WrongArityError(len(values))
    comps = tuple(_unit_value(v, a, clamp) for a, v in zip(ALL_ATTRIBUTES, values))
    return AttributeVector(comps)


# Default anchors for the three-level categorical observation scale.
DEFAULT_ANCHORS: Dict[str, float] = {"High": 0.85, "Medium": 0.50, "Low": 0.20}

_LEVEL_ALIASES = {
    "high": "High",
    "hoch": "High",
    "medium": "Medium",
    "mittel": "Medium",
    "low": "Low",
    "niedrig": "Low",
}


def from_categorical(level: str, anchors: Optional[Mapping[str, float]] = None) -> float:
    """Map a High/Medium/Low observation to a unit score.

    Anchors are configuration (defaults 0.85/0.50/0.20) so sensitivity
    checks can sweep them without code changes; any override must stay in
    [0, 1] and keep High > Medium > Low.
    """
    table = dict(DEFAULT_ANCHORS if anchors is None else anchors)
    if set(table) != {"High", "Medium", "Low"}:
        raise ValueError(f"anchors must map exactly High/Medium/Low, got {sorted(table)}")
    if not (table["High"] > table["Medium"] > table["Low"]):
        raise ValueError("anchors must be strictly decreasing High > Medium > Low")
    for name, v in table.items():
        if not (0.0 <= v <= 1.0):
            raise OutOfRangeError(name, v)
    if not isinstance(level, str):
        raise UnknownLevelError(level)
    key = _LEVEL_ALIASES.get(level.strip().lower())
    if key is None:
        raise UnknownLevelError(level)
    return table[key]


def project(vector: Vector, mask: Iterable[AttributeId]) -> PartialAttributeVector:
    """Restrict a vector to the masked attributes, values unchanged."""
    mask = tuple(sorted({AttributeId(a) for a in mask}))
    if not mask:
        raise EmptyMaskError()
    values = {a: vector[a] for a in mask}  # raises InactiveAttributeError on bad mask
    return PartialAttributeVector(mask, tuple(values[a] for a in mask))


@dataclass(frozen=True)
class MatchState:
    """In-match context driving the dynamic weights.

    time_remaining is the fraction of match time left (1 = kickoff,
    0 = final whistle); score_state is -1/0/+1 for losing/drawing/winning;
    energy optionally overrides the team's A8 reading.
    """

    time_remaining: float = 1.0
    score_state: int = 0
    energy: Optional[float] = None

    def __post_init__(self):
        if not (0.0 <= self.time_remaining <= 1.0):
            raise OutOfRangeError("time_remaining", self.time_remaining)
        if self.score_state not in (-1, 0, 1):
            raise OutOfRangeError("score_state", self.score_state, -1, 1)
        if self.energy is not None and not (0.0 <= self.energy <= 1.0):
            raise OutOfRangeError("energy", self.energy)

    def to_mapping(self) -> Dict[str, object]:
        return {
            "time_remaining": self.time_remaining,
            "score_state": self.score_state,
            "energy": self.energy,
        }

    @classmethod
    def from_mapping(cls, mapping: Mapping[str, object]) -> "MatchState":
        return cls(
            time_remaining=float(mapping.get("time_remaining", 1.0)),
            score_state=int(mapping.get("score_state", 0)),
            energy=None if mapping.get("energy") is None else float(mapping["energy"]),
        )


@dataclass(frozen=True)
class ParamSet:
    """Global knobs for dynamic weighting and opponent awareness."""

    tau_e: float = 0.50   # energy threshold below which fatigue matters
    gamma_e: float = 1.50  # energy sensitivity
    gamma_g: float = 1.00  # gap sensitivity
    tau_t: float = 0.25   # urgency triggers in the final fraction of the match
    gamma_t: float = 2.00  # urgency sensitivity
    alpha: float = 0.20   # opponent factor

    def __post_init__(self):
        for name in ("tau_e", "gamma_e", "gamma_g", "tau_t", "gamma_t", "alpha"):
            if getattr(self, name) < 0:
                raise OutOfRangeError(name, getattr(self, name), 0, float("inf"))
        for name in ("tau_e", "tau_t", "alpha"):
            if getattr(self, name) > 1.0:
                raise OutOfRangeError(name, getattr(self, name))

    def replace(self, **overrides) -> "ParamSet":
        merged = self.to_mapping()
        merged.update({k: v for k, v in overrides.items() if v is not None})
        return ParamSet(**merged)

    def to_mapping(self) -> Dict[str, float]:
        return {
            "tau_e": self.tau_e,
            "gamma_e": self.gamma_e,
            "gamma_g": self.gamma_g,
            "tau_t": self.tau_t,
            "gamma_t": self.gamma_t,
            "alpha": self.alpha,
        }

    @classmethod
    def from_mapping(cls, mapping: Mapping[str, float]) -> "ParamSet":
        known = {k: float(v) for k, v in mapping.items() if k in cls().to_mapping()}
        return cls(**known)


def encode_vector(vector: Vector) -> Dict[str, object]:
    """JSON shape shared by all file formats and API payloads."""
    obj: Dict[str, object] = dict(vector.to_mapping())
    if isinstance(vector, PartialAttributeVector):
        obj["active"] = [a.name for a in vector.active]
    return obj


def decode_vector(obj: Mapping[str, object], clamp: bool = False) -> Vector:
    """Inverse of encode_vector: full vector unless an "active" array is present."""
    if "active" in obj:
        active = [AttributeId.from_key(str(k)) for k in obj["active"]]
        if not active:
            raise EmptyMaskError()
        values = {a: float(obj[a.name]) for a in active}
        return PartialAttributeVector.build(values, clamp=clamp)
    known = {a.name: float(obj[a.name]) for a in ALL_ATTRIBUTES if a.name in obj}
    return AttributeVector.from_mapping(known, clamp=clamp)


def load_vector(path: Union[str, Path], clamp: bool = False) -> Vector:
    with open(path, "r", encoding="utf-8") as fh:
        return decode_vector(json.load(fh), clamp=clamp)
