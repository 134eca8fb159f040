"""Tactical strategy templates and the library that holds them.

Five canonical templates ship with hand-validated profiles; the default
library file extends them with fifteen further named tactics whose vectors
were authored from the same qualitative encoding scale (marked
canonical=false). Library order is load order and doubles as the
deterministic tie-break order for ranking.
"""

from __future__ import annotations

import json
import warnings
from dataclasses import dataclass, replace
from enum import Enum
from importlib import resources
from pathlib import Path
from typing import Dict, Iterable, Iterator, List, Mapping, Optional, Sequence, Tuple, Union

import numpy as np

from .attributes import ALL_ATTRIBUTES, AttributeId, AttributeVector, make_vector
from .errors import DuplicateNameError, LibraryParseError, NegativeSigmaError, OutOfRangeError

CANONICAL_PROFILE_RANGE = (0.2, 0.9)


class StrategyCategory(str, Enum):
    OFFENSIVE = "offensive"
    PRESSING = "pressing"
    DEFENSIVE = "defensive"
    TRANSITION = "transition"
    POSSESSION = "possession"


@dataclass(frozen=True)
class StrategyTemplate:
    """A named tactic with its ideal-profile vector."""

    id: int
    name: str
    category: StrategyCategory
    profile: AttributeVector
    canonical: bool = False

    @property
    def intensity(self) -> float:
        """Physical demand proxy: mean of transition-speed and pressing requirements."""
        return (self.profile[AttributeId.A4] + self.profile[AttributeId.A5]) / 2.0

    def to_mapping(self) -> Dict[str, object]:
        return {
            "name": self.name,
            "category": self.category.value,
            "canonical": self.canonical,
            "profile": self.profile.to_mapping(),
        }


class StrategyLibrary:
    """Ordered, immutable collection of templates; order is tie-break order."""

    def __init__(self, templates: Sequence[StrategyTemplate]):
        self._templates: Tuple[StrategyTemplate, ...] = tuple(templates)
        seen_names = set()
        seen_ids = set()
        for t in self._templates:
            if t.name in seen_names:
                raise DuplicateNameError(t.name)
            if t.id in seen_ids:
                raise DuplicateNameError(f"id {t.id}")
            seen_names.add(t.name)
            seen_ids.add(t.id)
        self._matrix: Optional[np.ndarray] = None

    def __len__(self) -> int:
        return len(self._templates)

    def __iter__(self) -> Iterator[StrategyTemplate]:
        return iter(self._templates)

    def __getitem__(self, index: int) -> StrategyTemplate:
        return self._templates[index]

    def __eq__(self, other) -> bool:
        return isinstance(other, StrategyLibrary) and self._templates == other._templates

    @property
    def templates(self) -> Tuple[StrategyTemplate, ...]:
        return self._templates

    def by_name(self, name: str) -> StrategyTemplate:
        for t in self._templates:
            if t.name == name:
                return t
        raise KeyError(name)

    def names(self) -> Tuple[str, ...]:
        return tuple(t.name for t in self._templates)

    def profile_matrix(self, mask: Optional[Sequence[AttributeId]] = None) -> np.ndarray:
        """Profiles stacked row-wise, restricted to the masked columns."""
        if self._matrix is None:
            self._matrix = np.array([t.profile.components for t in self._templates], dtype=float)
        if mask is None:
            return self._matrix
        cols = [AttributeId(a) - 1 for a in mask]
        return self._matrix[:, cols]

    def to_json(self) -> List[Dict[str, object]]:
        return [t.to_mapping() for t in self._templates]


# Canonical template profiles, ordered A1..A14.
_CANONICAL: Tuple[Tuple[str, StrategyCategory, Tuple[float, ...]], ...] = (
    (
        "High Pressing",
        StrategyCategory.PRESSING,
        (0.70, 0.80, 0.60, 0.90, 0.90, 0.50, 0.80, 0.70, 0.80, 0.60, 0.90, 0.70, 0.80, 0.80),
    ),
    (
        "Fast Counterattack",
        StrategyCategory.TRANSITION,
        (0.90, 0.60, 0.50, 0.90, 0.50, 0.60, 0.70, 0.80, 0.70, 0.80, 0.60, 0.70, 0.80, 0.60),
    ),
    (
        "Positional Defense",
        StrategyCategory.DEFENSIVE,
        (0.40, 0.90, 0.80, 0.30, 0.20, 0.30, 0.70, 0.60, 0.60, 0.90, 0.80, 0.60, 0.50, 0.70),
    ),
    (
        "Build-up Play",
        StrategyCategory.OFFENSIVE,
        (0.80, 0.50, 0.70, 0.50, 0.40, 0.60, 0.70, 0.60, 0.80, 0.70, 0.80, 0.80, 0.60, 0.80),
    ),
    (
        "Gegenpressing",
        StrategyCategory.PRESSING,
        (0.70, 0.80, 0.60, 0.80, 0.90, 0.50, 0.80, 0.70, 0.80, 0.60, 0.90, 0.70, 0.80, 0.80),
    ),
)


def builtin_canonical() -> StrategyLibrary:
    """The five hand-validated templates, in their published order."""
    templates = [
        StrategyTemplate(
            id=i + 1,
            name=name,
            category=category,
            profile=make_vector(values),
            canonical=True,
        )
        for i, (name, category, values) in enumerate(_CANONICAL)
    ]
    return StrategyLibrary(templates)


def _validate_canonical_range(name: str, profile: AttributeVector) -> None:
    lo, hi = CANONICAL_PROFILE_RANGE
    for a in ALL_ATTRIBUTES:
        v = profile[a]
        if not (lo <= v <= hi):
            raise OutOfRangeError(f"{name}.{a.name}", v, lo, hi)


def _warn_below_floor(name: str, profile: AttributeVector) -> None:
    low = [a.name for a in ALL_ATTRIBUTES if profile[a] < CANONICAL_PROFILE_RANGE[0]]
    if low:
        warnings.warn(
            f"strategy {name!r} has components below 0.2 ({', '.join(low)}); "
            "custom templates are allowed there but canonical ones are not",
            stacklevel=3,
        )


def load_library(source: Union[str, Path, Iterable[Mapping]]) -> StrategyLibrary:
    """Load templates from a JSON array (path or parsed entries), in file order."""
    if isinstance(source, (str, Path)):
        try:
            with open(source, "r", encoding="utf-8") as fh:
                entries = json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            raise LibraryParseError(f"cannot read strategy library {source}: {exc}") from exc
    else:
        entries = list(source)
    if not isinstance(entries, list):
        raise LibraryParseError("library file must contain a JSON array of templates")

    templates: List[StrategyTemplate] = []
    for i, entry in enumerate(entries):
        try:
            name = str(entry["name"])
            category = StrategyCategory(str(entry.get("category", "offensive")))
            canonical = bool(entry.get("canonical", False))
            profile = AttributeVector.from_mapping(entry["profile"])
        except OutOfRangeError:
            raise
        except (KeyError, TypeError, ValueError) as exc:
            raise LibraryParseError(f"library entry {i}: {exc}") from exc
        if canonical:
            _validate_canonical_range(name, profile)
        else:
            _warn_below_floor(name, profile)
        templates.append(
            StrategyTemplate(id=i + 1, name=name, category=category, profile=profile, canonical=canonical)
        )
    return StrategyLibrary(templates)


def dump_library(library: StrategyLibrary, path: Union[str, Path]) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(library.to_json(), fh, indent=2)
        fh.write("\n")


def default_library_path() -> Path:
    return Path(str(resources.files("touchline").joinpath("data/strategies.json")))


def load_default_library() -> StrategyLibrary:
    """The shipped 20-template library (5 canonical + 15 authored)."""
    return load_library(default_library_path())


def perturb_template(
    template: StrategyTemplate,
    sigma: float,
    rng: np.random.Generator,
) -> StrategyTemplate:
    """Add independent N(0, sigma^2) noise per component, clamped to [0, 1].

    Name and id survive; the canonical flag does not, since the numbers no
    longer match the published profile.
    """
    if sigma < 0:
        raise NegativeSigmaError(sigma)
    noise = rng.normal(0.0, sigma, size=len(ALL_ATTRIBUTES))
    values = np.clip(template.profile.as_array() + noise, 0.0, 1.0)
    return replace(template, profile=make_vector(values.tolist()), canonical=False)
