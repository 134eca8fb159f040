"""Hierarchical aggregation of raw observables into the 14 macro-attributes.

A context tree has three levels: leaves carry provider-unit metrics that are
min-max normalized against benchmarks, intermediate nodes combine children
(weighted sum or max), and each macro-attribute is either the root of such a
subtree or supplied directly as an already-normalized score. Trees are
immutable after load; evaluation is a pure function.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Dict, Mapping, Optional, Sequence, Tuple, Union

from .attributes import (
    ALL_ATTRIBUTES,
    AttributeId,
    AttributeVector,
    PartialAttributeVector,
    Vector,
    make_vector,
)
from .errors import (
    DegenerateBenchmarkError,
    InactiveAttributeError,
    MissingDirectError,
    MissingLeafError,
    WeightSumViolationError,
)

WEIGHT_TOLERANCE = 1e-9

COMBINER_WEIGHTED = "weighted"
COMBINER_MAX = "max"


def normalize_leaf(raw: float, benchmark_min: float, benchmark_max: float) -> float:
    """Min-max scale a raw metric against its benchmark range, clipped to [0, 1]."""
    if benchmark_max <= benchmark_min:
        raise DegenerateBenchmarkError(benchmark_min, benchmark_max)
    scaled = (float(raw) - benchmark_min) / (benchmark_max - benchmark_min)
    return min(max(scaled, 0.0), 1.0)


@dataclass(frozen=True)
class LeafMetric:
    """A raw observable plus the benchmark range used to normalize it."""

    id: str
    raw: float
    benchmark_min: float
    benchmark_max: float

    def normalized(self) -> float:
        return normalize_leaf(self.raw, self.benchmark_min, self.benchmark_max)


def aggregate_node(values: Sequence[float], weights: Sequence[float]) -> float:
    """Convex combination of child scores; weights must sum to 1 within 1e-9."""
    if len(values) != len(weights):
        raise WeightSumViolationError(sum(weights))
    total = float(sum(weights))
    if abs(total - 1.0) > WEIGHT_TOLERANCE:
        raise WeightSumViolationError(total)
    if any(w < 0 for w in weights):
        raise WeightSumViolationError(total)
    return float(sum(w * v for w, v in zip(weights, values)))


@dataclass(frozen=True)
class AggregationNode:
    """An intermediate node: children are leaf ids or nested nodes."""

    id: str
    children: Tuple[Tuple[Union[str, "AggregationNode"], float], ...]
    combiner: str = COMBINER_WEIGHTED

    def __post_init__(self):
        if not self.children:
            raise ValueError(f"node {self.id!r} has no children")
        if self.combiner not in (COMBINER_WEIGHTED, COMBINER_MAX):
            raise ValueError(f"node {self.id!r}: unknown combiner {self.combiner!r}")
        if self.combiner == COMBINER_WEIGHTED:
            total = sum(w for _, w in self.children)
            if abs(total - 1.0) > WEIGHT_TOLERANCE or any(w < 0 for _, w in self.children):
                raise WeightSumViolationError(total)


@dataclass(frozen=True)
class ContextTree:
    """One root per macro-attribute, or None to mark direct supply."""

    roots: Mapping[AttributeId, Optional[AggregationNode]]

    def __post_init__(self):
        covered = set(self.roots)
        expected = set(ALL_ATTRIBUTES)
        if covered != expected:
            missing = sorted(a.name for a in expected - covered)
            extra = sorted(str(a) for a in covered - expected)
            raise ValueError(f"tree must cover all 14 attributes (missing {missing}, extra {extra})")

    def direct_attributes(self) -> Tuple[AttributeId, ...]:
        return tuple(a for a in ALL_ATTRIBUTES if self.roots[a] is None)


def _evaluate_node(
    node: Union[str, AggregationNode],
    leaves: Mapping[str, float],
    benchmarks: Mapping[str, Tuple[float, float]],
) -> float:
    if isinstance(node, str):
        if node not in leaves:
            raise MissingLeafError(node)
        raw = float(leaves[node])
        if node in benchmarks:
            lo, hi = benchmarks[node]
            return normalize_leaf(raw, lo, hi)
        # No benchmark means the input is already a unit score.
        return min(max(raw, 0.0), 1.0)
    child_values = [_evaluate_node(child, leaves, benchmarks) for child, _ in node.children]
    if node.combiner == COMBINER_MAX:
        return max(child_values)
    return aggregate_node(child_values, [w for _, w in node.children])


def evaluate_tree(
    tree: ContextTree,
    leaves: Optional[Mapping[str, float]] = None,
    benchmarks: Optional[Mapping[str, Tuple[float, float]]] = None,
    direct: Optional[Mapping[AttributeId, float]] = None,
) -> AttributeVector:
    """Bottom-up evaluation of every attribute subtree into a full vector."""
    leaves = leaves or {}
    benchmarks = benchmarks or {}
    direct = {AttributeId(a): float(v) for a, v in (direct or {}).items()}
    values = []
    for attribute in ALL_ATTRIBUTES:
        root = tree.roots[attribute]
        if root is None:
            if attribute not in direct:
                raise MissingDirectError(attribute)
            values.append(direct[attribute])
        else:
            values.append(_evaluate_node(root, leaves, benchmarks))
    return make_vector(values)


def apply_fatigue_discount(vector: Vector, attribute: AttributeId, delta: float) -> Vector:
    """Shift one component by a signed delta, clamped to [0, 1]."""
    attribute = AttributeId(attribute)
    if isinstance(vector, PartialAttributeVector) and not vector.has(attribute):
        raise InactiveAttributeError(attribute)
    shifted = vector[attribute] + float(delta)
    return vector.with_value(attribute, shifted, clamp=True)


# ---------------------------------------------------------------------------
# File formats: tree definition and leaf benchmarks.
# ---------------------------------------------------------------------------

def _node_from_obj(obj: Mapping) -> AggregationNode:
    children = []
    for child in obj["children"]:
        ref = child["ref"]
        if isinstance(ref, Mapping):
            ref = _node_from_obj(ref)
        children.append((ref, float(child.get("weight", 0.0))))
    return AggregationNode(
        id=str(obj["id"]),
        children=tuple(children),
        combiner=str(obj.get("combiner", COMBINER_WEIGHTED)),
    )


def load_tree(path: Union[str, Path]) -> ContextTree:
    with open(path, "r", encoding="utf-8") as fh:
        doc = json.load(fh)
    roots: Dict[AttributeId, Optional[AggregationNode]] = {}
    for key, spec in doc.items():
        attribute = AttributeId.from_key(key)
        if isinstance(spec, Mapping) and spec.get("direct"):
            roots[attribute] = None
        else:
            roots[attribute] = _node_from_obj(spec)
    return ContextTree(roots)


def load_benchmarks(path: Union[str, Path]) -> Dict[str, Tuple[float, float]]:
    with open(path, "r", encoding="utf-8") as fh:
        doc = json.load(fh)
    out: Dict[str, Tuple[float, float]] = {}
    for leaf_id, bounds in doc.items():
        lo, hi = float(bounds["min"]), float(bounds["max"])
        if hi <= lo:
            raise DegenerateBenchmarkError(lo, hi)
        out[str(leaf_id)] = (lo, hi)
    return out
