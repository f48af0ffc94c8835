"""Two-input Mamdani inference over uniform triangular partitions.

Partitions are symmetric and 50% overlapping, so at most two adjacent sets
are active for any crisp input and the memberships always sum to one.
Rules use ``min`` for AND, ``max`` for aggregation, and the crisp output is
the membership-weighted average of the output-set centers.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence


class FuzzyError(ValueError):
    """Raised for malformed partitions, rule tables or configs."""


class NoRuleFired(FuzzyError):
    """Raised when every rule strength is zero."""


@dataclass(frozen=True)
class TriangularSet:
    label: str
    center: float
    half_width: float

    def __post_init__(self):
        if not self.half_width > 0:
            raise FuzzyError(f"half_width must be positive, got {self.half_width!r}")


def triangular_membership(x: float, s: TriangularSet) -> float:
    return max(0.0, 1.0 - abs(x - s.center) / s.half_width)


@dataclass(frozen=True)
class Partition:
    universe_lo: float
    universe_hi: float
    sets: tuple[TriangularSet, ...]

    def __post_init__(self):
        sets = tuple(self.sets)
        object.__setattr__(self, "sets", sets)
        n = len(sets)
        if n < 2:
            raise FuzzyError("a partition needs at least two sets")
        if not self.universe_lo < self.universe_hi:
            raise FuzzyError("universe_lo must be below universe_hi")
        labels = [s.label for s in sets]
        if len(set(labels)) != n:
            raise FuzzyError(f"duplicate labels in partition: {labels}")
        spacing = (self.universe_hi - self.universe_lo) / (n - 1)
        tol = 1e-9 * max(1.0, abs(self.universe_lo), abs(self.universe_hi))
        for i, s in enumerate(sets):
            expected = self.universe_lo + i * spacing
            if abs(s.center - expected) > tol or abs(s.half_width - spacing) > tol:
                raise FuzzyError(
                    f"set {s.label!r} breaks the uniform 50%-overlap layout "
                    f"(center {s.center}, half_width {s.half_width})"
                )

    @property
    def labels(self) -> tuple[str, ...]:
        return tuple(s.label for s in self.sets)

    @property
    def centers(self) -> tuple[float, ...]:
        return tuple(s.center for s in self.sets)

    @property
    def spacing(self) -> float:
        return (self.universe_hi - self.universe_lo) / (len(self.sets) - 1)

    def index(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise FuzzyError(f"unknown label {label!r}") from None

    def center_of(self, label: str) -> float:
        return self.sets[self.index(label)].center


def make_uniform_partition(labels: Sequence[str], lo: float, hi: float) -> Partition:
    """Build a partition with evenly spaced centers from ``lo`` to ``hi``.

    Every half-width equals the center spacing, which gives the 50% overlap
    and the partition-of-unity property.
    """
    labels = list(labels)
    if len(labels) < 2:
        raise FuzzyError("need at least two labels")
    if not lo < hi:
        raise FuzzyError(f"need lo < hi, got lo={lo!r}, hi={hi!r}")
    n = len(labels)
    spacing = (hi - lo) / (n - 1)
    sets = []
    for i, label in enumerate(labels):
        # pin the last center to hi exactly
        center = hi if i == n - 1 else lo + i * spacing
        sets.append(TriangularSet(label, center, spacing))
    return Partition(lo, hi, tuple(sets))


def _bracket(x: float, p: Partition) -> tuple[int, float]:
    """Index of the left active set and the membership of the right one."""
    n = len(p.sets)
    x = min(max(x, p.universe_lo), p.universe_hi)
    pos = (x - p.universe_lo) / p.spacing
    i = min(int(math.floor(pos)), n - 2)
    frac = min(max(pos - i, 0.0), 1.0)
    return i, frac


def fuzzify(x: float, p: Partition) -> tuple[float, ...]:
    """Membership degree of ``x`` in each set of ``p``.

    Inputs outside the universe are clamped to the nearest bound.
    """
    i, frac = _bracket(x, p)
    degrees = [0.0] * len(p.sets)
    degrees[i] = 1.0 - frac
    degrees[i + 1] = frac
    return tuple(degrees)


def defuzzify_center_of_sets(strengths: Sequence[float], p: Partition) -> float:
    total = math.fsum(strengths)
    if total <= 0.0:
        raise NoRuleFired("no rule fired: all strengths are zero")
    return math.fsum(w * s.center for w, s in zip(strengths, p.sets)) / total


@dataclass(frozen=True)
class RuleTable:
    """Complete rule grid: ``entries[i][j]`` is the consequent for
    (``row_labels[i]``, ``col_labels[j]``)."""

    row_labels: tuple[str, ...]
    col_labels: tuple[str, ...]
    entries: tuple[tuple[str, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "row_labels", tuple(self.row_labels))
        object.__setattr__(self, "col_labels", tuple(self.col_labels))
        object.__setattr__(self, "entries", tuple(tuple(r) for r in self.entries))
        if len(self.entries) != len(self.row_labels):
            raise FuzzyError(
                f"rule table has {len(self.entries)} rows, expected {len(self.row_labels)}"
            )
        for label, row in zip(self.row_labels, self.entries):
            if len(row) != len(self.col_labels):
                raise FuzzyError(
                    f"rule row {label!r} has {len(row)} entries, expected {len(self.col_labels)}"
                )

    def consequent(self, row: str, col: str) -> str:
        return self.entries[self.row_labels.index(row)][self.col_labels.index(col)]


@dataclass(frozen=True)
class FisConfig:
    partition_in1: Partition
    partition_in2: Partition
    partition_out: Partition
    rules: RuleTable
    output_gain: float = 1.0

    def __post_init__(self):
        if not self.output_gain > 0:
            raise FuzzyError(f"output_gain must be positive, got {self.output_gain!r}")
        if self.rules.row_labels != self.partition_in1.labels:
            raise FuzzyError("rule rows do not match the first input partition")
        if self.rules.col_labels != self.partition_in2.labels:
            raise FuzzyError("rule columns do not match the second input partition")
        out_labels = set(self.partition_out.labels)
        for row in self.rules.entries:
            for label in row:
                if label not in out_labels:
                    raise FuzzyError(f"rule consequent {label!r} is not an output set")
        # resolved consequent indices, one per (row, col)
        lookup = tuple(
            tuple(self.partition_out.index(label) for label in row) for row in self.rules.entries
        )
        object.__setattr__(self, "_lookup", lookup)


def mamdani_evaluate(x1: float, x2: float, cfg: FisConfig) -> float:
    i, f1 = _bracket(x1, cfg.partition_in1)
    j, f2 = _bracket(x2, cfg.partition_in2)
    mu1 = ((i, 1.0 - f1), (i + 1, f1))
    mu2 = ((j, 1.0 - f2), (j + 1, f2))
    lookup = cfg._lookup
    agg = [0.0] * len(cfg.partition_out.sets)
    for r, a in mu1:
        if a <= 0.0:
            continue
        for c, b in mu2:
            w = min(a, b)
            k = lookup[r][c]
            if w > agg[k]:
                agg[k] = w
    return cfg.output_gain * defuzzify_center_of_sets(agg, cfg.partition_out)
