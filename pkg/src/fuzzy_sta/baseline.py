"""Comparison controllers: a first-order sliding-mode fuzzy controller and
a plain sign-switching SMC."""

from __future__ import annotations

from dataclasses import dataclass, field

from .fuzzy import Partition, defuzzify_center_of_sets, fuzzify, make_uniform_partition

SEVEN_LABELS = ("NB", "NM", "NS", "ZE", "PS", "PM", "PB")


def _default_partition() -> Partition:
    return make_uniform_partition(SEVEN_LABELS, -1.0, 1.0)


@dataclass(frozen=True)
class FosmflcConfig:
    """Single-input fuzzy SMC with seven sets and the rule ``set i -> set i``.

    ``s_scale`` maps the sliding variable onto the input universe [-1, 1].
    """

    c: float
    s_scale: float
    output_gain: float
    d0: float = 0.6
    u_min: float = 0.0
    u_max: float = 1.0
    partition_in: Partition = field(default_factory=_default_partition)
    partition_out: Partition = field(default_factory=_default_partition)

    def __post_init__(self):
        if len(self.partition_in.sets) != 7 or len(self.partition_out.sets) != 7:
            raise ValueError("FOSMFLC partitions must have exactly seven sets")
        if not (self.c > 0 and self.s_scale > 0 and self.output_gain > 0):
            raise ValueError("c, s_scale and output_gain must be positive")
        if not self.u_min < self.u_max:
            raise ValueError("u_min must be below u_max")


def fosmflc_correction(S: float, cfg: FosmflcConfig) -> float:
    """Unsaturated fuzzy correction added to the feedforward duty."""
    strengths = fuzzify(S / cfg.s_scale, cfg.partition_in)
    return cfg.output_gain * defuzzify_center_of_sets(strengths, cfg.partition_out)


def fosmflc_step(S: float, cfg: FosmflcConfig) -> float:
    raw = cfg.d0 + fosmflc_correction(S, cfg)
    return min(cfg.u_max, max(cfg.u_min, raw))


@dataclass(frozen=True)
class ClassicalSmcConfig:
    c: float
    gain: float
    d0: float = 0.6
    u_min: float = 0.0
    u_max: float = 1.0

    def __post_init__(self):
        if not (self.c > 0 and self.gain > 0):
            raise ValueError("c and gain must be positive")


def classical_smc_step(
    S: float, gain: float, d0: float = 0.6, u_min: float = 0.0, u_max: float = 1.0
) -> float:
    if not gain > 0:
        raise ValueError(f"gain must be positive, got {gain!r}")
    sgn = 1.0 if S > 0 else (-1.0 if S < 0 else 0.0)
    return min(u_max, max(u_min, d0 + gain * sgn))
