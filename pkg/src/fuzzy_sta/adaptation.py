"""Online slope adaptation: normalized acceleration and the coefficient factor.

The error history yields the first and second differences of the tracking
error. Their ratio, the normalized acceleration ``r_v``, says whether the
response is speeding up (``r_v > 0``) or slowing down (``r_v < 0``) while
being independent of the response's time constant. A nine-by-nine fuzzy
rule table maps ``(|e|, r_v)`` to the factor ``k_c`` that rescales the
sliding-surface slope.
"""

from __future__ import annotations

from dataclasses import dataclass

from .fuzzy import FisConfig, RuleTable, make_uniform_partition, mamdani_evaluate

LABELS = ("VVS", "VS", "S", "MS", "M", "ML", "L", "VL", "VVL")

# rows: |e| label, columns: r_v label
KC_RULES = (
    ("VVL", "S", "VS", "VS", "VS", "VS", "VS", "VVS", "VVS"),
    ("VL", "S", "VS", "VS", "VS", "VS", "VS", "VS", "VVS"),
    ("L", "MS", "VS", "VS", "VS", "VS", "VS", "VS", "VS"),
    ("L", "MS", "S", "VS", "VS", "VS", "VS", "VS", "VS"),
    ("L", "MS", "S", "S", "VS", "VS", "VS", "VS", "VS"),
    ("L", "M", "S", "S", "S", "S", "S", "S", "S"),
    ("VL", "M", "S", "S", "S", "S", "S", "S", "S"),
    ("VL", "M", "MS", "S", "S", "S", "S", "S", "S"),
    ("VVL", "ML", "M", "MS", "MS", "MS", "MS", "MS", "MS"),
)


def default_kc_fis(
    output_gain: float = 1.0,
    error_universe: tuple[float, float] = (0.0, 1.0),
    rv_universe: tuple[float, float] = (-1.0, 1.0),
    kc_universe: tuple[float, float] = (0.2, 1.8),
) -> FisConfig:
    """The ``k_c`` fuzzy system with its default universes."""
    return FisConfig(
        partition_in1=make_uniform_partition(LABELS, *error_universe),
        partition_in2=make_uniform_partition(LABELS, *rv_universe),
        partition_out=make_uniform_partition(LABELS, *kc_universe),
        rules=RuleTable(LABELS, LABELS, KC_RULES),
        output_gain=output_gain,
    )


@dataclass
class ErrorHistory:
    e_prev: float = 0.0
    de_prev: float = 0.0
    samples_seen: int = 0

    @property
    def warm(self) -> bool:
        return self.samples_seen >= 3


def push_error(e_k: float, h: ErrorHistory) -> tuple[float, float, bool]:
    """Record ``e_k`` and return ``(de_k, dde_k, warm)``.

    ``de_k = e_k - e_{k-1}`` and ``dde_k = de_k - de_{k-1}``. Both are
    reported as zero until three samples have been seen.
    """
    de_k = e_k - h.e_prev if h.samples_seen >= 1 else 0.0
    dde_k = de_k - h.de_prev if h.samples_seen >= 2 else 0.0
    h.e_prev = e_k
    h.de_prev = de_k
    h.samples_seen += 1
    if h.samples_seen < 3:
        return 0.0, 0.0, False
    return de_k, dde_k, True


def normalized_acceleration(de_k: float, de_km1: float) -> float:
    """Second difference over the larger-magnitude first difference.

    Clamped to [-1, 1]; a flat response (both differences zero) gives 0.
    """
    denom = de_k if abs(de_k) >= abs(de_km1) else de_km1
    if denom == 0.0:
        return 0.0
    r_v = (de_k - de_km1) / denom
    return min(1.0, max(-1.0, r_v))


@dataclass(frozen=True)
class AdaptationConfig:
    fis: FisConfig
    e_norm_scale: float = 12.0
    kc_min: float = 0.2
    kc_max: float = 1.8

    def __post_init__(self):
        if not self.e_norm_scale > 0:
            raise ValueError(f"e_norm_scale must be positive, got {self.e_norm_scale!r}")
        if not 0 < self.kc_min <= 1 <= self.kc_max:
            raise ValueError(
                f"need 0 < kc_min <= 1 <= kc_max, got {self.kc_min!r}, {self.kc_max!r}"
            )


def coefficient_factor(e_k: float, r_v: float, cfg: AdaptationConfig) -> float:
    e_n = min(abs(e_k) / cfg.e_norm_scale, 1.0)
    k_c = mamdani_evaluate(e_n, r_v, cfg.fis)
    return min(cfg.kc_max, max(cfg.kc_min, k_c))
