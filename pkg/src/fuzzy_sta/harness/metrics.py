"""Step-response metrics computed from a trace."""

from __future__ import annotations

from dataclasses import dataclass, fields
from typing import Optional

import numpy as np

from .simulate import Trace


@dataclass(frozen=True)
class Metrics:
    settling_time_s: Optional[float]
    overshoot_pct: float
    steady_state_error_v: float
    rejection_time_s: Optional[float]
    chattering_index: float

    @classmethod
    def field_names(cls) -> tuple[str, ...]:
        return tuple(f.name for f in fields(cls))


def _last_outside(y: np.ndarray, ref: float, band_frac: float) -> Optional[int]:
    outside = np.nonzero(np.abs(y - ref) > band_frac * ref)[0]
    return int(outside[-1]) if outside.size else None


def settling_time(tr: Trace, band_frac: float, ref: float) -> Optional[float]:
    """Earliest time after which ``vC`` stays within ``band_frac * ref`` of ``ref``.

    Returns None when the last sample is still outside the band.
    """
    if not 0 < band_frac < 1:
        raise ValueError("band_frac must lie in (0, 1)")
    last = _last_outside(tr.vC, ref, band_frac)
    if last is None:
        return float(tr.t[0])
    if last == len(tr) - 1:
        return None
    return float(tr.t[last + 1])


def overshoot(tr: Trace, ref: float) -> float:
    if not ref > 0:
        raise ValueError("ref must be positive")
    return max(0.0, (float(np.max(tr.vC)) - ref) / ref * 100.0)


def steady_state_error(tr: Trace, ref: float, tail_frac: float = 0.1) -> float:
    if not 0 < tail_frac < 1:
        raise ValueError("tail_frac must lie in (0, 1)")
    n_tail = max(1, int(round(len(tr) * tail_frac)))
    return float(np.mean(ref - tr.vC[-n_tail:]))


def rejection_time(tr: Trace, t_event: float, band_frac: float, ref: float) -> Optional[float]:
    """Time from ``t_event`` until ``vC`` re-enters the band for good.

    Zero if the band is never left after the event, None if it is never
    regained before the trace ends.
    """
    if not tr.t[0] <= t_event <= tr.t[-1]:
        raise ValueError(f"t_event={t_event} lies outside the trace")
    k0 = int(np.searchsorted(tr.t, t_event - 1e-6 * tr.dt))
    last = _last_outside(tr.vC[k0:], ref, band_frac)
    if last is None:
        return 0.0
    if k0 + last == len(tr) - 1:
        return None
    return float(tr.t[k0 + last + 1] - tr.t[k0])


def chattering_index(tr: Trace, window: float = 0.2) -> float:
    """Total variation of the control over the final ``window`` of the trace."""
    if not 0 < window < 1:
        raise ValueError("window must lie in (0, 1)")
    start = int(len(tr) * (1.0 - window))
    return float(np.sum(np.abs(np.diff(tr.u[start:]))))


def event_time(tr: Trace) -> Optional[float]:
    """First time after the start at which the input voltage or load changes."""
    changed = np.nonzero((np.diff(tr.vin) != 0) | (np.diff(tr.R) != 0))[0]
    return float(tr.t[changed[0] + 1]) if changed.size else None


def compute_metrics(
    tr: Trace,
    ref: float,
    t_event: Optional[float] = None,
    band_frac: float = 0.05,
    tail_frac: float = 0.1,
    window: float = 0.2,
) -> Metrics:
    return Metrics(
        settling_time_s=settling_time(tr, band_frac, ref),
        overshoot_pct=overshoot(tr, ref),
        steady_state_error_v=steady_state_error(tr, ref, tail_frac),
        rejection_time_s=None if t_event is None else rejection_time(tr, t_event, band_frac, ref),
        chattering_index=chattering_index(tr, window),
    )
