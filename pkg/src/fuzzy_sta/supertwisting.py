"""Super-twisting sliding-mode control law in discrete time.

The surface is linear, ``S = edot + c_eff * e``. The law adds a square-root
proportional term and an integrated half-sign term to a feedforward duty::

    z   <- z + direction * K2 * phi2(S) * dt
    raw  = d0 + direction * K1 * phi1(S) + z
    u    = clamp(raw, u_min, u_max)

``direction = -1`` reproduces the textbook minus signs; the buck loop with
``e = r - y`` needs ``+1`` because raising the duty lowers ``S``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass


def _sign(x: float) -> float:
    if x > 0.0:
        return 1.0
    if x < 0.0:
        return -1.0
    return 0.0


@dataclass(frozen=True)
class StGains:
    K1: float
    K2: float
    c: float
    direction: int = 1
    u_min: float = 0.0
    u_max: float = 1.0
    d0: float = 0.6

    def __post_init__(self):
        # a zero K1 or K2 switches that path off
        if not (self.K1 >= 0 and self.K2 >= 0 and self.c > 0):
            raise ValueError(f"gains must be nonnegative and c positive: K1={self.K1}, K2={self.K2}, c={self.c}")
        if self.direction not in (1, -1):
            raise ValueError(f"direction must be +1 or -1, got {self.direction!r}")
        if not self.u_min < self.u_max:
            raise ValueError("u_min must be below u_max")
        if not self.u_min <= self.d0 <= self.u_max:
            raise ValueError(f"d0={self.d0} outside [{self.u_min}, {self.u_max}]")


@dataclass
class StState:
    """Mutable per-loop state: the integral accumulator and saturation memory."""

    z: float = 0.0
    e_prev: float = 0.0
    initialized: bool = False
    saturated: int = 0  # +1 high, -1 low, 0 inside bounds on the last step


def effective_slope(c: float, k_c: float) -> float:
    if not (c > 0 and k_c > 0):
        raise ValueError(f"slope and factor must be positive, got c={c!r}, k_c={k_c!r}")
    return k_c * c


def sliding_surface(e: float, edot: float, c_eff: float) -> float:
    return edot + c_eff * e


def st_correction_terms(S: float) -> tuple[float, float]:
    sgn = _sign(S)
    return math.sqrt(abs(S)) * sgn, 0.5 * sgn


def st_step(S: float, dt: float, gains: StGains, state: StState) -> float:
    """Advance the integral term by one period and return the saturated duty.

    The integrator is frozen whenever the previous output sat on a bound and
    the update would push further into it. ``|z|`` is additionally capped at
    the actuator span.
    """
    if not dt > 0:
        raise ValueError(f"dt must be positive, got {dt!r}")
    phi1, phi2 = st_correction_terms(S)
    dz = gains.direction * gains.K2 * phi2 * dt
    winding = (state.saturated > 0 and dz > 0) or (state.saturated < 0 and dz < 0)
    if not winding:
        span = gains.u_max - gains.u_min
        state.z = min(span, max(-span, state.z + dz))
    raw = gains.d0 + gains.direction * gains.K1 * phi1 + state.z
    if raw > gains.u_max:
        state.saturated = 1
        u = gains.u_max
    elif raw < gains.u_min:
        state.saturated = -1
        u = gains.u_min
    else:
        state.saturated = 0
        u = raw
    state.initialized = True
    return u
