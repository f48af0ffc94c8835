"""Averaged DC-DC buck converter model, RK4 stepping and disturbance schedules.

State is ``(iL, vC)``: inductor current and capacitor (output) voltage.
Continuous conduction is assumed throughout, so ``iL`` may go negative.
A load of ``math.inf`` ohms models the open-circuit LC tank.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, NamedTuple, Optional, Sequence


@dataclass(frozen=True)
class BuckParams:
    vin_nominal: float = 20.0
    L: float = 100e-6
    C: float = 100e-6
    R_nominal: float = 10.0

    def __post_init__(self):
        for name in ("vin_nominal", "L", "C", "R_nominal"):
            if not getattr(self, name) > 0:
                raise ValueError(f"{name} must be positive, got {getattr(self, name)!r}")


class BuckState(NamedTuple):
    iL: float = 0.0
    vC: float = 0.0


def buck_derivatives(
    s: BuckState, duty: float, vin: float, R: float, params: BuckParams
) -> tuple[float, float]:
    if not R > 0:
        raise ValueError(f"load resistance must be positive, got {R!r}")
    diL = (duty * vin - s.vC) / params.L
    dvC = (s.iL - s.vC / R) / params.C
    return diL, dvC


def rk4_integrate(f: Callable, t: float, y: Sequence[float], dt: float) -> tuple[float, ...]:
    """One classic Runge-Kutta step of ``dy/dt = f(t, y)`` for tuple states."""
    if not dt > 0:
        raise ValueError(f"dt must be positive, got {dt!r}")
    h2 = dt / 2
    k1 = f(t, y)
    k2 = f(t + h2, tuple(a + h2 * b for a, b in zip(y, k1)))
    k3 = f(t + h2, tuple(a + h2 * b for a, b in zip(y, k2)))
    k4 = f(t + dt, tuple(a + dt * b for a, b in zip(y, k3)))
    return tuple(
        a + dt / 6 * (b1 + 2 * b2 + 2 * b3 + b4) for a, b1, b2, b3, b4 in zip(y, k1, k2, k3, k4)
    )


def rk4_step(
    s: BuckState, duty: float, vin: float, R: float, dt: float, params: BuckParams
) -> BuckState:
    """Advance the converter by ``dt`` with duty, input voltage and load held."""
    if not dt > 0:
        raise ValueError(f"dt must be positive, got {dt!r}")
    if not R > 0:
        raise ValueError(f"load resistance must be positive, got {R!r}")
    # unrolled: this runs once per control period
    L, C = params.L, params.C
    g = 0.0 if math.isinf(R) else 1.0 / R
    u = duty * vin
    h2 = dt / 2
    i0, v0 = s
    a1, b1 = (u - v0) / L, (i0 - v0 * g) / C
    i1, v1 = i0 + h2 * a1, v0 + h2 * b1
    a2, b2 = (u - v1) / L, (i1 - v1 * g) / C
    i2, v2 = i0 + h2 * a2, v0 + h2 * b2
    a3, b3 = (u - v2) / L, (i2 - v2 * g) / C
    i3, v3 = i0 + dt * a3, v0 + dt * b3
    a4, b4 = (u - v3) / L, (i3 - v3 * g) / C
    return BuckState(
        i0 + dt / 6 * (a1 + 2 * a2 + 2 * a3 + a4),
        v0 + dt / 6 * (b1 + 2 * b2 + 2 * b3 + b4),
    )


@dataclass(frozen=True)
class DisturbanceEvent:
    t: float
    new_vin: Optional[float] = None
    new_R: Optional[float] = None


@dataclass(frozen=True)
class DisturbanceSchedule:
    events: tuple[DisturbanceEvent, ...] = field(default_factory=tuple)

    def __post_init__(self):
        events = tuple(self.events)
        object.__setattr__(self, "events", events)
        last = -math.inf
        for ev in events:
            if ev.t < 0 or ev.t <= last:
                raise ValueError("event times must be nonnegative and strictly increasing")
            last = ev.t
            if ev.new_R is not None and not ev.new_R > 0:
                raise ValueError(f"event at t={ev.t} sets nonpositive load {ev.new_R!r}")

    @property
    def first_event_time(self) -> Optional[float]:
        return self.events[0].t if self.events else None


def disturbance_at(
    sched: DisturbanceSchedule, t: float, defaults: BuckParams
) -> tuple[float, float]:
    """Input voltage and load in force at time ``t`` (events at ``t`` apply)."""
    vin, R = defaults.vin_nominal, defaults.R_nominal
    for ev in sched.events:
        if ev.t > t:
            break
        if ev.new_vin is not None:
            vin = ev.new_vin
        if ev.new_R is not None:
            R = ev.new_R
    return vin, R
