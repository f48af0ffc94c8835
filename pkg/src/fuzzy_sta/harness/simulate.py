"""Closed-loop scenario runner."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional, Union

import numpy as np

from ..adaptation import (
    AdaptationConfig,
    ErrorHistory,
    coefficient_factor,
    normalized_acceleration,
    push_error,
)
from ..baseline import ClassicalSmcConfig, FosmflcConfig, classical_smc_step, fosmflc_step
from ..buck import BuckParams, BuckState, DisturbanceSchedule, disturbance_at, rk4_step
from ..supertwisting import StGains, StState, effective_slope, sliding_surface, st_step

CONTROLLERS = ("proposed", "fosmflc", "classical_smc")
COLUMNS = ("t", "vC", "iL", "e", "edot", "S", "u", "k_c", "r_v", "vin", "R")


class SimulationError(RuntimeError):
    def __init__(self, step: int, message: str):
        super().__init__(f"step {step}: {message}")
        self.step = step


@dataclass(frozen=True)
class ScenarioConfig:
    name: str
    controller: str
    gains: Union[StGains, FosmflcConfig, ClassicalSmcConfig]
    vref: float = 12.0
    duration: float = 10e-3
    dt: float = 1e-6
    plant: BuckParams = field(default_factory=BuckParams)
    disturbances: DisturbanceSchedule = field(default_factory=DisturbanceSchedule)
    adaptation: Optional[AdaptationConfig] = None
    edot_filter_tau: float = 1e-5

    def __post_init__(self):
        if self.controller not in CONTROLLERS:
            raise ValueError(f"unknown controller {self.controller!r}; expected one of {CONTROLLERS}")
        expected = {
            "proposed": StGains,
            "fosmflc": FosmflcConfig,
            "classical_smc": ClassicalSmcConfig,
        }[self.controller]
        if not isinstance(self.gains, expected):
            raise TypeError(f"{self.controller} needs {expected.__name__} gains")
        if self.controller == "proposed" and self.adaptation is None:
            raise ValueError("the proposed controller needs an adaptation config")
        if not self.dt > 0:
            raise ValueError("dt must be positive")
        if self.n_samples < 101:
            raise ValueError("duration must cover at least 100 steps")
        if not self.vref > 0:
            raise ValueError("vref must be positive")
        if not self.edot_filter_tau >= 0:
            raise ValueError("edot_filter_tau must be nonnegative")

    @property
    def n_samples(self) -> int:
        # the tiny offset absorbs rounding in duration/dt
        return int(math.floor(self.duration / self.dt + 1e-9)) + 1


@dataclass
class Trace:
    """Uniformly sampled closed-loop record, one numpy array per column."""

    t: np.ndarray
    vC: np.ndarray
    iL: np.ndarray
    e: np.ndarray
    edot: np.ndarray
    S: np.ndarray
    u: np.ndarray
    k_c: np.ndarray
    r_v: np.ndarray
    vin: np.ndarray
    R: np.ndarray

    def __len__(self) -> int:
        return len(self.t)

    @property
    def dt(self) -> float:
        return float(self.t[1] - self.t[0])

    def columns(self) -> dict[str, np.ndarray]:
        return {name: getattr(self, name) for name in COLUMNS}

    def equals(self, other: "Trace") -> bool:
        return all(np.array_equal(a, b) for a, b in zip(self.columns().values(), other.columns().values()))


def run_scenario(cfg: ScenarioConfig) -> Trace:
    """Simulate one scenario; identical configs give identical traces."""
    n = cfg.n_samples
    dt = cfg.dt
    rec = np.zeros((len(COLUMNS), n))
    alpha = dt / (cfg.edot_filter_tau + dt)
    gains = cfg.gains
    plant = cfg.plant

    state = BuckState(0.0, 0.0)
    st = StState()
    hist = ErrorHistory()
    edot_f = 0.0

    for k in range(n):
        t = k * dt
        # the offset keeps an event at t = k*dt from slipping a step to rounding
        vin, R = disturbance_at(cfg.disturbances, t + 1e-6 * dt, plant)
        vC = state.vC
        e = cfg.vref - vC
        if st.initialized:
            edot_f += alpha * ((e - st.e_prev) / dt - edot_f)
        st.e_prev = e
        st.initialized = True

        k_c = 1.0
        r_v = 0.0
        if cfg.controller == "proposed":
            de_k, dde_k, warm = push_error(e, hist)
            if warm:
                r_v = normalized_acceleration(de_k, de_k - dde_k)
                k_c = coefficient_factor(e, r_v, cfg.adaptation)
            S = sliding_surface(e, edot_f, effective_slope(gains.c, k_c))
            u = st_step(S, dt, gains, st)
        elif cfg.controller == "fosmflc":
            S = sliding_surface(e, edot_f, gains.c)
            u = fosmflc_step(S, gains)
        else:
            S = sliding_surface(e, edot_f, gains.c)
            u = classical_smc_step(S, gains.gain, gains.d0, gains.u_min, gains.u_max)

        rec[:, k] = (t, vC, state.iL, e, edot_f, S, u, k_c, r_v, vin, R)
        if k == n - 1:
            break
        state = rk4_step(state, u, vin, R, dt, plant)
        if not (math.isfinite(state.iL) and math.isfinite(state.vC)):
            raise SimulationError(k, f"non-finite plant state {tuple(state)} in {cfg.name!r}")

    return Trace(*rec)
