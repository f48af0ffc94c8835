import math

import numpy as np
import pytest

from fuzzy_sta.harness import (
    Trace,
    chattering_index,
    compute_metrics,
    event_time,
    overshoot,
    rejection_time,
    settling_time,
    steady_state_error,
)


def make_trace(vC, dt=1e-6, u=None, vin=None, R=None):
    vC = np.asarray(vC, dtype=float)
    n = len(vC)
    z = np.zeros(n)
    return Trace(
        t=np.arange(n) * dt,
        vC=vC,
        iL=z,
        e=12.0 - vC,
        edot=z,
        S=z,
        u=z if u is None else np.asarray(u, dtype=float),
        k_c=np.ones(n),
        r_v=z,
        vin=np.full(n, 20.0) if vin is None else np.asarray(vin, dtype=float),
        R=np.full(n, 10.0) if R is None else np.asarray(R, dtype=float),
    )


def test_settling_time_exponential():
    dt, tau = 1e-6, 1e-3
    t = np.arange(10001) * dt
    tr = make_trace(12.0 * (1 - np.exp(-t / tau)), dt)
    assert settling_time(tr, 0.05, 12.0) == pytest.approx(tau * math.log(20), abs=dt)


def test_settling_time_already_settled():
    assert settling_time(make_trace(np.full(200, 12.0)), 0.05, 12.0) == 0.0


def test_settling_time_diverging():
    assert settling_time(make_trace(np.linspace(0, 30, 200)), 0.05, 12.0) is None


def test_settling_time_validates_band():
    with pytest.raises(ValueError):
        settling_time(make_trace(np.full(10, 12.0)), 1.0, 12.0)


def test_overshoot():
    assert overshoot(make_trace(np.linspace(0, 12, 100)), 12.0) == 0.0
    assert overshoot(make_trace([0, 13.02, 12]), 12.0) == pytest.approx(8.5)
    assert overshoot(make_trace([0, 12.33, 12]), 12.0) == pytest.approx(2.75)
    with pytest.raises(ValueError):
        overshoot(make_trace([0, 1]), 0.0)


def test_steady_state_error():
    assert steady_state_error(make_trace(np.full(100, 12.0)), 12.0, 0.1) == 0.0
    vC = np.r_[np.linspace(0, 11.4, 90), np.full(10, 11.4)]
    assert steady_state_error(make_trace(vC), 12.0, 0.1) == pytest.approx(0.6)


def test_rejection_time_cases():
    dt = 1e-5
    n = 1001
    t = np.arange(n) * dt
    base = np.full(n, 12.0)
    assert rejection_time(make_trace(base, dt), 5e-3, 0.05, 12.0) == 0.0

    dip = base.copy()
    out = (t >= 5e-3) & (t < 5e-3 + 1.2e-3)
    dip[out] = 11.0
    assert rejection_time(make_trace(dip, dt), 5e-3, 0.05, 12.0) == pytest.approx(1.2e-3, abs=dt / 2)

    stuck = base.copy()
    stuck[t >= 5e-3] = 11.0
    assert rejection_time(make_trace(stuck, dt), 5e-3, 0.05, 12.0) is None

    with pytest.raises(ValueError):
        rejection_time(make_trace(base, dt), 1.0, 0.05, 12.0)


def test_chattering_index():
    n = 1000
    assert chattering_index(make_trace(np.zeros(n), u=np.full(n, 0.6)), 0.2) == 0.0
    toggle = np.tile([0.0, 1.0], n // 2)
    # 200 samples in the window give 199 unit jumps
    assert chattering_index(make_trace(np.zeros(n), u=toggle), 0.2) == pytest.approx(199)
    ramp = np.linspace(0.2, 0.7, n)
    w = ramp[int(n * 0.8):]
    assert chattering_index(make_trace(np.zeros(n), u=ramp), 0.2) == pytest.approx(w[-1] - w[0])


def test_event_time_detection():
    n = 100
    vin = np.full(n, 20.0)
    vin[40:] = 22.0
    tr = make_trace(np.full(n, 12.0), dt=1e-6, vin=vin)
    assert event_time(tr) == pytest.approx(40e-6)
    assert event_time(make_trace(np.full(n, 12.0))) is None


def test_metric_sanity_bounds():
    dt = 1e-6
    t = np.arange(5001) * dt
    vC = 12.0 - 12.0 * np.exp(-t / 2e-4) * np.cos(3e4 * t)
    vC = np.minimum(vC, 12.0)
    m = compute_metrics(make_trace(vC, dt), 12.0, t_event=2e-3)
    assert m.overshoot_pct == 0.0
    assert m.settling_time_s <= t[-1]
    assert m.rejection_time_s <= t[-1] - 2e-3
