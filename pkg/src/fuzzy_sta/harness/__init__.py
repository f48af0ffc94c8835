from .config import ConfigError, HarnessConfig, load_raw_config
from .metrics import (
    Metrics,
    chattering_index,
    compute_metrics,
    event_time,
    overshoot,
    rejection_time,
    settling_time,
    steady_state_error,
)
from .simulate import COLUMNS, CONTROLLERS, ScenarioConfig, SimulationError, Trace, run_scenario
from .traceio import TraceIOError, read_trace_csv, write_metrics_summary, write_trace_csv

__all__ = [
    "COLUMNS",
    "CONTROLLERS",
    "ConfigError",
    "HarnessConfig",
    "Metrics",
    "ScenarioConfig",
    "SimulationError",
    "Trace",
    "TraceIOError",
    "chattering_index",
    "compute_metrics",
    "event_time",
    "load_raw_config",
    "overshoot",
    "read_trace_csv",
    "rejection_time",
    "run_scenario",
    "settling_time",
    "steady_state_error",
    "write_metrics_summary",
    "write_trace_csv",
]
