"""CSV serialization of traces and metric summaries."""

from __future__ import annotations

import csv
import io
import os
from pathlib import Path
from typing import Iterable, Optional, Union

import numpy as np

from .metrics import Metrics
from .simulate import COLUMNS, Trace

PathLike = Union[str, os.PathLike]
SUMMARY_COLUMNS = ("scenario", "controller") + Metrics.field_names()


class TraceIOError(OSError):
    pass


def _fmt(x: float) -> str:
    return format(float(x), ".9g")


def trace_to_csv_text(tr: Trace) -> str:
    cols = [tr.columns()[name] for name in COLUMNS]
    lines = [",".join(COLUMNS)]
    for row in zip(*cols):
        lines.append(",".join(_fmt(v) for v in row))
    return "\n".join(lines) + "\n"


def write_trace_csv(tr: Trace, destination: PathLike) -> Path:
    if not str(destination):
        raise TraceIOError("cannot write trace: empty destination path ''")
    path = Path(destination)
    try:
        with open(path, "w", newline="", encoding="ascii") as fh:
            fh.write(trace_to_csv_text(tr))
    except OSError as exc:
        raise TraceIOError(f"cannot write trace to {str(path)!r}: {exc}") from exc
    return path


def read_trace_csv(source: PathLike) -> Trace:
    path = Path(source)
    try:
        text = path.read_text(encoding="ascii")
    except OSError as exc:
        raise TraceIOError(f"cannot read trace {str(path)!r}: {exc}") from exc
    reader = csv.reader(io.StringIO(text))
    header = next(reader, None)
    if header is None or tuple(header) != COLUMNS:
        raise TraceIOError(f"{str(path)!r} is not a trace file (header {header!r})")
    try:
        data = np.array([[float(v) for v in row] for row in reader if row], dtype=float)
    except ValueError as exc:
        raise TraceIOError(f"malformed number in {str(path)!r}: {exc}") from exc
    if data.ndim != 2 or data.shape[0] < 2:
        raise TraceIOError(f"{str(path)!r} holds fewer than two samples")
    return Trace(*data.T)


def _cell(value: Optional[float]) -> str:
    return "" if value is None else _fmt(value)


def write_metrics_summary(
    rows: Iterable[tuple[str, str, Metrics]], destination: PathLike
) -> Path:
    """One line per (scenario, controller); absent metrics are empty cells."""
    path = Path(destination)
    lines = [",".join(SUMMARY_COLUMNS)]
    for scenario, controller, m in rows:
        values = [getattr(m, name) for name in Metrics.field_names()]
        lines.append(",".join([scenario, controller] + [_cell(v) for v in values]))
    try:
        path.write_text("\n".join(lines) + "\n", encoding="ascii")
    except OSError as exc:
        raise TraceIOError(f"cannot write metrics summary to {str(path)!r}: {exc}") from exc
    return path
