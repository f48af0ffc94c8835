"""Command-line entry point: run scenarios, list the catalog, recompute metrics."""

from __future__ import annotations

import argparse
import logging
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from .harness import (
    CONTROLLERS,
    ConfigError,
    HarnessConfig,
    SimulationError,
    TraceIOError,
    compute_metrics,
    event_time,
    read_trace_csv,
    run_scenario,
    write_metrics_summary,
    write_trace_csv,
)

log = logging.getLogger("fuzzy_sta")


def _run_one(config_path, name, controller, out_dir):
    cfg = HarnessConfig.load(config_path)
    trace = run_scenario(cfg.scenario(name, controller))
    write_trace_csv(trace, Path(out_dir) / f"{name}__{controller}.csv")
    sim = cfg.sim
    m = compute_metrics(
        trace,
        cfg.vref,
        t_event=cfg.rejection_event_time(name),
        band_frac=float(sim["band_frac"]),
        tail_frac=float(sim["tail_frac"]),
        window=float(sim["chatter_window"]),
    )
    return name, controller, m


def cmd_run(args) -> int:
    cfg = HarnessConfig.load(args.config)
    names = cfg.scenario_names if args.scenario == "all" else [args.scenario]
    for name in names:
        cfg.scenario(name, args.controller)  # validates the name before any work
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    jobs = [(args.config, name, args.controller, str(out)) for name in names]
    if args.jobs > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            rows = list(pool.map(_run_one, *zip(*jobs)))
    else:
        rows = [_run_one(*job) for job in jobs]
    summary = write_metrics_summary(rows, out / f"metrics__{args.controller}.csv")
    for name, controller, m in rows:
        log.info("%s/%s: %s", name, controller, m)
    print(f"wrote {len(rows)} trace(s) and {summary}")
    return 0


def cmd_list(args) -> int:
    cfg = HarnessConfig.load(args.config)
    for name in cfg.scenario_names:
        print(f"{name:16s} {cfg.description(name)}")
    return 0


def cmd_metrics(args) -> int:
    trace = read_trace_csv(args.trace)
    t_event = args.t_event if args.t_event is not None else event_time(trace)
    m = compute_metrics(trace, args.vref, t_event=t_event, band_frac=args.band)
    for key, value in vars(m).items():
        print(f"{key}: {'' if value is None else format(value, '.9g')}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fuzzy-sta",
        description="Fuzzy-adaptive super-twisting SMC on an averaged buck converter.",
    )
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    run = sub.add_parser("run", help="simulate one scenario or the whole catalog")
    run.add_argument("--scenario", default="all", help="scenario name or 'all'")
    run.add_argument("--controller", choices=CONTROLLERS, default="proposed")
    run.add_argument("--config", default=None, help="YAML overrides for the default config")
    run.add_argument("--out", default="runs", help="output directory")
    run.add_argument("--jobs", type=int, default=1, help="parallel scenario workers")
    run.set_defaults(func=cmd_run)

    ls = sub.add_parser("list-scenarios", help="print the scenario catalog")
    ls.add_argument("--config", default=None)
    ls.set_defaults(func=cmd_list)

    met = sub.add_parser("metrics", help="recompute metrics from a trace CSV")
    met.add_argument("--trace", required=True)
    met.add_argument("--vref", type=float, default=12.0)
    met.add_argument("--band", type=float, default=0.05)
    met.add_argument("--t-event", type=float, default=None,
                     help="disturbance time; inferred from the vin/R columns if omitted")
    met.set_defaults(func=cmd_metrics)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        level=logging.INFO if args.verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
    )
    try:
        return args.func(args)
    except (ConfigError, SimulationError, TraceIOError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
