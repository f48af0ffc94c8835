"""Loading the YAML harness configuration and building scenario configs."""

from __future__ import annotations

import copy
import os
from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import Any, Optional, Union

import yaml

from ..adaptation import AdaptationConfig
from ..baseline import ClassicalSmcConfig, FosmflcConfig
from ..buck import BuckParams, DisturbanceEvent, DisturbanceSchedule
from ..fuzzy import FisConfig, RuleTable, make_uniform_partition
from ..supertwisting import StGains
from .simulate import CONTROLLERS, ScenarioConfig


class ConfigError(ValueError):
    pass


def _default_text() -> str:
    return resources.files("fuzzy_sta").joinpath("data/default.yaml").read_text(encoding="utf-8")


def _merge(base: dict, override: dict) -> dict:
    out = copy.deepcopy(base)
    for key, value in override.items():
        if isinstance(value, dict) and isinstance(out.get(key), dict):
            out[key] = _merge(out[key], value)
        else:
            out[key] = copy.deepcopy(value)
    return out


def load_raw_config(path: Optional[Union[str, os.PathLike]] = None) -> dict:
    """Default configuration, overlaid with ``path`` when given."""
    raw = yaml.safe_load(_default_text())
    if path is None:
        return raw
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ConfigError(f"cannot read config {str(path)!r}: {exc}") from exc
    try:
        user = yaml.safe_load(text) or {}
    except yaml.YAMLError as exc:
        raise ConfigError(f"cannot parse config {str(path)!r}: {exc}") from exc
    if not isinstance(user, dict):
        raise ConfigError(f"config {str(path)!r} must be a mapping at the top level")
    return _merge(raw, user)


def _rule_rows(rows: Any) -> list[list[str]]:
    return [r.split() if isinstance(r, str) else list(r) for r in rows]


def build_fis(section: dict) -> FisConfig:
    labels = section["labels"]
    return FisConfig(
        partition_in1=make_uniform_partition(labels, *section["error_universe"]),
        partition_in2=make_uniform_partition(labels, *section["rv_universe"]),
        partition_out=make_uniform_partition(labels, *section["output_universe"]),
        rules=RuleTable(labels, labels, _rule_rows(section["rules"])),
        output_gain=float(section.get("output_gain", 1.0)),
    )


@dataclass(frozen=True)
class HarnessConfig:
    """Everything needed to instantiate any catalog scenario for any controller."""

    raw: dict

    @classmethod
    def load(cls, path: Optional[Union[str, os.PathLike]] = None) -> "HarnessConfig":
        cfg = cls(load_raw_config(path))
        # fail early on a bad file rather than mid-run
        try:
            cfg.plant
            cfg.st_gains
            cfg.adaptation
            cfg.fosmflc
            cfg.classical_smc
            for name in cfg.scenario_names:
                cfg.schedule(name)
        except (KeyError, TypeError, ValueError) as exc:
            raise ConfigError(f"invalid configuration: {exc!r}") from exc
        return cfg

    @property
    def sim(self) -> dict:
        return self.raw["simulation"]

    @property
    def vref(self) -> float:
        return float(self.sim["vref"])

    @property
    def plant(self) -> BuckParams:
        p = self.raw["plant"]
        return BuckParams(
            vin_nominal=float(p["vin_nominal"]),
            L=float(p["L"]),
            C=float(p["C"]),
            R_nominal=float(p["R_nominal"]),
        )

    @property
    def actuator(self) -> tuple[float, float, float]:
        a = self.raw["actuator"]
        d0 = a.get("d0")
        if d0 is None:
            d0 = self.vref / self.plant.vin_nominal
        return float(a["u_min"]), float(a["u_max"]), float(d0)

    @property
    def st_gains(self) -> StGains:
        p = self.raw["proposed"]
        u_min, u_max, d0 = self.actuator
        return StGains(
            K1=float(p["K1"]),
            K2=float(p["K2"]),
            c=float(p["c"]),
            direction=int(p.get("direction", 1)),
            u_min=u_min,
            u_max=u_max,
            d0=d0,
        )

    @property
    def adaptation(self) -> AdaptationConfig:
        a = self.raw["adaptation"]
        scale = a.get("e_norm_scale")
        return AdaptationConfig(
            fis=build_fis(a["fis"]),
            e_norm_scale=abs(self.vref) if scale is None else float(scale),
            kc_min=float(a["kc_min"]),
            kc_max=float(a["kc_max"]),
        )

    @property
    def fosmflc(self) -> FosmflcConfig:
        f = self.raw["fosmflc"]
        u_min, u_max, d0 = self.actuator
        return FosmflcConfig(
            c=float(f["c"]),
            s_scale=float(f["s_scale"]),
            output_gain=float(f["output_gain"]),
            d0=d0,
            u_min=u_min,
            u_max=u_max,
            partition_in=make_uniform_partition(f["labels"], *f["input_universe"]),
            partition_out=make_uniform_partition(f["labels"], *f["output_universe"]),
        )

    @property
    def classical_smc(self) -> ClassicalSmcConfig:
        s = self.raw["classical_smc"]
        u_min, u_max, d0 = self.actuator
        return ClassicalSmcConfig(
            c=float(s["c"]), gain=float(s["gain"]), d0=d0, u_min=u_min, u_max=u_max
        )

    @property
    def scenario_names(self) -> list[str]:
        return list(self.raw["scenarios"])

    def description(self, name: str) -> str:
        return self._scenario(name).get("description", "")

    def _scenario(self, name: str) -> dict:
        try:
            return self.raw["scenarios"][name]
        except KeyError:
            raise ConfigError(
                f"unknown scenario {name!r}; available: {', '.join(self.scenario_names)}"
            ) from None

    def schedule(self, name: str) -> DisturbanceSchedule:
        steady = float(self.raw["steady_state_event_time"])
        events = []
        for ev in self._scenario(name).get("events") or []:
            t = steady if ev["t"] == "steady" else float(ev["t"])
            vin = ev.get("vin")
            R = ev.get("R")
            events.append(
                DisturbanceEvent(
                    t=t,
                    new_vin=None if vin is None else float(vin),
                    new_R=None if R is None else float(R),
                )
            )
        return DisturbanceSchedule(tuple(events))

    def rejection_event_time(self, name: str) -> Optional[float]:
        """Time of the first disturbance after start-up, if any."""
        t0 = self.schedule(name).first_event_time
        return t0 if t0 is not None and t0 > 0 else None

    def scenario(self, name: str, controller: str) -> ScenarioConfig:
        if controller not in CONTROLLERS:
            raise ConfigError(f"unknown controller {controller!r}; expected one of {CONTROLLERS}")
        sc = self._scenario(name)
        sim = self.sim
        gains = {
            "proposed": lambda: self.st_gains,
            "fosmflc": lambda: self.fosmflc,
            "classical_smc": lambda: self.classical_smc,
        }[controller]()
        return ScenarioConfig(
            name=name,
            controller=controller,
            gains=gains,
            vref=self.vref,
            duration=float(sc.get("duration", sim["duration"])),
            dt=float(sim["dt"]),
            plant=self.plant,
            disturbances=self.schedule(name),
            adaptation=self.adaptation if controller == "proposed" else None,
            edot_filter_tau=float(sim["edot_filter_tau"]),
        )
