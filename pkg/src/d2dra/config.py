"""Scenario, training, and evaluation configuration.

`SystemConfig` holds every physical-scenario constant; `TrainConfig` the
optimizer/loss knobs plus network sizes; `EvalConfig` the report options.
A `RunConfig` groups the three and round-trips losslessly through a flat
sectioned ``key = value`` text format so experiment configs are archivable.
"""

import dataclasses
import math
import typing
from configparser import ConfigParser
from dataclasses import dataclass, field

from .errors import ConfigError

# 23 dBm shared maximum transmit power, in watts.
P_MAX_DEFAULT_W = 0.2

# Default 8-level grid: zero plus seven equal steps up to the maximum.
POWER_LEVELS_DEFAULT_W = (
    0.0, 0.02857, 0.05714, 0.08571, 0.11428, 0.14285, 0.17142, 0.2,
)


def uniform_power_grid(p_max_watts: float, n_levels: int) -> tuple[float, ...]:
    """Evenly spaced power grid from 0 to p_max inclusive."""
    if n_levels < 2:
        raise ConfigError("power grid needs at least 2 levels")
    return tuple(p_max_watts * j / (n_levels - 1) for j in range(n_levels))


@dataclass(frozen=True)
class SystemConfig:
    """One D2D-underlay scenario: sizes, powers, noise, geometry, seed."""

    n_tps: int = 3                 # D2D transmit pairs
    n_channels: int = 3            # uplink channels, one CUE each
    n_power_levels: int = 8
    power_levels: tuple[float, ...] = POWER_LEVELS_DEFAULT_W   # watts, ascending, [0 .. p_max]
    p_max_watts: float = P_MAX_DEFAULT_W
    p_cue_watts: float = P_MAX_DEFAULT_W   # CUE transmit power (not specified separately; equals p_max)
    bandwidth_hz: float = 1e7
    noise_psd_w_per_hz: float = 10.0 ** -20.3   # -173 dBm/Hz
    se_threshold: float = 1.0      # CUE QoS floor, b/s/Hz
    bf_bits: int = 12              # per-TP feedback payload
    bb_bits: int = 24              # broadcast payload
    area_side_m: float = 100.0
    pair_max_dist_m: float = 30.0
    pl_coeff_log10: float = 3.453
    pl_exponent: float = 3.8
    p_cir_watts: float = 0.5       # circuit power for the energy-efficiency objective
    master_seed: int = 1

    @property
    def noise_power_w(self) -> float:
        return self.noise_psd_w_per_hz * self.bandwidth_hz

    @property
    def n_nodes(self) -> int:
        """Rows/columns of the gain tensor: BS/CUE slot plus the TPs."""
        return self.n_tps + 1

    def validate(self) -> "SystemConfig":
        if self.n_tps < 1 or self.n_channels < 1:
            raise ConfigError("n_tps and n_channels must be >= 1")
        if self.n_power_levels < 2:
            raise ConfigError("n_power_levels must be >= 2")
        if self.bf_bits < 1 or self.bb_bits < 1:
            raise ConfigError("bf_bits and bb_bits must be >= 1")
        lv = self.power_levels
        if len(lv) != self.n_power_levels:
            raise ConfigError("power_levels length must equal n_power_levels")
        if lv[0] != 0.0:
            raise ConfigError("power_levels must start at 0")
        if any(b <= a for a, b in zip(lv, lv[1:])):
            raise ConfigError("power_levels must be strictly ascending")
        if lv[-1] != self.p_max_watts:
            raise ConfigError("power_levels must end at p_max_watts")
        if self.noise_power_w <= 0:
            raise ConfigError("noise power N0*W must be positive")
        if self.p_cue_watts < 0:
            raise ConfigError("p_cue_watts must be non-negative")
        if self.area_side_m <= 0 or self.pair_max_dist_m < 0:
            raise ConfigError("bad geometry: area_side_m > 0, pair_max_dist_m >= 0")
        return self


@dataclass(frozen=True)
class TrainConfig:
    """Two-phase training setup: supervised warm start, then objective tuning."""

    mode: str = "centralized"      # centralized | distributed
    objective: str = "sum-se"      # sum-se | sum-ee
    zeta_ct: float = 0.01          # fraction of the dataset labeled for the supervised phase
    lr_ct: float = 1e-3
    lr_ft: float = 3e-6
    epochs_ct: int = 0
    epochs_ft: int = 0
    batch_size: int = 256
    bin_exponent: float = 2.0      # exponent of the |x - 0.5| push-to-binary penalty
    ct_bin_weight: float = 1.0     # penalty weight on power/channel probabilities (supervised phase)
    ct_bits_weight: float = 1.0    # penalty weight on feedback/broadcast sigmoids (supervised phase)
    qos_weight: float = 10.0       # weight of the CUE-rate shortfall hinge
    ft_bin_weight: float = 1.0     # penalty weight on power/channel probabilities (tuning phase)
    ft_bits_weight: float = 1.0    # penalty weight on feedback/broadcast sigmoids (tuning phase)
    qos_delta: float = 1e-6        # keeps the hinge normalizer positive at threshold 0
    seed: int = 0
    centralized_units: int = 16
    centralized_width: int = 400
    distributed_units: int = 8
    distributed_width: int = 150
    dropout_rate: float = 0.05

    def validate(self) -> "TrainConfig":
        if self.mode not in ("centralized", "distributed"):
            raise ConfigError(f"unknown train mode {self.mode!r}")
        if self.objective not in ("sum-se", "sum-ee"):
            raise ConfigError(f"unknown objective {self.objective!r}")
        if not 0.0 <= self.zeta_ct <= 1.0:
            raise ConfigError("zeta_ct must be in [0, 1]")
        if self.lr_ct <= 0 or self.lr_ft <= 0:
            raise ConfigError("learning rates must be positive")
        if self.epochs_ct < 0 or self.epochs_ft < 0:
            raise ConfigError("epoch counts must be non-negative")
        if self.batch_size < 2:
            raise ConfigError("batch_size must be >= 2 (batch normalization)")
        if self.bin_exponent <= 0:
            raise ConfigError("bin_exponent must be positive")
        for name in ("ct_bin_weight", "ct_bits_weight", "qos_weight",
                     "ft_bin_weight", "ft_bits_weight"):
            if getattr(self, name) < 0:
                raise ConfigError(f"{name} must be non-negative")
        if self.qos_delta <= 0:
            raise ConfigError("qos_delta must be positive")
        if min(self.centralized_units, self.distributed_units) < 1:
            raise ConfigError("module unit counts must be >= 1")
        if min(self.centralized_width, self.distributed_width) < 1:
            raise ConfigError("module widths must be >= 1")
        if not 0.0 <= self.dropout_rate < 1.0:
            raise ConfigError("dropout_rate must be in [0, 1)")
        return self


@dataclass(frozen=True)
class EvalConfig:
    """Evaluation-report options."""

    schemes: tuple[str, ...] = ("oracle", "centralized", "random")
    max_samples: int = 0           # 0 = evaluate the whole file
    figures: bool = True

    def validate(self) -> "EvalConfig":
        from .evaluation import KNOWN_SCHEMES
        for s in self.schemes:
            if s not in KNOWN_SCHEMES:
                raise ConfigError(f"unknown scheme {s!r}")
        if self.max_samples < 0:
            raise ConfigError("max_samples must be >= 0")
        return self


@dataclass(frozen=True)
class RunConfig:
    system: SystemConfig = field(default_factory=SystemConfig)
    train: TrainConfig = field(default_factory=TrainConfig)
    eval: EvalConfig = field(default_factory=EvalConfig)

    def validate(self) -> "RunConfig":
        self.system.validate()
        self.train.validate()
        self.eval.validate()
        return self


_SECTIONS = {"system": SystemConfig, "train": TrainConfig, "eval": EvalConfig}


def _format_value(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, float):
        return repr(v)
    if isinstance(v, tuple):
        return ", ".join(_format_value(x) for x in v)
    return str(v)


def _parse_value(text: str, ftype):
    text = text.strip()
    if ftype is int:
        return int(text)
    if ftype is float:
        return float(text)
    if ftype is bool:
        low = text.lower()
        if low in ("true", "1", "yes", "on"):
            return True
        if low in ("false", "0", "no", "off"):
            return False
        raise ConfigError(f"not a boolean: {text!r}")
    if ftype is str:
        return text
    origin = typing.get_origin(ftype)
    if origin is tuple:
        (item_type, _ellipsis) = typing.get_args(ftype)
        if not text:
            return ()
        return tuple(_parse_value(part, item_type) for part in text.split(","))
    raise ConfigError(f"unsupported config field type {ftype!r}")


def format_config(cfg: RunConfig) -> str:
    """Canonical text form; `parse_config(format_config(c)) == c`."""
    lines = []
    for sec_name in _SECTIONS:
        obj = getattr(cfg, sec_name)
        lines.append(f"[{sec_name}]")
        for f in dataclasses.fields(obj):
            lines.append(f"{f.name} = {_format_value(getattr(obj, f.name))}")
        lines.append("")
    return "\n".join(lines)


def parse_config(text: str, base: RunConfig | None = None) -> RunConfig:
    """Parse sectioned `key = value` text. Unknown sections/keys are rejected.

    Keys omitted from the text keep their value from `base` (defaults when
    `base` is None), so partial override files are valid.
    """
    base = base if base is not None else RunConfig()
    cp = ConfigParser(delimiters=("=",), interpolation=None)
    cp.optionxform = str
    try:
        cp.read_string(text)
    except Exception as exc:
        raise ConfigError(f"cannot parse config: {exc}") from exc

    parts = {}
    for sec_name, cls in _SECTIONS.items():
        obj = getattr(base, sec_name)
        if not cp.has_section(sec_name):
            parts[sec_name] = obj
            continue
        fields = {f.name: f for f in dataclasses.fields(cls)}
        updates = {}
        for key, raw in cp.items(sec_name):
            if key not in fields:
                raise ConfigError(f"unknown key [{sec_name}] {key}")
            try:
                updates[key] = _parse_value(raw, fields[key].type)
            except (ValueError, ConfigError) as exc:
                raise ConfigError(f"bad value for [{sec_name}] {key}: {exc}") from exc
        parts[sec_name] = dataclasses.replace(obj, **updates)
    for sec in cp.sections():
        if sec not in _SECTIONS:
            raise ConfigError(f"unknown config section [{sec}]")
    return RunConfig(**parts).validate()


def apply_overrides(cfg: RunConfig, assignments: list[str]) -> RunConfig:
    """Apply `section.key=value` strings on top of a parsed config."""
    updates: dict[str, dict[str, object]] = {}
    for item in assignments:
        if "=" not in item or "." not in item.split("=", 1)[0]:
            raise ConfigError(f"override must look like section.key=value: {item!r}")
        target, raw = item.split("=", 1)
        sec_name, key = target.strip().split(".", 1)
        cls = _SECTIONS.get(sec_name)
        if cls is None:
            raise ConfigError(f"unknown config section [{sec_name}]")
        fields = {f.name: f for f in dataclasses.fields(cls)}
        if key not in fields:
            raise ConfigError(f"unknown key [{sec_name}] {key}")
        try:
            updates.setdefault(sec_name, {})[key] = _parse_value(raw, fields[key].type)
        except (ValueError, ConfigError) as exc:
            raise ConfigError(f"bad value for [{sec_name}] {key}: {exc}") from exc
    parts = {
        sec: dataclasses.replace(getattr(cfg, sec), **updates.get(sec, {}))
        for sec in _SECTIONS
    }
    return RunConfig(**parts).validate()
