"""Run configuration shared by every analysis command.

Values are layered, later sources winning:

1. RunConfig defaults
2. the ``[run]`` table of ~/.config/thaqkd.toml and ./thaqkd.toml
3. a ``key=value`` file given with ``--config FILE``
4. ``--key value`` or ``--key=value`` flags
"""

from collections.abc import Callable, Mapping
from dataclasses import dataclass, fields, replace
from pathlib import Path
from typing import Any

from thaqkd import __version__
from thaqkd.attack.config import AttackConfig
from thaqkd.errors import ConfigError
from thaqkd.keyrate.detectors import DetectorKind
from thaqkd.shutter.defense import ShutterConfig
from thaqkd.utils.config import run_defaults
from thaqkd.utils.dataset import format_cell

LIGHT_SPEED_KM_PER_US = 0.299792458


@dataclass(frozen=True)
class RunConfig:
    """Every parameter a command may read.

    Distances are in km and times in microseconds unless the name says
    otherwise. Shutter times are in units of the shutter period.
    """

    mu_D: float = 0.1
    L0_km: float = 25.0
    L_Q_km: float = LIGHT_SPEED_KM_PER_US * 10
    tau_us: tuple[float, ...] = (2.0, 5.0, 10.0)
    light_speed_km_per_us: float = LIGHT_SPEED_KM_PER_US
    L_km: float = 0.0
    L_max_km: float = 1.0
    L_points: int = 201
    eta: float = 1e-7
    N: float = 1e6
    p: float = 0.0
    phi: float = 0.0
    mu_T: float = 0.0
    detector: DetectorKind = "bucket"
    mu_points: int = 100
    mu_max: float = 1.0
    t_S: float = 0.1
    t_P: float = 1.0
    t_L: float = 0.9
    eta_R: float = 0.5
    shutter_N: float = 1e6
    delta: float = 0.01
    R_max: int = 10_000
    epsilon: float = 0.0
    t_L_points: int = 1000
    oracle_states: int = 50
    cutoff: int = 30
    rng_seed: int = 20240611
    output: str = "-"

    def attack(self) -> AttackConfig:
        """Attack parameters for the Gaussian commands."""
        return AttackConfig(N=self.N, p=self.p, phi=self.phi, eta=self.eta, mu_T=self.mu_T)

    def shutter(self) -> ShutterConfig:
        """Shutter parameters for the shutter commands."""
        return ShutterConfig(
            t_S=self.t_S,
            t_P=self.t_P,
            t_L=self.t_L,
            eta_R=self.eta_R,
            N=self.shutter_N,
            delta=self.delta,
            R_max=self.R_max,
            eps=self.epsilon,
        )

    def dephasing_lengths(self) -> list[tuple[float, float]]:
        """(tau, c tau) for each memory lifetime label."""
        return [(tau, self.light_speed_km_per_us * tau) for tau in self.tau_us]

    def header_lines(self, command: str) -> list[str]:
        """Comment lines recording version, command and every resolved value."""
        lines = [f"# thaqkd {__version__}", f"# command: {command}"]
        for f in fields(self):
            lines.append(f"# {f.name}={format_value(getattr(self, f.name))}")
        lines.append(f"# seed: {self.rng_seed}")
        return lines


def format_value(value: object) -> str:
    """Render a config value the way it would be written in a config file.

    Examples:
        >>> format_value(0.1)
        '0.1'
        >>> format_value((2.0, 5.0, 10.0))
        '2,5,10'
    """
    if isinstance(value, tuple):
        return ",".join(format_value(v) for v in value)  # pyright: ignore[reportUnknownVariableType]
    if isinstance(value, float | int | str):
        return format_cell(value)
    return str(value)


def _to_float(raw: object) -> float:
    if isinstance(raw, bool):
        raise ValueError("expected a number")
    if isinstance(raw, int | float):
        return float(raw)
    return float(str(raw).strip())


def _to_int(raw: object) -> int:
    if isinstance(raw, bool):
        raise ValueError("expected an integer")
    if isinstance(raw, int):
        return raw
    if isinstance(raw, float):
        if not raw.is_integer():
            raise ValueError(f"expected an integer, got {raw}")
        return int(raw)
    text = str(raw).strip()
    value = float(text)
    if not value.is_integer():
        raise ValueError(f"expected an integer, got {text}")
    return int(value)


def _to_floats(raw: object) -> tuple[float, ...]:
    if isinstance(raw, list | tuple):
        items: list[object] = list(raw)  # pyright: ignore[reportUnknownArgumentType]
    else:
        items = list(str(raw).split(","))
    values = tuple(_to_float(item) for item in items if str(item).strip())
    if not values:
        raise ValueError("expected at least one value")
    return values


def _to_str(raw: object) -> str:
    return str(raw).strip()


def _positive(v: Any) -> bool:
    return v > 0


def _non_negative(v: Any) -> bool:
    return v >= 0


def _unit(v: Any) -> bool:
    return 0 <= v <= 1


@dataclass(frozen=True)
class _Key:
    parse: Callable[[object], Any]
    check: Callable[[Any], bool]
    requirement: str


_KEYS: dict[str, _Key] = {
    "mu_D": _Key(_to_float, _non_negative, "must be >= 0"),
    "L0_km": _Key(_to_float, _positive, "must be > 0"),
    "L_Q_km": _Key(_to_float, _positive, "must be > 0"),
    "tau_us": _Key(_to_floats, lambda v: all(t > 0 for t in v), "must all be > 0"),
    "light_speed_km_per_us": _Key(_to_float, _positive, "must be > 0"),
    "L_km": _Key(_to_float, _non_negative, "must be >= 0"),
    "L_max_km": _Key(_to_float, _positive, "must be > 0"),
    "L_points": _Key(_to_int, lambda v: v >= 2, "must be >= 2"),
    "eta": _Key(_to_float, lambda v: 0 < v <= 1, "must be in (0, 1]"),
    "N": _Key(_to_float, _non_negative, "must be >= 0"),
    "p": _Key(_to_float, _unit, "must be in [0, 1]"),
    "phi": _Key(_to_float, lambda _: True, ""),
    "mu_T": _Key(_to_float, _non_negative, "must be >= 0"),
    "detector": _Key(_to_str, lambda v: v in ("bucket", "pnrd"), "must be bucket or pnrd"),
    "mu_points": _Key(_to_int, lambda v: v >= 1, "must be >= 1"),
    "mu_max": _Key(_to_float, lambda v: 0 < v <= 2, "must be in (0, 2]"),
    "t_S": _Key(_to_float, _positive, "must be > 0"),
    "t_P": _Key(_to_float, _positive, "must be > 0"),
    "t_L": _Key(_to_float, _positive, "must be > 0"),
    "eta_R": _Key(_to_float, lambda v: 0 < v < 1, "must be in (0, 1)"),
    "shutter_N": _Key(_to_float, _non_negative, "must be >= 0"),
    "delta": _Key(_to_float, _non_negative, "must be >= 0"),
    "R_max": _Key(_to_int, lambda v: v >= 1, "must be >= 1"),
    "epsilon": _Key(_to_float, _unit, "must be in [0, 1]"),
    "t_L_points": _Key(_to_int, lambda v: v >= 1, "must be >= 1"),
    "oracle_states": _Key(_to_int, lambda v: v >= 1, "must be >= 1"),
    "cutoff": _Key(_to_int, lambda v: v >= 1, "must be >= 1"),
    "rng_seed": _Key(_to_int, _non_negative, "must be >= 0"),
    "output": _Key(_to_str, lambda v: v != "", "must not be empty"),
}


def convert_value(key: str, raw: object, line: int | None = None) -> Any:
    """Parse and range-check one value.

    Raises:
        ConfigError: For an unknown key, an unparsable value or one out of range
    """
    entry = _KEYS.get(key)
    if entry is None:
        raise ConfigError(f"unknown key '{key}'", key=key, line=line)
    try:
        value = entry.parse(raw)
    except (TypeError, ValueError) as e:
        raise ConfigError(f"invalid value for '{key}': {raw!r} ({e})", key=key, line=line) from e
    if not entry.check(value):
        raise ConfigError(f"'{key}' {entry.requirement}, got {raw!r}", key=key, line=line)
    return value


def parse_lines(text: str) -> dict[str, Any]:
    """Read ``key=value`` lines into converted values.

    Blank lines and lines starting with # are skipped; a trailing
    ``# comment`` after a value is dropped as well.

    Raises:
        ConfigError: With the 1-based line number of the offending line
    """
    values: dict[str, Any] = {}
    for number, raw_line in enumerate(text.splitlines(), start=1):
        line = raw_line.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"expected key=value, got {raw_line.strip()!r}", line=number)
        key, raw = (part.strip() for part in line.split("=", 1))
        values[key] = convert_value(key, raw, line=number)
    return values


def build_config(overrides: Mapping[str, Any], base: RunConfig | None = None) -> RunConfig:
    """Apply already converted overrides and check cross-field constraints.

    Raises:
        ConfigError: If the combination is inconsistent
    """
    cfg = replace(base or RunConfig(), **overrides)
    if cfg.t_S >= cfg.t_P:
        raise ConfigError(f"'t_S' must be smaller than t_P={cfg.t_P}, got {cfg.t_S}", key="t_S")
    return cfg


def parse_config(text: str, base: RunConfig | None = None) -> RunConfig:
    """Parse a ``key=value`` config file on top of ``base`` (defaults if None).

    Examples:
        >>> parse_config("mu_D=0.2").mu_D
        0.2

    Raises:
        ConfigError: For unknown keys or out-of-range values, with line numbers
    """
    return build_config(parse_lines(text), base)


def split_flags(args: list[str]) -> tuple[str | None, dict[str, str]]:
    """Separate ``--config FILE`` from ``--key value`` and ``--key=value`` flags.

    Dashes in flag names map to underscores, so ``--L-max-km`` sets L_max_km.

    Raises:
        ConfigError: For a positional argument or a flag without a value
    """
    config_path: str | None = None
    flags: dict[str, str] = {}
    i = 0
    while i < len(args):
        arg = args[i]
        if not arg.startswith("--") or len(arg) == 2:
            raise ConfigError(f"unexpected argument '{arg}'")
        name, has_value, value = arg[2:].partition("=")
        if not has_value:
            if i + 1 >= len(args):
                raise ConfigError(f"flag '{arg}' needs a value", key=name)
            value = args[i + 1]
            i += 1
        i += 1
        if name == "config":
            config_path = value
        else:
            flags[name.replace("-", "_")] = value
    return config_path, flags


def resolve_config(args: list[str], use_toml: bool = True) -> RunConfig:
    """Layer defaults, TOML, the --config file and flags into one RunConfig.

    Raises:
        ConfigError: For any invalid source; file errors name the path
    """
    config_path, flags = split_flags(args)

    cfg = RunConfig()
    if use_toml:
        table = run_defaults()
        cfg = build_config({key: convert_value(key, raw) for key, raw in table.items()}, cfg)

    if config_path is not None:
        path = Path(config_path)
        try:
            text = path.read_text(encoding="utf-8")
        except OSError as e:
            raise ConfigError(f"cannot read config file {path}: {e}") from e
        try:
            cfg = parse_config(text, cfg)
        except ConfigError as e:
            raise ConfigError(f"{path}: {e}", key=e.key) from e

    return build_config({key: convert_value(key, raw) for key, raw in flags.items()}, cfg)
