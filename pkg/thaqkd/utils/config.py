"""TOML defaults for thaqkd runs.

Two optional files are read and merged, the local one winning:

1. ~/.config/thaqkd.toml (per-user defaults)
2. ./thaqkd.toml (per-project defaults)

Only the ``[run]`` table is used by the CLI. String values may reference
environment variables as ${VAR_NAME}. The merged result is cached; tests
call clear_config_cache() or pass cache=False.
"""

import os
import re
import tomllib
from pathlib import Path
from typing import Any

CONFIG_NAME = "thaqkd.toml"
RUN_TABLE = "run"

_config_cache: dict[str, Any] | None = None


def expand_env_vars(value: str) -> str:
    """Replace ${VAR_NAME} with the variable's value, leaving unknown names alone.

    Examples:
        >>> os.environ["THAQKD_OUT"] = "fig3.csv"
        >>> expand_env_vars("results/${THAQKD_OUT}")
        'results/fig3.csv'
    """

    def replace_var(match: re.Match[str]) -> str:
        return os.environ.get(match.group(1), match.group(0))

    return re.sub(r"\$\{([A-Z_][A-Z0-9_]*)\}", replace_var, value)


def _expand_all(data: dict[str, Any]) -> dict[str, Any]:
    result: dict[str, Any] = {}
    for key, value in data.items():
        if isinstance(value, str):
            result[key] = expand_env_vars(value)
        elif isinstance(value, dict):
            result[key] = _expand_all(value)  # pyright: ignore[reportUnknownArgumentType]
        else:
            result[key] = value
    return result


def merge_tables(base: dict[str, Any], override: dict[str, Any]) -> dict[str, Any]:
    """Deep-merge two TOML documents, values from ``override`` winning.

    Examples:
        >>> merge_tables({"run": {"mu_D": 0.1, "L0_km": 25}}, {"run": {"mu_D": 0.2}})
        {'run': {'mu_D': 0.2, 'L0_km': 25}}
    """
    result = base.copy()
    for key, value in override.items():
        if key in result and isinstance(result[key], dict) and isinstance(value, dict):
            result[key] = merge_tables(result[key], value)  # pyright: ignore[reportUnknownArgumentType]
        else:
            result[key] = value
    return result


def load_toml_file(path: Path) -> dict[str, Any]:
    """Parse one TOML file.

    Raises:
        FileNotFoundError: If the file does not exist
        ValueError: If the file is not valid TOML
    """
    if not path.exists():
        raise FileNotFoundError(f"Config file not found: {path}")
    try:
        with open(path, "rb") as f:
            data: dict[str, Any] = tomllib.load(f)
    except tomllib.TOMLDecodeError as e:
        raise ValueError(f"Invalid TOML in {path}: {e}") from e
    return data


def find_config_files() -> tuple[Path | None, Path | None]:
    """Return (user_config, local_config); missing files are None."""
    user_config = Path.home() / ".config" / CONFIG_NAME
    local_config = Path(CONFIG_NAME)
    return (
        user_config if user_config.exists() else None,
        local_config if local_config.exists() else None,
    )


def clear_config_cache() -> None:
    """Forget the cached merge so the next load_config() rereads the files."""
    global _config_cache
    _config_cache = None


def load_config(expand_vars: bool = True, cache: bool = True) -> dict[str, Any]:
    """Merge the user and local TOML files.

    A broken or unreadable file is skipped rather than aborting the run;
    thaqkd still has its built-in defaults.
    """
    global _config_cache
    if cache and _config_cache is not None:
        return _config_cache

    merged: dict[str, Any] = {}
    for path in find_config_files():
        if path is None:
            continue
        try:
            merged = merge_tables(merged, load_toml_file(path))
        except FileNotFoundError, ValueError:
            pass

    if expand_vars:
        merged = _expand_all(merged)
    if cache:
        _config_cache = merged
    return merged


def run_defaults(cache: bool = True) -> dict[str, Any]:
    """The ``[run]`` table of the merged TOML files, or an empty dict."""
    table = load_config(cache=cache).get(RUN_TABLE, {})
    return dict(table) if isinstance(table, dict) else {}  # pyright: ignore[reportUnknownArgumentType]
