"""Utility modules for thaqkd."""

from thaqkd.utils.config import (
    clear_config_cache,
    expand_env_vars,
    find_config_files,
    load_config,
    load_toml_file,
    merge_tables,
    run_defaults,
)
from thaqkd.utils.dataset import format_cell, render_dataset, write_dataset
from thaqkd.utils.search import gss, maximize_on_grid, minimize_on_grid

__all__ = [
    # TOML defaults
    "clear_config_cache",
    "expand_env_vars",
    "find_config_files",
    "load_config",
    "load_toml_file",
    "merge_tables",
    "run_defaults",
    # CSV output
    "format_cell",
    "render_dataset",
    "write_dataset",
    # Searches
    "gss",
    "maximize_on_grid",
    "minimize_on_grid",
]
