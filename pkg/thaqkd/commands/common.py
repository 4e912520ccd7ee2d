"""Shared plumbing for the dataset commands.

Each command resolves a RunConfig, builds its table and writes it as CSV.
Failures are reported on stderr and mapped to exit codes.
"""

import sys
from collections.abc import Callable, Sequence
from dataclasses import dataclass, field

from thaqkd.errors import ConfigError, NumericalError
from thaqkd.runconfig import RunConfig, resolve_config
from thaqkd.utils.dataset import Cell, render_dataset, write_dataset

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INVALID = 2
EXIT_NUMERICAL = 3


@dataclass
class Table:
    """Columns and rows of one dataset, plus extra header notes."""

    columns: list[str]
    rows: list[Sequence[Cell]] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)
    exit_code: int = EXIT_OK


Builder = Callable[[RunConfig], Table]


def run_dataset(command: str, args: list[str], build: Builder) -> int:
    """Resolve the config, build the table and write it.

    Args:
        command: Command name recorded in the header
        args: Flags after the command name
        build: Produces the table from a resolved config

    Returns:
        0 on success, 2 for invalid input, 3 for a numerical failure, or the
        table's own exit code when the builder reports a failed check
    """
    try:
        cfg = resolve_config(args)
    except ConfigError as e:
        print(f"✗ Invalid configuration: {e}", file=sys.stderr)
        return EXIT_INVALID

    try:
        table = build(cfg)
    except NumericalError as e:
        print(f"✗ Numerical failure in {e.operation}: {e}", file=sys.stderr)
        return EXIT_NUMERICAL
    except ValueError as e:
        print(f"✗ Invalid input: {e}", file=sys.stderr)
        return EXIT_INVALID

    header = cfg.header_lines(command) + [f"# {note}" for note in table.notes]
    text = render_dataset(header, table.columns, table.rows)
    try:
        write_dataset(text, cfg.output)
    except OSError as e:
        print(f"✗ Cannot write {cfg.output}: {e}", file=sys.stderr)
        return EXIT_INVALID

    target = "stdout" if cfg.output == "-" else cfg.output
    status = "✓" if table.exit_code == EXIT_OK else "✗"
    print(f"{status} {command}: {len(table.rows)} rows written to {target}", file=sys.stderr)
    return table.exit_code
