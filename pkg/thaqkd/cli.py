"""CLI entry point for the thaqkd tool."""

import argparse
import sys

from thaqkd.commands import (
    cmd_calibrate_shutter,
    cmd_fidelity,
    cmd_fig3,
    cmd_fig4,
    cmd_fig5,
    cmd_help,
    cmd_keyrate,
    cmd_optimize_thermal,
    cmd_selfcheck,
    cmd_separable,
    cmd_shutter,
)


def main(args: list[str] | None = None) -> int:
    """Main entry point for the thaqkd CLI.

    Args:
        args: Command-line arguments (defaults to sys.argv[1:])

    Returns:
        Exit code (0 success, 1 usage error, 2 invalid input, 3 numerical failure)
    """
    parser = argparse.ArgumentParser(
        prog="thaqkd",
        description="Trojan-horse side-channel analysis for BB84",
        add_help=False,
    )
    parser.add_argument("command", nargs="?", help="Command to run (see 'thaqkd help')")
    parser.add_argument(
        "command_args",
        nargs=argparse.REMAINDER,
        help="Flags for the command",
    )

    parsed, unknown = parser.parse_known_args(args)
    command = parsed.command
    # Everything after the command name is passed through in order
    command_args = parsed.command_args + unknown

    if command is None or command == "help":
        return cmd_help()
    elif command == "fidelity":
        return cmd_fidelity(command_args)
    elif command == "keyrate":
        return cmd_keyrate(command_args)
    elif command == "optimize-thermal":
        return cmd_optimize_thermal(command_args)
    elif command == "separable":
        return cmd_separable(command_args)
    elif command == "shutter":
        return cmd_shutter(command_args)
    elif command == "fig3":
        return cmd_fig3(command_args)
    elif command == "fig4":
        return cmd_fig4(command_args)
    elif command == "fig5":
        return cmd_fig5(command_args)
    elif command == "selfcheck":
        return cmd_selfcheck(command_args)
    elif command == "calibrate-shutter":
        return cmd_calibrate_shutter(command_args)
    else:
        print(f"Error: Unknown command '{command}'", file=sys.stderr)
        print("Run 'thaqkd help' for usage information", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
