"""Command implementations for the thaqkd CLI."""

from thaqkd.commands.calibrate_shutter import cmd_calibrate_shutter
from thaqkd.commands.fidelity import cmd_fidelity
from thaqkd.commands.fig3 import cmd_fig3
from thaqkd.commands.fig4 import cmd_fig4
from thaqkd.commands.fig5 import cmd_fig5
from thaqkd.commands.help import cmd_help
from thaqkd.commands.keyrate import cmd_keyrate
from thaqkd.commands.optimize_thermal import cmd_optimize_thermal
from thaqkd.commands.selfcheck import cmd_selfcheck
from thaqkd.commands.separable import cmd_separable
from thaqkd.commands.shutter import cmd_shutter

__all__ = [
    "cmd_calibrate_shutter",
    "cmd_fidelity",
    "cmd_fig3",
    "cmd_fig4",
    "cmd_fig5",
    "cmd_help",
    "cmd_keyrate",
    "cmd_optimize_thermal",
    "cmd_selfcheck",
    "cmd_separable",
    "cmd_shutter",
]
