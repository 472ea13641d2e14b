"""Subcommands; each module exposes NAME, HELP, add_arguments and handle."""

from app.cli.commands import asympt, cache, check, constants, figure, fit, genfun, oracle, table

COMMANDS = (genfun, oracle, check, fit, asympt, table, constants, figure, cache)

__all__ = ["COMMANDS"]
