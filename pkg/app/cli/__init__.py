"""
Command Line

One subcommand per module under app.cli.commands, sharing the output,
precision, cache and worker flags.
"""

import argparse

from app.cli.commands import COMMANDS
from app.core.config import settings


def _common_flags() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--bits", type=int, help=f"working precision (default {settings.precision_bits})")
    common.add_argument("--jobs", type=int, help="worker processes (default: hardware threads)")
    common.add_argument("--max-sites", type=int, help=f"largest L for ground-state solves (default {settings.max_sites})")
    common.add_argument("--cache-dir", help="generating function cache directory")
    common.add_argument("--no-cache", action="store_true", help="bypass the cache")
    common.add_argument("--format", choices=("txt", "json", "csv", "svg"))
    common.add_argument("--out", dest="output", help="write to a file instead of stdout")
    common.add_argument("--log-level", choices=("DEBUG", "INFO", "WARNING", "ERROR"))
    return common


def build_parser() -> argparse.ArgumentParser:
    """Top-level parser; the chosen command's handle() is stored as args.handler."""
    parser = argparse.ArgumentParser(
        prog="boundary-entropy",
        description="Exact generating functions and asymptotics of the boundary entropy of the loop model",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {settings.app_version}")
    subparsers = parser.add_subparsers(dest="command", required=True, metavar="command")
    common = _common_flags()
    for module in COMMANDS:
        sub = subparsers.add_parser(module.NAME, help=module.HELP, parents=[common])
        module.add_arguments(sub)
        sub.set_defaults(handler=module.handle)
    return parser


__all__ = ["build_parser"]
