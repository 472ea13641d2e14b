"""cache: inspect or empty the generating function cache."""

import argparse

from app.cli.commands.table import write_table
from app.memory.genfun_cache import GenFunCache
from app.schemas.run import RunConfig
from app.schemas.table import Table

NAME = "cache"
HELP = "show cache statistics or remove every entry"

ACTIONS = ("stats", "clear")


def add_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("action", choices=ACTIONS)


def handle(config: RunConfig) -> int:
    cache = GenFunCache(config.cache_dir)
    if config.action == "clear":
        table = Table(name="cache", columns=["root", "removed"], rows=[[str(cache.root), str(cache.clear())]])
    else:
        stats = cache.get_statistics()
        table = Table(
            name="cache",
            columns=["root", "entries", "bytes"],
            rows=[[str(cache.root), str(stats["entries"]), str(stats["bytes"])]],
        )
    write_table(table, config)
    return 0
