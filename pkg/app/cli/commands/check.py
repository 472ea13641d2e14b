"""check: exact verification suites."""

import argparse
import logging
from collections import Counter

from app.cli.deps import open_sink
from app.core.errors import CheckFailure
from app.schemas.run import RunConfig
from app.services.checks import SCOPES, run_checks

logger = logging.getLogger(__name__)

NAME = "check"
HELP = "run the exact check suites"


def add_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("scope", nargs="?", choices=(*SCOPES, "all"), default="all")
    parser.add_argument("--strict-conjectures", action="store_true", default=None)


def handle(config: RunConfig) -> int:
    summary = run_checks(config.scope, config.max_sites)
    with open_sink(config) as sink:
        if config.format == "json":
            sink.write(summary.model_dump_json(indent=2) + "\n")
        else:
            totals = Counter(o.suite for o in summary.outcomes)
            passed = Counter(o.suite for o in summary.outcomes if o.passed)
            for outcome in summary.outcomes:
                if not outcome.passed:
                    sink.write(
                        f"FAIL [{outcome.status}] {outcome.suite}: {outcome.name}"
                        f" expected {outcome.expected}, got {outcome.actual}\n"
                    )
            for suite, total in totals.items():
                sink.write(f"{suite}: {passed[suite]}/{total} passed\n")

    if not summary.passed(config.strict_conjectures):
        failures = len(summary.required_failures)
        if config.strict_conjectures:
            failures += len(summary.conjecture_failures)
        raise CheckFailure(f"{failures} check(s) failed")
    if summary.conjecture_failures:
        logger.warning("conjectured identities failed count=%d", len(summary.conjecture_failures))
    return 0
