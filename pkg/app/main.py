"""
Boundary-Entropy Toolkit

Command-line entry point. run() is the single place where exceptions turn
into exit codes: 0 success, 1 failed checks or computations, 2 usage
errors, 3 exceeded budgets.
"""

import sys
from collections.abc import Sequence

from pydantic import ValidationError

from app.cli import build_parser
from app.cli.deps import build_config
from app.core.config import settings
from app.core.errors import ToolkitError
from app.core.logging import setup_logging
from app.schemas.common import ErrorResponse

USAGE_EXIT = 2


def _validation_detail(exc: ValidationError) -> str:
    parts = []
    for error in exc.errors():
        field = ".".join(str(part) for part in error["loc"]) or "arguments"
        parts.append(f"{field}: {error['msg']}")
    return "; ".join(parts)


_ERROR_NAMES = {1: "failure", 2: "usage", 3: "budget"}


def _fail(detail: str, exit_code: int, as_json: bool) -> int:
    print(f"error: {detail}", file=sys.stderr)
    if as_json:
        error = _ERROR_NAMES.get(exit_code, "error")
        print(ErrorResponse(error=error, detail=detail, exit_code=exit_code).model_dump_json())
    return exit_code


def run(argv: Sequence[str] | None = None) -> int:
    """Parse arguments, dispatch, and map errors to exit codes."""
    args = build_parser().parse_args(argv)
    setup_logging(args.log_level or settings.log_level)
    as_json = args.format == "json"

    try:
        config = build_config(args)
    except ValidationError as exc:
        return _fail(_validation_detail(exc), USAGE_EXIT, as_json)

    try:
        return args.handler(config)
    except ToolkitError as exc:
        return _fail(exc.detail, exc.exit_code, as_json)
    except ValidationError as exc:
        return _fail(_validation_detail(exc), USAGE_EXIT, as_json)
    except OSError as exc:
        return _fail(f"I/O failure: {exc}", 1, as_json)


if __name__ == "__main__":
    sys.exit(run())
