"""
Command-line command implementations used by run.py.
"""

from .commands import (
    EXIT_PASS,
    EXIT_FAIL,
    EXIT_USAGE,
    COMMANDS,
    CommandResult,
    UsageError,
    parse_q,
    render,
    to_jsonable,
)
