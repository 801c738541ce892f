"""Exact calculus for tautological classes on Jacobians."""

import json

from ._tautcalc import (
    ParseError,
    __version__,
    check_w,
    d_op,
    degeneration_check,
    normalize,
    pullback_verify,
    run,
)

__all__ = [
    "ParseError",
    "__version__",
    "check_w",
    "d_op",
    "degeneration_check",
    "normalize",
    "pullback_verify",
    "report",
    "run",
]


def report(*args):
    """Run a command and return (exit_code, parsed JSON report or None)."""
    code, out, _ = run(list(args))
    return code, (json.loads(out) if code != 2 else None)
