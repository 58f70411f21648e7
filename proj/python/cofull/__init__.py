"""Exact fullness and local cohomology workbench over finite prime fields."""

import json as _json

try:
    from ._cofull import (
        InternalError,
        ParseError,
        PreconditionError,
        parse_check,
        run_session,
        set_cache_dir,
        version,
    )
except ImportError:  # extension on sys.path rather than inside the package
    from _cofull import (
        InternalError,
        ParseError,
        PreconditionError,
        parse_check,
        run_session,
        set_cache_dir,
        version,
    )

__all__ = [
    "InternalError",
    "ParseError",
    "PreconditionError",
    "parse_check",
    "run",
    "run_session",
    "set_cache_dir",
    "version",
]


def run(text, e_max=1, threads=0, cache_dir=""):
    """Run a session and return one decoded JSON report per command."""
    return [_json.loads(r) for r in run_session(text, e_max, threads, cache_dir)]
