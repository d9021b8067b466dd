"""Shared size guards.  ``relaxed()`` lifts every guard for its duration."""

from __future__ import annotations

from contextlib import contextmanager
from contextvars import ContextVar

from .errors import SizeGuardError

_relaxed: ContextVar[bool] = ContextVar("relaxed", default=False)


def guard(estimate: int, limit: int, message: str) -> None:
    if estimate > limit and not _relaxed.get():
        raise SizeGuardError(message, estimate=estimate, limit=limit)


def is_relaxed() -> bool:
    return _relaxed.get()


@contextmanager
def relaxed():
    token = _relaxed.set(True)
    try:
        yield
    finally:
        _relaxed.reset(token)
