"""Lightweight operation registry used by the verification coverage check."""

from __future__ import annotations

import contextvars
import functools

_active: contextvars.ContextVar = contextvars.ContextVar("whittaker_touched", default=None)

OPERATIONS: dict[str, str] = {}


def op(name: str, module: str):
    """Register a public operation; record calls while a tracker is active."""

    def deco(fn):
        OPERATIONS[name] = module

        @functools.wraps(fn)
        def wrapper(*args, **kwargs):
            touched = _active.get()
            if touched is not None:
                touched.add(name)
            return fn(*args, **kwargs)

        wrapper.op_name = name
        return wrapper

    return deco


class track:
    """Context manager collecting the names of operations called inside it."""

    def __enter__(self):
        self.touched: set[str] = set()
        self._token = _active.set(self.touched)
        return self.touched

    def __exit__(self, *exc):
        _active.reset(self._token)
        return False
