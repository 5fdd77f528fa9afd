"""Exception types shared across the package."""

from __future__ import annotations

from typing import Any


class GuardError(RuntimeError):
    """A desk-scale size guard was exceeded."""


class Falsification(AssertionError):
    """A theorem check failed; ``payload`` carries the serialized counterexample."""

    def __init__(self, message: str, payload: Any = None):
        super().__init__(message)
        self.payload = payload
