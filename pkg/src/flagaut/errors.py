"""Exception types shared by every module."""

from __future__ import annotations


class DomainError(ValueError):
    """A mathematically invalid request.

    ``code`` is a short stable identifier such as ``"not-a-parabolic"`` or
    ``"no-very-special-isogeny"``; ``details`` carries structured context
    (witness roots, offending kernels, ...) for callers and the CLI.
    """

    def __init__(self, code: str, message: str = "", **details):
        self.code = code
        self.details = details
        super().__init__(f"{code}: {message}" if message else code)
