"""Exception types shared across the package.

Each carries a short machine-readable ``code`` so the CLI can emit
stable error payloads.
"""


class ToricError(Exception):
    code = "ERROR"


class InputError(ToricError, ValueError):
    """A caller-supplied value violates a documented precondition."""

    code = "BAD_INPUT"


class FailedSpanError(ToricError):
    """A root's translation set does not span a hyperplane (box too small)."""

    code = "FAILED_SPAN"


class VerifyMismatchError(ToricError):
    """An internal cross-check failed: a computed object does not reproduce its input."""

    code = "VERIFY_MISMATCH"
