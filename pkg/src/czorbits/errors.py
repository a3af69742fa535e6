"""Exception hierarchy shared by the library and the CLI.

Each error class carries the process exit code the CLI maps it to.
"""


class CliffordError(Exception):
    """Base class for all errors raised by this package."""

    exit_code = 1


class VerificationError(CliffordError):
    """A structural self-check failed (counts, isomorphism, round-trip)."""

    exit_code = 1


class InputFormatError(CliffordError):
    """Malformed matrix text, corrupt table file, or missing table."""

    exit_code = 3


class NotInGroupError(CliffordError):
    """A well-formed matrix that is not an element of the group."""

    exit_code = 4
