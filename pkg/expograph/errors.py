#!/usr/bin/env python3
"""
Exception Hierarchy

Typed errors raised by the expograph library. The CLI maps each one to an exit code.
"""

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_BUDGET = 2
EXIT_MISMATCH = 3


class ExpoGraphError(Exception):
    """Base class for every library error."""
    exit_code = EXIT_USAGE


class InvalidVertexError(ExpoGraphError):
    """A vertex id is outside 0..n-1."""


class InvalidParameterError(ExpoGraphError):
    """A family or operation parameter is outside its legal range."""


class ExpressionParseError(ExpoGraphError):
    """A graph expression string could not be parsed."""


class EdgeListFormatError(ExpoGraphError):
    """An edge-list file is malformed or describes a non-simple graph."""


class DisconnectedGraphError(ExpoGraphError):
    """The operation needs a connected graph."""


class BudgetExceededError(ExpoGraphError):
    """Materialization or flow work would exceed the configured budget."""
    exit_code = EXIT_BUDGET


class SizeLimitExceededError(ExpoGraphError):
    """A brute-force or subset-DP limit was exceeded; callers should skip."""
    exit_code = EXIT_BUDGET


class PreconditionError(ExpoGraphError):
    """A constructor precondition failed. The message names the clause."""


class MalformedCertificateError(ExpoGraphError):
    """A certificate is structurally invalid (not merely failing its check)."""


class VerificationMismatchError(ExpoGraphError):
    """A closed-form value disagrees with the measured one."""
    exit_code = EXIT_MISMATCH

    def __init__(self, message: str, expected=None, measured=None):
        super().__init__(message)
        self.expected = expected
        self.measured = measured
