"""Domain errors raised by the certifiers."""

from __future__ import annotations

from typing import Any


class CertifyError(Exception):
    """Base class for every error the library raises on purpose."""


class UnboundedSimplexError(CertifyError):
    """A covector has a non-positive entry, so the simplex is unbounded."""


class NotSimpleError(CertifyError):
    """The polygon self-intersects or is degenerate."""


class PickMismatchError(CertifyError):
    """Pick's identity disagrees with brute-force counting."""


class MethodInapplicableError(CertifyError):
    def __init__(self, method: str, reason: str):
        super().__init__(f"{method} not applicable: {reason}")
        self.method = method
        self.reason = reason


class DegenerateNormalError(CertifyError):
    """The optimal supporting hyperplane lies on a coordinate face."""

    def __init__(self, mu: Any, normal: tuple):
        super().__init__(f"supporting normal {normal} has a zero entry")
        self.mu = mu
        self.normal = normal


class InconclusiveCertificateError(CertifyError):
    """This certificate route cannot establish the bound."""


class InconclusivePrecisionError(CertifyError):
    """An enclosure straddles the comparison target; retry with more digits."""


class NoneFoundError(CertifyError):
    def __init__(self, limit: int, report: Any = None):
        super().__init__(f"no passing dimension up to {limit}")
        self.limit = limit
        self.report = report


class NeverZeroError(CertifyError):
    """The volume curve is still positive at the right end of its domain."""


class ZeroMassError(CertifyError):
    """The profile integrates to zero."""


class BadRangeError(CertifyError):
    """Parameters outside 0 < eta <= tau."""


class DimensionMismatchError(CertifyError):
    """Vector length does not match the intersection form."""


class NoSolutionError(CertifyError):
    """No nonnegative integer satisfies the bound."""


class InfeasibleProgramError(CertifyError):
    """A linear program expected to be feasible is not."""
