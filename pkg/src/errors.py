from typing import List, Optional


class BelyiLabError(Exception):
    """Base class for every error raised by belyi-lab"""


class InvalidArgumentError(BelyiLabError, ValueError):
    """Precondition violated by the caller"""


class ConfigError(InvalidArgumentError):
    """Configuration file with unknown keys, wrong types or invalid values"""


class BudgetExceededError(BelyiLabError):
    """A walk enumeration went beyond the configured node cap.

    Args:
        cap: Configured maximum number of walk nodes
        reached: Number of nodes visited when the search stopped
    """

    def __init__(self, cap: int, reached: int, what: str = "walk enumeration"):
        self.cap = cap
        self.reached = reached
        self.what = what
        super().__init__(f"{what} exceeded budget: {reached} > {cap}")


class InternalError(BelyiLabError):
    """An identity that holds for every valid input failed (corrupted data)"""


class InconsistentDescriptorError(InvalidArgumentError):
    """EndsDescriptor whose fields contradict each other"""


class NotAdmissibleError(BelyiLabError):
    """Descriptor violating one of the IRS admissibility properties"""

    def __init__(self, violations: List[str], message: Optional[str] = None):
        self.violations = list(violations)
        super().__init__(message or f"descriptor not admissible: {', '.join(self.violations)}")


class AmbiguousDescriptorError(BelyiLabError):
    """Descriptor outside the classification table"""
