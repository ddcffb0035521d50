"""
Domain errors raised by the services.

Routers translate these into HTTPException, the CLI into exit statuses.
"""

from typing import List, Optional, Tuple


class IdealGraphError(Exception):
    """Base class for every error raised by the idealgraph services."""


class OutOfRange(IdealGraphError, ValueError):
    pass


class NotAModule(IdealGraphError, ValueError):
    def __init__(self, m: int, n: int):
        super().__init__(f"Z_{n} is not a Z_{m}-module: {n} does not divide {m}")
        self.m = m
        self.n = n


class UnknownVertex(IdealGraphError, KeyError):
    def __init__(self, labels):
        super().__init__(f"Unknown vertex labels: {sorted(labels)}")
        self.labels = set(labels)


class CapExceeded(IdealGraphError):
    def __init__(self, cap: int, partial: Optional[List[Tuple[int, ...]]] = None):
        super().__init__(f"More than {cap} chordless cycles")
        self.cap = cap
        self.partial = partial or []


class PreconditionViolation(IdealGraphError, ValueError):
    pass


class FixtureMismatch(IdealGraphError):
    pass


class UnknownFormat(IdealGraphError, ValueError):
    pass
