"""Exception hierarchy shared by every trimulti module."""

from __future__ import annotations


class TrimultiError(Exception):
    """Base class for all library errors."""


class EmptyInput(TrimultiError, ValueError):
    pass


class NegativeEntry(TrimultiError, ValueError):
    def __init__(self, index: int):
        super().__init__(f"negative entry at position {index}")
        self.index = index


class Overflow(TrimultiError, OverflowError):
    pass


class ZeroDegreePresent(TrimultiError, ValueError):
    pass


class VertexOutOfRange(TrimultiError, IndexError):
    def __init__(self, v: int, n: int):
        super().__init__(f"vertex {v} outside 1..{n}")
        self.vertex = v
        self.n = n


class SharedVertexCountNotOne(TrimultiError, ValueError):
    def __init__(self, shared: int):
        super().__init__(f"graphs share {shared} vertices, expected exactly 1")
        self.shared = shared


class PreconditionViolated(TrimultiError, ValueError):
    def __init__(self, which: str, detail: str = ""):
        msg = which if not detail else f"{which}: {detail}"
        super().__init__(msg)
        self.which = which


class NotRealizable(TrimultiError, ValueError):
    """Raised by ``realize`` when the sequence fails a necessary condition."""

    def __init__(self, report):
        self.report = report
        super().__init__(f"not realizable ({report.first_failure()})")


class InternalError(TrimultiError, RuntimeError):
    """A constructed graph failed verification. Always a bug."""

    def __init__(self, verifier: str, detail: str = ""):
        super().__init__(f"{verifier} verification failed {detail}".strip())
        self.verifier = verifier


class LimitExceeded(TrimultiError):
    def __init__(self, what: str):
        super().__init__(f"limit exceeded: {what}")
        self.what = what


class RetryBudgetExceeded(TrimultiError):
    pass


class EmptyBenchmark(TrimultiError, ValueError):
    pass
