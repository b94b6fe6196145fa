from __future__ import annotations


class MzrError(Exception):
    pass


class SingularInput(MzrError):
    """Raised when an operation needs a regular point but got a singular one."""

    def __init__(self, point, verdict) -> None:
        super().__init__(f"{tuple(point)} is a singular point ({verdict.describe()})")
        self.point = tuple(point)
        self.verdict = verdict


class RegularityViolation(MzrError):
    """A recurrence child with nonzero multiplier landed on a singular point."""

    def __init__(self, point, child, verdict, trace) -> None:
        super().__init__(
            f"reducing {tuple(point)} produced singular child {tuple(child)} "
            f"({verdict.describe()}) with nonzero multiplier"
        )
        self.point = tuple(point)
        self.child = tuple(child)
        self.verdict = verdict
        self.trace = trace


class NotAdmissible(MzrError, ValueError):
    pass
