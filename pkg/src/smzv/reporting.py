"""Identity check reports shared by the engine, the suites and the CLI."""

from __future__ import annotations

from dataclasses import dataclass

PASS = "Pass"
FAIL = "Fail"
INCONCLUSIVE = "Inconclusive"


@dataclass
class IdentityReport:
    """Outcome of one identity check.

    Exact checks are Pass or Fail.  Numeric checks may be Inconclusive when
    the error bound is too large to decide at the requested tolerance.
    """
    suite: str
    item: str
    lhs: str
    rhs: str
    status: str
    error_bound: str | None = None
    elapsed_ms: float | None = None

    @property
    def ok(self) -> bool:
        return self.status == PASS

    def as_dict(self) -> dict:
        d = {"suite": self.suite, "item": self.item, "lhs": self.lhs,
             "rhs": self.rhs, "status": self.status}
        if self.error_bound is not None:
            d["error_bound"] = self.error_bound
        if self.elapsed_ms is not None:
            d["elapsed_ms"] = round(self.elapsed_ms, 3)
        return d
