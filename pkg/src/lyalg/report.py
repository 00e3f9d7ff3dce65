"""Pass/fail reports for identity checkers.

Every checker evaluates each named identity as a residual tensor over all
basis tuples (last axis = output coordinates) and keeps the first nonzero
tuple in lexicographic order as the witness.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np


class StructureError(ValueError):
    """A constructor's precondition failed; ``report`` holds the witness."""

    def __init__(self, msg, report=None):
        super().__init__(msg)
        self.report = report


@dataclass
class Violation:
    name: str
    where: tuple
    residual: object

    def describe(self, F=None):
        idx = " ".join(str(i + 1) for i in self.where)
        vals = " ".join(F.format(v) if F is not None else str(v) for v in np.asarray(self.residual).ravel())
        return f"{self.name} at ({idx}): residual [{vals}]"


@dataclass
class Report:
    checked: list = field(default_factory=list)
    violations: list = field(default_factory=list)

    @property
    def passed(self):
        return not self.violations

    def __bool__(self):
        return self.passed

    def failed_names(self):
        return [v.name for v in self.violations]

    def get(self, name):
        for v in self.violations:
            if v.name == name:
                return v
        return None

    def add(self, name, residual, out_axes=1):
        """Record identity ``name``; residual's trailing ``out_axes`` axes are the output."""
        self.checked.append(name)
        res = np.asarray(residual)
        if res.size == 0:
            return
        lead = res.shape[: res.ndim - out_axes]
        flat = res.reshape(int(np.prod(lead, dtype=np.int64)) if lead else 1, -1)
        nz = np.nonzero(np.any(flat != 0, axis=1))[0]
        if nz.size:
            where = np.unravel_index(int(nz[0]), lead) if lead else ()
            where = tuple(int(i) for i in where)
            self.violations.append(Violation(name, where, res[where].copy()))

    def extend(self, other, prefix=""):
        self.checked.extend(prefix + n for n in other.checked)
        for v in other.violations:
            self.violations.append(Violation(prefix + v.name, v.where, v.residual))
        return self

    def lines(self, F=None):
        if self.passed:
            return [f"passed ({len(self.checked)} identities)"]
        return ["failed"] + ["  " + v.describe(F) for v in self.violations]
