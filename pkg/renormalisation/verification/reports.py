"""
Check reports shared by the verification suites and the `model verify` command.
"""
from dataclasses import dataclass, field

from renormalisation.trees.grammar import format_tree


def _plain(value):
    if isinstance(value, (tuple, list)):
        return [_plain(item) for item in value]
    return float(value)


@dataclass
class CheckReport:
    """
    Outcome of one named check on one tree.

    `asserted=False` marks diagnostics: they are reported but never fail a suite.
    """

    check: str
    tree: str
    points: list = field(default_factory=list)
    max_gap: float | None = 0.0
    passed: bool = True
    asserted: bool = True
    details: dict = field(default_factory=dict)

    @classmethod
    def compare(cls, check, tree, gap, tolerance, points=None, **details):
        """Build a report from a numeric discrepancy."""
        gap = float(gap)
        return cls(
            check=check,
            tree=tree if isinstance(tree, str) else format_tree(tree),
            points=[_plain(point) for point in points or []],
            max_gap=gap,
            passed=gap <= tolerance,
            details=details,
        )

    @classmethod
    def exact(cls, check, tree, holds, points=None, gap=None, **details):
        """Build a report from an exact comparison; `gap` is null when it is not measurable."""
        if gap is None and holds:
            gap = 0.0
        return cls(
            check=check,
            tree=tree if isinstance(tree, str) else format_tree(tree),
            points=[_plain(point) for point in points or []],
            max_gap=None if gap is None else float(gap),
            passed=bool(holds),
            details=details,
        )

    @property
    def failed(self):
        return self.asserted and not self.passed

    def as_dict(self):
        data = {
            'check': self.check,
            'tree': self.tree,
            'points': self.points,
            'max_gap': self.max_gap,
            'pass': self.passed,
        }
        if not self.asserted:
            data['asserted'] = False
        if self.details:
            data['details'] = self.details
        return data


def summarise(reports):
    """Return (passed, number of asserted checks, failures) for a list of reports."""
    asserted = [report for report in reports if report.asserted]
    failures = [report for report in asserted if not report.passed]
    return not failures, len(asserted), failures
