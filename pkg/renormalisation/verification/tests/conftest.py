import pytest

from renormalisation.verification.models import SuiteRun
from renormalisation.verification.reports import CheckReport
from renormalisation.verification.suites import SuiteContext


@pytest.fixture
def context():
    """Fixture with a shallow suite context: trees with at most 2 edges and 20 random pairs."""
    return SuiteContext.build(seed=7, max_edges=2, samples=20)


@pytest.fixture
def reports():
    """Fixture with two passing checks, one failing check and one diagnostic."""
    diagnostic = CheckReport.compare('bound_table', 'I[t,0](1)', 0.5, 0.1)
    diagnostic.asserted = False
    return [
        CheckReport.exact('counit_hat', 'X', True),
        CheckReport.compare('twisted_antipode', 'I[t,0](1)', 1e-12, 1e-9, points=[(0.0,), (0.5,)]),
        CheckReport.compare('twisted_antipode', 'I[t,0](I[l,0](1))', 1e-3, 1e-9),
        diagnostic,
    ]


@pytest.fixture
def suite_runs(context, reports):
    """Fixture with a failing classical run followed by a passing one and a passing hopf run."""
    return [
        SuiteRun.record('classical', context, reports),
        SuiteRun.record('classical', context, reports[:2]),
        SuiteRun.record('hopf', context, reports[:1]),
    ]
