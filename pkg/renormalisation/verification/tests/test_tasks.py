import pytest

from renormalisation.verification.models import SuiteRun
from renormalisation.verification.tasks import run_suite_task


@pytest.mark.django_db
class TestRunSuiteTask:
    """
    Tests the task running and storing a suite.
    """

    def test_stores_the_run(self):
        """Test that the task stores the run and returns its primary key."""
        run_id = run_suite_task('classical', seed=5, max_edges=1)
        run = SuiteRun.objects.get(id=run_id)
        assert run.suite == 'classical'
        assert run.seed == 5
        assert run.passed
        assert run.n_checks == len([check for check in run.report if check.get('asserted', True)])

    def test_defaults(self, settings):
        """Test that the task reads its defaults from the settings."""
        settings.RENORMALISATION = {**getattr(settings, 'RENORMALISATION', {}), 'DEFAULT_SEED': 9, 'MAX_EDGES': 1}
        run = SuiteRun.objects.get(id=run_suite_task('classical'))
        assert run.seed == 9
        assert run.max_edges == 1
