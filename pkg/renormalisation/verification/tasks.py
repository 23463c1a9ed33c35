import logging

from celery import shared_task

from renormalisation.verification.suites import SuiteContext, run_suite

logger = logging.getLogger(__name__)


@shared_task
def run_suite_task(suite, seed=None, max_edges=None):
    """
    Run an acceptance suite and persist its report.

    Returns:
        int: The id of the new SuiteRun.
    """
    from renormalisation.verification.models import SuiteRun

    context = SuiteContext.build(seed=seed, max_edges=max_edges)
    reports = run_suite(suite, context)
    run = SuiteRun.record(suite, context, reports)
    logger.info("Stored %s", run)
    return run.id
