from django.db import models
from django.utils.translation import gettext_lazy as _

from renormalisation.verification.managers import SuiteRunManager
from renormalisation.verification.reports import summarise
from renormalisation.verification.suites import SUITES


class SuiteRun(models.Model):
    """
    Model to store the report of one run of an acceptance suite.
    """
    SUITE_CHOICES = [(name, name.replace('_', ' ').capitalize()) for name in SUITES]

    suite = models.CharField(
        max_length=32,
        choices=SUITE_CHOICES,
        verbose_name=_('Suite'),
        help_text=_('The name of the suite that ran.')
    )
    seed = models.IntegerField(
        verbose_name=_('Seed'),
        help_text=_('The seed of the random draws and sample points.')
    )
    max_edges = models.PositiveSmallIntegerField(
        verbose_name=_('Max edges'),
        help_text=_('The enumeration depth of the trees.')
    )
    passed = models.BooleanField(
        verbose_name=_('Passed'),
        help_text=_('Whether every asserted check passed.')
    )
    n_checks = models.PositiveIntegerField(
        default=0,
        verbose_name=_('Checks'),
        help_text=_('The number of asserted checks.')
    )
    n_failures = models.PositiveIntegerField(
        default=0,
        verbose_name=_('Failures'),
        help_text=_('The number of asserted checks that failed.')
    )
    report = models.JSONField(
        default=list,
        verbose_name=_('Report'),
        help_text=_('Every check report, in canonical order.')
    )
    created_at = models.DateTimeField(auto_now_add=True)

    objects = SuiteRunManager()

    @classmethod
    def record(cls, suite, context, reports):
        """Persist the reports of a finished run."""
        passed, n_checks, failures = summarise(reports)
        return cls.objects.create(
            suite=suite,
            seed=context.seed,
            max_edges=context.max_edges,
            passed=passed,
            n_checks=n_checks,
            n_failures=len(failures),
            report=[report.as_dict() for report in reports],
        )

    def __str__(self):
        outcome = 'passed' if self.passed else f'{self.n_failures} failures'
        return f"Suite {self.suite} with seed {self.seed}: {outcome}"

    class Meta:
        ordering = ['-created_at', '-id']
        indexes = [
            models.Index(fields=['suite', 'created_at'], name='suiterun_suite_created_idx')
        ]
        verbose_name = 'Suite run'
        verbose_name_plural = 'Suite runs'
