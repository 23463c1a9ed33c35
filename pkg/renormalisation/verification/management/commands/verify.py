import logging

from renormalisation.utils.commands import RenormalisationCommand
from renormalisation.verification.models import SuiteRun
from renormalisation.verification.reports import summarise
from renormalisation.verification.suites import SUITES, SuiteContext, run_suite

logger = logging.getLogger(__name__)


class Command(RenormalisationCommand):
    """
    Django command running the acceptance suites.
    """

    help = """Run one acceptance suite, or all of them, and report every check. Exits 1 when an asserted check fails."""

    def add_command_arguments(self, parser):
        parser.add_argument(
            'suite',
            type=str,
            choices=['all', *SUITES],
            help='Suite to run.'
        )
        parser.add_argument(
            '--max-edges',
            type=int,
            default=None,
            help='Enumeration depth of the trees (default from settings).'
        )
        parser.add_argument(
            '--samples',
            type=int,
            default=1000,
            help='Number of random pairs of the Rota-Baxter family checks.'
        )
        parser.add_argument(
            '--save',
            action='store_true',
            help='Persist every suite run.'
        )

    def run(self, *args, **options):
        context = SuiteContext.build(
            scaling=self.load_scaling(options),
            seed=self.get_seed(options),
            max_edges=options['max_edges'],
            samples=options['samples'],
        )
        names = list(SUITES) if options['suite'] == 'all' else [options['suite']]
        results = {}
        for name in self.progress(names, options, desc='Suites'):
            reports = run_suite(name, context)
            results[name] = reports
            if options['save']:
                run = SuiteRun.record(name, context, reports)
                logger.info("Saved %s", run)

        outcomes = {name: summarise(reports) for name, reports in results.items()}
        passed = all(outcome[0] for outcome in outcomes.values())
        if options.get('format') == 'json':
            self.write_json({
                'seed': context.seed,
                'max_edges': context.max_edges,
                'passed': passed,
                'suites': {
                    name: {
                        'passed': outcomes[name][0],
                        'n_checks': outcomes[name][1],
                        'checks': [report.as_dict() for report in reports],
                    }
                    for name, reports in results.items()
                },
            })
        else:
            for name, reports in results.items():
                for report in reports:
                    if not report.asserted:
                        label = 'INFO'
                    else:
                        label = 'PASS' if report.passed else 'FAIL'
                    self.stdout.write(f"{label} {name} {report.check} {report.tree} {report.max_gap!r}")
            for name, (suite_passed, count, failures) in outcomes.items():
                self.stdout.write(f"{name}: {count - len(failures)}/{count} checks passed")
        if not passed:
            failed = sum(len(outcome[2]) for outcome in outcomes.values())
            self.fail_checks(f"{failed} checks failed.")
