from django.db.models import Manager


class SuiteRunManager(Manager):
    """
    Custom manager for the SuiteRun model.
    """

    def latest_for(self, suite):
        """
        Get the last persisted run of a suite.

        Raises:
            SuiteRun.DoesNotExist: The suite never ran.
        """
        return super().get_queryset().filter(suite=suite).latest('created_at', 'id')

    def failing(self):
        return super().get_queryset().filter(passed=False)
