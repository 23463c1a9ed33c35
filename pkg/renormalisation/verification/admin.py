from django.contrib import admin
from django.utils.translation import gettext_lazy as _

from renormalisation.verification.models import SuiteRun


@admin.register(SuiteRun)
class SuiteRunAdmin(admin.ModelAdmin):
    list_display = ('id', 'suite', 'seed', 'passed', 'n_checks', 'n_failures', 'created_at')
    search_fields = ['suite']
    list_filter = ['suite', 'passed', 'created_at']
    ordering = ['-created_at']
    fieldsets = (
        (_('General'), {
            'fields': ['suite', 'seed', 'max_edges']
        }),
        (_('Outcome'), {
            'fields': ['passed', 'n_checks', 'n_failures', 'report']
        }),
        (_('Dates'), {
            'fields': ['created_at']
        }),
    )
    readonly_fields = ['created_at', 'passed', 'n_checks', 'n_failures', 'report']
