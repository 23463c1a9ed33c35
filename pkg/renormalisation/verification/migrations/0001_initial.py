# Generated by Django 5.2 on 2026-10-17 10:24

from django.db import migrations, models


class Migration(migrations.Migration):

    initial = True

    dependencies = [
    ]

    operations = [
        migrations.CreateModel(
            name='SuiteRun',
            fields=[
                ('id', models.BigAutoField(auto_created=True, primary_key=True, serialize=False, verbose_name='ID')),
                ('suite', models.CharField(choices=[('hopf', 'Hopf'), ('rota_baxter', 'Rota baxter'), ('classical', 'Classical'), ('multiplicativity', 'Multiplicativity'), ('twisted_antipode', 'Twisted antipode'), ('renormalised', 'Renormalised'), ('closed_forms', 'Closed forms'), ('invariance', 'Invariance'), ('model', 'Model'), ('negative', 'Negative'), ('determinism', 'Determinism')], help_text='The name of the suite that ran.', max_length=32, verbose_name='Suite')),
                ('seed', models.IntegerField(help_text='The seed of the random draws and sample points.', verbose_name='Seed')),
                ('max_edges', models.PositiveSmallIntegerField(help_text='The enumeration depth of the trees.', verbose_name='Max edges')),
                ('passed', models.BooleanField(help_text='Whether every asserted check passed.', verbose_name='Passed')),
                ('n_checks', models.PositiveIntegerField(default=0, help_text='The number of asserted checks.', verbose_name='Checks')),
                ('n_failures', models.PositiveIntegerField(default=0, help_text='The number of asserted checks that failed.', verbose_name='Failures')),
                ('report', models.JSONField(default=list, help_text='Every check report, in canonical order.', verbose_name='Report')),
                ('created_at', models.DateTimeField(auto_now_add=True)),
            ],
            options={
                'verbose_name': 'Suite run',
                'verbose_name_plural': 'Suite runs',
                'ordering': ['-created_at', '-id'],
                'indexes': [models.Index(fields=['suite', 'created_at'], name='suiterun_suite_created_idx')],
            },
        ),
    ]
