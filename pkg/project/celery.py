import os

from celery import Celery

os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'project.settings.production')

app = Celery('renormalisation')

# Every CELERY_* Django setting configures the app; suite tasks are found in each app's tasks.py.
app.config_from_object('django.conf:settings', namespace='CELERY')
app.autodiscover_tasks()
