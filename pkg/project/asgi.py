"""
ASGI entry point of the renormalisation API, serving `application` with the production settings.
"""

import os

from django.core.asgi import get_asgi_application

os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'project.settings.production')

application = get_asgi_application()
