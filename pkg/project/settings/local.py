from .base import *  # noqa
import os


# * GENERAL
# ------------------------------------------------------------------------------
ALLOWED_HOSTS = os.environ.get("ALLOWED_HOSTS", "*").split(",")

# * CELERY
# ------------------------------------------------------------------------------
# Suite runs scheduled through the API execute in the request process.
CELERY_TASK_ALWAYS_EAGER = True
CELERY_TASK_EAGER_PROPAGATES = True

# * CORS & HOSTS
# ------------------------------------------------------------------------------
CORS_ALLOWED_ORIGINS = os.environ.get(
    "CORS_ALLOWED_ORIGINS",
    "http://localhost:8000,https://localhost:8000"
).split(",")
