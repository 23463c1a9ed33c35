from rest_framework.routers import DefaultRouter

from renormalisation.verification import views


router = DefaultRouter()

router.register('verification/runs', views.SuiteRunViewSet, basename='runs')

app_name = 'verification'

urlpatterns = router.urls
