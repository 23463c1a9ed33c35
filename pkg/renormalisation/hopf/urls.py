from rest_framework.routers import DefaultRouter

from renormalisation.hopf import views


router = DefaultRouter()

router.register('trees', views.TreeAlgebraViewSet, basename='trees')

app_name = 'hopf'

urlpatterns = router.urls
