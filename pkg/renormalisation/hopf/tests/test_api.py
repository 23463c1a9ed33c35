from django.urls import reverse
from rest_framework import status


COPRODUCT_URL = reverse('hopf:trees-coproduct')
ANTIPODE_URL = reverse('hopf:trees-antipode')


class TestCoproductView:
    """
    Tests the coproduct action.
    """

    def test_hat_coproduct(self, client, scaling):
        """Test the hat coproduct of a planted tree."""
        res = client.post(
            COPRODUCT_URL,
            {'tree': 'I[t,0](1)', 'mode': 'hat', 'scaling': scaling.to_config()},
            content_type='application/json',
        )
        assert res.status_code == status.HTTP_200_OK
        assert res.data['mode'] == 'hat'
        assert len(res.data['terms']) == 3
        assert {'coeff': '1', 'left': 'X', 'right': 'J[t,1](1)'} in res.data['terms']

    def test_full_mode_uses_cutoff(self, client, scaling):
        """Test that the full mode keeps the terms up to the cutoff."""
        res = client.post(
            COPRODUCT_URL,
            {'tree': 'I[t,0](1)', 'mode': 'full', 'cutoff': '3', 'scaling': scaling.to_config()},
            content_type='application/json',
        )
        assert res.status_code == status.HTTP_200_OK
        assert len(res.data['terms']) == 5

    def test_invalid_tree(self, client):
        """Test that an unparsable tree is a validation error on the tree field."""
        res = client.post(COPRODUCT_URL, {'tree': 'I[t,0]('}, content_type='application/json')
        assert res.status_code == status.HTTP_400_BAD_REQUEST
        assert 'tree' in res.data

    def test_domain_error(self, client):
        """Test that a tree outside of the positive part gives a bad request."""
        res = client.post(COPRODUCT_URL, {'tree': 'I[l,0](1)', 'mode': 'bar'}, content_type='application/json')
        assert res.status_code == status.HTTP_400_BAD_REQUEST


class TestAntipodeView:
    """
    Tests the antipode action.
    """

    def test_twisted(self, client, scaling):
        """Test the text rendering of the twisted antipode."""
        res = client.post(
            ANTIPODE_URL,
            {'tree': 'J[t,0](1)', 'variant': 'twisted', 'scaling': scaling.to_config()},
            content_type='application/json',
        )
        assert res.status_code == status.HTTP_200_OK
        assert res.data['text'] == '-1 J[t,0](1) + 1 X*J[t,1](1) + -1/2 X^[2]*J[t,2](1)'

    def test_negative_cutoff(self, client):
        """Test that a negative cutoff is refused."""
        res = client.post(
            ANTIPODE_URL,
            {'tree': 'I[t,0](1)', 'variant': 'full', 'cutoff': '-1'},
            content_type='application/json',
        )
        assert res.status_code == status.HTTP_400_BAD_REQUEST
