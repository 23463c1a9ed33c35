from fractions import Fraction

import pytest

from renormalisation.targets.laurent import LaurentSeries, laurent_pole_project, laurent_regular_project
from renormalisation.targets.rota_baxter import complement, rota_baxter_sides
from renormalisation.utils.exceptions import DomainError


def series(coefficients, order=10):
    return LaurentSeries(coefficients, order=order)


class TestLaurentSeries:
    """
    Tests the arithmetic of truncated Laurent series.
    """

    def test_truncation(self):
        """Test that terms above the order are dropped."""
        assert series({-1: 1, 3: 1}, order=2) == series({-1: 1})

    def test_product(self):
        """Test the truncated product."""
        product = series({-1: 1, 0: 1}) * series({-1: 1, 1: 1})
        assert product == series({-2: 1, -1: 1, 0: 1, 1: 1})

    def test_inverse(self):
        """Test the inverse of an invertible series."""
        inverse = series({0: 1, 1: -1}, order=5).inverse()
        assert inverse == series({n: 1 for n in range(6)}, order=5)

    def test_inverse_of_pole(self):
        """Test the inverse of a pure pole."""
        f = series({-1: 2, 0: 4}, order=6)
        defect = f * f.inverse() - 1
        assert all(n > 5 for n, _ in defect.items())
        assert f.inverse().coefficient(1) == Fraction(1, 2)

    def test_zero_is_not_invertible(self):
        """Test that the zero series is refused."""
        with pytest.raises(DomainError):
            LaurentSeries.zero().inverse()

    def test_format(self):
        """Test the text format."""
        assert str(series({-2: 1, 0: 3, 1: Fraction(1, 2)})) == '1*t^-2 + 3 + 1/2*t'


class TestMinimalSubtraction:
    """
    Tests the pole projection Q and the Rota-Baxter identity of Q and id - Q.
    """

    def test_pole_part(self):
        """Test the pole part of a series."""
        assert laurent_pole_project(series({-2: 1, 0: 3, 1: 1})) == series({-2: 1})

    def test_no_pole(self):
        """Test that a regular series has no pole part."""
        assert laurent_pole_project(series({0: 5})) == 0

    def test_idempotent(self, random_laurent):
        """Test that minimal subtraction is idempotent."""
        f = random_laurent()
        assert laurent_pole_project(laurent_pole_project(f)) == laurent_pole_project(f)

    def test_identity_example(self):
        """Test the Rota-Baxter identity on a worked pair."""
        left, right = rota_baxter_sides(laurent_pole_project, series({-1: 1, 0: 1}), series({-1: 1, 1: 1}))
        assert left == right == series({-2: 1})

    @pytest.mark.parametrize('projector', [laurent_pole_project, laurent_regular_project, complement(laurent_pole_project)])
    def test_identity_on_random_pairs(self, random_laurent, projector):
        """Test the Rota-Baxter identity on random pairs."""
        for _ in range(200):
            left, right = rota_baxter_sides(projector, random_laurent(), random_laurent())
            assert left == right

    def test_projectors_split(self, random_laurent):
        """Test that the pole and regular parts add up to the series."""
        f = random_laurent()
        assert laurent_pole_project(f) + laurent_regular_project(f) == f
        assert laurent_pole_project(f).is_pole
        assert laurent_regular_project(f).is_regular
