import pytest

from renormalisation.targets.gausspoly import GaussPolyFn
from renormalisation.targets.oscillatory import OscillatoryFn
from renormalisation.targets.polynomial import Polynomial
from renormalisation.targets.rota_baxter import rota_baxter_sides
from renormalisation.targets.symtensor import (SymTensor, expectation_projector, sym_expectation,
                                               symmetrised_osc_projector)


@pytest.fixture
def f():
    """Fixture with f(x) = 2 + x, so f(0) = 2."""
    return GaussPolyFn(1, [(0, Polynomial(1, {(0,): 2, (1,): 1}))])


@pytest.fixture
def g():
    """Fixture with g(x) = 3 exp(-x^2), so g(0) = 3."""
    return GaussPolyFn.gaussian(1, coeff=3)


class TestSymTensor:
    """
    Tests the symmetrised product.
    """

    def test_commutative(self, f, g):
        """Test that the factors commute."""
        assert SymTensor.sym(f, g) == SymTensor.sym(g, f)

    def test_not_pointwise(self, f, g):
        """Test that the tensor product differs from the pointwise one."""
        assert SymTensor.sym(f, g) != SymTensor.sym(f * g)

    def test_constants_are_absorbed(self, f):
        """Test that constant factors become coefficients."""
        assert SymTensor.sym(f, GaussPolyFn.constant(1, 5)) == SymTensor.sym(f) * 5

    def test_product(self, f, g):
        """Test the product of two tensors."""
        assert SymTensor.sym(f) * SymTensor.sym(g) == SymTensor.sym(f, g)


class TestExpectation:
    """
    Tests the deterministic expectation and its Rota-Baxter property.
    """

    def test_product_of_evaluations(self, f, g):
        """Test that the expectation multiplies the evaluations."""
        assert sym_expectation(SymTensor.sym(f, g)) == pytest.approx(6.0)

    def test_constant(self):
        """Test the expectation of a constant."""
        assert sym_expectation(SymTensor.constant(4)) == 4

    def test_centred_factor(self, f):
        """Test that a centred factor has zero expectation."""
        assert sym_expectation(SymTensor.sym(f - 2)) == pytest.approx(0.0)

    def test_linear(self, f, g):
        """Test linearity of the expectation."""
        tensor = SymTensor.sym(f, g) * 2 - SymTensor.sym(g)
        assert sym_expectation(tensor) == pytest.approx(9.0)

    def test_rota_baxter(self, random_gausspoly):
        """Test the Rota-Baxter identity of the expectation."""
        for _ in range(100):
            a = SymTensor.sym(random_gausspoly(), random_gausspoly()) + SymTensor.sym(random_gausspoly())
            b = SymTensor.sym(random_gausspoly()) + 1
            left, right = rota_baxter_sides(expectation_projector, a, b)
            assert left.is_close(right)


class TestSymmetrisedOscillatoryProjector:
    """
    Tests the multiplicative extension of the oscillatory projector to symmetrised tensors.
    """

    def test_cancelling_phases_stay_apart(self):
        """Test that opposite phases in separate factors are not cancelled."""
        f = OscillatoryFn.linear_phase([1])
        g = OscillatoryFn.linear_phase([-1])
        assert symmetrised_osc_projector(SymTensor.sym(f, g)) == 0

    def test_polynomial_factor(self):
        """Test the value on a tensor of phase-free factors."""
        p = OscillatoryFn.polynomial(1, Polynomial(1, {(0,): 3, (1,): 1}))
        assert symmetrised_osc_projector(SymTensor.sym(p, p)) == 9

    def test_rota_baxter_with_arbitrary_phases(self, random_oscillatory):
        """Test the Rota-Baxter identity with phases of any sign."""
        for _ in range(100):
            a = SymTensor.sym(random_oscillatory(low=-2), random_oscillatory(low=-2))
            b = SymTensor.sym(random_oscillatory(low=-2)) + 2
            left, right = rota_baxter_sides(symmetrised_osc_projector, a, b)
            assert left == right
