"""
Test the target command.
"""
import json
import math
from io import StringIO

import pytest
from django.core.management import call_command
from django.core.management.base import CommandError

SQUARE = json.dumps({'d_plus_1': 1, 'terms': [{'width': '0', 'polynomial': [{'exponent': [2], 'coeff': '1'}]}]})
GAUSSIAN = json.dumps({'d_plus_1': 1, 'terms': [{'width': '1', 'polynomial': [{'exponent': [0], 'coeff': '1'}]}]})
IDENTITY = json.dumps({'d_plus_1': 1, 'terms': [{'width': '0', 'polynomial': [{'exponent': [1], 'coeff': '1'}]}]})


def run(*args):
    out = StringIO()
    call_command('target', *args, stdout=out)
    return out.getvalue().strip()


class TestTargetCommand:
    """Test the target command."""

    def test_eval(self):
        """Test the evaluation of a function at a point."""
        assert run('eval', '--function', SQUARE, '--point', '3') == '9.0'

    def test_convolve(self):
        """Test the convolution of a monomial with a Gaussian."""
        data = json.loads(run('convolve', '--function', GAUSSIAN, '--other', IDENTITY, '--format', 'json'))
        [term] = data['terms']
        assert term['width'] == '0'
        [monomial] = term['polynomial']
        assert monomial['exponent'] == [1]
        assert float(monomial['coeff']) == pytest.approx(math.sqrt(math.pi))

    def test_divergent_convolution(self):
        """Test that a divergent convolution exits with code 2."""
        with pytest.raises(CommandError) as excinfo:
            run('convolve', '--function', SQUARE, '--other', IDENTITY)
        assert excinfo.value.returncode == 2

    def test_jet(self):
        """Test the Taylor jet of a square."""
        assert run('jet', '--function', SQUARE, '--alpha', '2', '--at', '1') == '-1.0 + 2.0*x'

    def test_jet_value(self):
        """Test the value of the jet at a point."""
        assert run('jet', '--function', SQUARE, '--alpha', '2', '--at', '1', '--point', '0.5') == '0.0'

    def test_pole(self):
        """Test the pole part of a Laurent series."""
        series = json.dumps({'coefficients': {'-2': '1', '0': '3', '1': '1'}})
        assert run('pole', '--series', series) == '1*t^-2'

    def test_osc(self):
        """Test the projection of an oscillatory function."""
        function = json.dumps({
            'frequencies': 1,
            'terms': [
                {'phase': [], 'amplitude': [{'exponent': [2], 'coeff': '3'}]},
                {'phase': [{'exponent': [1], 'coeff': '1'}], 'amplitude': [{'exponent': [1], 'coeff': '1'}]},
            ],
        })
        assert run('osc', '--function', function) == '3*z^2'

    def test_missing_input(self):
        """Test that a missing function exits with code 2."""
        with pytest.raises(CommandError) as excinfo:
            run('eval', '--point', '0')
        assert excinfo.value.returncode == 2

    def test_invalid_json(self):
        """Test that invalid JSON exits with code 2."""
        with pytest.raises(CommandError) as excinfo:
            run('eval', '--function', '{', '--point', '0')
        assert excinfo.value.returncode == 2

    def test_function_file(self, tmp_path):
        """Test that a function is read from a file given with @."""
        path = tmp_path / 'square.json'
        path.write_text(SQUARE)
        assert run('eval', '--function', f'@{path}', '--point', '2') == '4.0'
