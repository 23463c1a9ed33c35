import itertools

import numpy as np

from renormalisation.utils.conf import get_setting, sample_grid
from renormalisation.utils.exceptions import ParseError


def generate_points(d_plus_1, grid=None):
    """
    Generate every point of the sample grid in dimension d+1.

    Args:
        d_plus_1 (int): The ambient dimension.
        grid (list): One dimensional grid (default the `SAMPLE_GRID` setting).

    Yields:
        tuple: The points, in lexicographic order.
    """
    grid = sample_grid() if grid is None else grid
    for point in itertools.product(grid, repeat=d_plus_1):
        yield tuple(float(value) for value in point)


def generate_point_pairs(d_plus_1, count, seed=None, grid=None):
    """
    Draw `count` ordered pairs of grid points with a seeded generator.

    Args:
        d_plus_1 (int): The ambient dimension.
        count (int): Number of pairs.
        seed (int): Seed of the generator (default the `DEFAULT_SEED` setting).

    Yields:
        tuple: Pairs (x, y) of points.
    """
    points = list(generate_points(d_plus_1, grid=grid))
    rng = make_rng(seed)
    for _ in range(count):
        i, j = rng.integers(len(points), size=2)
        yield points[i], points[j]


def make_rng(seed=None):
    """Return a numpy generator seeded from `seed` or the configured default."""
    return np.random.default_rng(get_setting('DEFAULT_SEED') if seed is None else seed)


def parse_point(text, d_plus_1):
    """
    Parse a comma separated point such as ``"0.5"`` or ``"1,0"``.

    A single value is broadcast to every coordinate.
    """
    try:
        values = [float(part) for part in str(text).split(",") if part.strip()]
    except ValueError as exc:
        raise ParseError(f"Invalid point {text!r}.") from exc
    if len(values) == 1:
        values = values * d_plus_1
    if len(values) != d_plus_1:
        raise ParseError(f"Point {text!r} must have {d_plus_1} coordinates.")
    return tuple(values)
