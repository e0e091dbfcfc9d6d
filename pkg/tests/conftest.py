import random
from fractions import Fraction

import pytest

from rcnlab.exactgeom import Drawing, Point2, validate_general_position


def random_rational(rng: random.Random, span: int = 40, max_den: int = 8) -> Fraction:
    return Fraction(rng.randint(-span, span), rng.randint(1, max_den))


def random_gp_drawing(rng: random.Random, n: int, span: int = 40) -> Drawing:
    """Random drawing with rational coordinates, resampled into general position."""
    while True:
        pts = tuple(
            Point2(random_rational(rng, span), random_rational(rng, span)) for _ in range(n)
        )
        d = Drawing(pts, label=f"random-{n}")
        if validate_general_position(d) is None:
            return d


def random_affine(rng: random.Random):
    """Random invertible affine map with rational entries (either orientation)."""
    while True:
        a, b, c, d = (random_rational(rng, 5) for _ in range(4))
        if a * d - b * c != 0:
            e, f = random_rational(rng, 20), random_rational(rng, 20)
            return lambda p: Point2(a * p.x + b * p.y + e, c * p.x + d * p.y + f)


@pytest.fixture
def rng():
    return random.Random(0x5EED)
