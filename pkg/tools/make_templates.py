"""Regenerate the bundled optimal K_a template fixtures.

K4 and K5 are hand-placed (triangle plus interior points); K7 and K9 come
from the generalized-thirds generator, which reaches the optimal counts at
those orders.  Every fixture must be in general position, have pairwise
distinct x-coordinates (the recursive assembly orders sub-clusters along
an axis by x), and fit inside the canonical box.

Run from the repository root: python tools/make_templates.py
"""

import os

from rcnlab.constructions import CANON_BOUND, general_thirds
from rcnlab.counter import count_crossings
from rcnlab.drawingio import write_drawing
from rcnlab.exactgeom import Drawing, point, validate_general_position

OUT = os.path.join(os.path.dirname(__file__), "..", "src", "rcnlab", "templates")


def main():
    os.makedirs(OUT, exist_ok=True)
    k4 = Drawing((point(-12, -8), point(12, -8), point(2, 12), point(0, -2)), "k4-template")
    k5 = Drawing(
        (point(-12, -8), point(12, -8), point(2, 14), point(-4, -4), point(4, -4)),
        "k5-template",
    )
    fixtures = (("k4", k4, 0), ("k5", k5, 1), ("k7", general_thirds(7), 9), ("k9", general_thirds(9), 36))
    for name, d, want in fixtures:
        assert validate_general_position(d) is None, name
        got = count_crossings(d, "pairs")
        assert got == want, (name, got, want)
        assert max(max(abs(p.x), abs(p.y)) for p in d.points) < CANON_BOUND, name
        xs = [p.x for p in d.points]
        assert len(set(xs)) == len(xs), f"{name}: x-coordinates must be pairwise distinct"
        path = os.path.join(OUT, f"{name}.drawing")
        write_drawing(d, path)
        print(f"wrote {path} (count {got})")


if __name__ == "__main__":
    main()
