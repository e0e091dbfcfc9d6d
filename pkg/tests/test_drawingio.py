from fractions import Fraction

import pytest

from rcnlab.constructions import convex, general_thirds, singer
from rcnlab.drawingio import (
    DrawingFormatError,
    format_drawing,
    parse_drawing,
    read_drawing,
    write_drawing,
)
from rcnlab.exactgeom import Drawing, point


def test_round_trip_identity(tmp_path):
    for d in (convex(5), singer(2), general_thirds(11)):
        path = tmp_path / "d.drawing"
        write_drawing(d, path)
        back = read_drawing(path)
        assert back == d  # structural equality of all rationals
        assert [p.x.denominator > 0 for p in back.points]


def test_format_layout():
    d = Drawing((point(Fraction(-3, 6), 2), point(1, Fraction(5, 10))))
    text = format_drawing(d)
    lines = text.splitlines()
    assert lines[0] == "rcn-drawing v1"
    assert lines[1] == "n=2"
    # fractions are written in lowest terms with positive denominators
    assert lines[2] == "-1/2 2/1"
    assert lines[3] == "1/1 1/2"


def test_parse_round_trip_from_text():
    d = singer(1)
    assert parse_drawing(format_drawing(d)) == d


@pytest.mark.parametrize(
    "text",
    [
        "not-a-drawing\nn=1\n0/1 0/1\n",
        "rcn-drawing v1\nm=1\n0/1 0/1\n",
        "rcn-drawing v1\nn=2\n0/1 0/1\n",
        "rcn-drawing v1\nn=1\n0/1 0/1\n1/1 1/1\n",
        "rcn-drawing v1\nn=1\n0 0\n",
        "rcn-drawing v1\nn=1\n1/0 0/1\n",
        "rcn-drawing v1\nn=1\n1/-2 0/1\n",
        "rcn-drawing v1\nn=1\nx/1 0/1\n",
    ],
)
def test_parse_errors(text):
    with pytest.raises(DrawingFormatError):
        parse_drawing(text)


def test_read_label_defaults_to_stem(tmp_path):
    path = tmp_path / "myk9.drawing"
    write_drawing(singer(2), path)
    assert read_drawing(path).label == "myk9"
