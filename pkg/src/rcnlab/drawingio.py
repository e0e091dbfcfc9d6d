"""On-disk drawing format.

A drawing file is plain text:

    rcn-drawing v1
    n=<count>
    <xnum>/<xden> <ynum>/<yden>     (one line per vertex, in order)

Numerators and denominators are decimal integers in lowest terms with a
positive denominator, so writing and re-reading a drawing reproduces it
exactly.
"""

from __future__ import annotations

import os
from fractions import Fraction

from .exactgeom import Drawing, Point2

HEADER = "rcn-drawing v1"


class DrawingFormatError(ValueError):
    pass


def format_drawing(d: Drawing) -> str:
    lines = [HEADER, f"n={d.n}"]
    for p in d.points:
        lines.append(f"{p.x.numerator}/{p.x.denominator} {p.y.numerator}/{p.y.denominator}")
    return "\n".join(lines) + "\n"


def parse_drawing(text: str, label: str = "") -> Drawing:
    lines = text.splitlines()
    if not lines or lines[0].strip() != HEADER:
        raise DrawingFormatError(f"missing header {HEADER!r}")
    if len(lines) < 2 or not lines[1].strip().startswith("n="):
        raise DrawingFormatError("missing n= line")
    try:
        n = int(lines[1].strip()[2:])
    except ValueError as exc:
        raise DrawingFormatError(f"bad vertex count: {lines[1]!r}") from exc
    if n < 0:
        raise DrawingFormatError(f"bad vertex count: {n}")
    body = [ln for ln in lines[2:] if ln.strip()]
    if len(body) != n:
        raise DrawingFormatError(f"expected {n} coordinate lines, found {len(body)}")
    pts = []
    for ln in body:
        parts = ln.split()
        if len(parts) != 2:
            raise DrawingFormatError(f"bad coordinate line: {ln!r}")
        try:
            x = _parse_fraction(parts[0])
            y = _parse_fraction(parts[1])
        except ValueError as exc:
            raise DrawingFormatError(f"bad coordinate line: {ln!r}") from exc
        pts.append(Point2(x, y))
    return Drawing(tuple(pts), label)


def _parse_fraction(token: str) -> Fraction:
    num_s, _, den_s = token.partition("/")
    if not den_s:
        raise ValueError(token)
    num = int(num_s)
    den = int(den_s)
    if den <= 0:
        raise ValueError(f"denominator must be positive: {token}")
    return Fraction(num, den)


def write_drawing(d: Drawing, path: os.PathLike | str) -> None:
    with open(path, "w", encoding="ascii") as fh:
        fh.write(format_drawing(d))


def read_drawing(path: os.PathLike | str, label: str | None = None) -> Drawing:
    with open(path, "r", encoding="ascii") as fh:
        text = fh.read()
    if label is None:
        label = os.path.splitext(os.path.basename(path))[0]
    return parse_drawing(text, label)
