"""The `rcn` command line.

Subcommands: gen (build a drawing and write it), count (exact crossing
count of a drawing file), verify (formula-vs-counter harness over a range
of n), table (reproduce a reference table, optionally with CSV + figure),
render (SVG picture of a drawing).

Exit codes: 0 success, 1 usage error, 2 validation or verification
failure, 3 I/O error.  `--porcelain` switches to bare machine-readable
output (no thousands separators, tab-separated fields).
"""

from __future__ import annotations

import argparse
import math
import sys
from typing import Optional, Sequence

from . import constructions, drawingio, report
from .constructions import ConstructionSpec, ConstructionError, InvalidSpecError, Strategy
from .counter import GeneralPositionError, count_crossings
from .exactgeom import Drawing
from .formulas import StrategyId, optimal_a

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_VALIDATION = 2
EXIT_IO = 3

_GEN_STRATEGIES = {
    "convex": (Strategy.CONVEX, None),
    "singer": (Strategy.SINGER, None),
    "thirds": (Strategy.THIRDS, None),
    "base4": (Strategy.BASE_A, 4),
    "base5": (Strategy.BASE_A, 5),
    "base7": (Strategy.BASE_A, 7),
    "base9": (Strategy.BASE_A, 9),
    "maxasym": (Strategy.MAX_ASYM, None),
    "s1": (Strategy.S1, None),
    "s2": (Strategy.S2, None),
    "s3": (Strategy.S3, None),
}

_OPTIMAL_A_FORM = {
    Strategy.MAX_ASYM: StrategyId.CM,
    Strategy.S1: StrategyId.CS1,
    Strategy.S2: StrategyId.CS2,
    Strategy.S3: StrategyId.CS3,
}


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # usage errors exit 1, not argparse's 2
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _fmt_count(c: int, porcelain: bool) -> str:
    return str(c) if porcelain else f"{c:,}"


def _ratio6(count: int, n: int) -> str:
    """count / C(n,4) rounded to six decimals, via integer arithmetic."""
    den = math.comb(n, 4)
    scaled = (count * 10**6 * 2 + den) // (2 * den)
    return f"{scaled // 10**6}.{scaled % 10**6:06d}"


def _make_spec(name: str, n: int, a: Optional[int]) -> ConstructionSpec:
    strategy, tpl = _GEN_STRATEGIES[name]
    if strategy is Strategy.BASE_A:
        if a is not None:
            raise InvalidSpecError("the base strategies take no --a")
        return ConstructionSpec(strategy, n, tpl)
    if strategy in _OPTIMAL_A_FORM and a is None:
        a = optimal_a(_OPTIMAL_A_FORM[strategy], n)[1]
        a = min(max(a, 0), n // 3)
    return ConstructionSpec(strategy, n, a)


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------


def _cmd_gen(args) -> int:
    spec = _make_spec(args.strategy, args.n, args.a)
    result = constructions.build(spec, jobs=args.jobs)
    try:
        drawingio.write_drawing(result.drawing, args.out)
    except OSError as exc:
        print(f"rcn gen: cannot write {args.out}: {exc}", file=sys.stderr)
        return EXIT_IO
    if args.porcelain:
        print(f"{args.out}\t{result.achieved}\t{result.expected}")
    else:
        print(
            f"wrote {args.out}: {result.drawing.label}, n={result.drawing.n}, "
            f"crossings achieved={_fmt_count(result.achieved, False)} "
            f"expected={_fmt_count(result.expected, False)}"
        )
    return EXIT_OK


def _cmd_count(args) -> int:
    try:
        d = drawingio.read_drawing(args.path)
    except OSError as exc:
        print(f"rcn count: cannot read {args.path}: {exc}", file=sys.stderr)
        return EXIT_IO
    c = count_crossings(d, args.method, args.jobs)
    if d.n >= 4:
        r = _ratio6(c, d.n)
    else:
        r = "-"
    if args.porcelain:
        print(f"{c}\t{r}")
    else:
        print(f"{args.path}: n={d.n} crossings={_fmt_count(c, False)} ratio={r}")
    return EXIT_OK


def _parse_range(text: str) -> tuple[int, int]:
    lo, sep, hi = text.partition("..")
    try:
        if sep:
            return int(lo), int(hi)
        v = int(text)
        return v, v
    except ValueError:
        raise InvalidSpecError(f"bad range {text!r}; use N or LO..HI") from None


def _domain(strategy: Strategy, tpl: Optional[int], lo: int, hi: int):
    for n in range(max(lo, 3), hi + 1):
        if strategy in (Strategy.CONVEX, Strategy.THIRDS):
            yield n
        elif strategy is Strategy.MAX_ASYM:
            if n % 3 == 0:
                yield n
        else:
            base = tpl if strategy is Strategy.BASE_A else 3
            m = n
            while m > base and m % base == 0:
                m //= base
            if m == base:
                yield n


def _cmd_verify(args) -> int:
    lo, hi = _parse_range(args.range)
    strategy, tpl = _GEN_STRATEGIES[args.strategy]
    failures = 0
    seen = 0
    for n in _domain(strategy, tpl, lo, hi):
        spec = _make_spec(args.strategy, n, args.a)
        seen += 1
        try:
            result = constructions.build(spec, jobs=args.jobs)
            ok = result.achieved == result.expected
            achieved: object = result.achieved
            expected: object = result.expected
        except ConstructionError as exc:
            ok = False
            achieved, expected = exc.achieved, exc.expected
        if not ok:
            failures += 1
        a_txt = "-" if spec.a is None or strategy is Strategy.BASE_A else str(spec.a)
        status = "ok" if ok else "MISMATCH"
        if args.porcelain:
            print(f"{n}\t{a_txt}\t{achieved}\t{expected}\t{status}")
        else:
            print(f"n={n} a={a_txt} achieved={achieved} expected={expected} {status}")
    if seen == 0:
        print(f"rcn verify: no n in {lo}..{hi} lies in the {args.strategy} domain", file=sys.stderr)
        return EXIT_USAGE
    if not args.porcelain:
        print(
            f"verify {args.strategy} {lo}..{hi}: "
            + ("PASS" if failures == 0 else f"FAIL ({failures})")
        )
    return EXIT_OK if failures == 0 else EXIT_VALIDATION


def _cmd_table(args) -> int:
    try:
        t = report.get_table(args.name)
    except KeyError as exc:
        print(f"rcn table: {exc}", file=sys.stderr)
        return EXIT_USAGE
    sys.stdout.write(report.render_text(t, porcelain=args.porcelain))
    if args.out_dir:
        try:
            csv_path, fig_path = report.write_report(args.name, args.out_dir)
        except OSError as exc:
            print(f"rcn table: cannot write report: {exc}", file=sys.stderr)
            return EXIT_IO
        print(f"wrote {csv_path}")
        print(f"wrote {fig_path}")
    return EXIT_OK


def render_svg(d: Drawing, width: int = 800) -> str:
    """Deterministic SVG: every edge as a line (index order), then vertices.

    Rational coordinates are converted to decimals with 12 significant
    digits here only; nothing downstream ever counts on these numbers.
    """
    margin = width / 20.0
    xs = [float(p.x) for p in d.points]
    ys = [float(p.y) for p in d.points]
    xspan = (max(xs) - min(xs)) or 1.0
    yspan = (max(ys) - min(ys)) or 1.0
    scale = (width - 2 * margin) / xspan
    height = yspan * scale + 2 * margin
    x0, y1 = min(xs), max(ys)

    def sx(p) -> str:
        return f"{(float(p.x) - x0) * scale + margin:.12g}"

    def sy(p) -> str:
        return f"{(y1 - float(p.y)) * scale + margin:.12g}"

    n = d.n
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width:.12g}" '
        f'height="{height:.12g}" viewBox="0 0 {width:.12g} {height:.12g}">'
    ]
    out.append(f'  <!-- {d.label or "drawing"}: n={n}, edges={n * (n - 1) // 2} -->')
    for i in range(n):
        for j in range(i + 1, n):
            out.append(
                f'  <line x1="{sx(d.points[i])}" y1="{sy(d.points[i])}" '
                f'x2="{sx(d.points[j])}" y2="{sy(d.points[j])}" '
                f'stroke="#355070" stroke-width="0.4" stroke-opacity="0.55"/>'
            )
    r = max(1.5, width / 400.0)
    for p in d.points:
        out.append(f'  <circle cx="{sx(p)}" cy="{sy(p)}" r="{r:.12g}" fill="#b3452c"/>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def _cmd_render(args) -> int:
    try:
        d = drawingio.read_drawing(args.path)
    except OSError as exc:
        print(f"rcn render: cannot read {args.path}: {exc}", file=sys.stderr)
        return EXIT_IO
    svg = render_svg(d, args.width)
    try:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(svg)
    except OSError as exc:
        print(f"rcn render: cannot write {args.out}: {exc}", file=sys.stderr)
        return EXIT_IO
    if not args.porcelain:
        print(f"wrote {args.out}: n={d.n}, {d.n * (d.n - 1) // 2} edges")
    return EXIT_OK


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------


def _build_parser() -> _Parser:
    p = _Parser(prog="rcn", description="exact workbench for low-crossing drawings of K_n")
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", help="build a drawing, validate its count, write it")
    g.add_argument("--strategy", required=True, choices=sorted(_GEN_STRATEGIES))
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--a", type=int, default=None, help="slide amount (default: optimal)")
    g.add_argument("--out", required=True)
    g.add_argument("--jobs", type=int, default=1)
    g.add_argument("--porcelain", action="store_true")
    g.set_defaults(func=_cmd_gen)

    c = sub.add_parser("count", help="exact crossing count of a drawing file")
    c.add_argument("path")
    c.add_argument("--method", choices=("pairs", "quads"), default="pairs")
    c.add_argument("--jobs", type=int, default=1)
    c.add_argument("--porcelain", action="store_true")
    c.set_defaults(func=_cmd_count)

    v = sub.add_parser("verify", help="build drawings over a range and compare with formulas")
    v.add_argument("strategy", choices=sorted(_GEN_STRATEGIES))
    v.add_argument("range", help="N or LO..HI (out-of-domain n are skipped)")
    v.add_argument("--a", type=int, default=None)
    v.add_argument("--jobs", type=int, default=1)
    v.add_argument("--porcelain", action="store_true")
    v.set_defaults(func=_cmd_verify)

    t = sub.add_parser("table", help="reproduce a reference table")
    t.add_argument("name", choices=("table1", "table2", "table3"))
    t.add_argument("--out-dir", default=None, help="also write <name>.csv and <name>.png here")
    t.add_argument("--porcelain", action="store_true")
    t.set_defaults(func=_cmd_table)

    r = sub.add_parser("render", help="render a drawing file to SVG")
    r.add_argument("path")
    r.add_argument("--out", required=True)
    r.add_argument("--width", type=int, default=800)
    r.add_argument("--porcelain", action="store_true")
    r.set_defaults(func=_cmd_render)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return args.func(args)
    except (ConstructionError, GeneralPositionError, drawingio.DrawingFormatError) as exc:
        print(f"rcn: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except (InvalidSpecError, ValueError) as exc:
        print(f"rcn: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"rcn: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    raise SystemExit(main())
