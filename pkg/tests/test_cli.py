import math

from rcnlab import constructions
from rcnlab.cli import main
from rcnlab.constructions import singer
from rcnlab.drawingio import write_drawing
from rcnlab.exactgeom import Drawing, point


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_gen_count_render_round_trip(tmp_path, capsys):
    path = tmp_path / "k9.drawing"
    code, out, _ = run(capsys, "gen", "--strategy", "singer", "--n", "9", "--out", str(path))
    assert code == 0
    assert "achieved=36" in out and "expected=36" in out

    code, out, _ = run(capsys, "count", str(path))
    assert code == 0
    assert "crossings=36" in out
    assert "ratio=0.285714" in out  # 36 / C(9,4)

    code, out, _ = run(capsys, "count", str(path), "--method", "quads", "--porcelain")
    assert code == 0
    assert out.strip() == "36\t0.285714"

    svg = tmp_path / "k9.svg"
    code, out, _ = run(capsys, "render", str(path), "--out", str(svg), "--width", "640")
    assert code == 0
    text = svg.read_text()
    assert text.count("<line ") == math.comb(9, 2) == 36
    assert text.count("<circle ") == 9


def test_gen_convex_square(tmp_path, capsys):
    out_file = tmp_path / "k4.drawing"
    code, out, _ = run(capsys, "gen", "--strategy", "convex", "--n", "4", "--out", str(out_file))
    assert code == 0 and "achieved=1 " in out
    code, out, _ = run(capsys, "count", str(out_file), "--porcelain")
    assert code == 0 and out.strip() == "1\t1.000000"  # convex position: the worst case


def test_gen_thirds_and_slide_defaults(tmp_path, capsys):
    out_file = tmp_path / "t.drawing"
    code, out, _ = run(capsys, "gen", "--strategy", "thirds", "--n", "11", "--out", str(out_file))
    assert code == 0 and "achieved=102" in out
    # slide amount defaults to the optimal integer
    code, out, _ = run(capsys, "gen", "--strategy", "s1", "--n", "9", "--out", str(out_file),
                       "--porcelain")
    assert code == 0
    assert out.strip().split("\t")[1:] == ["36", "36"]


def test_gen_byte_identical(tmp_path, capsys):
    p1, p2 = tmp_path / "a.drawing", tmp_path / "b.drawing"
    assert run(capsys, "gen", "--strategy", "singer", "--n", "27", "--out", str(p1))[0] == 0
    assert run(capsys, "gen", "--strategy", "singer", "--n", "27", "--out", str(p2))[0] == 0
    assert p1.read_bytes() == p2.read_bytes()


def test_count_jobs_invariance(tmp_path, capsys):
    path = tmp_path / "c.drawing"
    write_drawing(constructions.convex(12), path)
    outs = set()
    for jobs in ("1", "2", "3"):
        code, out, _ = run(capsys, "count", str(path), "--jobs", jobs, "--porcelain")
        assert code == 0
        outs.add(out)
    assert len(outs) == 1
    assert outs.pop().startswith(str(math.comb(12, 4)))


def test_count_error_paths(tmp_path, capsys):
    code, _, err = run(capsys, "count", str(tmp_path / "missing.drawing"))
    assert code == 3
    bad = tmp_path / "bad.drawing"
    bad.write_text("rcn-drawing v1\nn=3\n0/1 0/1\n1/1 1/1\n2/1 2/1\n")
    code, _, err = run(capsys, "count", str(bad))
    assert code == 2
    assert "(0, 1, 2)" in err
    garbage = tmp_path / "garbage.drawing"
    garbage.write_text("hello\n")
    code, _, err = run(capsys, "count", str(garbage))
    assert code == 2


def test_verify_pass_and_domain_skip(capsys):
    code, out, _ = run(capsys, "verify", "singer", "3..27")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "n=3 a=- achieved=0 expected=0 ok"
    assert lines[1] == "n=9 a=- achieved=36 expected=36 ok"
    assert lines[2] == "n=27 a=- achieved=6264 expected=6264 ok"
    assert lines[3].endswith("PASS")

    code, out, _ = run(capsys, "verify", "convex", "4..8")
    assert code == 0 and "PASS" in out

    code, _, err = run(capsys, "verify", "singer", "4..8")
    assert code == 1  # nothing in domain


def test_verify_detects_mismatch(capsys, monkeypatch):
    real = constructions._expected_count

    def wrong(spec):
        return real(spec) + 1

    monkeypatch.setattr(constructions, "_expected_count", wrong)
    code, out, _ = run(capsys, "verify", "convex", "5")
    assert code == 2
    assert "MISMATCH" in out and "FAIL" in out


def test_table_subcommand(tmp_path, capsys):
    code, out, _ = run(capsys, "table", "table3")
    assert code == 0 and "623,916" in out
    code, out, _ = run(capsys, "table", "table2", "--porcelain")
    assert code == 0 and "0.3838" in out
    out_dir = tmp_path / "rep"
    code, out, _ = run(capsys, "table", "table1", "--out-dir", str(out_dir))
    assert code == 0
    assert (out_dir / "table1.csv").exists()
    assert (out_dir / "table1.png").exists()


def test_usage_errors(capsys):
    assert run(capsys, "gen", "--strategy", "warp", "--n", "9", "--out", "x")[0] == 1
    assert run(capsys, "table", "table9")[0] == 1
    assert run(capsys, "gen", "--strategy", "singer", "--n", "10", "--out", "x")[0] == 1
    assert run(capsys, "gen", "--strategy", "s1", "--n", "9", "--a", "7", "--out", "x")[0] == 1


def test_render_tiny_drawing(tmp_path, capsys):
    path = tmp_path / "tri.drawing"
    write_drawing(Drawing((point(0, 0), point(4, 0), point(1, 3))), path)
    svg = tmp_path / "tri.svg"
    code, _, _ = run(capsys, "render", str(path), "--out", str(svg))
    assert code == 0
    text = svg.read_text()
    assert text.count("<line ") == 3
    assert text.count("<circle ") == 3


def test_render_determinism_and_smoke_k81(tmp_path, capsys):
    path = tmp_path / "k81.drawing"
    write_drawing(singer(4), path)
    s1, s2 = tmp_path / "a.svg", tmp_path / "b.svg"
    assert run(capsys, "render", str(path), "--out", str(s1))[0] == 0
    assert run(capsys, "render", str(path), "--out", str(s2))[0] == 0
    assert s1.read_bytes() == s2.read_bytes()
    assert s1.read_text().count("<line ") == math.comb(81, 2)
