import json

import pytest

from knotmosaics.cli import main
from knotmosaics.grid import parse, validate

from conftest import TREFOIL_A


@pytest.fixture
def trefoil_file(tmp_path):
    p = tmp_path / "trefoil.cmos"
    p.write_text(TREFOIL_A)
    return str(p)


def test_validate_ok(trefoil_file, capsys):
    assert main(["validate", trefoil_file]) == 0
    assert "valid" in capsys.readouterr().out


def test_validate_bad_exits_1(tmp_path, capsys):
    p = tmp_path / "bad.cmos"
    p.write_text("corner 2 2\n1 0\n0 0\n")
    assert main(["validate", str(p)]) == 1
    out = capsys.readouterr().out
    assert "offending site" in out


def test_validate_stdin(monkeypatch, capsys):
    import io
    monkeypatch.setattr("sys.stdin", io.StringIO(TREFOIL_A))
    assert main(["validate", "-"]) == 0
    capsys.readouterr()


def test_classify_output(trefoil_file, capsys):
    assert main(["classify", trefoil_file]) == 0
    assert capsys.readouterr().out.strip() == "3_1 (8 non-blank, 3 crossings)"


def test_trace_output(trefoil_file, capsys):
    assert main(["trace", trefoil_file]) == 0
    out = capsys.readouterr().out
    assert "crossings" in out


def test_bounds_value(capsys):
    assert main(["bounds", "--family", "corner", "--n", "9"]) == 0
    assert capsys.readouterr().out.strip() == "43"


def test_bounds_traditional(capsys):
    assert main(["bounds", "--family", "traditional", "--n", "9"]) == 0
    assert capsys.readouterr().out.strip() == "47"


def test_bounds_domain_failure(capsys):
    assert main(["bounds", "--family", "corner", "--n", "2"]) == 1
    capsys.readouterr()


def test_pattern_roundtrip(capsys):
    assert main(["pattern", "--n", "5"]) == 0
    m = parse(capsys.readouterr().out)
    rep = validate(m)
    assert rep.valid and rep.crossings == 13


def test_pretzel_roundtrip(capsys):
    assert main(["pretzel", "1", "1", "1"]) == 0
    m = parse(capsys.readouterr().out)
    assert validate(m).valid


def test_pretzel_rejects_zero(capsys):
    assert main(["pretzel", "2", "0"]) == 1
    capsys.readouterr()


def test_render_to_file(trefoil_file, tmp_path, capsys):
    out = tmp_path / "m.svg"
    assert main(["render", trefoil_file, "-o", str(out)]) == 0
    assert out.read_text().startswith("<svg")
    capsys.readouterr()


def test_render_stdout(trefoil_file, capsys):
    assert main(["render", trefoil_file]) == 0
    assert capsys.readouterr().out.startswith("<svg")


def test_census_text(capsys):
    assert main(["census", "--n", "3", "--min-crossings", "3",
                 "--single-component", "--prime"]) == 0
    out = capsys.readouterr().out
    assert "3_1" in out


def test_census_json_lines(capsys):
    assert main(["census", "--n", "3", "--min-crossings", "3",
                 "--single-component", "--prime",
                 "--format", "json-lines"]) == 0
    lines = [l for l in capsys.readouterr().out.splitlines() if l.strip()]
    recs = [json.loads(l) for l in lines]
    assert any(r.get("knot", "").startswith("3_1") for r in recs)


def test_layouts(capsys):
    assert main(["layouts", "--n", "3"]) == 0
    out = capsys.readouterr().out
    assert "8" in out and "9" in out


def test_missing_file_exits_1(capsys):
    assert main(["validate", "/nonexistent/x.cmos"]) == 1
    capsys.readouterr()


def test_usage_error_exits_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["no-such-command"])
    assert exc.value.code == 2
    capsys.readouterr()


def test_no_args_exits_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main([])
    assert exc.value.code == 2
    capsys.readouterr()
