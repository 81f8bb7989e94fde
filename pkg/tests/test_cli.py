"""End-to-end tests for the command line interface."""

import json

import pytest

import convexmatch
from convexmatch import Coloring, Matching
from convexmatch.cli import (
    atlas,
    format_matching,
    main,
    parse_coloring,
    parse_matching,
    render_svg,
)
from convexmatch.errors import InvalidMatching, ParseError


def run_json(capsys, argv):
    code = main(argv + ["--format", "json"])
    report = json.loads(capsys.readouterr().out)
    return code, report


# ----------------------------------------------------------- text parsing


def test_parse_coloring_compact_and_runlength():
    assert str(parse_coloring("rrbb")) == "RRBB"
    assert str(parse_coloring("2R2B")) == "RRBB"
    assert str(parse_coloring("1R 1B 7R 7B")) == "RB" + "R" * 7 + "B" * 7
    assert str(parse_coloring("2r2b")) == "RRBB"


def test_parse_coloring_rejects_junk():
    for bad in ("", "2X", "R2B", "2R2", "RB2R", "12"):
        with pytest.raises(ParseError):
            parse_coloring(bad)


def test_matching_text_roundtrip():
    m = Matching.from_pairs([(0, 4), (1, 3), (2, 5)])
    text = format_matching(m)
    assert text == "0-4,1-3,2-5"
    assert parse_matching(text).sorted_edges == m.sorted_edges
    with pytest.raises(ParseError):
        parse_matching("0-4,nope")


# ------------------------------------------------------------- exit codes


def test_exit_codes(capsys):
    assert main(["bound", "--n", "8"]) == 0
    assert main(["find", "--coloring", "RBRB", "--k", "1"]) == 1
    assert main(["construct", "alternating", "--n", "3"]) == 2
    assert main(["sweep", "--n", "9"]) == 2
    assert main(["bound", "--n", "not-a-number"]) == 2
    assert main(["no-such-command"]) == 2
    capsys.readouterr()


def test_usage_error_message(capsys):
    assert main(["construct", "alternating", "--n", "3"]) == 2
    err = capsys.readouterr().err
    assert err.startswith("error:")


def test_domain_negative_message(capsys):
    assert main(["compose", "--coloring", "RB" * 7, "--k", "2"]) == 1
    err = capsys.readouterr().err
    assert err.startswith("no:")


# ---------------------------------------------------------------- reports


def test_report_schema(capsys):
    code, report = run_json(capsys, ["bound", "--n", "8"])
    assert code == 0
    assert set(report) == {
        "schema", "version", "command", "input", "result", "elapsed_ms",
    }
    assert report["schema"] == 1
    assert report["version"] == convexmatch.__version__
    assert report["command"] == "bound"
    assert report["input"]["n"] == 8
    assert report["result"] == {"n": 8, "m": 2, "residue": 0, "value": 20}


def test_text_format_header(capsys):
    main(["bound", "--n", "8", "--format", "text"])
    out = capsys.readouterr().out
    assert out.splitlines()[0] == f"bound (v{convexmatch.__version__})"
    assert "  value: 20" in out


def test_csv_format(capsys):
    main(["bound", "--n", "8", "--format", "csv"])
    lines = capsys.readouterr().out.strip().splitlines()
    assert lines[0] == "key,value"
    assert "value,20" in lines


def test_out_writes_report(tmp_path, capsys):
    target = tmp_path / "report.json"
    main(["bound", "--n", "8", "--out", str(target), "--format", "json"])
    capsys.readouterr()
    assert json.loads(target.read_text())["result"]["value"] == 20


# ------------------------------------------------------------- subcommands


def test_spectrum_command(capsys):
    code, report = run_json(capsys, ["spectrum", "--coloring", "RBRRBB"])
    assert code == 0
    result = report["result"]
    assert result["achievable"] == [0, 1, 2]
    assert result["witnesses"]["2"] == "0-4,1-3,2-5"
    assert result["missing"] == [3]  # gaps up to C(n,2)


def test_max_command(capsys):
    code, report = run_json(capsys, ["max", "--coloring", "RBRRBB"])
    assert code == 0
    assert report["result"]["count"] == 2
    assert report["result"]["matching"]["text"] == "0-4,1-3,2-5"


def test_find_command(capsys):
    code, report = run_json(capsys, ["find", "--coloring", "RBRRBB", "--k", "2"])
    assert code == 0
    assert report["result"]["found"] is True
    assert report["result"]["matching"]["text"] == "0-4,1-3,2-5"
    code, report = run_json(capsys, ["find", "--coloring", "RBRB", "--k", "1"])
    assert code == 1
    assert report["result"]["found"] is False


def test_construct_alternating(capsys):
    code, report = run_json(capsys, ["construct", "alternating", "--n", "4"])
    assert code == 0
    result = report["result"]
    assert result["coloring"] == "RBRBRBRB"
    assert result["count"] == 4
    assert result["matching"]["text"] == "0-5,1-4,2-7,3-6"


def test_construct_fourblock(capsys):
    code, report = run_json(
        capsys, ["construct", "fourblock", "--blocks", "4,4,4,4"]
    )
    assert code == 0
    assert report["result"]["count"] == 20
    code, report = run_json(
        capsys,
        ["construct", "fourblock", "--coloring", "RRRRRBBBBRRRBBBB"],
    )
    assert code == 0
    assert report["result"]["count"] == 20


def test_construct_sixblock(capsys):
    code, report = run_json(
        capsys, ["construct", "sixblock", "--blocks", "2,1,1,1,1,2"]
    )
    assert code == 0
    result = report["result"]
    assert result["coloring"] == "RRBRBRBB"
    assert result["count"] == 5
    assert result["matching"]["text"] == "0-4,1-6,2-5,3-7"
    # size vector that is not of the special shape
    assert main(["construct", "sixblock", "--blocks", "1,1,1,1,1,1"]) == 2
    capsys.readouterr()


def test_construct_witness(capsys):
    code, report = run_json(
        capsys, ["construct", "witness", "--coloring", "RRBRBRBRBB"]
    )
    assert code == 0
    result = report["result"]
    assert result["bound"] == 7
    assert result["count"] == 9


def test_construct_plane(capsys):
    code, report = run_json(capsys, ["construct", "plane", "--coloring", "RRBB"])
    assert code == 0
    assert report["result"]["count"] == 0
    assert report["result"]["matching"]["text"] == "0-3,1-2"


def test_compose_command(capsys):
    code, report = run_json(
        capsys, ["compose", "--coloring", "RB" * 7, "--k", "9"]
    )
    assert code == 0
    result = report["result"]
    assert result["k"] == 9
    assert result["achievable_max"] == 15
    assert result["targets"] == [9]
    assert len(result["windows"]) == 1
    from convexmatch import crossing_number
    from convexmatch.cli import parse_matching
    rebuilt = parse_matching(result["matching"]["text"])
    assert crossing_number(Coloring("RB" * 7), rebuilt) == 9


def test_sweep_command(capsys):
    code, report = run_json(capsys, ["sweep", "--n", "4"])
    assert code == 0
    result = report["result"]
    assert result["value"] == 4
    assert result["minimizers"] == ["BBBRRBRR", "BBRRBBRR", "BRBRBRBR"]


# ------------------------------------------------------------------ atlas


def test_atlas_golden_n2(tmp_path, capsys):
    out = tmp_path / "atlas.csv"
    code, report = run_json(capsys, ["atlas", "--n", "2", "--out", str(out)])
    assert code == 0
    assert out.read_bytes() == (
        b"n,coloring,orbit_size,max_crossings,spectrum_min,spectrum_max,"
        b"missing_values\r\n"
        b"2,BBRR,4,1,0,1,\r\n"
        b"2,BRBR,2,0,0,0,\r\n"
    )
    sidecar = json.loads((tmp_path / "atlas.csv.json").read_text())
    assert sidecar["orbit_count"] == 2
    assert sidecar["min_max_crossings"] == 0
    assert sidecar["minimizers"] == ["BRBR"]
    assert not (tmp_path / "atlas.csv.journal").exists()
    assert report["result"]["orbit_count"] == 2


def test_atlas_requires_out(capsys):
    assert main(["atlas", "--n", "2"]) == 2
    capsys.readouterr()


def test_atlas_resumes_from_journal(tmp_path):
    out = tmp_path / "atlas.csv"
    journal = tmp_path / "atlas.csv.journal"
    # a sentinel value proves the row is replayed, not recomputed
    fake = {
        "n": 2,
        "coloring": "BBRR",
        "orbit_size": 4,
        "max_crossings": 999,
        "spectrum_min": 0,
        "spectrum_max": 999,
        "missing_values": [],
    }
    journal.write_text(json.dumps(fake) + "\n")
    atlas(2, str(out))
    content = out.read_text()
    assert "2,BBRR,4,999,0,999," in content
    assert "2,BRBR,2,0,0,0," in content
    assert not journal.exists()


def test_atlas_rows_agree_with_library(tmp_path):
    import csv as csv_module

    from convexmatch import all_symmetries, max_crossing, spectrum

    out = tmp_path / "atlas3.csv"
    atlas(3, str(out))
    with open(out, newline="") as handle:
        rows = list(csv_module.DictReader(handle))
    assert len(rows) == 3
    for row in rows:
        col = Coloring(row["coloring"])
        spec = spectrum(col)
        value, _ = max_crossing(col)
        assert int(row["max_crossings"]) == value
        assert int(row["spectrum_min"]) == spec.achievable[0]
        assert int(row["spectrum_max"]) == spec.achievable[-1]
        orbit = {sym.apply(col).colors for sym in all_symmetries(col.size)}
        assert int(row["orbit_size"]) == len(orbit)


# ----------------------------------------------------------------- render


def test_render_svg_structure(tmp_path, capsys):
    out = tmp_path / "m.svg"
    code = main([
        "render", "--coloring", "RRBB", "--matching", "0-2,1-3",
        "--out", str(out),
    ])
    assert code == 0
    capsys.readouterr()
    svg = out.read_text()
    assert svg.startswith("<?xml")
    assert 'width="440" height="470"' in svg
    assert svg.count('stroke="#333333"') == 2  # one line per edge
    assert svg.count('r="7"') == 4  # one dot per point
    assert svg.count("#cc3333") == 2 and svg.count("#3366cc") == 2
    assert "crossings: 1" in svg


def test_render_rejects_invalid_matching(tmp_path, capsys):
    out = tmp_path / "bad.svg"
    code = main([
        "render", "--coloring", "RRBB", "--matching", "0-1,2-3",
        "--out", str(out),
    ])
    assert code == 2
    assert not out.exists()
    capsys.readouterr()


def test_render_svg_function_validates():
    with pytest.raises(InvalidMatching):
        render_svg(Coloring("RRBB"), Matching.from_pairs([(0, 1), (2, 3)]))
