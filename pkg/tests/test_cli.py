import json

import pytest

from degspec.cli import dumps_report, main

C4_TEXT = "4 4\n0 1\n1 2\n2 3\n3 0\n"
C4_PENDANT_TEXT = "5 5\n0 1\n1 2\n2 3\n3 0\n0 4\n"
ISOLATED_TEXT = "3 1\n0 1\n"


@pytest.fixture()
def c4_file(tmp_path):
    path = tmp_path / "c4.txt"
    path.write_text(C4_TEXT)
    return str(path)


@pytest.fixture()
def pendant_file(tmp_path):
    path = tmp_path / "cp.txt"
    path.write_text(C4_PENDANT_TEXT)
    return str(path)


def test_analyze_json_c4(c4_file, capsys):
    assert main(["analyze", c4_file]) == 0
    report = json.loads(capsys.readouterr().out)
    spectrum = report["degree_adjacency_spectrum"]
    assert max(abs(v - w) for v, w in zip(spectrum, [1, 0, 0, -1])) <= 1e-9
    assert report["graph"]["regular"] is True
    assert report["mesh"][1] == pytest.approx(-1.0)
    assert all(isinstance(x["sound"], bool) for x in report["bound_reports"])


def test_analyze_text_format(c4_file, capsys):
    assert main(["analyze", c4_file, "--format", "text"]) == 0
    out = capsys.readouterr().out
    assert "degree-adjacency spectrum" in out
    assert "0 unsound" in out


def test_analyze_isolated_vertex_exit_2(tmp_path, capsys):
    path = tmp_path / "iso.txt"
    path.write_text(ISOLATED_TEXT)
    assert main(["analyze", str(path)]) == 2
    err = capsys.readouterr().err
    assert "vertex 2" in err and "isolated" in err


def test_analyze_missing_file_exit_2(tmp_path, capsys):
    assert main(["analyze", str(tmp_path / "nope.txt")]) == 2
    assert "error:" in capsys.readouterr().err


def test_analyze_malformed_file_exit_2(tmp_path, capsys):
    path = tmp_path / "bad.txt"
    path.write_text("2 2\n0 1\n0 1\n")
    assert main(["analyze", str(path)]) == 2
    assert "duplicate edge" in capsys.readouterr().err


def test_json_output_round_trips(c4_file, capsys):
    main(["analyze", c4_file])
    first = capsys.readouterr().out
    assert dumps_report(json.loads(first)) + "\n" == first
    main(["analyze", c4_file])
    assert capsys.readouterr().out == first


def test_spectrum_subcommand(c4_file, capsys):
    assert main(["spectrum", c4_file]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["standard_spectrum"][0] == pytest.approx(2.0)
    assert payload["mesh"] is not None


def test_bounds_subcommand(pendant_file, capsys):
    assert main(["bounds", pendant_file]) == 0
    reports = json.loads(capsys.readouterr().out)
    assert all(r["sound"] for r in reports)
    assert main(["bounds", pendant_file, "--format", "text"]) == 0
    assert "0 violations" in capsys.readouterr().out


def test_altpoly_mesh_literal(capsys):
    code = main(["altpoly", "--mesh", "0.53251,0.25,0,-0.5,-0.78251", "--k", "0..4"])
    assert code == 0
    lines = capsys.readouterr().out.strip().splitlines()
    values = [float(line.split("value_at_1=")[1].split()[0]) for line in lines]
    for got, want in zip(values, [1.0, 1.71, 5.0, 15.2, 58.1]):
        assert got == pytest.approx(want, rel=0.02)


def test_altpoly_graph_file(pendant_file, capsys):
    assert main(["altpoly", "--graph", pendant_file, "--k", "1"]) == 0
    out = capsys.readouterr().out
    assert float(out.split("value_at_1=")[1].split()[0]) == pytest.approx(1.8404, abs=5e-4)


def test_altpoly_k_out_of_range(c4_file, capsys):
    assert main(["altpoly", "--graph", c4_file, "--k", "9"]) == 2
    assert "0..1" in capsys.readouterr().err


def test_altpoly_bad_mesh(capsys):
    assert main(["altpoly", "--mesh", "0.1,0.5"]) == 2
    assert "descend" in capsys.readouterr().err


def test_verify_family(capsys):
    assert main(["verify", "--family", "cycle", "--n", "3..8"]) == 0
    out = capsys.readouterr().out
    assert "summary: 6 graphs" in out and "0 failures" in out


def test_verify_c4_pendant_includes_tightness(capsys):
    assert main(["verify", "--family", "c4_pendant"]) == 0
    out = capsys.readouterr().out
    assert "0 failures" in out


def test_verify_random_deterministic(capsys):
    args = ["verify", "--random", "--n", "5..7", "--count", "3", "--seed", "7"]
    assert main(args) == 0
    first = capsys.readouterr().out
    assert main(args) == 0
    assert capsys.readouterr().out == first
    assert "summary: 3 graphs" in first


def test_verify_random_needs_seed(capsys):
    assert main(["verify", "--random", "--n", "5..7"]) == 2
    assert "seed" in capsys.readouterr().err


def test_verify_family_needs_size(capsys):
    assert main(["verify", "--family", "cycle"]) == 2
    assert "--n" in capsys.readouterr().err


def test_usage_error_exit_code():
    with pytest.raises(SystemExit) as info:
        main(["analyze"])  # missing file argument
    assert info.value.code == 2
