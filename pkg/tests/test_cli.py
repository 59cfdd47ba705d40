import json

import numpy as np
import pytest

from liemetric import catalog
from liemetric.cli import EXIT_OK, EXIT_PARSE, EXIT_PRECONDITION, algebra_to_dict, main


def write_catalog(tmp_path, name, filename, **params):
    path = tmp_path / filename
    path.write_text(json.dumps(algebra_to_dict(catalog(name, **params))), encoding="utf-8")
    return path


def run(args):
    return main([str(a) for a in args])


def test_validate_ok(tmp_path, capsys):
    path = write_catalog(tmp_path, "heisenberg", "h1.json", n=1)
    assert run(["validate", path]) == EXIT_OK
    assert "OK" in capsys.readouterr().out


def test_validate_degenerate_metric(tmp_path, capsys):
    doc = {"dim": 2, "brackets": [], "metric": [[1.0, 0.0], [0.0, 0.0]]}
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(doc), encoding="utf-8")
    assert run(["validate", path]) == EXIT_PARSE
    assert "nondegeneracy" in capsys.readouterr().err


def test_validate_bad_bracket_order(tmp_path, capsys):
    doc = {"dim": 2, "brackets": [{"i": 1, "j": 0, "coeffs": {"0": 1.0}}],
           "metric": [[1.0, 0.0], [0.0, 1.0]]}
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(doc), encoding="utf-8")
    assert run(["validate", path]) == EXIT_PARSE
    assert "ParseError" in capsys.readouterr().err


def test_validate_jacobi_failure(tmp_path):
    doc = {"dim": 3,
           "brackets": [{"i": 0, "j": 1, "coeffs": {"2": 1.0}},
                        {"i": 0, "j": 2, "coeffs": {"0": 1.0}}],
           "metric": np.eye(3).tolist()}
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(doc), encoding="utf-8")
    assert run(["validate", path]) == EXIT_PARSE


def test_validate_malformed_json(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text("{not json", encoding="utf-8")
    assert run(["validate", path]) == EXIT_PARSE


def test_report_heisenberg(tmp_path, capsys):
    path = write_catalog(tmp_path, "heisenberg", "h1.json", n=1)
    assert run(["report", path, "--json"]) == EXIT_OK
    report = json.loads(capsys.readouterr().out)
    assert report["classification"]["tag"] == "other"
    assert report["ricci_parallel"]["flag"] is False
    eig = sorted(e["re"] for e in report["ricci_eigenvalues"])
    assert eig[0] == pytest.approx(-1 / 3, abs=1e-12)
    assert eig[1] == pytest.approx(-1 / 3, abs=1e-12)
    assert eig[2] == pytest.approx(1 / 3, abs=1e-12)


def test_report_einstein_solvable(tmp_path, capsys):
    path = write_catalog(tmp_path, "einstein_solvable", "es2.json", n=2)
    assert run(["report", path, "--json"]) == EXIT_OK
    report = json.loads(capsys.readouterr().out)
    assert report["einstein"]["flag"] is True
    assert report["einstein"]["constant"] == pytest.approx(-1.0, abs=1e-12)


def test_report_abelian(tmp_path, capsys):
    path = write_catalog(tmp_path, "abelian", "ab.json", p=0, q=3)
    assert run(["report", path, "--json"]) == EXIT_OK
    report = json.loads(capsys.readouterr().out)
    assert report["classification"]["tag"] == "einstein"
    assert report["classification"]["constant"] == pytest.approx(0.0)
    assert report["ricci_flat"]["flag"] is True
    assert report["ricci_parallel"]["flag"] is True


def test_report_byte_determinism(tmp_path):
    path = write_catalog(tmp_path, "sl_killing", "sl2.json", n=2)
    out1, out2 = tmp_path / "r1.json", tmp_path / "r2.json"
    assert run(["report", path, "--out", out1]) == EXIT_OK
    assert run(["report", path, "--out", out2]) == EXIT_OK
    assert out1.read_bytes() == out2.read_bytes()


def test_report_directory_batch(tmp_path, capsys):
    write_catalog(tmp_path, "heisenberg", "a_h1.json", n=1)
    write_catalog(tmp_path, "abelian", "b_ab.json", p=0, q=2)
    assert run(["report", tmp_path]) == EXIT_OK
    reports = json.loads(capsys.readouterr().out)
    assert [r["file"] for r in reports] == ["a_h1.json", "b_ab.json"]


def test_report_tolerance_override(tmp_path, capsys):
    path = write_catalog(tmp_path, "abelian", "ab.json", p=0, q=2)
    assert run(["report", path, "--json", "--tol-abs", "1e-6"]) == EXIT_OK
    report = json.loads(capsys.readouterr().out)
    assert report["tolerance"]["abs"] == pytest.approx(1e-6)


def test_double_extend_pipeline(tmp_path):
    base = write_catalog(tmp_path, "abelian", "base.json", p=0, q=2)
    ext = tmp_path / "ext.json"
    ext.write_text(json.dumps({"D": [[1.0, 0.0], [0.0, 1.0]]}), encoding="utf-8")
    out = tmp_path / "ext_out.json"
    assert run(["double-extend", base, ext, "--out", out]) == EXIT_OK
    sidecar = json.loads((tmp_path / "ext_out.json.sidecar.json").read_text())
    assert sidecar["delta"] == [0.0, 0.0]
    assert sidecar["gamma"] == pytest.approx(-2.0)
    assert all(abs(v) < 1e-12 for v in sidecar["conditions"].values())
    assert sidecar["conditions_verdict"] is True


def test_double_extend_invalid_spec_exit_code(tmp_path, capsys):
    base = write_catalog(tmp_path, "abelian", "base.json", p=0, q=2)
    ext = tmp_path / "ext.json"
    ext.write_text(json.dumps({"D": [[1.0, 0.0], [0.0, 1.0]],
                               "K": [[0.0, 1.0], [-1.0, 0.0]]}), encoding="utf-8")
    assert run(["double-extend", base, ext]) == EXIT_PRECONDITION
    assert "compatibility" in capsys.readouterr().err


def test_complexify_type1_end_to_end(tmp_path, capsys):
    base = write_catalog(tmp_path, "affine_plane", "aff.json")
    out = tmp_path / "c.json"
    assert run(["complexify", base, "--type1", "0", "1", "--out", out]) == EXIT_OK
    sidecar = json.loads((tmp_path / "c.json.sidecar.json").read_text())
    assert sidecar["lambda"] == pytest.approx(0.0, abs=1e-12)
    assert sidecar["mu"] == pytest.approx(1.0, abs=1e-12)
    assert run(["report", out, "--json"]) == EXIT_OK
    report = json.loads(capsys.readouterr().out)
    assert report["classification"]["tag"] == "type_I"
    assert report["classification"]["mu"] == pytest.approx(1.0, abs=1e-10)
    assert report["type_I"] is not None


def test_complexify_plain(tmp_path, capsys):
    base = write_catalog(tmp_path, "affine_plane", "aff.json")
    assert run(["complexify", base]) == EXIT_OK
    doc = json.loads(capsys.readouterr().out)
    assert doc["algebra"]["dim"] == 4
    assert "J" in doc["sidecar"]


def test_complexify_type1_rejects_non_einstein(tmp_path):
    base = write_catalog(tmp_path, "heisenberg", "h1.json", n=1)
    assert run(["complexify", base, "--type1", "0", "1"]) == EXIT_PRECONDITION


def test_decompose_round_trip(tmp_path, capsys):
    base = write_catalog(tmp_path, "abelian", "base.json", p=0, q=2)
    ext = tmp_path / "ext.json"
    ext.write_text(json.dumps({"D": [[1.0, 0.0], [0.0, 1.0]]}), encoding="utf-8")
    built = tmp_path / "built.json"
    assert run(["double-extend", base, ext, "--out", built]) == EXIT_OK
    recovered = tmp_path / "recovered.json"
    assert run(["decompose", built, "--out", recovered]) == EXIT_OK
    doc = json.loads(recovered.read_text())
    assert doc["dim"] == 2
    assert doc["brackets"] == []
    assert np.allclose(doc["metric"], np.eye(2))
    sidecar = json.loads((tmp_path / "recovered.json.sidecar.json").read_text())
    assert np.asarray(sidecar["D"]).shape == (2, 2)


def test_decompose_precondition_exit(tmp_path):
    path = write_catalog(tmp_path, "abelian", "flat.json", p=1, q=2)
    assert run(["decompose", path]) == EXIT_PRECONDITION


def test_catalog_round_trip_all_entries(tmp_path, capsys):
    cases = [
        ("heisenberg", {"n": 1}, {"tag": "other"}),
        ("heisenberg", {"n": 3}, {"tag": "other"}),
        ("einstein_solvable", {"n": 1}, {"tag": "einstein", "constant": -1.0}),
        ("sl_killing", {"n": 2}, {"tag": "einstein", "constant": -0.25}),
        ("sl_complex_typeI", {"n": 2, "lam": 1, "mu": 2}, {"tag": "type_I", "mu": 2.0}),
        ("affine_plane", {}, {"tag": "einstein", "constant": -1.0}),
        ("abelian", {"p": 1, "q": 2}, {"tag": "einstein", "constant": 0.0}),
        ("double_ext_demo", {"kind": "solvable"}, {"tag": "type_II"}),
        ("double_ext_demo", {"kind": "nilpotent"}, {"tag": "type_II"}),
    ]
    for idx, (name, params, expected) in enumerate(cases):
        out = tmp_path / f"cat{idx}.json"
        args = ["catalog", name, "--out", out]
        if params:
            args += ["--params", json.dumps(params)]
        assert run(args) == EXIT_OK, (name, params)
        assert run(["report", out, "--json"]) == EXIT_OK
        report = json.loads(capsys.readouterr().out)
        cls = report["classification"]
        assert cls["tag"] == expected["tag"], (name, params)
        if "constant" in expected:
            assert cls["constant"] == pytest.approx(expected["constant"], abs=1e-10)
        if "mu" in expected:
            assert cls["mu"] == pytest.approx(expected["mu"], abs=1e-9)


def test_catalog_unknown_and_bad_params(tmp_path):
    assert run(["catalog", "nonsense"]) == EXIT_PRECONDITION
    assert run(["catalog", "heisenberg", "--params", '{"n": 0}']) == EXIT_PRECONDITION
    assert run(["catalog", "heisenberg", "--params", "not json"]) == EXIT_PRECONDITION


def test_verification_failures_map_to_exit_4(tmp_path, monkeypatch, capsys):
    from liemetric import cli as cli_mod
    from liemetric.errors import StructureMismatchError

    def boom(m, tol):
        raise StructureMismatchError("bracket data outside the double-extension pattern")

    monkeypatch.setattr(cli_mod, "decompose_double_extension", boom)
    path = write_catalog(tmp_path, "double_ext_demo", "de.json", kind="nilpotent")
    assert run(["decompose", path]) == 4
    assert "StructureMismatchError" in capsys.readouterr().err


def test_algebra_file_round_trip_exact(tmp_path):
    # shortest-repr floats parse back to identical doubles
    m = catalog("heisenberg", n=2)
    path = tmp_path / "h2.json"
    path.write_text(json.dumps(algebra_to_dict(m)), encoding="utf-8")
    doc = json.loads(path.read_text())
    coeff = doc["brackets"][0]["coeffs"]["4"]
    assert coeff == np.sqrt(2.0 / 4.0)
