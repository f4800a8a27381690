"""CLI pipelines: schemas, exit codes, and deterministic output."""

import json

import pytest

from conftest import canon
from tropnc import cli, ncfan, planar, pluecker
from tropnc.combinat import ksubset


def run_cli(capsys, *argv) -> tuple[int, str]:
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out


def write_json(tmp_path, name, payload) -> str:
    path = tmp_path / name
    path.write_text(json.dumps(payload))
    return str(path)


def weight_two_vector_payload():
    pi = planar.planar_combination(
        3, 6, {(1, 3, 5): -1, (2, 3, 5): 1, (1, 4, 5): 1, (1, 3, 6): 1}
    )
    return pluecker.to_json_dict(pi)


def test_duality_pass(capsys):
    code, out = run_cli(capsys, "duality", "--k", "2", "--n", "5")
    assert code == 0
    payload = json.loads(out)
    assert payload["ok"] and payload["size"] == 5 and payload["failures"] == []


def test_duality_4_7(capsys):
    code, out = run_cli(capsys, "duality", "--k", "4", "--n", "7")
    assert code == 0
    payload = json.loads(out)
    assert payload["ok"] and payload["size"] == 28


def test_duality_parallel_matches_serial(capsys):
    code1, out1 = run_cli(capsys, "duality", "--k", "3", "--n", "6")
    code2, out2 = run_cli(capsys, "duality", "--k", "3", "--n", "6", "--threads", "4")
    assert (code1, code2) == (0, 0)
    assert out1 == out2


def test_decompose_pipeline(tmp_path, capsys):
    t = ncfan.t_vector(ksubset(6, [1, 4, 5])) + ncfan.t_vector(ksubset(6, [2, 3, 6]))
    path = write_json(tmp_path, "t.json", ncfan.to_json_dict(t))
    code, out = run_cli(capsys, "decompose", "--in", path)
    assert code == 0
    payload = json.loads(out)
    assert payload["entries"] == [["1,4,5", "1"], ["2,3,6", "1"]]


def test_decompose_zero(tmp_path, capsys):
    path = write_json(tmp_path, "t.json", ncfan.to_json_dict(ncfan.TPoint.zero(3, 6)))
    code, out = run_cli(capsys, "decompose", "--in", path)
    assert code == 0
    assert json.loads(out)["entries"] == []


def test_weight_report(tmp_path, capsys):
    path = write_json(tmp_path, "pi.json", weight_two_vector_payload())
    code, out = run_cli(capsys, "weight", "--in", path)
    assert code == 0
    payload = json.loads(out)
    assert payload == {"pk_weight": "2", "nc_weight": "2", "bridge": "2", "agree": True}


def test_psi_rho_round_trip(tmp_path, capsys):
    t = ncfan.TPoint.of(3, 6, [[2, 0, 1], [1, 1, 0]])
    tpath = write_json(tmp_path, "t.json", ncfan.to_json_dict(t))
    code, out = run_cli(capsys, "rho", "--in", tpath)
    assert code == 0
    pipath = write_json(tmp_path, "pi.json", json.loads(out))
    code, out = run_cli(capsys, "psi", "--in", pipath)
    assert code == 0
    assert ncfan.from_json_dict(json.loads(out)) == t


def test_bounded_two_block(tmp_path, capsys):
    from tropnc.troplin import central_pluecker_vector

    eta = central_pluecker_vector(ksubset(6, [2, 3, 6]))
    path = write_json(tmp_path, "pi.json", pluecker.to_json_dict(eta))
    code, out = run_cli(capsys, "bounded", "--in", path)
    assert code == 0
    payload = json.loads(out)
    got = {tuple(v) for v in (canon(list(map_fraction(w))) for w in payload["vertices"])}
    from fractions import Fraction

    want = {
        canon([-1, -1, -1, Fraction(-1, 3), Fraction(-1, 3), Fraction(-1, 3)]),
        canon([Fraction(-2, 3)] * 3 + [-1] * 3),
    }
    assert got == want
    assert payload["within_dilate"] is True
    assert payload["edges"] == [[0, 1]]


def map_fraction(row):
    from fractions import Fraction

    return [Fraction(v) for v in row]


def test_diameter_command(tmp_path, capsys):
    path = write_json(tmp_path, "pi.json", weight_two_vector_payload())
    code, out = run_cli(capsys, "diameter", "--in", path)
    assert code == 0
    payload = json.loads(out)
    assert payload["pk_weight"] == "2"
    assert payload["within_dilate"] is True


def test_verify_suite(tmp_path, capsys):
    code, out = run_cli(capsys, "verify", "--k", "2", "--n", "5", "--seed", "3")
    assert code == 0
    payload = json.loads(out)
    assert payload["ok"] and all(c["ok"] for c in payload["checks"])


def test_byte_identical_reruns(tmp_path, capsys):
    path = write_json(tmp_path, "pi.json", weight_two_vector_payload())
    _, out1 = run_cli(capsys, "weight", "--in", path)
    _, out2 = run_cli(capsys, "weight", "--in", path)
    assert out1 == out2
    _, v1 = run_cli(capsys, "verify", "--k", "2", "--n", "6", "--seed", "9")
    _, v2 = run_cli(capsys, "verify", "--k", "2", "--n", "6", "--seed", "9")
    assert v1 == v2


def test_schema_error_float_rejected(tmp_path, capsys):
    payload = {"k": 3, "n": 6, "rows": [[0.5, 1, 0], [0, 1, 1]]}
    path = write_json(tmp_path, "t.json", payload)
    code = cli.main(["decompose", "--in", path])
    err = capsys.readouterr().err
    assert code == 2
    assert "/rows/0/0" in err


def test_schema_error_missing_key(tmp_path, capsys):
    path = write_json(tmp_path, "bad.json", {"k": 3, "rows": []})
    code = cli.main(["psi", "--in", path])
    err = capsys.readouterr().err
    assert code == 2 and "/n" in err


def test_schema_error_partial_entries(tmp_path, capsys):
    path = write_json(tmp_path, "bad.json", {"k": 2, "n": 4, "entries": {"1,2": "0"}})
    code = cli.main(["weight", "--in", path])
    assert code == 2


def test_mathematical_failure_exit_code(tmp_path, capsys):
    # a non-positive vector has no bounded-complex guarantee: exit 1
    h124 = planar.planar_basis_vector(ksubset(6, [1, 2, 4]))
    h356 = planar.planar_basis_vector(ksubset(6, [3, 5, 6]))
    path = write_json(tmp_path, "pi.json", pluecker.to_json_dict(h124 + h356))
    code = cli.main(["bounded", "--in", path])
    err = capsys.readouterr().err
    assert code == 1 and "not positive tropical" in err


def test_desk_scale_guard(capsys):
    code = cli.main(["duality", "--k", "6", "--n", "14"])
    err = capsys.readouterr().err
    assert code == 2 and "--force" in err


def test_output_file(tmp_path, capsys):
    out_path = tmp_path / "result.json"
    code = cli.main(["duality", "--k", "2", "--n", "5", "--out", str(out_path)])
    assert code == 0
    assert json.loads(out_path.read_text())["ok"]
