import json

from charprod.cli import main


def run_cli(argv, capsys):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_catalog_lists_builtins(capsys):
    code, out, _ = run_cli(["catalog"], capsys)
    assert code == 0
    for gid in ("dihedral8", "sl23", "heisenberg3"):
        assert gid in out


def test_catalog_json(capsys):
    code, out, _ = run_cli(["catalog", "--format", "json"], capsys)
    assert code == 0
    payload = json.loads(out)
    assert any(entry["id"] == "quaternion16" for entry in payload)


def test_table_text_and_json(capsys):
    code, out, _ = run_cli(["table", "dihedral8"], capsys)
    assert code == 0 and "sizes" in out

    code, out, _ = run_cli(["table", "dihedral8", "--format", "json"], capsys)
    payload = json.loads(out)
    assert payload["order"] == 8
    assert sorted(r["degree"] for r in payload["irreducibles"]) == [1, 1, 1, 1, 2]


def test_product_fixture(capsys):
    code, out, _ = run_cli(
        ["product", "dihedral8", "--chi", "4", "--psi", "4", "--format", "json"], capsys
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["eta"] == 4
    assert [c["degree"] for c in payload["constituents"]] == [1, 1, 1, 1]
    assert all(c["multiplicity"] == 1 for c in payload["constituents"])


def test_product_bad_index(capsys):
    code, _, err = run_cli(["product", "dihedral8", "--chi", "9", "--psi", "0"], capsys)
    assert code == 2 and "charprod" in err


def test_verify_single_group(capsys):
    code, out, _ = run_cli(
        ["verify", "heisenberg3", "--statements", "A,B,C,lemma,bound"], capsys
    )
    assert code == 0
    assert "fail 0" in out


def test_verify_json_round_trip(capsys):
    code, out, _ = run_cli(
        ["verify", "dihedral8", "--statements", "A,bound", "--format", "json"], capsys
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["groups"][0]["group"]["id"] == "dihedral8"
    assert payload["groups"][0]["summary"]["fail"] == 0


def test_verify_unknown_statement(capsys):
    code, _, err = run_cli(["verify", "dihedral8", "--statements", "Z"], capsys)
    assert code == 2 and "unknown statements" in err


def test_verify_needs_source(capsys):
    code, _, err = run_cli(["verify"], capsys)
    assert code == 2


def test_witness_command(capsys):
    code, out, _ = run_cli(["witness", "heisenberg3", "--chi", "9"], capsys)
    assert code == 0
    assert "order 9" in out and "(alpha^2)^G" in out


def test_group_file_source(tmp_path, capsys):
    path = tmp_path / "d8.gens"
    path.write_text("# dihedral of order 8\n(1 2 3 4)\n(1 3)\n")
    code, out, _ = run_cli(["table", str(path), "--format", "json"], capsys)
    assert code == 0
    assert json.loads(out)["order"] == 8


def test_parse_error_exit_code(tmp_path, capsys):
    path = tmp_path / "bad.gens"
    path.write_text("(1 2)(3\n")
    code, _, err = run_cli(["table", str(path)], capsys)
    assert code == 2 and "charprod" in err


def test_unknown_builtin(capsys):
    code, _, err = run_cli(["table", "nosuchgroup"], capsys)
    assert code == 2 and "unknown catalog id" in err


def test_usage_error(capsys):
    assert main(["frobnicate"]) == 2


def test_output_file(tmp_path, capsys):
    out_path = tmp_path / "report.json"
    code = main(["verify", "cyclic4", "--statements", "A", "--format", "json",
                 "--output", str(out_path)])
    assert code == 0
    payload = json.loads(out_path.read_text())
    assert payload["groups"][0]["group"]["order"] == 4


def test_byte_identical_runs(capsys):
    a = run_cli(["verify", "dihedral8", "--statements", "A,B,C,lemma,bound",
                 "--format", "json"], capsys)
    b = run_cli(["verify", "dihedral8", "--statements", "A,B,C,lemma,bound",
                 "--format", "json"], capsys)
    assert a == b


def test_jobs_do_not_change_output(capsys):
    argv = ["verify", "cyclic8", "--statements", "A,B", "--format", "json"]
    a = run_cli(argv, capsys)
    b = run_cli(argv + ["--jobs", "4"], capsys)
    assert a[0] == b[0] == 0
    assert a[1] == b[1]


def test_closure_cap_env(tmp_path, capsys, monkeypatch):
    path = tmp_path / "s7.gens"
    path.write_text("(1 2 3 4 5 6 7)\n(1 2)\n")
    monkeypatch.setenv("CHARPROD_CLOSURE_CAP", "100")
    code, _, err = run_cli(["table", str(path)], capsys)
    assert code == 2 and "cap" in err
