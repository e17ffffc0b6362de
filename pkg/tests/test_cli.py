import json

from ncfgl.cli import run


def invoke(capsys, *argv):
    code = run(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_fgl_json_contains_first_coefficient(capsys):
    code, out, _ = invoke(capsys, "fgl", "--degree", "3", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["order"] == 3
    entry = next(e for e in payload["entries"] if e["i"] == 1 and e["j"] == 1)
    assert entry["element"] == [{"word": [1], "coeff": "2"}]


def test_fgl_degree_zero_is_usage_error(capsys):
    code, _, err = invoke(capsys, "fgl", "--degree", "0")
    assert code == 2
    assert "order >= 2" in err


def test_unknown_subcommand_is_usage_error(capsys):
    assert run(["frobnicate"]) == 2


def test_unknown_flag_is_usage_error(capsys):
    assert run(["fgl", "--банан"]) == 2


def test_output_is_byte_deterministic(capsys):
    first = invoke(capsys, "fgl", "--degree", "4", "--format", "json")
    second = invoke(capsys, "fgl", "--degree", "4", "--format", "json")
    assert first == second
    third = invoke(capsys, "verify", "--degree", "3", "--samples", "10")
    fourth = invoke(capsys, "verify", "--degree", "3", "--samples", "10")
    assert third == fourth


def test_inverse_subcommand(capsys):
    code, out, _ = invoke(capsys, "inverse", "--degree", "4", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["gamma1"] == "-1"
    c1 = next(e for e in payload["entries"] if e["k"] == 1)
    assert c1["element"] == [{"word": [1], "coeff": "2"}]


def test_commutator_subcommand(capsys):
    code, out, _ = invoke(
        capsys, "commutator", "--word", "1", "--k", "1", "--degree", "6", "--format", "json"
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["valuation"] == 3
    assert payload["ok"] is True


def test_expand_subcommand(capsys):
    code, out, _ = invoke(capsys, "expand", "--assign", "x=-x", "--degree", "4", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    first = payload["terms"][0]
    assert first["exponents"] == [1]
    assert first["element"] == [{"word": [], "coeff": "-1"}]


def test_steenrod_subcommand_t2(capsys):
    code, out, _ = invoke(
        capsys, "steenrod", "--prime", "3", "--op", "P1", "--gen", "t2", "--format", "json"
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["result"] == [{"monomial": [[1, 3]], "coeff": "2"}]


def test_steenrod_subcommand_word(capsys):
    code, out, _ = invoke(
        capsys,
        "steenrod",
        "--prime", "2", "--op", "Sq1", "--word", "1,1,1", "--profile", "real",
        "--format", "json",
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["result"] == [{"word": [1, 1], "coeff": "1"}]


def test_certificate_bp_exit_codes(capsys):
    code, out, _ = invoke(capsys, "certificate", "bp", "--prime", "3")
    assert code == 0
    assert "INFEASIBLE" in out
    code, _, _ = invoke(capsys, "certificate", "bp", "--prime", "2")
    assert code == 2


def test_certificate_hf2(capsys):
    code, out, _ = invoke(capsys, "certificate", "hf2", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["verdict"] == "INFEASIBLE"
    assert payload["centralizers"]["z1"] == ["z1*z1*z1"]


def test_poincare_profile(capsys):
    code, out, _ = invoke(capsys, "poincare", "--degree", "8", "--format", "json")
    assert code == 0
    assert json.loads(out)["dims"] == [1, 0, 1, 0, 2, 0, 4, 0, 8]


def test_poincare_explicit_degrees(capsys):
    code, out, _ = invoke(
        capsys, "poincare", "--poly", "2,6", "--degree", "6", "--format", "json"
    )
    assert code == 0
    assert json.loads(out)["dims"] == [1, 0, 1, 0, 1, 0, 2]


def test_split_subcommand(capsys):
    code, out, _ = invoke(capsys, "split", "--prime", "2", "--degree", "12", "--format", "json")
    assert code == 0
    dims = json.loads(out)["dims"]
    assert [dims[2 * d] for d in range(7)] == [1, 0, 1, 1, 4, 7, 14]


def test_parity_subcommand(capsys):
    code, out, _ = invoke(capsys, "parity", "--prime", "2", "--degree", "20", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["least_odd_degree"] == 9
    assert payload["verdict"] == "NOT-ISOMORPHIC"


def test_rational_subcommand(capsys):
    code, out, _ = invoke(capsys, "rational", "--degree", "10", "--format", "json")
    assert code == 0
    assert json.loads(out)["match"] is True


def test_verify_subcommand(capsys):
    code, out, _ = invoke(
        capsys, "verify", "--degree", "4", "--samples", "20", "--format", "json"
    )
    assert code == 0
    payload = json.loads(out)
    assert all(payload["checks"].values())


def test_out_flag_writes_file(tmp_path, capsys):
    target = tmp_path / "table.json"
    code, out, _ = invoke(
        capsys, "fgl", "--degree", "3", "--format", "json", "--out", str(target)
    )
    assert code == 0
    assert out == ""
    on_disk = json.loads(target.read_text())
    assert on_disk["order"] == 3


def test_json_round_trips_through_schema(capsys):
    # FGL entries rebuild into the identical table
    from ncfgl import FreeAlgebra, fgl_table

    code, out, _ = invoke(capsys, "fgl", "--degree", "4", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    algebra = FreeAlgebra()
    rebuilt = {
        (e["i"], e["j"]): algebra.from_data(e["element"]) for e in payload["entries"]
    }
    table = fgl_table(4, algebra)
    assert rebuilt == {key: element for key, element in table.items()}
