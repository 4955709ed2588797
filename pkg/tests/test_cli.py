"""Command-line contract: exit codes, JSON documents, determinism."""

import json

import pytest

from nsjack.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


def test_singular_verify_small(capsys):
    code, out = run(capsys, "--format", "json", "singular", "verify", "--m", "1", "--k", "2")
    assert code == 0
    doc = json.loads(out)
    assert doc["verified"] and doc["family_size"] == 2
    assert doc["kappa"] == "1/3"
    assert len(doc["members"]) == 2
    for member in doc["members"]:
        assert member["pole_free"]
        assert all(img == [] for img in member["dunkl_images"])


def test_example_n5_cli(capsys):
    code, out = run(capsys, "--format", "json", "example", "n5")
    assert code == 0
    doc = json.loads(out)
    assert doc["first_label_monomials"] == 100
    assert doc["combination_singular"] and doc["combination_invariant"]


def test_uniq_check_cli(capsys):
    code, out = run(capsys, "--format", "json", "uniq", "check", "--m", "1", "--k", "2")
    assert code == 0
    doc = json.loads(out)
    assert doc["unique"]
    assert doc["enumeration_size"] == 6


def test_uniq_check_variant(capsys):
    code, out = run(
        capsys,
        "--format", "json",
        "uniq", "check", "--m", "2", "--k", "2", "--s", "1", "--variant", "2",
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["unique"]
    assert doc["window"] == [0, 1, 1, 0]
    assert doc["spectral_window"] == ["0", "1", "2", "1"]


def test_norms_cli(capsys):
    code, out = run(capsys, "--format", "json", "norms", "--m", "1", "--k", "2")
    assert code == 0
    doc = json.loads(out)
    assert doc["steps_checked"] > 0
    assert {m["gamma"] for m in doc["members"]} == {"1", "3/4"}


def test_mu_verify_cli_seeded(capsys):
    code, out = run(
        capsys,
        "--format", "json",
        "mu", "verify", "--m", "1", "--k", "2",
        "--degree", "1", "--trials", "2", "--seed", "3",
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["seed"] == 3 and doc["all_commute"]


def test_brickmap_cli(tmp_path, capsys):
    path = tmp_path / "tableau.json"
    path.write_text(json.dumps([[8, 6, 5, 2], [7, 4, 3, 1]]))
    code, out = run(
        capsys, "--format", "json", "brickmap", "--tableau-json", str(path), "--m", "2"
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["beta"] == [1, 1, 1, 0, 1, 0, 0, 0]
    assert doc["tableau"] == [[8, 6], [7, 5], [4, 2], [3, 1]]


def test_jack_construct_cli(capsys):
    code, out = run(
        capsys,
        "--format", "json",
        "jack", "construct",
        "--alpha", "1,1,0,0",
        "--tableau-contents=-3,-2,-1,0",
        "--kappa", "1/3",
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["alpha"] == [1, 1, 0, 0]
    assert "specialized" in doc and "pole" not in doc


def test_jack_construct_cli_pole(capsys):
    code, out = run(
        capsys,
        "--format", "json",
        "jack", "construct",
        "--alpha", "0,1,0,1",
        "--tableau-contents=-3,-2,-1,0",
        "--kappa", "1/3",
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["pole"] and doc["offending_exponents"] == [[0, 0, 1, 1]]


def test_apply_operator_cli(tmp_path, capsys):
    from nsjack.vectorpoly import VectorPoly
    from nsjack.ratfunc import RatFunc

    poly = VectorPoly.monomial((2, 2), (0, 0, 0, 0), 0, RatFunc.from_int(1))
    path = tmp_path / "poly.json"
    path.write_text(json.dumps({"shape": [2, 2], "poly": poly.to_json()}))
    code, out = run(
        capsys,
        "--format", "json",
        "apply-operator", "--op", "cherednik-prime", "--index", "2",
        "--input", str(path),
    )
    assert code == 0
    doc = json.loads(out)
    # constants are eigenfunctions; entry 2 of the first tableau has content 1
    assert doc["result"] == [
        {"exp": [0, 0, 0, 0], "tableau": [0, 1, -1, 0], "coeff": {"num": ["1"], "den": ["1"]}}
    ]


def test_byte_identical_output(capsys):
    argv = ["--format", "json", "norms", "--m", "1", "--k", "2"]
    _, out1 = run(capsys, *argv)
    _, out2 = run(capsys, *argv)
    assert out1 == out2


def test_usage_error_exit_code():
    with pytest.raises(SystemExit) as info:
        main(["singular", "verify", "--m", "1"])  # missing --k
    assert info.value.code == 2
    with pytest.raises(SystemExit) as info:
        main(["singular", "verify", "--m", "1", "--k", "2", "--bogus"])
    assert info.value.code == 2


def test_output_file(tmp_path, capsys):
    target = tmp_path / "report.json"
    code = main(
        ["--format", "json", "--output", str(target), "uniq", "check", "--m", "1", "--k", "2"]
    )
    assert code == 0
    doc = json.loads(target.read_text())
    assert doc["unique"]


def test_text_format_renders_tableaux(capsys):
    code, out = run(capsys, "singular", "verify", "--m", "1", "--k", "2")
    assert code == 0
    assert "4 2" in out and "beta" in out


def test_certificate_round_trips_through_schema(capsys):
    import pathlib

    import jsonschema

    schema_dir = pathlib.Path(__file__).resolve().parent.parent / "docs" / "schemas"
    store = {}
    for path in schema_dir.glob("*.schema.json"):
        doc = json.loads(path.read_text())
        store[doc["$id"]] = doc
    _, out = run(capsys, "--format", "json", "singular", "verify", "--m", "1", "--k", "2")
    cert = json.loads(out)
    resolver = jsonschema.RefResolver(
        base_uri="urn:nsjack:certificate",
        referrer=store["urn:nsjack:certificate"],
        store=store,
    )
    jsonschema.validate(
        cert, store["urn:nsjack:certificate"], resolver=resolver
    )
    # lossless: re-serializing the parsed document is identical
    assert json.dumps(cert, indent=2) + "\n" == out
