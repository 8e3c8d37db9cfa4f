import json

import pytest

from orbitcodes import GF, parse_mat, parse_poly
from orbitcodes.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_classify_dimension_two(capsys):
    code, out, _ = run(capsys, "classify", "--field", "2", "--n", "2", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["q"] == 2 and data["n"] == 2
    assert len(data["classes"]) == 3
    assert sorted(c["group_order"] for c in data["classes"]) == [1, 2, 3]


def test_classify_dimension_one(capsys):
    code, out, _ = run(capsys, "classify", "--field", "2", "--n", "1", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert len(data["classes"]) == 1
    assert data["classes"][0]["group_order"] == 1


def test_classify_merges_order_seven_cell(capsys):
    code, out, _ = run(capsys, "classify", "--field", "2", "--n", "3", "--format", "json")
    assert code == 0
    data = json.loads(out)
    order7 = [c for c in data["classes"] if c["group_order"] == 7]
    assert len(order7) == 1
    assert order7[0]["divisors"] == [{"p": "1,1,0,1", "e": 1}]


def test_classify_output_round_trips(capsys):
    code, out, _ = run(capsys, "classify", "--field", "2^2", "--n", "2", "--format", "json")
    assert code == 0
    field = GF(2, 2)
    for row in json.loads(out)["classes"]:
        gen = parse_mat(field, row["generator"])
        assert gen.rows == 2
        for div in row["divisors"]:
            assert parse_poly(field, div["p"]).is_monic


def test_classify_text_and_csv(capsys):
    code, text, _ = run(capsys, "classify", "--field", "2", "--n", "2")
    assert code == 0 and "classes of GL_2(F_2): 3" in text
    code, csv_out, _ = run(capsys, "classify", "--field", "2", "--n", "2", "--format", "csv")
    assert code == 0
    assert csv_out.splitlines()[0] == "class,group_order,signature,divisors,generator"
    assert len(csv_out.strip().splitlines()) == 4


def test_classify_deterministic(capsys):
    _, first, _ = run(capsys, "classify", "--field", "3", "--n", "2", "--format", "json")
    _, second, _ = run(capsys, "classify", "--field", "3", "--n", "2", "--format", "json")
    assert first == second


def test_classify_resource_guard(capsys):
    code, _, err = run(capsys, "classify", "--field", "2", "--n", "30")
    assert code == 2
    assert "budget" in err


def test_classify_out_file(tmp_path, capsys):
    target = tmp_path / "classes.json"
    code, out, _ = run(
        capsys, "classify", "--field", "2", "--n", "2", "--format", "json", "--out", str(target)
    )
    assert code == 0 and out == ""
    assert json.loads(target.read_text())["n"] == 2


def test_code_singer_line(capsys):
    code, out, _ = run(
        capsys,
        "code", "--field", "2", "--n", "3",
        "--divisors", "1,1,0,1", "--subspace", "1,0,0",
    )
    assert code == 0
    report = json.loads(out)
    assert report["cardinality"] == 7
    assert report["min_distance"] == 2
    assert report["distance_distribution"] == [1, 6]
    assert report["group_order"] == 7
    assert report["lcm_cardinality"] == 7


def test_code_trivial_divisor_gives_singleton(capsys):
    code, out, _ = run(
        capsys,
        "code", "--field", "2", "--n", "2",
        "--divisors", "1,0,1", "--subspace", "1,0;0,1",
    )
    assert code == 0
    report = json.loads(out)
    assert report["cardinality"] == 1
    assert report["min_distance"] is None


def test_code_three_plus_two(capsys):
    code, out, _ = run(
        capsys,
        "code", "--field", "2", "--n", "5",
        "--divisors", "1,1,0,1;1,1,1",
        "--subspace", "1,0,0,0,0;0,0,0,1,0",
    )
    assert code == 0
    report = json.loads(out)
    assert report["cardinality"] == 21
    assert report["min_distance"] == 2
    assert report["bound_literal"] == 4
    assert report["bound_refined"] == 2
    assert report["lcm_cardinality"] == 21
    assert [c["cardinality"] for c in report["components"]] == [7, 3]


def test_code_powered_divisor_is_factored(capsys):
    # x^2+1 = (x+1)^2 over GF(2) is accepted as a prime-power block
    code, out, _ = run(
        capsys,
        "code", "--field", "2", "--n", "2",
        "--divisors", "1,0,1", "--subspace", "1,0",
    )
    assert code == 0
    report = json.loads(out)
    assert report["components"][0]["p"] == "1,1"
    assert report["components"][0]["e"] == 2


def test_code_rejects_composite_divisor(capsys):
    code, _, err = run(
        capsys,
        "code", "--field", "2", "--n", "2",
        "--divisors", "0,1,1", "--subspace", "1,0",
    )
    assert code == 2
    assert "power of a single irreducible" in err or "parse error" in err


def test_code_rejects_degree_mismatch(capsys):
    code, _, err = run(
        capsys,
        "code", "--field", "2", "--n", "4",
        "--divisors", "1,1,0,1", "--subspace", "1,0,0,0",
    )
    assert code == 2
    assert "sum to" in err


def test_code_reports_parse_position(capsys):
    code, _, err = run(
        capsys,
        "code", "--field", "2", "--n", "3",
        "--divisors", "1,Q,0,1", "--subspace", "1,0,0",
    )
    assert code == 2
    assert "position 2" in err


def test_code_csv(capsys):
    code, out, _ = run(
        capsys,
        "code", "--field", "2", "--n", "3",
        "--divisors", "1,1,0,1", "--subspace", "1,0,0", "--format", "csv",
    )
    assert code == 0
    header, row = out.strip().splitlines()
    assert header.startswith("q,n,k,group_order,cardinality,min_distance")
    assert row.startswith("2,3,1,7,7,2,1|6,2,2,7")


def test_code_deterministic(capsys):
    args = (
        "code", "--field", "2", "--n", "5",
        "--divisors", "1,1,0,1;1,1,1", "--subspace", "1,0,1,1,0;0,1,0,0,1",
    )
    _, first, _ = run(capsys, *args)
    _, second, _ = run(capsys, *args)
    assert first == second


def test_verify_small_run(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "rcf", "--trials", "20", "--seed", "7")
    assert code == 0
    assert "suite rcf:" in out and "ok" in out


def test_verify_vacuous_run(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "all", "--trials", "0")
    assert code == 0
    assert out.count("0 checks") == 5


def test_verify_deterministic(capsys):
    args = ("verify", "--suite", "bounds", "--trials", "6", "--seed", "5")
    _, first, _ = run(capsys, *args)
    _, second, _ = run(capsys, *args)
    assert first == second


def test_verify_unknown_suite(capsys):
    code, _, err = run(capsys, "verify", "--suite", "bogus")
    assert code == 2
    assert "unknown suite" in err


def test_verify_bounds_reports_separation_warning(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "bounds", "--trials", "4", "--seed", "0")
    assert code == 0
    assert "WARN" in out
    assert "bound_literal_invalid" in out


def test_examples_all_pass(capsys):
    code, out, _ = run(capsys, "examples")
    assert code == 0
    lines = [l for l in out.strip().splitlines() if l]
    assert len(lines) == 5
    assert all(l.startswith("PASS") for l in lines)
    assert any("168" in l for l in lines)
    assert any("60480" in l for l in lines)


def test_usage_error_exit_code(capsys):
    assert main(["classify"]) == 2  # missing --n
    capsys.readouterr()


def test_missing_command_exit_code(capsys):
    assert main([]) == 2
    capsys.readouterr()
