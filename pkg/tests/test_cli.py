import json

import pytest

from zerosum.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv, "--format", "json")
    return code, json.loads(out)


def test_verify_theorem_holds(capsys):
    code, doc = run_json(capsys, "verify", "theorem", "n=7: 1,1,1,2", "--k", "3")
    assert code == 0 and doc["equality_holds"] and doc["missing_targets"] == []


def test_verify_theorem_counterexample(capsys):
    code, doc = run_json(capsys, "verify", "theorem", "n=5: 1,3", "--k", "3")
    assert code == 1
    assert doc["missing_targets"] == [2] and doc["hypotheses_met"] is False


def test_verify_theorem_infers_k(capsys):
    code, doc = run_json(capsys, "verify", "theorem", "n=7: 1,1,1,1,1,1")
    assert code == 0 and doc["k"] == 1


def test_verify_bounds(capsys):
    code, doc = run_json(capsys, "verify", "bounds", "n=9: 1,1,1,1,2", "--k", "4")
    assert code == 0 and doc["regime"] == "SC" and doc["required"] == 3


def test_normalize(capsys):
    code, doc = run_json(capsys, "normalize", "n=5: 3,3,3,3")
    assert code == 0 and doc["g"] == 2 and doc["total"] == 4
    assert doc["normalized"] == "n=5: 1,1,1,1"


def test_normalize_short_sequence_may_miss_bound(capsys):
    code, doc = run_json(capsys, "normalize", "n=5: 1,4")
    assert code == 1 and not doc["achieves_bound"]


@pytest.mark.parametrize("t, witness", [("4", "1,1,2"), ("5", "1,1,1,2"), ("1", "1")])
def test_decompose(capsys, t, witness):
    code, doc = run_json(capsys, "decompose", "n=7: 1,1,1,2", "--t", t)
    assert code == 0 and doc["witness"] == witness and doc["bar_sum"] == int(t)


def test_decompose_hypothesis_failure(capsys):
    code, out, err = run(capsys, "decompose", "n=5: 1,3", "--t", "2")
    assert code == 1
    assert "n >= 2k+1" in err


def test_sums(capsys):
    code, doc = run_json(capsys, "sums", "n=5: 1,3")
    assert code == 0
    assert doc["subsums_mod"] == [1, 3, 4] and doc["sigma_bar"] == 4 and doc["zero_sum_free"]


def test_text_output(capsys):
    code, out, _ = run(capsys, "sums", "n=5: 2,2")
    assert code == 0 and "subsums_int: [2, 4]" in out


def test_dihedral_classify(capsys):
    code, doc = run_json(capsys, "dihedral", "classify", "--n", "5")
    assert code == 0 and doc["found_count"] == 20 and doc["matches_family"]


def test_dihedral_free(capsys):
    code, doc = run_json(capsys, "dihedral", "free", "D n=3: s0,s1,s2")
    assert code == 0 and doc["product_one_free"]
    code, doc = run_json(capsys, "dihedral", "free", "D n=3: s1,s1")
    assert code == 1 and doc["witness"] == ["s1", "s1"]


@pytest.mark.parametrize("group, d", [("cyclic:5", 4), ("dihedral:4", 4), ("sum:2x4", 4)])
def test_davenport(capsys, group, d):
    code, doc = run_json(capsys, "davenport", group)
    assert code == 0 and doc["d"] == d and doc["status"] == "exact"


def test_davenport_unbounded(capsys):
    code, doc = run_json(capsys, "davenport", "cyclic:9", "--max-len", "3")
    assert code == 1 and doc["status"] == "unbounded-within-budget"


def test_sweep(capsys):
    code, doc = run_json(capsys, "sweep", "classification", "--max-n", "6")
    assert code == 0
    assert doc["counts"] == {"3": 7, "4": 8, "5": 20, "6": 12}
    assert doc["counterexamples"] == []


def test_sweep_text(capsys):
    code, out, _ = run(capsys, "sweep", "normalizer", "--max-n", "6")
    assert code == 0 and "counterexamples: 0" in out and "elapsed_ms:" in out


@pytest.mark.parametrize(
    "argv",
    [
        ["verify", "theorem", "n=5: 1,x"],
        ["verify", "theorem", "n=7: 1,1,1,2", "--k", "2"],
        ["normalize", "n=5: 0,1"],
        ["davenport", "bogus:3"],
        ["dihedral", "classify", "--n", "12"],
    ],
)
def test_domain_errors_exit_2(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2 and err.startswith("error:")


@pytest.mark.parametrize("argv", [["sweep", "unknown"], ["decompose", "n=7: 1"], ["frobnicate"]])
def test_usage_errors_exit_2(capsys, argv):
    with pytest.raises(SystemExit) as info:
        main(argv)
    assert info.value.code == 2
