import json

import pytest

from valmat import WeightedBipGraph, free, uniform
from valmat.cli import main
from valmat.family import B0_matroid
from valmat.generators import example_graph, example_table, snowflake_gammoid
from valmat.induction import RMinorRep
from valmat.serialize import dump, loads
from valmat.tropical import generating_function
from valmat.valfn import ValMat
from valmat.vgm import rank_function


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.fixture
def files(tmp_path):
    paths = {}

    def put(name, obj):
        p = tmp_path / f"{name}.json"
        dump(obj, p)
        paths[name] = str(p)
        return str(p)

    put("table", example_table())
    put("rep", RMinorRep(example_graph(), free(2)))
    put("graph", example_graph())
    put("free2", free(2))
    put("u23", uniform(2, 3))
    put("rank", rank_function(uniform(2, 4)))
    put("gammoid", snowflake_gammoid())
    put("q", generating_function(uniform(2, 3)))
    bad = tmp_path / "bad.json"
    bad.write_text("{oops")
    paths["bad"] = str(bad)
    fam = tmp_path / "family.json"
    fam.write_text(json.dumps({"kind": "matroid", "version": 1, "payload": {"kind": "explicit", "n": 4, "bases": [[0, 1], [2, 3]]}}))
    paths["nonexchange"] = str(fam)
    return paths


def test_check_exit_codes(capsys, files):
    code, out, _ = run(capsys, "check", files["table"])
    assert code == 0 and json.loads(out)["ok"]
    code, out, _ = run(capsys, "check", files["nonexchange"])
    assert code == 1
    assert json.loads(out)["witness"] == [[0, 1], [2, 3], 0]
    code, _, err = run(capsys, "check", files["bad"])
    assert code == 2 and "malformed" in err
    assert run(capsys, "check", files["rank"])[0] == 0


def test_check_robust(capsys, tmp_path):
    p = tmp_path / "b0.json"
    dump(B0_matroid(8), p)
    code, out, _ = run(capsys, "check", str(p), "--kind", "robust")
    doc = json.loads(out)
    assert code == 0
    assert doc["S"] == [1, 3, 5, 7] and doc["K"] == [2, 4, 6, 8]


def test_induce_table_and_eval(capsys, files):
    code, out, _ = run(capsys, "induce", files["rep"])
    assert code == 0 and loads(out) == example_table()
    code, out, _ = run(capsys, "induce", files["rep"], "--eval", "1,2")
    assert json.loads(out)["value"] == "1/1"
    code, out, _ = run(capsys, "induce", files["rep"], "--eval", "0,1")
    assert json.loads(out)["value"] == "-inf"
    code, out, _ = run(capsys, "induce", files["rep"], "--eval", "0")
    assert json.loads(out)["value"] == "-inf"
    code, trimmed, _ = run(capsys, "induce", files["rep"], "--trim")
    assert loads(trimmed) == example_table()
    code, out, _ = run(capsys, "induce", files["rep"], "--layer", "1")
    assert loads(out) == ValMat(4, 1, {})


def test_induce_needs_rep(capsys, files):
    assert run(capsys, "induce", files["table"])[0] == 2


def test_dual_cert(capsys, files):
    code, out, _ = run(capsys, "dual-cert", files["graph"], files["free2"], "--verify")
    doc = json.loads(out)
    assert code == 0 and doc["ok"]
    assert doc["notes"]["objective"] == "1/1"
    code, out, _ = run(capsys, "dual-cert", files["graph"], files["free2"])
    assert code == 0 and loads(out, "cert")


def test_dual_cert_infeasible(capsys, tmp_path):
    g = tmp_path / "g.json"
    m = tmp_path / "m.json"
    dump(WeightedBipGraph(2, 1, [(0, 0, 0), (1, 0, 0)], 0), g)
    dump(free(1), m)
    code, out, _ = run(capsys, "dual-cert", str(g), str(m))
    assert code == 1 and json.loads(out)["infeasible"]


@pytest.mark.parametrize("lemma", ["rado", "rho", "uncrossing"])
def test_rado_check(capsys, files, lemma):
    code, out, _ = run(capsys, "rado-check", files["gammoid"], "--lemma", lemma)
    assert code == 0 and json.loads(out)["ok"]


def test_rado_check_not_robust(capsys, files, tmp_path):
    p = tmp_path / "u48.json"
    dump(uniform(4, 8), p)
    assert run(capsys, "rado-check", str(p), "--lemma", "robust")[0] == 1
    # robustness is only defined for rank 4 on paired elements
    assert run(capsys, "rado-check", files["u23"], "--lemma", "robust")[0] == 2


def test_family_emit(capsys, tmp_path):
    code, out, err = run(capsys, "family", "--n", "3", "--seed", "4")
    assert code == 0 and "P_1={0,1}" in err
    assert loads(out, "valmat").d == 4
    target = tmp_path / "h.json"
    assert run(capsys, "family", "--n", "3", "--emit", "hnat", "--out", str(target))[0] == 0
    assert run(capsys, "vgm-check", str(target))[0] == 0
    code, out, _ = run(capsys, "family", "--n", "3", "--emit", "b1")
    assert len(loads(out).bases()) == 14


def test_family_is_deterministic(capsys):
    a = run(capsys, "family", "--n", "4", "--seed", "9", "--neg-inf-rate", "0.3")[1]
    b = run(capsys, "family", "--n", "4", "--seed", "9", "--neg-inf-rate", "0.3")[1]
    assert a == b


def test_vgm_check_wrong_kind(capsys, files):
    assert run(capsys, "vgm-check", files["table"])[0] == 2


def test_trop_check(capsys, files, tmp_path):
    mat = tmp_path / "a.json"
    mat.write_text(json.dumps([["1t^0", "0", "0"], ["0", "1t^1", "0"], ["0", "0", "2t^-1"]]))
    code, out, _ = run(capsys, "trop-check", files["q"], "--matrix", str(mat), "--full")
    doc = json.loads(out)
    assert code == 0 and doc["commutation"] and doc["tropicalization_valuated"]


def test_suite_commands(capsys):
    code, out, _ = run(capsys, "suite", "duality")
    assert code == 0 and json.loads(out)["ok"]
    assert run(capsys, "suite", "unknown")[0] == 2
    first = run(capsys, "suite", "snowflake", "--seed", "3")[1]
    assert first == run(capsys, "suite", "snowflake", "--seed", "3")[1]


def test_suite_family(capsys):
    code, out, _ = run(capsys, "suite", "family")
    assert code == 0 and json.loads(out)["criterion"] == 2


def test_usage_error_exits_two(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["check"])
    assert exc.value.code == 2
