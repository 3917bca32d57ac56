import json
from random import Random

import pytest
from hypothesis import given, strategies as st

from valmat import NEG_INF, DualCert, SchemaError, Network, partition, uniform
from valmat.family import B1_matroid
from valmat.generators import (
    example_graph,
    example_table,
    random_matroid,
    random_puiseux_matrix,
    random_rminor_rep,
    random_valmat,
    random_vgm,
    snowflake_gammoid,
)
from valmat.serialize import dumps, from_artifact, loads, to_artifact
from valmat.tropical import generating_function, matrix_action

seeds = st.integers(0, 2**32 - 1)


def test_valmat_layout():
    doc = json.loads(dumps(example_table()))
    assert doc["kind"] == "valmat" and doc["version"] == 1
    assert doc["payload"]["n"] == 4 and doc["payload"]["d"] == 2
    assert [1, 2] in [e[0] for e in doc["payload"]["entries"]]
    assert [0, 1] not in [e[0] for e in doc["payload"]["entries"]]


def test_matroid_descriptors_roundtrip():
    for m in (uniform(2, 3), partition(3, [{0, 1}, {2}], [1, 1]), B1_matroid(3)):
        back = loads(dumps(m), "matroid")
        assert back.same_as(m)


@given(seeds)
def test_random_roundtrips(seed):
    rng = Random(seed)
    m = random_matroid(rng, rng.randint(1, 6))
    assert loads(dumps(m)).same_as(m)
    f = random_valmat(rng, rng.randint(1, 6))
    assert loads(dumps(f)) == f
    h = random_vgm(rng, rng.randint(1, 4))
    assert loads(dumps(h)) == h
    rep = random_rminor_rep(rng, 3, rng.randint(0, 2), 4)
    back = loads(dumps(rep))
    assert back.graph == rep.graph and back.matroid.same_as(rep.matroid)


def test_other_kinds_roundtrip():
    g = example_graph()
    assert loads(dumps(g)) == g
    cert = DualCert([0, 1], [1, 0])
    assert loads(dumps(cert)) == cert
    net = Network(3, [(0, 1, 1), (1, 2, 2)], [0], [2])
    assert loads(dumps(net)) == net
    p = matrix_action(random_puiseux_matrix(Random(2), 3, 3), generating_function(uniform(2, 3)))
    assert loads(dumps(p)) == p
    rep = snowflake_gammoid()
    assert loads(dumps(rep)).graph == rep.graph


def test_bare_payload_with_expected_kind():
    payload = to_artifact(example_table())["payload"]
    assert from_artifact(payload, "valmat") == example_table()


def test_neg_inf_entries_dropped():
    doc = to_artifact(example_table())
    doc["payload"]["entries"].append([[0, 1], "-inf"])
    assert from_artifact(doc).value({0, 1}) is NEG_INF


@pytest.mark.parametrize(
    "doc",
    [
        {"kind": "nope", "version": 1, "payload": {}},
        {"kind": "valmat", "version": 9, "payload": {"n": 1, "d": 0, "entries": []}},
        {"kind": "valmat", "version": 1, "payload": {"n": 2, "d": 1, "entries": [[[0, 1], "0"]]}},
        {"kind": "valmat", "version": 1, "payload": {"n": 2}},
        {"n": 2},
    ],
)
def test_bad_documents(doc):
    with pytest.raises(SchemaError):
        from_artifact(doc)


def test_expected_kind_mismatch():
    with pytest.raises(SchemaError):
        loads(dumps(example_table()), "vgm")


def test_rep_W_must_be_trailing():
    doc = to_artifact(snowflake_gammoid())
    doc["payload"]["W"] = [0]
    with pytest.raises(SchemaError):
        from_artifact(doc)


def test_malformed_json():
    with pytest.raises(SchemaError):
        loads("{not json")
