"""JSON artifacts: a versioned envelope around per-kind payloads, exact rationals as strings."""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any, Callable

from ._bits import bits, popcount, to_mask
from .errors import SchemaError, ValmatError
from .extrat import format_ext, parse_ext
from .induction import Network, RMinorRep
from .intersection import DualCert, WeightedBipGraph
from .matroid import (
    ExplicitMatroid,
    Matroid,
    PartitionMatroid,
    SparsePavingMatroid,
    UniformMatroid,
    to_explicit,
)
from .tropical import TropPoly, format_puiseux, parse_puiseux
from .valfn import ValMat
from .vgm import VGM

VERSION = 1
KINDS = ("matroid", "valmat", "vgm", "graph", "network", "rep", "cert", "troppoly")


def _set(mask: int) -> list[int]:
    return list(bits(mask))


def _setkey(item) -> tuple:
    return (popcount(item[0]), bits(item[0]))


def _rat(x) -> str:
    return format_ext(x)


def _get(d: dict, key: str, typ=None):
    if not isinstance(d, dict) or key not in d:
        raise SchemaError(f"missing field {key!r}")
    v = d[key]
    if typ is not None and (not isinstance(v, typ) or isinstance(v, bool) and typ is not bool):
        raise SchemaError(f"field {key!r} has the wrong type")
    return v


def _num(v) -> Fraction:
    if isinstance(v, str):
        x = parse_ext(v)
        if not isinstance(x, Fraction):
            raise SchemaError("-inf is not allowed here")
        return x
    if isinstance(v, int) and not isinstance(v, bool):
        return Fraction(v)
    raise SchemaError(f"expected a rational string, got {v!r}")


def _ints(v, what: str) -> list[int]:
    if not isinstance(v, list) or not all(isinstance(x, int) and not isinstance(x, bool) for x in v):
        raise SchemaError(f"{what} must be an array of integers")
    return v


# Matroids --------------------------------------------------------------------------


def matroid_to_json(m: Matroid) -> dict:
    if isinstance(m, UniformMatroid):
        if m.r == m.n:
            return {"n": m.n, "kind": "free"}
        return {"n": m.n, "kind": "uniform", "r": m.r}
    if isinstance(m, PartitionMatroid):
        return {
            "n": m.n,
            "kind": "partition",
            "blocks": [_set(b) for b in m.block_masks],
            "capacities": list(m.capacities),
        }
    if isinstance(m, SparsePavingMatroid):
        return {"n": m.n, "kind": "sparse_paving", "d": m.d, "circuits": [_set(c) for c in m.circuit_masks]}
    e = m if isinstance(m, ExplicitMatroid) else to_explicit(m)
    return {"n": e.n, "kind": "explicit", "bases": [_set(b) for b in e.bases_masks()]}


def matroid_from_json(d: dict) -> Matroid:
    n = _get(d, "n", int)
    kind = _get(d, "kind", str)
    try:
        if kind == "free":
            return UniformMatroid(n, n)
        if kind == "uniform":
            return UniformMatroid(n, _get(d, "r", int))
        if kind == "partition":
            blocks = [_ints(b, "block") for b in _get(d, "blocks", list)]
            return PartitionMatroid(n, blocks, _ints(_get(d, "capacities", list), "capacities"))
        if kind == "sparse_paving":
            circuits = [_ints(c, "circuit") for c in _get(d, "circuits", list)]
            return SparsePavingMatroid(n, _get(d, "d", int), circuits)
        if kind == "explicit":
            return ExplicitMatroid(n, [_ints(b, "basis") for b in _get(d, "bases", list)])
    except SchemaError:
        raise
    except (ValmatError, ValueError) as exc:
        raise SchemaError(f"invalid {kind} matroid: {exc}") from exc
    raise SchemaError(f"unknown matroid kind {kind!r}")


# Set functions ---------------------------------------------------------------------


def _entries_from_json(d: dict, n: int) -> dict[int, Any]:
    table = {}
    for entry in _get(d, "entries", list):
        if not isinstance(entry, list) or len(entry) != 2 or not isinstance(entry[1], str):
            raise SchemaError("entries must be [set, value-string] pairs")
        s = _ints(entry[0], "entry set")
        try:
            mask = to_mask(s, n)
        except ValmatError as exc:
            raise SchemaError(str(exc)) from exc
        if mask in table:
            raise SchemaError(f"duplicate entry {s}")
        table[mask] = parse_ext(entry[1])
    return table


def valmat_to_json(f: ValMat) -> dict:
    return {"n": f.n, "d": f.d, "entries": [[_set(x), _rat(v)] for x, v in sorted(f.table.items(), key=_setkey)]}


def valmat_from_json(d: dict) -> ValMat:
    n, k = _get(d, "n", int), _get(d, "d", int)
    try:
        return ValMat(n, k, _entries_from_json(d, n))
    except SchemaError:
        raise
    except ValmatError as exc:
        raise SchemaError(str(exc)) from exc


def vgm_to_json(f: VGM) -> dict:
    """Absent sets are ``-inf``; the empty set is always written, even when it is ``-inf``."""
    rows = sorted(f.table.items(), key=_setkey)
    if 0 not in f.table:
        rows.insert(0, (0, f.value_mask(0)))
    return {"n": f.n, "entries": [[_set(x), _rat(v)] for x, v in rows]}


def vgm_from_json(d: dict) -> VGM:
    n = _get(d, "n", int)
    try:
        return VGM(n, _entries_from_json(d, n))
    except SchemaError:
        raise
    except ValmatError as exc:
        raise SchemaError(str(exc)) from exc


# Graphs and representations --------------------------------------------------------


def graph_to_json(g: WeightedBipGraph) -> dict:
    return {
        "left": g.left,
        "w_start": g.w_start,
        "right": g.right,
        "edges": [[i, j, _rat(w)] for i, j, w in sorted(g.edges)],
    }


def graph_from_json(d: dict) -> WeightedBipGraph:
    left, right = _get(d, "left", int), _get(d, "right", int)
    w_start = d.get("w_start", left)
    if not isinstance(w_start, int):
        raise SchemaError("w_start must be an integer")
    edges = []
    for e in _get(d, "edges", list):
        if not isinstance(e, list) or len(e) != 3:
            raise SchemaError("edges must be [i, j, weight] triples")
        i, j = _ints(e[:2], "edge endpoints")
        edges.append((i, j, _num(e[2])))
    try:
        return WeightedBipGraph(left, right, edges, w_start)
    except ValmatError as exc:
        raise SchemaError(str(exc)) from exc


def network_to_json(net: Network) -> dict:
    return {
        "nodes": net.nodes,
        "arcs": [[a, b, _rat(w)] for a, b, w in sorted(net.arcs)],
        "V": list(net.V),
        "U": list(net.U),
    }


def network_from_json(d: dict) -> Network:
    arcs = []
    for a in _get(d, "arcs", list):
        if not isinstance(a, list) or len(a) != 3:
            raise SchemaError("arcs must be [tail, head, weight] triples")
        s, t = _ints(a[:2], "arc endpoints")
        arcs.append((s, t, _num(a[2])))
    try:
        return Network(
            _get(d, "nodes", int), arcs, _ints(_get(d, "V", list), "V"), _ints(_get(d, "U", list), "U")
        )
    except ValmatError as exc:
        raise SchemaError(str(exc)) from exc


def rep_to_json(rep: RMinorRep) -> dict:
    g = graph_to_json(rep.graph)
    return {"graph": g, "matroid": matroid_to_json(rep.matroid), "W": list(rep.graph.W)}


def rep_from_json(d: dict) -> RMinorRep:
    gd = dict(_get(d, "graph", dict))
    W = _ints(d.get("W", []), "W")
    left = _get(gd, "left", int)
    # W must be the trailing block of left nodes
    if W != list(range(left - len(W), left)):
        raise SchemaError("W must list the last left nodes in increasing order")
    if "w_start" in gd and gd["w_start"] != left - len(W):
        raise SchemaError("graph w_start disagrees with W")
    gd["w_start"] = left - len(W)
    g = graph_from_json(gd)
    m = matroid_from_json(_get(d, "matroid", dict))
    try:
        return RMinorRep(g, m)
    except ValmatError as exc:
        raise SchemaError(str(exc)) from exc


def cert_to_json(c: DualCert) -> dict:
    return {"pi": [_rat(x) for x in c.pi], "tau": [_rat(x) for x in c.tau]}


def cert_from_json(d: dict) -> DualCert:
    return DualCert([_num(x) for x in _get(d, "pi", list)], [_num(x) for x in _get(d, "tau", list)])


def troppoly_to_json(p: TropPoly) -> dict:
    return {"k": p.k, "d": p.d, "coeffs": [[list(a), format_puiseux(c)] for a, c in sorted(p.coeffs.items())]}


def troppoly_from_json(d: dict) -> TropPoly:
    coeffs = {}
    for entry in _get(d, "coeffs", list):
        if not isinstance(entry, list) or len(entry) != 2 or not isinstance(entry[1], str):
            raise SchemaError("coeffs must be [exponent vector, scalar string] pairs")
        alpha = tuple(_ints(entry[0], "exponent vector"))
        if alpha in coeffs:
            raise SchemaError(f"duplicate exponent {list(alpha)}")
        coeffs[alpha] = parse_puiseux(entry[1])
    try:
        return TropPoly(_get(d, "k", int), _get(d, "d", int), coeffs)
    except ValmatError as exc:
        raise SchemaError(str(exc)) from exc


# Envelope ---------------------------------------------------------------------------

_CODECS: dict[str, tuple[type, Callable[[Any], dict], Callable[[dict], Any]]] = {
    "matroid": (Matroid, matroid_to_json, matroid_from_json),
    "valmat": (ValMat, valmat_to_json, valmat_from_json),
    "vgm": (VGM, vgm_to_json, vgm_from_json),
    "graph": (WeightedBipGraph, graph_to_json, graph_from_json),
    "network": (Network, network_to_json, network_from_json),
    "rep": (RMinorRep, rep_to_json, rep_from_json),
    "cert": (DualCert, cert_to_json, cert_from_json),
    "troppoly": (TropPoly, troppoly_to_json, troppoly_from_json),
}


def kind_of(obj) -> str:
    for kind, (cls, _, _) in _CODECS.items():
        if isinstance(obj, cls):
            return kind
    raise TypeError(f"no artifact kind for {type(obj).__name__}")


def to_artifact(obj) -> dict:
    kind = kind_of(obj)
    return {"kind": kind, "version": VERSION, "payload": _CODECS[kind][1](obj)}


def from_artifact(doc: dict, expect: str | None = None):
    """Decode an envelope; a bare payload is accepted when ``expect`` names its kind."""
    if isinstance(doc, dict) and "payload" in doc:
        kind = _get(doc, "kind", str)
        if kind not in _CODECS:
            raise SchemaError(f"unknown artifact kind {kind!r}")
        if doc.get("version") != VERSION:
            raise SchemaError(f"unsupported schema version {doc.get('version')!r}")
        if expect is not None and kind != expect:
            raise SchemaError(f"expected a {expect} artifact, got {kind}")
        payload = doc["payload"]
    elif expect is not None:
        kind, payload = expect, doc
    else:
        raise SchemaError("not an artifact envelope")
    if not isinstance(payload, dict):
        raise SchemaError("payload must be an object")
    return _CODECS[kind][2](payload)


def dumps(obj) -> str:
    return json.dumps(to_artifact(obj), sort_keys=True, ensure_ascii=False)


def loads(text: str, expect: str | None = None):
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"malformed JSON: {exc}") from exc
    return from_artifact(doc, expect)


def load(path, expect: str | None = None):
    with open(path, encoding="utf-8") as fh:
        return loads(fh.read(), expect)


def dump(obj, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps(obj) + "\n")


__all__ = [
    "VERSION",
    "KINDS",
    "matroid_to_json",
    "matroid_from_json",
    "valmat_to_json",
    "valmat_from_json",
    "vgm_to_json",
    "vgm_from_json",
    "graph_to_json",
    "graph_from_json",
    "network_to_json",
    "network_from_json",
    "rep_to_json",
    "rep_from_json",
    "cert_to_json",
    "cert_from_json",
    "troppoly_to_json",
    "troppoly_from_json",
    "kind_of",
    "to_artifact",
    "from_artifact",
    "dumps",
    "loads",
    "load",
    "dump",
]
