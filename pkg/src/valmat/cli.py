"""``valmat`` command line.  Exit codes: 0 pass, 1 check failed, 2 usage, I/O or schema error."""

from __future__ import annotations

import argparse
import json
import random
import sys
from fractions import Fraction

from .errors import InfeasibleError, SchemaError, ValmatError
from .extrat import NEG_INF, format_ext
from .family import B0_matroid, B1_matroid, FamilyParams, make_Fn, make_h_natural
from .induction import RMinorRep, eval_rminor, rminor_function, trim_representation
from .intersection import WeightedBipGraph, dual_certificate, verify_certificate
from .matroid import Matroid, check_basis_exchange
from .rado import (
    RadoRep,
    check_pair_tight_sets,
    check_rho_values,
    check_uncrossing,
    is_robust,
    rado_independent,
    represented_matroid,
)
from .report import Check, Report
from .serialize import cert_to_json, dumps, from_artifact, matroid_from_json, to_artifact
from .suites import SUITES
from .tropical import (
    TropPoly,
    check_commutation,
    is_M_convex,
    parse_puiseux,
    trop_as_valmat,
)
from .valfn import ValMat, check_valuated
from .vgm import VGM, check_vgm

EXIT_OK, EXIT_FAIL, EXIT_ERROR = 0, 1, 2


def _plain(x):
    """JSON-ready copy: sets become sorted lists, rationals canonical strings."""
    if x is NEG_INF or isinstance(x, Fraction):
        return format_ext(x)
    if isinstance(x, (frozenset, set)):
        return sorted(_plain(v) for v in x)
    if isinstance(x, (list, tuple)):
        return [_plain(v) for v in x]
    if isinstance(x, dict):
        return {str(k) if not isinstance(k, tuple) else ",".join(map(str, k)): _plain(v) for k, v in x.items()}
    return x


def _emit(obj) -> None:
    print(json.dumps(_plain(obj), sort_keys=True, ensure_ascii=False))


def _check_result(name: str, c: Check) -> int:
    _emit({"check": name, "ok": c.ok, "witness": c.witness})
    return EXIT_OK if c else EXIT_FAIL


def _report_result(name: str, r: Report) -> int:
    _emit({"check": name, "ok": r.ok, "clauses": r.clauses, "notes": r.notes})
    return EXIT_OK if r else EXIT_FAIL


def _read_artifact(path: str):
    """Envelope, or a bare matroid descriptor (recognised by its ``kind`` field)."""
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"malformed JSON: {exc}") from exc
    if isinstance(doc, dict) and "payload" not in doc and "n" in doc and "kind" in doc:
        return matroid_from_json(doc)
    return from_artifact(doc)


def _parse_set(text: str) -> list[int]:
    text = text.strip().strip("[]{}")
    if not text:
        return []
    try:
        return [int(t) for t in text.replace(" ", "").split(",")]
    except ValueError as exc:
        raise SchemaError(f"cannot parse element set {text!r}") from exc


# Commands --------------------------------------------------------------------------


def cmd_check(args) -> int:
    obj = _read_artifact(args.path)
    kind = args.kind
    if kind == "robust":
        if not isinstance(obj, Matroid):
            raise SchemaError("robustness is a property of matroids")
        r = is_robust(obj)
        _emit({
            "check": "robust",
            "ok": r.ok,
            "S": sorted(r.S),
            "K": sorted(r.K),
            "S_zero_based_pairs": [[2 * i - 2, 2 * i - 1] for i in sorted(r.S)],
            "K_zero_based_pairs": [[2 * i - 2, 2 * i - 1] for i in sorted(r.K)],
            "reason": r.reason,
        })
        return EXIT_OK if r else EXIT_FAIL
    if isinstance(obj, ValMat):
        return _check_result("valuated", check_valuated(obj))
    if isinstance(obj, VGM):
        return _check_result("vgm", check_vgm(obj))
    if isinstance(obj, Matroid):
        # explicit families are checked as raw families, derived ones through their bases
        return _check_result("basis_exchange", check_basis_exchange((obj.n, obj.bases_masks())))
    raise SchemaError("check applies to matroid, valmat and vgm artifacts")


def _load_rep(path: str) -> RMinorRep:
    obj = _read_artifact(path)
    if not isinstance(obj, RMinorRep):
        raise SchemaError("expected a rep artifact")
    return obj


def cmd_induce(args) -> int:
    rep = _load_rep(args.path)
    if args.trim:
        rep = trim_representation(rep)
    if args.eval is not None:
        X = _parse_set(args.eval)
        _emit({"set": sorted(X), "value": eval_rminor(rep, X, args.method)})
        return EXIT_OK
    f = rminor_function(rep, args.method)
    if args.layer is not None and args.layer != f.d:
        # the function is -inf off its layer
        f = ValMat(rep.nV, args.layer, {})
    print(dumps(f))
    return EXIT_OK


def cmd_dual_cert(args) -> int:
    g = _read_artifact(args.graph)
    m = _read_artifact(args.matroid)
    if not isinstance(g, WeightedBipGraph) or not isinstance(m, Matroid):
        raise SchemaError("dual-cert takes a graph artifact and a matroid artifact")
    try:
        cert = dual_certificate(g, m)
    except InfeasibleError as exc:
        _emit({"infeasible": True, "reason": str(exc)})
        return EXIT_FAIL
    if not args.verify:
        print(dumps(cert))
        return EXIT_OK
    r = verify_certificate(g, m, cert)
    _emit({"certificate": cert_to_json(cert), "ok": r.ok, "clauses": r.clauses, "notes": r.notes})
    return EXIT_OK if r else EXIT_FAIL


def _load_rado(path: str) -> RadoRep:
    obj = _read_artifact(path)
    if isinstance(obj, RMinorRep):
        return RadoRep(obj.graph, obj.matroid)
    if isinstance(obj, Matroid):
        n = obj.n
        return RadoRep.build(n, n, [(i, i) for i in range(n)], obj)
    raise SchemaError("rado-check takes a rep artifact (weights ignored) or a matroid")


def cmd_rado_check(args) -> int:
    rep = _load_rado(args.path)
    if args.lemma == "rho":
        return _report_result("rho", check_rho_values(rep))
    if args.lemma == "uncrossing":
        return _report_result("uncrossing", check_uncrossing(rep))
    if args.lemma == "rado":
        N = represented_matroid(rep)
        bad = [x for x in range(1 << rep.nV) if rado_independent(rep, x) != rado_independent(rep, x, "matching")]
        _emit({
            "check": "rado",
            "ok": not bad,
            "rank": N.rank,
            "bases": [sorted(b) for b in N.bases()],
            "disagreements": bad,
        })
        return EXIT_OK if not bad else EXIT_FAIL
    N = represented_matroid(rep)
    r = is_robust(N)
    out = {"check": "robust", "ok": r.ok, "S": sorted(r.S), "K": sorted(r.K), "reason": r.reason}
    if r:
        t = check_pair_tight_sets(rep, rep.nV // 2)
        out.update(ok=t.ok, clauses=t.clauses, notes=t.notes)
    _emit(out)
    return EXIT_OK if out["ok"] else EXIT_FAIL


def cmd_family(args) -> int:
    rng = random.Random(args.seed)
    n = args.n
    if args.emit == "b0":
        obj = B0_matroid(n)
    elif args.emit == "b1":
        obj = B1_matroid(n)
    elif args.emit == "hnat":
        obj = make_h_natural(FamilyParams.random(n, rng, lower=Fraction(-999, 1000)))
    else:
        obj = make_Fn(FamilyParams.random(n, rng, neg_inf_rate=args.neg_inf_rate))
    text = dumps(obj)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    pairs = ", ".join(f"P_{i}={{{2 * i - 2},{2 * i - 1}}} (1-based {{{2 * i - 1},{2 * i}}})" for i in range(1, n + 1))
    print(f"pairs: {pairs}", file=sys.stderr)
    return EXIT_OK


def cmd_vgm_check(args) -> int:
    obj = _read_artifact(args.path)
    if not isinstance(obj, VGM):
        raise SchemaError("expected a vgm artifact")
    return _check_result("vgm", check_vgm(obj))


def _load_matrix(path: str):
    with open(path, encoding="utf-8") as fh:
        try:
            rows = json.load(fh)
        except json.JSONDecodeError as exc:
            raise SchemaError(f"malformed JSON: {exc}") from exc
    if isinstance(rows, dict):
        rows = rows.get("matrix")
    if not isinstance(rows, list) or not all(isinstance(r, list) for r in rows):
        raise SchemaError("matrix must be an array of rows of scalar strings")
    return [[parse_puiseux(str(c)) for c in r] for r in rows]


def cmd_trop_check(args) -> int:
    obj = _read_artifact(args.path)
    if not isinstance(obj, TropPoly):
        raise SchemaError("expected a troppoly artifact")
    conv = is_M_convex(obj.support())
    out = {"check": "trop", "M_convex_support": conv.ok, "witness": conv.witness}
    ok = conv.ok
    if conv and obj.is_multi_affine():
        f = trop_as_valmat(obj)
        c = check_valuated(f)
        out["tropicalization"] = to_artifact(f)["payload"]
        out["tropicalization_valuated"] = c.ok
        ok = ok and c.ok
    if args.matrix:
        c = check_commutation(_load_matrix(args.matrix), obj, full=args.full)
        out["commutation"] = c.ok
        out["commutation_witness"] = c.witness
        ok = ok and c.ok
    out["ok"] = ok
    _emit(out)
    return EXIT_OK if ok else EXIT_FAIL


def cmd_suite(args) -> int:
    names = list(SUITES) if args.name == "all" else [args.name]
    if any(n not in SUITES for n in names):
        print(f"unknown suite {args.name!r}; choose from {', '.join(SUITES)} or all", file=sys.stderr)
        return EXIT_ERROR
    ok = True
    for name in names:
        res = SUITES[name](args.seed)
        _emit(res.summary())
        ok = ok and res.ok
    return EXIT_OK if ok else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="valmat", description="Exact valuated matroid toolkit.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("check", help="axiom check for a matroid, valmat or vgm file")
    s.add_argument("path")
    s.add_argument("--kind", choices=["auto", "robust"], default="auto")
    s.set_defaults(func=cmd_check)

    s = sub.add_parser("induce", help="value table (or one value) of an R-minor representation")
    s.add_argument("path")
    s.add_argument("--layer", type=int)
    g = s.add_mutually_exclusive_group()
    g.add_argument("--table", action="store_true", help="dump the full table (default)")
    g.add_argument("--eval", metavar="X", help="comma separated element set")
    s.add_argument("--trim", action="store_true", help="trim the representation first")
    s.add_argument("--method", choices=["algorithm", "brute"], default="algorithm")
    s.set_defaults(func=cmd_induce)

    s = sub.add_parser("dual-cert", help="optimal dual certificate of the matching program")
    s.add_argument("graph")
    s.add_argument("matroid")
    s.add_argument("--verify", action="store_true")
    s.set_defaults(func=cmd_dual_cert)

    s = sub.add_parser("rado-check", help="structural checks on a Rado representation")
    s.add_argument("path")
    s.add_argument("--lemma", choices=["rado", "rho", "uncrossing", "robust"], default="rado")
    s.set_defaults(func=cmd_rado_check)

    s = sub.add_parser("family", help="emit a member of the paired family or its matroids")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--emit", choices=["valmat", "b0", "b1", "hnat"], default="valmat")
    s.add_argument("--neg-inf-rate", type=float, default=0.0)
    s.add_argument("--out")
    s.set_defaults(func=cmd_family)

    s = sub.add_parser("vgm-check", help="both exchange axioms for a vgm file")
    s.add_argument("path")
    s.set_defaults(func=cmd_vgm_check)

    s = sub.add_parser("trop-check", help="support, tropicalization and commutation checks")
    s.add_argument("path")
    s.add_argument("--matrix", help="JSON array of rows of Puiseux strings")
    s.add_argument("--full", action="store_true", help="compare on the whole simplex")
    s.set_defaults(func=cmd_trop_check)

    s = sub.add_parser("suite", help="run a named acceptance suite (or all)")
    s.add_argument("name")
    s.add_argument("--seed", type=int, default=0)
    s.set_defaults(func=cmd_suite)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (OSError, SchemaError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except ValmatError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
