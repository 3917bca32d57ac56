"""Finite Puiseux scalars, homogeneous polynomials over them and their tropicalization.

Scalars are finite sums ``Σ c_e t^e`` with rational ``c`` and ``e``; ``deg``
sends a scalar to its leading exponent.  Polynomials are homogeneous maps
from exponent vectors to scalars.  The commutation checks compare the
tropicalization of ``A ↷ q`` with induction through the graph of ``A``.
"""

from __future__ import annotations

import re
from fractions import Fraction
from itertools import product
from math import factorial
from typing import Iterable, Mapping, Sequence

from ._bits import capacity, k_subsets
from .errors import CapacityError, DomainError, ParameterError, SchemaError
from .extrat import NEG_INF, ExtRat
from .induction import induce_bipartite
from .intersection import WeightedBipGraph
from .matroid import Matroid
from .report import Check
from .valfn import ValMat

Vec = tuple[int, ...]


class PuiseuxScalar:
    """Immutable finite sum of terms ``c·t^e``; the empty sum is zero."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[object, object] | Iterable[tuple[object, object]] = ()):
        """``terms`` maps exponent to coefficient (or is an iterable of ``(coefficient, exponent)``)."""
        acc: dict[Fraction, Fraction] = {}
        items = terms.items() if isinstance(terms, Mapping) else ((e, c) for c, e in terms)
        for e, c in items:
            e, c = Fraction(e), Fraction(c)
            acc[e] = acc.get(e, Fraction(0)) + c
        self._terms = tuple(sorted(((e, c) for e, c in acc.items() if c != 0), reverse=True))

    @classmethod
    def const(cls, c) -> "PuiseuxScalar":
        return cls({0: c})

    @classmethod
    def monomial(cls, c, e) -> "PuiseuxScalar":
        return cls({e: c})

    @property
    def terms(self) -> tuple[tuple[Fraction, Fraction], ...]:
        """``(exponent, coefficient)`` pairs by descending exponent."""
        return self._terms

    def is_zero(self) -> bool:
        return not self._terms

    def leading(self) -> tuple[Fraction, Fraction] | None:
        return self._terms[0] if self._terms else None

    def is_positive(self) -> bool:
        return bool(self._terms) and self._terms[0][1] > 0

    def is_nonnegative(self) -> bool:
        return not self._terms or self._terms[0][1] > 0

    def __add__(self, other: "PuiseuxScalar") -> "PuiseuxScalar":
        if not isinstance(other, PuiseuxScalar):
            return NotImplemented
        acc = dict(self._terms)
        for e, c in other._terms:
            acc[e] = acc.get(e, Fraction(0)) + c
        return PuiseuxScalar(acc)

    def __neg__(self) -> "PuiseuxScalar":
        return PuiseuxScalar({e: -c for e, c in self._terms})

    def __sub__(self, other: "PuiseuxScalar") -> "PuiseuxScalar":
        return self + (-other)

    def __mul__(self, other) -> "PuiseuxScalar":
        if isinstance(other, (int, Fraction)):
            return PuiseuxScalar({e: c * other for e, c in self._terms})
        if not isinstance(other, PuiseuxScalar):
            return NotImplemented
        acc: dict[Fraction, Fraction] = {}
        for e1, c1 in self._terms:
            for e2, c2 in other._terms:
                acc[e1 + e2] = acc.get(e1 + e2, Fraction(0)) + c1 * c2
        return PuiseuxScalar(acc)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "PuiseuxScalar":
        out = ONE
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PuiseuxScalar):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(self._terms)

    def __repr__(self) -> str:
        return f"PuiseuxScalar({format_puiseux(self)!r})"

    def __str__(self) -> str:
        return format_puiseux(self)


ZERO = PuiseuxScalar()
ONE = PuiseuxScalar.const(1)


def format_puiseux(x: PuiseuxScalar) -> str:
    """Text form such as ``"3t^2+1t^1"``; rationals as ``p/q``; zero is ``"0"``."""
    if x.is_zero():
        return "0"
    out = []
    for k, (e, c) in enumerate(x.terms):
        sign = "-" if c < 0 else ("+" if k else "")
        out.append(f"{sign}{abs(c)}t^{e}")
    return "".join(out)


_TERM = re.compile(r"([+-]?)(\d+(?:/\d+)?)t\^(-?\d+(?:/\d+)?)")


def parse_puiseux(s: str) -> PuiseuxScalar:
    s = s.replace(" ", "")
    if s == "0":
        return ZERO
    pos = 0
    terms = []
    while pos < len(s):
        m = _TERM.match(s, pos)
        if not m or (pos and not m.group(1)):
            raise SchemaError(f"cannot parse Puiseux scalar {s!r}")
        sign = -1 if m.group(1) == "-" else 1
        terms.append((sign * Fraction(m.group(2)), Fraction(m.group(3))))
        pos = m.end()
    if not terms:
        raise SchemaError(f"cannot parse Puiseux scalar {s!r}")
    return PuiseuxScalar(terms)


def deg(x: PuiseuxScalar) -> ExtRat:
    """Leading exponent; ``NEG_INF`` for zero."""
    lead = x.leading()
    return NEG_INF if lead is None else lead[0]


# Polynomials ------------------------------------------------------------------------


def simplex_points(k: int, d: int) -> list[Vec]:
    """All ``α ∈ Z^k_{≥0}`` with ``Σ α = d``, lexicographically descending."""
    if k == 0:
        return [()] if d == 0 else []
    out = []
    for a in range(d, -1, -1):
        for rest in simplex_points(k - 1, d - a):
            out.append((a,) + rest)
    return out


class TropPoly:
    """Homogeneous polynomial of degree ``d`` in ``k`` variables with Puiseux coefficients."""

    __slots__ = ("k", "d", "_coeffs")

    def __init__(self, k: int, d: int, coeffs: Mapping[Sequence[int], PuiseuxScalar]):
        clean: dict[Vec, PuiseuxScalar] = {}
        for alpha, c in coeffs.items():
            alpha = tuple(int(a) for a in alpha)
            if len(alpha) != k or any(a < 0 for a in alpha) or sum(alpha) != d:
                raise DomainError(f"exponent {alpha} is not in the degree-{d} simplex on {k} variables")
            if not isinstance(c, PuiseuxScalar):
                c = PuiseuxScalar.const(c)
            c = clean.get(alpha, ZERO) + c
            if c.is_zero():
                clean.pop(alpha, None)
            else:
                clean[alpha] = c
        self.k = k
        self.d = d
        self._coeffs = clean

    @property
    def coeffs(self) -> dict[Vec, PuiseuxScalar]:
        return dict(self._coeffs)

    def support(self) -> list[Vec]:
        return sorted(self._coeffs, reverse=True)

    def coeff(self, alpha: Sequence[int]) -> PuiseuxScalar:
        return self._coeffs.get(tuple(alpha), ZERO)

    def is_multi_affine(self) -> bool:
        return all(max(a, default=0) <= 1 for a in self._coeffs)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TropPoly):
            return NotImplemented
        return (self.k, self.d, self._coeffs) == (other.k, other.d, other._coeffs)

    def __repr__(self) -> str:
        return f"<TropPoly k={self.k} d={self.d} terms={len(self._coeffs)}>"


def alpha_factorial(alpha: Sequence[int]) -> int:
    out = 1
    for a in alpha:
        out *= factorial(a)
    return out


def is_M_convex(points: Iterable[Sequence[int]]) -> Check:
    """Exchange property for integer points; witness ``(x, y, i)`` on failure."""
    pts = {tuple(p) for p in points}
    if not pts:
        return Check(False, None, "empty set")
    if len({sum(p) for p in pts}) != 1:
        return Check(False, None, "points lie on different levels")
    for x in pts:
        for y in pts:
            if x == y:
                continue
            plus = [i for i in range(len(x)) if x[i] > y[i]]
            minus = [j for j in range(len(x)) if x[j] < y[j]]
            for i in plus:
                ok = False
                for j in minus:
                    x2 = list(x)
                    y2 = list(y)
                    x2[i] -= 1
                    x2[j] += 1
                    y2[i] += 1
                    y2[j] -= 1
                    if tuple(x2) in pts and tuple(y2) in pts:
                        ok = True
                        break
                if not ok:
                    return Check(False, (x, y, i))
    return Check(True)


def matroid_points(m: Matroid) -> list[Vec]:
    return [tuple(b >> i & 1 for i in range(m.n)) for b in m.bases_masks()]


def generating_function(b: Iterable[Sequence[int]] | Matroid) -> TropPoly:
    """``Σ_{α ∈ B} w^α / α!`` for an M-convex set ``B`` (or the bases of a matroid)."""
    pts = matroid_points(b) if isinstance(b, Matroid) else sorted({tuple(p) for p in b})
    chk = is_M_convex(pts)
    if not chk:
        raise ParameterError(f"support is not M-convex: {chk.witness or chk.detail}")
    k = len(pts[0])
    d = sum(pts[0])
    return TropPoly(k, d, {a: PuiseuxScalar.const(Fraction(1, alpha_factorial(a))) for a in pts})


def tropicalize(p: TropPoly) -> dict[Vec, ExtRat]:
    """``α ↦ deg(c_α)`` on the support (absent points are ``NEG_INF``)."""
    return {a: deg(c) for a, c in p._coeffs.items()}


def trop_as_valmat(p: TropPoly) -> ValMat:
    """Restriction of ``trop(p)`` to 0/1 points, read as a function on ``d``-subsets."""
    table = {}
    for a, c in p._coeffs.items():
        if max(a, default=0) <= 1:
            table[sum(1 << i for i, x in enumerate(a) if x)] = deg(c)
    return ValMat(p.k, p.d, table)


def map_part(p: TropPoly) -> TropPoly:
    return TropPoly(p.k, p.d, {a: c for a, c in p._coeffs.items() if max(a, default=0) <= 1})


def poly_from_valmat(f: ValMat, lead=1) -> TropPoly:
    """Multi-affine polynomial ``Σ lead·t^{f(X)} w^X``."""
    coeffs = {}
    for x, v in f.table.items():
        coeffs[tuple(x >> i & 1 for i in range(f.n))] = PuiseuxScalar.monomial(lead, v)
    return TropPoly(f.n, f.d, coeffs)


def delete_var(p: TropPoly, i: int) -> TropPoly:
    """Set ``w_i = 0`` and drop the variable."""
    return TropPoly(p.k - 1, p.d, {a[:i] + a[i + 1 :]: c for a, c in p._coeffs.items() if a[i] == 0})


def differentiate(p: TropPoly, i: int) -> TropPoly:
    """``∂_i p`` with the variable ``w_i`` dropped (for multi-affine ``p`` this is contraction)."""
    if p.d == 0:
        return TropPoly(p.k - 1, 0, {})
    out: dict[Vec, PuiseuxScalar] = {}
    for a, c in p._coeffs.items():
        if a[i]:
            b = a[:i] + a[i + 1 :]
            if a[i] > 1:
                raise DomainError("contraction by differentiation is defined for multi-affine polynomials")
            out[b] = out.get(b, ZERO) + c * a[i]
    return TropPoly(p.k - 1, p.d - 1, out)


# Matrix action ------------------------------------------------------------------------


Matrix = Sequence[Sequence[PuiseuxScalar]]


def _check_matrix(A: Matrix, n: int) -> int:
    if len(A) != n:
        raise DomainError(f"matrix needs {n} rows, one per variable of p")
    k = len(A[0]) if n else 0
    for row in A:
        if len(row) != k:
            raise DomainError("ragged matrix")
        for a in row:
            if not a.is_nonnegative():
                raise ParameterError("matrix entries must be nonnegative (positive leading coefficient or zero)")
    return k


def _poly_mul(p: dict[Vec, PuiseuxScalar], q: dict[Vec, PuiseuxScalar], budget: list[int]) -> dict[Vec, PuiseuxScalar]:
    out: dict[Vec, PuiseuxScalar] = {}
    for a, ca in p.items():
        for b, cb in q.items():
            budget[0] -= 1
            if budget[0] < 0:
                raise CapacityError("expansion exceeds the expansion_terms capacity")
            key = tuple(x + y for x, y in zip(a, b))
            out[key] = out.get(key, ZERO) + ca * cb
    return {a: c for a, c in out.items() if not c.is_zero()}


def matrix_action(A: Matrix, p: TropPoly) -> TropPoly:
    """``(A ↷ p)(w) = p(Aw)`` by direct expansion; ``A`` is ``p.k × k``."""
    k = _check_matrix(A, p.k)
    budget = [capacity("expansion_terms")]
    lin = []
    for row in A:
        lin.append({tuple(int(j == jj) for jj in range(k)): a for j, a in enumerate(row) if not a.is_zero()})
    total: dict[Vec, PuiseuxScalar] = {}
    unit = {tuple([0] * k): ONE}
    for alpha, c in p._coeffs.items():
        term = {key: c * v for key, v in unit.items()}
        for i, e in enumerate(alpha):
            for _ in range(e):
                term = _poly_mul(term, lin[i], budget)
        for key, v in term.items():
            total[key] = total.get(key, ZERO) + v
    return TropPoly(k, p.d, total)


def _row_splits(total: int, cols: Sequence[int]) -> Iterable[dict[int, int]]:
    """All ways to distribute ``total`` over ``cols``."""
    if not cols:
        if total == 0:
            yield {}
        return
    j, rest = cols[0], cols[1:]
    if not rest:
        yield {j: total}
        return
    for a in range(total, -1, -1):
        for tail in _row_splits(total - a, rest):
            out = {j: a} if a else {}
            out.update(tail)
            yield out


def _edge_multisets(alpha: Sequence[int], support: Sequence[Sequence[int]]):
    """Integer matrices with row sums ``alpha`` and entries only where ``support`` allows."""
    rows = [list(_row_splits(a, support[i])) for i, a in enumerate(alpha)]
    yield from product(*rows)


def matrix_action_by_formula(A: Matrix, p: TropPoly) -> TropPoly:
    """Coefficients of ``A ↷ p`` summed over edge multisets ``M`` with row sums ``α``:
    ``c_α · Π_i α_i!/Π_j M_ij! · Π a_ij^{M_ij}``.
    """
    k = _check_matrix(A, p.k)
    support = [[j for j in range(k) if not A[i][j].is_zero()] for i in range(p.k)]
    budget = capacity("expansion_terms")
    out: dict[Vec, PuiseuxScalar] = {}
    for alpha, c in p._coeffs.items():
        for M in _edge_multisets(alpha, support):
            budget -= 1
            if budget < 0:
                raise CapacityError("expansion exceeds the expansion_terms capacity")
            beta = [0] * k
            coef = Fraction(alpha_factorial(alpha))
            val = c
            for i, row in enumerate(M):
                for j, mij in row.items():
                    beta[j] += mij
                    coef /= factorial(mij)
                    val = val * (A[i][j] ** mij)
            key = tuple(beta)
            out[key] = out.get(key, ZERO) + val * coef
    return TropPoly(k, p.d, out)


def degree_graph(A: Matrix) -> WeightedBipGraph:
    """Left nodes: the ``k`` output variables; right nodes: the ``n`` variables of ``q``; weights ``deg(a_ij)``."""
    n = len(A)
    k = len(A[0]) if n else 0
    edges = [(j, i, deg(A[i][j])) for i in range(n) for j in range(k) if not A[i][j].is_zero()]
    return WeightedBipGraph(k, n, edges)


def subgraph_transformation(A: Matrix, q: TropPoly) -> dict[Vec, ExtRat]:
    """``β ↦ max`` over edge multisets ``M`` with row sums ``α`` in the support of ``q`` and
    column sums ``β`` of ``trop(q)(α) + Σ M_ij deg(a_ij)``.
    """
    k = _check_matrix(A, q.k)
    support = [[j for j in range(k) if not A[i][j].is_zero()] for i in range(q.k)]
    best: dict[Vec, ExtRat] = {}
    for alpha, c in q._coeffs.items():
        base = deg(c)
        for M in _edge_multisets(alpha, support):
            beta = [0] * k
            val = base
            for i, row in enumerate(M):
                for j, mij in row.items():
                    beta[j] += mij
                    val = val + mij * deg(A[i][j])
            key = tuple(beta)
            old = best.get(key)
            if old is None or val > old:
                best[key] = val
    return best


def check_commutation(A: Matrix, q: TropPoly, full: bool = False) -> Check:
    """Compare ``trop(MAP(A ↷ q))`` with induction of ``trop(q)`` through the degree graph.

    With ``full=True`` compare ``trop(A ↷ q)`` on the whole simplex with the
    subgraph transformation instead.  The witness lists mismatching points
    as ``(point, left value, right value)``.
    """
    image = matrix_action(A, q)
    if full:
        lhs = tropicalize(image)
        rhs = subgraph_transformation(A, q)
        keys = sorted(set(lhs) | set(rhs), reverse=True)
        diff = tuple((b, lhs.get(b, NEG_INF), rhs.get(b, NEG_INF)) for b in keys if lhs.get(b, NEG_INF) != rhs.get(b, NEG_INF))
        return Check(not diff, diff or None)
    if not q.is_multi_affine():
        raise DomainError("the multi-affine comparison needs a multi-affine q")
    lhs_f = trop_as_valmat(map_part(image))
    rhs_f = induce_bipartite(degree_graph(A), trop_as_valmat(q))
    diff = tuple(
        (x, lhs_f.value_mask(x), rhs_f.value_mask(x))
        for x in k_subsets(image.k, q.d)
        if lhs_f.value_mask(x) != rhs_f.value_mask(x)
    )
    return Check(not diff, diff or None)


def identity_matrix(n: int) -> list[list[PuiseuxScalar]]:
    return [[ONE if i == j else ZERO for j in range(n)] for i in range(n)]


__all__ = [
    "PuiseuxScalar",
    "ZERO",
    "ONE",
    "format_puiseux",
    "parse_puiseux",
    "deg",
    "simplex_points",
    "TropPoly",
    "alpha_factorial",
    "is_M_convex",
    "matroid_points",
    "generating_function",
    "tropicalize",
    "trop_as_valmat",
    "map_part",
    "poly_from_valmat",
    "delete_var",
    "differentiate",
    "matrix_action",
    "matrix_action_by_formula",
    "degree_graph",
    "subgraph_transformation",
    "check_commutation",
    "identity_matrix",
]
