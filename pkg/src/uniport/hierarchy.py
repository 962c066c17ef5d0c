"""Hierarchical preorder on blocks and its classification.

``relation[y][x]`` is True when block y is hierarchically inferior or
equivalent to block x, i.e. swapping a y-participant for an x-participant
never destroys authorization.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .access import AccessStructure, is_authorized
from .core import UniportError, mask_of, popcount, subset_list

Relation = tuple[tuple[bool, ...], ...]

T, C, LAMBDA, LAMBDA_STAR, OTHER = "T", "C", "Lambda", "LambdaStar", "Other"


@dataclass(frozen=True)
class OrderType:
    kind: str
    X: int = 0
    Y: int = 0

    def as_json(self) -> dict:
        out: dict = {"type": self.kind}
        if self.kind in (LAMBDA, LAMBDA_STAR):
            out["X"] = subset_list(self.X)
            out["Y"] = subset_list(self.Y)
        return out


@dataclass(frozen=True)
class HierarchyReport:
    relation: Relation
    order: OrderType
    max_chain: int
    code: str = field(default="?")

    def as_json(self) -> dict:
        out = {"relation": [[int(b) for b in row] for row in self.relation]}
        out.update(self.order.as_json())
        out["code"] = self.code
        out["maxChain"] = self.max_chain
        return out


def compute_relation(gamma: AccessStructure) -> Relation:
    """Evaluate the swap criterion on the minimal vectors only."""
    m = gamma.m
    sizes = gamma.block_sizes
    rel = [[x == y for x in range(m)] for y in range(m)]
    for y in range(m):
        for x in range(m):
            if x == y:
                continue
            ok = True
            for v in gamma.min_vectors:
                if v[y] >= 1 and v[x] < sizes[x]:
                    w = list(v)
                    w[y] -= 1
                    w[x] += 1
                    if not is_authorized(gamma, w):
                        ok = False
                        break
            rel[y][x] = ok
    out = tuple(tuple(row) for row in rel)
    check_preorder(out)
    return out


def check_preorder(rel: Relation) -> None:
    n = len(rel)
    for i in range(n):
        if not rel[i][i]:
            raise UniportError(f"relation is not reflexive at block {i + 1}")
    for a in range(n):
        for b in range(n):
            if not rel[a][b]:
                continue
            for c in range(n):
                if rel[b][c] and not rel[a][c]:
                    raise UniportError(
                        f"relation is not transitive: {a + 1}<={b + 1}<={c + 1} but not {a + 1}<={c + 1}"
                    )


def classify(rel: Relation) -> OrderType:
    check_preorder(rel)
    n = len(rel)
    pairs = [(y, x) for y in range(n) for x in range(n) if x != y]
    if all(rel[y][x] for y, x in pairs):
        return OrderType(T)
    equiv = {(y, x) for y, x in pairs if rel[y][x] and rel[x][y]}
    strict = {(y, x) for y, x in pairs if rel[y][x] and not rel[x][y]}
    if not equiv and not strict:
        return OrderType(C)
    if not equiv:
        ys = {y for y, _ in strict}
        xs = {x for _, x in strict}
        if ys.isdisjoint(xs) and strict == {(y, x) for y in ys for x in xs}:
            return OrderType(LAMBDA, mask_of(xs), mask_of(ys))
        return OrderType(OTHER)
    ys = {y for y, _ in equiv}
    if not all(rel[a][b] for a in ys for b in ys):
        return OrderType(OTHER)
    xs = {x for x in range(n) if x not in ys and all((y, x) in strict for y in ys)}
    allowed = {(a, b) for a in ys for b in ys if a != b} | {(y, x) for y in ys for x in xs}
    actual = {(y, x) for y, x in pairs if rel[y][x]}
    if actual == allowed:
        return OrderType(LAMBDA_STAR, mask_of(xs), mask_of(ys))
    return OrderType(OTHER)


def max_chain_length(rel: Relation) -> int:
    """Blocks in the longest chain of pairwise comparable, non-equivalent blocks."""
    n = len(rel)

    @lru_cache(maxsize=None)
    def longest_from(y: int) -> int:
        best = 1
        for x in range(n):
            if x != y and rel[y][x] and not rel[x][y]:
                best = max(best, 1 + longest_from(x))
        return best

    return max(longest_from(y) for y in range(n))


_M4_CODES = {
    (LAMBDA, 1, 3): "M",
    (LAMBDA_STAR, 1, 3): "I",
    (LAMBDA, 2, 2): "K",
    (LAMBDA_STAR, 2, 2): "V",
    (LAMBDA, 1, 1): "E",
    (LAMBDA, 3, 1): "W",
}


def table_code(order: OrderType, m: int = 4) -> str:
    """Letter used in the m = 4 classification grid."""
    if m != 4:
        raise UniportError("letter codes are defined for m = 4 only")
    if order.kind in (T, C):
        return order.kind
    return _M4_CODES.get((order.kind, popcount(order.X), popcount(order.Y)), "?")


def generic_code(order: OrderType) -> str:
    """Letter-free code usable for any m."""
    if order.kind in (T, C):
        return order.kind
    if order.kind == OTHER:
        return "?"
    star = "*" if order.kind == LAMBDA_STAR else ""
    xs = "".join(str(i) for i in subset_list(order.X))
    ys = "".join(str(i) for i in subset_list(order.Y))
    return f"L{star}[{xs}/{ys}]"


def hierarchy(gamma: AccessStructure) -> HierarchyReport:
    rel = compute_relation(gamma)
    order = classify(rel)
    code = table_code(order) if gamma.m == 4 else generic_code(order)
    return HierarchyReport(rel, order, max_chain_length(rel), code)
