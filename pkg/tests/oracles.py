"""Slow, definition-level reference implementations used as test oracles.

Sets are frozensets of 1-based block labels; nothing here reuses the
package's mask helpers or search code.
"""

import csv
from itertools import combinations, permutations, product
from pathlib import Path

DATA = Path(__file__).parent / "data"


def rank(g, k):
    return sum(g[:k])


def all_subsets(m):
    ground = range(1, m + 1)
    return [frozenset(c) for k in range(m + 1) for c in combinations(ground, k)]


def closure(m, min_sets):
    mins = [frozenset(s) for s in min_sets]
    return {s for s in all_subsets(m) if any(t <= s for t in mins)}


def compatible(g, m, min_sets):
    fam = closure(m, min_sets)
    subs = all_subsets(m)
    h = lambda s: rank(g, len(s))
    for x in fam:
        for y in subs:
            if y <= x and y not in fam and not h(y) < h(x):
                return False
    for x in fam:
        for y in fam:
            if x & y not in fam and not h(x & y) + h(x | y) < h(x) + h(y):
                return False
    return True


def bases(g, m, x):
    """B(Z, X) by scanning the box and testing every subset sum."""
    g0 = g[0]
    out = set()
    for v in product(range(g0 + 1), repeat=m):
        if any(v[i - 1] for i in range(1, m + 1) if i not in x):
            continue
        if sum(v) != rank(g, len(x)):
            continue
        if all(sum(v[i - 1] for i in y) <= rank(g, len(y)) for y in all_subsets(m) if y <= x):
            out.add(v)
    return out


def dominates_base(g, x, v):
    """Some base of X lies below v, via the max-independent-size formula."""
    hx = rank(g, len(x))
    xs = sorted(x)
    best = min(
        rank(g, len(y)) + sum(v[i - 1] for i in xs if i not in y)
        for k in range(len(xs) + 1)
        for y in map(frozenset, combinations(xs, k))
    )
    return best >= hx


def authorized(g, m, fam, v):
    return any(dominates_base(g, x, v) for x in fam)


def min_gamma(g, m, min_sets):
    fam = closure(m, min_sets)
    auth = [v for v in product(range(g[0] + 1), repeat=m) if authorized(g, m, fam, v)]
    aset = set(auth)
    mins = []
    for v in auth:
        below = False
        for i in range(m):
            if v[i]:
                w = v[:i] + (v[i] - 1,) + v[i + 1 :]
                if w in aset:
                    below = True
                    break
        if not below:
            mins.append(v)
    return set(mins)


def relation(g, m, min_sets, sizes=None):
    """rel[y][x]: swapping a y-participant for an x-participant keeps every
    authorized vector authorized; scanned over the whole box."""
    fam = closure(m, min_sets)
    sizes = sizes or [g[0] + 1] * m
    auth = {v for v in product(*(range(n + 1) for n in sizes)) if authorized(g, m, fam, v)}
    rel = [[x == y for x in range(m)] for y in range(m)]
    for y in range(m):
        for x in range(m):
            if x == y:
                continue
            rel[y][x] = all(
                (v[:y] + (v[y] - 1,) + v[y + 1 :])[:x] + (v[x] + 1,) + (v[:y] + (v[y] - 1,) + v[y + 1 :])[x + 1 :]
                in auth
                for v in auth
                if v[y] >= 1 and v[x] < sizes[x]
            )
    return tuple(tuple(r) for r in rel)


def antichain_orbits(m):
    """Number of nonempty antichains of nonempty sets up to relabelling,
    by explicit orbit collection on frozensets of frozensets."""
    subs = [s for s in all_subsets(m) if s]
    seen = set()
    orbits = 0
    perms = list(permutations(range(1, m + 1)))

    def rec(start, chosen):
        nonlocal orbits
        if chosen:
            fam = frozenset(chosen)
            if fam not in seen:
                orbits += 1
                for p in perms:
                    seen.add(frozenset(frozenset(p[i - 1] for i in s) for s in fam))
        for i in range(start, len(subs)):
            s = subs[i]
            if any(s <= c or c <= s for c in chosen):
                continue
            rec(i + 1, chosen + [s])

    rec(0, [])
    return orbits


def golden_table():
    """(columns, rows) with rows as (delta text, list of 15 codes)."""
    with open(DATA / "grid_m4.csv") as fh:
        reader = csv.reader(fh)
        head = next(reader)
        columns = [tuple(int(t) for t in c.split()) for c in head[1:]]
        rows = [(r[0], r[1:]) for r in reader]
    return columns, rows


def expected_relation(m, upper, lower, star):
    """Preorder in which every block of ``lower`` sits strictly below every
    block of ``upper``; with ``star`` the lower blocks are also equivalent."""
    rel = [[x == y for x in range(m)] for y in range(m)]
    for y in lower:
        for x in upper:
            rel[y][x] = True
        if star:
            for y2 in lower:
                rel[y][y2] = True
    return tuple(tuple(r) for r in rel)
