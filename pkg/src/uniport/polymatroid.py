"""Uniform polymatroids given by their increment sequence."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence

from .core import UniportError, Vector, check_ground_size, elements, popcount, sort_vectors


@dataclass(frozen=True)
class UniformPolymatroid:
    """Uniform polymatroid on ``m`` blocks.

    ``g`` holds the full increment sequence ``(g_0, ..., g_m)`` with
    ``g_m == 0``; the rank of any k-set is ``h[k] = g_0 + ... + g_{k-1}``.
    """

    m: int
    g: tuple[int, ...]

    def __post_init__(self):
        check_ground_size(self.m)
        g = self.g
        if len(g) != self.m + 1:
            raise UniportError(f"increment sequence needs {self.m + 1} entries, got {len(g)}")
        if g[-1] != 0:
            raise UniportError("g_m must be 0")
        if g[0] <= 0:
            raise UniportError("g_0 must be positive")
        if any(a < b for a, b in zip(g, g[1:])) or any(x < 0 for x in g):
            raise UniportError(f"increment sequence {g} is not nonincreasing and non-negative")

    @classmethod
    def from_increments(cls, g: Sequence[int], m: int | None = None) -> "UniformPolymatroid":
        """Build from ``(g_0, ..., g_{m-1})``, appending ``g_m = 0``.

        If ``m`` is given, ``g`` may also carry the trailing ``g_m``.
        """
        g = tuple(int(x) for x in g)
        if m is None:
            m = len(g)
        if len(g) == m:
            g = g + (0,)
        return cls(m, g)

    @property
    def h(self) -> tuple[int, ...]:
        out = [0]
        for x in self.g[:-1]:
            out.append(out[-1] + x)
        return tuple(out)

    def rank(self, k: int) -> int:
        if not 0 <= k <= self.m:
            raise UniportError(f"cardinality {k} outside 0..{self.m}")
        return sum(self.g[:k])

    def rank_of(self, mask: int) -> int:
        return self.rank(popcount(mask))

    @property
    def eta(self) -> int:
        """Smallest index i with g_i = 0."""
        return self.g.index(0)

    @property
    def signature(self) -> tuple[int, ...]:
        """Signs of g_{i-1} - g_i for i = 1..m."""
        return tuple(1 if a > b else 0 for a, b in zip(self.g, self.g[1:]))

    def short(self) -> str:
        return ",".join(str(x) for x in self.g[:-1])


def rank(z: UniformPolymatroid, k: int) -> int:
    return z.rank(k)


def eta(z: UniformPolymatroid) -> int:
    return z.eta


def sum_largest_check(z: UniformPolymatroid, v: Sequence[int]) -> bool:
    """True iff the l largest coordinates of ``v`` sum to at most h_l for every l."""
    h = z.h
    total = 0
    for l, c in enumerate(sorted(v, reverse=True), start=1):
        total += c
        if l <= z.m and total > h[l]:
            return False
    return True


def enumerate_bases(z: UniformPolymatroid, mask: int) -> list[Vector]:
    """The base set B(Z, X): vectors supported in X with modulus h(X) and
    |v_Y| <= h(Y) for every Y inside X.

    Coordinates are generated recursively; a coordinate never exceeds
    h_1 = g_0, and the remaining-sum bound prunes dead branches. The
    sorted-prefix test is applied to every complete vector.
    """
    idx = elements(mask)
    k = len(idx)
    target = z.rank(k)
    cap = z.g[0]
    out: list[Vector] = []
    coords = [0] * z.m

    def rec(pos: int, remaining: int):
        if pos == k:
            if remaining == 0 and sum_largest_check(z, coords):
                out.append(tuple(coords))
            return
        slots_left = k - pos - 1
        lo = max(0, remaining - cap * slots_left)
        for c in range(min(cap, remaining), lo - 1, -1):
            coords[idx[pos]] = c
            rec(pos + 1, remaining - c)
        coords[idx[pos]] = 0

    rec(0, target)
    return sort_vectors(out)


def vertex_vector(z: UniformPolymatroid, sigma: Mapping[int, int]) -> Vector:
    """Vertex vector sum_{x in X} g_{sigma(x)} e_x.

    ``sigma`` maps 0-based blocks of the basic set X onto 0..|X|-1.
    """
    k = len(sigma)
    if sorted(sigma.values()) != list(range(k)):
        raise UniportError(f"sigma is not a bijection onto 0..{k - 1}: {dict(sigma)}")
    if any(not 0 <= x < z.m for x in sigma):
        raise UniportError("sigma domain outside the ground set")
    w = [0] * z.m
    for x, i in sigma.items():
        w[x] = z.g[i]
    return tuple(w)
