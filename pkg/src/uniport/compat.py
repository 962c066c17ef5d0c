"""Monotone families of block subsets and their compatibility with a
uniform polymatroid.

:func:`is_compatible` is the authority. The ``shortcut_*`` functions are
closed-form criteria kept for cross-checking it.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterable

from .core import (
    UniportError,
    check_ground_size,
    format_family,
    full_mask,
    is_subset,
    mask_of,
    parse_family,
    popcount,
    submasks,
    subset_list,
)
from .polymatroid import UniformPolymatroid


@dataclass(frozen=True)
class DeltaFamily:
    """Monotone increasing family on ``m`` blocks, stored by its minimal sets."""

    m: int
    min_sets: tuple[int, ...]

    def __post_init__(self):
        check_ground_size(self.m)
        sets = self.min_sets
        if not sets:
            raise UniportError("family must have at least one minimal set")
        full = full_mask(self.m)
        for s in sets:
            if s == 0:
                raise UniportError("the empty set cannot belong to the family")
            if s & ~full:
                raise UniportError(f"set {s:#b} exceeds the ground set")
        for a, b in combinations(sets, 2):
            if is_subset(a, b) or is_subset(b, a):
                raise UniportError("minimal sets must form an antichain")
        if list(sets) != sorted(set(sets)):
            object.__setattr__(self, "min_sets", tuple(sorted(set(sets))))

    @classmethod
    def from_sets(cls, m: int, sets: Iterable[int]) -> "DeltaFamily":
        """Family generated by arbitrary nonempty sets (non-minimal ones dropped)."""
        sets = set(sets)
        mins = [s for s in sets if not any(t != s and is_subset(t, s) for t in sets)]
        return cls(m, tuple(sorted(mins)))

    @classmethod
    def parse(cls, text: str, m: int) -> "DeltaFamily":
        return cls.from_sets(m, parse_family(text, m))

    @classmethod
    def k_uniform(cls, m: int, k: int) -> "DeltaFamily":
        return cls(m, tuple(sorted(mask_of(c) for c in combinations(range(m), k))))

    def contains(self, mask: int) -> bool:
        return any(is_subset(s, mask) for s in self.min_sets)

    @cached_property
    def members(self) -> tuple[int, ...]:
        """Every set of the family, ascending by mask value."""
        return tuple(x for x in range(1, 1 << self.m) if self.contains(x))

    @property
    def mu(self) -> int:
        return min(popcount(s) for s in self.min_sets)

    def __str__(self) -> str:
        return format_family(self.min_sets)

    def as_json(self) -> list[list[int]]:
        return [subset_list(s) for s in self.min_sets]


def contains(d: DeltaFamily, mask: int) -> bool:
    return d.contains(mask)


@dataclass(frozen=True)
class Compatibility:
    compatible: bool
    X: int | None = None
    Y: int | None = None
    condition: int | None = None

    def __bool__(self) -> bool:
        return self.compatible

    def as_json(self) -> dict:
        out: dict = {"compatible": self.compatible}
        if not self.compatible:
            out["witness"] = {
                "X": subset_list(self.X),
                "Y": subset_list(self.Y),
                "condition": self.condition,
            }
        return out


def is_compatible(z: UniformPolymatroid, d: DeltaFamily) -> Compatibility:
    """The two compatibility conditions, checked exhaustively.

    (1) Y subset of X, Y not in D, X in D  =>  h(Y) < h(X)
    (2) X, Y in D, X & Y not in D         =>  h(X&Y) + h(X|Y) < h(X) + h(Y)

    A failure carries the violating pair and the condition number.
    """
    if z.m != d.m:
        raise UniportError(f"dimension mismatch: polymatroid m={z.m}, family m={d.m}")
    h = z.h
    n = 1 << z.m
    inside = [d.contains(x) for x in range(n)]
    size = [popcount(x) for x in range(n)]
    for x in range(n):
        if not inside[x]:
            continue
        for y in submasks(x):
            if not inside[y] and h[size[y]] >= h[size[x]]:
                return Compatibility(False, x, y, 1)
    members = [x for x in range(n) if inside[x]]
    for i, x in enumerate(members):
        for y in members[i:]:
            meet = x & y
            if inside[meet]:
                continue
            if h[size[meet]] + h[size[x | y]] >= h[size[x]] + h[size[y]]:
                return Compatibility(False, x, y, 2)
    return Compatibility(True)


def _is_k_uniform(d: DeltaFamily) -> int | None:
    k = popcount(d.min_sets[0])
    if d.min_sets == DeltaFamily.k_uniform(d.m, k).min_sets:
        return k
    return None


def shortcut_single_min(z: UniformPolymatroid, d: DeltaFamily) -> bool:
    """A family with one minimal set is compatible iff g_{m-1} > 0."""
    if len(d.min_sets) != 1:
        raise UniportError("shortcut needs exactly one minimal set")
    return z.g[z.m - 1] > 0


def shortcut_k_uniform(z: UniformPolymatroid, d: DeltaFamily) -> bool:
    """min D = all k-subsets is compatible iff g_{k-1} > g_k."""
    k = _is_k_uniform(d)
    if k is None:
        raise UniportError("shortcut needs min D to be all k-subsets for some k")
    return z.g[k - 1] > z.g[k]


def eta2_split(d: DeltaFamily) -> int | None:
    """The X with min D = P_1(X) | P_2(J - X), or None if D has another shape."""
    singles = mask_of(i for i in range(d.m) if (1 << i) in d.min_sets)
    rest = full_mask(d.m) & ~singles
    expected = {1 << i for i in range(d.m) if (singles >> i) & 1}
    expected |= {mask_of(c) for c in combinations([i for i in range(d.m) if (rest >> i) & 1], 2)}
    if set(d.min_sets) == expected:
        return singles
    return None


def shortcut_eta2(z: UniformPolymatroid, d: DeltaFamily) -> bool:
    """Compatibility when eta(g) = 2: min D must be P_1(X) | P_2(J - X), and
    |X| <= 1 when g_0 = g_1."""
    if z.eta != 2:
        raise UniportError("shortcut needs eta(g) = 2")
    x = eta2_split(d)
    if x is None:
        return False
    if z.g[0] == z.g[1] and popcount(x) > 1:
        return False
    return True
