"""Families up to relabelling, increment-sequence sign classes, the m = 4
classification grid and the sign-pattern invariance scan."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from typing import Callable, Iterable, Sequence

from .access import build_gamma
from .compat import DeltaFamily, is_compatible
from .core import UniportError, format_family, full_mask, is_subset, parse_family
from .hierarchy import compute_relation, generic_code, hierarchy
from .polymatroid import UniformPolymatroid

MAX_M = 5
INCOMPATIBLE = "-"

# Row and column order of the reference m = 4 grid.
GRID_ROWS_M4 = (
    "{1}",
    "{1};{2}",
    "{1};{2};{3}",
    "{1};{2};{3};{4}",
    "{1};{2};{3,4}",
    "{1};{2,3}",
    "{1};{2,3};{2,4}",
    "{1};{2,3};{2,4};{3,4}",
    "{1};{2,3,4}",
    "{1,2}",
    "{1,2};{1,3}",
    "{1,2};{3,4}",
    "{1,2};{1,3};{1,4}",
    "{1,2};{1,3};{2,3}",
    "{1,2};{2,3};{1,4}",
    "{1,3};{2,3};{1,4};{2,4}",
    "{1,2};{1,3};{2,3};{1,4}",
    "{1,2};{1,3};{2,3};{1,4};{2,4}",
    "{1,2};{1,3};{2,3};{1,4};{2,4};{3,4}",
    "{1,2};{1,3,4}",
    "{1,2};{1,3};{2,3,4}",
    "{1,2};{1,3};{1,4};{2,3,4}",
    "{1,2};{1,3,4};{2,3,4}",
    "{1,2,3}",
    "{1,2,3};{1,2,4}",
    "{1,2,3};{1,2,4};{1,3,4}",
    "{1,2,3};{1,2,4};{1,3,4};{2,3,4}",
    "{1,2,3,4}",
)

GRID_COLUMNS_M4 = (
    (1, 0, 0, 0),
    (2, 1, 0, 0),
    (1, 1, 0, 0),
    (3, 2, 1, 0),
    (2, 2, 1, 0),
    (2, 1, 1, 0),
    (1, 1, 1, 0),
    (3, 2, 1, 1),
    (2, 2, 1, 1),
    (4, 3, 2, 1),
    (3, 3, 2, 1),
    (3, 2, 2, 1),
    (2, 2, 2, 1),
    (2, 1, 1, 1),
    (1, 1, 1, 1),
)


# -- families up to S_m --------------------------------------------------


def permute_mask(mask: int, perm: Sequence[int]) -> int:
    out = 0
    for i, j in enumerate(perm):
        if (mask >> i) & 1:
            out |= 1 << j
    return out


def canonical_key(m: int, sets: Iterable[int]) -> tuple[int, ...]:
    """Least sorted mask list over all relabellings of the ground set."""
    sets = tuple(sets)
    return min(tuple(sorted(permute_mask(s, p) for s in sets)) for p in permutations(range(m)))


def canonical(d: DeltaFamily) -> DeltaFamily:
    return DeltaFamily(d.m, canonical_key(d.m, d.min_sets))


@dataclass(frozen=True)
class CanonicalDelta:
    representative: DeltaFamily
    orbit_size: int


def _antichains(m: int) -> list[tuple[int, ...]]:
    """All nonempty antichains of nonempty subsets, as ascending mask tuples."""
    universe = list(range(1, 1 << m))
    out: list[tuple[int, ...]] = []

    def rec(start: int, chosen: list[int]):
        if chosen:
            out.append(tuple(chosen))
        for i in range(start, len(universe)):
            s = universe[i]
            if any(is_subset(c, s) or is_subset(s, c) for c in chosen):
                continue
            chosen.append(s)
            rec(i + 1, chosen)
            chosen.pop()

    rec(0, [])
    return out


def enumerate_deltas(m: int) -> list[CanonicalDelta]:
    """One canonical family per relabelling orbit, sorted by canonical key."""
    if not 2 <= m <= MAX_M:
        raise UniportError(f"family enumeration supports 2 <= m <= {MAX_M}, got {m}")
    orbits: dict[tuple[int, ...], int] = {}
    for sets in _antichains(m):
        key = canonical_key(m, sets)
        orbits[key] = orbits.get(key, 0) + 1
    return [CanonicalDelta(DeltaFamily(m, key), size) for key, size in sorted(orbits.items())]


# -- increment sequences by sign pattern ---------------------------------


@dataclass(frozen=True)
class SignatureClass:
    signature: tuple[int, ...]
    representative: tuple[int, ...]

    def polymatroid(self) -> UniformPolymatroid:
        return UniformPolymatroid.from_increments(self.representative)


def minimal_representative(signature: Sequence[int]) -> tuple[int, ...]:
    """Entrywise least g_0..g_{m-1} with sgn(g_{i-1} - g_i) = signature[i-1]."""
    m = len(signature)
    g = [0] * (m + 1)
    for i in range(m, 0, -1):
        g[i - 1] = g[i] + signature[i - 1]
    return tuple(g[:m])


def enumerate_signatures(m: int) -> list[SignatureClass]:
    """All 2^m - 1 realizable sign patterns.

    For m = 4 the order is that of the reference grid's columns; otherwise
    classes are sorted by eta(g) and then by representative, descending.
    """
    if m < 2:
        raise UniportError("need m >= 2")
    classes = []
    for bits in range(1, 1 << m):
        sig = tuple((bits >> (m - 1 - i)) & 1 for i in range(m))
        classes.append(SignatureClass(sig, minimal_representative(sig)))
    if m == 4:
        order = {g: i for i, g in enumerate(GRID_COLUMNS_M4)}
        classes.sort(key=lambda c: order[c.representative])
    else:
        classes.sort(key=lambda c: (c.polymatroid().eta, tuple(-x for x in c.representative)))
    return classes


# -- classification grid --------------------------------------------------


def classify_cell(z: UniformPolymatroid, d: DeltaFamily) -> str:
    if not is_compatible(z, d):
        return INCOMPATIBLE
    return hierarchy(build_gamma(z, d)).code


def table_rows(m: int) -> list[DeltaFamily]:
    """Row families; for m = 4 the reference grid's representatives, in its order."""
    if m == 4:
        rows = [DeltaFamily.from_sets(4, parse_family(r, 4)) for r in GRID_ROWS_M4]
        listed = {canonical_key(4, r.min_sets) for r in rows}
        enumerated = {c.representative.min_sets for c in enumerate_deltas(4)}
        if listed != enumerated or len(listed) != len(rows):
            raise UniportError("reference row families do not match the enumerated orbits")
        return rows
    return [c.representative for c in enumerate_deltas(m)]


@dataclass(frozen=True)
class Table:
    m: int
    rows: tuple[DeltaFamily, ...]
    columns: tuple[tuple[int, ...], ...]
    cells: tuple[tuple[str, ...], ...]

    def as_json(self) -> dict:
        return {
            "m": self.m,
            "columns": [list(g) for g in self.columns],
            "rows": [{"delta": format_family(r.min_sets), "cells": list(c)} for r, c in zip(self.rows, self.cells)],
        }

    def to_csv_lines(self) -> list[str]:
        lines = ["delta," + ",".join(" ".join(str(x) for x in g) for g in self.columns)]
        for r, c in zip(self.rows, self.cells):
            lines.append(f'"{format_family(r.min_sets)}",' + ",".join(c))
        return lines

    def to_text_lines(self) -> list[str]:
        labels = [format_family(r.min_sets) for r in self.rows]
        width = max(len(s) for s in labels)
        head = " " * (width + 4) + " ".join(f"{j + 1:>2}" for j in range(len(self.columns)))
        lines = [head]
        for i, (lab, c) in enumerate(zip(labels, self.cells), start=1):
            lines.append(f"{i:>2}  {lab:<{width}} " + " ".join(f"{x:>2}" for x in c))
        return lines


def build_table(m: int = 4) -> Table:
    rows = table_rows(m)
    columns = [c.representative for c in enumerate_signatures(m)]
    cells = []
    for d in rows:
        line = []
        for g in columns:
            z = UniformPolymatroid.from_increments(g)
            if not is_compatible(z, d):
                line.append(INCOMPATIBLE)
                continue
            report = hierarchy(build_gamma(z, d))
            line.append(report.code)
        cells.append(tuple(line))
    return Table(m, tuple(rows), tuple(columns), tuple(cells))


# -- sign-pattern invariance scan ----------------------------------------

Transform = Callable[[tuple[int, ...]], tuple[int, ...]]


def add_one(g: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(x + 1 if x else 0 for x in g)


def scale_two(g: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(2 * x for x in g)


TRANSFORMS: dict[str, Transform] = {"add1": add_one, "scale2": scale_two}


def apply_transform(name: str, transform: Transform, g: tuple[int, ...]) -> tuple[int, ...]:
    out = tuple(transform(g))
    if len(out) != len(g) or not out or out[0] <= 0:
        raise UniportError(f"transform {name} maps {g} to {out}, which has g_0 <= 0")
    if any(a < b for a, b in zip(out, out[1:])) or any(x < 0 for x in out):
        raise UniportError(f"transform {name} maps {g} to non-monotone {out}")
    before = UniformPolymatroid.from_increments(g).signature
    after = UniformPolymatroid.from_increments(out).signature
    if before != after:
        raise UniportError(f"transform {name} changes the sign pattern of {g}")
    return out


def conjecture_scan(m: int, transforms: dict[str, Transform] | Sequence[str] = ("add1", "scale2")) -> dict:
    """Compare full preorders between each minimal representative and its
    transformed sequences, over every family compatible with both.

    Mismatches are collected verbatim, never raised.
    """
    if not isinstance(transforms, dict):
        transforms = {name: TRANSFORMS[name] for name in transforms}
    deltas = [c.representative for c in enumerate_deltas(m)]
    compared = 0
    mismatches = []
    for sig in enumerate_signatures(m):
        z0 = sig.polymatroid()
        for name, fn in transforms.items():
            z1 = UniformPolymatroid.from_increments(apply_transform(name, fn, sig.representative))
            for d in deltas:
                if not (is_compatible(z0, d) and is_compatible(z1, d)):
                    continue
                compared += 1
                r0 = compute_relation(build_gamma(z0, d))
                r1 = compute_relation(build_gamma(z1, d))
                if r0 != r1:
                    mismatches.append(
                        {
                            "transform": name,
                            "g": list(z0.g[:-1]),
                            "g_transformed": list(z1.g[:-1]),
                            "delta": format_family(d.min_sets),
                            "relation": [[int(b) for b in row] for row in r0],
                            "relation_transformed": [[int(b) for b in row] for row in r1],
                        }
                    )
    return {"m": m, "transforms": list(transforms), "compared": compared, "mismatches": mismatches}


__all__ = [
    "CanonicalDelta",
    "SignatureClass",
    "Table",
    "build_table",
    "canonical",
    "canonical_key",
    "classify_cell",
    "conjecture_scan",
    "enumerate_deltas",
    "enumerate_signatures",
    "generic_code",
    "full_mask",
]
