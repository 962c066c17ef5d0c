"""Ground-set indexing, subset masks and integer point vectors.

Blocks are numbered 1..m in every external representation (CLI flags,
JSON, text) and 0..m-1 internally. A subset of the ground set is an
``int`` bitmask with bit ``i`` standing for block ``i + 1``; a point
vector is a tuple of ``m`` non-negative ints.
"""

from __future__ import annotations

import re
from itertools import product
from typing import Iterable, Iterator, Sequence

Vector = tuple[int, ...]


class UniportError(ValueError):
    """Base class for domain errors raised by this package."""


def check_ground_size(m: int) -> int:
    if m < 2:
        raise UniportError(f"ground set needs at least 2 blocks, got m={m}")
    return m


def full_mask(m: int) -> int:
    return (1 << m) - 1


def popcount(mask: int) -> int:
    return mask.bit_count()


def elements(mask: int) -> list[int]:
    """0-based indices of the blocks in ``mask``, ascending."""
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


def mask_of(indices: Iterable[int]) -> int:
    """Mask from 0-based indices."""
    mask = 0
    for i in indices:
        mask |= 1 << i
    return mask


def submasks(mask: int) -> Iterator[int]:
    """All submasks of ``mask`` in ascending order, including 0 and ``mask``."""
    subs = []
    s = mask
    while True:
        subs.append(s)
        if s == 0:
            break
        s = (s - 1) & mask
    return reversed(subs)


def is_subset(a: int, b: int) -> bool:
    return a & ~b == 0


def support_of(v: Sequence[int]) -> int:
    return mask_of(i for i, c in enumerate(v) if c != 0)


def restrict(v: Sequence[int], mask: int) -> Vector:
    """Zero every coordinate of ``v`` outside ``mask``."""
    return tuple(c if (mask >> i) & 1 else 0 for i, c in enumerate(v))


def modulus(v: Sequence[int]) -> int:
    return sum(v)


def unit_vector(m: int, z: int) -> Vector:
    """e_z for a 1-based block index ``z``."""
    if not 1 <= z <= m:
        raise UniportError(f"block index {z} outside 1..{m}")
    return tuple(1 if i == z - 1 else 0 for i in range(m))


def leq(u: Sequence[int], v: Sequence[int]) -> bool:
    """Coordinatewise order u <= v."""
    return all(a <= b for a, b in zip(u, v))


def minimal_elements(vectors: Iterable[Vector]) -> list[Vector]:
    """Minimal elements under the coordinatewise order, deduplicated."""
    pool = sorted(set(vectors), key=sum)
    mins: list[Vector] = []
    for v in pool:
        if not any(leq(u, v) for u in mins):
            mins.append(v)
    return mins


def sort_vectors(vectors: Iterable[Vector]) -> list[Vector]:
    """Canonical emission order: descending lexicographic."""
    return sorted(vectors, reverse=True)


def box(upper: Sequence[int]) -> Iterator[Vector]:
    """All integer vectors 0 <= v <= upper."""
    return product(*(range(u + 1) for u in upper))


# -- text syntax -----------------------------------------------------------

_SET_RE = re.compile(r"^\{\s*(\d+(\s*,\s*\d+)*)?\s*\}$")


def parse_subset(text: str, m: int | None = None) -> int:
    """Parse ``{1,3,4}`` (1-based) into a mask."""
    text = text.strip()
    if not _SET_RE.match(text):
        raise UniportError(f"bad subset syntax: {text!r}")
    body = text[1:-1].strip()
    mask = 0
    if body:
        for tok in body.split(","):
            z = int(tok)
            if z < 1 or (m is not None and z > m):
                raise UniportError(f"block index {z} out of range in {text!r}")
            mask |= 1 << (z - 1)
    return mask


def parse_family(text: str, m: int | None = None) -> list[int]:
    """Parse ``{1};{2,3}`` into a list of masks."""
    parts = [p for p in text.split(";") if p.strip()]
    if not parts:
        raise UniportError("empty family")
    return [parse_subset(p, m) for p in parts]


def parse_vector(text: str) -> Vector:
    text = text.strip()
    if not (text.startswith("(") and text.endswith(")")):
        raise UniportError(f"bad vector syntax: {text!r}")
    body = text[1:-1].strip()
    coords = tuple(int(t) for t in body.split(",")) if body else ()
    if any(c < 0 for c in coords):
        raise UniportError(f"negative coordinate in {text!r}")
    return coords


def format_subset(mask: int) -> str:
    return "{" + ",".join(str(i + 1) for i in elements(mask)) + "}"


def format_family(masks: Iterable[int]) -> str:
    return ";".join(format_subset(x) for x in masks)


def format_vector(v: Sequence[int]) -> str:
    return "(" + ",".join(str(c) for c in v) + ")"


def subset_list(mask: int) -> list[int]:
    """1-based element list, the JSON form of a subset."""
    return [i + 1 for i in elements(mask)]
