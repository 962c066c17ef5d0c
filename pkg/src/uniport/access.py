"""The multipartite access structure determined by a uniform polymatroid
and a compatible monotone family, held as its minimal authorized vectors."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .compat import DeltaFamily, is_compatible
from .core import UniportError, Vector, leq, mask_of, minimal_elements, sort_vectors, support_of
from .polymatroid import UniformPolymatroid, enumerate_bases


class IncompatibleError(UniportError):
    def __init__(self, z, d, result):
        super().__init__(f"family {d} is not compatible with g={z.g}")
        self.result = result


@dataclass(frozen=True)
class AccessStructure:
    z: UniformPolymatroid
    delta: DeltaFamily
    block_sizes: tuple[int, ...]
    min_vectors: tuple[Vector, ...]

    @property
    def m(self) -> int:
        return self.z.m

    def is_authorized(self, w: Sequence[int]) -> bool:
        return is_authorized(self, w)

    def as_json(self) -> list[list[int]]:
        return [list(v) for v in self.min_vectors]


def default_block_sizes(z: UniformPolymatroid) -> tuple[int, ...]:
    return (z.g[0] + 1,) * z.m


def build_gamma(
    z: UniformPolymatroid,
    d: DeltaFamily,
    block_sizes: Sequence[int] | None = None,
) -> AccessStructure:
    """min Gamma = minimal elements of the union of B(Z, X) over all X in D.

    X runs over the whole family, not only its minimal sets: a larger X
    can contribute bases that no minimal set produces.
    """
    compat = is_compatible(z, d)
    if not compat:
        raise IncompatibleError(z, d, compat)
    sizes = tuple(block_sizes) if block_sizes is not None else default_block_sizes(z)
    if len(sizes) != z.m:
        raise UniportError(f"expected {z.m} block sizes, got {len(sizes)}")
    if any(s <= z.g[0] for s in sizes):
        raise UniportError(f"every block needs more than g_0={z.g[0]} participants, got {sizes}")
    pool: set[Vector] = set()
    for x in d.members:
        pool.update(enumerate_bases(z, x))
    mins = sort_vectors(minimal_elements(pool))
    return AccessStructure(z, d, sizes, tuple(mins))


def is_authorized(gamma: AccessStructure, w: Sequence[int]) -> bool:
    if len(w) != gamma.m:
        raise UniportError(f"vector has {len(w)} coordinates, expected {gamma.m}")
    if not leq(w, gamma.block_sizes):
        raise UniportError(f"vector {tuple(w)} exceeds block sizes {gamma.block_sizes}")
    return any(leq(v, w) for v in gamma.min_vectors)


def support_family(gamma: AccessStructure) -> DeltaFamily:
    return DeltaFamily.from_sets(gamma.m, (support_of(v) for v in gamma.min_vectors))


def redundant_blocks(gamma: AccessStructure) -> int:
    """Mask of blocks that are zero in every minimal vector."""
    used = 0
    for v in gamma.min_vectors:
        used |= support_of(v)
    return mask_of(range(gamma.m)) & ~used


def is_connected(gamma: AccessStructure) -> bool:
    return redundant_blocks(gamma) == 0
