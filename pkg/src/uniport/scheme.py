"""Ideal linear secret sharing from a verified extension.

Each participant gets one vector in its block's subspace V_x. A dealer
picks r with <beta, r> = secret and hands participant q the single field
element <v_q, r>; a set of participants recovers the secret exactly when
beta lies in the span of their vectors.

Participants are numbered block-major; externally they are written
``block.index`` with both parts 1-based.
"""

from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

from .access import AccessStructure, build_gamma
from .compat import DeltaFamily
from .core import UniportError
from .gf import FieldMatrix, Vec, default_prime, dot, in_span, inverse, random_in_span
from .polymatroid import UniformPolymatroid
from .represent import Extension, Representation, find_beta, build_representation, realized_family

MAX_PARTICIPANTS = 14


@dataclass(frozen=True)
class SchemeInstance:
    extension: Extension
    block_sizes: tuple[int, ...]
    vectors: tuple[Vec, ...]  # one per participant, block-major
    gamma: AccessStructure
    seed: int | None = None
    verified: bool = False

    @property
    def p(self) -> int:
        return self.extension.base.p

    @property
    def beta(self) -> Vec:
        return self.extension.beta

    @property
    def owners(self) -> tuple[int, ...]:
        """Block of each participant."""
        return tuple(x for x, n in enumerate(self.block_sizes) for _ in range(n))

    def label(self, q: int) -> str:
        block = self.owners[q]
        return f"{block + 1}.{q - sum(self.block_sizes[:block]) + 1}"

    def count_vector(self, subset: Iterable[int]) -> tuple[int, ...]:
        counts = [0] * len(self.block_sizes)
        for q in subset:
            counts[self.owners[q]] += 1
        return tuple(counts)

    def as_json(self) -> dict:
        z = self.extension.base.z
        return {
            "schema": 1,
            "p": self.p,
            "g": list(z.g[:-1]),
            "delta": self.extension.realized_delta.as_json(),
            "blocks": list(self.block_sizes),
            "bases": self.extension.base.as_json()["bases"],
            "beta": list(self.beta),
            "vectors": [list(v) for v in self.vectors],
            "seed": self.seed,
        }


@dataclass(frozen=True)
class ShareBundle:
    secret: int
    shares: tuple[int, ...]
    seed: int

    def as_json(self) -> dict:
        return {"schema": 1, "secret": self.secret, "shares": list(self.shares), "seed": self.seed}

    @classmethod
    def from_json(cls, data: dict) -> "ShareBundle":
        return cls(int(data["secret"]), tuple(int(s) for s in data["shares"]), int(data["seed"]))


def parse_participants(text: str, block_sizes: Sequence[int]) -> list[int]:
    """``"1.1,2.2"`` -> flat participant indices."""
    out = []
    for tok in (t.strip() for t in text.split(",")):
        if not tok:
            continue
        try:
            b, i = (int(s) for s in tok.split("."))
        except ValueError:
            raise UniportError(f"bad participant {tok!r}, expected block.index") from None
        if not 1 <= b <= len(block_sizes) or not 1 <= i <= block_sizes[b - 1]:
            raise UniportError(f"participant {tok} does not exist for blocks {tuple(block_sizes)}")
        q = sum(block_sizes[: b - 1]) + i - 1
        if q in out:
            raise UniportError(f"participant {tok} listed twice")
        out.append(q)
    return sorted(out)


def _span_of(p: int, dim: int, vectors: Sequence[Vec]) -> FieldMatrix:
    return FieldMatrix.from_columns(p, list(vectors), dim)


def _subset_ok(inst_like, subset: Sequence[int], vectors: Sequence[Vec]) -> bool:
    ext, gamma, owners = inst_like
    p, dim = ext.base.p, ext.base.ambient_dim
    recovers = in_span(_span_of(p, dim, [vectors[q] for q in subset]), ext.beta) is not None
    counts = [0] * gamma.m
    for q in subset:
        counts[owners[q]] += 1
    return recovers == gamma.is_authorized(counts)


def _check_sizes(z: UniformPolymatroid, block_sizes: Sequence[int], cap: int) -> tuple[int, ...]:
    sizes = tuple(int(n) for n in block_sizes)
    if len(sizes) != z.m:
        raise UniportError(f"expected {z.m} block sizes, got {len(sizes)}")
    if any(n <= z.g[0] for n in sizes):
        raise UniportError(f"every block needs more than g_0={z.g[0]} participants, got {sizes}")
    if sum(sizes) > cap:
        raise UniportError(f"{sum(sizes)} participants exceed the verification cap of {cap}")
    return sizes


def assign_vectors(
    ext: Extension,
    block_sizes: Sequence[int],
    rng: random.Random,
    max_tries: int = 200,
    cap: int = MAX_PARTICIPANTS,
    seed: int | None = None,
) -> SchemeInstance:
    """Sample each participant's vector uniformly in its V_x.

    Participants are added one at a time. A new vector is kept only if
    every subset containing it recovers beta exactly when its count vector
    is authorized; otherwise it is resampled, up to ``max_tries`` times.
    """
    z = ext.base.z
    sizes = _check_sizes(z, block_sizes, cap)
    gamma = build_gamma(z, ext.realized_delta, sizes)
    owners = tuple(x for x, n in enumerate(sizes) for _ in range(n))
    ctx = (ext, gamma, owners)
    vectors: list[Vec] = []
    for q, x in enumerate(owners):
        basis = ext.base.block_bases[x]
        for _ in range(max_tries):
            vectors.append(random_in_span(basis, rng))
            bad = None
            for r in range(q + 1):
                for rest in combinations(range(q), r):
                    subset = rest + (q,)
                    if not _subset_ok(ctx, subset, vectors):
                        bad = subset
                        break
                if bad:
                    break
            if bad is None:
                break
            vectors.pop()
        else:
            labels = ",".join(f"{owners[i] + 1}.{i - sum(sizes[: owners[i]]) + 1}" for i in bad)
            raise UniportError(f"could not place participant vectors; last failing subset {{{labels}}}")
    inst = SchemeInstance(ext, sizes, tuple(vectors), gamma, seed)
    ok, witness = verify_scheme(inst, cap)
    if not ok:
        raise UniportError(f"scheme verification failed on {witness}")
    return SchemeInstance(ext, sizes, tuple(vectors), gamma, seed, verified=True)


def verify_scheme(inst: SchemeInstance, cap: int = MAX_PARTICIPANTS) -> tuple[bool, tuple[int, ...] | None]:
    """Exhaustive check that beta is in span(A) iff pi(A) is authorized."""
    n = len(inst.vectors)
    if n > cap:
        raise UniportError(f"{n} participants exceed the verification cap of {cap}")
    p, dim = inst.p, inst.extension.base.ambient_dim
    for i, x in enumerate(inst.owners):
        if in_span(inst.extension.base.block_bases[x], inst.vectors[i]) is None:
            return False, (i,)
    ctx = (inst.extension, inst.gamma, inst.owners)
    for mask in range(1 << n):
        subset = tuple(q for q in range(n) if (mask >> q) & 1)
        if not _subset_ok(ctx, subset, inst.vectors):
            return False, subset
    return True, None


def distribute(inst: SchemeInstance, secret: int, seed: int) -> ShareBundle:
    """Uniform r on the hyperplane <beta, r> = secret, shares <v_q, r>."""
    if not inst.verified:
        raise UniportError("scheme has not been verified")
    p = inst.p
    secret %= p
    rng = random.Random(seed)
    beta = inst.beta
    r = [rng.randrange(p) for _ in beta]
    i = next(j for j, b in enumerate(beta) if b)
    r[i] = (r[i] + (secret - dot(beta, r, p)) * inverse(beta[i], p)) % p
    shares = tuple(dot(v, r, p) for v in inst.vectors)
    return ShareBundle(secret, shares, seed)


def reconstruction_coefficients(inst: SchemeInstance, subset: Sequence[int]) -> dict[int, int] | None:
    subset = sorted(subset)
    span = _span_of(inst.p, inst.extension.base.ambient_dim, [inst.vectors[q] for q in subset])
    coeffs = in_span(span, inst.beta)
    if coeffs is None:
        return None
    return dict(zip(subset, coeffs))


def reconstruct(inst: SchemeInstance, subset: Sequence[int], shares: Sequence[int]) -> int:
    """Recover the secret from the shares of ``subset``.

    ``shares`` is indexed by participant: a full bundle, or a mapping.
    """
    coeffs = reconstruction_coefficients(inst, subset)
    if coeffs is None:
        raise UniportError("no reconstruction coefficients exist for this set")
    return sum(c * shares[q] for q, c in coeffs.items()) % inst.p


def privacy_check(inst: SchemeInstance, subset: Sequence[int], trials: int, rng: random.Random) -> dict:
    """Exact rank test plus share-frequency counts for two secrets.

    The counts are reported as a chi-square-style statistic; no threshold
    is applied.
    """
    if inst.gamma.is_authorized(inst.count_vector(subset)):
        raise UniportError("privacy check needs an unauthorized set")
    exact = reconstruction_coefficients(inst, subset) is None
    subset = sorted(subset)
    s0 = 0
    s1 = rng.randrange(1, inst.p)
    tallies = []
    for s in (s0, s1):
        c = Counter()
        for _ in range(trials):
            b = distribute(inst, s, rng.randrange(2**32))
            c[tuple(b.shares[q] for q in subset)] += 1
        tallies.append(c)
    chi2 = 0.0
    for cell in set(tallies[0]) | set(tallies[1]):
        a, b = tallies[0][cell], tallies[1][cell]
        chi2 += (a - b) ** 2 / (a + b)
    return {
        "exact": exact,
        "trials": trials,
        "secrets": [s0, s1],
        "cells": len(set(tallies[0]) | set(tallies[1])),
        "chi2": chi2,
    }


def build_scheme(
    z: UniformPolymatroid,
    d: DeltaFamily,
    block_sizes: Sequence[int],
    p: int | None = None,
    seed: int = 0,
    tries: int = 200,
) -> SchemeInstance:
    """Representation, beta search and vector assignment in one call."""
    p = p or default_prime(z.m)
    rng = random.Random(seed)
    ext = find_beta(build_representation(z, p), d, tries, rng)
    return assign_vectors(ext, block_sizes, rng, tries, seed=seed)


def instance_from_json(data: dict) -> SchemeInstance:
    """Rebuild and re-verify an instance written by :meth:`SchemeInstance.as_json`."""
    p = int(data["p"])
    z = UniformPolymatroid.from_increments(data["g"])
    dim = z.h[-1]
    bases = tuple(FieldMatrix.from_columns(p, [tuple(c) for c in b], dim) for b in data["bases"])
    mult = tuple(z.g[k - 1] - z.g[k] for k in range(1, z.m + 1))
    rep = Representation(z, p, dim, bases, mult, tuple(range(1, z.m + 1)))
    beta = tuple(int(x) % p for x in data["beta"])
    target = DeltaFamily.from_sets(z.m, (sum(1 << (i - 1) for i in s) for s in data["delta"]))
    ext = Extension(rep, beta, realized_family(rep, beta))
    if ext.realized_delta != target:
        raise UniportError("instance beta does not realize the stored family")
    sizes = tuple(int(n) for n in data["blocks"])
    gamma = build_gamma(z, target, sizes)
    inst = SchemeInstance(ext, sizes, tuple(tuple(int(x) % p for x in v) for v in data["vectors"]), gamma, data.get("seed"))
    ok, witness = verify_scheme(inst)
    if not ok:
        raise UniportError(f"stored instance fails verification on {witness}")
    return SchemeInstance(ext, sizes, inst.vectors, gamma, inst.seed, verified=True)
