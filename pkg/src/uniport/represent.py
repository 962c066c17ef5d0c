"""Linear representations of uniform polymatroids over GF(p) and the search
for a vector beta whose port is a prescribed family.

A representation assigns each block x a subspace V_x of GF(p)^D given by
a :class:`FieldMatrix` of spanning columns, so that the sum of the V_x over
any X has dimension h_|X|.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, replace
from typing import Sequence

from .access import IncompatibleError
from .compat import DeltaFamily, eta2_split, is_compatible
from .core import UniportError, elements, format_family, popcount, subset_list
from .gf import (
    FieldMatrix,
    Vec,
    check_prime,
    column_basis,
    hstack,
    in_span,
    intersect_column_spaces,
    random_in_span,
    rank_of,
)
from .polymatroid import UniformPolymatroid


@dataclass(frozen=True)
class Representation:
    z: UniformPolymatroid
    p: int
    ambient_dim: int
    block_bases: tuple[FieldMatrix, ...]
    multiplicities: tuple[int, ...]
    eval_points: tuple[int, ...]
    # (first row, row count) of every Vandermonde band
    bands: tuple[tuple[int, int], ...] = ()
    sheared: int = 0

    @property
    def m(self) -> int:
        return self.z.m

    def subspace(self, mask: int) -> FieldMatrix:
        """Spanning columns of V_X."""
        return hstack(self.p, self.ambient_dim, (self.block_bases[x] for x in elements(mask)))

    def rank_of_subset(self, mask: int) -> int:
        return rank_of(self.subspace(mask))

    def as_json(self) -> dict:
        return {
            "p": self.p,
            "ambientDim": self.ambient_dim,
            "multiplicities": list(self.multiplicities),
            "evalPoints": list(self.eval_points),
            "sheared": subset_list(self.sheared),
            "bases": [[list(c) for c in b.columns()] for b in self.block_bases],
        }


def rank_failures(rep: Representation) -> list[int]:
    """Subsets X with rank(V_X) != h_|X|."""
    h = rep.z.h
    return [x for x in range(1 << rep.m) if rep.rank_of_subset(x) != h[popcount(x)]]


def build_representation(z: UniformPolymatroid, p: int) -> Representation:
    """Direct sum of uniform matroids, one Vandermonde band per copy.

    A band with k rows holds, for block x, the column (1, a_x, ..., a_x^(k-1))
    with a_x = x. There are c_k = g_{k-1} - g_k bands of k rows.
    """
    check_prime(p)
    m = z.m
    if p < m + 1:
        raise UniportError(f"prime {p} too small: need p >= m + 1 = {m + 1}")
    points = tuple(x % p for x in range(1, m + 1))
    mult = tuple(z.g[k - 1] - z.g[k] for k in range(1, m + 1))
    bands = []
    row = 0
    for k in range(1, m + 1):
        for _ in range(mult[k - 1]):
            bands.append((row, k))
            row += k
    dim = row
    bases = []
    for x in range(m):
        cols = []
        for start, k in bands:
            col = [0] * dim
            for i in range(k):
                col[start + i] = pow(points[x], i, p)
            cols.append(tuple(col))
        bases.append(FieldMatrix.from_columns(p, cols, dim))
    rep = Representation(z, p, dim, tuple(bases), mult, points, tuple(bands))
    bad = rank_failures(rep)
    if bad:
        raise UniportError(f"representation rank check failed on {format_family(bad[:3])}")
    return rep


# -- simple extensions -----------------------------------------------------


@dataclass(frozen=True)
class Extension:
    base: Representation
    beta: Vec
    realized_delta: DeltaFamily

    def rank_with_beta(self, mask: int) -> int:
        """Rank of V_X together with beta, i.e. h'(X + x_0)."""
        sub = self.base.subspace(mask)
        return rank_of(hstack(sub.p, sub.nrows, [sub, FieldMatrix.from_columns(sub.p, [self.beta], sub.nrows)]))

    def as_json(self) -> dict:
        return {
            "representation": self.base.as_json(),
            "beta": list(self.beta),
            "realizedDelta": self.realized_delta.as_json(),
        }


def realized_family(rep: Representation, beta: Sequence[int]) -> DeltaFamily:
    """{X : beta in V_X}, which is monotone by construction."""
    if not any(beta):
        raise UniportError("beta must be nonzero")
    hits = [x for x in range(1, 1 << rep.m) if in_span(rep.subspace(x), beta) is not None]
    if not hits:
        raise UniportError("beta lies outside V_J")
    return DeltaFamily.from_sets(rep.m, hits)


def verify_port(ext: Extension, d: DeltaFamily) -> tuple[bool, int | None]:
    """Check beta in V_X <=> X in D for every X; return the first violating X."""
    for x in range(1 << ext.base.m):
        inside = in_span(ext.base.subspace(x), ext.beta) is not None
        if inside != d.contains(x):
            return False, x
    return True, None


class BetaNotFound(UniportError):
    """No beta found. This is a diagnostic, not a proof that none exists."""

    def __init__(self, reason: str, dim_w: int, blocking: Sequence[int], captures: dict, tries: int):
        super().__init__(f"no beta found: {reason} (dim W = {dim_w}, tries = {tries})")
        self.reason = reason
        self.dim_w = dim_w
        self.blocking = tuple(blocking)
        self.captures = dict(captures)
        self.tries = tries

    def as_json(self) -> dict:
        return {
            "found": False,
            "reason": self.reason,
            "dimW": self.dim_w,
            "forbiddenContainingW": [subset_list(y) for y in self.blocking],
            "captures": {format_family([y]): n for y, n in self.captures.items()},
            "tries": self.tries,
        }


def maximal_non_members(d: DeltaFamily) -> list[int]:
    outside = [x for x in range(1 << d.m) if not d.contains(x)]
    return [y for y in outside if not any(o != y and y & ~o == 0 for o in outside)]


def common_subspace(rep: Representation, d: DeltaFamily) -> FieldMatrix:
    """W, the intersection of V_X over the minimal sets X of D."""
    w = column_basis(rep.subspace(d.min_sets[0]))
    for x in d.min_sets[1:]:
        w = intersect_column_spaces(w, rep.subspace(x))
    return w


def shear(rep: Representation, subset: int, rng: random.Random) -> Representation | None:
    """Apply v -> v + (nu . v) u to the V_x with x in ``subset``.

    nu reads the rows of the smallest bands and u lives in the larger ones,
    so the map is invertible; ranks are re-verified before use.
    """
    if not rep.bands:
        return None
    small = min(k for _, k in rep.bands)
    low = [r for s, k in rep.bands if k == small for r in range(s, s + k)]
    high = [r for s, k in rep.bands if k > small for r in range(s, s + k)]
    if not high:
        return None
    p, dim = rep.p, rep.ambient_dim
    nu = [0] * dim
    u = [0] * dim
    for r in low:
        nu[r] = rng.randrange(p)
    for r in high:
        u[r] = rng.randrange(p)
    if not any(nu) or not any(u):
        return None

    def apply(col):
        t = sum(a * b for a, b in zip(nu, col)) % p
        return tuple((c + t * ui) % p for c, ui in zip(col, u))

    bases = list(rep.block_bases)
    for x in elements(subset):
        bases[x] = FieldMatrix.from_columns(p, [apply(c) for c in bases[x].columns()], dim)
    out = replace(rep, block_bases=tuple(bases), sheared=subset)
    if rank_failures(out):
        return None
    return out


def _sample_nonzero(w: FieldMatrix, rng: random.Random) -> Vec:
    while True:
        v = random_in_span(w, rng)
        if any(v):
            return v


def find_beta(
    rep: Representation,
    d: DeltaFamily,
    max_tries: int = 200,
    rng: random.Random | None = None,
    allow_shear: bool = True,
    samples_per_representation: int = 10,
) -> Extension:
    """Search for beta with {X : beta in V_X} = D.

    beta is drawn uniformly from W - {0} and accepted when it avoids V_Y
    for every maximal Y outside D. If W vanishes or sits inside a forbidden
    V_Y, no sample can succeed, so the search moves to a sheared copy of
    the representation (unless ``allow_shear`` is False, in which case it
    stops at once). Every sample and every shear attempt uses up one try.
    """
    if rng is None:
        rng = random.Random(0)
    z = rep.z
    compat = is_compatible(z, d)
    if not compat:
        raise IncompatibleError(z, d, compat)
    forbidden = maximal_non_members(d)
    singles = sum(x for x in d.min_sets if popcount(x) == 1)
    captures: dict[int, int] = {}
    base_dim = None
    base_blocking: list[int] = []
    tries = 0
    current = rep
    shears = 0
    while tries < max_tries:
        w = common_subspace(current, d)
        forb = [(y, current.subspace(y)) for y in forbidden]
        blocking = [y for y, fy in forb if all(in_span(fy, c) is not None for c in w.columns())]
        if base_dim is None:
            base_dim, base_blocking = w.ncols, blocking
            if w.ncols == 0 and not allow_shear:
                raise BetaNotFound("empty intersection", 0, [], captures, tries)
        if w.ncols and not blocking:
            for _ in range(samples_per_representation):
                if tries >= max_tries:
                    break
                tries += 1
                beta = _sample_nonzero(w, rng)
                hit = next((y for y, fy in forb if in_span(fy, beta) is not None), None)
                if hit is None:
                    ext = Extension(current, beta, realized_family(current, beta))
                    if ext.realized_delta != d:
                        raise UniportError("realized family differs from the target")
                    return ext
                captures[hit] = captures.get(hit, 0) + 1
        else:
            tries += 1
            for y in blocking:
                captures[y] = captures.get(y, 0) + 1
        if not allow_shear:
            break
        nxt = None
        while nxt is None and tries < max_tries:
            subset = singles if shears == 0 and singles else rng.randrange(1, 1 << z.m)
            shears += 1
            nxt = shear(rep, subset, rng)
            if nxt is None:
                tries += 1
        if nxt is None:
            break
        current = nxt
    reason = "empty intersection" if base_dim == 0 else "tries exhausted"
    raise BetaNotFound(reason, base_dim or 0, base_blocking, captures, tries)


# -- explicit construction for eta(g) = 2 ----------------------------------


def build_eta2_explicit(z: UniformPolymatroid, x_mask: int, p: int) -> Extension:
    """Ideal extension for min D = P_1(X) | P_2(J - X) when eta(g) = 2.

    Coordinates are K^(g0-g1) x K^g1 x K^g1 with V_x = {(alpha, a_x alpha)}
    and U_x = K^(g0-g1) x V_x. Blocks of X are moved by the shear
    phi(t, w) = (t, w + t_1 beta), and beta* = eps + beta lies in every
    phi(U_x) but in no untouched U_y.
    """
    check_prime(p)
    m = z.m
    if z.eta != 2:
        raise UniportError(f"explicit construction needs eta(g) = 2, got {z.eta}")
    if p <= m:
        raise UniportError(f"prime {p} too small: need p > m = {m}")
    d = eta2_family(m, x_mask)
    if not is_compatible(z, d):
        raise UniportError(f"family {d} is not compatible with g={z.g}")
    g0, g1 = z.g[0], z.g[1]
    e = g0 - g1
    dim = e + 2 * g1
    points = tuple(range(1, m + 1))

    def unit(i: int) -> list[int]:
        v = [0] * dim
        v[i] = 1
        return v

    bases = []
    for x in range(m):
        a = points[x]
        cols = [tuple(unit(i)) for i in range(e)]
        for j in range(g1):
            col = unit(e + j)
            col[e + g1 + j] = a % p
            cols.append(tuple(col))
        bases.append(cols)

    beta = unit(e)  # (0; e_0, 0), outside every V_x since a_x != 0
    if e == 0:
        if popcount(x_mask) > 1:
            raise UniportError("g_0 = g_1 allows at most one singleton")
        if x_mask:
            beta[e + g1] = points[elements(x_mask)[0]] % p
        beta_star = tuple(beta)
    elif x_mask:
        # phi only changes the eps column e_0, sending it to eps + beta
        shifted = tuple((a + b) % p for a, b in zip(unit(0), beta))
        for x in elements(x_mask):
            bases[x][0] = shifted
        beta_star = shifted
    else:
        beta_star = tuple(beta)

    mult = tuple(z.g[k - 1] - z.g[k] for k in range(1, m + 1))
    rep = Representation(
        z, p, dim, tuple(FieldMatrix.from_columns(p, c, dim) for c in bases), mult, points, sheared=x_mask
    )
    bad = rank_failures(rep)
    if bad:
        raise UniportError(f"explicit representation fails the rank check on {format_family(bad[:3])}")
    ext = Extension(rep, beta_star, realized_family(rep, beta_star))
    ok, witness = verify_port(ext, d)
    if not ok:
        raise UniportError(f"explicit extension fails the port check at {format_family([witness])}")
    return ext


def eta2_family(m: int, x_mask: int) -> DeltaFamily:
    """The family generated by the singletons of X and the pairs outside X."""
    rest = [i for i in range(m) if not (x_mask >> i) & 1]
    sets = [1 << i for i in elements(x_mask)]
    sets += [(1 << a) | (1 << b) for i, a in enumerate(rest) for b in rest[i + 1 :]]
    if not sets:
        raise UniportError("empty family")
    return DeltaFamily.from_sets(m, sets)


def known_ideal_case(z: UniformPolymatroid, d: DeltaFamily) -> str | None:
    """Which known ideal family shape (g, D) falls under, if any."""
    if z.eta == 2 and eta2_split(d) is not None and is_compatible(z, d):
        return "eta2"
    if len(d.min_sets) == 1 and z.g[z.m - 1] > 0:
        return "single-min"
    k = popcount(d.min_sets[0])
    if d == DeltaFamily.k_uniform(z.m, k) and z.g[k - 1] > z.g[k]:
        return "k-uniform"
    return None
