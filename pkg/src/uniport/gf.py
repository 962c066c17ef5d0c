"""Dense linear algebra over a prime field GF(p).

Vectors are tuples of ints in ``[0, p)``. A :class:`FieldMatrix` is used
mostly as a list of columns spanning a subspace.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .core import UniportError

Vec = tuple[int, ...]


def next_prime_at_least(n: int) -> int:
    if n < 2:
        raise UniportError(f"need n >= 2, got {n}")
    while True:
        if all(n % d for d in range(2, int(n**0.5) + 1)):
            return n
        n += 1


def default_prime(m: int) -> int:
    return next_prime_at_least(max(m + 1, 2**m + 1))


def check_prime(p: int) -> int:
    if p < 2 or next_prime_at_least(p) != p:
        raise UniportError(f"{p} is not prime")
    return p


def inverse(a: int, p: int) -> int:
    a %= p
    if a == 0:
        raise ZeroDivisionError("0 has no inverse")
    return pow(a, p - 2, p)


@dataclass(frozen=True)
class FieldMatrix:
    p: int
    rows: tuple[Vec, ...]
    ncols: int

    def __post_init__(self):
        for r in self.rows:
            if len(r) != self.ncols:
                raise UniportError("ragged matrix")
        if any(not 0 <= x < self.p for r in self.rows for x in r):
            object.__setattr__(self, "rows", tuple(tuple(x % self.p for x in r) for r in self.rows))

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @classmethod
    def from_rows(cls, p: int, rows: Sequence[Sequence[int]], ncols: int | None = None) -> "FieldMatrix":
        rows = tuple(tuple(int(x) % p for x in r) for r in rows)
        if ncols is None:
            ncols = len(rows[0]) if rows else 0
        return cls(p, rows, ncols)

    @classmethod
    def from_columns(cls, p: int, cols: Sequence[Sequence[int]], nrows: int) -> "FieldMatrix":
        for c in cols:
            if len(c) != nrows:
                raise UniportError(f"column of length {len(c)}, expected {nrows}")
        rows = tuple(tuple(int(c[i]) % p for c in cols) for i in range(nrows))
        return cls(p, rows, len(cols))

    @classmethod
    def zeros(cls, p: int, nrows: int, ncols: int) -> "FieldMatrix":
        return cls(p, tuple((0,) * ncols for _ in range(nrows)), ncols)

    @classmethod
    def identity(cls, p: int, n: int) -> "FieldMatrix":
        return cls(p, tuple(tuple(int(i == j) for j in range(n)) for i in range(n)), n)

    def columns(self) -> list[Vec]:
        return [tuple(r[j] for r in self.rows) for j in range(self.ncols)]

    def as_json(self) -> dict:
        return {"p": self.p, "rows": [list(r) for r in self.rows]}


def hstack(p: int, nrows: int, mats: Iterable[FieldMatrix]) -> FieldMatrix:
    cols: list[Vec] = []
    for mat in mats:
        if mat.p != p or mat.nrows != nrows:
            raise UniportError("hstack: modulus or row count mismatch")
        cols.extend(mat.columns())
    return FieldMatrix.from_columns(p, cols, nrows)


def rref(mat: FieldMatrix) -> tuple[list[list[int]], list[int]]:
    """Reduced row echelon form of a private copy, with pivot columns."""
    p = mat.p
    a = [list(r) for r in mat.rows]
    pivots: list[int] = []
    row = 0
    for col in range(mat.ncols):
        if row == len(a):
            break
        piv = next((i for i in range(row, len(a)) if a[i][col]), None)
        if piv is None:
            continue
        a[row], a[piv] = a[piv], a[row]
        inv = inverse(a[row][col], p)
        a[row] = [x * inv % p for x in a[row]]
        for i in range(len(a)):
            if i != row and a[i][col]:
                f = a[i][col]
                a[i] = [(x - f * y) % p for x, y in zip(a[i], a[row])]
        pivots.append(col)
        row += 1
    return a, pivots


def rank_of(mat: FieldMatrix) -> int:
    return len(rref(mat)[1])


def nullspace(mat: FieldMatrix) -> list[Vec]:
    """Basis of {x : M x = 0}."""
    p = mat.p
    a, pivots = rref(mat)
    free = [j for j in range(mat.ncols) if j not in pivots]
    basis = []
    for f in free:
        x = [0] * mat.ncols
        x[f] = 1
        for i, pc in enumerate(pivots):
            x[pc] = -a[i][f] % p
        basis.append(tuple(x))
    return basis


def in_span(mat: FieldMatrix, v: Sequence[int]) -> Vec | None:
    """Coefficients c with M c = v, or None when v is outside the column space."""
    if len(v) != mat.nrows:
        raise UniportError(f"vector length {len(v)} does not match {mat.nrows} rows")
    p = mat.p
    aug = FieldMatrix(p, tuple(r + (int(x) % p,) for r, x in zip(mat.rows, v)), mat.ncols + 1)
    a, pivots = rref(aug)
    if mat.ncols in pivots:
        return None
    coeffs = [0] * mat.ncols
    for i, pc in enumerate(pivots):
        coeffs[pc] = a[i][mat.ncols]
    return tuple(coeffs)


def column_basis(mat: FieldMatrix) -> FieldMatrix:
    """The pivot columns of M, a basis of its column space."""
    _, pivots = rref(mat)
    cols = mat.columns()
    return FieldMatrix.from_columns(mat.p, [cols[j] for j in pivots], mat.nrows)


def intersect_column_spaces(a: FieldMatrix, b: FieldMatrix) -> FieldMatrix:
    """Basis of colspace(A) & colspace(B), from the kernel of [A | -B]."""
    if a.nrows != b.nrows or a.p != b.p:
        raise UniportError("intersect: modulus or row count mismatch")
    p = a.p
    a = column_basis(a)
    b = column_basis(b)
    neg_b = FieldMatrix(p, tuple(tuple(-x % p for x in r) for r in b.rows), b.ncols)
    kernel = nullspace(hstack(p, a.nrows, [a, neg_b]))
    cols = []
    for k in kernel:
        lam = k[: a.ncols]
        cols.append(tuple(sum(r[j] * lam[j] for j in range(a.ncols)) % p for r in a.rows))
    return column_basis(FieldMatrix.from_columns(p, cols, a.nrows))


def mat_vec(mat: FieldMatrix, x: Sequence[int]) -> Vec:
    return tuple(sum(r[j] * x[j] for j in range(mat.ncols)) % mat.p for r in mat.rows)


def dot(u: Sequence[int], v: Sequence[int], p: int) -> int:
    return sum(a * b for a, b in zip(u, v)) % p


def random_in_span(mat: FieldMatrix, rng) -> Vec:
    """Uniform element of the column space (M must have independent columns)."""
    coeffs = [rng.randrange(mat.p) for _ in range(mat.ncols)]
    return mat_vec(mat, coeffs)
