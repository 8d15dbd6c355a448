"""Exact dense linear algebra over an exact scalar field.

Everything here is elimination-based and exact: reduced row echelon
form, deterministic solves (free variables pinned to zero), kernels,
determinants and inverses.  ``Subspace`` values are canonical row
spaces (RREF basis), so subspace equality is plain structural equality.
Matrices are dense; ambient dimensions in this project stay below a few
dozen.
"""

from __future__ import annotations

from bisect import bisect_left
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .fields import FieldSpec, Scalar

__all__ = [
    "Matrix",
    "RowReducer",
    "Subspace",
    "determinant",
    "inverse",
    "kernel",
    "rref",
    "solve",
    "span_membership",
]

Vector = tuple


class Matrix:
    """Immutable dense matrix over one ground field."""

    __slots__ = ("field", "nrows", "ncols", "entries")

    def __init__(self, field: FieldSpec, rows: Iterable[Sequence[Scalar]],
                 ncols: int | None = None):
        entries = tuple(tuple(row) for row in rows)
        if entries:
            width = len(entries[0])
            if any(len(row) != width for row in entries):
                raise ValueError("ragged rows")
            if ncols is not None and ncols != width:
                raise ValueError("ncols disagrees with row width")
            ncols = width
        elif ncols is None:
            raise ValueError("empty matrix needs an explicit ncols")
        self.field = field
        self.nrows = len(entries)
        self.ncols = ncols
        self.entries = entries

    @classmethod
    def identity(cls, field: FieldSpec, n: int) -> "Matrix":
        zero, one = field.zero, field.one
        return cls(field, [[one if i == j else zero for j in range(n)]
                           for i in range(n)])

    @classmethod
    def zeros(cls, field: FieldSpec, nrows: int, ncols: int) -> "Matrix":
        zero = field.zero
        return cls(field, [[zero] * ncols for _ in range(nrows)], ncols=ncols)

    @classmethod
    def from_columns(cls, field: FieldSpec, columns: Sequence[Sequence[Scalar]]) -> "Matrix":
        cols = [tuple(c) for c in columns]
        if not cols:
            raise ValueError("no columns")
        n = len(cols[0])
        if any(len(c) != n for c in cols):
            raise ValueError("ragged columns")
        return cls(field, [[cols[j][i] for j in range(len(cols))] for i in range(n)])

    def row(self, i: int) -> Vector:
        return self.entries[i]

    def column(self, j: int) -> Vector:
        return tuple(row[j] for row in self.entries)

    def rows_list(self) -> list[list[Scalar]]:
        return [list(row) for row in self.entries]

    def matvec(self, v: Sequence[Scalar]) -> Vector:
        if len(v) != self.ncols:
            raise ValueError(f"matvec length mismatch: {self.ncols} vs {len(v)}")
        return tuple(sum((row[j] * v[j] for j in range(self.ncols)),
                         start=self.field.zero)
                     for row in self.entries)

    def matmul(self, other: "Matrix") -> "Matrix":
        if self.ncols != other.nrows:
            raise ValueError("matmul dimension mismatch")
        zero = self.field.zero
        out = []
        for row in self.entries:
            out.append([sum((row[k] * other.entries[k][j] for k in range(self.ncols)),
                            start=zero)
                        for j in range(other.ncols)])
        return Matrix(self.field, out, ncols=other.ncols)

    def transpose(self) -> "Matrix":
        return Matrix(self.field,
                      [[self.entries[i][j] for i in range(self.nrows)]
                       for j in range(self.ncols)],
                      ncols=self.nrows)

    def __eq__(self, other) -> bool:
        return (isinstance(other, Matrix) and self.field == other.field
                and self.ncols == other.ncols and self.entries == other.entries)

    def __hash__(self):
        return hash((self.field, self.ncols, self.entries))

    def __repr__(self) -> str:
        body = "; ".join(" ".join(str(x) for x in row) for row in self.entries)
        return f"Matrix({self.nrows}x{self.ncols}: {body})"


class RowReducer:
    """Incremental RREF accumulator: a canonical row-space under insertion."""

    def __init__(self, field: FieldSpec, ncols: int):
        self.field = field
        self.ncols = ncols
        self.rows: list[list[Scalar]] = []
        self.pivots: list[int] = []

    @property
    def rank(self) -> int:
        return len(self.rows)

    def reduce(self, vec: Sequence[Scalar]) -> list[Scalar]:
        """Residual of ``vec`` against the accumulated row space."""
        v = list(vec)
        for row, p in zip(self.rows, self.pivots):
            c = v[p]
            if c:
                for j in range(p, self.ncols):
                    if row[j]:
                        v[j] = v[j] - c * row[j]
        return v

    def insert(self, vec: Sequence[Scalar]) -> bool:
        """Add a vector; returns True iff it enlarged the span."""
        if len(vec) != self.ncols:
            raise ValueError("vector length mismatch")
        v = self.reduce(vec)
        lead = next((j for j in range(self.ncols) if v[j]), None)
        if lead is None:
            return False
        inv = v[lead]
        v = [x / inv for x in v]
        for row in self.rows:
            c = row[lead]
            if c:
                for j in range(lead, self.ncols):
                    if v[j]:
                        row[j] = row[j] - c * v[j]
        pos = bisect_left(self.pivots, lead)
        self.rows.insert(pos, v)
        self.pivots.insert(pos, lead)
        return True

    def membership(self, vec: Sequence[Scalar]) -> Optional[Vector]:
        """Coordinates of ``vec`` in the RREF basis, or None if outside."""
        if any(self.reduce(vec)):
            return None
        # pivot columns are cleared across rows, so coordinates read off directly
        return tuple(vec[p] for p in self.pivots)

    def basis_matrix(self) -> Matrix:
        return Matrix(self.field, [tuple(r) for r in self.rows], ncols=self.ncols)


class Subspace:
    """Canonical subspace of F^n: RREF basis rows, one per dimension."""

    __slots__ = ("field", "ambient_dim", "basis_rows", "pivots")

    def __init__(self, field: FieldSpec, ambient_dim: int,
                 basis_rows: Iterable[Sequence[Scalar]], pivots: Iterable[int]):
        self.field = field
        self.ambient_dim = ambient_dim
        self.basis_rows = tuple(tuple(r) for r in basis_rows)
        self.pivots = tuple(pivots)

    @classmethod
    def from_vectors(cls, field: FieldSpec, ambient_dim: int,
                     vectors: Iterable[Sequence[Scalar]]) -> "Subspace":
        red = RowReducer(field, ambient_dim)
        for v in vectors:
            red.insert(v)
        return cls(field, ambient_dim, red.rows, red.pivots)

    @classmethod
    def zero(cls, field: FieldSpec, ambient_dim: int) -> "Subspace":
        return cls(field, ambient_dim, [], [])

    @property
    def dim(self) -> int:
        return len(self.basis_rows)

    @property
    def is_full(self) -> bool:
        return self.dim == self.ambient_dim

    @property
    def basis(self) -> Matrix:
        return Matrix(self.field, self.basis_rows, ncols=self.ambient_dim)

    def membership(self, vec: Sequence[Scalar]) -> Optional[Vector]:
        if len(vec) != self.ambient_dim:
            raise ValueError("ambient dimension mismatch")
        v = list(vec)
        coords = tuple(v[p] for p in self.pivots)
        for row, p in zip(self.basis_rows, self.pivots):
            c = v[p]
            if c:
                for j in range(p, self.ambient_dim):
                    if row[j]:
                        v[j] = v[j] - c * row[j]
        if any(v):
            return None
        return coords

    def contains(self, vec: Sequence[Scalar]) -> bool:
        return self.membership(vec) is not None

    def contains_subspace(self, other: "Subspace") -> bool:
        return all(self.contains(r) for r in other.basis_rows)

    def __eq__(self, other) -> bool:
        return (isinstance(other, Subspace) and self.field == other.field
                and self.ambient_dim == other.ambient_dim
                and self.basis_rows == other.basis_rows)

    def __hash__(self):
        return hash((self.field, self.ambient_dim, self.basis_rows))

    def __repr__(self) -> str:
        return f"Subspace(dim {self.dim} of F^{self.ambient_dim})"


def rref(m: Matrix) -> tuple[Matrix, int, tuple[int, ...]]:
    """Canonical reduced row echelon form (same shape), rank and pivot columns."""
    red = RowReducer(m.field, m.ncols)
    for row in m.entries:
        red.insert(row)
    zero_row = [m.field.zero] * m.ncols
    rows = [tuple(r) for r in red.rows]
    rows += [tuple(zero_row)] * (m.nrows - len(rows))
    return Matrix(m.field, rows, ncols=m.ncols), red.rank, tuple(red.pivots)


def solve(a: Matrix, b: Sequence[Scalar]) -> Optional[Vector]:
    """Some exact solution of a.x = b with free variables set to zero, or None."""
    if len(b) != a.nrows:
        raise ValueError(f"rhs length {len(b)} does not match {a.nrows} rows")
    red = RowReducer(a.field, a.ncols + 1)
    for row, rhs in zip(a.entries, b):
        red.insert(list(row) + [rhs])
    x = [a.field.zero] * a.ncols
    for row, p in zip(red.rows, red.pivots):
        if p == a.ncols:
            return None  # pivot in the rhs column: inconsistent
        x[p] = row[a.ncols]
    return tuple(x)


def kernel(a: Matrix) -> Subspace:
    """Canonical basis of the exact null space of a."""
    reduced, rank, pivots = rref(a)
    pivot_set = set(pivots)
    zero, one = a.field.zero, a.field.one
    vectors = []
    for f in range(a.ncols):
        if f in pivot_set:
            continue
        v = [zero] * a.ncols
        v[f] = one
        for row, p in zip(reduced.entries[:rank], pivots):
            if row[f]:
                v[p] = -row[f]
        vectors.append(v)
    return Subspace.from_vectors(a.field, a.ncols, vectors)


def span_membership(s: Subspace, v: Sequence[Scalar]) -> Optional[Vector]:
    """Coordinates of v in the basis of s, or None when v lies outside."""
    return s.membership(v)


def _bareiss_int_det(m: list[list[int]]) -> int:
    """Fraction-free Bareiss elimination; every interior division is exact."""
    n = len(m)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            piv = next((r for r in range(k + 1, n) if m[r][k]), None)
            if piv is None:
                return 0
            m[k], m[piv] = m[piv], m[k]
            sign = -sign
        pivot = m[k][k]
        for i in range(k + 1, n):
            mik = m[i][k]
            row_i, row_k = m[i], m[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * pivot - mik * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return sign * m[n - 1][n - 1]


def determinant(a: Matrix) -> Scalar:
    """Exact determinant: fraction-free Bareiss over cleared denominators
    for rational input, exact-division elimination over prime fields."""
    if a.nrows != a.ncols:
        raise ValueError("determinant of a non-square matrix")
    n = a.nrows
    if n == 0:
        return a.field.one
    if a.field.is_rational:
        from math import lcm

        scale = Fraction(1)
        int_rows = []
        for row in a.entries:
            den = lcm(*(x.denominator for x in row))
            scale = scale * den
            int_rows.append([int(x * den) for x in row])
        return Fraction(_bareiss_int_det(int_rows)) / scale
    m = a.rows_list()
    sign_flip = False
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col]), None)
        if piv is None:
            return a.field.zero
        if piv != col:
            m[col], m[piv] = m[piv], m[col]
            sign_flip = not sign_flip
        lead = m[col][col]
        for r in range(col + 1, n):
            c = m[r][col]
            if c:
                f = c / lead
                for j in range(col, n):
                    if m[col][j]:
                        m[r][j] = m[r][j] - f * m[col][j]
    det = a.field.one
    for i in range(n):
        det = det * m[i][i]
    return -det if sign_flip else det


def inverse(a: Matrix) -> Optional[Matrix]:
    """Exact inverse via Gauss-Jordan; None for singular input."""
    if a.nrows != a.ncols:
        raise ValueError("inverse of a non-square matrix")
    n = a.nrows
    zero, one = a.field.zero, a.field.one
    m = [list(row) + [one if i == j else zero for j in range(n)]
         for i, row in enumerate(a.entries)]
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col]), None)
        if piv is None:
            return None
        if piv != col:
            m[col], m[piv] = m[piv], m[col]
        lead = m[col][col]
        if lead != one:
            m[col] = [x / lead for x in m[col]]
        for r in range(n):
            if r != col and m[r][col]:
                c = m[r][col]
                m[r] = [m[r][j] - c * m[col][j] for j in range(2 * n)]
    return Matrix(a.field, [row[n:] for row in m], ncols=n)
