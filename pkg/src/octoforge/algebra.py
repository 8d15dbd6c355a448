"""Finite-dimensional unital algebras presented by structure constants.

An element is a plain tuple of exact scalars (coordinates in the
algebra's basis).  The ``Algebra`` owns a sparse structure tensor
``e_i * e_j = sum_k c[i][j][k] e_k``; at construction it is expanded
once into per-pair product rows, the unit axiom is verified exactly,
and the value becomes immutable, so instances are safe to share.
"""

from __future__ import annotations

import random
from typing import Callable, Iterable, Optional, Sequence

from .fields import FieldSpec, Scalar
from .linalg import Matrix, RowReducer, Subspace

__all__ = [
    "Algebra",
    "Element",
    "UnitAxiomError",
    "vadd",
    "vbasis",
    "vis_zero",
    "vneg",
    "vscale",
    "vsub",
    "vzero",
]

Element = tuple


class UnitAxiomError(ValueError):
    """The declared unit vector fails 1*e_j = e_j = e_j*1 for some j."""

    def __init__(self, index: int, side: str):
        self.index = index
        self.side = side
        super().__init__(f"unit axiom fails at basis index {index} ({side} product)")


def vadd(x: Element, y: Element) -> Element:
    return tuple(a + b for a, b in zip(x, y, strict=True))


def vsub(x: Element, y: Element) -> Element:
    return tuple(a - b for a, b in zip(x, y, strict=True))


def vneg(x: Element) -> Element:
    return tuple(-a for a in x)


def vscale(c: Scalar, x: Element) -> Element:
    return tuple(c * a for a in x)


def vzero(field: FieldSpec, dim: int) -> Element:
    return (field.zero,) * dim


def vbasis(field: FieldSpec, dim: int, i: int) -> Element:
    z, o = field.zero, field.one
    return tuple(o if j == i else z for j in range(dim))


def vis_zero(x: Element) -> bool:
    return not any(x)


class Algebra:
    """Unital algebra over an exact field, given by its structure tensor."""

    __slots__ = ("name", "field", "dim", "labels", "unit", "structure",
                 "_rows", "_hash")

    def __init__(self, name: str, field: FieldSpec, dim: int,
                 labels: Sequence[str], unit: Sequence,
                 structure):
        if dim < 1:
            raise ValueError("dimension must be positive")
        labels = tuple(str(s) for s in labels)
        if len(labels) != dim:
            raise ValueError(f"{len(labels)} labels for dimension {dim}")
        unit_vec = tuple(field.coerce(c) for c in unit)
        if len(unit_vec) != dim:
            raise ValueError("unit vector has wrong length")

        # expand the sparse tensor into per-(i, j) product rows
        zero = field.zero
        rows = [[None] * dim for _ in range(dim)]
        canonical: dict[tuple[int, int, int], Scalar] = {}
        items = structure.items() if hasattr(structure, "items") else structure
        for key, terms in items:
            i, j = key
            if not (0 <= i < dim and 0 <= j < dim):
                raise ValueError(f"structure index ({i},{j}) out of range")
            for k, coeff in terms:
                if not 0 <= k < dim:
                    raise ValueError(f"structure target index {k} out of range")
                c = field.coerce(coeff)
                if not c:
                    continue
                if (i, j, k) in canonical:
                    raise ValueError(f"duplicate structure entry ({i},{j},{k})")
                canonical[(i, j, k)] = c
        grouped: dict[tuple[int, int], list[tuple[int, Scalar]]] = {}
        for (i, j, k), c in sorted(canonical.items()):
            grouped.setdefault((i, j), []).append((k, c))
        for i in range(dim):
            for j in range(dim):
                rows[i][j] = tuple(grouped.get((i, j), ()))

        self.name = name
        self.field = field
        self.dim = dim
        self.labels = labels
        self.unit = unit_vec
        self.structure = tuple((i, j, k, c) for (i, j, k), c in sorted(canonical.items()))
        self._rows = tuple(tuple(r) for r in rows)
        self._hash = None

        if vis_zero(unit_vec):
            raise UnitAxiomError(0, "left")
        for j in range(dim):
            ej = vbasis(field, dim, j)
            if self.mul(unit_vec, ej) != ej:
                raise UnitAxiomError(j, "left")
            if self.mul(ej, unit_vec) != ej:
                raise UnitAxiomError(j, "right")

    # -- products ---------------------------------------------------------

    def _check(self, x: Element) -> None:
        if len(x) != self.dim:
            raise ValueError(f"element of length {len(x)} in a dim-{self.dim} algebra")

    def mul(self, x: Element, y: Element) -> Element:
        """Bilinear product: (sum x_i e_i)(sum y_j e_j)."""
        self._check(x)
        self._check(y)
        out = [self.field.zero] * self.dim
        rows = self._rows
        for i, xi in enumerate(x):
            if not xi:
                continue
            ri = rows[i]
            for j, yj in enumerate(y):
                if not yj:
                    continue
                c = xi * yj
                for k, coeff in ri[j]:
                    out[k] = out[k] + c * coeff
        return tuple(out)

    def mul_basis(self, i: int, j: int) -> Element:
        out = [self.field.zero] * self.dim
        for k, coeff in self._rows[i][j]:
            out[k] = coeff
        return tuple(out)

    def commutator(self, x: Element, y: Element) -> Element:
        """xy - yx."""
        return vsub(self.mul(x, y), self.mul(y, x))

    def associator(self, x: Element, y: Element, z: Element) -> Element:
        """(xy)z - x(yz)."""
        return vsub(self.mul(self.mul(x, y), z), self.mul(x, self.mul(y, z)))

    def power(self, x: Element, k: int) -> Element:
        """x, x^2, x^3 = x^2*x, x^4 = (x^2)^2; fixed bracketing."""
        if k not in (1, 2, 3, 4):
            raise ValueError(f"power exponent {k} outside 1..4")
        if k == 1:
            return tuple(x)
        x2 = self.mul(x, x)
        if k == 2:
            return x2
        if k == 3:
            return self.mul(x2, x)
        return self.mul(x2, x2)

    # -- operators and spans ----------------------------------------------

    def lmul_matrix(self, x: Element) -> Matrix:
        """L_x with columns x*e_j, so mul(x, y) = L_x . y."""
        self._check(x)
        cols = [self.mul(x, vbasis(self.field, self.dim, j)) for j in range(self.dim)]
        return Matrix.from_columns(self.field, cols)

    def rmul_matrix(self, x: Element) -> Matrix:
        """R_x with columns e_j*x, so mul(y, x) = R_x . y."""
        self._check(x)
        cols = [self.mul(vbasis(self.field, self.dim, j), x) for j in range(self.dim)]
        return Matrix.from_columns(self.field, cols)

    def closure(self, generators: Sequence[Element]) -> Subspace:
        """Span of the subalgebra generated by 1 and the given elements."""
        if not generators:
            raise ValueError("need at least one generator")
        red = RowReducer(self.field, self.dim)
        red.insert(self.unit)
        for g in generators:
            self._check(g)
            red.insert(g)
        for _ in range(self.dim + 1):
            if red.rank == self.dim:
                break
            basis = [tuple(r) for r in red.rows]
            changed = False
            for a in basis:
                for b in basis:
                    if red.insert(self.mul(a, b)):
                        changed = True
            if not changed:
                break
        return Subspace(self.field, self.dim, red.rows, red.pivots)

    # -- helpers ------------------------------------------------------------

    def scalar_of(self, x: Element) -> Optional[Scalar]:
        """s with x = s*1, or None when x is not a multiple of the unit."""
        self._check(x)
        iu = next(i for i, c in enumerate(self.unit) if c)
        s = x[iu] / self.unit[iu]
        if x == vscale(s, self.unit):
            return s
        return None

    def basis_element(self, i: int) -> Element:
        return vbasis(self.field, self.dim, i)

    def zero(self) -> Element:
        return vzero(self.field, self.dim)

    def vector(self, values: Iterable) -> Element:
        """Coerce a sequence of ints / scalar strings / scalars to an element."""
        v = tuple(self.field.coerce(c) for c in values)
        self._check(v)
        return v

    def element_from_label_terms(self, *terms) -> Element:
        """Build sum of coeff*basis_label terms, e.g. (2, "k"), (1, "i")."""
        out = [self.field.zero] * self.dim
        for coeff, label in terms:
            idx = self.labels.index(label)
            out[idx] = out[idx] + self.field.coerce(coeff)
        return tuple(out)

    def random_element(self, rng: random.Random, max_num: int = 10) -> Element:
        """Element with integer coordinates drawn from [-max_num, max_num]."""
        return tuple(self.field.from_int(rng.randint(-max_num, max_num))
                     for _ in range(self.dim))

    def format_element(self, x: Element) -> str:
        self._check(x)
        parts = []
        for c, label in zip(x, self.labels):
            if not c:
                continue
            if c == self.field.one:
                parts.append(label)
            else:
                parts.append(f"{c}*{label}")
        return " + ".join(parts) if parts else "0"

    def __eq__(self, other) -> bool:
        return (isinstance(other, Algebra)
                and self.name == other.name
                and self.field == other.field
                and self.dim == other.dim
                and self.labels == other.labels
                and self.unit == other.unit
                and self.structure == other.structure)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.name, self.field, self.dim,
                               self.labels, self.unit, self.structure))
        return self._hash

    def __repr__(self) -> str:
        return f"Algebra({self.name!r}, dim {self.dim} over {self.field})"
