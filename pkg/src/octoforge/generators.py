"""Generators for the test universe: Cayley-Dickson doublings, direct
sums, and disguised (random basis change) copies.

The doubling convention is fixed as

    (x1, x2)(y1, y2) = (x1*y1 + mu*conj(y2)*x2,  y2*x1 + x2*conj(y1))

with the trace conjugation conj(x) = 2*x0*1 - x.  Conventions vary
across the literature, so correctness is established by post-generation
validation (unit axiom, associativity/alternativity, frame squares)
rather than by citation.  Sedenion generation is deliberately *not*
repaired or rejected: the alternativity checker is the arbiter.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Optional, Sequence

from . import analysis
from .algebra import Algebra, Element, vbasis, vis_zero, vscale
from .fields import FieldSpec, Scalar
from .linalg import Matrix, determinant, inverse

__all__ = [
    "CayleyDicksonParams",
    "GeneratorError",
    "cayley_dickson",
    "cayley_dickson_algebra",
    "direct_sum",
    "disguise",
    "field_algebra",
    "octonion_algebra",
    "quaternion_algebra",
    "sedenion_algebra",
    "trace_conjugation",
    "transport",
]


class GeneratorError(ValueError):
    """A generated algebra failed its own post-generation validation."""


@dataclass(frozen=True)
class CayleyDicksonParams:
    """Doubling parameters, innermost first; length 1 to 4 (up to sedenions)."""

    field: FieldSpec
    mus: tuple[Scalar, ...]

    def __post_init__(self):
        if not 1 <= len(self.mus) <= 4:
            raise ValueError("between 1 and 4 doubling parameters supported")
        if any(not m for m in self.mus):
            raise ValueError("doubling parameters must be nonzero")


def field_algebra(field: FieldSpec) -> Algebra:
    """The ground field as a 1-dimensional algebra."""
    return Algebra("F", field, 1, ("1",), (field.one,),
                   {(0, 0): [(0, field.one)]})


def trace_conjugation(A: Algebra) -> Callable[[Element], Element]:
    """conj(x) = 2*x0*1 - x; requires the unit to be the first basis vector."""
    if A.unit != vbasis(A.field, A.dim, 0):
        raise GeneratorError(
            "trace conjugation needs trace coordinates (unit = e0)")

    def conj(x: Element) -> Element:
        return (x[0],) + tuple(-c for c in x[1:])

    return conj


def cayley_dickson(A: Algebra, mu, conj: Optional[Callable[[Element], Element]] = None,
                   name: str | None = None,
                   labels: Sequence[str] | None = None) -> Algebra:
    """Double A with parameter mu under the fixed product convention."""
    field = A.field
    mu = field.coerce(mu)
    if not mu:
        raise GeneratorError("doubling parameter must be nonzero")
    if conj is None:
        conj = trace_conjugation(A)
    d = A.dim
    basis = [vbasis(field, d, i) for i in range(d)]
    conj_vecs = [conj(b) for b in basis]
    for i, b in enumerate(basis):
        if (A.scalar_of(A.mul(b, conj_vecs[i])) is None
                or A.scalar_of(A.mul(conj_vecs[i], b)) is None):
            raise GeneratorError(
                f"invalid conjugation: e{i}*conj(e{i}) is not scalar")

    structure: dict[tuple[int, int], list[tuple[int, Scalar]]] = {}

    def put(i: int, j: int, first: Element, second: Element) -> None:
        terms = [(k, c) for k, c in enumerate(first) if c]
        terms += [(d + k, c) for k, c in enumerate(second) if c]
        if terms:
            structure[(i, j)] = terms

    zero = (field.zero,) * d
    for i in range(d):
        for j in range(d):
            # (e_i, 0)(e_j, 0) = (e_i e_j, 0)
            put(i, j, A.mul_basis(i, j), zero)
            # (e_i, 0)(0, e_j) = (0, e_j e_i)
            put(i, d + j, zero, A.mul_basis(j, i))
            # (0, e_i)(e_j, 0) = (0, e_i conj(e_j))
            put(d + i, j, zero, A.mul(basis[i], conj_vecs[j]))
            # (0, e_i)(0, e_j) = (mu conj(e_j) e_i, 0)
            put(d + i, d + j, vscale(mu, A.mul(conj_vecs[j], basis[i])), zero)

    if labels is None:
        labels = list(A.labels) + [f"{l}.w" if l != "1" else "w" for l in A.labels]
    if name is None:
        name = f"CD({A.name},{field.render(mu)})"
    unit = tuple(A.unit) + zero
    return Algebra(name, field, 2 * d, labels, unit, structure)


def cayley_dickson_algebra(params: CayleyDicksonParams) -> Algebra:
    """Iterated doubling starting from the ground field."""
    A = field_algebra(params.field)
    for mu in params.mus:
        A = cayley_dickson(A, mu)
    return A


@lru_cache(maxsize=32)
def _quaternion_cached(field: FieldSpec, alpha: Scalar, beta: Scalar) -> Algebra:
    name = f"H({field.render(alpha)},{field.render(beta)})"
    C2 = cayley_dickson(field_algebra(field), alpha, labels=("1", "i"))
    H = cayley_dickson(C2, beta, name=name, labels=("1", "i", "j", "k"))
    if not analysis.is_associative(H):
        raise GeneratorError(f"{name}: doubling produced a non-associative algebra")
    if analysis.is_commutative(H):
        raise GeneratorError(f"{name}: unexpectedly commutative")
    return H


def quaternion_algebra(field: FieldSpec, alpha, beta) -> Algebra:
    """4-dimensional algebra on basis (1, i, j, k=ij) with i^2=alpha, j^2=beta."""
    alpha, beta = field.coerce(alpha), field.coerce(beta)
    if not alpha or not beta:
        raise GeneratorError("parameters must be nonzero")
    return _quaternion_cached(field, alpha, beta)


@lru_cache(maxsize=32)
def _octonion_cached(field: FieldSpec, alpha: Scalar, beta: Scalar,
                     gamma: Scalar) -> Algebra:
    name = f"O({field.render(alpha)},{field.render(beta)},{field.render(gamma)})"
    H = _quaternion_cached(field, alpha, beta)
    raw = cayley_dickson(H, gamma)
    # Doubling yields basis (1, a, b, ab, c, ac, bc, (ab)c); the last basis
    # vector is relabeled to the literally computed product (bc)a.  No sign
    # convention is assumed: whatever (bc)a comes out to, it becomes column 7.
    a, b, c = (vbasis(field, 8, 1), vbasis(field, 8, 2), vbasis(field, 8, 4))
    u7 = raw.mul(raw.mul(b, c), a)
    cols = [vbasis(field, 8, i) for i in range(7)] + [u7]
    T = Matrix.from_columns(field, cols)
    if not determinant(T):
        raise GeneratorError(f"{name}: relabeled basis is degenerate")
    O = transport(raw, T, name=name,
                  labels=("1", "a", "b", "ab", "c", "ac", "bc", "(bc)a"))
    if analysis.is_associative(O):
        raise GeneratorError(f"{name}: unexpectedly associative")
    if not analysis.is_alternative(O):
        raise GeneratorError(f"{name}: doubling produced a non-alternative algebra")
    return O


def octonion_algebra(field: FieldSpec, alpha, beta, gamma) -> Algebra:
    """8-dimensional algebra on basis (1, a, b, ab, c, ac, bc, (bc)a)."""
    alpha, beta, gamma = (field.coerce(alpha), field.coerce(beta),
                          field.coerce(gamma))
    if not alpha or not beta or not gamma:
        raise GeneratorError("parameters must be nonzero")
    return _octonion_cached(field, alpha, beta, gamma)


def _structure_dict(A: Algebra) -> dict[tuple[int, int], list[tuple[int, Scalar]]]:
    out: dict[tuple[int, int], list[tuple[int, Scalar]]] = {}
    for (i, j, k, c) in A.structure:
        out.setdefault((i, j), []).append((k, c))
    return out


def _relabel(A: Algebra, name: str, labels: Sequence[str]) -> Algebra:
    return Algebra(name, A.field, A.dim, labels, A.unit, _structure_dict(A))


@lru_cache(maxsize=8)
def _sedenion_cached(field: FieldSpec, mus: tuple[Scalar, ...]) -> Algebra:
    A = field_algebra(field)
    for mu in mus:
        A = cayley_dickson(A, mu)
    name = "S(" + ",".join(field.render(m) for m in mus) + ")"
    labels = ("1",) + tuple(f"e{i}" for i in range(1, 16))
    return _relabel(A, name, labels)


def sedenion_algebra(field: FieldSpec, mus: Sequence = (-1, -1, -1, -1)) -> Algebra:
    """16-dimensional doubling; accepted as constructed, not repaired."""
    coerced = tuple(field.coerce(m) for m in mus)
    if len(coerced) != 4 or any(not m for m in coerced):
        raise GeneratorError("sedenions need 4 nonzero doubling parameters")
    return _sedenion_cached(field, coerced)


def transport(A: Algebra, T: Matrix, name: str,
              labels: Sequence[str] | None = None) -> Algebra:
    """Same algebra in the basis given by the columns of T (old coordinates)."""
    Tinv = inverse(T)
    if Tinv is None:
        raise ValueError("change of basis must be invertible")
    d = A.dim
    cols = [T.column(j) for j in range(d)]
    structure: dict[tuple[int, int], list[tuple[int, Scalar]]] = {}
    for i in range(d):
        for j in range(d):
            prod_new = Tinv.matvec(A.mul(cols[i], cols[j]))
            terms = [(k, c) for k, c in enumerate(prod_new) if c]
            if terms:
                structure[(i, j)] = terms
    unit_new = Tinv.matvec(A.unit)
    if labels is None:
        labels = tuple(f"v{i}" for i in range(d))
    return Algebra(name, A.field, d, labels, unit_new, structure)


def disguise(A: Algebra, seed: int) -> tuple[Algebra, Matrix]:
    """Random invertible integer basis change, deterministic from the seed.

    Entries are drawn from [-3, 3] (the band widens if singular draws
    persist) to keep downstream rational growth manageable.
    """
    rng = random.Random(seed)
    band = 3
    attempt = 0
    while True:
        attempt += 1
        if attempt % 25 == 0:
            band += 1
        rows = [[A.field.from_int(rng.randint(-band, band))
                 for _ in range(A.dim)] for _ in range(A.dim)]
        T = Matrix(A.field, rows)
        if determinant(T):
            break
    disguised = transport(A, T, name=f"{A.name} disguised(seed={seed})")
    return disguised, T


def direct_sum(A: Algebra, B: Algebra) -> Algebra:
    """Componentwise product on A (+) B; (x,0)(0,y) = 0 for all x, y."""
    if A.field != B.field:
        raise ValueError("direct sum needs a common ground field")
    dA = A.dim
    structure: dict[tuple[int, int], list[tuple[int, Scalar]]] = {}
    for (i, j, k, c) in A.structure:
        structure.setdefault((i, j), []).append((k, c))
    for (i, j, k, c) in B.structure:
        structure.setdefault((i + dA, j + dA), []).append((k + dA, c))
    labels = tuple(f"{l}|0" for l in A.labels) + tuple(f"0|{l}" for l in B.labels)
    unit = tuple(A.unit) + tuple(B.unit)
    return Algebra(f"{A.name}(+){B.name}", A.field, dA + B.dim,
                   labels, unit, structure)
