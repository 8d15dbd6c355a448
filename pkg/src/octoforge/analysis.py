"""Structural invariants and hypothesis verification with witnesses.

Computes commutativity/associativity/alternativity, the nucleus
N = {n : (n, R, R) = 0} and the center C = {c in N : (c, R) = 0} as
exact subspaces, and runs the sampled commutator scans: every scan is
deterministic (basis pairs in lexicographic order, then +/- basis
combinations, then seeded random pairs) and any negative verdict comes
with an exact witness.

A "Holds" verdict from the sampled scans is explicitly *sampled*, not
proven: invertibility of all nonzero commutators quantifies over
infinitely many elements.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field as dc_field
from functools import lru_cache
from typing import Iterator, Optional

from .algebra import Algebra, Element, vadd, vbasis, vis_zero, vsub
from .fields import Scalar
from .linalg import Matrix, Subspace, determinant, kernel

__all__ = [
    "AnalysisReport",
    "AlternativityWitness",
    "CommutatorLawsReport",
    "HypothesisStatus",
    "LawFailure",
    "ViolationWitness",
    "alternative_by_sampling",
    "analyze",
    "center",
    "check_commutator_laws",
    "find_alternativity_violation",
    "find_zero_divisor",
    "hypothesis_check",
    "is_alternative",
    "is_associative",
    "is_commutative",
    "nucleus",
    "trial_rng",
]

ZERO_DIVISOR_PAIR = "zero-divisor-pair"
NON_CENTRAL_SQUARE = "non-central-commutator-square"
NILPOTENT_COMMUTATOR = "nilpotent-commutator"


@dataclass(frozen=True)
class ViolationWitness:
    """Concrete evidence that a hypothesis fails on this algebra."""

    left: Element
    right: Element
    kind: str
    provenance: str


@dataclass(frozen=True)
class HypothesisStatus:
    holds: bool
    sampled: int
    witness: Optional[ViolationWitness] = None
    detail: str = ""


@dataclass(frozen=True)
class AlternativityWitness:
    """Pair (x, y) with (x,y,y) != 0 or (y,y,x) != 0, plus the basis triple."""

    x: Element
    y: Element
    side: str  # "right" for (x,y,y) != 0, "left" for (y,y,x) != 0
    value: Element
    triple: tuple[int, int, int]


@dataclass(frozen=True)
class LawFailure:
    law: str
    x: Element
    y: Element
    detail: str


@dataclass
class CommutatorLawsReport:
    applicable: bool
    reason: str
    trials: int
    checked: int = 0
    failures: list[LawFailure] = dc_field(default_factory=list)
    zero_divisor_commutators: list[ViolationWitness] = dc_field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.applicable and not self.failures and not self.zero_divisor_commutators


@dataclass
class AnalysisReport:
    algebra_name: str
    dim: int
    is_commutative: bool
    is_associative: bool
    is_alternative: bool
    alternativity_witness: Optional[AlternativityWitness]
    nucleus: Subspace
    center: Subspace
    hypothesis_i: HypothesisStatus
    hypothesis_iib: HypothesisStatus
    notes: tuple[str, ...]


def trial_rng(seed: int, index: int) -> random.Random:
    """Deterministic per-trial stream derived from (seed, trial-index)."""
    return random.Random(seed * 1_000_003 + index)


# -- basic identities --------------------------------------------------------


@lru_cache(maxsize=64)
def is_commutative(A: Algebra) -> bool:
    return all(A.mul_basis(i, j) == A.mul_basis(j, i)
               for i in range(A.dim) for j in range(i + 1, A.dim))


@lru_cache(maxsize=32)
def _basis_associators(A: Algebra) -> list[list[list[Element]]]:
    d = A.dim
    out = [[[None] * d for _ in range(d)] for _ in range(d)]
    basis = [vbasis(A.field, d, i) for i in range(d)]
    for i in range(d):
        for j in range(d):
            eij = A.mul_basis(i, j)
            for k in range(d):
                left = A.mul(eij, basis[k])
                right = A.mul(basis[i], A.mul_basis(j, k))
                out[i][j][k] = vsub(left, right)
    return out


@lru_cache(maxsize=64)
def is_associative(A: Algebra) -> bool:
    assoc = _basis_associators(A)
    d = A.dim
    return all(vis_zero(assoc[i][j][k])
               for i in range(d) for j in range(d) for k in range(d))


@lru_cache(maxsize=64)
def find_alternativity_violation(A: Algebra) -> Optional[AlternativityWitness]:
    """Exact decision of (x,y,y) = 0 = (y,y,x) via the linearized basis test.

    With char != 2, right alternativity is equivalent to skew-symmetry of
    the associator in its last two slots over all basis triples (set
    z = y to recover 2(x,y,y) = 0), and left alternativity to skew-symmetry
    in the first two.  Each failing triple is turned into a concrete
    witness pair and re-verified before returning.
    """
    assoc = _basis_associators(A)
    d = A.dim
    basis = [vbasis(A.field, d, i) for i in range(d)]

    # diagonal cases first: they give single-basis witnesses
    for i in range(d):
        for j in range(d):
            if not vis_zero(assoc[i][j][j]):
                return AlternativityWitness(basis[i], basis[j], "right",
                                            assoc[i][j][j], (i, j, j))
            if not vis_zero(assoc[j][j][i]):
                return AlternativityWitness(basis[i], basis[j], "left",
                                            assoc[j][j][i], (j, j, i))
    for i in range(d):
        for j in range(d):
            for k in range(j + 1, d):
                if not vis_zero(vadd(assoc[i][j][k], assoc[i][k][j])):
                    y = vadd(basis[j], basis[k])
                    value = A.associator(basis[i], y, y)
                    if not vis_zero(value):
                        return AlternativityWitness(basis[i], y, "right",
                                                    value, (i, j, k))
    for i in range(d):
        for j in range(i + 1, d):
            for k in range(d):
                if not vis_zero(vadd(assoc[i][j][k], assoc[j][i][k])):
                    y = vadd(basis[i], basis[j])
                    value = A.associator(y, y, basis[k])
                    if not vis_zero(value):
                        return AlternativityWitness(basis[k], y, "left",
                                                    value, (i, j, k))
    return None


def is_alternative(A: Algebra) -> bool:
    return find_alternativity_violation(A) is None


def alternative_by_sampling(A: Algebra, pairs: int = 500, seed: int = 0,
                            max_num: int = 10) -> Optional[AlternativityWitness]:
    """Brute-force oracle: test (x,y,y) = 0 = (y,y,x) on random pairs."""
    for t in range(pairs):
        rng = trial_rng(seed, t)
        x = A.random_element(rng, max_num)
        y = A.random_element(rng, max_num)
        v = A.associator(x, y, y)
        if not vis_zero(v):
            return AlternativityWitness(x, y, "right", v, (-1, -1, -1))
        v = A.associator(y, y, x)
        if not vis_zero(v):
            return AlternativityWitness(x, y, "left", v, (-1, -1, -1))
    return None


# -- nucleus and center -------------------------------------------------------


def _kernel_of_rows(A: Algebra, rows: list[tuple]) -> Subspace:
    seen = set()
    unique = []
    for r in rows:
        if any(r) and r not in seen:
            seen.add(r)
            unique.append(r)
    m = Matrix(A.field, unique, ncols=A.dim)
    return kernel(m)


@lru_cache(maxsize=64)
def nucleus(A: Algebra) -> Subspace:
    """N = {n : (n, e_i, e_j) = 0 for all basis pairs}, first-slot form."""
    assoc = _basis_associators(A)
    d = A.dim
    rows = []
    for i in range(d):
        for j in range(d):
            # column l of the map n -> (n, e_i, e_j) is assoc[l][i][j]
            for r in range(d):
                rows.append(tuple(assoc[l][i][j][r] for l in range(d)))
    return _kernel_of_rows(A, rows)


@lru_cache(maxsize=64)
def center(A: Algebra) -> Subspace:
    """C = {c in N : (c, e_i) = 0 for all i}."""
    assoc = _basis_associators(A)
    d = A.dim
    basis = [vbasis(A.field, d, i) for i in range(d)]
    rows = []
    for i in range(d):
        for j in range(d):
            for r in range(d):
                rows.append(tuple(assoc[l][i][j][r] for l in range(d)))
    for i in range(d):
        comms = [A.commutator(basis[l], basis[i]) for l in range(d)]
        for r in range(d):
            rows.append(tuple(comms[l][r] for l in range(d)))
    return _kernel_of_rows(A, rows)


# -- commutator scans ---------------------------------------------------------


def _candidate_commutators(A: Algebra, trials: int, seed: int, max_num: int
                           ) -> Iterator[tuple[str, Element, Element, Element]]:
    """Yield (provenance, x, y, v=(x,y)): basis pairs, then +/- basis
    combinations (via bilinearity of the commutator), then random pairs."""
    d = A.dim
    basis = [vbasis(A.field, d, i) for i in range(d)]
    comm = [[vsub(A.mul_basis(i, j), A.mul_basis(j, i)) for j in range(d)]
            for i in range(d)]
    for i in range(d):
        for j in range(i + 1, d):
            yield f"basis pair (e{i}, e{j})", basis[i], basis[j], comm[i][j]
    for i in range(d):
        for j in range(i + 1, d):
            for sign, tag in ((1, "+"), (-1, "-")):
                x = vadd(basis[i], basis[j]) if sign == 1 else vsub(basis[i], basis[j])
                for k in range(d):
                    v = (vadd(comm[i][k], comm[j][k]) if sign == 1
                         else vsub(comm[i][k], comm[j][k]))
                    yield f"pair (e{i} {tag} e{j}, e{k})", x, basis[k], v
    for t in range(trials):
        rng = trial_rng(seed, t)
        x = A.random_element(rng, max_num)
        y = A.random_element(rng, max_num)
        yield f"random pair (trial {t})", x, y, A.commutator(x, y)


def _canonical_direction(v: Element) -> tuple:
    lead = next(c for c in v if c)
    return tuple(c / lead for c in v)


def _first_kernel_vector(m: Matrix) -> Element:
    ker = kernel(m)
    return ker.basis_rows[0]


# Modular prescreen for singularity tests over the rationals.  Reduction
# mod p is a ring homomorphism wherever denominators avoid p, so a
# nonzero determinant residue *proves* the exact determinant nonzero;
# only residue-zero candidates take the exact elimination path.
_SCREEN_PRIME = (1 << 61) - 1


class _ScreenUnavailable(Exception):
    pass


def _frac_mod(c, p: int) -> int:
    den = c.denominator % p
    if den == 0:
        raise _ScreenUnavailable
    return c.numerator % p * pow(den, p - 2, p) % p


@lru_cache(maxsize=32)
def _mod_rows(A: Algebra):
    if not A.field.is_rational:
        return None
    p = _SCREEN_PRIME
    try:
        return tuple(tuple(tuple((k, _frac_mod(c, p)) for k, c in row)
                           for row in line) for line in A._rows)
    except _ScreenUnavailable:
        return None


def _mod_det(m: list[list[int]], p: int) -> int:
    n = len(m)
    det = 1
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col]), None)
        if piv is None:
            return 0
        if piv != col:
            m[col], m[piv] = m[piv], m[col]
            det = p - det
        lead = m[col][col]
        det = det * lead % p
        inv = pow(lead, p - 2, p)
        for r in range(col + 1, n):
            c = m[r][col]
            if c:
                f = c * inv % p
                mr, mc = m[r], m[col]
                for j in range(col, n):
                    mr[j] = (mr[j] - f * mc[j]) % p
    return det


def _screen_nonsingular(A: Algebra, v: Element, side: str) -> bool:
    """True only when the operator is *provably* invertible via the screen."""
    rows = _mod_rows(A)
    if rows is None:
        return False
    p = _SCREEN_PRIME
    try:
        v_mod = [_frac_mod(c, p) for c in v]
    except _ScreenUnavailable:
        return False
    d = A.dim
    m = [[0] * d for _ in range(d)]
    if side == "left":
        for i, vi in enumerate(v_mod):
            if vi:
                line = rows[i]
                for j in range(d):
                    for k, c in line[j]:
                        m[k][j] = (m[k][j] + vi * c) % p
    else:
        for j in range(d):
            line = rows[j]
            for i, vi in enumerate(v_mod):
                if vi:
                    for k, c in line[i]:
                        m[k][j] = (m[k][j] + vi * c) % p
    return _mod_det(m, p) != 0


def _singularity(A: Algebra, v: Element, side: str) -> Optional[Element]:
    """None when the left/right multiplication by v is invertible (decided
    exactly, with a fast modular prescreen); otherwise an exact kernel vector."""
    if _screen_nonsingular(A, v, side):
        return None
    m = A.lmul_matrix(v) if side == "left" else A.rmul_matrix(v)
    if determinant(m):
        return None
    return _first_kernel_vector(m)


def _scan_commutators(A: Algebra, trials: int, seed: int, max_num: int,
                      check_central: bool, center_space: Optional[Subspace],
                      stop_at_first: bool):
    """Shared scan: returns (zero-divisor witness, non-central witness, tested)."""
    zero_w: Optional[ViolationWitness] = None
    central_w: Optional[ViolationWitness] = None
    tested = 0
    seen: set[tuple] = set()
    for prov, x, y, v in _candidate_commutators(A, trials, seed, max_num):
        if vis_zero(v):
            continue
        key = _canonical_direction(v)
        if key in seen:
            continue
        seen.add(key)
        tested += 1
        if zero_w is None:
            w = _singularity(A, v, "left")
            if w is not None:
                if vis_zero(A.mul(v, v)):
                    zero_w = ViolationWitness(
                        v, v, NILPOTENT_COMMUTATOR,
                        f"commutator of {prov} squares to zero")
                else:
                    zero_w = ViolationWitness(
                        v, w, ZERO_DIVISOR_PAIR,
                        f"commutator of {prov} has singular left multiplication; "
                        f"partner from kernel of L_v")
            else:
                w = _singularity(A, v, "right")
                if w is not None:
                    zero_w = ViolationWitness(
                        w, v, ZERO_DIVISOR_PAIR,
                        f"commutator of {prov} has singular right multiplication; "
                        f"partner from kernel of R_v")
        if (check_central and central_w is None
                and center_space.membership(A.mul(v, v)) is None):
            central_w = ViolationWitness(
                x, y, NON_CENTRAL_SQUARE,
                f"square of commutator of {prov} lies outside the center")
        if stop_at_first and (zero_w or central_w):
            break
        if zero_w and (central_w or not check_central):
            break
    return zero_w, central_w, tested


def hypothesis_check(A: Algebra, trials: int = 200, seed: int = 0,
                     max_num: int = 10,
                     associative: Optional[bool] = None) -> HypothesisStatus:
    """Sampled scan of 'no nonzero commutator divides zero' (+ central squares).

    The centrality of commutator squares is only required (and only
    checked) on associative input.  A positive verdict is sampled, not
    proven.
    """
    if associative is None:
        associative = is_associative(A)
    center_space = center(A) if associative else None
    zero_w, central_w, tested = _scan_commutators(
        A, trials, seed, max_num,
        check_central=associative, center_space=center_space,
        stop_at_first=True)
    witness = zero_w or central_w
    if witness is not None:
        return HypothesisStatus(False, tested, witness, "violated")
    return HypothesisStatus(True, tested,
                            detail=f"holds (sampled, {tested} distinct commutators)")


def find_zero_divisor(A: Algebra, budget: int = 500, seed: int = 0,
                      max_num: int = 10) -> Optional[ViolationWitness]:
    """Search basis elements, basis sums/differences, then random elements."""
    d = A.dim
    basis = [vbasis(A.field, d, i) for i in range(d)]

    def candidates():
        for i in range(d):
            yield f"basis element e{i}", basis[i]
        for i in range(d):
            for j in range(i + 1, d):
                yield f"e{i} + e{j}", vadd(basis[i], basis[j])
                yield f"e{i} - e{j}", vsub(basis[i], basis[j])
        t = 0
        while True:
            rng = trial_rng(seed, t)
            yield f"random element (trial {t})", A.random_element(rng, max_num)
            t += 1

    used = 0
    for prov, x in candidates():
        if used >= budget:
            return None
        if vis_zero(x):
            continue
        used += 1
        w = _singularity(A, x, "left")
        if w is not None:
            return ViolationWitness(x, w, ZERO_DIVISOR_PAIR,
                                    f"{prov}: singular left multiplication")
        w = _singularity(A, x, "right")
        if w is not None:
            return ViolationWitness(w, x, ZERO_DIVISOR_PAIR,
                                    f"{prov}: singular right multiplication")
    return None


# -- commutator laws in alternative, non-associative rings -------------------


def check_commutator_laws(A: Algebra, trials: int = 200, seed: int = 0,
                          max_num: int = 10) -> CommutatorLawsReport:
    """Sampled laws for commutators v = (x, y) in alternative non-associative rings:
    v^4 lies in the nucleus, ((v^2, e_i, e_j)) * v = 0 for all basis pairs,
    and v^2 lies in the center whenever no sampled commutator divides zero.
    """
    assoc = is_associative(A)
    alt = is_alternative(A)
    if assoc or not alt:
        reason = ("algebra is associative" if assoc
                  else "algebra is not alternative")
        return CommutatorLawsReport(False, f"hypothesis mismatch: {reason}", trials)

    nuc = nucleus(A)
    cen = center(A)
    d = A.dim
    basis = [vbasis(A.field, d, i) for i in range(d)]
    report = CommutatorLawsReport(True, "", trials)
    deferred_central: list[tuple[Element, Element, Element]] = []

    for t in range(trials):
        rng = trial_rng(seed, t)
        x = A.random_element(rng, max_num)
        y = A.random_element(rng, max_num)
        v = A.commutator(x, y)
        v2 = A.mul(v, v)

        report.checked += 1
        if nuc.membership(A.power(v, 4)) is None:
            report.failures.append(LawFailure(
                "fourth-power-in-nucleus", x, y, f"v^4 outside nucleus (trial {t})"))
        for i in range(d):
            for j in range(d):
                w = A.mul(A.associator(v2, basis[i], basis[j]), v)
                if not vis_zero(w):
                    report.failures.append(LawFailure(
                        "square-associator-annihilates", x, y,
                        f"(v^2, e{i}, e{j}) * v != 0 (trial {t})"))
                    break
            else:
                continue
            break

        if not vis_zero(v):
            if (_singularity(A, v, "left") is not None
                    or _singularity(A, v, "right") is not None):
                report.zero_divisor_commutators.append(ViolationWitness(
                    v, v, ZERO_DIVISOR_PAIR,
                    f"sampled commutator divides zero (trial {t})"))
                continue
        deferred_central.append((x, y, v2))

    if not report.zero_divisor_commutators:
        for x, y, v2 in deferred_central:
            if cen.membership(v2) is None:
                report.failures.append(LawFailure(
                    "square-in-center", x, y, "v^2 outside center"))
    return report


# -- the aggregate report ------------------------------------------------------


def analyze(A: Algebra, trials: int = 200, seed: int = 0,
            max_num: int = 10) -> AnalysisReport:
    """Full structural report with sampled hypothesis verdicts."""
    comm = is_commutative(A)
    assoc = is_associative(A)
    alt_witness = find_alternativity_violation(A)
    alt = alt_witness is None
    nuc = nucleus(A)
    cen = center(A)
    cen_space = cen
    zero_w, central_w, tested = _scan_commutators(
        A, trials, seed, max_num,
        check_central=True, center_space=cen_space, stop_at_first=False)

    notes = []
    if not cen.dim <= nuc.dim or not nuc.contains_subspace(cen):
        notes.append("INTERNAL: center not contained in nucleus")
    else:
        notes.append("center is contained in the nucleus (exact)")
    if assoc and not nuc.is_full:
        notes.append("INTERNAL: associative algebra with proper nucleus")
    if not assoc and not alt:
        notes.append("neither associative nor alternative: outside the "
                     "classification hypotheses")
    if not assoc:
        notes.append("central commutator squares sampled for information; the "
                     "literal hypothesis (ii)(b) concerns associative rings")
    hyp_i = (HypothesisStatus(True, tested,
                              detail=f"holds (sampled, {tested} distinct commutators)")
             if zero_w is None else HypothesisStatus(False, tested, zero_w, "violated"))
    hyp_iib = (HypothesisStatus(True, tested,
                                detail=f"holds (sampled, {tested} distinct commutators)")
               if central_w is None else
               HypothesisStatus(False, tested, central_w, "violated"))
    return AnalysisReport(
        algebra_name=A.name, dim=A.dim,
        is_commutative=comm, is_associative=assoc, is_alternative=alt,
        alternativity_witness=alt_witness,
        nucleus=nuc, center=cen,
        hypothesis_i=hyp_i, hypothesis_iib=hyp_iib,
        notes=tuple(notes))
