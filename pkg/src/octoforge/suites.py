"""Property suites over frames: sign-permutation product identities for
pairwise anticommuting triples, and exact norm multiplicativity on
frame-built spans.  These back the `fuzz` command and the acceptance
tests.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from itertools import combinations, permutations
from typing import Optional

from . import analysis, forge as forge_mod
from .algebra import Algebra, Element, vadd, vis_zero, vscale
from .analysis import CommutatorLawsReport, ViolationWitness, check_commutator_laws
from .forge import Frame, FrameCoordinates, ForgeResult, forge

__all__ = [
    "FuzzReport",
    "SuiteReport",
    "norm_multiplicativity_suite",
    "run_fuzz",
    "triple_identity_suite",
]

_PERM_SIGN = {perm: 1 if perm in ((0, 1, 2), (1, 2, 0), (2, 0, 1)) else -1
              for perm in permutations((0, 1, 2))}


@dataclass
class SuiteReport:
    name: str
    checks: int = 0
    failures: list[str] = dc_field(default_factory=list)
    skipped: str = ""

    @property
    def passed(self) -> bool:
        return not self.failures


def _anticommute(A: Algebra, x: Element, y: Element) -> bool:
    return vis_zero(vadd(A.mul(x, y), A.mul(y, x)))


def triple_identity_suite(A: Algebra, frame: Frame) -> SuiteReport:
    """Product identities on every triple drawn from a frame.

    For each 3-subset {a, b, c} (pairwise anticommuting by the frame
    contract) and every permutation s:
      * s(a)(s(b)s(c)) = sgn(s) * a(bc) and (s(a)s(b))s(c) = sgn(s) * (ab)c.
    When additionally each element anticommutes with the product of the
    other two (the triple spans no common quaternion plane), every
    arrangement also satisfies (xy)z = -x(yz).
    """
    rep = SuiteReport("triple-identities")
    elems = frame.elements
    for p, q, r in combinations(range(len(elems)), 3):
        a, b, c = elems[p], elems[q], elems[r]
        base_right = A.mul(a, A.mul(b, c))       # a(bc)
        base_left = A.mul(A.mul(a, b), c)        # (ab)c
        triple = (a, b, c)
        for perm, sign in _PERM_SIGN.items():
            x, y, z = (triple[i] for i in perm)
            rep.checks += 1
            got = A.mul(x, A.mul(y, z))
            want = base_right if sign == 1 else vscale(-A.field.one, base_right)
            if got != want:
                rep.failures.append(
                    f"x(yz) != sgn*a(bc) on frame triple ({p},{q},{r}) perm {perm}")
            rep.checks += 1
            got = A.mul(A.mul(x, y), z)
            want = base_left if sign == 1 else vscale(-A.field.one, base_left)
            if got != want:
                rep.failures.append(
                    f"(xy)z != sgn*(ab)c on frame triple ({p},{q},{r}) perm {perm}")
        fully_anti = (_anticommute(A, c, A.mul(a, b))
                      and _anticommute(A, b, A.mul(a, c))
                      and _anticommute(A, a, A.mul(b, c)))
        if fully_anti:
            for perm in _PERM_SIGN:
                x, y, z = (triple[i] for i in perm)
                rep.checks += 1
                lhs = A.mul(A.mul(x, y), z)
                rhs = vscale(-A.field.one, A.mul(x, A.mul(y, z)))
                if lhs != rhs:
                    rep.failures.append(
                        f"(xy)z != -x(yz) on frame triple ({p},{q},{r}) perm {perm}")
    return rep


def norm_multiplicativity_suite(A: Algebra, frame: Frame, trials: int = 200,
                                seed: int = 0, max_num: int = 10) -> SuiteReport:
    """n(xy) = n(x) n(y) for seeded random pairs, exact equality."""
    rep = SuiteReport("norm-multiplicativity")
    coords = FrameCoordinates(A, frame)
    if frame.size + 1 != A.dim:
        rep.skipped = "frame does not span the algebra with 1"
        return rep
    for t in range(trials):
        rng = analysis.trial_rng(seed, t)
        x = A.random_element(rng, max_num)
        y = A.random_element(rng, max_num)
        rep.checks += 1
        if coords.norm(A.mul(x, y)) != coords.norm(x) * coords.norm(y):
            rep.failures.append(f"n(xy) != n(x)n(y) at trial {t}")
    return rep


@dataclass
class FuzzReport:
    algebra_name: str
    trials: int
    seed: int
    laws: CommutatorLawsReport
    forge_result: ForgeResult
    triple_suite: Optional[SuiteReport]
    norm_suite: Optional[SuiteReport]

    @property
    def violation_found(self) -> bool:
        if self.forge_result.classification == forge_mod.HYPOTHESIS_VIOLATED:
            return True
        if self.laws.applicable and not self.laws.passed:
            return True
        for suite in (self.triple_suite, self.norm_suite):
            if suite is not None and not suite.passed:
                return True
        return False


def run_fuzz(A: Algebra, trials: int = 200, seed: int = 0,
             max_num: int = 10) -> FuzzReport:
    """Run the property suites against one algebra.

    The commutator-law suite runs when the algebra is alternative and
    not associative; the triple and norm suites run on the frame found
    by the forge pipeline when it saturates.
    """
    laws = check_commutator_laws(A, trials=trials, seed=seed, max_num=max_num)
    fr = forge(A, seed=seed, trials=trials, max_num=max_num)
    triple = None
    norm = None
    if fr.frame is not None and fr.classification in (
            forge_mod.QUATERNION_SATURATED, forge_mod.OCTONION_SATURATED):
        triple = triple_identity_suite(A, fr.frame)
        norm = norm_multiplicativity_suite(A, fr.frame, trials=trials,
                                           seed=seed, max_num=max_num)
    return FuzzReport(A.name, trials, seed, laws, fr, triple, norm)
