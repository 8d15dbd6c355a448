import random
from fractions import Fraction

import pytest

import octoforge as of
import octoforge.forge as fg
from octoforge.algebra import vadd, vis_zero, vscale
from octoforge.analysis import ZERO_DIVISOR_PAIR

Q = of.RATIONAL


# -- central quadratic ----------------------------------------------------------


def test_central_quadratic_first_instance(H):
    x = H.vector([0, 1, 1, 0])         # i + j
    y = H.basis_element(1)             # i
    quad = of.central_quadratic(H, x, y)
    assert (quad.a, quad.b, quad.c) == (Fraction(-4), Fraction(0), Fraction(-8))


def test_central_quadratic_second_instance(H):
    x = H.vector([1, 1, 0, 0])         # 1 + i
    y = H.basis_element(2)             # j
    quad = of.central_quadratic(H, x, y)
    assert (quad.a, quad.b, quad.c) == (Fraction(-4), Fraction(8), Fraction(-8))


def test_central_quadratic_relation_holds_exactly(H):
    rng = random.Random(41)
    for _ in range(25):
        x = H.random_element(rng, 5)
        y = H.random_element(rng, 5)
        if vis_zero(H.commutator(x, y)) or H.scalar_of(x) is not None:
            continue
        quad = of.central_quadratic(H, x, y)
        lhs = vadd(vadd(vscale(quad.a, H.power(x, 2)), vscale(quad.b, x)),
                   vscale(quad.c, H.unit))
        assert vis_zero(lhs)
        assert quad.a != 0 and quad.c != 0


def test_central_quadratic_coefficients_shape(O):
    # a = v^2, b = v^2 + (vx)^2 - (v+vx)^2, c = (vx)^2, all read off as scalars
    x = vadd(O.unit, O.basis_element(1))
    y = O.basis_element(2)
    v = O.commutator(x, y)
    vx = O.mul(v, x)
    quad = of.central_quadratic(O, x, y)
    assert quad.a == O.scalar_of(O.mul(v, v))
    assert quad.c == O.scalar_of(O.mul(vx, vx))
    s3 = O.scalar_of(O.mul(vadd(v, vx), vadd(v, vx)))
    assert quad.b == quad.a + quad.c - s3


def test_central_quadratic_zero_commutator(H):
    with pytest.raises(fg.ZeroCommutatorError):
        of.central_quadratic(H, H.basis_element(1), H.basis_element(1))


def test_central_quadratic_nilpotent_discovery(null_extension):
    A = null_extension
    # x = a + m is noncentral with nonscalar square; v = (x, a) = 2am is nilpotent
    x = A.vector([0, 1, 1, 0])
    y = A.basis_element(1)
    with pytest.raises(fg.ZeroDivisorDiscoveryError) as exc:
        of.central_quadratic(A, x, y)
    w = exc.value.witness
    assert vis_zero(A.mul(w.left, w.right))


# -- central shift ----------------------------------------------------------------


def test_central_shift_short_circuits(H):
    i = H.basis_element(1)
    assert of.central_shift(H, i) == i


def test_central_shift_one_plus_i(H):
    p = of.central_shift(H, H.vector([1, 1, 0, 0]))
    assert p == H.basis_element(1)


def test_central_shift_octonion(O):
    p = of.central_shift(O, vadd(O.unit, O.basis_element(1)))
    assert p == O.basis_element(1)


def test_central_shift_output_contract(O):
    rng = random.Random(43)
    for _ in range(15):
        x = O.random_element(rng, 5)
        if O.scalar_of(x) is not None:
            continue
        p = of.central_shift(O, x)
        assert O.scalar_of(O.mul(p, p)) is not None
        assert O.scalar_of(p) is None


# -- anticommute reduce --------------------------------------------------------------


def test_anticommute_reduce_example(H):
    i = H.basis_element(1)
    frame = of.Frame((i,), (Fraction(-1),))
    p = H.vector([0, 2, 3, 0])         # 2i + 3j
    m = of.anticommute_reduce(H, frame, p, [Fraction(-4)])
    assert m == H.vector([0, 0, 3, 0])
    assert vis_zero(vadd(H.mul(m, i), H.mul(i, m)))


def test_anticommute_reduce_zero_correction(H):
    i = H.basis_element(1)
    frame = of.Frame((i,), (Fraction(-1),))
    p = H.basis_element(2)
    assert of.anticommute_reduce(H, frame, p, [Fraction(0)]) == p


def test_anticommute_reduce_octonion_frame(O):
    a, b, ab, c = (O.basis_element(n) for n in (1, 2, 3, 4))
    frame = of.Frame((a, b, ab), (Fraction(-1), Fraction(-1), Fraction(-1)))
    p = vadd(c, a)
    d = [Fraction(-2), Fraction(0), Fraction(0)]   # 2*alpha with alpha = -1
    assert of.anticommute_reduce(O, frame, p, d) == c


def test_anticommute_reduce_condition_star_violation(H):
    i = H.basis_element(1)
    frame = of.Frame((i,), (Fraction(-1),))
    p = H.vector([1, 0, 1, 0])         # 1 + j: p*i + i*p = 2i is not scalar
    with pytest.raises(fg.ConditionStarViolatedError) as exc:
        of.anticommute_reduce(H, frame, p, [Fraction(0)])
    assert exc.value.index == 0


def test_anticommute_reduce_wrong_d_rejected(H):
    i = H.basis_element(1)
    frame = of.Frame((i,), (Fraction(-1),))
    p = H.vector([0, 2, 3, 0])
    with pytest.raises(ValueError, match="d\\[0\\]"):
        of.anticommute_reduce(H, frame, p, [Fraction(1)])


# -- frame extension -----------------------------------------------------------------


def test_extend_frame_quaternion_step(H):
    frame = of.Frame((H.vector([0, 0, 0, 2]),), (Fraction(-4),))
    m, gamma = of.extend_frame(H, frame)
    assert m == H.basis_element(1)     # first basis vector outside span{1, k}
    assert gamma == Fraction(-1)


def test_extend_frame_saturated(H):
    frame = of.Frame((H.vector([0, 0, 0, 2]), H.basis_element(1),
                      H.vector([0, 0, 2, 0])),
                     (Fraction(-4), Fraction(-1), Fraction(-4)))
    assert of.extend_frame(H, frame) is None


def test_extend_frame_octonion_complement(O):
    a, b, ab = (O.basis_element(n) for n in (1, 2, 3))
    frame = of.Frame((a, b, ab), (Fraction(-1),) * 3)
    m, gamma = of.extend_frame(O, frame)
    assert m == O.basis_element(4)     # c
    assert gamma == Fraction(-1)
    for u in frame.elements:
        assert vis_zero(vadd(O.mul(m, u), O.mul(u, m)))


def test_extend_frame_nilpotent_complement(null_extension):
    A = null_extension
    frame = of.Frame((A.basis_element(1),), (Fraction(1),))
    with pytest.raises(fg.NilpotentComplementError) as exc:
        of.extend_frame(A, frame)
    m = exc.value.m
    assert not vis_zero(m)
    assert vis_zero(A.mul(m, m))


# -- frame builders --------------------------------------------------------------------


def test_build_quaternion_frame_deterministic(H):
    frame = of.build_quaternion_frame(H)
    assert frame.elements == (H.vector([0, 0, 0, 2]), H.basis_element(1),
                              H.vector([0, 0, 2, 0]))
    assert frame.squares == (Fraction(-4), Fraction(-1), Fraction(-4))


def test_build_quaternion_frame_in_octonions(O):
    frame = of.build_quaternion_frame(O)
    assert frame.elements[0] == O.vector([0, 0, 0, 2, 0, 0, 0, 0])  # 2ab
    assert frame.squares == (Fraction(-4), Fraction(-1), Fraction(-4))


def test_build_quaternion_frame_rejects_commutative(commutative_2d):
    with pytest.raises(fg.CommutativeInputError):
        of.build_quaternion_frame(commutative_2d)


def test_build_octonion_frame(O):
    q = of.build_quaternion_frame(O)
    frame = of.build_octonion_frame(O, q)
    assert frame.size == 7
    of.validate_frame(O, frame)
    # u7 is literally (bc)a = (u6 * u1) computed in the algebra
    a, b, c = frame.elements[0], frame.elements[1], frame.elements[3]
    assert frame.elements[4] == O.mul(a, c)
    assert frame.elements[5] == O.mul(b, c)
    assert frame.elements[6] == O.mul(O.mul(b, c), a)


def test_build_octonion_frame_saturated_quaternions(H):
    q = of.build_quaternion_frame(H)
    with pytest.raises(fg.AlreadyAssociativeSaturatedError):
        of.build_octonion_frame(H, q)


def test_frame_span_is_whole_algebra(O):
    q = of.build_quaternion_frame(O)
    frame = of.build_octonion_frame(O, q)
    span = of.Subspace.from_vectors(Q, O.dim, [O.unit, *frame.elements])
    assert span.is_full


# -- saturation -------------------------------------------------------------------------


def test_saturation_check_quaternions(H):
    frame = of.build_quaternion_frame(H)
    assert of.saturation_check(H, frame) is None


def test_saturation_check_octonions(O):
    frame = of.build_octonion_frame(O, of.build_quaternion_frame(O))
    assert of.saturation_check(O, frame) is None


def test_saturation_check_extracts_zero_product(m2):
    # M2(Q) (+) M2(Q): the diagonal frame spans only 4 of 8 dimensions,
    # and the extension trips over an exact zero divisor
    A = of.direct_sum(m2, m2)
    h = A.vector([1, 0, 0, -1, 1, 0, 0, -1])
    s = A.vector([0, 1, 1, 0, 0, 1, 1, 0])
    hs = A.mul(h, s)
    frame = of.Frame((h, s, hs), (Fraction(1), Fraction(1), Fraction(-1)))
    of.validate_frame(A, frame)
    with pytest.raises(fg.ZeroDivisorDiscoveryError) as exc:
        of.saturation_check(A, frame)
    w = exc.value.witness
    assert vis_zero(A.mul(w.left, w.right))
    assert not vis_zero(w.left) and not vis_zero(w.right)


def test_saturation_check_axiom_breach_on_wrong_track(O):
    q = of.build_quaternion_frame(O)  # treating O as associative is a breach
    with pytest.raises(fg.AxiomBreachError):
        of.saturation_check(O, q)


def test_saturation_check_frame_size_guard(H):
    with pytest.raises(fg.FrameError):
        of.saturation_check(H, of.Frame((H.basis_element(1),), (Fraction(-1),)))


# -- frame validation -------------------------------------------------------------------


def test_validate_frame_rejects_bad_square(H):
    frame = of.Frame((H.basis_element(1),), (Fraction(1),))  # i^2 = -1, not +1
    with pytest.raises(of.forge.FrameError if hasattr(of, "forge") else Exception):
        of.validate_frame(H, frame)


def test_validate_frame_rejects_non_anticommuting(H):
    i = H.basis_element(1)
    one_plus_j = H.vector([1, 0, 1, 0])
    frame = of.Frame((i, one_plus_j), (Fraction(-1), Fraction(0)))
    with pytest.raises(fg.FrameError):
        of.validate_frame(H, frame)


def test_validate_frame_rejects_scalar_element(H):
    frame = of.Frame((H.unit,), (Fraction(1),))
    with pytest.raises(fg.FrameError):
        of.validate_frame(H, frame)


# -- norm form ---------------------------------------------------------------------------


def test_norm_form_quaternions(H):
    frame = of.build_quaternion_frame(H)
    assert of.norm_form(frame) == (Fraction(1), Fraction(4), Fraction(1),
                                   Fraction(4))
    assert of.norm_is_positive_definite(frame, H) is True


def test_norm_form_split_not_positive(split_H):
    frame = of.frame_from_basis(split_H)
    diag = of.norm_form(frame)
    assert frame.squares[0] == Fraction(1)   # gamma_1 = +1 by construction
    assert any(c < 0 for c in diag)
    assert of.norm_is_positive_definite(frame, split_H) is False


def test_norm_form_prime_field_no_verdict():
    F5 = of.FieldSpec.prime(5)
    H5 = of.quaternion_algebra(F5, -1, -1)
    frame = of.frame_from_basis(H5)
    assert of.norm_is_positive_definite(frame, H5) is None


def test_frame_coordinates_norm_cross_check(H):
    frame = of.frame_from_basis(H)
    coords = of.FrameCoordinates(H, frame)
    x = H.vector([1, 2, -3, 4])
    assert coords.norm(x) == Fraction(1 + 4 + 9 + 16)


# -- the full pipeline -------------------------------------------------------------------


def test_forge_quaternions(H):
    r = of.forge(H)
    assert r.classification == fg.QUATERNION_SATURATED
    assert r.frame.elements == (H.vector([0, 0, 0, 2]), H.basis_element(1),
                                H.vector([0, 0, 2, 0]))
    assert r.positive_definite is True
    assert r.division_verdict == fg.DIVISION_VERDICT_POSITIVE
    assert r.change_of_basis is not None
    assert of.determinant(r.change_of_basis) != 0


def test_forge_octonions(O):
    r = of.forge(O)
    assert r.classification == fg.OCTONION_SATURATED
    assert r.frame.size == 7
    of.validate_frame(O, r.frame)
    assert r.positive_definite is True


def test_forge_split_violated(split_H):
    r = of.forge(split_H)
    assert r.classification == fg.HYPOTHESIS_VIOLATED
    w = r.witness
    assert not vis_zero(w.left) and not vis_zero(w.right)
    assert vis_zero(split_H.mul(w.left, w.right))
    assert r.frame is None


def test_forge_direct_sum_violated(sum_HF):
    r = of.forge(sum_HF)
    assert r.classification == fg.HYPOTHESIS_VIOLATED
    assert vis_zero(sum_HF.mul(r.witness.left, r.witness.right))


def test_forge_commutative_out_of_scope(commutative_2d):
    r = of.forge(commutative_2d)
    assert r.classification == fg.COMMUTATIVE_OUT_OF_SCOPE
    assert r.frame is None and r.witness is None


def test_forge_sedenions_find_zero_divisor_commutator(sedenions):
    r = of.forge(sedenions)
    assert r.classification == fg.HYPOTHESIS_VIOLATED
    assert r.witness.kind == ZERO_DIVISOR_PAIR
    assert vis_zero(sedenions.mul(r.witness.left, r.witness.right))


def test_forge_sedenions_without_scan_is_out_of_scope(sedenions):
    # with the commutator scan silenced, the honest verdict is out-of-scope
    r = of.forge(sedenions, trials=0)
    if r.classification != fg.HYPOTHESIS_VIOLATED:
        assert r.classification == fg.NOT_ALTERNATIVE_OUT_OF_SCOPE


def test_forge_disguised_octonions(O, disguised_O):
    D, _ = disguised_O
    r = of.forge(D)
    assert r.classification == fg.OCTONION_SATURATED
    of.validate_frame(D, r.frame)


def test_forge_prime_field_quaternions():
    F5 = of.FieldSpec.prime(5)
    H5 = of.quaternion_algebra(F5, -1, -1)
    r = of.forge(H5)
    assert r.classification == fg.QUATERNION_SATURATED
    assert r.positive_definite is None
    assert r.division_verdict == fg.DIVISION_VERDICT_SAMPLED


def test_forge_wrong_assumption_recovers(O):
    r = of.forge(O, assume="associative")
    assert r.classification == fg.OCTONION_SATURATED
    assert any("re-running" in step for step in r.audit)


def test_forge_correct_assumption_fast_path(H, O):
    assert of.forge(H, assume="associative").classification == fg.QUATERNION_SATURATED
    assert of.forge(O, assume="alternative").classification == fg.OCTONION_SATURATED


def test_forge_null_extension_violated(null_extension):
    r = of.forge(null_extension)
    assert r.classification == fg.HYPOTHESIS_VIOLATED
    assert vis_zero(null_extension.mul(r.witness.left, r.witness.right))


def test_forge_central_extension_out_of_scope(H):
    # H (+) H: elements like (1, 0) are central but outside span{1, frame};
    # the commutator scan sees zero divisors first, so call the machinery
    # directly on the diagonal frame
    A = of.direct_sum(H, H)
    frame_elems = (A.vector([0, 0, 0, 2, 0, 0, 0, 2]),
                   A.vector([0, 1, 0, 0, 0, 1, 0, 0]),
                   A.vector([0, 0, 2, 0, 0, 0, 2, 0]))
    frame = of.Frame(frame_elems, (Fraction(-4), Fraction(-1), Fraction(-4)))
    of.validate_frame(A, frame)
    with pytest.raises(fg.NoNonzeroCommutatorError):
        of.extend_frame(A, frame)


def test_forge_audit_is_deterministic(O):
    r1 = of.forge(O, seed=11)
    r2 = of.forge(O, seed=11)
    assert r1.audit == r2.audit
    assert r1.frame == r2.frame
