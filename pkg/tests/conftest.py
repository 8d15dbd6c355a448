from fractions import Fraction

import pytest

import octoforge as of

Q = of.RATIONAL


@pytest.fixture(scope="session")
def H():
    return of.quaternion_algebra(Q, -1, -1)


@pytest.fixture(scope="session")
def split_H():
    return of.quaternion_algebra(Q, 1, -1)


@pytest.fixture(scope="session")
def O():
    return of.octonion_algebra(Q, -1, -1, -1)


@pytest.fixture(scope="session")
def sedenions():
    return of.sedenion_algebra(Q)


@pytest.fixture(scope="session")
def sum_HF(H):
    return of.direct_sum(H, of.field_algebra(Q))


@pytest.fixture(scope="session")
def disguised_O(O):
    return of.disguise(O, 42)


@pytest.fixture(scope="session")
def commutative_2d():
    # F[t]/(t^2 - 1): commutative, associative, with zero divisors
    return of.cayley_dickson(of.field_algebra(Q), 1, labels=("1", "t"),
                             name="F[t]/(t^2-1)")


@pytest.fixture(scope="session")
def m2():
    """2x2 matrices over Q on the basis (E11, E12, E21, E22)."""
    one = 1
    structure = {
        (0, 0): [(0, one)], (0, 1): [(1, one)],
        (1, 2): [(0, one)], (1, 3): [(1, one)],
        (2, 0): [(2, one)], (2, 1): [(3, one)],
        (3, 2): [(2, one)], (3, 3): [(3, one)],
    }
    return of.Algebra("M2(Q)", Q, 4, ("E11", "E12", "E21", "E22"),
                      (1, 0, 0, 1), structure)


@pytest.fixture(scope="session")
def null_extension():
    """Associative 4-dim algebra (1, a, m, am) with a^2 = 1 and m^2 = 0:
    the span of m is a square-zero ideal, so nilpotent elements abound."""
    structure = {
        (1, 1): [(0, 1)],
        (1, 2): [(3, 1)], (2, 1): [(3, -1)],
        (1, 3): [(2, 1)], (3, 1): [(2, -1)],
    }
    return of.Algebra("null-extension", Q, 4, ("1", "a", "m", "am"),
                      (1, 0, 0, 0), structure)


def frac(x) -> Fraction:
    return Fraction(x)
