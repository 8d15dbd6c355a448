"""Exact ground-field arithmetic: arbitrary-precision rationals and odd prime fields.

Rational scalars are plain ``fractions.Fraction`` values (always stored
reduced, positive denominator); prime-field scalars are ``Fp`` residues,
canonical in ``[0, p)``.  Both kinds support ``+ - * /`` and exact
structural equality, so every higher layer is field-agnostic.  A
``FieldSpec`` names the field and owns parsing, rendering and coercion
of the scalar text format ``[-]digits[/digits]``.

Characteristic 2 is rejected at ``FieldSpec`` construction: the frame
constructions divide by 2.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

__all__ = [
    "FieldMismatchError",
    "FieldSpec",
    "Fp",
    "RATIONAL",
    "Scalar",
    "is_zero",
    "parse_scalar",
    "render_scalar",
    "scalar_arith",
]

_SCALAR_RE = re.compile(r"^[+-]?[0-9]+(?:/[0-9]+)?$")


class FieldMismatchError(ValueError):
    """Scalars from two different ground fields were combined."""


def _is_prime(n: int) -> bool:
    # Deterministic Miller-Rabin; the base set below is exact for n < 3.3e24.
    if n < 2:
        return False
    small = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
    for q in small:
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in small:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


class Fp:
    """Residue in Z/pZ for an odd prime p."""

    __slots__ = ("p", "r")

    def __init__(self, p: int, r: int):
        self.p = p
        self.r = r % p

    def _lift(self, other) -> int:
        if isinstance(other, Fp):
            if other.p != self.p:
                raise FieldMismatchError(
                    f"cannot mix residues mod {self.p} and mod {other.p}")
            return other.r
        if isinstance(other, int):
            return other % self.p
        raise FieldMismatchError(
            f"cannot combine F_{self.p} residue with {type(other).__name__}")

    def __add__(self, other):
        return Fp(self.p, self.r + self._lift(other))

    __radd__ = __add__

    def __sub__(self, other):
        return Fp(self.p, self.r - self._lift(other))

    def __rsub__(self, other):
        return Fp(self.p, self._lift(other) - self.r)

    def __mul__(self, other):
        return Fp(self.p, self.r * self._lift(other))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._lift(other)
        if o == 0:
            raise ZeroDivisionError(f"division by zero in F_{self.p}")
        return Fp(self.p, self.r * pow(o, self.p - 2, self.p))

    def __rtruediv__(self, other):
        if self.r == 0:
            raise ZeroDivisionError(f"division by zero in F_{self.p}")
        return Fp(self.p, self._lift(other) * pow(self.r, self.p - 2, self.p))

    def __neg__(self):
        return Fp(self.p, -self.r)

    def __pos__(self):
        return self

    def __bool__(self) -> bool:
        return self.r != 0

    def __eq__(self, other) -> bool:
        if isinstance(other, Fp):
            return self.p == other.p and self.r == other.r
        if isinstance(other, int):
            return self.r == other % self.p
        return NotImplemented

    def __hash__(self):
        return hash((self.p, self.r))

    def __repr__(self) -> str:
        return f"Fp({self.p}, {self.r})"

    def __str__(self) -> str:
        return str(self.r)


Scalar = Union[Fraction, Fp]


@dataclass(frozen=True)
class FieldSpec:
    """Ground field: the rationals, or F_p for an odd prime p."""

    kind: str
    p: int | None = None

    def __post_init__(self):
        if self.kind == "rational":
            if self.p is not None:
                raise ValueError("rational field spec takes no modulus")
        elif self.kind == "prime":
            if not isinstance(self.p, int) or self.p < 2:
                raise ValueError(f"prime field needs an integer p >= 3, got {self.p!r}")
            if self.p == 2:
                raise ValueError("characteristic 2 is unsupported (division by 2 required)")
            if not _is_prime(self.p):
                raise ValueError(f"{self.p} is not prime")
        else:
            raise ValueError(f"unknown field kind {self.kind!r}")

    @classmethod
    def rational(cls) -> "FieldSpec":
        return RATIONAL

    @classmethod
    def prime(cls, p: int) -> "FieldSpec":
        return cls("prime", p)

    @property
    def is_rational(self) -> bool:
        return self.kind == "rational"

    @property
    def characteristic(self) -> int:
        return 0 if self.kind == "rational" else self.p  # type: ignore[return-value]

    @property
    def zero(self) -> Scalar:
        return Fraction(0) if self.is_rational else Fp(self.p, 0)

    @property
    def one(self) -> Scalar:
        return Fraction(1) if self.is_rational else Fp(self.p, 1)

    def from_int(self, n: int) -> Scalar:
        return Fraction(n) if self.is_rational else Fp(self.p, n)

    def coerce(self, value) -> Scalar:
        """Accept an int, a scalar string, or an existing element of this field."""
        if isinstance(value, bool):
            raise TypeError("bool is not a scalar")
        if isinstance(value, int):
            return self.from_int(value)
        if isinstance(value, str):
            return self.parse(value)
        if self.contains(value):
            return value
        raise FieldMismatchError(f"{value!r} is not an element of {self}")

    def contains(self, value) -> bool:
        if self.is_rational:
            return isinstance(value, Fraction)
        return isinstance(value, Fp) and value.p == self.p

    def parse(self, text: str) -> Scalar:
        if not isinstance(text, str) or not _SCALAR_RE.match(text):
            raise ValueError(f"malformed scalar {text!r} (expected [-]digits[/digits])")
        if "/" in text:
            num_s, den_s = text.split("/")
            num, den = int(num_s), int(den_s)
            if den == 0:
                raise ValueError(f"zero denominator in {text!r}")
        else:
            num, den = int(text), 1
        if self.is_rational:
            return Fraction(num, den)
        if den % self.p == 0:
            raise ValueError(f"denominator of {text!r} is divisible by p={self.p}")
        return Fp(self.p, num) / Fp(self.p, den)

    def render(self, x: Scalar) -> str:
        if not self.contains(x):
            raise FieldMismatchError(f"{x!r} is not an element of {self}")
        return str(x)

    def __str__(self) -> str:
        return "Q" if self.is_rational else f"F_{self.p}"


RATIONAL = FieldSpec("rational")


def parse_scalar(text: str, field: FieldSpec) -> Scalar:
    """Parse ``[-]digits[/digits]`` into a canonical field element."""
    return field.parse(text)


def render_scalar(x: Scalar, field: FieldSpec) -> str:
    """Inverse of :func:`parse_scalar` on canonical forms."""
    return field.render(x)


def _same_field(x: Scalar, y: Scalar) -> None:
    if isinstance(x, Fraction) and isinstance(y, Fraction):
        return
    if isinstance(x, Fp) and isinstance(y, Fp) and x.p == y.p:
        return
    raise FieldMismatchError(f"scalars {x!r} and {y!r} live in different fields")


def scalar_arith(op: str, x: Scalar, y: Scalar) -> Scalar:
    """Exact field arithmetic; ``op`` is one of add/sub/mul/div."""
    _same_field(x, y)
    if op == "add":
        return x + y
    if op == "sub":
        return x - y
    if op == "mul":
        return x * y
    if op == "div":
        if not y:
            raise ZeroDivisionError("scalar division by zero")
        return x / y
    raise ValueError(f"unknown operation {op!r}")


def is_zero(x: Scalar) -> bool:
    """True iff x is the additive identity of its field."""
    return not x
