"""Exact scalar, polynomial and 2x2 matrix arithmetic over Q and Q[t].

Scalars are `fractions.Fraction` (always in lowest terms, denominator > 0),
aliased here as `Rational`.  A polynomial in the formal indeterminate t is a
dense ascending coefficient list; the zero polynomial has no coefficients and
degree -1 by convention.  Matrices are 2x2 over Poly with rationals embedded
as degree-0 entries.  Group elements live in PSL(2), so matrix equality is
also offered projectively: equal up to a global sign.

t is never evaluated at a number.  A non-constant entry or trace is the whole
certificate: substituting any transcendental for t yields a transcendental
value, which no finite-order isometry can have.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Union

Rational = Fraction

Scalar = Union[Rational, int]


def parse_rational(text: str) -> Rational:
    """Parse "p/q" or "p" into an exact rational."""
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"not a rational: {text!r} ({exc})") from None


def format_rational(q: Rational) -> str:
    """Render as "p/q", or just "p" when the denominator is 1."""
    return str(q)


def rat_arith(lhs: Scalar, rhs: Scalar, op: str) -> Rational:
    """Exact rational arithmetic; op is one of add, sub, mul, div."""
    a, b = Fraction(lhs), Fraction(rhs)
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        if b == 0:
            raise ZeroDivisionError("div: division by zero")
        return a / b
    raise ValueError(f"unknown rational op {op!r}")


class Poly:
    """Univariate polynomial in t with Fraction coefficients, ascending order.

    Immutable; the coefficient tuple never has a trailing zero, so two equal
    polynomials always compare equal structurally.
    """

    __slots__ = ("coeffs",)

    coeffs: tuple[Rational, ...]

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    @classmethod
    def const(cls, value: Scalar) -> "Poly":
        return cls((value,))

    @classmethod
    def t(cls) -> "Poly":
        return cls((0, 1))

    @property
    def degree(self) -> int:
        """Degree of the polynomial; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def constant_value(self) -> Rational:
        """The value of a constant polynomial (0 for the zero polynomial)."""
        if not self.is_constant():
            raise ValueError(f"polynomial {self} is not constant")
        return self.coeffs[0] if self.coeffs else Fraction(0)

    def coeff(self, k: int) -> Rational:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else Fraction(0)

    def __add__(self, other: "Poly | Scalar") -> "Poly":
        other = _as_poly(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly(self.coeff(i) + other.coeff(i) for i in range(n))

    __radd__ = __add__

    def __sub__(self, other: "Poly | Scalar") -> "Poly":
        other = _as_poly(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly(self.coeff(i) - other.coeff(i) for i in range(n))

    def __rsub__(self, other: "Poly | Scalar") -> "Poly":
        return _as_poly(other) - self

    def __neg__(self) -> "Poly":
        return Poly(-c for c in self.coeffs)

    def __mul__(self, other: "Poly | Scalar") -> "Poly":
        other = _as_poly(other)
        if not self.coeffs or not other.coeffs:
            return Poly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Poly(out)

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (Fraction, int)):
            other = Poly.const(other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"Poly({list(self.coeffs)!r})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if k == 0:
                terms.append(str(c))
            else:
                mono = "t" if k == 1 else f"t^{k}"
                if c == 1:
                    terms.append(mono)
                elif c == -1:
                    terms.append(f"-{mono}")
                else:
                    terms.append(f"{c}*{mono}")
        out = terms[0]
        for term in terms[1:]:
            out += f" - {term[1:]}" if term.startswith("-") else f" + {term}"
        return out

    def to_json(self) -> list[str]:
        """Ascending list of "p/q" strings."""
        return [str(c) for c in self.coeffs]


def _as_poly(value: "Poly | Scalar") -> Poly:
    if isinstance(value, Poly):
        return value
    return Poly.const(value)


ZERO = Poly()
ONE = Poly.const(1)


def poly_arith(lhs: Poly, rhs: Poly, op: str) -> Poly:
    """Exact polynomial arithmetic; op is one of add, sub, mul."""
    if op == "add":
        return lhs + rhs
    if op == "sub":
        return lhs - rhs
    if op == "mul":
        return lhs * rhs
    raise ValueError(f"unknown polynomial op {op!r}")


class Mat2:
    """2x2 matrix over Q[t].

    Everything produced by a representation has determinant 1 exactly; the
    inverse is therefore the adjugate.  PSL(2) equality is `projectively_equal`
    (equal entrywise up to one global sign).
    """

    __slots__ = ("e11", "e12", "e21", "e22")

    def __init__(self, e11, e12, e21, e22):
        for name, entry in (("e11", e11), ("e12", e12), ("e21", e21), ("e22", e22)):
            object.__setattr__(self, name, _as_poly(entry))

    def __setattr__(self, name, value):
        raise AttributeError("Mat2 is immutable")

    @classmethod
    def identity(cls) -> "Mat2":
        return cls(1, 0, 0, 1)

    def entries(self) -> tuple[Poly, Poly, Poly, Poly]:
        return (self.e11, self.e12, self.e21, self.e22)

    def __mul__(self, other: "Mat2") -> "Mat2":
        return Mat2(
            self.e11 * other.e11 + self.e12 * other.e21,
            self.e11 * other.e12 + self.e12 * other.e22,
            self.e21 * other.e11 + self.e22 * other.e21,
            self.e21 * other.e12 + self.e22 * other.e22,
        )

    def __neg__(self) -> "Mat2":
        return Mat2(-self.e11, -self.e12, -self.e21, -self.e22)

    def __pow__(self, n: int) -> "Mat2":
        if n < 0:
            return self.inverse() ** (-n)
        out = Mat2.identity()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def det(self) -> Poly:
        return self.e11 * self.e22 - self.e12 * self.e21

    def trace(self) -> Poly:
        return self.e11 + self.e22

    def inverse(self) -> "Mat2":
        """Adjugate inverse; valid only for determinant +1 or -1."""
        d = self.det()
        if d == ONE:
            return Mat2(self.e22, -self.e12, -self.e21, self.e11)
        if d == Poly.const(-1):
            return Mat2(-self.e22, self.e12, self.e21, -self.e11)
        raise ValueError(f"cannot invert matrix with determinant {d}; expected +-1")

    def is_identity(self) -> bool:
        return self == Mat2.identity()

    def is_projective_identity(self) -> bool:
        """True for +I and -I, the identity of PSL(2)."""
        return self.is_identity() or (-self).is_identity()

    def projectively_equal(self, other: "Mat2") -> bool:
        return self == other or self == -other

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Mat2):
            return NotImplemented
        return self.entries() == other.entries()

    def __hash__(self) -> int:
        return hash(self.entries())

    def __repr__(self) -> str:
        return f"Mat2({self.e11!s}, {self.e12!s}; {self.e21!s}, {self.e22!s})"

    def __str__(self) -> str:
        rows = [(str(self.e11), str(self.e12)), (str(self.e21), str(self.e22))]
        width = max(len(s) for row in rows for s in row)
        return "\n".join(
            "[ " + "   ".join(s.rjust(width) for s in row) + " ]" for row in rows
        )

    def to_json(self) -> list[list[list[str]]]:
        """Nested 2x2 array of polynomial coefficient lists."""
        return [
            [self.e11.to_json(), self.e12.to_json()],
            [self.e21.to_json(), self.e22.to_json()],
        ]


def mat_mul(lhs: Mat2, rhs: Mat2) -> Mat2:
    return lhs * rhs


def mat_inverse(m: Mat2) -> Mat2:
    return m.inverse()


def projective_eq(lhs: Mat2, rhs: Mat2) -> bool:
    return lhs.projectively_equal(rhs)


def trace(m: Mat2) -> Poly:
    return m.trace()
