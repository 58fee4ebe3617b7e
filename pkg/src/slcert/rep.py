"""Representations of the surface group into PSL(2, Q[t]).

The side-B punctured torus carries the upper-triangular pair

    x -> diag(alpha, 1/alpha)        y -> (beta, 1; 0, 1/beta)

whose commutator is the parabolic (1, kappa; 0, 1) with
kappa = beta*(alpha^2 - 1).  The side-A punctured torus carries a discrete,
free (Fuchsian) pair obtained by conjugating the classical seed
(1,1;1,2), (1,-1;-1,2) -- commutator trace -2 -- so that its boundary
commutator lands exactly on (1, kappa; 0, 1) up to sign.  The conjugator is
diag(s, 1/s) * (0,-1;1,0) with s^2 = -kappa/6; only s^2 enters the conjugated
entries, so all images stay rational and kappa must be negative.

The glued family twists the B side by lambda_t = (1, t; 0, 1).  The boundary
commutator is invariant under that conjugation, so the piecewise assignment
is a homomorphism of the amalgam for every t, realized here over Q[t] with t
a formal indeterminate.

Parameters alpha, beta are rationals outside {0, 1, -1} that are
multiplicatively independent: alpha^s * beta^k = 1 forces s = k = 0.  That is
decided exactly from the prime factorizations of |alpha| and |beta|.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction

from .exact import Mat2, Poly, Rational
from .words import B_SIDE, free_reduce, side_of

SURFACE_PUNCTURED_TORUS = "punctured-torus"
SURFACE_GENUS2 = "genus2"
SURFACES = (SURFACE_PUNCTURED_TORUS, SURFACE_GENUS2)

DEFAULT_ALPHA = Fraction(2)
DEFAULT_BETA = Fraction(-3)


class ParamError(ValueError):
    """Parameter rejection; `witness` holds (s, k) for dependence failures."""

    def __init__(self, message: str, witness: tuple[int, int] | None = None):
        super().__init__(message)
        self.witness = witness


@dataclass(frozen=True)
class Params:
    alpha: Rational
    beta: Rational

    @property
    def kappa(self) -> Rational:
        """beta * (alpha^2 - 1), the off-diagonal of the boundary parabolic."""
        return self.beta * (self.alpha * self.alpha - 1)


def validate_params(alpha: Rational | int | str, beta: Rational | int | str) -> Params:
    """Check every parameter condition exactly and return validated Params.

    Rejections: a value in {0, 1, -1}; kappa = 0; kappa > 0 (the explicit
    side-A conjugation needs s^2 = -kappa/6 > 0 to stay rational); and
    multiplicative dependence, reported with a concrete witness (s, k) such
    that alpha^s * beta^k = 1.
    """
    alpha, beta = Fraction(alpha), Fraction(beta)
    for name, value in (("alpha", alpha), ("beta", beta)):
        if value in (0, 1, -1):
            raise ParamError(f"{name} = {value} is an excluded value (0, 1, -1)")
    kappa = beta * (alpha * alpha - 1)
    if kappa == 0:
        raise ParamError("kappa = beta*(alpha^2-1) = 0: boundary image not parabolic")
    witness = _dependence_witness(alpha, beta)
    if witness is not None:
        s, k = witness
        raise ParamError(
            f"alpha, beta multiplicatively dependent: "
            f"alpha^{s} * beta^{k} = 1",
            witness=witness,
        )
    if kappa > 0:
        raise ParamError(
            f"kappa = {kappa} > 0 is unsupported: the explicit side-A pair "
            "requires s^2 = -kappa/6 > 0"
        )
    return Params(alpha, beta)


def _is_probable_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d, r = n - 1, 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _pollard_rho(n: int) -> int:
    if n % 2 == 0:
        return 2
    rng = random.Random(0xC0FFEE ^ n)
    while True:
        c = rng.randrange(1, n)
        x = y = rng.randrange(2, n)
        d = 1
        while d == 1:
            x = (x * x + c) % n
            y = (y * y + c) % n
            y = (y * y + c) % n
            d = _gcd(abs(x - y), n)
        if d != n:
            return d


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


def _factorize(n: int) -> dict[int, int]:
    """Prime factorization of n >= 1 (trial division, then Pollard rho)."""
    out: dict[int, int] = {}
    for p in (2, 3, 5):
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    f = 7
    steps = (4, 2, 4, 2, 4, 6, 2, 6)
    i = 0
    while f * f <= n and f < 1_000_000:
        while n % f == 0:
            out[f] = out.get(f, 0) + 1
            n //= f
        f += steps[i]
        i = (i + 1) % 8
    if n > 1:
        stack = [n]
        while stack:
            m = stack.pop()
            if m == 1:
                continue
            if _is_probable_prime(m):
                out[m] = out.get(m, 0) + 1
                continue
            d = _pollard_rho(m)
            stack.extend((d, m // d))
    return out


def _exponent_vector(q: Fraction) -> dict[int, int]:
    """Prime exponents of |q| (negative for denominator primes)."""
    vec = dict(_factorize(abs(q.numerator)))
    for p, e in _factorize(q.denominator).items():
        vec[p] = vec.get(p, 0) - e
    return {p: e for p, e in vec.items() if e != 0}


def _dependence_witness(alpha: Fraction, beta: Fraction) -> tuple[int, int] | None:
    """A nonzero (s, k) with alpha^s * beta^k = 1, or None if independent.

    |alpha|^s * |beta|^k = 1 iff s*e + k*f = 0 for the prime exponent vectors
    e, f.  Independence is exactly rank 2 of those two vectors.  When they are
    proportional, f = (p/q) e gives the minimal modulus witness (-p, q); if
    the signs of alpha^-p * beta^q multiply to -1 the witness is doubled.
    """
    e = _exponent_vector(alpha)
    f = _exponent_vector(beta)
    ratio: Fraction | None = None
    for prime in set(e) | set(f):
        ei, fi = e.get(prime, 0), f.get(prime, 0)
        if ei == 0:
            return None  # f has a prime e lacks: not proportional
        r = Fraction(fi, ei)
        if ratio is None:
            ratio = r
        elif r != ratio:
            return None
    assert ratio is not None and ratio != 0  # |alpha|, |beta| != 1
    p, q = ratio.numerator, ratio.denominator
    s, k = -p, q
    sign = (-1 if alpha < 0 else 1) ** s * (-1 if beta < 0 else 1) ** k
    if sign != 1:
        s, k = 2 * s, 2 * k
    return (s, k)


def build_phi_B(params: Params) -> dict[str, Mat2]:
    """Upper-triangular images of the side-B generators (constant in t)."""
    a, b = params.alpha, params.beta
    return {
        "x": Mat2(a, 0, 0, 1 / a),
        "y": Mat2(b, 1, 0, 1 / b),
    }


def build_phi_A(params: Params) -> dict[str, Mat2]:
    """Fuchsian images of the side-A generators, constant in t.

    The seed pair (1,1;1,2), (1,-1;-1,2) generates a discrete free group with
    parabolic commutator (-1,0;-6,-1).  Conjugating by P = diag(s,1/s)*(0,-1;1,0)
    sends a matrix (m11,m12;m21,m22) to (m22, -s2*m21; -m12/s2, m11), which
    carries the commutator to (-1, 6*s2; 0, -1) = -(1, kappa; 0, 1) when
    s2 = -kappa/6.
    """
    if params.kappa >= 0:
        raise ParamError(f"kappa = {params.kappa} >= 0 unsupported for side A")
    s2 = -params.kappa / 6

    def conj(m11, m12, m21, m22) -> Mat2:
        return Mat2(m22, -s2 * m21, -m12 / s2, m11)

    return {
        "a": conj(1, 1, 1, 2),
        "b": conj(1, -1, -1, 2),
    }


def lambda_t(power: int = 1) -> Mat2:
    """The twisting matrix (1, t; 0, 1), or its inverse for power = -1."""
    if power not in (1, -1):
        raise ValueError("lambda_t power must be +1 or -1")
    return Mat2(1, Poly((0, power)), 0, 1)


def _twist(m: Mat2) -> Mat2:
    """lambda_t * m * lambda_t^-1, expanded entrywise."""
    m11, m12, m21, m22 = m.entries()
    t = Poly.t()
    return Mat2(
        m11 + t * m21,
        m12 + t * (m22 - m11) - t * t * m21,
        m21,
        m22 - t * m21,
    )


@dataclass(frozen=True)
class Representation:
    """The glued family: side-A images constant, side-B images t-twisted.

    Treat as immutable after construction; `const_images` holds the untwisted
    generator images used for fast evaluation of same-side runs.
    """

    params: Params
    surface: str
    images: dict[str, Mat2] = field(repr=False)
    const_images: dict[str, Mat2] = field(repr=False)

    @property
    def generators(self) -> str:
        return "xy" if self.surface == SURFACE_PUNCTURED_TORUS else "abxy"


def build_representation(
    params: Params | None = None, surface: str = SURFACE_GENUS2
) -> Representation:
    if params is None:
        params = validate_params(DEFAULT_ALPHA, DEFAULT_BETA)
    if surface not in SURFACES:
        raise ValueError(f"unknown surface {surface!r}; expected one of {SURFACES}")
    const = build_phi_B(params)
    if surface == SURFACE_GENUS2:
        const.update(build_phi_A(params))
    images = {
        g: _twist(m) if side_of(g) == B_SIDE else m for g, m in const.items()
    }
    one = Poly.const(1)
    for g, m in list(const.items()) + list(images.items()):
        assert m.det() == one, f"image of {g} not in SL2"
    if surface == SURFACE_GENUS2:
        ca = _evaluate_const(const, "abAB")
        cb = _evaluate_const(const, "xyXY")
        assert ca.projectively_equal(cb), "boundary gluing failed"
    return Representation(params, surface, images, const)


def _evaluate_const(const: dict[str, Mat2], run: str) -> Mat2:
    out = Mat2.identity()
    for ch in run:
        m = const[ch.lower()]
        out = out * (m.inverse() if ch.isupper() else m)
    return out


def evaluate(rep: Representation, w: str) -> Mat2:
    """Exact image of a word under the glued representation.

    Maximal same-side runs are multiplied out as constant matrices first;
    each B-side run is then conjugated by lambda_t in closed form (interior
    lambda factors cancel), and the per-run matrices are multiplied over Q[t].
    """
    w = free_reduce(w)
    scope = rep.generators
    for ch in w:
        if ch.lower() not in scope:
            raise ValueError(
                f"generator {ch.lower()!r} out of scope for surface {rep.surface}"
            )
    out = Mat2.identity()
    i = 0
    while i < len(w):
        j = i
        run_side = side_of(w[i])
        while j < len(w) and side_of(w[j]) == run_side:
            j += 1
        block = _evaluate_const(rep.const_images, w[i:j])
        if run_side == B_SIDE:
            block = _twist(block)
        out = out * block
        i = j
    return out


def freeness_probe(params: Params, max_len: int) -> str | None:
    """Search side-A words of length <= max_len mapping to +-I; None if free.

    Exhausts all freely reduced words over a, b and their inverses.  Matrix
    entries are cleared to integers (common denominator per letter), so the
    walk is plain integer arithmetic; a product equals +-I times a scale iff
    its off-diagonal entries vanish and the diagonal entries agree.
    """
    s2 = -params.kappa / 6
    p, q = s2.numerator, s2.denominator
    d = p * q
    gens = {
        "a": (2 * d, -p * p, -q * q, d),
        "A": (d, p * p, q * q, 2 * d),
        "b": (2 * d, p * p, q * q, d),
        "B": (d, -p * p, -q * q, 2 * d),
    }
    stack = [("", (1, 0, 0, 1))]
    while stack:
        word, (m11, m12, m21, m22) = stack.pop()
        if len(word) == max_len:
            continue
        for ch, (g11, g12, g21, g22) in gens.items():
            if word and word[-1] == ch.swapcase():
                continue
            prod = (
                m11 * g11 + m12 * g21,
                m11 * g12 + m12 * g22,
                m21 * g11 + m22 * g21,
                m21 * g12 + m22 * g22,
            )
            if prod[1] == 0 and prod[2] == 0 and prod[0] == prod[3]:
                return word + ch
            stack.append((word + ch, prod))
    return None
