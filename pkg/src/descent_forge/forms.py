"""The three quadratic forms A, B, C and the incidence of a conic point.

For any integers p, q the forms satisfy 7*A**2 + 59*B**2 == 3*C**2, so
(A/C, B/C) is a rational point of the ellipse 7X^2 + 59Y^2 = 3. The
incidence goes the other way: from a primitive solution of
7x^2 + 59y^2 = 3z^2 back to the parameter p/q that produced it.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import NamedTuple

from descent_forge.errors import InvariantError

# every gcd(A(p, q), B(p, q)) with p, q coprime divides this
DELTA_BOUND = 2 * 3**5 * 7 * 59

EXCLUDED_INCIDENCE_TRIPLES = frozenset({(1, 2, 9), (1, -2, 9), (-1, 2, 9)})

Rational = Fraction


class FormTriple(NamedTuple):
    A: int
    B: int
    C: int


class Reconstruction(NamedTuple):
    x: int
    y: int
    z: int
    delta: int


def eval_forms(p: int, q: int) -> FormTriple:
    if p == 0 and q == 0:
        raise ValueError("degenerate parameter pair")
    return FormTriple(
        59 * p * p - 236 * p * q - 7 * q * q,
        -118 * p * p - 14 * p * q + 14 * q * q,
        9 * (59 * p * p + 7 * q * q),
    )


def check_identity(t) -> bool:
    A, B, C = t
    return 7 * A * A + 59 * B * B == 3 * C * C


def is_conic_solution(x: int, y: int, z: int) -> bool:
    return 7 * x * x + 59 * y * y == 3 * z * z


def incidence(x: int, y: int, z: int) -> Fraction:
    """Incidence (9y - 2z) / (9x - z) of a primitive solution of 7x^2 + 59y^2 = 3z^2."""
    if z <= 0 or x == 0 or y == 0:
        raise ValueError("incidence needs non-zero x, y and positive z")
    if not is_conic_solution(x, y, z):
        raise ValueError(f"({x}, {y}, {z}) does not solve 7x^2 + 59y^2 = 3z^2")
    if gcd(x, y) != 1:
        raise ValueError(f"({x}, {y}, {z}) is not primitive")
    if (x, y, z) in EXCLUDED_INCIDENCE_TRIPLES:
        raise ValueError(f"incidence of ({x}, {y}, {z}) is undefined")
    num, den = 9 * y - 2 * z, 9 * x - z
    if num == 0 or den == 0:
        # cannot happen for primitive solutions outside the excluded set
        raise InvariantError(f"degenerate incidence {num}/{den} for ({x}, {y}, {z})")
    return Fraction(num, den)


def _as_pair(theta) -> tuple[int, int]:
    if isinstance(theta, Fraction):
        return theta.numerator, theta.denominator
    p, q = theta
    return p, q


def reconstruct_from_incidence(theta) -> Reconstruction:
    """Recover the primitive conic solution whose incidence is ``theta``.

    ``theta`` is a Fraction or a (p, q) pair. Returns (A/d, B/d, C/d, d)
    with d = gcd(A, B) > 0; the divisor structure of d is re-checked on
    every call.
    """
    p, q = _as_pair(theta)
    if p == 0 or q <= 0 or gcd(p, q) != 1:
        raise ValueError(
            "incidence must be a reduced nonzero rational with positive denominator"
        )
    A, B, C = eval_forms(p, q)
    delta = gcd(A, B)
    if DELTA_BOUND % delta:
        raise InvariantError(f"delta {delta} does not divide {DELTA_BOUND}")
    if (delta % 7 == 0) != (p % 7 == 0) or (delta % 59 == 0) != (q % 59 == 0):
        raise InvariantError(f"delta {delta} breaks the 7/59 divisibility rule at {p}/{q}")
    if C % delta:
        raise InvariantError(f"delta {delta} does not divide C = {C}")
    return Reconstruction(A // delta, B // delta, C // delta, delta)
