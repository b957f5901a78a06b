"""Exact integer helpers and quadratic residue symbols.

Everything here works on Python ints, so there is no overflow and no
floating point anywhere.
"""

from __future__ import annotations

import math


def gcd(a: int, b: int) -> int:
    if a == 0 and b == 0:
        raise ValueError("undefined gcd")
    return math.gcd(a, b)


def valuation_3(n: int) -> int:
    """Largest e such that 3**e divides n."""
    if n == 0:
        raise ValueError("3-adic valuation of 0 is undefined")
    n = abs(n)
    e = 0
    while n % 3 == 0:
        n //= 3
        e += 1
    return e


def isqrt(n: int) -> int:
    if n < 0:
        raise ValueError("isqrt of a negative number")
    return math.isqrt(n)


def is_perfect_square(n: int) -> bool:
    if n < 0:
        raise ValueError("is_perfect_square of a negative number")
    r = math.isqrt(n)
    return r * r == n


def is_prime(n: int) -> bool:
    # trial division; moduli in this package are tiny
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def factorize(n: int) -> dict[int, int]:
    """Prime factorization of a small positive integer by trial division."""
    if n < 1:
        raise ValueError("factorize expects a positive integer")
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def is_squarefree(n: int) -> bool:
    return n >= 1 and all(e == 1 for e in factorize(n).values())


def legendre_symbol(a: int, p: int) -> int:
    """Legendre symbol (a/p) by Euler's criterion."""
    if p < 3 or not is_prime(p):
        raise ValueError("modulus must be an odd prime")
    r = pow(a % p, (p - 1) // 2, p)
    if r == 0:
        return 0
    return 1 if r == 1 else -1


def jacobi_symbol(a: int, n: int) -> int:
    """Jacobi symbol (a/n) for odd positive n, by quadratic reciprocity.

    (a/1) = 1 by convention.
    """
    if n < 1 or n % 2 == 0:
        raise ValueError("Jacobi symbol needs an odd positive modulus")
    a %= n
    acc = 1
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                acc = -acc
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            acc = -acc
        a %= n
    return acc if n == 1 else 0


def is_quadratic_residue(a: int, n: int) -> bool:
    """True iff a is a square modulo the square-free n, with gcd(a, n) = 1.

    Checked prime by prime. A Jacobi symbol of +1 is not enough for
    composite n, since two -1 factors cancel.
    """
    if n == 1:
        return True
    for p in factorize(n):
        if p == 2:
            if a % 2 == 0:
                return False
            continue
        if legendre_symbol(a, p) != 1:
            return False
    return True


def ternary_solvable(a: int, b: int, c: int) -> bool:
    """Legendre's criterion for a*x^2 + b*y^2 = c*z^2 having a non-trivial solution.

    Requires a, b, c positive, square-free and pairwise coprime. The equation
    is solvable iff -ab is a square mod c, bc is a square mod a and ca is a
    square mod b.
    """
    ok = (
        all(isinstance(t, int) and t > 0 for t in (a, b, c))
        and all(is_squarefree(t) for t in (a, b, c))
        and math.gcd(a, b) == math.gcd(b, c) == math.gcd(c, a) == 1
    )
    if not ok:
        raise ValueError(
            "Legendre criterion requires square-free pairwise-coprime coefficients"
        )
    return (
        is_quadratic_residue(-a * b, c)
        and is_quadratic_residue(b * c, a)
        and is_quadratic_residue(c * a, b)
    )
