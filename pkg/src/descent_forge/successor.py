"""First and second successors of a pp-solution.

A parent (x, y, m) is read as (q, p, w): q = x sits on the 7-term and
p = y on the 59-term. The swap happens only in ``normalize_parameters``.
"""

from __future__ import annotations

import enum
from math import gcd

from descent_forge.errors import InvariantError
from descent_forge.forms import eval_forms
from descent_forge.solutions import PPSolution

GAP = 3**5


class Kind(str, enum.Enum):
    FIRST = "first"
    SECOND = "second"
    NEITHER = "neither"

    @property
    def letter(self) -> str:
        return {"first": "F", "second": "S"}[self.value]


def normalize_parameters(q: int, p: int) -> tuple[int, int]:
    """Return (p', q) with p' = +-p and p'*q == -1 (mod 3)."""
    if q <= 0:
        raise ValueError("q must be positive")
    if (p * q) % 3 == 0:
        raise ValueError("3 divides pq; not a primitive solution")
    return (p, q) if (p * q) % 3 == 2 else (-p, q)


def _parameters(s: PPSolution) -> tuple[int, int]:
    return normalize_parameters(s.x, s.y)


def _exact_div(n: int, d: int) -> int:
    quo, rem = divmod(n, d)
    if rem:
        raise InvariantError(f"{n} is not divisible by {d}")
    return quo


def first_successor(s: PPSolution) -> PPSolution:
    p, q = _parameters(s)
    A, B, _ = eval_forms(p, q)
    if gcd(A, B) != GAP:
        raise InvariantError(f"gcd(A, B) = {gcd(A, B)} != 3^5 at parent {s}")
    return PPSolution(_exact_div(abs(A), GAP), _exact_div(abs(B), GAP), 2 * s.m - 5)


def second_successor(s: PPSolution) -> PPSolution:
    p, q = _parameters(s)
    A, B, _ = eval_forms(-p, q)
    if A % 3 == 0:
        raise InvariantError(f"3 divides A(-p, q) at parent {s}")
    return PPSolution(abs(A), abs(B), 2 * s.m + 5)


def successor(s: PPSolution, kind) -> PPSolution:
    kind = Kind(kind)
    if kind is Kind.FIRST:
        return first_successor(s)
    if kind is Kind.SECOND:
        return second_successor(s)
    raise ValueError("kind must be first or second")


def successors(s: PPSolution) -> tuple[PPSolution, PPSolution]:
    return first_successor(s), second_successor(s)


def recognize_successor(candidate: PPSolution, parent: PPSolution) -> Kind:
    """Decide whether ``candidate`` is a successor of ``parent`` from the forms alone.

    Both sign choices for p are tried, with A and B taken at the same sign.
    No relation between the exponents is assumed.
    """
    q, p = parent.x, parent.y
    x, y = candidate.x, candidate.y
    for sp in (p, -p):
        A, B, _ = eval_forms(sp, q)
        if abs(A) == x and abs(B) == y:
            return Kind.SECOND
    for sp in (p, -p):
        A, B, _ = eval_forms(sp, q)
        if abs(A) == GAP * x and abs(B) == GAP * y:
            return Kind.FIRST
    return Kind.NEITHER
