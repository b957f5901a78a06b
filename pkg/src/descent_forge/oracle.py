"""Brute-force enumeration of a*x^2 + b*y^2 = lam * k^m.

This module deliberately knows nothing about the successor construction;
it is the independent ground truth the tree is checked against.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from math import gcd, isqrt

DEFAULT_BUDGET = 10**8
BUDGET_ENV = "DESCENT_FORGE_BUDGET"

_SQUARES_MOD_64 = frozenset(i * i % 64 for i in range(64))


@dataclass(frozen=True)
class EquationSpec:
    a: int = 7
    b: int = 59
    lam: int = 1
    k: int = 3

    def __post_init__(self):
        if min(self.a, self.b, self.lam) < 1 or self.k < 2:
            raise ValueError("a, b, lambda must be positive and k >= 2")

    def rhs(self, m: int) -> int:
        return self.lam * self.k**m

    def __str__(self):
        lam = "" if self.lam == 1 else f"{self.lam}*"
        return f"{self.a}x^2 + {self.b}y^2 = {lam}{self.k}^m"


DEFAULT_SPEC = EquationSpec()


@dataclass(frozen=True, order=True)
class Hit:
    x: int
    y: int
    primitive: bool

    def to_record(self, m: int) -> dict:
        return {"m": m, "x": str(self.x), "y": str(self.y), "primitive": self.primitive}


def scan_length(spec: EquationSpec, m: int) -> int:
    """Number of candidate values the scan visits for exponent m."""
    return isqrt(spec.rhs(m) // max(spec.a, spec.b))


def default_budget() -> int:
    env = os.environ.get(BUDGET_ENV)
    return int(env) if env else DEFAULT_BUDGET


def brute_force(spec: EquationSpec, m: int, prefilter: bool = True) -> set[Hit]:
    """Every positive (x, y) with a*x^2 + b*y^2 = lam*k^m.

    Scans the coordinate with the larger coefficient and tests whether the
    remainder is an exact multiple of the other coefficient times a square.
    """
    if m < 0:
        raise ValueError("m must be non-negative")
    n = spec.rhs(m)
    # (big, small) coefficient; scanned variable t goes with big
    swap = spec.a > spec.b
    big, small = (spec.a, spec.b) if swap else (spec.b, spec.a)
    hits = set()
    for t in range(1, isqrt(n // big) + 1):
        rest = n - big * t * t
        if rest <= 0 or rest % small:
            continue
        r = rest // small
        if prefilter and (r & 63) not in _SQUARES_MOD_64:
            continue
        s = isqrt(r)
        if s == 0 or s * s != r:
            continue
        x, y = (t, s) if swap else (s, t)
        if spec.a * x * x + spec.b * y * y != n:
            raise AssertionError(f"oracle self-check failed at {(x, y, m)}")
        hits.add(Hit(x, y, gcd(x, y) == 1))
    return hits


@dataclass
class SweepResult:
    spec: EquationSpec
    m_max: int
    hits: dict[int, set[Hit]] = field(default_factory=dict)
    truncated_at: int | None = None  # first exponent not scanned

    @property
    def truncated(self) -> bool:
        return self.truncated_at is not None

    def exponents_with_hits(self, primitive_only: bool = False) -> list[int]:
        return sorted(
            m for m, hs in self.hits.items() if any(h.primitive or not primitive_only for h in hs)
        )

    @property
    def suitable_exponents(self) -> list[int]:
        return self.exponents_with_hits(primitive_only=True)

    def records(self) -> list[dict]:
        return [h.to_record(m) for m in sorted(self.hits) for h in sorted(self.hits[m])]


def oracle_sweep(
    spec: EquationSpec, m_max: int, budget: int | None = None, m_min: int = 1
) -> SweepResult:
    """Run ``brute_force`` for m = m_min..m_max under an iteration budget.

    If the next exponent would push the total scan length past the budget,
    the sweep stops there and records ``truncated_at``.
    """
    budget = default_budget() if budget is None else budget
    res = SweepResult(spec, m_max)
    used = 0
    for m in range(m_min, m_max + 1):
        cost = scan_length(spec, m)
        if used + cost > budget:
            res.truncated_at = m
            break
        used += cost
        res.hits[m] = brute_force(spec, m)
    return res
