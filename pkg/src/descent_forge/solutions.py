"""Solutions of 7x^2 + 59y^2 = 3^m: the value object and classification."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from math import gcd

from descent_forge.arith import valuation_3


def lhs(x: int, y: int) -> int:
    return 7 * x * x + 59 * y * y


@dataclass(frozen=True)
class PPSolution:
    """A primitive positive solution (x, y, m).

    x is the coordinate multiplied by 7. Construction re-checks the
    equation, positivity and coprimality. Solutions order by exponent.
    """

    x: int
    y: int
    m: int

    def __post_init__(self):
        if self.x <= 0 or self.y <= 0 or self.m <= 0:
            raise ValueError(f"not positive: {self.as_tuple()}")
        if lhs(self.x, self.y) != 3**self.m:
            raise ValueError(f"7x^2 + 59y^2 != 3^m for {self.as_tuple()}")
        if gcd(self.x, self.y) != 1:
            raise ValueError(f"not primitive: {self.as_tuple()}")

    def __lt__(self, other: "PPSolution") -> bool:
        if not isinstance(other, PPSolution):
            return NotImplemented
        return self.m < other.m

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.x, self.y, self.m)

    def to_record(self) -> dict:
        return {"m": self.m, "x": str(self.x), "y": str(self.y)}

    @classmethod
    def from_record(cls, rec: dict) -> "PPSolution":
        return cls(int(rec["x"]), int(rec["y"]), int(rec["m"]))

    def __str__(self):
        return f"({self.x}, {self.y}, {self.m})"


ROOT = PPSolution(1, 2, 5)


class Tag(str, enum.Enum):
    PP_SOLUTION = "pp_solution"
    PRIMITIVE_NONPOSITIVE = "primitive_nonpositive"
    IMPRIMITIVE = "imprimitive"
    NOT_A_SOLUTION = "not_a_solution"


@dataclass(frozen=True)
class SolutionClass:
    tag: Tag
    scaled_by: int = 1

    def describe(self) -> str:
        if self.tag is Tag.IMPRIMITIVE:
            return f"{self.tag.value} (gcd {self.scaled_by})"
        return self.tag.value


def verify(x: int, y: int, m: int) -> SolutionClass:
    if x == 0 or y == 0:
        raise ValueError("x and y must be non-zero")
    if m <= 0:
        raise ValueError("m must be positive")
    if lhs(x, y) != 3**m:
        return SolutionClass(Tag.NOT_A_SOLUTION)
    g = gcd(x, y)
    if g > 1:
        # any common factor of a solution is a power of 3
        if 3 ** valuation_3(g) != g:
            raise AssertionError(f"gcd {g} of a solution is not a power of 3")
        return SolutionClass(Tag.IMPRIMITIVE, g)
    if x < 0 or y < 0:
        return SolutionClass(Tag.PRIMITIVE_NONPOSITIVE)
    return SolutionClass(Tag.PP_SOLUTION)


def primitive_core(x: int, y: int, m: int) -> PPSolution:
    """Divide a solution by its 3-power gcd and drop signs."""
    cls = verify(x, y, m)
    if cls.tag is Tag.NOT_A_SOLUTION:
        raise ValueError(f"({x}, {y}, {m}) is not a solution")
    g = cls.scaled_by
    return PPSolution(abs(x) // g, abs(y) // g, m - 2 * valuation_3(g))


def is_suitable(m: int) -> bool:
    if m <= 0:
        raise ValueError("m must be positive")
    return m % 10 == 5


def parity_check(s) -> bool:
    """x odd and y even. Accepts a PPSolution or any (x, y, ...) tuple."""
    x, y = (s.x, s.y) if isinstance(s, PPSolution) else (s[0], s[1])
    return x % 2 == 1 and y % 2 == 0


def xy_residue_violations(solutions) -> list[PPSolution]:
    """Solutions where x*y is not -1 mod 3. Purely empirical; the claim is open."""
    return [s for s in solutions if (s.x * s.y) % 3 != 2]
