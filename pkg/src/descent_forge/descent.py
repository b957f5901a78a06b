"""Predecessor map and descent certificates.

Any pp-solution other than (1, 2, 5) is a successor of a strictly smaller
one. The predecessor is found through the incidence of one of the four
sign variants of the associated conic point; the gcd of the forms at that
incidence tells which successor the child is.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from descent_forge.errors import InvariantError
from descent_forge.forms import (
    EXCLUDED_INCIDENCE_TRIPLES,
    eval_forms,
    incidence,
    reconstruct_from_incidence,
)
from descent_forge.solutions import ROOT, PPSolution
from descent_forge.successor import GAP, Kind, recognize_successor

# Order of the sign variants tried; index + 1 is the recorded variant number.
SIGN_VARIANTS = ((1, 1), (-1, 1), (1, -1), (-1, -1))


@dataclass(frozen=True)
class DescentStep:
    child: PPSolution
    parent: PPSolution
    kind: Kind
    variant: int
    theta: Fraction
    delta: int

    def to_record(self) -> dict:
        return {
            "x": str(self.child.x),
            "y": str(self.child.y),
            "m": self.child.m,
            "kind": self.kind.value,
            "variant": self.variant,
            "theta": f"{self.theta.numerator}/{self.theta.denominator}",
            "delta": str(self.delta),
        }


@dataclass(frozen=True)
class DescentPath:
    start: PPSolution
    steps: tuple[DescentStep, ...] = field(default_factory=tuple)

    def __len__(self):
        return len(self.steps)

    @property
    def kinds(self) -> list[Kind]:
        return [st.kind for st in self.steps]

    def tree_path(self) -> str:
        """Successor letters read from the root down, e.g. "SFS"."""
        return "".join(k.letter for k in reversed(self.kinds))

    def to_certificate(self) -> dict:
        return {
            "start": self.start.to_record(),
            "root": ROOT.to_record(),
            "steps": [st.to_record() for st in self.steps],
        }


@dataclass(frozen=True)
class VariantReport:
    variant: int
    x: int
    y: int
    theta: Fraction
    delta: int

    @property
    def admissible(self) -> bool:
        return self.delta % 7 != 0 and self.delta % 59 != 0


def _half_exponent(m: int) -> int:
    if m % 2 == 0:
        raise InvariantError(f"even exponent {m}; 7x^2 + 59y^2 = 3^m has no such solution")
    return (m - 1) // 2


def sign_variants(s: PPSolution) -> list[VariantReport]:
    """Incidence and gcd of the forms for each of (+-x, +-y, 3^n)."""
    z = 3 ** _half_exponent(s.m)
    out = []
    for i, (sx, sy) in enumerate(SIGN_VARIANTS, start=1):
        x, y = sx * s.x, sy * s.y
        if (x, y, z) in EXCLUDED_INCIDENCE_TRIPLES:
            raise InvariantError(f"excluded incidence triple {(x, y, z)}")
        theta = incidence(x, y, z)
        rec = reconstruct_from_incidence(theta)
        out.append(VariantReport(i, x, y, theta, rec.delta))
    return out


def predecessor(s: PPSolution) -> DescentStep:
    if s == ROOT:
        raise ValueError("root has no predecessor")
    n = _half_exponent(s.m)
    z = 3**n
    chosen = next((v for v in sign_variants(s) if v.admissible), None)
    if chosen is None:
        raise InvariantError(f"no sign variant of {s} has delta prime to 7 and 59")
    p, q = chosen.theta.numerator, chosen.theta.denominator
    delta = chosen.delta
    if delta % 2 == 0:
        raise InvariantError(f"even delta {delta} at {s}: would solve 7x^2 + 59y^2 = 2*3^k")
    A, B, C = eval_forms(p, q)
    if (A, B, C) != (delta * chosen.x, delta * chosen.y, delta * z):
        raise InvariantError(f"forms at {p}/{q} do not reproduce {s}")
    if delta == 1:
        kind, parent_m = Kind.SECOND, n - 2
    elif delta == GAP:
        kind, parent_m = Kind.FIRST, n + 3
    else:
        raise InvariantError(f"delta {delta} not in {{1, 243}} at {s}")
    parent = PPSolution(q, abs(p), parent_m)
    if not parent.m < s.m:
        raise InvariantError(f"parent {parent} is not smaller than {s}")
    if recognize_successor(s, parent) is not kind:
        raise InvariantError(f"{s} is not recognized as the {kind.value} successor of {parent}")
    return DescentStep(s, parent, kind, chosen.variant, chosen.theta, delta)


def descend_to_root(s: PPSolution) -> DescentPath:
    steps = []
    cur = s
    while cur != ROOT:
        step = predecessor(cur)
        steps.append(step)
        cur = step.parent
    return DescentPath(s, tuple(steps))


def check_certificate(cert: dict) -> bool:
    """Check a certificate with the successor-recognition criterion only.

    Each step's child must be the recorded successor of the next step's
    child; the last one must be a successor of the root.
    """
    chain = [PPSolution.from_record(st) for st in cert["steps"]]
    start = PPSolution.from_record(cert["start"])
    root = PPSolution.from_record(cert["root"])
    if root != ROOT:
        return False
    if chain and chain[0] != start:
        return False
    if not chain and start != ROOT:
        return False
    parents = chain[1:] + [ROOT]
    for child, parent, st in zip(chain, parents, cert["steps"]):
        if recognize_successor(child, parent).value != st["kind"]:
            return False
        if not parent.m < child.m:
            return False
    return True
