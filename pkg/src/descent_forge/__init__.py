"""Primitive positive solutions of 7x^2 + 59y^2 = 3^m.

All of them lie on a binary tree rooted at (1, 2, 5): ``successor`` grows
the tree, ``descent`` walks any solution back to the root, and ``oracle``
checks both against an exhaustive scan.
"""

from descent_forge.arith import (
    gcd,
    is_perfect_square,
    isqrt,
    jacobi_symbol,
    legendre_symbol,
    ternary_solvable,
    valuation_3,
)
from descent_forge.descent import (
    DescentPath,
    DescentStep,
    check_certificate,
    descend_to_root,
    predecessor,
)
from descent_forge.errors import InvariantError
from descent_forge.forms import (
    FormTriple,
    check_identity,
    eval_forms,
    incidence,
    reconstruct_from_incidence,
)
from descent_forge.oracle import EquationSpec, brute_force, oracle_sweep
from descent_forge.solutions import (
    ROOT,
    PPSolution,
    SolutionClass,
    Tag,
    is_suitable,
    parity_check,
    verify,
)
from descent_forge.successor import (
    Kind,
    first_successor,
    normalize_parameters,
    recognize_successor,
    second_successor,
)
from descent_forge.tree import TreeNode, enumerate_tree

__version__ = "0.1.0"
