import pytest

from descent_forge.solutions import ROOT
from descent_forge.tree import enumerate_tree, replay

from conftest import PAPER_SOLUTIONS


def test_first_four():
    nodes = enumerate_tree(35)
    assert [n.solution.as_tuple() for n in nodes] == PAPER_SOLUTIONS
    assert [n.path for n in nodes] == ["", "S", "SF", "SS"]


def test_root_only():
    nodes = enumerate_tree(5)
    assert [n.solution for n in nodes] == [ROOT]
    assert nodes[0].depth == 0 and nodes[0].path == ""


def test_105():
    nodes = enumerate_tree(105)
    assert [n.solution.m for n in nodes] == list(range(5, 106, 10))


def test_rejects_small_bound():
    with pytest.raises(ValueError):
        enumerate_tree(4)


def test_bound_between_exponents():
    assert [n.solution.m for n in enumerate_tree(44)] == [5, 15, 25, 35]


def test_paths_replay(tree_205):
    for node in tree_205:
        assert replay(node.path) == node.solution
        assert len(node.path) == node.depth


def test_size_bounds(tree_205):
    for node in tree_205:
        s = node.solution
        assert 7 * s.x**2 <= 3**s.m and 59 * s.y**2 < 3**s.m


def test_size_lower_bound_counterexample(tree_205):
    # x*sqrt(7) > 3^((m-6)/2) is not an invariant: it fails at m = 185
    failing = [n.solution.m for n in tree_205 if n.solution.m >= 6 and not 3 ** (n.solution.m - 6) < 7 * n.solution.x**2]
    assert failing == [185]


def test_deterministic():
    assert enumerate_tree(305) == enumerate_tree(305)


def test_record_field_order(tree_205):
    assert list(tree_205[1].to_record()) == ["m", "x", "y", "depth", "path"]


def test_duplicate_exponent_raises(monkeypatch):
    import descent_forge.tree as mod
    from descent_forge.solutions import PPSolution

    s2 = PPSolution(701, 430, 15)
    monkeypatch.setattr(mod, "successor", lambda s, kind: s2)
    with pytest.raises(RuntimeError, match="two pp-solutions with m = 15"):
        enumerate_tree(25)
