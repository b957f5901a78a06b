"""Breadth-first generation of the binary tree of pp-solutions."""

from __future__ import annotations

import heapq
from dataclasses import dataclass

from descent_forge.solutions import ROOT, PPSolution
from descent_forge.successor import Kind, successor


@dataclass(frozen=True)
class TreeNode:
    solution: PPSolution
    depth: int
    path: str  # over {"F", "S"}, root first

    def to_record(self) -> dict:
        s = self.solution
        return {"m": s.m, "x": str(s.x), "y": str(s.y), "depth": self.depth, "path": self.path}


def replay(path: str) -> PPSolution:
    s = ROOT
    for letter in path:
        s = successor(s, Kind.FIRST if letter == "F" else Kind.SECOND)
    return s


def enumerate_tree(max_m: int) -> list[TreeNode]:
    """All pp-solutions with m <= max_m, ascending by m.

    The root is its own first successor, so only its second successor is
    expanded. Every other node has both children strictly above it, so
    popping a min-heap keyed by m yields sorted output.
    """
    if max_m < 5:
        raise ValueError("max_m must be at least 5")
    out: list[TreeNode] = []
    seen: dict[int, TreeNode] = {}
    heap: list[tuple[int, str, TreeNode]] = [(ROOT.m, "", TreeNode(ROOT, 0, ""))]
    while heap:
        _, _, node = heapq.heappop(heap)
        s = node.solution
        if s.m in seen:
            raise RuntimeError(f"two pp-solutions with m = {s.m}: {seen[s.m].solution} and {s}")
        seen[s.m] = node
        out.append(node)
        kinds = (Kind.SECOND,) if s == ROOT else (Kind.FIRST, Kind.SECOND)
        for kind in kinds:
            child = successor(s, kind)
            if child.m <= max_m:
                path = node.path + kind.letter
                heapq.heappush(heap, (child.m, path, TreeNode(child, node.depth + 1, path)))
    return out
