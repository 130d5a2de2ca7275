#!/usr/bin/env python
"""
balance

Persistent structural balance of a node subset S over a switching schedule.

Each signed arc among S-nodes, in any snapshot, is a parity constraint:
positive -> same part, negative -> opposite parts. The constraints are solved
with a union-find whose links carry the parity to the parent.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import FrozenSet, Optional, Tuple

from core_scripts.errors import DomainError, PreconditionError


@dataclass(frozen=True)
class Bipartition:
    part1: FrozenSet[int]
    part2: FrozenSet[int]

    def __post_init__(self):
        object.__setattr__(self, 'part1', frozenset(self.part1))
        object.__setattr__(self, 'part2', frozenset(self.part2))
        if self.part1 & self.part2:
            raise DomainError("bipartition parts overlap")

    @property
    def nodes(self):
        return self.part1 | self.part2

    def side(self, node):
        """ +1 for part1, -1 for part2
        """
        if node in self.part1:
            return 1
        if node in self.part2:
            return -1
        raise DomainError("node {} is not in the bipartition".format(node))


@dataclass(frozen=True)
class BalanceVerdict:
    """ balanced:    parity constraints are consistent
        bipartition: canonical solution (smallest node of every constraint
                     component in part1), None if unbalanced
        unique:      the solution is unique up to swapping the parts
        conflict:    (i, j, sign) of the first arc closing an odd cycle
    """
    balanced: bool
    bipartition: Optional[Bipartition] = None
    unique: bool = False
    conflict: Optional[Tuple[int, int, int]] = None


class ParityUnionFind:
    """ Union-find over 0 ... n-1 with parity to the parent
    """
    def __init__(self, nodes):
        self.parent = {x: x for x in nodes}
        self.parity = {x: 0 for x in nodes}
        self.size = {x: 1 for x in nodes}

    def find(self, x):
        """ (root, parity of x relative to root)
        """
        path = []
        while self.parent[x] != x:
            path.append(x)
            x = self.parent[x]
        root = x
        # compress, accumulating parity from the top of the path down
        acc = 0
        for node in reversed(path):
            acc ^= self.parity[node]
            self.parity[node] = acc
            self.parent[node] = root
        return root, (self.parity[path[0]] if path else 0)

    def union(self, x, y, odd):
        """ Impose parity(x) xor parity(y) == odd; False on conflict
        """
        root_x, par_x = self.find(x)
        root_y, par_y = self.find(y)
        if root_x == root_y:
            return (par_x ^ par_y) == odd
        if self.size[root_x] < self.size[root_y]:
            root_x, root_y = root_y, root_x
        self.parent[root_y] = root_x
        self.parity[root_y] = par_x ^ par_y ^ odd
        self.size[root_x] += self.size[root_y]
        return True

    def n_groups(self):
        return len({self.find(x)[0] for x in self.parent})


def check_persistent_balance(schedule, delta: float, S) -> BalanceVerdict:
    """ verdict = check_persistent_balance(schedule, delta, S)

    Args:
      schedule: SwitchingSchedule
      delta:    positive real, validated only (every nonzero segment sign
                constrains the partition regardless of delta)
      S:        nonempty collection of 0-based nodes
    Return:
      BalanceVerdict
    """
    if not (math.isfinite(delta) and delta > 0):
        raise DomainError("delta must be positive")
    nodes = sorted(set(S))
    if not nodes:
        raise PreconditionError("S must be nonempty")
    n = schedule.n_agents
    if any(not 0 <= x < n for x in nodes):
        raise DomainError("S is not a subset of the agent set")

    members = set(nodes)
    dsu = ParityUnionFind(nodes)
    for snap in schedule.snapshots:
        for i, j, w in snap.weights:
            if i in members and j in members:
                if not dsu.union(i, j, 1 if w < 0 else 0):
                    return BalanceVerdict(
                        False, conflict=(i, j, 1 if w > 0 else -1))

    anchor = {}
    for x in nodes:
        root, _ = dsu.find(x)
        anchor.setdefault(root, x)
    part1, part2 = set(), set()
    for x in nodes:
        root, par = dsu.find(x)
        if par == dsu.find(anchor[root])[1]:
            part1.add(x)
        else:
            part2.add(x)
    return BalanceVerdict(True, Bipartition(part1, part2),
                          unique=(dsu.n_groups() == 1))


if __name__ == "__main__":
    print("Tools for structural balance")
