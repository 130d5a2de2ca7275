#!/usr/bin/env python
"""
scc

Strongly connected components, condensation DAG, root set and
longest simple paths of a directed graph.

All functions take information-flow edges (u, v), meaning u -> v, over nodes
0 ... n-1. For a UnionGraph use UnionGraph.flow_edges().

Tarjan's algorithm is written with an explicit stack so that the recursion
limit is never reached.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import FrozenSet, Iterable, Optional, Tuple

import core_scripts.graph_tools.conf as nii_gconf
from core_scripts.errors import CapacityError, DomainError, PreconditionError


@dataclass(frozen=True)
class Condensation:
    """ Condensation of a digraph

    scc_list:     components in topological order (sources first),
                  each a sorted tuple of nodes
    dag_edges:    (component index, component index) pairs
    component_of: component index of every node
    """
    scc_list: Tuple[Tuple[int, ...], ...]
    dag_edges: FrozenSet[Tuple[int, int]]
    component_of: Tuple[int, ...]

    @property
    def n_components(self):
        return len(self.scc_list)

    def in_degrees(self):
        degree = [0] * self.n_components
        for _, dst in self.dag_edges:
            degree[dst] += 1
        return degree


def f_adjacency_list(edges, n):
    """ succ = f_adjacency_list(edges, n)
    Sorted successor lists; raises DomainError on out-of-range nodes
    """
    succ = [set() for _ in range(n)]
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise DomainError(
                "edge ({}, {}) references a node outside [0, {})".format(
                    u, v, n))
        if u != v:
            succ[u].add(v)
    return [sorted(x) for x in succ]


class _TarjanComputation:
    BEGIN, CONTINUE, RETURN = 0, 1, 2

    def __init__(self, succ):
        self.succ = succ
        self.index = {}
        self.lowlink = {}
        self.on_stack = {}
        self.stack = []
        self.counter = 0
        self.sccs = []

    def run(self):
        for node in range(len(self.succ)):
            if node not in self.index:
                self._visit(node)
        # Tarjan emits sinks first
        self.sccs.reverse()
        return self.sccs

    def _visit(self, root):
        work = [(root, None, 0, self.BEGIN)]
        while work:
            v, w, pos, state = work.pop()
            if state == self.BEGIN:
                self.counter += 1
                self.index[v] = self.counter
                self.lowlink[v] = self.counter
                self.on_stack[v] = len(self.stack)
                self.stack.append(v)
                work.append((v, None, 0, self.CONTINUE))
            elif state == self.CONTINUE:
                if pos == len(self.succ[v]):
                    if self.lowlink[v] == self.index[v]:
                        start = self.on_stack[v]
                        comp = self.stack[start:]
                        del self.stack[start:]
                        for node in comp:
                            del self.on_stack[node]
                        self.sccs.append(tuple(sorted(comp)))
                    continue
                w = self.succ[v][pos]
                if w not in self.index:
                    work.append((v, w, pos, self.RETURN))
                    work.append((w, None, 0, self.BEGIN))
                else:
                    if w in self.on_stack:
                        self.lowlink[v] = min(self.lowlink[v], self.index[w])
                    work.append((v, None, pos + 1, self.CONTINUE))
            else:
                self.lowlink[v] = min(self.lowlink[v], self.lowlink[w])
                work.append((v, None, pos + 1, self.CONTINUE))


def condensation(edges: Iterable[Tuple[int, int]], n: int) -> Condensation:
    """ cond = condensation(edges, n)

    input
    -----
      edges: iterable of flow edges (u, v), u -> v
      n:     number of nodes

    output
    ------
      cond:  Condensation, components in topological order
    """
    if n < 1:
        raise DomainError("graph needs at least one node")
    succ = f_adjacency_list(edges, n)
    sccs = _TarjanComputation(succ).run()
    component_of = [0] * n
    for idx, comp in enumerate(sccs):
        for node in comp:
            component_of[node] = idx
    dag_edges = set()
    for u in range(n):
        for v in succ[u]:
            if component_of[u] != component_of[v]:
                dag_edges.add((component_of[u], component_of[v]))
    return Condensation(tuple(sccs), frozenset(dag_edges), tuple(component_of))


def root_set(cond: Condensation) -> Optional[FrozenSet[int]]:
    """ S = root_set(cond)
    Nodes of the unique source component, or None when the condensation
    has several sources
    """
    sources = [idx for idx, deg in enumerate(cond.in_degrees()) if deg == 0]
    if len(sources) != 1:
        return None
    return frozenset(cond.scc_list[sources[0]])


def f_reachable(succ, starts):
    """ seen = f_reachable(succ, starts)
    Breadth-first set of nodes reachable from starts
    """
    seen = set(starts)
    queue = deque(starts)
    while queue:
        u = queue.popleft()
        for v in succ[u]:
            if v not in seen:
                seen.add(v)
                queue.append(v)
    return seen


def _longest_simple_path(succ, starts):
    n = len(succ)
    best = 0
    visited = [False] * n

    def _dfs(u, depth):
        nonlocal best
        if depth > best:
            best = depth
        if best == n - 1:
            return
        visited[u] = True
        for v in succ[u]:
            if not visited[v]:
                _dfs(v, depth + 1)
        visited[u] = False

    for s in starts:
        _dfs(s, 0)
        if best == n - 1:
            break
    return best


def _node_count(edges, nodes, n):
    if n is not None:
        return n
    used = [x for edge in edges for x in edge] + list(nodes)
    return max(used) + 1 if used else 0


def longest_path_from_roots(edges: Iterable[Tuple[int, int]], S,
                            n: Optional[int] = None,
                            node_cap: int = nii_gconf.path_node_cap) -> int:
    """ d0 = longest_path_from_roots(edges, S, n=None, node_cap=20)
    Longest simple path (in edges) from any node of S to any node,
    by exhaustive depth-first enumeration. Paths may pass through S.

    Raises CapacityError if n > node_cap and PreconditionError if some
    node is not reachable from S.
    """
    edges = list(edges)
    S = sorted(set(S))
    if not S:
        raise PreconditionError("root set is empty")
    n = _node_count(edges, S, n)
    if n > node_cap:
        raise CapacityError(
            "longest-path search on {:d} nodes exceeds the cap {:d}".format(
                n, node_cap))
    succ = f_adjacency_list(edges, n)
    if any(not 0 <= s < n for s in S):
        raise DomainError("root set references a node outside the graph")
    missing = set(range(n)) - f_reachable(succ, S)
    if missing:
        raise PreconditionError(
            "nodes {} are not reachable from the root set".format(
                sorted(missing)))
    return _longest_simple_path(succ, S)


def graph_longest_path(edges: Iterable[Tuple[int, int]], n: int,
                       node_cap: int = nii_gconf.path_node_cap) -> int:
    """ D_max = graph_longest_path(edges, n)
    Longest simple path length of the whole graph
    """
    if n > node_cap:
        raise CapacityError(
            "longest-path search on {:d} nodes exceeds the cap {:d}".format(
                n, node_cap))
    return _longest_simple_path(f_adjacency_list(edges, n), range(n))


def boundary_roots(edges: Iterable[Tuple[int, int]], S) -> FrozenSet[int]:
    """ V0 = boundary_roots(edges, S)
    Root nodes with at least one out-edge into the receiver set
    """
    S = set(S)
    return frozenset(u for u, v in edges if u in S and v not in S)


if __name__ == "__main__":
    print("Tools for strongly connected components")
