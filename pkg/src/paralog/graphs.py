"""Directed-graph helpers shared by stratification and loop checking."""

from __future__ import annotations

from typing import Dict, Hashable, Iterable, List, Set

Graph = Dict[Hashable, Set[Hashable]]


def strongly_connected_components(graph: Graph) -> List[List[Hashable]]:
    """Tarjan's algorithm, iterative to cope with deep graphs.

    Returns components in reverse topological order (every edge leaving a
    component points to an earlier one in the list).
    """
    index: Dict[Hashable, int] = {}
    lowlink: Dict[Hashable, int] = {}
    on_stack: Set[Hashable] = set()
    stack: List[Hashable] = []
    components: List[List[Hashable]] = []
    counter = 0

    for root in graph:
        if root in index:
            continue
        work = [(root, iter(sorted(graph.get(root, ()), key=repr)))]
        index[root] = lowlink[root] = counter
        counter += 1
        stack.append(root)
        on_stack.add(root)
        while work:
            node, successors = work[-1]
            advanced = False
            for succ in successors:
                if succ not in index:
                    index[succ] = lowlink[succ] = counter
                    counter += 1
                    stack.append(succ)
                    on_stack.add(succ)
                    work.append((succ, iter(sorted(graph.get(succ, ()), key=repr))))
                    advanced = True
                    break
                if succ in on_stack:
                    lowlink[node] = min(lowlink[node], index[succ])
            if advanced:
                continue
            work.pop()
            if work:
                parent = work[-1][0]
                lowlink[parent] = min(lowlink[parent], lowlink[node])
            if lowlink[node] == index[node]:
                component = []
                while True:
                    member = stack.pop()
                    on_stack.discard(member)
                    component.append(member)
                    if member == node:
                        break
                components.append(component)
    return components


def is_strongly_connected(nodes: Iterable[Hashable], graph: Graph) -> bool:
    """True iff the subgraph induced on ``nodes`` is strongly connected."""
    nodes = set(nodes)
    if not nodes:
        return False
    start = next(iter(nodes))

    def reachable(edges_of):
        seen = {start}
        frontier = [start]
        while frontier:
            node = frontier.pop()
            for succ in edges_of(node):
                if succ in nodes and succ not in seen:
                    seen.add(succ)
                    frontier.append(succ)
        return seen

    forward = reachable(lambda n: graph.get(n, ()))
    if forward != nodes:
        return False
    reverse: Graph = {n: set() for n in nodes}
    for node in nodes:
        for succ in graph.get(node, ()):
            if succ in nodes:
                reverse[succ].add(node)
    return reachable(lambda n: reverse[n]) == nodes
