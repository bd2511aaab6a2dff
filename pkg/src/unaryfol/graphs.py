"""Small graph routines shared by the automata operations."""
from __future__ import annotations

from collections import deque
from typing import Callable, Hashable, Iterable


def strongly_connected_components(
    roots: Iterable[Hashable],
    successors: Callable[[Hashable], Iterable[Hashable]],
) -> list[list[Hashable]]:
    """Iterative Tarjan over the part of the graph reachable from ``roots``.

    Components come out in reverse topological order (sinks first).
    """
    index: dict = {}
    low: dict = {}
    on_stack: set = set()
    stack: list = []
    components: list[list] = []
    counter = 0

    for root in roots:
        if root in index:
            continue
        index[root] = low[root] = counter
        counter += 1
        stack.append(root)
        on_stack.add(root)
        work = [(root, iter(successors(root)))]
        while work:
            node, it = work[-1]
            pushed = False
            for nxt in it:
                if nxt not in index:
                    index[nxt] = low[nxt] = counter
                    counter += 1
                    stack.append(nxt)
                    on_stack.add(nxt)
                    work.append((nxt, iter(successors(nxt))))
                    pushed = True
                    break
                if nxt in on_stack and index[nxt] < low[node]:
                    low[node] = index[nxt]
            if pushed:
                continue
            work.pop()
            if work:
                parent = work[-1][0]
                if low[node] < low[parent]:
                    low[parent] = low[node]
            if low[node] == index[node]:
                comp = []
                while True:
                    member = stack.pop()
                    on_stack.discard(member)
                    comp.append(member)
                    if member == node:
                        break
                components.append(comp)
    return components


def accepting_cycle_nodes(
    roots: Iterable[Hashable],
    edges: Callable[[Hashable], Iterable[tuple[Hashable, bool]]],
    accepting: Callable[[Hashable], bool],
) -> set:
    """Nodes lying in a reachable SCC that holds an accepting node and a
    ``True``-flagged (symbol-reading) edge between two of its members."""
    comps = strongly_connected_components(
        roots, lambda n: [m for m, _ in edges(n)]
    )
    good: set = set()
    for comp in comps:
        members = set(comp)
        if not any(accepting(n) for n in comp):
            continue
        if any(flag and m in members for n in comp for m, flag in edges(n)):
            good |= members
    return good


def reachable(roots: Iterable[Hashable], successors) -> set:
    seen = set()
    queue = deque()
    for r in roots:
        if r not in seen:
            seen.add(r)
            queue.append(r)
    while queue:
        n = queue.popleft()
        for m in successors(n):
            if m not in seen:
                seen.add(m)
                queue.append(m)
    return seen
