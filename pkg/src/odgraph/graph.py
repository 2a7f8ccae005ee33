"""Explicit order-divisor graphs and brute-force invariants.

The order-divisor graph of a finite group has one vertex per element; two
distinct vertices are adjacent exactly when their element orders differ
and one order divides the other. Everything in this module is computed
directly on the explicit graph (breadth-first searches, 2-colorings,
backtracking search), so it can serve as an independent oracle for the
closed-form results elsewhere in the package.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Optional

from .errors import DomainError
from .groups import (
    DEFAULT_ENUMERATION_BOUND,
    GroupSpec,
    OrderProfile,
    element_orders,
)

DEFAULT_CHROMATIC_BOUND = 64

__all__ = [
    "DEFAULT_CHROMATIC_BOUND",
    "InvariantReport",
    "ODGraph",
    "build_graph",
    "class_degrees",
    "degree_via_profile",
    "eccentricities",
    "oracle_chromatic_number",
    "oracle_girth",
    "oracle_is_bipartite",
    "oracle_is_cycle_graph",
    "oracle_is_path",
    "oracle_is_star",
    "oracle_report",
    "size_via_profile",
]


@dataclass(frozen=True)
class ODGraph:
    """Immutable simple graph over group elements, annotated with orders."""

    spec: Optional[GroupSpec]
    orders: tuple[int, ...]
    adjacency: tuple[tuple[int, ...], ...]

    @property
    def vertex_count(self) -> int:
        return len(self.orders)

    @property
    def edge_count(self) -> int:
        return sum(len(neighbors) for neighbors in self.adjacency) // 2

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def edges(self) -> list[tuple[int, int]]:
        """All edges as (u, v) with u < v, lexicographically sorted."""
        return [
            (u, v)
            for u in range(len(self.adjacency))
            for v in self.adjacency[u]
            if u < v
        ]


def build_graph(spec: GroupSpec, bound: int = DEFAULT_ENUMERATION_BOUND) -> ODGraph:
    """Construct the explicit order-divisor graph of a group."""
    orders = element_orders(spec, bound)
    classes: dict[int, list[int]] = {}
    for v, order in enumerate(orders):
        classes.setdefault(order, []).append(v)
    adjacency: list[list[int]] = [[] for _ in orders]
    distinct = sorted(classes)
    # adjacency depends only on element orders, so edges run between whole
    # order classes: every pair of classes whose orders divide one another
    for i, low in enumerate(distinct):
        for high in distinct[i + 1 :]:
            if high % low == 0:
                for u in classes[low]:
                    for v in classes[high]:
                        adjacency[u].append(v)
                        adjacency[v].append(u)
    return ODGraph(
        spec=spec,
        orders=tuple(orders),
        adjacency=tuple(tuple(sorted(neighbors)) for neighbors in adjacency),
    )


def degree_via_profile(profile: OrderProfile, m: int) -> int:
    """Degree of any order-m vertex, computed from the order profile alone."""
    if m not in profile:
        raise DomainError(f"order {m} is not realized in the profile")
    return sum(
        count
        for order, count in profile.items()
        if order != m and (order % m == 0 or m % order == 0)
    )


def size_via_profile(profile: OrderProfile) -> int:
    """Edge count from the profile, by summing degrees over order classes."""
    total = sum(
        count * degree_via_profile(profile, order) for order, count in profile.items()
    )
    if total % 2:
        raise DomainError("degree sum is odd; not a valid order profile")
    return total // 2


def class_degrees(graph: ODGraph) -> tuple[dict[int, int], Optional[str]]:
    """Per-order-class oracle degree, confirming classes are degree-uniform.

    Returns (order -> degree, problem) where problem describes the first
    vertex whose degree disagrees with its class, or None.
    """
    degrees: dict[int, int] = {}
    for v, order in enumerate(graph.orders):
        d = len(graph.adjacency[v])
        seen = degrees.setdefault(order, d)
        if seen != d:
            return degrees, (
                f"vertices of order {order} disagree: degree {seen} vs {d} (vertex {v})"
            )
    return degrees, None


def _twin_groups(graph: ODGraph) -> tuple[list[int], list[int]]:
    """Group vertices with identical neighbor sets.

    Such vertices are interchangeable for distance and shortest-cycle
    computations, so a BFS per representative suffices. Returns the list
    of representatives and a vertex -> representative table.
    """
    reps_by_signature: dict[tuple[int, ...], int] = {}
    rep_of = [0] * graph.vertex_count
    for v in range(graph.vertex_count):
        rep_of[v] = reps_by_signature.setdefault(graph.adjacency[v], v)
    return sorted(reps_by_signature.values()), rep_of


def _bfs_eccentricity(graph: ODGraph, start: int) -> int:
    visited = {start}
    frontier = {start}
    ecc = 0
    while True:
        next_frontier: set[int] = set()
        for u in frontier:
            next_frontier.update(graph.adjacency[u])
        next_frontier -= visited
        if not next_frontier:
            break
        visited |= next_frontier
        frontier = next_frontier
        ecc += 1
    if len(visited) != graph.vertex_count:
        raise DomainError("graph is disconnected; eccentricities are undefined")
    return ecc


def eccentricities(graph: ODGraph) -> list[int]:
    """BFS eccentricity of every vertex; raises on disconnected graphs."""
    reps, rep_of = _twin_groups(graph)
    ecc_of_rep = {rep: _bfs_eccentricity(graph, rep) for rep in reps}
    return [ecc_of_rep[rep_of[v]] for v in range(graph.vertex_count)]


def oracle_girth(graph: ODGraph) -> int:
    """Length of a shortest cycle, 0 when the graph is acyclic.

    BFS from every twin-class representative; the shortest cycle seen over
    all roots is exact, and 3 is an early exit (no shorter cycle exists in
    a simple graph).
    """
    shortest: Optional[int] = None
    roots, _ = _twin_groups(graph)
    for root in roots:
        dist = {root: 0}
        parent = {root: -1}
        queue = deque([root])
        while queue:
            u = queue.popleft()
            du = dist[u]
            for w in graph.adjacency[u]:
                if w not in dist:
                    dist[w] = du + 1
                    parent[w] = u
                    queue.append(w)
                elif parent[u] != w:
                    cycle = du + dist[w] + 1
                    if shortest is None or cycle < shortest:
                        shortest = cycle
                        if shortest == 3:
                            return 3
    return 0 if shortest is None else shortest


def oracle_is_bipartite(graph: ODGraph) -> bool:
    """BFS 2-coloring over every component."""
    color: dict[int, int] = {}
    for start in range(graph.vertex_count):
        if start in color:
            continue
        color[start] = 0
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for w in graph.adjacency[u]:
                if w not in color:
                    color[w] = color[u] ^ 1
                    queue.append(w)
                elif color[w] == color[u]:
                    return False
    return True


def _is_connected(graph: ODGraph) -> bool:
    n = graph.vertex_count
    if n == 0:
        return True
    visited = {0}
    queue = deque([0])
    while queue:
        u = queue.popleft()
        for w in graph.adjacency[u]:
            if w not in visited:
                visited.add(w)
                queue.append(w)
    return len(visited) == n


def oracle_is_star(graph: ODGraph) -> bool:
    """One hub adjacent to everything else, all other vertices of degree 1.

    A single vertex counts as the degenerate star; the degree multiset
    criterion below covers it (and forces connectivity via the hub).
    """
    n = graph.vertex_count
    degrees = sorted(len(neighbors) for neighbors in graph.adjacency)
    return degrees == [1] * (n - 1) + [n - 1]


def oracle_is_path(graph: ODGraph) -> bool:
    """Path on >= 2 vertices: two endpoints of degree 1, the rest degree 2.

    A single vertex is treated as a degenerate star rather than a path, so
    the path shape characterizes exactly the groups with 2 or 3 elements.
    """
    n = graph.vertex_count
    if n < 2:
        return False
    degrees = sorted(len(neighbors) for neighbors in graph.adjacency)
    if degrees != [1, 1] + [2] * (n - 2):
        return False
    return _is_connected(graph)


def oracle_is_cycle_graph(graph: ODGraph) -> bool:
    """Connected, 2-regular, with as many edges as vertices."""
    n = graph.vertex_count
    if n < 3:
        return False
    if any(len(neighbors) != 2 for neighbors in graph.adjacency):
        return False
    return graph.edge_count == n and _is_connected(graph)


def _max_clique_size(adjacency: list[set[int]]) -> int:
    best = 0

    def expand(size: int, candidates: set[int]) -> None:
        nonlocal best
        if size + len(candidates) <= best:
            return
        if not candidates:
            best = max(best, size)
            return
        pivot = max(candidates, key=lambda u: len(adjacency[u] & candidates))
        for v in sorted(candidates - adjacency[pivot]):
            expand(size + 1, candidates & adjacency[v])
            candidates = candidates - {v}

    expand(0, set(range(len(adjacency))))
    return best


def _greedy_color_count(adjacency: list[set[int]], order: list[int]) -> int:
    colors: dict[int, int] = {}
    used_count = 0
    for v in order:
        taken = {colors[w] for w in adjacency[v] if w in colors}
        c = 0
        while c in taken:
            c += 1
        colors[v] = c
        used_count = max(used_count, c + 1)
    return used_count


def _k_colorable(adjacency: list[set[int]], order: list[int], k: int) -> bool:
    n = len(order)
    colors: dict[int, int] = {}

    def assign(i: int, used: int) -> bool:
        if i == n:
            return True
        v = order[i]
        taken = {colors[w] for w in adjacency[v] if w in colors}
        # symmetry break: allow at most one color not used so far
        for c in range(min(k, used + 1)):
            if c not in taken:
                colors[v] = c
                if assign(i + 1, max(used, c + 1)):
                    return True
                del colors[v]
        return False

    return assign(0, 0)


def oracle_chromatic_number(
    graph: ODGraph, max_vertices: int = DEFAULT_CHROMATIC_BOUND
) -> Optional[int]:
    """Exact chromatic number by backtracking; None when past max_vertices."""
    n = graph.vertex_count
    if n > max_vertices:
        return None
    if n == 0:
        return 0
    if graph.edge_count == 0:
        return 1
    adjacency = [set(neighbors) for neighbors in graph.adjacency]
    order = sorted(range(n), key=lambda v: -len(adjacency[v]))
    lower = _max_clique_size(adjacency)
    upper = _greedy_color_count(adjacency, order)
    for k in range(lower, upper):
        if _k_colorable(adjacency, order, k):
            return k
    return upper


@dataclass(frozen=True)
class InvariantReport:
    """Invariants measured directly on an explicit graph."""

    group_order: int
    size: int
    girth: int
    degree_sequence: dict[int, int]
    is_star: bool
    is_bipartite: bool
    is_path: bool
    radius: int
    diameter: int
    chromatic_number: Optional[int]


def oracle_report(
    graph: ODGraph, chromatic_bound: int = DEFAULT_CHROMATIC_BOUND
) -> InvariantReport:
    """Measure all supported invariants on the explicit graph."""
    n = graph.vertex_count
    degrees = {v: len(graph.adjacency[v]) for v in range(n)}
    ecc = eccentricities(graph)
    return InvariantReport(
        group_order=n,
        size=sum(degrees.values()) // 2,
        girth=oracle_girth(graph),
        degree_sequence=degrees,
        is_star=oracle_is_star(graph),
        is_bipartite=oracle_is_bipartite(graph),
        is_path=oracle_is_path(graph),
        radius=min(ecc),
        diameter=max(ecc),
        chromatic_number=oracle_chromatic_number(graph, chromatic_bound),
    )
