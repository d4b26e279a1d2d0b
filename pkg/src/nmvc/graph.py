"""Simple undirected graphs over integer vertex ids.

Edges are stored as normalized tuples ``(u, v)`` with ``u < v`` so that set
membership and lexicographic ordering behave the same everywhere.
"""

import math
from collections import deque

__all__ = [
    "Graph",
    "GraphError",
    "edge",
    "bfs_distances",
    "bfs_tree",
    "distance",
    "vertices_within",
    "greedy_maximal_matching",
    "is_matching",
    "is_maximal_matching",
]


class GraphError(ValueError):
    pass


def edge(u, v):
    """Normalized undirected edge key."""
    return (u, v) if u < v else (v, u)


class Graph:
    """Simple undirected graph.

    ``labels`` optionally maps ids to external tokens (file vertex names);
    ids without a label print as their decimal value.
    """

    def __init__(self, vertices=(), edges=(), labels=None):
        self._adj = {}
        self.labels = dict(labels) if labels else {}
        for v in vertices:
            self.add_vertex(v)
        for u, v in edges:
            self.add_edge(u, v)

    def add_vertex(self, v):
        if not isinstance(v, int) or v < 0:
            raise GraphError(f"vertex ids must be non-negative integers, got {v!r}")
        self._adj.setdefault(v, set())

    def add_edge(self, u, v):
        if u == v:
            raise GraphError(f"self-loop on vertex {self.label(u)}")
        self.add_vertex(u)
        self.add_vertex(v)
        if v in self._adj[u]:
            raise GraphError(f"duplicate edge {self.label(u)}-{self.label(v)}")
        self._adj[u].add(v)
        self._adj[v].add(u)

    def remove_edge(self, u, v):
        if not self.has_edge(u, v):
            raise GraphError(f"no edge {self.label(u)}-{self.label(v)}")
        self._adj[u].discard(v)
        self._adj[v].discard(u)

    def has_edge(self, u, v):
        return u in self._adj and v in self._adj[u]

    def __contains__(self, v):
        return v in self._adj

    def __len__(self):
        return len(self._adj)

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self._adj == other._adj

    def __repr__(self):
        return f"Graph(|V|={len(self)}, |E|={self.number_of_edges()})"

    @property
    def vertices(self):
        return sorted(self._adj)

    def edges(self):
        """All edges, sorted lexicographically."""
        return sorted((u, v) for u, nbrs in self._adj.items() for v in nbrs if u < v)

    def edge_set(self):
        return {(u, v) for u, nbrs in self._adj.items() for v in nbrs if u < v}

    def number_of_edges(self):
        return sum(len(n) for n in self._adj.values()) // 2

    def neighbors(self, v):
        self._check(v)
        return sorted(self._adj[v])

    def degree(self, v):
        self._check(v)
        return len(self._adj[v])

    def isolated(self):
        return [v for v in self.vertices if not self._adj[v]]

    def max_id(self):
        return max(self._adj, default=-1)

    def label(self, v):
        return self.labels.get(v, str(v))

    def copy(self):
        g = Graph(labels=self.labels)
        g._adj = {v: set(n) for v, n in self._adj.items()}
        return g

    def subgraph_with_edges(self, edges):
        """Same vertex set, only the given edges."""
        g = Graph(self._adj, labels=self.labels)
        for u, v in edges:
            g.add_edge(u, v)
        return g

    def _check(self, v):
        if v not in self._adj:
            raise GraphError(f"unknown vertex {v!r}")


def bfs_distances(g, source, cutoff=None):
    """Hop distances from ``source`` to every reachable vertex (up to ``cutoff``)."""
    dist, _ = bfs_tree(g, source, cutoff)
    return dist


def bfs_tree(g, source, cutoff=None):
    """BFS exploring neighbors in ascending id order.

    Returns ``(dist, parent)``; following ``parent`` from any reached vertex
    walks one fixed shortest path back to ``source``.
    """
    g._check(source)
    dist = {source: 0}
    parent = {source: None}
    queue = deque([source])
    while queue:
        u = queue.popleft()
        if cutoff is not None and dist[u] >= cutoff:
            continue
        for w in sorted(g._adj[u]):
            if w not in dist:
                dist[w] = dist[u] + 1
                parent[w] = u
                queue.append(w)
    return dist, parent


def distance(g, u, v):
    """Geodesic distance; ``math.inf`` when no path exists."""
    g._check(v)
    return bfs_distances(g, u).get(v, math.inf)


def vertices_within(g, source, n):
    if n < 1:
        raise GraphError("n must be >= 1")
    return set(bfs_distances(g, source, cutoff=n))


def greedy_maximal_matching(g, rng):
    """Scan edges in ``rng`` order, keeping each edge whose endpoints are both free.

    A uniformly random scan order picks uniformly among the remaining edges
    at every step, so this is also the edge-picking core of Approx-Vertex-Cover.
    """
    matched = set()
    matching = []
    for u, v in rng.ordering(g.edges()):
        if u not in matched and v not in matched:
            matching.append((u, v))
            matched.update((u, v))
    return matching


def is_matching(edges):
    seen = set()
    for u, v in edges:
        if u in seen or v in seen:
            return False
        seen.update((u, v))
    return True


def is_maximal_matching(g, edges):
    if not is_matching(edges):
        return False
    matched = {x for e in edges for x in e}
    return all(u in matched or v in matched for u, v in g.edges())
