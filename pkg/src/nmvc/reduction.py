"""Trail contraction: the graph reduction G -> G'.

Each step takes a trail of ``n`` original edges with endpoints ``v0`` and
``vN``, attaches every vertex that is far from an endpoint (exactly ``n``
hops, or a leaf between 2 and ``n - 1`` hops) directly to that endpoint with
a synthetic edge, and deletes the original edges on the connecting shortest
paths. When no ``n``-trail remains, ``n`` drops by one; the loop stops
below 2.

Synthetic edges carry no unit distance and never take part in trail search.
"""

from dataclasses import dataclass, field

from .graph import Graph, GraphError, bfs_tree, edge
from .trails import Trail, find_n_trail

__all__ = [
    "Attachment",
    "ReductionEvent",
    "ReductionState",
    "attachment_sets",
    "reduce_once",
    "reduce",
    "replay",
]


@dataclass(frozen=True)
class Attachment:
    """One proposed synthetic edge ``endpoint -- target``.

    ``path`` is the original-edge walk from ``endpoint`` to ``target`` whose
    edges are deleted for this attachment; ``distance`` is the hop distance
    measured before the event's deletions. ``added`` is False when the edge
    already existed (or was proposed earlier in the same event).
    """

    endpoint: int
    target: int
    distance: int
    path: tuple
    added: bool = True

    @property
    def edge(self):
        return edge(self.endpoint, self.target)

    def path_edges(self):
        p = self.path
        return [edge(p[i], p[i + 1]) for i in range(len(p) - 1)]


@dataclass(frozen=True)
class ReductionEvent:
    trail: Trail
    n: int
    v_prime: frozenset
    v_dprime: frozenset
    attachments: tuple
    deleted_first: frozenset  # edges on paths from v0
    deleted_second: frozenset  # edges on paths from vN, minus deleted_first
    near_leaves: tuple = ()  # (endpoint, leaf) pairs at distance 1, left alone

    @property
    def deleted(self):
        return self.deleted_first | self.deleted_second

    @property
    def added(self):
        return {(a.edge, a.distance) for a in self.attachments if a.added}

    @property
    def added_edges(self):
        return {a.edge for a in self.attachments if a.added}

    @property
    def skipped_edges(self):
        return {a.edge for a in self.attachments if not a.added}


@dataclass
class ReductionState:
    graph: Graph
    original: set
    n_current: int
    degrees: dict = field(default_factory=dict)

    @classmethod
    def from_graph(cls, g, n):
        state = cls(g.copy(), g.edge_set(), n)
        state.recount_degrees()
        return state

    def original_graph(self):
        return self.graph.subgraph_with_edges(self.original)

    def synthetic_edges(self):
        return self.graph.edge_set() - self.original

    def recount_degrees(self):
        self.degrees = {v: 0 for v in self.graph.vertices}
        for u, v in self.original:
            self.degrees[u] += 1
            self.degrees[v] += 1


def _attachment_sets(orig, degrees, dist0, distN, n):
    def far(dist):
        return frozenset(
            v for v, d in dist.items() if d == n or (2 <= d < n and degrees[v] == 1)
        )

    return far(dist0), far(distN)


def attachment_sets(state, trail, n):
    """Vertices to attach to ``v0`` and to ``vN`` respectively.

    Distances are hop counts over the current original edges; the leaf band
    is ``2 <= d < n``.
    """
    v0, vN = trail.endpoints
    orig = state.original_graph()
    dist0, _ = bfs_tree(orig, v0, cutoff=n)
    distN, _ = bfs_tree(orig, vN, cutoff=n)
    return _attachment_sets(orig, state.degrees, dist0, distN, n)


def _path_to(parent, target):
    path = [target]
    while parent[path[-1]] is not None:
        path.append(parent[path[-1]])
    return tuple(reversed(path))


def _check_trail(state, trail, n):
    if len(trail) != n:
        raise GraphError(f"trail has {len(trail)} edges, expected {n}")
    for e in trail.edges:
        if e not in state.original:
            raise GraphError(f"trail edge {e} is not an original edge")


def reduce_once(state, trail, n):
    """Contract one trail in place and return the recorded event."""
    _check_trail(state, trail, n)
    v0, vN = trail.endpoints
    orig = state.original_graph()
    dist0, parent0 = bfs_tree(orig, v0, cutoff=n)
    distN, parentN = bfs_tree(orig, vN, cutoff=n)
    v_prime, v_dprime = _attachment_sets(orig, state.degrees, dist0, distN, n)

    # the trail itself is always contracted onto the v0 -- vN edge
    proposals = [(v0, vN, dist0.get(vN, n), trail.vertices)]
    proposals += [(v0, t, dist0[t], _path_to(parent0, t)) for t in sorted(v_prime - {vN})]
    n_first = len(proposals)
    proposals.append((vN, v0, distN.get(v0, n), tuple(reversed(trail.vertices))))
    proposals += [(vN, t, distN[t], _path_to(parentN, t)) for t in sorted(v_dprime - {v0})]

    first, second = set(), set()
    for i, (_, _, _, path) in enumerate(proposals):
        bucket = first if i < n_first else second
        bucket.update(edge(path[j], path[j + 1]) for j in range(len(path) - 1))
    second -= first
    # an original v0 -- vN edge already joins the endpoints; keep it rather
    # than deleting it and re-adding the same pair as synthetic
    first.discard(edge(v0, vN))
    second.discard(edge(v0, vN))

    for u, v in sorted(first | second):
        state.graph.remove_edge(u, v)
        state.original.discard((u, v))

    attachments = []
    for endpoint, target, dist, path in proposals:
        fresh = not state.graph.has_edge(endpoint, target)
        if fresh:
            state.graph.add_edge(endpoint, target)
        attachments.append(Attachment(endpoint, target, dist, path, fresh))

    near = tuple(sorted(
        ((end, leaf)
         for end, dist in ((v0, dist0), (vN, distN))
         for leaf, d in dist.items() if d == 1 and state.degrees[leaf] == 1),
        key=lambda p: edge(*p),
    ))
    state.recount_degrees()
    return ReductionEvent(
        trail, n, v_prime, v_dprime, tuple(attachments),
        frozenset(first), frozenset(second), near,
    )


def reduce(g, n, rng):
    """Run the reduction to completion.

    Returns the final :class:`ReductionState` (``state.graph`` is G') and the
    ordered list of events.
    """
    if n < 2:
        raise GraphError(f"reduction needs n >= 2, got {n}")
    state = ReductionState.from_graph(g, n)
    events = []
    while state.n_current >= 2:
        trail = find_n_trail(state, state.n_current, rng)
        if trail is None:
            state.n_current -= 1
            continue
        events.append(reduce_once(state, trail, state.n_current))
    return state, events


def replay(g, events):
    """Apply a recorded trace to a copy of ``g``; reproduces G'."""
    out = g.copy()
    for ev in events:
        for u, v in sorted(ev.deleted):
            out.remove_edge(u, v)
        for u, v in sorted(ev.added_edges):
            out.add_edge(u, v)
    return out
