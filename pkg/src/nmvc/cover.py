"""N-distance vertex covers: verification, Approx-Vertex-Cover, and the solver."""

from collections import deque
from dataclasses import dataclass, field

from .graph import GraphError, greedy_maximal_matching
from .reduction import reduce

__all__ = [
    "CoverSolution",
    "verify_cover",
    "approx_vertex_cover",
    "repair",
    "solve_nmvc",
]


@dataclass
class CoverSolution:
    cover: set
    n: int
    repaired_count: int
    seed: int
    matched_edges: list
    isolated: set = field(default_factory=set)
    events: list = field(default_factory=list)
    reduced: object = None  # G', or None when n == 1

    @property
    def size(self):
        return len(self.cover)


def verify_cover(g, s, n):
    """Multi-source BFS check that every vertex lies within ``n`` hops of ``s``.

    Returns ``(ok, witness)`` where ``witness`` is the smallest uncovered
    vertex, or None when the cover is valid.
    """
    if n < 1:
        raise GraphError("n must be >= 1")
    unknown = set(s) - set(g.vertices)
    if unknown:
        raise GraphError(f"cover contains unknown vertices {sorted(unknown)}")
    dist = {v: 0 for v in s}
    queue = deque(s)
    while queue:
        u = queue.popleft()
        if dist[u] == n:
            continue
        for w in g.neighbors(u):
            if w not in dist:
                dist[w] = dist[u] + 1
                queue.append(w)
    for v in g.vertices:
        if v not in dist:
            return False, v
    return True, None


def approx_vertex_cover(g, rng):
    """Both endpoints of every edge picked by a greedy maximal matching.

    Returns ``(cover, picks)``.
    """
    picks = greedy_maximal_matching(g, rng)
    cover = {x for e in picks for x in e}
    return cover, picks


def repair(g, s, n):
    """Add uncovered witnesses to ``s`` until it verifies. Returns a new set."""
    s = set(s)
    while True:
        ok, witness = verify_cover(g, s, n)
        if ok:
            return s
        s.add(witness)


def solve_nmvc(g, n, rng):
    """Approximate N-distance minimal vertex cover.

    For ``n >= 2`` the graph is reduced first and Approx-Vertex-Cover runs on
    the reduced graph; for ``n == 1`` it runs on ``g`` directly. Vertices
    isolated in ``g`` are always included, and a repair pass guarantees the
    result verifies against ``g``.
    """
    if n < 1:
        raise GraphError(f"n must be >= 1, got {n}")
    events, reduced = [], None
    if n >= 2:
        state, events = reduce(g, n, rng.spawn("reduce"))
        reduced = state.graph
    target = reduced if reduced is not None else g
    cover, picks = approx_vertex_cover(target, rng.spawn("avc"))
    isolated = set(g.isolated())
    cover |= isolated
    fixed = repair(g, cover, n)
    return CoverSolution(
        cover=fixed,
        n=n,
        repaired_count=len(fixed) - len(cover),
        seed=rng.seed,
        matched_edges=picks,
        isolated=isolated,
        events=events,
        reduced=reduced,
    )
