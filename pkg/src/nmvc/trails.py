"""Search for open trails of exactly ``n`` edges.

A trail is a walk whose edges are pairwise distinct. Trails returned here
are open: the two endpoints differ and each touches exactly one trail edge.
Interior vertices may repeat.

Only *eligible* edges are walked. For a :class:`~nmvc.reduction.ReductionState`
these are the original (unit-distance) edges; a bare :class:`~nmvc.graph.Graph`
makes every edge eligible.
"""

from dataclasses import dataclass

from .graph import GraphError, edge

__all__ = ["Trail", "find_n_trail", "n_trail_exists", "exhaustive_trail", "GREEDY_RESTARTS"]

GREEDY_RESTARTS = 32


@dataclass(frozen=True)
class Trail:
    vertices: tuple

    def __post_init__(self):
        vs = self.vertices
        if len(vs) < 2:
            raise GraphError("a trail needs at least one edge")
        edges = self.edges
        if len(set(edges)) != len(edges):
            raise GraphError("trail repeats an edge")
        if vs[0] == vs[-1]:
            raise GraphError("trail is closed")
        if vs[0] in vs[1:] or vs[-1] in vs[:-1]:
            raise GraphError("trail endpoint touches more than one trail edge")

    @property
    def edges(self):
        vs = self.vertices
        return tuple(edge(vs[i], vs[i + 1]) for i in range(len(vs) - 1))

    @property
    def endpoints(self):
        return self.vertices[0], self.vertices[-1]

    def __len__(self):
        return len(self.vertices) - 1


def _eligible(state):
    return state.original_graph() if hasattr(state, "original_graph") else state


def _check_n(n):
    if n < 2:
        raise GraphError(f"trail length must be >= 2, got {n}")


def find_n_trail(state, n, rng, restarts=GREEDY_RESTARTS):
    """Return a :class:`Trail` of exactly ``n`` eligible edges, or ``None``.

    Runs the randomized greedy walk up to ``restarts`` times, then falls
    back to exhaustive search, so ``None`` means no such trail exists.
    """
    _check_n(n)
    g = _eligible(state)
    # the greedy walk is a pure function of the graph in deterministic mode
    attempts = 1 if rng.deterministic else restarts
    for _ in range(attempts):
        trail = _greedy_walk(g, n, rng)
        if trail is not None:
            return trail
    return exhaustive_trail(g, n, rng)


def n_trail_exists(state, n):
    _check_n(n)
    return exhaustive_trail(_eligible(state), n) is not None


def _greedy_walk(g, n, rng):
    remaining = {v: g.degree(v) for v in g.vertices}
    starts = []
    for u, v in g.edges():
        starts.extend((a, b) for a, b in ((u, v), (v, u)) if remaining[b] >= 2)
    if not starts:
        return None
    a, b = rng.choice(starts)
    walk = [a, b]
    used = {edge(a, b)}
    remaining[a] -= 1
    remaining[b] -= 1
    while len(used) < n:
        cur = walk[-1]
        final = len(used) == n - 1
        candidates = []
        for m in g.neighbors(cur):
            if edge(cur, m) in used or m == walk[0]:
                continue
            if final:
                if m in walk:
                    continue
            elif remaining[m] < 2:
                # stepping into m must leave an unused edge to continue on
                continue
            candidates.append(m)
        if not candidates:
            return None
        m = rng.choice(candidates)
        used.add(edge(cur, m))
        remaining[cur] -= 1
        remaining[m] -= 1
        walk.append(m)
    return Trail(tuple(walk))


def exhaustive_trail(g, n, rng=None):
    """Edge-distinct depth-first search bounded at depth ``n``.

    Explores start vertices and neighbors in ascending order (shuffled when a
    non-deterministic ``rng`` is given) and returns the first trail found.
    """
    order = rng.ordering if rng is not None else sorted
    for start in order(v for v in g.vertices if g.degree(v) > 0):
        found = _dfs(g, n, [start], set(), order)
        if found is not None:
            return Trail(tuple(found))
    return None


def _dfs(g, n, walk, used, order):
    cur = walk[-1]
    final = len(used) == n - 1
    for m in order(g.neighbors(cur)):
        e = edge(cur, m)
        if e in used or m == walk[0]:
            continue
        if final:
            if m not in walk:
                return walk + [m]
            continue
        used.add(e)
        walk.append(m)
        found = _dfs(g, n, walk, used, order)
        if found is not None:
            return found
        walk.pop()
        used.discard(e)
    return None
