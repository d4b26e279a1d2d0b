"""Exact minimum covers by cardinality-ordered subset enumeration.

Every vertex gets a bitmask of what it covers; a candidate set is feasible
when the OR of its masks is full. Sets are tried by increasing size and
lexicographically within a size, so the first hit is a deterministic
optimum.
"""

from dataclasses import dataclass
from itertools import combinations

from .graph import GraphError, bfs_distances

__all__ = ["OracleResult", "OracleLimitError", "exact_nmvc", "exact_vc", "DEFAULT_LIMIT"]

DEFAULT_LIMIT = 20


class OracleLimitError(GraphError):
    pass


@dataclass(frozen=True)
class OracleResult:
    optimum: frozenset
    size: int
    explored: int


def _check_limit(g, limit):
    if len(g) > limit:
        raise OracleLimitError(
            f"graph has {len(g)} vertices, exact oracle limit is {limit}; "
            "use the approximate solver instead"
        )


def _min_cover(vertices, masks, full):
    explored = 0
    for k in range(len(vertices) + 1):
        for combo in combinations(range(len(vertices)), k):
            explored += 1
            acc = 0
            for i in combo:
                acc |= masks[i]
            if acc == full:
                return OracleResult(frozenset(vertices[i] for i in combo), k, explored)
    raise AssertionError("full vertex set must be feasible")


def exact_nmvc(g, n, limit=DEFAULT_LIMIT):
    """Minimum set with every vertex within ``n`` hops of it."""
    if n < 1:
        raise GraphError("n must be >= 1")
    _check_limit(g, limit)
    vertices = g.vertices
    index = {v: i for i, v in enumerate(vertices)}
    masks = []
    for v in vertices:
        m = 0
        for w in bfs_distances(g, v, cutoff=n):
            m |= 1 << index[w]
        masks.append(m)
    return _min_cover(vertices, masks, (1 << len(vertices)) - 1)


def exact_vc(g, limit=DEFAULT_LIMIT):
    """Minimum classic vertex cover (every edge touched)."""
    _check_limit(g, limit)
    vertices = g.vertices
    edges = g.edges()
    eidx = {e: i for i, e in enumerate(edges)}
    masks = []
    for v in vertices:
        m = 0
        for w in g.neighbors(v):
            m |= 1 << eidx[(min(v, w), max(v, w))]
        masks.append(m)
    return _min_cover(vertices, masks, (1 << len(edges)) - 1)
