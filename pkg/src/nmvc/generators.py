"""Seeded test-instance generators.

All models label vertices ``0 .. k-1``; ``star`` adds ``k`` leaves around
center ``0``.
"""

import random

from .graph import Graph, GraphError

__all__ = ["MODELS", "generate", "gnp", "path", "cycle", "star", "tree"]


def _labeled(g):
    g.labels = {v: str(v) for v in g.vertices}
    return g


def gnp(k, p, seed=0):
    if not 0.0 <= p <= 1.0:
        raise GraphError(f"p must lie in [0, 1], got {p}")
    _check_k(k, 1)
    rng = random.Random(seed)
    g = Graph(range(k))
    for u in range(k):
        for v in range(u + 1, k):
            if rng.random() < p:
                g.add_edge(u, v)
    return _labeled(g)


def path(k, seed=0):
    _check_k(k, 1)
    return _labeled(Graph(range(k), ((i, i + 1) for i in range(k - 1))))


def cycle(k, seed=0):
    _check_k(k, 3)
    return _labeled(Graph(range(k), ((i, (i + 1) % k) for i in range(k))))


def star(k, seed=0):
    _check_k(k, 1)
    return _labeled(Graph(range(k + 1), ((0, i) for i in range(1, k + 1))))


def tree(k, seed=0):
    """Random recursive tree: vertex ``i`` hangs off a uniform earlier vertex."""
    _check_k(k, 1)
    rng = random.Random(seed)
    return _labeled(Graph(range(k), ((rng.randrange(i), i) for i in range(1, k))))


def _check_k(k, least):
    if not isinstance(k, int) or k < least:
        raise GraphError(f"size must be an integer >= {least}, got {k!r}")


MODELS = {"gnp": gnp, "path": path, "cycle": cycle, "star": star, "tree": tree}


def generate(model, k, p=None, seed=0):
    if model not in MODELS:
        raise GraphError(f"unknown model {model!r}; choose from {', '.join(MODELS)}")
    if model == "gnp":
        if p is None:
            raise GraphError("gnp needs p")
        return gnp(k, p, seed)
    return MODELS[model](k, seed)
