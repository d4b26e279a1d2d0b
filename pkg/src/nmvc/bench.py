"""Instance corpus and per-instance pipeline runs for benchmarking."""

import random
from dataclasses import dataclass
from pathlib import Path

from .cover import solve_nmvc
from .extension import contract, extend_graph, matching_report, trail_violations
from .generators import generate
from .io import serialize_edge_list
from .oracle import DEFAULT_LIMIT
from .rng import RandomSource

__all__ = ["InstanceResult", "corpus", "run_instance", "write_counterexample"]


def corpus(count, max_vertices=40, ns=(1, 2, 3, 4, 5), models=("gnp", "tree", "path", "cycle"), seed=0):
    """Yield ``(graph_id, graph, n)`` triples, reproducible from ``seed``."""
    r = random.Random(seed)
    for i in range(count):
        model = models[i % len(models)]
        k = r.randint(3, max_vertices)
        n = r.choice(ns)
        p = None
        if model == "gnp":
            # average degree between 0.5 and 4 keeps components trail-rich
            p = min(1.0, r.uniform(0.5, 4.0) / (k - 1))
        inst_seed = r.randrange(2**32)
        yield f"{model}-{i:04d}-k{k}", generate(model, k, p, seed=inst_seed), n


@dataclass
class InstanceResult:
    graph_id: str
    n: int
    solution: object
    extended: object
    report: object
    violations: list
    contracts: bool

    @property
    def g_prime(self):
        return self.solution.reduced


def run_instance(graph_id, g, n, seed=0, deterministic=False, oracle_limit=DEFAULT_LIMIT):
    rng = RandomSource(seed, deterministic)
    sol = solve_nmvc(g, n, rng)
    g_prime = sol.reduced if sol.reduced is not None else g
    ext = extend_graph(g, sol.events, max(n, 1))
    report = matching_report(g, g_prime, ext.graph, n, rng.spawn("bench"), oracle_limit)
    return InstanceResult(
        graph_id, n, sol, ext, report,
        violations=trail_violations(ext, sol.events),
        contracts=contract(ext) == g,
    )


def write_counterexample(out_dir, graph_id, g, n, kind, notes=()):
    """Persist an instance as an annotated edge list; returns the path."""
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    path = out / f"{graph_id}_n{n}_{kind}.el"
    header = [f"# counterexample: {kind}", f"# graph: {graph_id}", f"# n: {n}"]
    header += [f"# {line}" for line in notes]
    path.write_text("\n".join(header) + "\n" + serialize_edge_list(g))
    return path
