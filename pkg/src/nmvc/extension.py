"""Extended graph G'' and the matching-based bound report.

G'' stretches G so that every short attachment made during reduction runs
along a trail of exactly the event's trail length: the edge entering the
attached vertex is subdivided with fresh vertices. Leaves adjacent to a trail
endpoint, which the reduction leaves in place, get the same treatment when
their edge survives into G'.
"""

import csv
from dataclasses import dataclass
from fractions import Fraction

from .graph import Graph, GraphError, edge, greedy_maximal_matching
from .oracle import DEFAULT_LIMIT, exact_vc

__all__ = [
    "ExtendedGraph",
    "MatchingReport",
    "extend_graph",
    "contract",
    "attachment_trail_length",
    "trail_violations",
    "matching_report",
    "CSV_COLUMNS",
    "write_report_rows",
]

CSV_COLUMNS = ("graph_id", "n", "m", "m_prime", "m_dprime", "n_effective", "eq8_holds", "eq10_value")


@dataclass
class ExtendedGraph:
    graph: Graph
    added_vertices: set
    split_map: dict  # original edge -> vertex path replacing it
    conflicts: list  # (event index, attachment) whose last edge was already split


def _fresh_label(g, v, taken):
    name = f"x{v}"
    while name in taken:
        name += "'"
    taken.add(name)
    return name


def extend_graph(g, events, n):
    """Build G'' from ``g`` and the reduction trace that produced G'."""
    ext = g.copy()
    originals = g.edge_set()
    next_id = g.max_id() + 1
    taken = set(g.labels.values())
    split_map, conflicts, added = {}, [], set()

    def split(p, t, extra):
        nonlocal next_id
        ext.remove_edge(p, t)
        chain = [p]
        for _ in range(extra):
            x = next_id
            next_id += 1
            ext.add_vertex(x)
            if g.labels:
                ext.labels[x] = _fresh_label(g, x, taken)
            added.add(x)
            chain.append(x)
        chain.append(t)
        for a, b in zip(chain, chain[1:]):
            ext.add_edge(a, b)
        split_map[edge(p, t)] = tuple(chain)

    deleted = set()
    for i, ev in enumerate(events):
        if ev.n > n:
            raise GraphError(f"event {i} ran at n={ev.n} above the requested n={n}")
        for e in ev.deleted:
            if e not in originals or e in deleted:
                raise GraphError(f"trace deletes {e}, which is not a live original edge")
        deleted |= ev.deleted
        for a in ev.attachments:
            extra = ev.n - (len(a.path) - 1)
            if extra <= 0:
                continue
            p, t = a.path[-2], a.path[-1]
            if edge(p, t) in split_map:
                conflicts.append((i, a))
                continue
            split(p, t, extra)

    surviving = originals - deleted
    for ev in events:
        for end, leaf in ev.near_leaves:
            e = edge(end, leaf)
            if e in surviving and e not in split_map and ev.n > 1:
                split(end, leaf, ev.n - 1)

    return ExtendedGraph(ext, added, split_map, conflicts)


def contract(ext):
    """Undo every split; recovers the original graph."""
    g = ext.graph.copy()
    out = Graph(
        (v for v in g.vertices if v not in ext.added_vertices),
        labels={v: s for v, s in g.labels.items() if v not in ext.added_vertices},
    )
    for u, v in g.edges():
        if u not in ext.added_vertices and v not in ext.added_vertices:
            out.add_edge(u, v)
    for u, v in ext.split_map:
        out.add_edge(u, v)
    return out


def attachment_trail_length(ext, attachment):
    """Edge count of the attachment's deletion path as it appears in G''."""
    return sum(len(ext.split_map.get(e, (0, 0))) - 1 for e in attachment.path_edges())


def trail_violations(ext, events, short_only=False):
    """Attachments whose G'' trail length differs from their event's ``n``.

    With ``short_only`` only attachments made below the event's ``n``
    (the ones the construction stretches) are checked.
    """
    bad = []
    for i, ev in enumerate(events):
        for a in ev.attachments:
            if short_only and len(a.path) - 1 >= ev.n:
                continue
            length = attachment_trail_length(ext, a)
            if length != ev.n:
                bad.append((i, a, length))
    return bad


@dataclass
class MatchingReport:
    m: int
    m_prime: int
    m_dprime: int
    n: int
    n_effective: int
    bound_eq8_holds: bool
    opt_dprime: int = None
    bound_eq10_value: Fraction = None
    bound_eq10_holds: bool = None

    def row(self, graph_id):
        value = "" if self.bound_eq10_value is None else str(self.bound_eq10_value)
        return [graph_id, self.n, self.m, self.m_prime, self.m_dprime,
                self.n_effective, int(self.bound_eq8_holds), value]


def matching_report(g, g_prime, g_dprime, n, rng, oracle_limit=DEFAULT_LIMIT):
    m = len(greedy_maximal_matching(g, rng.spawn("m")))
    m_prime = len(greedy_maximal_matching(g_prime, rng.spawn("m_prime")))
    m_dprime = len(greedy_maximal_matching(g_dprime, rng.spawn("m_dprime")))
    n_eff = n + 1 if n % 2 else n
    report = MatchingReport(
        m, m_prime, m_dprime, n, n_eff,
        bound_eq8_holds=m_prime <= Fraction(2, n_eff) * m_dprime,
    )
    if len(g_dprime) <= oracle_limit:
        opt = exact_vc(g_dprime, limit=oracle_limit).size
        report.opt_dprime = opt
        if opt:
            report.bound_eq10_value = Fraction(2 * m_prime, opt)
            report.bound_eq10_holds = 2 * m_prime <= Fraction(4, n_eff) * opt
    return report


def write_report_rows(fh, rows, header=True):
    writer = csv.writer(fh, lineterminator="\n")
    if header:
        writer.writerow(CSV_COLUMNS)
    writer.writerows(rows)
