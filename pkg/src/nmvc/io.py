"""Edge-list files and reduction trace files.

Edge list: one ``u v`` pair per line, a lone token declares a vertex, ``#``
starts a comment line, blank lines are skipped. Tokens are arbitrary
whitespace-free strings mapped to dense integer ids in order of first
appearance.

Trace: one record per reduction event, tab-separated ``key<TAB>items``
lines between ``event <i>`` and ``end``; see README for the field list.
"""

from .graph import Graph, GraphError, edge
from .reduction import Attachment, ReductionEvent
from .trails import Trail

__all__ = [
    "EdgeListError",
    "parse_edge_list",
    "read_edge_list",
    "serialize_edge_list",
    "write_trace",
    "read_trace",
]


class EdgeListError(GraphError):
    def __init__(self, lineno, message):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


def parse_edge_list(text):
    g = Graph()
    ids = {}

    def vid(token):
        if token not in ids:
            ids[token] = len(ids)
            g.add_vertex(ids[token])
            g.labels[ids[token]] = token
        return ids[token]

    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) == 1:
            vid(parts[0])
        elif len(parts) == 2:
            u, v = parts
            if u == v:
                raise EdgeListError(lineno, f"self-loop on {u}")
            a, b = vid(u), vid(v)
            if g.has_edge(a, b):
                raise EdgeListError(lineno, f"duplicate edge {u} {v}")
            g.add_edge(a, b)
        else:
            raise EdgeListError(lineno, f"expected 1 or 2 tokens, got {len(parts)}")
    return g


def read_edge_list(path):
    with open(path) as fh:
        return parse_edge_list(fh.read())


def serialize_edge_list(g):
    lines = [g.label(v) for v in g.vertices]
    lines += [f"{g.label(u)} {g.label(v)}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def _edge_items(g, edges):
    return [f"{g.label(u)} {g.label(v)}" for u, v in sorted(edges)]


def write_trace(g, events):
    """Text form of a reduction trace; labels come from ``g``."""
    lab = g.label
    out = ["# nmvc reduction trace"]
    for i, ev in enumerate(events, 1):
        out.append(f"event\t{i}")
        out.append(f"n\t{ev.n}")
        out.append("trail\t" + " ".join(lab(v) for v in ev.trail.vertices))
        out.append("\t".join(["v_prime"] + [lab(v) for v in sorted(ev.v_prime)]))
        out.append("\t".join(["v_dprime"] + [lab(v) for v in sorted(ev.v_dprime)]))
        for a in ev.attachments:
            status = "added" if a.added else "skipped"
            path = " ".join(lab(v) for v in a.path)
            out.append(f"attach\t{lab(a.endpoint)}\t{lab(a.target)}\t{a.distance}\t{status}\t{path}")
        out.append("\t".join(["deleted_first"] + _edge_items(g, ev.deleted_first)))
        out.append("\t".join(["deleted_second"] + _edge_items(g, ev.deleted_second)))
        out.append("\t".join(["near"] + _edge_items(g, [edge(*p) for p in ev.near_leaves])))
        out.append("end")
    return "\n".join(out) + "\n"


def read_trace(g, text):
    """Parse :func:`write_trace` output back into events over ``g``'s ids."""
    ids = {g.label(v): v for v in g.vertices}

    def vs(tokens):
        try:
            return [ids[t] for t in tokens]
        except KeyError as exc:
            raise GraphError(f"trace names unknown vertex {exc.args[0]}") from None

    def edges(items):
        return frozenset(edge(*vs(item.split())) for item in items)

    events, rec = [], None
    for lineno, raw in enumerate(text.splitlines(), 1):
        if not raw.strip() or raw.startswith("#"):
            continue
        key, *items = raw.split("\t")
        if key == "event":
            rec = {"attachments": []}
        elif rec is None:
            raise EdgeListError(lineno, f"{key!r} outside an event record")
        elif key == "n":
            rec["n"] = int(items[0])
        elif key == "trail":
            rec["trail"] = Trail(tuple(vs(items[0].split())))
        elif key in ("v_prime", "v_dprime"):
            rec[key] = frozenset(vs(items))
        elif key == "attach":
            end, target, dist, status, path = items
            rec["attachments"].append(Attachment(
                *vs([end, target]), int(dist), tuple(vs(path.split())), status == "added"
            ))
        elif key in ("deleted_first", "deleted_second"):
            rec[key] = edges(items)
        elif key == "near":
            # near pairs are stored as normalized edges; recover the endpoint
            ends = set(rec["trail"].endpoints)
            rec["near"] = tuple(
                (u, v) if u in ends else (v, u)
                for u, v in sorted(edges(items))
            )
        elif key == "end":
            events.append(ReductionEvent(
                rec["trail"], rec["n"], rec["v_prime"], rec["v_dprime"],
                tuple(rec["attachments"]), rec["deleted_first"], rec["deleted_second"],
                rec.get("near", ()),
            ))
            rec = None
        else:
            raise EdgeListError(lineno, f"unknown trace key {key!r}")
    return events
