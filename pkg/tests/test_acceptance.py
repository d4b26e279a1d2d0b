"""Exit criteria for the package, one test per criterion.

Each test appends a PASS/FAIL line that pytest prints in an
"acceptance criteria" section at the end of the run. Counterexample files
go to ``$NMVC_COUNTEREXAMPLES`` when set, else to a pytest temp directory.
"""

import csv
import io
import os
import statistics
import time
from pathlib import Path

import pytest

from conftest import ACCEPTANCE_LINES, FIG1_PATH, Named
from nmvc.bench import corpus, write_counterexample
from nmvc.cli import main
from nmvc.cover import approx_vertex_cover, solve_nmvc, verify_cover
from nmvc.extension import contract, extend_graph, trail_violations
from nmvc.generators import generate
from nmvc.io import read_edge_list, serialize_edge_list
from nmvc.oracle import exact_nmvc, exact_vc
from nmvc.reduction import ReductionState, attachment_sets, reduce_once
from nmvc.rng import RandomSource
from nmvc.trails import find_n_trail

CORPUS_SIZE = 1200


def record(criterion, ok, detail):
    ACCEPTANCE_LINES.append(f"[{'PASS' if ok else 'FAIL'}] criterion {criterion}: {detail}")
    return ok


@pytest.fixture(scope="module")
def counterexample_dir(tmp_path_factory):
    env = os.environ.get("NMVC_COUNTEREXAMPLES")
    return Path(env) if env else tmp_path_factory.mktemp("counterexamples")


@pytest.fixture(scope="module")
def validity_corpus():
    """Criterion 3's corpus, solved and extended once for criteria 3, 6 and 9."""
    start = time.perf_counter()
    runs = []
    for i, (gid, g, n) in enumerate(corpus(CORPUS_SIZE, max_vertices=40, seed=2024)):
        sol = solve_nmvc(g, n, RandomSource(i))
        ext = extend_graph(g, sol.events, n) if n >= 2 else None
        runs.append((gid, g, n, sol, ext))
    return runs, time.perf_counter() - start


def test_criterion_1_fig1_golden_replay():
    start = time.perf_counter()
    g = read_edge_list(FIG1_PATH)
    v = Named(g)
    rng = RandomSource(1, deterministic=True)
    state = ReductionState.from_graph(g, 3)
    trail = find_n_trail(state, 3, rng)
    vp, vdp = attachment_sets(state, trail, 3)
    ev = reduce_once(state, trail, 3)
    sol = solve_nmvc(g, 3, rng)
    elapsed = time.perf_counter() - start
    ok = (
        v.labels(trail.vertices) == {"v1", "v2", "v3", "v4"}
        and v.labels(vp) == {"v4", "v6", "v10", "v11", "v12"}
        and v.labels(vdp) == {"v1", "v7", "v8", "v9", "v10"}
        and ev.deleted_first == v.edges("v1-v2", "v2-v3", "v3-v4", "v3-v6",
                                        "v2-v9", "v9-v12", "v9-v11", "v2-v10")
        and ev.deleted_second == v.edges("v6-v7", "v6-v8")
        and v.labels(sol.cover) == {"v1", "v4", "v11", "v13"}
        and sol.repaired_count == 0
        and elapsed < 1.0
    )
    assert record(1, ok, f"V', V'', E''', E'''' and AVC {{v1,v4,v11,v13}} reproduced in {elapsed:.3f}s")


def test_criterion_2_verifier_goldens(fig1, v):
    start = time.perf_counter()
    ok3, _ = verify_cover(fig1, v.set("v4", "v9"), 3)
    ok2, _ = verify_cover(fig1, v.set("v3", "v9"), 2)
    elapsed = time.perf_counter() - start
    assert record(2, ok3 and ok2 and elapsed < 1.0,
                  f"{{v4,v9}} at N=3: {ok3}, {{v3,v9}} at N=2: {ok2} ({elapsed:.3f}s)")


def test_criterion_3_universal_validity(validity_corpus):
    runs, elapsed = validity_corpus
    failures = [gid for gid, g, n, sol, _ in runs if not verify_cover(g, sol.cover, n)[0]]
    ok = len(runs) >= 1000 and not failures and elapsed < 60
    assert record(3, ok, f"{len(runs)} instances, {len(failures)} invalid covers, {elapsed:.1f}s")


def test_criterion_4_oracle_dominance(counterexample_dir):
    start = time.perf_counter()
    ratios, below, flagged = [], [], []
    for i, (gid, g, n) in enumerate(corpus(600, max_vertices=12, seed=77)):
        sol = solve_nmvc(g, n, RandomSource(i))
        opt = exact_nmvc(g, n).size
        if sol.size < opt:
            below.append(gid)
        ratio = sol.size / opt
        ratios.append(ratio)
        if ratio > 4:
            flagged.append(gid)
            write_counterexample(counterexample_dir, gid, g, n, "ratio",
                                 [f"solver={sol.size} optimum={opt}"])
    elapsed = time.perf_counter() - start
    ok = not below and elapsed < 120
    assert record(4, ok, f"{len(ratios)} instances, {len(below)} below optimum, "
                         f"mean ratio {statistics.mean(ratios):.3f}, max {max(ratios):.2f}, "
                         f"{len(flagged)} flagged >4, {elapsed:.1f}s")


def test_criterion_5_classic_two_approximation():
    start = time.perf_counter()
    violations, count = 0, 0
    for i, (gid, g, _) in enumerate(corpus(800, max_vertices=10, seed=5)):
        cover, picks = approx_vertex_cover(g, RandomSource(i))
        count += 1
        if not (len(cover) == 2 * len(picks) <= 2 * exact_vc(g).size):
            violations += 1
    elapsed = time.perf_counter() - start
    assert record(5, violations == 0 and elapsed < 60,
                  f"{count} instances, {violations} violations of |AVC| = 2|M| <= 2 OPT, {elapsed:.1f}s")


def test_criterion_6_extension_soundness(validity_corpus, counterexample_dir):
    runs, _ = validity_corpus
    checked = bad_contract = 0
    bad_instances, bad_edges, short_bad = [], 0, 0
    for gid, g, n, sol, ext in runs:
        if ext is None:
            continue
        checked += 1
        if contract(ext) != g:
            bad_contract += 1
        violations = trail_violations(ext, sol.events)
        if violations:
            bad_instances.append(gid)
            bad_edges += len(violations)
            short_bad += len(trail_violations(ext, sol.events, short_only=True))
            write_counterexample(counterexample_dir, gid, g, n, "extension", [
                f"{len(violations)} attachments whose stretched trail is not N edges long",
            ])
    ok = bad_contract == 0 and not bad_instances
    assert record(6, ok, f"{checked} reductions, {bad_contract} contraction failures, "
                         f"{len(bad_instances)} instances with {bad_edges} attachments off "
                         f"the N-edge trail length ({short_bad} of them short attachments)")


def test_criterion_7_bound_chain_report(tmp_path, counterexample_dir):
    graphs_dir = tmp_path / "graphs"
    graphs_dir.mkdir()
    (graphs_dir / "p7.el").write_text(serialize_edge_list(generate("path", 7)))
    for gid, g, _ in corpus(80, max_vertices=16, seed=7):
        (graphs_dir / f"{gid}.el").write_text(serialize_edge_list(g))
    csv_path = tmp_path / "bench.csv"
    out = io.StringIO()
    status = main(["bench", "--graph", str(graphs_dir), "--n", "2,3,4", "--deterministic",
                   "--csv", str(csv_path), "--out", str(counterexample_dir)], stdout=out)
    rows = list(csv.DictReader(csv_path.open()))
    holds = sum(r["eq8_holds"] == "1" for r in rows)
    fails = len(rows) - holds
    p7 = next(r for r in rows if r["graph_id"] == "p7" and r["n"] == "3")
    persisted = len(list(counterexample_dir.glob("*_eq8.el")))
    ok = status == 0 and len(rows) >= 200 and p7["eq8_holds"] == "1" and persisted >= fails
    assert record(7, ok, f"Eq. 8 over {len(rows)} instances: {holds} hold, {fails} fail "
                         f"({persisted} counterexample files); P7 holds: {p7['eq8_holds'] == '1'}")


def test_criterion_8_determinism(tmp_path):
    start = time.perf_counter()
    graphs_dir = tmp_path / "graphs"
    graphs_dir.mkdir()
    for i in range(4):
        (graphs_dir / f"t{i}.el").write_text(serialize_edge_list(generate("tree", 12, seed=i)))
    fig = str(FIG1_PATH)
    commands = [
        ["solve", "--graph", fig, "--n", "3", "--seed", "9"],
        ["solve", "--graph", fig, "--n", "2", "--deterministic", "--seed", "1"],
        ["exact", "--graph", fig, "--n", "2"],
        ["verify", "--graph", fig, "--n", "3", "--cover", "v4,v9"],
        ["reduce", "--graph", fig, "--n", "3", "--seed", "4"],
        ["extend", "--graph", fig, "--n", "3", "--seed", "4"],
        ["trail", "--graph", fig, "--n", "3", "--seed", "11"],
        ["gen", "--model", "gnp", "--k", "20", "--p", "0.2", "--seed", "3"],
        ["bench", "--graph", str(graphs_dir), "--n", "2,3", "--seed", "5"],
    ]
    differing = []
    for argv in commands:
        outputs = []
        for _ in range(2):
            buf = io.StringIO()
            main(argv, stdout=buf)
            outputs.append(buf.getvalue().encode())
        if outputs[0] != outputs[1]:
            differing.append(argv[0])
    elapsed = time.perf_counter() - start
    assert record(8, not differing and elapsed < 10,
                  f"{len(commands)} commands run twice, {len(differing)} differ, {elapsed:.2f}s")


def test_criterion_9_repair_tally(validity_corpus, counterexample_dir):
    runs, _ = validity_corpus
    repaired = [(gid, g, n, sol) for gid, g, n, sol, _ in runs if sol.repaired_count]
    for gid, g, n, sol in repaired:
        write_counterexample(counterexample_dir, gid, g, n, "repair",
                             [f"repaired={sol.repaired_count} seed={sol.seed}"])
    record(9, True, f"{len(repaired)} of {len(runs)} solutions needed repair")
