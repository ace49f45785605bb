"""Acceptance suite: one test per primary criterion, each printing a single
PASS/FAIL line (visible even under output capture)."""

import time

import pytest

from schnyder_cotree import batch
from schnyder_cotree.candidate import (
    check_dual_complement, check_max_degree, cycle_witness, fundamental_cycles, h_zero,
)
from schnyder_cotree.dual_wood import check_crossing_vertices, completion, dual_wood
from schnyder_cotree.errors import VerifierAlarm
from schnyder_cotree.extract import co_tree, verify_theorem
from schnyder_cotree.generators import builtin_corpus, cube, k4
from schnyder_cotree.opp import check_index_monotonicity, compatible_opp, validate_opp
from schnyder_cotree.oracle import count_spanning_trees, enumerate_spanning_trees
from schnyder_cotree.planar import is_spanning_tree, max_degree, suspend
from schnyder_cotree.schnyder import BLUE, GREEN, RED, compute_wood, validate_wood

CAP = 2000


@pytest.fixture
def verdict(pytestconfig):
    capman = pytestconfig.pluginmanager.getplugin("capturemanager")

    def emit(criterion, ok, detail="", table=()):
        with capman.global_and_fixture_disabled():
            print(f"\n[{'PASS' if ok else 'FAIL'}] {criterion}: {detail}")
            for line in table:
                print(line)
        assert ok, f"{criterion}: {detail}"
    return emit


@pytest.fixture(scope="module")
def acc_corpus():
    return builtin_corpus()


@pytest.fixture(scope="module")
def batch_runs(tmp_path_factory):
    """Two consecutive full batch runs over the built-in corpus."""
    out = []
    for k in range(2):
        path = tmp_path_factory.mktemp(f"run{k}") / "report.jsonl"
        t0 = time.perf_counter()
        records = batch.batch_verify(batch.builtin_items(0), oracle_cap=CAP)
        elapsed = time.perf_counter() - t0
        batch.write_reports(records, str(path))
        out.append((records, elapsed, path.read_bytes(), path.with_suffix(".csv").read_bytes()))
    return out


def test_wood_validity(acc_corpus, verdict):
    t0 = time.perf_counter()
    bad = []
    for name, G in acc_corpus:
        Gs = suspend(G)
        if not validate_wood(Gs, compute_wood(Gs)).ok:
            bad.append(name)
    elapsed = time.perf_counter() - t0
    verdict("Wood validity", not bad and elapsed < 5.0,
            f"{len(acc_corpus) - len(bad)}/{len(acc_corpus)} valid in {elapsed:.2f} s (limit 5 s)")


def test_dual_wood_validity(acc_corpus, verdict):
    bad = []
    for name, G in acc_corpus:
        Sd, _ = dual_wood(compute_wood(suspend(G)))
        if not validate_wood(Sd.host, Sd).ok:
            bad.append(name)
    verdict("Dual wood validity", not bad,
            f"{len(acc_corpus) - len(bad)}/{len(acc_corpus)} dual woods valid {bad[:5]}")


def test_crossing_vertices(acc_corpus, verdict):
    violations = crossings = 0
    for name, G in acc_corpus:
        Gs = suspend(G)
        S = compute_wood(Gs)
        Sd, corr = dual_wood(S)
        C = completion(Gs, S, Sd, corr)
        crossings += C.skeleton.n_cross
        violations += len(check_crossing_vertices(C).violations)
    verdict("Crossing vertices", violations == 0,
            f"{crossings} crossing vertices, {violations} violations")


def test_path_partitions(acc_corpus, verdict):
    bad = []
    edges = 0
    for name, G in acc_corpus:
        S = compute_wood(suspend(G))
        for i in (RED, GREEN, BLUE):
            P = compatible_opp(S, i)
            if not validate_opp(G, P).ok or not check_index_monotonicity(S, P).ok:
                bad.append((name, i))
            edges += G.m
    verdict("Compatible path partitions and index monotonicity", not bad,
            f"{edges} edge checks over 3 colours, failures {bad[:5]}")


def test_candidate_degree_bound(pipelines, verdict):
    bad = []
    worst = 0
    for name, res in pipelines.items():
        H, Hd = res.H, res.H_dual
        worst = max(worst, H.max_degree, Hd.max_degree)
        if not (check_max_degree(H).ok and check_max_degree(Hd).ok and Hd.degrees()[Hd.x] <= 3):
            bad.append(name)
    verdict("Candidate degree bound", not bad, f"max degree over H and H° is {worst} (bound 5) {bad[:5]}")


def test_dual_complement(pipelines, verdict):
    bad = []
    edges = 0
    for name, res in pipelines.items():
        edges += res.G.m
        if not check_dual_complement(res.H, res.H_dual, range(res.G.m)).ok:
            bad.append(name)
    verdict("Edgewise dual complement", not bad, f"{edges} edges checked {bad[:5]}")


def _acyclic(n, edges):
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x
    for u, v in edges:
        a, b = find(u), find(v)
        if a == b:
            return False
        parent[a] = b
    return True


def test_forest_and_witnesses(pipelines, verdict):
    bad = []
    cycles = 0
    for name, res in pipelines.items():
        G, H, Hd = res.G, res.H, res.H_dual
        ident = range(G.m)
        try:
            H0 = h_zero(H, Hd, ident)
            for cyc in fundamental_cycles(H):
                cycles += 1
                w = cycle_witness(H, Hd, ident, cyc)
                assert w in cyc and w in Hd
        except (VerifierAlarm, AssertionError):
            bad.append(name)
            continue
        if not _acyclic(G.n, [G.edges[e] for e in H0]):
            bad.append(name)
    verdict("H0 forest and cycle witnesses", not bad,
            f"{cycles} fundamental cycles witnessed {bad[:5]}")


def test_degree5_tree_pair(acc_corpus, batch_runs, verdict):
    bad = []
    worst = (0, 0)
    for name, G in acc_corpus:
        try:
            res_pair = verify_theorem(G)
        except VerifierAlarm as ex:
            bad.append((name, str(ex)))
            continue
        T, C = res_pair.tree, res_pair.co_tree
        ok = (is_spanning_tree(G.n, [G.edges[e] for e in T]) and len(C) == G.f - 1
              and res_pair.max_deg_tree <= 5 and res_pair.max_deg_cotree <= 5
              and max_degree(G.n, [G.edges[e] for e in T]) == res_pair.max_deg_tree
              and res_pair.h0_in_tree and res_pair.certificates["tree_in_H"])
        if not ok:
            bad.append(name)
        worst = max(worst, (res_pair.max_deg_tree, res_pair.max_deg_cotree))
    records, elapsed, _, _ = batch_runs[0]
    failed = [r["name"] for r in records if not r["passed"]]
    verdict("Degree-5 tree and co-tree", not bad and not failed and elapsed < 30.0,
            f"{len(acc_corpus) - len(bad)}/{len(acc_corpus)} certified, worst pair {worst}, "
            f"batch {len(records)} graphs in {elapsed:.1f} s (limit 30 s)")


def test_oracle_cross_checks(acc_corpus, pipelines, verdict):
    counts = {"K4": count_spanning_trees(k4()), "cube": count_spanning_trees(cube())}
    enum = {"K4": sum(1 for _ in enumerate_spanning_trees(k4(), CAP)),
            "cube": sum(1 for _ in enumerate_spanning_trees(cube(), CAP))}
    exact = counts == enum == {"K4": 16, "cube": 384}
    guarded = trees = 0
    bad = []
    for name, G in acc_corpus:
        if count_spanning_trees(G) > CAP:
            continue
        guarded += 1
        res = pipelines[name]
        D = res.dual.graph
        seen = False
        for T in enumerate_spanning_trees(G, CAP):
            trees += 1
            C = co_tree(G, T, range(G.m), D)
            if not is_spanning_tree(D.n, [D.edges[e] for e in C]):
                bad.append((name, "co-tree"))
            seen = seen or T == res.pair.tree
        if not seen:
            bad.append((name, "T not enumerated"))
    verdict("Oracle cross-checks", exact and not bad,
            f"counts {counts}, enumeration {enum}; {guarded} guarded graphs, "
            f"{trees} co-trees checked {bad[:5]}")


def test_determinism(batch_runs, verdict):
    (_, _, j1, c1), (_, _, j2, c2) = batch_runs
    verdict("Determinism", j1 == j2 and c1 == c2,
            f"JSON-lines reports {len(j1)} bytes, identical={j1 == j2}; CSV identical={c1 == c2}")


def test_best_pair_report(batch_runs, verdict):
    records = batch_runs[0][0]
    rows = [r for r in records if r["oracle_best"] is not None]
    table = [f"  {'graph':<28} {'best':>6} {'pipeline':>9}"]
    for r in rows:
        best = "({},{})".format(*r["oracle_best"])
        pipe = f"({r['delta_T']},{r['delta_cotree']})"
        table.append(f"  {r['name']:<28} {best:>6} {pipe:>9}")
    over = [r["name"] for r in records if max(r["delta_T"], r["delta_cotree"]) > 5]
    verdict("Best degree pair report (informational)", not over,
            f"best pair recorded for {len(rows)} graphs with <= {CAP} spanning trees, "
            f"max best {max(max(r['oracle_best']) for r in rows)}; pipeline pairs within (5,5)",
            table)
