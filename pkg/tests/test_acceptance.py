"""End-to-end acceptance checks, one test per criterion.

Each test records a one-line verdict that is printed in the terminal
summary.  Criterion 6 runs the seeded 2,000-triple sample by default; set
``LOVASZ_FULL=1`` to also run the exhaustive check over all triples.
"""

from __future__ import annotations

import math
import os
import random
import time

import pytest

from conftest import FULL, random_cubic, random_graph, record_criterion
from lovasz_cx.families import build, gen_petersen, rung_view
from lovasz_cx.graph import from_edges, induced_subgraph, is_connected
from lovasz_cx.harness import load_corpus, table_report
from lovasz_cx.hypergraph import cover_number, cover_number_generic, line_hypergraph, matching_number, ryser_report
from lovasz_cx.oracle import boundary_edges, oracle_independent_set, vertex
from lovasz_cx.solvers import edge_colorable, hamiltonian, max_independent_set, max_matching
from lovasz_cx.solvers.coloring import is_proper
from lovasz_cx.solvers.hamilton import NO, YES, is_hamilton_cycle
from lovasz_cx.verifier import endpoints_mask, lovasz_condition, recheck, weak_lovasz

Z35 = "cgp:2,cyclic:35,[5,7],[15,0]"


def _timed(fn):
    t0 = time.perf_counter()
    out = fn()
    return out, time.perf_counter() - t0


def _check(number: int, ok: bool, detail: str) -> None:
    record_criterion(number, ok, detail)
    assert ok, detail


def test_c01_independence_formula():
    def run():
        return [(n, max_independent_set(gen_petersen(n, 2)).alpha) for n in range(5, 41)]

    rows, dt = _timed(run)
    bad = [(n, a) for n, a in rows if a != (4 * n) // 5]
    _check(1, not bad and dt < 60, f"alpha(gp(n,2)) = floor(4n/5) for 5<=n<=40, {len(bad)} mismatches, {dt:.1f}s")


def test_c02_segment_lemma():
    def run():
        worst = 0
        for n in range(11, 41):
            g = gen_petersen(n, 2)
            rv = rung_view(g)
            for i in range(1, n + 1):
                worst = max(worst, max_independent_set(induced_subgraph(g, rv.S(i, 5))).alpha)
        return worst

    worst, dt = _timed(run)
    _check(2, worst <= 4 and dt < 30, f"max alpha(gp(n,2)[S_i,5]) over n in 11..40 = {worst}, {dt:.1f}s")


def test_c03_r3_counterexamples():
    def run():
        return [lovasz_condition(gen_petersen(n, 2), 3) for n in (11, 16, 21)]

    certs, dt = _timed(run)
    counts = [c.checks_done for c in certs]
    ok = all(c.condition_holds and c.edge_colorable for c in certs) and counts == [528, 1128, 1953] and dt < 120
    _check(3, ok, f"gp(11/16/21,2): condition holds over {counts} pairs, colourable, {dt:.1f}s")


def test_c04_negative_control():
    g = gen_petersen(7, 2)
    cert, dt = _timed(lambda: lovasz_condition(g, 3))
    s = cert.violating_subset
    drop = max_independent_set(induced_subgraph(g, g.full_mask() & ~endpoints_mask(g, s or []))).alpha
    ok = not cert.condition_holds and s is not None and drop < cert.alpha and recheck(cert, g) and dt < 10
    _check(4, ok, f"gp(7,2) violated by edge pair {s} (alpha {cert.alpha} -> {drop}), {dt:.2f}s")


def test_c05_tait_colourings():
    def run():
        res = {5: edge_colorable(gen_petersen(5, 2), 3)}
        for n in range(6, 41):
            res[n] = edge_colorable(gen_petersen(n, 2), 3)
        return res

    res, dt = _timed(run)
    proper = all(c is not None and is_proper(gen_petersen(n, 2), c.colors) for n, c in res.items() if n > 5)
    ok = res[5] is None and proper and dt < 30
    _check(5, ok, f"gp(5,2) not 3-edge-colourable, gp(n,2) colourable for 6<=n<=40, {dt:.1f}s")


def test_c06_r4_counterexample_sample():
    g = build(Z35)
    cert, dt = _timed(lambda: lovasz_condition(g, 4, spec=Z35, mode="sample", samples=2000, seed=0))
    ok = cert.condition_holds and cert.edge_colorable and cert.checks_done == 2000 and cert.alpha == 25 and dt < 180
    detail = f"cgp(2,Z35;5,7;15,0): 2000 seeded triples preserve alpha=25 (sample mode), {dt:.1f}s"
    if not FULL:
        detail += "; exhaustive run not requested (LOVASZ_FULL=1)"
    _check(6, ok, detail)


@pytest.mark.slow
@pytest.mark.skipif(not FULL, reason="set LOVASZ_FULL=1 for the exhaustive 447,580-triple run")
def test_c06_r4_counterexample_full():
    g = build(Z35)
    workers = int(os.environ.get("LOVASZ_WORKERS", os.cpu_count() or 1))
    cert, dt = _timed(lambda: lovasz_condition(g, 4, spec=Z35, workers=workers))
    ok = cert.condition_holds and cert.checks_done == cert.checks_total == math.comb(140, 3)
    _check(6, ok, f"cgp(2,Z35;5,7;15,0): all {cert.checks_done} triples preserve alpha=25 (full mode, "
                  f"{workers} workers), {dt / 60:.1f} min")


def test_c07_table_reproduction():
    entries = [e for e in load_corpus() if e.spec and e.spec.split(":")[0] in ("gp", "cgp")]
    rep, dt = _timed(lambda: table_report(entries))
    mismatches = [r.entry.name for r in rep.rows if not r.ok]
    unknown = [r.entry.name for r in rep.rows if r.computed and r.computed["hamiltonian"] is None]
    gp_rows = sum(1 for e in entries if e.spec.startswith("gp"))
    ok = not mismatches and dt < 1800
    _check(7, ok, f"{gp_rows} gp rows + {len(entries) - gp_rows} fully specified cgp rows: order/diameter/girth "
                  f"exact, Hamiltonicity {len(entries) - len(unknown)}/{len(entries)} decided; "
                  f"mismatches {mismatches or 'none'}, {dt:.1f}s")


def test_c08_hamiltonicity_law():
    def run():
        out = {}
        for k in range(6):
            n = 5 * k + 11
            g = gen_petersen(n, 2)
            r = hamiltonian(g)
            assert r.status != YES or is_hamilton_cycle(g, r.cycle)
            out[n] = r.status
        return out

    res, dt = _timed(run)
    ok = all(s == (NO if n % 6 == 5 else YES) for n, s in res.items()) and dt < 600
    _check(8, ok, f"gp(5k+11,2), k=0..5: {res}, {dt:.1f}s")


def test_c09_bijection_and_bounds():
    def run():
        rng = random.Random(2025)
        graphs = []
        while len(graphs) < 500:
            g = random_cubic(rng, rng.choice(range(4, 21, 2)))
            if is_connected(g):
                graphs.append(g)
        graphs += [build(e.spec) for e in load_corpus() if e.spec and e.spec.startswith("gp")]
        graphs += [gen_petersen(5 * k + 11, 2) for k in range(6)]
        bad = []
        for g in graphs:
            h = line_hypergraph(g)
            nu, tau = matching_number(h), cover_number(h)
            if not (nu == max_independent_set(g).alpha and nu <= tau <= 3 * nu):
                bad.append(g)
        return len(graphs), bad

    (count, bad), dt = _timed(run)
    _check(9, not bad and dt < 300, f"nu(L)=alpha(G) and nu<=tau<=3nu on {count} cubic graphs, "
                                    f"{len(bad)} failures, {dt:.1f}s")


def test_c10_ryser_non_extremal():
    def run():
        a = ryser_report(line_hypergraph(gen_petersen(11, 2)), 3)
        b = ryser_report(line_hypergraph(build(Z35)), 4)
        return a, b

    (a, b), dt = _timed(run)
    ok = a.tau == 11 and a.bound == 16 and not a.extremal and b.tau < 3 * b.nu and dt < 60
    _check(10, ok, f"gp(11,2): tau={a.tau} < {a.bound}; cgp Z35: tau={b.tau} < 3*nu={3 * b.nu}, {dt:.2f}s")


def test_c11_oracle_soundness():
    def run():
        count = 0
        for k in range(21):
            n = 5 * k + 11
            g = gen_petersen(n, 2)
            rng = random.Random(1000 + k)
            for _ in range(100):
                e1, e2 = rng.choice(g.edges), rng.choice(g.edges)
                t = oracle_independent_set(k, e1, e2)  # raises on any failed internal check
                I = set(t.I)
                assert len(I) == 4 * k + 8 and g.is_independent(I) and not I & {*e1, *e2}
                for lvl in t.levels()[:-1]:
                    rot = {2 * ((v // 2 + lvl.shift) % lvl.n) + v % 2 for v in lvl.I}
                    assert not set(lvl.child.I) & {vertex("a", lvl.i1, lvl.n), vertex("b", lvl.i1, lvl.n)}
                    assert not any(u in rot and v in rot for u, v in boundary_edges(lvl.i1, lvl.n))
                if k <= 2:
                    alpha = max_independent_set(induced_subgraph(g, g.full_mask() & ~endpoints_mask(g, []) & ~sum(
                        1 << v for v in {*e1, *e2}))).alpha
                    assert alpha == len(I) == 4 * k + 8
                count += 1
        return count

    count, dt = _timed(run)
    _check(11, count == 2100 and dt < 300, f"{count} oracle traces (k=0..20, 100 pairs each) verified, {dt:.1f}s")


def test_c12_weakened_conjecture():
    res, dt = _timed(lambda: weak_lovasz(gen_petersen(11, 2), 3))
    ok = res.holds and res.k_used == 2 and dt < 900
    _check(12, ok, f"gp(11,2): holds with k={res.k_used} (alpha {res.alpha} -> {res.alpha_after} after removing "
                   f"edges {res.witness}); new computation, instance assumed, {dt:.1f}s")


def _brute_alpha_bits(g) -> int:
    n = g.order
    indep = bytearray(1 << n)
    indep[0] = 1
    best = 0
    adj = g.adj
    for mask in range(1, 1 << n):
        low = (mask & -mask).bit_length() - 1
        rest = mask & (mask - 1)
        if indep[rest] and not adj[low] & rest:
            indep[mask] = 1
            c = mask.bit_count()
            if c > best:
                best = c
    return best


def test_c13_solver_oracle_equivalence():
    def run():
        rng = random.Random(13)
        mis_bad = 0
        for _ in range(200):
            n = rng.randint(1, 18)
            g = random_graph(rng, n, rng.uniform(0.05, 0.7))
            res = max_independent_set(g)
            if res.alpha != _brute_alpha_bits(g) or not g.is_independent(res.witness):
                mis_bad += 1
        cover_bad = 0
        bases = [gen_petersen(5, 2), gen_petersen(7, 2), gen_petersen(7, 3), build("sgp:3,4,1,1,1")]
        for _ in range(200):
            n = rng.randint(2, 14)
            g = random_graph(rng, n, rng.uniform(0.15, 0.7))
            g = from_edges(n, g.edges + tuple((v, (v + 1) % n) for v in range(n) if g.degree(v) == 0))
            bases.append(g)
        for g in bases:
            h = line_hypergraph(g)
            if cover_number_generic(h) != g.order - max_matching(g):
                cover_bad += 1
        return mis_bad, cover_bad, len(bases)

    (mis_bad, cover_bad, nb), dt = _timed(run)
    _check(13, mis_bad == 0 and cover_bad == 0 and dt < 300,
           f"MIS = brute force on 200 graphs (<=18 vertices): {mis_bad} mismatches; hitting set = Gallai on "
           f"{nb} bases (<=14 vertices): {cover_bad} mismatches, {dt:.1f}s")

