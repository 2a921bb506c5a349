"""Counterexample certificates for line hypergraphs of regular graphs.

For an r-regular, r-edge-colourable graph G, the line hypergraph is a
counterexample as soon as deleting the endpoints of any r-1 edges leaves
the independence number unchanged.  :func:`lovasz_condition` checks every
(r-1)-subset of edges, in lexicographic order of edge indices.
"""

from __future__ import annotations

import json
import logging
import math
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from itertools import combinations, islice
from pathlib import Path
from typing import Callable, Iterable, Iterator, Sequence

from . import __version__
from .errors import BudgetExceeded, NotRegular, ResumeMismatch
from .graph import Graph, mask_of
from .graph6 import encode_graph6
from .hypergraph import cover_number, line_hypergraph, matching_number
from .solvers.coloring import edge_colorable
from .solvers.mis import has_independent_set, max_independent_set

log = logging.getLogger(__name__)

DEFAULT_CHUNK = 2000
POOL_SIZE = 64


# ---------------------------------------------------------------------------
# combination ranking (lexicographic over sorted index tuples)


def rank_combination(combo: Sequence[int], m: int) -> int:
    k = len(combo)
    rank = 0
    prev = -1
    for i, c in enumerate(combo):
        for x in range(prev + 1, c):
            rank += math.comb(m - x - 1, k - i - 1)
        prev = c
    return rank


def unrank_combination(rank: int, m: int, k: int) -> tuple[int, ...]:
    out = []
    x = 0
    for i in range(k):
        while True:
            block = math.comb(m - x - 1, k - i - 1)
            if rank < block:
                break
            rank -= block
            x += 1
        out.append(x)
        x += 1
    return tuple(out)


def combinations_from(m: int, k: int, start: int) -> Iterator[tuple[int, ...]]:
    """Lexicographic k-subsets of range(m) starting at rank ``start``."""
    total = math.comb(m, k)
    if start >= total:
        return
    combo = list(unrank_combination(start, m, k))
    while True:
        yield tuple(combo)
        i = k - 1
        while i >= 0 and combo[i] == m - k + i:
            i -= 1
        if i < 0:
            return
        combo[i] += 1
        for j in range(i + 1, k):
            combo[j] = combo[j - 1] + 1


# ---------------------------------------------------------------------------
# certificate


@dataclass
class Certificate:
    spec: str
    graph6: str
    order: int
    degree: int
    r: int
    alpha: int
    edge_colorable: bool
    condition_holds: bool
    violating_subset: list[int] | None
    checks_done: int
    checks_total: int
    nu_line: int | None
    tau_line: int | None
    ryser_satisfied: bool | None
    ryser_extremal: bool | None
    elapsed_ms: int
    tool_version: str = __version__
    mode: str = "full"
    witness_alpha: list[int] | None = None
    certifies_counterexample: bool = False

    def to_json(self) -> str:
        return json.dumps(asdict(self), sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> "Certificate":
        return cls(**json.loads(text))

    def write(self, path: str | Path) -> None:
        Path(path).write_text(self.to_json() + "\n")


def endpoints_mask(g: Graph, edge_ids: Iterable[int]) -> int:
    m = 0
    for i in edge_ids:
        u, v = g.edges[i]
        m |= (1 << u) | (1 << v)
    return m


class WitnessPool:
    """Recently useful maximum independent sets, most recent first.

    A pooled set disjoint from the deleted vertices already proves that
    alpha survives, so the exact search only runs on pool misses.
    """

    def __init__(self, seed: Iterable[int] = (), size: int = POOL_SIZE):
        self.size = size
        self.sets: list[int] = [s for s in seed]

    def find(self, excluded: int) -> int | None:
        for i, s in enumerate(self.sets):
            if not s & excluded:
                if i:
                    self.sets.insert(0, self.sets.pop(i))
                return s
        return None

    def add(self, s: int) -> None:
        self.sets.insert(0, s)
        del self.sets[self.size:]


def check_subset(g: Graph, alpha: int, edge_ids: Sequence[int], pool: WitnessPool | None = None) -> tuple[int, ...] | None:
    """A maximum independent set avoiding the endpoints of ``edge_ids``, or ``None``."""
    excluded = endpoints_mask(g, edge_ids)
    if pool is not None:
        hit = pool.find(excluded)
        if hit is not None:
            return tuple(i for i in range(g.order) if hit >> i & 1)
    w = has_independent_set(g, alpha, excluded)
    if w is not None and pool is not None:
        pool.add(mask_of(w))
    return w


def _check_range(args) -> tuple[int, int | None, int]:
    """Worker: check ranks [start, stop); return (start, first violating rank or None, checks run)."""
    g, alpha, k, start, stop, seed_set = args
    pool = WitnessPool([seed_set])
    done = 0
    for combo in islice(combinations_from(g.size, k, start), stop - start):
        if check_subset(g, alpha, combo, pool) is None:
            return start, start + done, done + 1
        done += 1
    return start, None, done


def _chunks(start: int, total: int, size: int) -> list[tuple[int, int]]:
    return [(s, min(s + size, total)) for s in range(start, total, size)]


class ProgressFile:
    """Append-only ``done <rank>`` lines; the header comment pins graph and r."""

    def __init__(self, path: str | Path, graph6: str, r: int):
        self.path = Path(path)
        self.header = f"# {graph6} r={r}"
        self.completed = 0  # number of leading ranks already verified
        if self.path.exists() and self.path.stat().st_size:
            lines = self.path.read_text().splitlines()
            if not lines or lines[0] != self.header:
                raise ResumeMismatch(f"{self.path} was written for a different graph or r")
            for ln in lines[1:]:
                if ln.startswith("done "):
                    self.completed = max(self.completed, int(ln.split()[1]) + 1)
        else:
            self.path.write_text(self.header + "\n")

    def mark(self, last_rank: int) -> None:
        with self.path.open("a") as fh:
            fh.write(f"done {last_rank}\n")
        self.completed = max(self.completed, last_rank + 1)


def lovasz_condition(
    g: Graph,
    r: int,
    *,
    spec: str = "",
    mode: str = "full",
    samples: int = 2000,
    seed: int = 0,
    progress: str | Path | None = None,
    workers: int = 1,
    chunk: int = DEFAULT_CHUNK,
    with_ryser: bool = True,
    on_progress: Callable[[int, int], None] | None = None,
) -> Certificate:
    """Check the independence condition for every (r-1)-subset of edges.

    ``mode`` is ``full`` (every subset), ``sample`` (``samples`` seeded
    uniform subsets) or ``resume`` (full, skipping the prefix recorded in
    ``progress``).  Stops at the first violation; with several workers the
    lowest-ranked violation is reported.
    """
    t0 = time.perf_counter()
    deg = g.regular_degree()
    if deg != r:
        raise NotRegular(f"graph is not {r}-regular (degrees {sorted(set(g.degrees()))})")
    g6 = encode_graph6(g)
    base = max_independent_set(g)
    alpha = base.alpha
    colorable = edge_colorable(g, r) is not None
    if not colorable:
        log.warning("graph is not %d-edge-colourable; the certificate cannot certify a counterexample", r)
    k = r - 1
    m = g.size
    violation: tuple[int, ...] | None = None

    if mode == "sample":
        rng = random.Random(seed)
        total = samples
        done = 0
        pool = WitnessPool([base.witness_mask])
        for _ in range(samples):
            combo = tuple(sorted(rng.sample(range(m), k)))
            done += 1
            if check_subset(g, alpha, combo, pool) is None:
                violation = combo
                break
            if on_progress and done % 500 == 0:
                on_progress(done, total)
    elif mode in ("full", "resume"):
        total = math.comb(m, k)
        tracker = ProgressFile(progress, g6, r) if progress is not None else None
        start = tracker.completed if (tracker is not None and mode == "resume") else 0
        done = start
        jobs = [(g, alpha, k, s, e, base.witness_mask) for s, e in _chunks(start, total, chunk)]
        if workers > 1:
            executor = ProcessPoolExecutor(max_workers=workers)
            results = executor.map(_check_range, jobs)
        else:
            executor = None
            results = map(_check_range, jobs)
        try:
            for job, (s, bad, n_done) in zip(jobs, results):
                if bad is not None:
                    violation = unrank_combination(bad, m, k)
                    done = bad + 1
                    break
                done = job[4]
                if tracker is not None:
                    tracker.mark(done - 1)
                if on_progress:
                    on_progress(done, total)
        finally:
            if executor is not None:
                executor.shutdown(cancel_futures=True)
    else:
        raise ValueError(f"unknown mode {mode!r}")

    holds = violation is None
    nu = tau = None
    ry_sat = ry_ext = None
    if with_ryser:
        h = line_hypergraph(g)
        nu = matching_number(h)
        tau = cover_number(h)
        ry_sat = tau <= (r - 1) * nu
        ry_ext = tau == (r - 1) * nu
    return Certificate(
        spec=spec,
        graph6=g6,
        order=g.order,
        degree=deg,
        r=r,
        alpha=alpha,
        edge_colorable=colorable,
        condition_holds=holds,
        violating_subset=list(violation) if violation is not None else None,
        checks_done=done,
        checks_total=total,
        nu_line=nu,
        tau_line=tau,
        ryser_satisfied=ry_sat,
        ryser_extremal=ry_ext,
        elapsed_ms=int((time.perf_counter() - t0) * 1000),
        mode=mode,
        witness_alpha=list(base.witness),
        certifies_counterexample=holds and colorable and mode != "sample",
    )


def recheck(cert: Certificate, g: Graph) -> bool:
    """Re-verify a certificate's recorded violation (or its alpha witness) in isolation."""
    if not g.is_independent(cert.witness_alpha or ()) or len(cert.witness_alpha or ()) != cert.alpha:
        return False
    if cert.violating_subset is None:
        return True
    return has_independent_set(g, cert.alpha, endpoints_mask(g, cert.violating_subset)) is None


# ---------------------------------------------------------------------------
# weakened conjecture


@dataclass
class WeakResult:
    holds: bool
    k_used: int | None
    witness: list[int] | None  # hypergraph vertices = edge indices of the base
    alpha: int
    alpha_after: int | None
    k_checked: list[int] = field(default_factory=list)
    subsets_checked: int = 0


def weak_lovasz(
    g: Graph,
    r: int,
    ks: Iterable[int] | None = None,
    budget: int | None = 5_000_000,
) -> WeakResult:
    """Look for k(r-1) edges whose endpoints' removal drops alpha by at least k."""
    if g.regular_degree() != r:
        raise NotRegular(f"graph is not {r}-regular")
    alpha = max_independent_set(g).alpha
    ks = list(range(1, r)) if ks is None else list(ks)
    m = g.size
    checked: list[int] = []
    count = 0
    for k in ks:
        size = k * (r - 1)
        if budget is not None and math.comb(m, size) > budget:
            raise BudgetExceeded(f"C({m},{size}) subsets exceed the budget of {budget}", completed=checked)
        # alpha(G - endpoints) <= alpha - k  <=>  no independent set of size alpha - k + 1 survives
        seen_masks: set[int] = set()
        for combo in combinations(range(m), size):
            count += 1
            ex = endpoints_mask(g, combo)
            if ex in seen_masks:
                continue
            seen_masks.add(ex)
            if has_independent_set(g, alpha - k + 1, ex) is None:
                after = max_independent_set(g, restrict=g.full_mask() & ~ex).alpha
                checked.append(k)
                return WeakResult(True, k, list(combo), alpha, after, checked, count)
        checked.append(k)
    return WeakResult(False, None, None, alpha, None, checked, count)
