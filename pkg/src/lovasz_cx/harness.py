"""Parameter sweeps over Cayley-generalized Petersen graphs and corpus reports.

A search streams cgp specs for one group and layer count, filters and
deduplicates the graphs, runs the independence condition on the survivors
and appends one JSON line per spec.  Output is deterministic and resumable.
"""

from __future__ import annotations

import hashlib
import itertools
import json
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Iterable, Iterator

from . import __version__
from .errors import CorpusEntryMissing, LovaszError, ResumeMismatch, SpecSyntaxError
from .families import DATA_DIR, FamilySpec, build
from .graph import INF, Graph, diameter, distance_profile, girth, is_connected
from .graph6 import decode_graph6, encode_graph6, read_graph6_file
from .groups import builtin_group
from .iso import isomorphic
from .solvers.coloring import edge_colorable
from .solvers.hamilton import UNKNOWN, hamiltonian
from .verifier import lovasz_condition

log = logging.getLogger(__name__)

STATUSES = ("duplicate", "filtered", "violated", "candidate", "counterexample", "error")


# ---------------------------------------------------------------------------
# configuration


def _as_bool(text: str) -> bool:
    t = text.strip().lower()
    if t in ("1", "true", "yes", "on"):
        return True
    if t in ("0", "false", "no", "off"):
        return False
    raise SpecSyntaxError(f"not a boolean: {text!r}")


def _int_list(text: str) -> tuple[int, ...] | None:
    text = text.strip().strip("[]")
    if not text:
        return None
    return tuple(int(x) for x in text.replace(",", " ").split())


@dataclass
class SearchConfig:
    m: int
    group: str
    r: int = 4
    connected: bool = True
    girth_min: int = 0
    dedupe: bool = True
    workers: int = 1
    seed: int = 0
    mode: str = "full"  # full | sample
    samples: int = 2000
    output: str = "search.jsonl"
    resume: bool = False
    limit: int | None = None
    # optional restrictions of the sweep, as element indices
    ks: tuple[int, ...] | None = None
    cs: tuple[int, ...] | None = None

    def __post_init__(self):
        if self.r not in (3, 4):
            raise SpecSyntaxError(f"r must be 3 or 4, got {self.r}")
        if self.workers < 1:
            raise SpecSyntaxError("workers must be >= 1")
        if self.m < 2:
            raise SpecSyntaxError("m must be >= 2")
        if self.mode not in ("full", "sample"):
            raise SpecSyntaxError(f"unknown mode {self.mode!r}")

    def identity(self) -> dict:
        """Fields that determine the output file (not how it is produced)."""
        d = asdict(self)
        for key in ("workers", "output", "resume"):
            d.pop(key)
        d["ks"] = list(self.ks) if self.ks is not None else None
        d["cs"] = list(self.cs) if self.cs is not None else None
        return d


_CONFIG_TYPES = {
    "m": int, "r": int, "girth_min": int, "workers": int, "seed": int, "samples": int,
    "limit": int, "connected": _as_bool, "dedupe": _as_bool, "resume": _as_bool,
    "group": str, "mode": str, "output": str, "ks": _int_list, "cs": _int_list,
}


def parse_config(text: str, **overrides) -> SearchConfig:
    """``key = value`` lines; ``#`` starts a comment; string values may be quoted."""
    values: dict = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line or line.startswith("["):
            continue
        key, sep, val = line.partition("=")
        key = key.strip()
        if not sep or key not in _CONFIG_TYPES:
            raise SpecSyntaxError(f"line {lineno}: cannot parse {raw!r}")
        val = val.strip().strip('"').strip("'")
        values[key] = _CONFIG_TYPES[key](val)
    values.update({k: v for k, v in overrides.items() if v is not None})
    if "m" not in values or "group" not in values:
        raise SpecSyntaxError("config needs at least m and group")
    return SearchConfig(**values)


def load_config(path: str | Path, **overrides) -> SearchConfig:
    return parse_config(Path(path).read_text(), **overrides)


# ---------------------------------------------------------------------------
# enumeration


def k_representatives(group) -> list[int]:
    """Elements x != 1 with x != x^-1, one per inverse pair (the smaller index)."""
    return [x for x in range(group.order) if x != group.identity and group.inv(x) != x and x < group.inv(x)]


def enumerate_specs(cfg: SearchConfig) -> Iterator[FamilySpec]:
    """Every cgp spec for ``cfg``, up to k <-> k^-1 and, for abelian groups,
    left translation of the layers (which lets c_{m-1} be the identity)."""
    group = builtin_group(cfg.group, base_dir=DATA_DIR)
    reps = k_representatives(group)
    if cfg.ks is not None:
        reps = [x for x in reps if x in cfg.ks or group.inv(x) in cfg.ks]
    c_all = list(range(group.order)) if cfg.cs is None else list(cfg.cs)
    last = [group.identity] if group.is_abelian else c_all
    for ks in itertools.product(reps, repeat=cfg.m):
        for head in itertools.product(c_all, repeat=cfg.m - 1):
            for c_last in last:
                cs = (*head, c_last)
                yield FamilySpec("cgp", (cfg.m, tuple(map(str, ks)), tuple(map(str, cs))), group=cfg.group)


# ---------------------------------------------------------------------------
# fingerprints and records


def fingerprint(g: Graph) -> tuple:
    """(order, degree sequence, girth, diameter, hash of sorted distance profiles)."""
    degs = sorted(g.degrees())
    profiles = sorted(distance_profile(g, v) for v in range(g.order))
    h = hashlib.sha256(repr(profiles).encode()).hexdigest()[:16]
    gi, di = girth(g), diameter(g)
    return (
        g.order,
        tuple(degs),
        None if gi == INF else int(gi),
        None if di == INF else int(di),
        h,
    )


@dataclass
class SearchRecord:
    index: int
    spec: str
    status: str
    fingerprint: list | None = None
    reason: str | None = None
    duplicate_of: int | None = None
    isomorphism: list[int] | None = None
    certificate: dict | None = None

    def to_json(self) -> str:
        d = asdict(self)
        if d["fingerprint"] is not None:
            fp = list(d["fingerprint"])
            fp[1] = _compress_degrees(fp[1])
            d["fingerprint"] = fp
        return json.dumps(d, sort_keys=True)


def _compress_degrees(degs) -> list[list[int]]:
    out: list[list[int]] = []
    for d in degs:
        if out and out[-1][0] == d:
            out[-1][1] += 1
        else:
            out.append([d, 1])
    return out


def _fp_key(fp) -> str:
    fp = list(fp)
    if fp[1] and not isinstance(fp[1][0], list):
        fp[1] = _compress_degrees(fp[1])
    return json.dumps(fp)


def _verify_job(args) -> dict:
    g6, r, spec, mode, samples, seed = args
    g = decode_graph6(g6)
    cert = lovasz_condition(g, r, spec=spec, mode=mode, samples=samples, seed=seed)
    d = asdict(cert)
    d.pop("elapsed_ms")  # keep result files byte-identical across runs
    return d


def _status_of(cert: dict, mode: str) -> tuple[str, str | None]:
    if not cert["condition_holds"]:
        return "violated", None
    if not cert["edge_colorable"]:
        return "filtered", f"condition holds but graph is not {cert['r']}-edge-colourable"
    return ("counterexample", None) if mode == "full" else ("candidate", "sampled check only")


class _Deduper:
    def __init__(self):
        self.buckets: dict[str, list[tuple[int, Graph]]] = {}

    def check(self, key: str, g: Graph) -> tuple[int, list[int]] | None:
        for idx, h in self.buckets.get(key, ()):
            same, mapping = isomorphic(g, h)
            if same:
                return idx, mapping
        return None

    def add(self, key: str, idx: int, g: Graph) -> None:
        self.buckets.setdefault(key, []).append((idx, g))


def _prepare(index: int, spec: FamilySpec, cfg: SearchConfig, dedupe: _Deduper):
    """Either a finished record, or (record stub, graph6) awaiting verification."""
    text = str(spec)
    try:
        g = build(spec)
    except LovaszError as exc:
        return SearchRecord(index, text, "filtered", reason=f"{type(exc).__name__}: {exc}"), None, None
    except Exception as exc:  # noqa: BLE001
        return SearchRecord(index, text, "error", reason=f"{type(exc).__name__}: {exc}"), None, None
    fp = fingerprint(g)
    rec = SearchRecord(index, text, "filtered", fingerprint=list(fp))
    if g.regular_degree() != cfg.r:
        rec.reason = f"not {cfg.r}-regular"
        return rec, None, None
    if cfg.connected and not is_connected(g):
        rec.reason = "disconnected"
        return rec, None, None
    if cfg.girth_min and fp[2] is not None and fp[2] < cfg.girth_min:
        rec.reason = f"girth {fp[2]} < {cfg.girth_min}"
        return rec, None, None
    key = _fp_key(fp)
    if cfg.dedupe:
        hit = dedupe.check(key, g)
        if hit is not None:
            rec.status = "duplicate"
            rec.duplicate_of, rec.isomorphism = hit[0], list(hit[1])
            return rec, None, None
        dedupe.add(key, index, g)
    return rec, g, encode_graph6(g)


def _replay(path: Path, cfg: SearchConfig, dedupe: _Deduper) -> int:
    """Check the header, drop a torn last line, and rebuild dedupe buckets."""
    raw = path.read_text()
    lines = raw.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    elif lines:
        log.warning("dropping incomplete trailing line in %s", path)
        lines.pop()
    if not lines:
        return -1
    try:
        header = json.loads(lines[0])
    except json.JSONDecodeError as exc:
        raise ResumeMismatch(f"{path}: unreadable header") from exc
    if header.get("config") != cfg.identity():
        raise ResumeMismatch(f"{path} was produced by a different search configuration")
    records = []
    for ln in lines[1:]:
        try:
            records.append(json.loads(ln))
        except json.JSONDecodeError:
            break
    with path.open("w") as fh:
        fh.write(lines[0] + "\n")
        for ln in lines[1 : 1 + len(records)]:
            fh.write(ln + "\n")
    if cfg.dedupe:
        for rec in records:
            if rec.get("certificate") is not None:
                dedupe.add(_fp_key(rec["fingerprint"]), rec["index"], build(rec["spec"]))
    return len(records)


@dataclass
class SearchSummary:
    path: str
    total: int = 0
    skipped: int = 0
    counts: dict = field(default_factory=dict)
    counterexamples: list[str] = field(default_factory=list)


def run_search(cfg: SearchConfig, batch: int = 32) -> SearchSummary:
    """Run (or resume) a sweep; returns counts by status."""
    path = Path(cfg.output)
    dedupe = _Deduper()
    done = 0
    if cfg.resume and path.exists() and path.stat().st_size:
        done = _replay(path, cfg, dedupe)
    if done <= 0:
        done = 0
        path.write_text(json.dumps({"config": cfg.identity(), "tool_version": __version__}, sort_keys=True) + "\n")

    summary = SearchSummary(str(path), skipped=done)
    specs: Iterable[FamilySpec] = enumerate_specs(cfg)
    if cfg.limit is not None:
        specs = itertools.islice(specs, cfg.limit)
    specs = enumerate(specs)
    specs = itertools.islice(specs, done, None)

    executor = ProcessPoolExecutor(max_workers=cfg.workers) if cfg.workers > 1 else None
    try:
        while True:
            chunk = list(itertools.islice(specs, batch))
            if not chunk:
                break
            prepared = [_prepare(i, s, cfg, dedupe) for i, s in chunk]
            jobs = [(g6, cfg.r, rec.spec, cfg.mode, cfg.samples, cfg.seed) for rec, g, g6 in prepared if g6 is not None]
            results = iter(executor.map(_verify_job, jobs) if executor else map(_verify_job, jobs))
            with path.open("a") as fh:
                for rec, g, g6 in prepared:
                    if g6 is not None:
                        cert = next(results)
                        rec.certificate = cert
                        rec.status, rec.reason = _status_of(cert, cfg.mode)
                    fh.write(rec.to_json() + "\n")
                    summary.counts[rec.status] = summary.counts.get(rec.status, 0) + 1
                    if rec.status == "counterexample":
                        summary.counterexamples.append(rec.spec)
                    summary.total += 1
    finally:
        if executor is not None:
            executor.shutdown()
    return summary


def read_results(path: str | Path) -> tuple[dict, list[dict]]:
    lines = Path(path).read_text().splitlines()
    return json.loads(lines[0]), [json.loads(ln) for ln in lines[1:]]


# ---------------------------------------------------------------------------
# corpus reports


@dataclass(frozen=True)
class CorpusEntry:
    name: str
    table: int
    r: int
    expected: dict
    spec: str | None = None
    graph6_file: str | None = None
    status: str = "ok"
    note: str = ""


def load_corpus(directory: str | Path | None = None) -> list[CorpusEntry]:
    d = Path(directory) if directory is not None else DATA_DIR
    path = d / "corpus.json"
    if not path.exists():
        raise CorpusEntryMissing(f"no corpus.json in {d}")
    data = json.loads(path.read_text())
    return [CorpusEntry(**e) for e in data["entries"]]


def corpus_graph(entry: CorpusEntry, directory: str | Path | None = None) -> Graph:
    d = Path(directory) if directory is not None else DATA_DIR
    if entry.spec:
        return build(entry.spec, base_dir=d)
    if entry.graph6_file:
        p = d / entry.graph6_file
        if not p.exists():
            raise CorpusEntryMissing(f"{entry.name}: {p} not found")
        return read_graph6_file(p)[0]
    raise CorpusEntryMissing(f"{entry.name}: no construction available ({entry.note})")


@dataclass
class ReportRow:
    entry: CorpusEntry
    computed: dict | None
    matches: dict
    certificate: str
    available: bool
    reason: str = ""

    @property
    def ok(self) -> bool:
        return self.available and all(v is not False for v in self.matches.values())


@dataclass
class TableReport:
    rows: list[ReportRow]

    def render(self) -> str:
        head = f"{'table':>5}  {'graph':<28} {'order':>9} {'diam':>7} {'girth':>7} {'hamilt.':>9} {'colour':>7}  certificate"
        out = [head, "-" * len(head)]
        for row in self.rows:
            e = row.entry
            if not row.available:
                out.append(f"{e.table:>5}  {e.name:<28} {'not available: ' + row.reason}")
                continue
            c, x = row.computed, e.expected

            def cell(key):
                got = c[key]
                mark = "" if row.matches.get(key) is not False else "!"
                if key == "hamiltonian":
                    got = {True: "yes", False: "no", None: "unknown"}[got]
                return f"{got}{mark}"

            out.append(
                f"{e.table:>5}  {e.name:<28} {cell('order'):>9} {cell('diameter'):>7} {cell('girth'):>7} "
                f"{cell('hamiltonian'):>9} {str(c['edge_colorable']).lower():>7}  {row.certificate}"
            )
        out.append("('!' marks a mismatch with the expected value)")
        return "\n".join(out)

    def as_dict(self) -> list[dict]:
        return [
            {"name": r.entry.name, "available": r.available, "computed": r.computed,
             "expected": r.entry.expected, "matches": r.matches, "certificate": r.certificate,
             "reason": r.reason}
            for r in self.rows
        ]


def table_report(
    corpus: Iterable[CorpusEntry] | None = None,
    directory: str | Path | None = None,
    *,
    verify: str = "none",
    samples: int = 2000,
    ham_budget: int = 2_000_000,
) -> TableReport:
    """Recompute and compare.  ``verify``: ``none``, ``auto`` (full for r=3,
    sampled for r=4) or ``full``."""
    entries = list(corpus) if corpus is not None else load_corpus(directory)
    rows = []
    for e in entries:
        try:
            g = corpus_graph(e, directory)
        except CorpusEntryMissing as exc:
            rows.append(ReportRow(e, None, {}, "n/a", False, str(exc).split(": ", 1)[-1]))
            continue
        gi, di = girth(g), diameter(g)
        ham = hamiltonian(g, node_budget=ham_budget)
        computed = {
            "order": g.order,
            "diameter": None if di == INF else int(di),
            "girth": None if gi == INF else int(gi),
            "hamiltonian": None if ham.status == UNKNOWN else ham.status == "yes",
            "edge_colorable": edge_colorable(g, e.r) is not None,
        }
        matches = {k: computed[k] == v for k, v in e.expected.items() if k in computed}
        if computed["hamiltonian"] is None:
            matches["hamiltonian"] = None  # budget exhausted: neither match nor mismatch
        cert = "not run"
        if verify != "none":
            mode = "full" if (verify == "full" or e.r == 3) else "sample"
            c = lovasz_condition(g, e.r, spec=e.spec or e.name, mode=mode, samples=samples, with_ryser=False)
            cert = ("holds" if c.condition_holds else "violated") + f" ({mode}, {c.checks_done}/{c.checks_total})"
        rows.append(ReportRow(e, computed, matches, cert, True))
    return TableReport(rows)
