"""Enumerate, classify and persist small connected graphs.

Generation is by vertex augmentation with canonical-deletion acceptance: a
child on m+1 vertices produced from a connected parent by attaching a new
vertex to a set of old ones is kept only when the new vertex sits in the same
automorphism orbit as the child's canonical deletion choice (a non-cut vertex
of maximal invariant, ties broken by canonical position).  Together with
trying one attachment set per parent-automorphism orbit this emits exactly one
representative per isomorphism class, connectivity built in.

Most candidates are rejected before any canonical labelling is computed: the
invariant comparison plus one or two connectivity probes settles them.

The census pipeline applies the cheap-first conduction-isomorphism chain to a
stream of graphs, accumulates per-order counts, and can persist records as an
append-only CSV with a graph6 sidecar and a completed-shard manifest so that
interrupted runs resume without recomputation.
"""

from __future__ import annotations

import csv
import hashlib
import io
from dataclasses import dataclass, field
from pathlib import Path

from .classify import classification_report, conduction_isomorphism
from .graphs import (Graph, Graph6Error, from_graph6, is_bipartite, is_chemical,
                     is_connected, to_graph6)
from .isomorphism import canonical_data, canonical_form

MAX_BUILTIN_CONNECTED = 10
MAX_BUILTIN_CHEMICAL = 16


# ---------------------------------------------------------------------------
# generation engine
# ---------------------------------------------------------------------------

def _neighbor_degree_key(rows, degs, v):
    out = []
    m = rows[v]
    while m:
        u = (m & -m).bit_length() - 1
        out.append(degs[u])
        m &= m - 1
    out.sort()
    return tuple(out)


def _connected_without(rows, n, v):
    """Is the graph minus vertex v still connected?"""
    if n <= 2:
        return True
    alive = ((1 << n) - 1) & ~(1 << v)
    start = (alive & -alive).bit_length() - 1
    seen = 1 << start
    frontier = seen
    while frontier:
        nxt = 0
        m = frontier
        while m:
            u = (m & -m).bit_length() - 1
            nxt |= rows[u]
            m &= m - 1
        nxt &= alive
        frontier = nxt & ~seen
        seen |= nxt
    return seen == alive


def _subset_orbit_reps(masks, generators, n):
    """One representative per orbit of the attachment sets under Aut(parent)."""
    if not generators:
        return masks
    reps = []
    seen = set()
    for mask in masks:
        if mask in seen:
            continue
        reps.append(mask)
        stack = [mask]
        seen.add(mask)
        while stack:
            cur = stack.pop()
            for g in generators:
                img = 0
                m = cur
                while m:
                    v = (m & -m).bit_length() - 1
                    img |= 1 << g[v]
                    m &= m - 1
                if img not in seen:
                    seen.add(img)
                    stack.append(img)
    return reps


def _accepts(rows, n, w):
    """Canonical-deletion acceptance for new vertex w (= n-1).

    The canonical deletion choice is the non-cut vertex maximising
    (degree, sorted neighbour degrees), ties broken by canonical position.
    Checks run lazily from cheapest to dearest: degree comparison, one
    connectivity probe per potentially outranking vertex, neighbour keys
    only inside the tied degree class, and a full canonical labelling only
    when real ties remain.  Returns (accepted, canonical data or None);
    the data is reused for the accepted child's own augmentation orbits.
    """
    degs = [r.bit_count() for r in rows]
    w_deg = degs[w]
    same = []
    for v in range(n - 1):
        if degs[v] > w_deg:
            if _connected_without(rows, n, v):
                return False, None
        elif degs[v] == w_deg:
            same.append(v)
    if not same:
        return True, None
    w_key = _neighbor_degree_key(rows, degs, w)
    ties = []
    for v in same:
        key = _neighbor_degree_key(rows, degs, v)
        if key > w_key:
            if _connected_without(rows, n, v):
                return False, None
        elif key == w_key and _connected_without(rows, n, v):
            ties.append(v)
    if not ties:
        return True, None
    data = canonical_data(Graph(n, rows))
    ties.append(w)
    delta = max(ties, key=lambda v: data.labeling[v])
    return data.orbits[w] == data.orbits[delta], data


def _grow(rows, n, n_target, data, degree_cap, regular, sizes_cap):
    """Depth-first canonical-path generation; yields graphs at n_target."""
    if n == n_target:
        yield Graph(n, rows)
        return
    if degree_cap is None:
        eligible = list(range(n))
    else:
        eligible = [v for v in range(n) if rows[v].bit_count() < degree_cap]
    masks = []
    limit = sizes_cap or n
    # enumerate subsets of the eligible set, skipping sizes > limit
    k = len(eligible)
    for sub in range(1, 1 << k):
        if sub.bit_count() > limit:
            continue
        mask = 0
        m = sub
        while m:
            i = (m & -m).bit_length() - 1
            mask |= 1 << eligible[i]
            m &= m - 1
        masks.append(mask)
    masks.sort()
    if data is None:
        data = canonical_data(Graph(n, rows))
    for mask in _subset_orbit_reps(masks, data.generators, n):
        child = [r for r in rows]
        m = mask
        while m:
            v = (m & -m).bit_length() - 1
            child[v] |= 1 << n
            m &= m - 1
        child.append(mask)
        if regular is not None:
            deficit = sum(max(0, regular - r.bit_count()) for r in child)
            if deficit > regular * (n_target - n - 1):
                continue
        ok, child_data = _accepts(child, n + 1, n)
        if not ok:
            continue
        if n + 1 == n_target:
            if regular is not None and any(
                    r.bit_count() != regular for r in child):
                continue
            yield Graph(n + 1, child)
        else:
            yield from _grow(child, n + 1, n_target, child_data,
                             degree_cap, regular, sizes_cap)


def enumerate_connected(n: int):
    """All connected simple graphs on n vertices, one per isomorphism class.

    Built-in generation supports 1 <= n <= 10; feed larger orders through
    :func:`ingest_graph6`.
    """
    if not 1 <= n <= MAX_BUILTIN_CONNECTED:
        raise ValueError(f"built-in generation supports 1..{MAX_BUILTIN_CONNECTED}, "
                         f"got {n}")
    yield from _grow([0], 1, n, None, None, None, None)


def enumerate_chemical(n: int, regular: int | None = None):
    """All chemical graphs (connected, max degree <= 3) on n vertices.

    ``regular=3`` restricts the output to cubic graphs, with degree-deficit
    pruning making the restricted run far cheaper than the full sweep.
    Built-in generation supports 1 <= n <= 16.
    """
    if not 1 <= n <= MAX_BUILTIN_CHEMICAL:
        raise ValueError(f"built-in generation supports 1..{MAX_BUILTIN_CHEMICAL}, "
                         f"got {n}")
    if regular is not None and regular != 3:
        raise ValueError("only regular=3 is supported")
    if regular == 3 and (n < 4 or n % 2):
        return
    yield from _grow([0], 1, n, None, 3, regular, 3)


def ingest_graph6(path, on_error=None, dedupe: bool = False):
    """Stream graphs from a file of graph6 lines.

    Parse failures do not stop the stream: each is reported to ``on_error``
    (line number, message) and skipped.  ``dedupe`` drops isomorphic repeats
    via canonical forms.
    """
    seen = set() if dedupe else None
    with open(path, "rb") as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.strip()
            if not line:
                continue
            try:
                g = from_graph6(line)
            except Graph6Error as exc:
                if on_error is not None:
                    on_error(lineno, str(exc))
                continue
            if seen is not None:
                form = canonical_form(g)
                if form in seen:
                    continue
                seen.add(form)
            yield g


# ---------------------------------------------------------------------------
# records and summaries
# ---------------------------------------------------------------------------

CSV_HEADER = "n,graph6,nullity,cond_iso,bipartite,chemical,nut,ipso_omni_ins,class_code"


@dataclass(frozen=True)
class CensusRecord:
    n: int
    graph6: str
    nullity: int
    cond_iso: bool
    bipartite: bool
    chemical: bool
    nut: bool
    ipso_omni_ins: bool
    class_code: str

    def csv_row(self) -> str:
        flags = [self.cond_iso, self.bipartite, self.chemical, self.nut,
                 self.ipso_omni_ins]
        return ",".join([str(self.n), self.graph6, str(self.nullity)]
                        + [str(int(f)) for f in flags] + [self.class_code])


@dataclass
class CensusSummary:
    counts: dict = field(default_factory=dict)  # n -> [total, ci, ci_nonbip]

    def add(self, n: int, cond_iso: bool, non_bipartite: bool):
        row = self.counts.setdefault(n, [0, 0, 0])
        row[0] += 1
        if cond_iso:
            row[1] += 1
            if non_bipartite:
                row[2] += 1

    def merge(self, other: "CensusSummary"):
        for n, row in other.counts.items():
            mine = self.counts.setdefault(n, [0, 0, 0])
            for i in range(3):
                mine[i] += row[i]

    def row(self, n: int) -> tuple[int, int, int]:
        return tuple(self.counts.get(n, [0, 0, 0]))


def census_record(g: Graph) -> CensusRecord:
    """Full classification record with a canonically labelled graph6 key."""
    data = canonical_data(g)
    report = classification_report(g)
    return CensusRecord(
        n=g.n,
        graph6=to_graph6(g.relabel(data.labeling)),
        nullity=report.nullity,
        cond_iso=report.is_conduction_isomorphic,
        bipartite=is_bipartite(g),
        chemical=is_chemical(g),
        nut=report.is_nut,
        ipso_omni_ins=report.is_ipso_omni_insulator,
        class_code=report.code.three_letter,
    )


def run_census(source, record_all: bool = False, on_skip=None):
    """Classify a stream of graphs.

    Returns (summary, records); records cover the conduction-isomorphic
    positives, or every graph when ``record_all`` is set, sorted by order and
    canonical graph6.  Disconnected or looped input is skipped with a
    diagnostic through ``on_skip``.
    """
    summary = CensusSummary()
    records = []
    for g in source:
        if not g.is_simple() or not is_connected(g):
            if on_skip is not None:
                on_skip(g, "input graph must be connected and simple")
            continue
        witness = conduction_isomorphism(g)
        cond_iso = witness is not None
        non_bip = cond_iso and not is_bipartite(g)
        summary.add(g.n, cond_iso, non_bip)
        if cond_iso or record_all:
            rec = census_record(g)
            if cond_iso:
                # Corollary chain for every positive
                assert rec.nullity == 0 and rec.ipso_omni_ins
                assert sorted(g.degree(v) for v in range(g.n)) == \
                    sorted(g.degree(witness[v]) for v in range(g.n))
            records.append(rec)
    records.sort(key=lambda r: (r.n, r.graph6))
    return summary, records


# ---------------------------------------------------------------------------
# persistence: append-only CSV + graph6 sidecar + shard manifest
# ---------------------------------------------------------------------------

def _shard_of(g6: str, shards: int) -> int:
    digest = hashlib.sha256(g6.encode("ascii")).digest()
    return int.from_bytes(digest[:4], "big") % shards


def _shard_job(args):
    mode, n, shard, shards, record_all, source_path = args
    if source_path is not None:
        source = ingest_graph6(source_path)
    elif mode == "connected":
        source = enumerate_connected(n)
    else:
        source = enumerate_chemical(n)
    stream = (g for g in source if _shard_of(to_graph6(g), shards) == shard)
    summary, records = run_census(stream, record_all=record_all)
    buf = io.StringIO()
    for rec in records:
        buf.write(rec.csv_row() + "\n")
    return shard, summary, records, buf.getvalue()


class CensusStore:
    """Per-order census files in a directory.

    ``census_n<k>.csv`` accumulates records (header once), ``positives_n<k>.g6``
    the conduction-isomorphic graphs, and ``manifest_n<k>.txt`` one line
    ``shard_id,count,checksum`` per completed shard.  Re-running skips
    completed shards; every shard's bytes are reproducible.
    """

    def __init__(self, outdir, n: int):
        self.dir = Path(outdir)
        self.dir.mkdir(parents=True, exist_ok=True)
        self.n = n
        self.csv_path = self.dir / f"census_n{n}.csv"
        self.sidecar_path = self.dir / f"positives_n{n}.g6"
        self.manifest_path = self.dir / f"manifest_n{n}.txt"

    def completed_shards(self) -> set[int]:
        if not self.manifest_path.exists():
            return set()
        done = set()
        for line in self.manifest_path.read_text().splitlines():
            if line.strip():
                done.add(int(line.split(",")[0]))
        return done

    def append_shard(self, shard: int, records, csv_text: str):
        if not self.csv_path.exists():
            self.csv_path.write_text(CSV_HEADER + "\n")
        with open(self.csv_path, "a") as fh:
            fh.write(csv_text)
        with open(self.sidecar_path, "a") as fh:
            for rec in records:
                if rec.cond_iso:
                    fh.write(rec.graph6 + "\n")
        checksum = hashlib.sha256(csv_text.encode()).hexdigest()[:16]
        with open(self.manifest_path, "a") as fh:
            fh.write(f"{shard},{len(records)},{checksum}\n")


def run_census_persistent(mode: str, n: int, outdir, shards: int = 4,
                          jobs: int = 1, record_all: bool = False,
                          source_path=None) -> CensusSummary:
    """Sharded, resumable census for one order; returns the merged summary.

    Shards are processed in increasing id order (in parallel when jobs > 1)
    so completed output files are byte-stable across reruns.
    """
    if mode not in ("connected", "chemical"):
        raise ValueError("mode must be 'connected' or 'chemical'")
    store = CensusStore(outdir, n)
    done = store.completed_shards()
    todo = [s for s in range(shards) if s not in done]
    args = [(mode, n, s, shards, record_all, source_path) for s in todo]
    summary = CensusSummary()
    if jobs > 1 and len(args) > 1:
        import multiprocessing
        with multiprocessing.Pool(jobs) as pool:
            for shard, part, records, csv_text in pool.imap(_shard_job, args):
                summary.merge(part)
                store.append_shard(shard, records, csv_text)
    else:
        for job in args:
            shard, part, records, csv_text = _shard_job(job)
            summary.merge(part)
            store.append_shard(shard, records, csv_text)
    return summary


def read_summary(outdir, n: int) -> CensusSummary:
    """Rebuild a summary from a completed per-order CSV (record_all runs)."""
    store = CensusStore(outdir, n)
    summary = CensusSummary()
    with open(store.csv_path) as fh:
        for row in csv.DictReader(fh):
            summary.add(int(row["n"]), row["cond_iso"] == "1",
                        row["cond_iso"] == "1" and row["bipartite"] == "0")
    return summary


# ---------------------------------------------------------------------------
# family coverage of chemical positives
# ---------------------------------------------------------------------------

@dataclass
class CoverageReport:
    matched: dict          # graph6 -> family tag
    residuals: list        # graph6 strings not matched by any family


def _family_members(n: int, cdc_bases) -> dict:
    """Canonical forms of every family member on n vertices, tagged."""
    from . import families
    members = {}

    def put(g, tag):
        members.setdefault(canonical_form(g), tag)

    if n % 2 == 0 and n >= 2:
        put(families.comb(n // 2), "corona(path)")
        if n >= 6:
            put(families.radialene(n // 2), "corona(cycle)")
    if n % 4 == 0 and n >= 8:
        put(families.min_deg2_graph(n // 4), "min_deg2")
    if n % 2 == 0 and n >= 6:
        k = n // 2
        if 2 * k - 3 <= 3:  # only chemical members matter here
            put(families.large_min_deg_graph(k), "large_min_deg")
    if (n + 4) % 4 == 0 and n >= 8:
        put(families.appendix_family_graph((n + 4) // 4), "appendix")
    for base in cdc_bases:
        if 2 * base.n == n:
            put(families.canonical_double_cover(base), "cdc")
    return members


def verify_family_coverage(records, n_max: int) -> CoverageReport:
    """Match chemical census positives against the constructive families.

    ``records`` are census records; conduction-isomorphic chemical entries up
    to ``n_max`` are compared by canonical form against generated family
    members of the same order (canonical double covers are built over the
    non-bipartite positives of half the order).
    """
    positives = [r for r in records
                 if r.cond_iso and r.chemical and r.n <= n_max]
    by_n = {}
    for rec in positives:
        by_n.setdefault(rec.n, []).append(rec)
    matched = {}
    residuals = []
    nonbip_graphs = {}  # order -> list of Graph
    for n in sorted(by_n):
        cdc_bases = []
        for m, graphs in nonbip_graphs.items():
            if 2 * m == n:
                cdc_bases = graphs
        members = _family_members(n, cdc_bases)
        for rec in by_n[n]:
            g = from_graph6(rec.graph6)
            if not rec.bipartite:
                nonbip_graphs.setdefault(n, []).append(g)
            tag = members.get(canonical_form(g))
            if tag is None:
                residuals.append(rec.graph6)
            else:
                matched[rec.graph6] = tag
    return CoverageReport(matched=matched, residuals=residuals)
