"""Enumeration, census pipeline, persistence, family coverage."""

import csv
import io

import pytest

from condgraph.census import (CensusStore, census_record, enumerate_chemical,
                              enumerate_connected, ingest_graph6, run_census,
                              run_census_persistent, verify_family_coverage)
from condgraph.fixtures import fixture
from condgraph.graphs import Graph, from_graph6, to_graph6
from condgraph.isomorphism import canonical_form


CONNECTED_COUNTS = {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112, 7: 853}
CHEMICAL_COUNTS = {1: 1, 2: 1, 3: 2, 4: 6, 5: 10, 6: 29, 7: 64, 8: 194,
                   9: 531, 10: 1733}
CUBIC_COUNTS = {4: 1, 6: 2, 8: 5, 10: 19}


def test_enumerate_connected_counts():
    for n, count in CONNECTED_COUNTS.items():
        graphs = list(enumerate_connected(n))
        assert len(graphs) == count
        if n <= 6:
            assert len({canonical_form(g) for g in graphs}) == count


def test_enumerate_chemical_counts():
    for n, count in CHEMICAL_COUNTS.items():
        graphs = list(enumerate_chemical(n))
        assert len(graphs) == count
        assert all(max(g.degree(v) for v in range(g.n)) <= 3 for g in graphs)


def test_enumerate_cubic_counts():
    for n, count in CUBIC_COUNTS.items():
        graphs = list(enumerate_chemical(n, regular=3))
        assert len(graphs) == count
        assert all(all(g.degree(v) == 3 for v in range(g.n)) for g in graphs)
    assert list(enumerate_chemical(5, regular=3)) == []


def test_enumerate_range_errors():
    with pytest.raises(ValueError):
        list(enumerate_connected(11))
    with pytest.raises(ValueError):
        list(enumerate_connected(0))
    with pytest.raises(ValueError):
        list(enumerate_chemical(17))


def test_ingest_graph6(tmp_path):
    graphs = list(enumerate_connected(4))
    path = tmp_path / "four.g6"
    path.write_text("".join(to_graph6(g) + "\n" for g in graphs))
    assert len(list(ingest_graph6(path))) == 6

    empty = tmp_path / "empty.g6"
    empty.write_text("")
    assert list(ingest_graph6(empty)) == []

    corrupt = tmp_path / "corrupt.g6"
    lines = [to_graph6(g) for g in graphs]
    lines.insert(3, "###not graph6###")
    corrupt.write_text("\n".join(lines) + "\n")
    errors = []
    out = list(ingest_graph6(corrupt, on_error=lambda ln, msg: errors.append(ln)))
    assert len(out) == 6
    assert errors == [4]


def test_ingest_dedupe(tmp_path):
    p4 = to_graph6(from_graph6("Ch"))
    relabeled = to_graph6(from_graph6("Ch").relabel([3, 2, 1, 0]))
    path = tmp_path / "dup.g6"
    path.write_text(f"{p4}\n{relabeled}\n")
    assert len(list(ingest_graph6(path))) == 2
    assert len(list(ingest_graph6(path, dedupe=True))) == 1


def test_run_census_small_rows():
    summary, records = run_census(enumerate_connected(4))
    assert summary.row(4) == (6, 1, 0)
    assert len(records) == 1
    assert records[0].class_code == "XII0"
    assert records[0].cond_iso and records[0].bipartite and records[0].chemical

    summary, _ = run_census(enumerate_connected(5))
    assert summary.row(5) == (21, 0, 0)


def test_run_census_skips_bad_input():
    bad = Graph.from_edges(4, [(0, 1), (2, 3)])
    skipped = []
    summary, _ = run_census(iter([bad]), on_skip=lambda g, msg: skipped.append(msg))
    assert summary.counts == {}
    assert len(skipped) == 1


def test_census_record_csv_round_trip():
    rec = census_record(fixture("radialene3"))
    text = "n,graph6,nullity,cond_iso,bipartite,chemical,nut,ipso_omni_ins,class_code\n" \
        + rec.csv_row() + "\n"
    rows = list(csv.DictReader(io.StringIO(text)))
    assert rows[0]["n"] == "6"
    assert rows[0]["cond_iso"] == "1"
    assert rows[0]["bipartite"] == "0"
    assert rows[0]["class_code"] == rec.class_code
    # graph6 column is canonically labelled: decoding and re-canonicalising
    # is a fixed point
    g = from_graph6(rows[0]["graph6"])
    assert canonical_form(g) == canonical_form(fixture("radialene3"))


def test_record_all_flag():
    summary, records = run_census(enumerate_connected(4), record_all=True)
    assert len(records) == 6
    assert sum(r.cond_iso for r in records) == 1


def test_persistent_census_and_resume(tmp_path):
    outdir = tmp_path / "census"
    s1 = run_census_persistent("connected", 5, outdir, shards=3)
    assert s1.row(5) == (21, 0, 0)
    store = CensusStore(outdir, 5)
    assert store.completed_shards() == {0, 1, 2}
    csv_bytes = store.csv_path.read_bytes()
    manifest = store.manifest_path.read_bytes()
    # a re-run skips everything and leaves files untouched
    s2 = run_census_persistent("connected", 5, outdir, shards=3)
    assert s2.counts == {}
    assert store.csv_path.read_bytes() == csv_bytes
    assert store.manifest_path.read_bytes() == manifest
    # manifest rows are shard,count,checksum
    for line in manifest.decode().splitlines():
        shard, count, checksum = line.split(",")
        assert int(shard) in (0, 1, 2) and int(count) >= 0 and len(checksum) == 16


def test_persistent_census_partial_resume(tmp_path):
    outdir = tmp_path / "census"
    run_census_persistent("connected", 6, outdir, shards=4)
    store = CensusStore(outdir, 6)
    full = store.csv_path.read_text()
    # simulate an interrupted run: keep only the first shard's output
    lines = store.manifest_path.read_text().splitlines()
    store.manifest_path.write_text(lines[0] + "\n")
    first_count = int(lines[0].split(",")[1])
    kept = full.splitlines()[:1 + first_count]
    store.csv_path.write_text("\n".join(kept) + ("\n" if kept else ""))
    s = run_census_persistent("connected", 6, outdir, shards=4)
    assert store.csv_path.read_text() == full
    assert store.completed_shards() == {0, 1, 2, 3}
    # the resumed run only counted the reprocessed shards
    assert s.row(6)[0] < 112


def test_persistent_census_parallel(tmp_path):
    outdir = tmp_path / "par"
    s = run_census_persistent("chemical", 6, outdir, shards=4, jobs=2)
    assert s.row(6) == (29, 3, 1)


def test_sidecar_contains_positives(tmp_path):
    outdir = tmp_path / "census"
    run_census_persistent("connected", 6, outdir, shards=2)
    store = CensusStore(outdir, 6)
    sidecar = store.sidecar_path.read_text().split()
    assert len(sidecar) == 4
    forms = {canonical_form(from_graph6(s)) for s in sidecar}
    assert len(forms) == 4


def test_verify_family_coverage_chemical_upto_8():
    records = []
    for n in range(1, 9):
        _, recs = run_census(enumerate_chemical(n))
        records.extend(recs)
    report = verify_family_coverage(records, 8)
    residual_forms = {canonical_form(from_graph6(s)) for s in report.residuals}
    expected = {canonical_form(fixture("ladder_l3")), canonical_form(fixture("e8"))}
    assert residual_forms == expected
    assert set(report.matched.values()) >= {"corona(path)", "corona(cycle)",
                                            "min_deg2", "appendix"}
