"""Journal round-trips and resume-by-replay behavior."""

import json

from regorb.classify import classify_row
from regorb.serial import Journal, row_record, run_rows


def test_journal_roundtrip(tmp_path):
    j = Journal(tmp_path / "sub" / "journal.jsonl")
    j.append({"kind": "note", "x": 1})
    j.append({"kind": "row", "row": 62, "census": {"minus": [2, 48]}})
    j.append({"kind": "row", "row": 62, "census": {"minus": [9, 9]}})
    recs = j.records()
    assert len(recs) == 3
    # the latest record for a row wins
    assert j.completed_rows()[62]["census"] == {"minus": [9, 9]}


def test_row_record_serializes(tmp_path):
    rr = classify_row(62)
    rec = row_record(rr)
    text = json.dumps(rec)
    back = json.loads(text)
    assert back["row"] == 62
    assert back["matches_reference"] is True
    assert back["census"] == {"minus": [2, 48]}
    assert back["num"] == 2 and back["max_order"] == 48
    # the full survey rides along
    cands = back["modes"]["minus"]["candidates"]
    assert sum(1 for c in cands if c["counted"]) == 2


def test_run_rows_replays_finished(tmp_path):
    j = Journal(tmp_path / "journal.jsonl")
    marker = {"kind": "row", "row": 63, "census": {"synthetic": [7, 7]}}
    j.append(marker)
    out = run_rows([63], journal=j)
    assert out[0]["census"] == {"synthetic": [7, 7]}  # replayed, not recomputed
    assert len(j.records()) == 1  # nothing appended


def test_run_rows_appends_new(tmp_path):
    j = Journal(tmp_path / "journal.jsonl")
    out = run_rows([62], journal=j)
    assert out[0]["row"] == 62
    assert j.completed_rows()[62]["census"] == {"minus": [2, 48]}
    # a second call replays instead of recomputing
    again = run_rows([62], journal=j)
    assert again[0] == j.completed_rows()[62]
    assert len(j.records()) == 1
