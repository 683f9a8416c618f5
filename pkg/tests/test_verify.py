"""Report schema, claim running, and the dedicated verifiers."""

import json

import pytest

from collatzlab.actions import ModelId
from collatzlab.catalog import build_claims
from collatzlab.errors import UnknownClaim
from collatzlab.search import SearchBounds
from collatzlab.verify import (CSV_HEADER, Failure, VerifyReport,
                               all_claim_ids, build_witness,
                               descending_witness, run_any_claim, verify_claim,
                               verify_cluster, verify_descending,
                               verify_edge_loop, verify_succession)


def test_report_json_schema():
    report = verify_claim("L.10-11", range(1, 6))
    data = json.loads(report.to_json())
    assert set(data) == {"claim_id", "model", "range", "pass", "fail",
                         "skipped", "failures", "bounds"}
    assert data["claim_id"] == "L.10-11"
    assert data["model"] == "M1"
    assert data["range"] == [1, 5]
    assert data["pass"] == 5 and data["fail"] == 0 and data["skipped"] == 0
    # timing is opt-in, never in the default payload
    assert "wall_ms" not in data
    assert "wall_ms" in json.loads(report.to_json(include_timing=True))


def test_report_csv_row():
    report = verify_claim("L.10-11", range(1, 6))
    assert CSV_HEADER == "claim_id,model,lo,hi,pass,fail,skipped"
    assert report.csv_row() == "L.10-11,M1,1,5,5,0,0"


def test_failure_payload_is_replayable():
    failure = Failure(7, 3, "endpoint mismatch", [7, 22, 11])
    d = failure.to_dict()
    assert d == {"input": 7, "step_index": 3, "reason": "endpoint mismatch",
                 "trace": ["7", "22", "11"]}


def test_unknown_claim():
    with pytest.raises(UnknownClaim):
        verify_claim("L.no-such", range(1, 2))


def test_conditional_claims_skip_inapplicable_inputs():
    report = verify_claim("L.21-11.even", range(1, 11))
    assert report.passed == 5 and report.skipped == 5 and report.failed == 0


def test_inverse_claims_replay_backward():
    report = verify_claim("L.11-21.even", range(1, 21))
    assert report.failed == 0
    assert report.passed == 10  # even A only


def test_build_witness_validates():
    claims = build_claims()
    witness = build_witness(claims["L.10-11"], 5)
    assert witness.start == 48 and witness.end == 49
    assert witness.validate()


def test_node_loop_closes_cycles():
    report = verify_claim("T.node-loop", range(1, 101))
    assert report.failed == 0, [f.to_dict() for f in report.failures]


def test_succession_endpoints_and_flag_count():
    report = verify_succession(1, range(1, 1001))
    assert report.failed == 0
    assert report.claim_id == "T.succ1"
    assert report.model == "M2"
    assert "nonpositive_intermediate_inputs" in report.bounds
    with pytest.raises(ValueError):
        verify_succession(5, range(1, 2))


def test_cluster_mutual_reachability_small():
    for kind in ("five", "three", "nine"):
        report = verify_cluster(kind, range(1, 21))
        assert report.failed == 0, (kind, report.failures[:2])
    assert verify_cluster("five", range(0, 2)).skipped == 1  # k=0 skipped
    with pytest.raises(ValueError):
        verify_cluster("seven", range(1, 2))


def test_descending_witnesses():
    for model in (ModelId.MS, ModelId.M1):
        report = verify_descending(model, range(2, 201))
        assert report.failed == 0
    # a=1 is skipped: nothing below 1 to descend to
    assert verify_descending(ModelId.MS, range(1, 3)).skipped == 1
    with pytest.raises(ValueError):
        verify_descending(ModelId.M0, range(2, 3))


def test_descending_witness_is_guard_legal():
    for a in (2, 7, 27, 97, 703):
        trace = descending_witness(a, ModelId.MS)
        assert trace is not None
        assert trace.end < a
        assert trace.values[0] == a


def test_edge_loop_directed_reading_reports_findings():
    # MS forward moves only shrink toward {1,2,4}; 3A+1 > A is never
    # forward-reachable from an even A, so the directed reading fails and
    # says so rather than pretending
    report = verify_edge_loop(range(2, 11))
    assert report.skipped == 4  # odd A
    assert report.failed == 5
    assert all("no MS path" in f.reason for f in report.failures)


def test_run_any_claim_dispatch():
    ids = all_claim_ids()
    assert ids[0] == "T.succ1" and "T.edge-loop" in ids
    assert len(ids) == len(set(ids))
    report = run_any_claim("T.cluster-five", range(1, 3),
                           SearchBounds(max_value=2**16))
    assert report.bounds["max_value"] == 2**16
    assert report.failed == 0
