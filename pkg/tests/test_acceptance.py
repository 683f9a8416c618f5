"""Acceptance gate: nine criteria, one pass/fail line each.

Criterion 7 is expected to fail honestly: with value headroom 2^10 over a
10^4 node bound, node 9663 cannot descend below itself without climbing to
27,114,424 > 10,240,000 once the F-edges are removed, so phase 3 reports it
unreached. The assertion is kept faithful to the stated criterion rather
than weakened; see test_experiments.py for the oracle pinning the excursion
and the demonstration that headroom 2^12 clears the same node.
"""

import io
import random

from collatzlab.actions import (ActionSeq, Action, ModelId, evaluate_exact,
                                inverse_seq)
from collatzlab.cli import main as cli_main
from collatzlab.experiments import cycle_census, delooping_experiment
from collatzlab.models import successors
from collatzlab.search import all_reach_one, stopping_stats
from collatzlab.ternary import from_ternary, to_ternary
from collatzlab.verify import run_any_claim, verify_descending, verify_succession

CATALOG_LEMMA_IDS = [
    "L.10-11", "L.11-10", "L.02-11", "L.11-02", "L.01-11", "L.11-01",
    "L.00-11", "L.11-00", "L.20-21", "L.21-20", "L.12-21", "L.21-12",
    "T.attach",
    "L.21-11.even", "L.11-21.even", "L.21-11.last0", "L.11-21.last0",
    "L.21-11.last1", "L.11-21.last1", "L.21-11.last2", "L.11-21.last2",
    "L.22-11.even", "L.11-22.even", "L.22-11.last0", "L.11-22.last0",
    "L.22-11.last1", "L.11-22.last1", "L.22-11.last2", "L.11-22.last2",
]


def verdict(n, ok, detail=""):
    line = f"ACCEPTANCE {n}: {'PASS' if ok else 'FAIL'}"
    if detail:
        line += f" ({detail})"
    print(line)
    return ok


def test_criterion_1_succession_identities_exact():
    bad = []
    for c in (1, 2, 3, 4):
        report = verify_succession(c, range(1, 100_001))
        if report.failed:
            bad.append((c, report.failures[0].to_dict()))
    assert verdict(1, not bad, "x in 1..100000, offsets +1..+4 exact"), bad


def test_criterion_2_lemma_catalog_to_10000():
    bad = []
    for claim_id in CATALOG_LEMMA_IDS:
        report = run_any_claim(claim_id, range(1, 10_001))
        if report.failed:
            bad.append((claim_id, report.failures[0].to_dict()))
    assert verdict(2, not bad,
                   f"{len(CATALOG_LEMMA_IDS)} scripted lemmas, A <= 10000"), bad


def test_criterion_3_cluster_connectivity_to_1000():
    bad = []
    for kind in ("five", "three", "nine"):
        report = run_any_claim(f"T.cluster-{kind}", range(1, 1001))
        if report.failed:
            bad.append((kind, report.failures[0].to_dict()))
    assert verdict(3, not bad, "k <= 1000, value cap 2^20, zero pairs missed"), bad


def test_criterion_4_descending_witnesses_to_100000():
    report = verify_descending(ModelId.MS, range(2, 100_001))
    ok = report.failed == 0
    assert verdict(4, ok, "H(A) < A found for all A in 2..100000"), \
        [f.to_dict() for f in report.failures[:3]]


def test_criterion_5_m0_ground_truth_to_1e6():
    failures = all_reach_one(10**6)
    row = list(stopping_stats([27]))[0]
    ok = not failures and row == (27, 111, 9232)
    assert verdict(5, ok, f"all n <= 10^6 reach 1; n=27 -> {row[1]} steps, "
                   f"peak {row[2]}"), (failures[:3], row)


def test_criterion_6_unique_m0_cycle_at_1e6():
    census = cycle_census(ModelId.M0, 10**6)
    ok = census == [[1, 4, 2]]
    assert verdict(6, ok, f"census: {census}")


def test_criterion_7_delooping_at_1e4():
    report = delooping_experiment(10**4, search_headroom=2**10)
    by_phase = {p.phase: p for p in report.phases}
    ok = (report.phase3_matches_m0
          and by_phase[1].all_reached
          and by_phase[3].all_reached)
    assert verdict(
        7, ok,
        f"edge-set match: {report.phase3_matches_m0}; "
        f"phase-1 unreached: {by_phase[1].failed}; "
        f"phase-3 unreached: {by_phase[3].failed}"), (
        "node 9663 must exceed the 2^10 headroom cap once the F-edges are "
        "removed; reported honestly instead of widening the stated budget")


def test_criterion_8_property_suites():
    rng = random.Random(90377)
    actions = list(Action)

    inverse_ok = True
    for _ in range(10_000):
        seq = ActionSeq(tuple(rng.choice(actions)
                              for _ in range(rng.randint(1, 12))))
        x = rng.randint(1, 10**9)
        forward, _ = evaluate_exact(seq, x)
        back, _ = evaluate_exact(inverse_seq(seq), forward)
        if back != x:
            inverse_ok = False
            break

    ternary_ok = True
    for _ in range(100_000):
        n = rng.randint(1, 10**12)
        t = to_ternary(n)
        rendered = str(t)
        oracle = ""
        m = n
        while m:
            oracle = str(m % 3) + oracle
            m //= 3
        if rendered != oracle or from_ternary(t) != n:
            ternary_ok = False
            break

    nesting_ok = True
    for x in range(1, 100_001):
        m0 = set(successors(x, ModelId.M0))
        ms = set(successors(x, ModelId.MS))
        m1 = set(successors(x, ModelId.M1))
        if not (m0 <= ms <= m1):
            nesting_ok = False
            break

    ok = inverse_ok and ternary_ok and nesting_ok
    assert verdict(8, ok, f"inverse={inverse_ok} ternary={ternary_ok} "
                   f"nesting={nesting_ok}")


def test_criterion_9_determinism():
    argv = ["verify", "--claim", "all", "--range", "1..1000"]
    first, second = io.StringIO(), io.StringIO()
    cli_main(argv, out=first)
    cli_main(argv, out=second)
    ok = first.getvalue() == second.getvalue() and first.getvalue()
    assert verdict(9, bool(ok), "two identical runs, byte-identical JSON")
