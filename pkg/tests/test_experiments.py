"""Cycle census and the edge-removal experiment."""

import pytest

from collatzlab.actions import Action, ModelId
from collatzlab.experiments import cycle_census, delooping_experiment
from collatzlab.models import successors


def brute_force_cycles(model, max_value):
    """Independent census: DFS over the explicit edge list, stdlib only."""
    adjacency = {
        x: [y for _, y in successors(x, model) if y <= max_value]
        for x in range(1, max_value + 1)
    }
    # enumerate every simple cycle whose smallest node is `start`
    cycles = set()
    for start in adjacency:
        stack = [(start, (start,))]
        while stack:
            node, path = stack.pop()
            for nxt in adjacency[node]:
                if nxt == start and min(path) == start:
                    cycles.add(path)
                elif nxt not in path and nxt >= start:
                    stack.append((nxt, path + (nxt,)))
    return sorted([list(c) for c in cycles], key=lambda c: (len(c), c))


def test_m0_unique_cycle():
    assert cycle_census(ModelId.M0, 10**4) == [[1, 4, 2]]


def test_m0_census_agrees_with_brute_force():
    for bound in (10, 30):
        assert cycle_census(ModelId.M0, bound) == brute_force_cycles(
            ModelId.M0, bound)


def test_ms_census_agrees_with_brute_force():
    for bound in (16, 40):
        assert cycle_census(ModelId.MS, bound) == brute_force_cycles(
            ModelId.MS, bound)


def test_ms_known_two_cycles():
    census = cycle_census(ModelId.MS, 16)
    # T/F pairs make 2-cycles at odd x = 1 (mod 3) wherever 3x+1 fits
    assert [1, 4] in census
    assert [3, 10] in census
    assert [5, 16] in census


def test_m1_census_contains_b_d_two_cycles():
    census = cycle_census(ModelId.M1, 20)
    for x in (1, 2, 3):
        assert [x, 2 * x] in census  # D then B


def test_census_rejects_tiny_bound():
    with pytest.raises(ValueError):
        cycle_census(ModelId.M0, 3)


def test_delooping_small_all_phases_clean():
    report = delooping_experiment(1000)
    assert report.phase3_matches_m0
    assert [p.phase for p in report.phases] == [1, 2, 3]
    for phase in report.phases:
        assert phase.all_reached, (phase.phase, phase.failed[:5])
        assert phase.reached == 1000
    d = report.to_dict()
    assert "wall_ms" not in d
    assert d["phases"][1]["dropped"] == ["E1"]
    assert d["phases"][2]["dropped"] == ["E1", "E4"]


def test_delooping_cap_failures_are_reported_not_hidden():
    # node 9663 needs to climb to 27,114,424 before first descending below
    # itself; with headroom 2^10 the value cap is 10,240,000, so once the
    # F-edges at x = 1 (mod 6) are gone the climb is unavoidable and the
    # node must be reported unreached
    report = delooping_experiment(10**4, search_headroom=2**10)
    assert report.phase3_matches_m0
    by_phase = {p.phase: p for p in report.phases}
    assert by_phase[1].all_reached
    assert by_phase[2].failed == [9663]
    assert by_phase[3].failed == [9663]
    # with enough headroom the same node clears
    bigger = delooping_experiment(10**4, search_headroom=2**12)
    assert all(p.all_reached for p in bigger.phases)


def test_peak_excursion_oracle_for_9663():
    # independent M0 iteration pinning the number used above
    x, peak = 9663, 9663
    while x >= 9663:
        x = 3 * x + 1 if x % 2 else x // 2
        peak = max(peak, x)
    assert peak == 27_114_424
    assert peak > 10**4 * 2**10


def test_delooping_rejects_tiny_bound():
    with pytest.raises(ValueError):
        delooping_experiment(8)
