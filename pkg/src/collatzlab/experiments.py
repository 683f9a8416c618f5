"""Graph-level experiments: cycle census and the de-looping surgery."""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from .actions import Action, ModelId, is_legal, action_function
from .models import EdgeClass, bounded_graph, classify_edge, drop_edge_classes


def _canonical_cycle(nodes):
    i = nodes.index(min(nodes))
    return list(nodes[i:]) + list(nodes[:i])


def _functional_cycles(step, max_value):
    """Cycle census of an out-degree-<=1 graph on 1..max_value."""
    DONE, ACTIVE = 2, 1
    color = bytearray(max_value + 1)
    cycles = []
    for n in range(1, max_value + 1):
        if color[n]:
            continue
        path = []
        pos = {}
        x = n
        while True:
            if x is None or x > max_value or color[x] == DONE:
                break
            if color[x] == ACTIVE:
                cycles.append(_canonical_cycle(path[pos[x]:]))
                break
            color[x] = ACTIVE
            pos[x] = len(path)
            path.append(x)
            x = step(x)
        for v in path:
            color[v] = DONE
    return cycles


def cycle_census(model: ModelId, max_value: int):
    """All directed cycles with every node <= max_value, canonicalized.

    Cycles are rotated to start at their smallest node and the census is
    sorted by (length, nodes). M0 is out-degree 1, so its census runs in
    linear time; denser models go through networkx's simple-cycle
    enumeration over the materialized bounded graph.
    """
    if max_value < 4:
        raise ValueError(f"max_value must be >= 4, got {max_value}")
    if model is ModelId.M0:
        def step(x):
            y = 3 * x + 1 if x % 2 else x // 2
            return y if y <= max_value else None
        cycles = _functional_cycles(step, max_value)
    else:
        import networkx as nx

        graph = bounded_graph(model, max_value)
        g = nx.DiGraph()
        g.add_nodes_from(range(1, max_value + 1))
        g.add_edges_from((x, y) for x, _, y in graph.edges())
        cycles = [_canonical_cycle(c) for c in nx.simple_cycles(g)]
    return sorted(cycles, key=lambda c: (len(c), c))


@dataclass
class PhaseResult:
    phase: int
    dropped: tuple[str, ...]
    reached: int = 0
    failed: list[int] = field(default_factory=list)

    @property
    def all_reached(self):
        return not self.failed

    def to_dict(self):
        return {"phase": self.phase, "dropped": list(self.dropped),
                "reached": self.reached, "failed": self.failed}


@dataclass
class DeloopReport:
    max_value: int
    headroom: int
    phase3_matches_m0: bool
    phases: list[PhaseResult]
    wall_ms: float = 0.0

    def to_dict(self, include_timing=False):
        out = {
            "max_value": self.max_value,
            "headroom": self.headroom,
            "phase3_matches_m0": self.phase3_matches_m0,
            "phases": [p.to_dict() for p in self.phases],
        }
        if include_timing:
            out["wall_ms"] = round(self.wall_ms, 3)
        return out


_PHASE_DROPS = {
    1: (),
    2: (EdgeClass.E1,),
    3: (EdgeClass.E1, EdgeClass.E4),
}


def _phase_successors(x, dropped):
    out = []
    for a in (Action.T, Action.B, Action.F):
        if not is_legal(a, x, ModelId.MS):
            continue
        if a is Action.F and classify_edge(x, a, ModelId.MS) in dropped:
            continue
        out.append((a, action_function(a, x)))
    return out


def _reaches_known(n, dropped, cap, ok, max_depth=512, max_states=200_000):
    """Does n reach 1 (or a value already known to) under the phase edges?

    Fast path: the deterministic M0 walk, legal in every phase, until the
    value descends below n. Falls back to BFS under the phase's edge set
    when the walk would exceed the value cap.
    """
    x = n
    steps = 0
    while x <= cap and steps <= max_depth:
        if x == 1 or (x < n and ok[x]):
            return True
        x = 3 * x + 1 if x % 2 else x // 2
        steps += 1
    # Bounded BFS under the phase guard set.
    parents = {n: None}
    frontier = [n]
    for _ in range(max_depth):
        if not frontier or len(parents) > max_states:
            break
        nxt = []
        for v in frontier:
            for _, y in _phase_successors(v, dropped):
                if y > cap or y in parents:
                    continue
                if y == 1 or (y < n and ok[y]):
                    return True
                parents[y] = v
                nxt.append(y)
        frontier = nxt
    return False


def delooping_experiment(max_value: int, search_headroom: int = 2**10) -> DeloopReport:
    """Remove E1 then E4 from MS and watch reachability-to-1 per node.

    Three phases over nodes 1..max_value with values capped at
    max_value * search_headroom: full MS, MS minus E1, MS minus E1 and E4.
    The phase-3 edge set is additionally compared against M0's, which it
    must equal exactly.
    """
    if max_value < 16:
        raise ValueError(f"max_value must be >= 16, got {max_value}")
    t0 = time.perf_counter()
    cap = max_value * search_headroom

    phase3_edges = bounded_graph(
        ModelId.MS, max_value,
        drop_edge_classes(EdgeClass.E1, EdgeClass.E4)).edge_set()
    m0_edges = bounded_graph(ModelId.M0, max_value).edge_set()
    matches = phase3_edges == m0_edges

    phases = []
    for phase, dropped in _PHASE_DROPS.items():
        result = PhaseResult(phase=phase,
                             dropped=tuple(c.value for c in dropped))
        ok = bytearray(max_value + 1)
        ok[1] = 1
        result.reached = 1
        for n in range(2, max_value + 1):
            if _reaches_known(n, dropped, cap, ok):
                ok[n] = 1
                result.reached += 1
            else:
                result.failed.append(n)
        phases.append(result)

    return DeloopReport(max_value=max_value, headroom=search_headroom,
                        phase3_matches_m0=matches, phases=phases,
                        wall_ms=(time.perf_counter() - t0) * 1000)
