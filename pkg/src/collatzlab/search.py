"""Bounded reachability and the deterministic M0 trajectory engine."""

from __future__ import annotations

from dataclasses import dataclass

from .actions import ActionSeq, ModelId, apply_seq
from .errors import DepthExceeded
from .models import predecessors, successors


@dataclass(frozen=True)
class SearchBounds:
    """Budgets for one bounded search.

    max_value caps generated states before they enter the frontier and is
    the primary memory control; max_states is a safety net on the visited
    set; max_depth caps path length.
    """

    max_value: int
    max_depth: int = 64
    max_states: int = 1_000_000

    def __post_init__(self):
        if self.max_value < 1 or self.max_depth < 1 or self.max_states < 1:
            raise ValueError("all bounds must be >= 1")


def default_bounds(start: int) -> SearchBounds:
    """Default macro-verification budget: values up to 2^20 x input."""
    return SearchBounds(max_value=max(start, 1) * 2**20)


@dataclass(frozen=True)
class Path:
    """A guard-legal walk through one model."""

    model: ModelId
    start: int
    actions: ActionSeq
    end: int
    values: tuple

    def __len__(self):
        return len(self.actions)

    @property
    def peak(self):
        return max(self.values)

    def validate(self) -> bool:
        """Re-apply the actions; True iff every value reproduces exactly."""
        if not len(self.actions):
            return self.start == self.end and self.values == (self.start,)
        trace = apply_seq(self.actions, self.start, self.model)
        return tuple(trace.values) == self.values and trace.end == self.end

    def render(self) -> str:
        out = [str(self.start)]
        for action, value in zip(self.actions, self.values[1:]):
            out.append(f"-{action.value}-> {value}")
        return " ".join(out)


@dataclass(frozen=True)
class Unreachable:
    """Search ended without a path.

    bound_exhausted is True when a depth or state budget stopped the search
    early; False means the whole frontier died under the value cap, i.e.
    the target is proven unreachable within that cap.
    """

    bound_exhausted: bool


def _empty_path(model, start):
    return Path(model=model, start=start, actions=ActionSeq(()), end=start,
                values=(start,))


def _build_path(model, start, parents, end):
    actions = []
    values = [end]
    v = end
    while v != start:
        prev, action = parents[v]
        actions.append(action)
        values.append(prev)
        v = prev
    actions.reverse()
    values.reverse()
    return Path(model=model, start=start, actions=ActionSeq(tuple(actions)),
                end=end, values=tuple(values))


def bfs_reach(model: ModelId, start: int, target: int, bounds: SearchBounds,
              forbidden_edges=frozenset()):
    """Shortest path from start to target by plain breadth-first search.

    Deterministic: frontier kept in discovery order, successors expanded in
    T,B,F,D order. forbidden_edges is a set of (value, action) moves to
    skip (used by the edge-loop check).
    """
    if start == target:
        return _empty_path(model, start)
    parents = {start: None}
    frontier = [start]
    exhausted = False
    for _ in range(bounds.max_depth):
        if not frontier:
            break
        nxt = []
        for x in frontier:
            for action, y in successors(x, model):
                if (x, action) in forbidden_edges:
                    continue
                if y > bounds.max_value or y in parents:
                    continue
                parents[y] = (x, action)
                if y == target:
                    return _build_path(model, start, parents, y)
                nxt.append(y)
        if len(parents) > bounds.max_states:
            exhausted = True
            break
        frontier = nxt
    else:
        exhausted = bool(frontier)
    return Unreachable(bound_exhausted=exhausted)


def bfs_reach_bidirectional(model: ModelId, start: int, target: int,
                            bounds: SearchBounds):
    """Start-to-target path searching from both ends at once.

    Visits far fewer states than plain bfs_reach; the returned path can be
    one step longer than optimal, which the bulk cluster-connectivity
    checks (existence only) do not care about. Every returned path still
    validates exactly.
    """
    if start == target:
        return _empty_path(model, start)
    fwd = {start: None}       # value -> (prev, action): prev --action--> value
    bwd = {target: None}      # value -> (action, nxt): value --action--> nxt
    fwd_frontier = [start]
    bwd_frontier = [target]
    exhausted = False
    total_depth = 0
    while fwd_frontier and bwd_frontier and total_depth < bounds.max_depth:
        if len(fwd_frontier) <= len(bwd_frontier):
            nxt = []
            for x in fwd_frontier:
                for action, y in successors(x, model):
                    if y > bounds.max_value or y in fwd:
                        continue
                    fwd[y] = (x, action)
                    if y in bwd:
                        return _join(model, start, target, fwd, bwd, y)
                    nxt.append(y)
            fwd_frontier = nxt
        else:
            nxt = []
            for x in bwd_frontier:
                for action, y in predecessors(x, model):
                    if y > bounds.max_value or y in bwd:
                        continue
                    bwd[y] = (action, x)
                    if y in fwd:
                        return _join(model, start, target, fwd, bwd, y)
                    nxt.append(y)
            bwd_frontier = nxt
        total_depth += 1
        if len(fwd) + len(bwd) > bounds.max_states:
            exhausted = True
            break
    else:
        exhausted = bool(fwd_frontier) and bool(bwd_frontier)
    return Unreachable(bound_exhausted=exhausted)


def _join(model, start, target, fwd, bwd, meet):
    head = _build_path(model, start, fwd, meet)
    actions = list(head.actions.steps)
    values = list(head.values)
    v = meet
    while v != target:
        action, nxt = bwd[v]
        actions.append(action)
        values.append(nxt)
        v = nxt
    return Path(model=model, start=start, actions=ActionSeq(tuple(actions)),
                end=target, values=tuple(values))


def bfs_until(model: ModelId, start: int, accept, bounds: SearchBounds,
              forbidden_edges=frozenset()):
    """BFS from start until accept(value) holds; shortest such witness."""
    if accept(start):
        return _empty_path(model, start)
    parents = {start: None}
    frontier = [start]
    exhausted = False
    for _ in range(bounds.max_depth):
        if not frontier:
            break
        nxt = []
        for x in frontier:
            for action, y in successors(x, model):
                if (x, action) in forbidden_edges:
                    continue
                if y > bounds.max_value or y in parents:
                    continue
                parents[y] = (x, action)
                if accept(y):
                    return _build_path(model, start, parents, y)
                nxt.append(y)
        if len(parents) > bounds.max_states:
            exhausted = True
            break
        frontier = nxt
    else:
        exhausted = bool(frontier)
    return Unreachable(bound_exhausted=exhausted)


def collatz_step(x: int) -> int:
    return 3 * x + 1 if x % 2 else x // 2


def trajectory(n: int, max_depth: int = 100_000) -> Path:
    """Deterministic M0 iteration from n down to 1.

    Raises DepthExceeded if 1 is not reached within max_depth steps (which
    would be a conjecture counterexample signal at desk scale).
    """
    if n < 1:
        raise ValueError(f"positive integer required, got {n}")
    from .actions import Action

    values = [n]
    actions = []
    x = n
    while x != 1:
        if len(actions) >= max_depth:
            raise DepthExceeded(n, max_depth)
        actions.append(Action.T if x % 2 else Action.B)
        x = collatz_step(x)
        values.append(x)
    return Path(model=ModelId.M0, start=n, actions=ActionSeq(tuple(actions)),
                end=1, values=tuple(values))


def stopping_stats(values, max_depth: int = 100_000):
    """Yield (n, steps, peak) rows; steps is -1 when max_depth was hit."""
    for n in values:
        try:
            path = trajectory(n, max_depth=max_depth)
            yield (n, len(path), path.peak)
        except DepthExceeded:
            yield (n, -1, -1)


def stats_csv(values, max_depth: int = 100_000):
    """CSV rendering of stopping_stats with the standard header."""
    lines = ["n,steps,peak"]
    lines.extend(f"{n},{s},{p}" for n, s, p in stopping_stats(values, max_depth))
    return "\n".join(lines) + "\n"


def all_reach_one(limit: int, max_depth: int = 100_000):
    """Check that every 1 <= n <= limit reaches 1 in M0.

    Ascending induction: each n only needs to descend below itself, all
    smaller values being already verified. Returns the list of n that
    failed to descend within max_depth (empty means all reach 1).
    """
    failures = []
    for n in range(2, limit + 1):
        x = n
        steps = 0
        while x >= n:
            x = 3 * x + 1 if x & 1 else x >> 1
            steps += 1
            if steps > max_depth:
                failures.append(n)
                break
    return failures
