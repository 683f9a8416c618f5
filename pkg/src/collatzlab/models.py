"""The four transition systems viewed as graphs.

Successor order is fixed T, B, F, D so traversals and reports are
deterministic. Edges out of a bounded graph (either endpoint above the
bound) are dropped, not clamped.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

from .actions import Action, ModelId, action_function, is_legal
from .errors import IllegalEdge

ACTION_ORDER = (Action.T, Action.B, Action.F, Action.D)


class EdgeClass(enum.Enum):
    """F-edge families used by the de-looping surgery."""

    E1 = "E1"  # F-edge from x = 1 (mod 6)
    E4 = "E4"  # F-edge from x = 4 (mod 6)
    OTHER = "OTHER"


def successors(x, model: ModelId):
    """All guard-legal moves out of x, in T,B,F,D order."""
    if model is ModelId.M2:
        # Graph mode: F needs x > 1 so values stay positive.
        out = [(Action.T, action_function(Action.T, x)),
               (Action.B, action_function(Action.B, x))]
        if x > 1:
            out.append((Action.F, action_function(Action.F, x)))
        out.append((Action.D, action_function(Action.D, x)))
        return out
    return [
        (a, action_function(a, x))
        for a in ACTION_ORDER
        if is_legal(a, x, model)
    ]


def predecessors(x, model: ModelId):
    """All (action, y) with x among successors(y, model); same order."""
    out = []
    for a in ACTION_ORDER:
        y = _preimage(a, x)
        if y is None:
            continue
        if model is ModelId.M2:
            if y <= 0 or (a is Action.F and not y > 1):
                continue
            out.append((a, y))
        elif isinstance(y, int) and y >= 1 and is_legal(a, y, model):
            out.append((a, y))
    return out


def _preimage(action: Action, x):
    """The unique y with action(y) = x, if it exists in the domain."""
    if action is Action.T:
        if isinstance(x, int):
            return (x - 1) // 3 if x % 3 == 1 and x > 1 else None
        return (x - 1) / 3
    if action is Action.B:
        return 2 * x
    if action is Action.F:
        return 3 * x + 1
    # D
    if isinstance(x, int):
        return x // 2 if x % 2 == 0 else None
    return x / 2


def classify_edge(x: int, action: Action, model: ModelId) -> EdgeClass:
    """E1/E4 for F-edges with the stated residues, OTHER for the rest."""
    if not is_legal(action, x, model):
        raise IllegalEdge(f"{action} is not a legal move at {x} under {model}")
    if action is Action.F:
        if x % 6 == 1:
            return EdgeClass.E1
        if x % 6 == 4:
            return EdgeClass.E4
    return EdgeClass.OTHER


def drop_edge_classes(*classes: EdgeClass):
    """Edge filter that removes the given classes (for bounded_graph)."""
    dropped = set(classes)

    def keep(x, action, model):
        return classify_edge(x, action, model) not in dropped

    return keep


@dataclass
class BoundedGraph:
    """Adjacency of one integer model over nodes 1..max_value."""

    model: ModelId
    max_value: int
    adjacency: dict = field(repr=False)

    def edges(self):
        for x in range(1, self.max_value + 1):
            for action, y in self.adjacency[x]:
                yield (x, action, y)

    def edge_set(self):
        return set(self.edges())


def bounded_graph(model: ModelId, max_value: int, edge_filter=None) -> BoundedGraph:
    """Materialize the graph on nodes 1..max_value.

    edge_filter(x, action, model) -> bool keeps or drops individual edges;
    edges leading above max_value are always dropped.
    """
    if max_value < 4:
        raise ValueError(f"max_value must be >= 4, got {max_value}")
    adjacency = {}
    for x in range(1, max_value + 1):
        moves = []
        for action, y in successors(x, model):
            if y > max_value:
                continue
            if edge_filter is not None and not edge_filter(x, action, model):
                continue
            moves.append((action, y))
        adjacency[x] = moves
    return BoundedGraph(model=model, max_value=max_value, adjacency=adjacency)


F_EDGE_COLOR = "red"


def to_dot(graph: BoundedGraph, name: str = "collatz") -> str:
    """Deterministic DOT rendering; F-edges carry a distinct color."""
    lines = [f"digraph {name} {{"]
    for x in range(1, graph.max_value + 1):
        lines.append(f'  {x} [label="{x}"];')
    for x, action, y in graph.edges():
        attrs = f'label="{action.value}"'
        if action is Action.F:
            attrs += f', color="{F_EDGE_COLOR}"'
        lines.append(f"  {x} -> {y} [{attrs}];")
    lines.append("}")
    return "\n".join(lines) + "\n"
