"""The T/B/F/D action algebra and the four model guard tables.

Sequence strings apply left to right: the first letter is the first action
performed. Under that convention 'TDDFFBBT' is exactly x -> x + 1 over the
rationals, which pins the reading of every other sequence.
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .errors import DomainViolation, GuardViolation, ParseError
from .ternary import to_ternary


class ModelId(enum.Enum):
    M0 = "m0"  # deterministic: T on odds, B on evens
    MS = "ms"  # adds F at x = 1 (mod 3)
    M1 = "m1"  # adds unguarded T and D
    M2 = "m2"  # unguarded rational interpreter

    def __str__(self):
        return self.name


INTEGER_MODELS = (ModelId.M0, ModelId.MS, ModelId.M1)


class Action(enum.Enum):
    T = "T"  # x -> 3x + 1
    B = "B"  # x -> x / 2
    F = "F"  # x -> (x - 1) / 3
    D = "D"  # x -> 2x

    def __str__(self):
        return self.value

    @property
    def inverse(self) -> "Action":
        return _INVERSE[self]


_INVERSE = {Action.T: Action.F, Action.F: Action.T, Action.B: Action.D, Action.D: Action.B}


def action_function(action: Action, x):
    """The exact map of an action, no guards applied."""
    if action is Action.T:
        return 3 * x + 1
    if action is Action.D:
        return 2 * x
    if action is Action.B:
        if isinstance(x, int):
            return x // 2 if x % 2 == 0 else Fraction(x, 2)
        return x / 2
    if isinstance(x, int):
        return (x - 1) // 3 if x % 3 == 1 else Fraction(x - 1, 3)
    return (x - 1) / 3


def is_legal(action: Action, x, model: ModelId) -> bool:
    """Guard table of the four models for integer values.

    M2 has no guards (interpreter mode); graph-mode M2 adjacency, where F
    additionally needs x > 1, lives in the models module.
    """
    if model is ModelId.M2:
        return True
    if action is Action.T:
        return model is ModelId.M1 or x % 2 == 1
    if action is Action.B:
        return x % 2 == 0
    if action is Action.F:
        return model is not ModelId.M0 and x % 3 == 1 and x > 1
    # D
    return model is ModelId.M1


def apply(action: Action, x, model: ModelId, step_index=None):
    """Apply one action under a model's guards; exact result.

    Integer models demand an integer input >= 1 and keep results there.
    M2 evaluates over exact rationals with no guard at all.
    """
    if model in INTEGER_MODELS:
        if not isinstance(x, int) or x < 1:
            raise DomainViolation(action, x, x, model, step_index)
        if not is_legal(action, x, model):
            raise GuardViolation(action, x, model, step_index)
        result = action_function(action, x)
        if not isinstance(result, int) or result < 1:
            raise DomainViolation(action, x, result, model, step_index)
        return result
    return action_function(action, Fraction(x))


@dataclass(frozen=True)
class ActionSeq:
    """An ordered list of actions, first entry applied first."""

    steps: tuple[Action, ...]
    source_text: str | None = None

    def __str__(self):
        return self.render()

    def __len__(self):
        return len(self.steps)

    def __iter__(self):
        return iter(self.steps)

    def __add__(self, other: "ActionSeq") -> "ActionSeq":
        return ActionSeq(self.steps + other.steps)

    def render(self) -> str:
        return "".join(a.value for a in self.steps)


def parse_seq(text: str) -> ActionSeq:
    """Parse a sequence string; quotes and whitespace are ignored."""
    steps = []
    seen = False
    for i, c in enumerate(text):
        if c in "'\" \t\n":
            continue
        if c not in "TBFD":
            raise ParseError(text, i)
        steps.append(Action(c))
        seen = True
    if not seen:
        raise ValueError("empty action sequence")
    return ActionSeq(tuple(steps), source_text=text)


def seq_of(text: str) -> ActionSeq:
    """Internal constructor for literal sequences (no source text kept)."""
    return ActionSeq(tuple(Action(c) for c in text))


def inverse_seq(seq: ActionSeq) -> ActionSeq:
    """Reverse the order and invert every action."""
    return ActionSeq(tuple(a.inverse for a in reversed(seq.steps)))


@dataclass(frozen=True)
class Trace:
    """One recorded application of a sequence under a model's guards."""

    start: object
    model: ModelId
    steps: tuple[tuple[Action, object], ...]

    @property
    def end(self):
        return self.steps[-1][1] if self.steps else self.start

    @property
    def values(self):
        return [self.start] + [v for _, v in self.steps]

    @property
    def actions(self) -> ActionSeq:
        return ActionSeq(tuple(a for a, _ in self.steps))

    def __len__(self):
        return len(self.steps)

    def to_json_lines(self) -> str:
        lines = []
        for i, value in enumerate(self.values):
            record = {"step": i, "value": str(value)}
            if i:
                record["action"] = self.steps[i - 1][0].value
            if self.model in INTEGER_MODELS:
                record["ternary"] = str(to_ternary(value))
            lines.append(json.dumps(record, separators=(",", ":")))
        return "\n".join(lines)


def apply_seq(seq: ActionSeq, x, model: ModelId) -> Trace:
    """Run a whole sequence, recording every intermediate.

    Fails fast: the first illegal step raises with its index attached.
    """
    steps = []
    value = x
    for i, action in enumerate(seq):
        value = apply(action, value, model, step_index=i)
        steps.append((action, value))
    return Trace(start=x, model=model, steps=tuple(steps))


def validate_trace(trace: Trace) -> bool:
    """Re-play a stored trace; True iff every step is exact and guard-legal."""
    replay = apply_seq(trace.actions, trace.start, trace.model)
    return replay.steps == trace.steps


def evaluate_exact(seq: ActionSeq, x):
    """Unguarded signed-rational evaluation of a sequence.

    Returns (end, flagged) where flagged lists (step_index, value) for every
    intermediate <= 0. Runs on a raw numerator/denominator pair: the only
    denominators that ever appear are products of 2s and 3s, so this stays
    fast over big ranges.
    """
    if isinstance(x, int):
        p, q = x, 1
    else:
        x = Fraction(x)
        p, q = x.numerator, x.denominator
    flagged = []
    for i, action in enumerate(seq):
        if action is Action.T:
            p = 3 * p + q
        elif action is Action.D:
            p = 2 * p
        elif action is Action.B:
            if p % 2 == 0:
                p //= 2
            else:
                q *= 2
        else:  # F
            p -= q
            if p % 3 == 0:
                p //= 3
            else:
                q *= 3
        if p <= 0:
            flagged.append((i, Fraction(p, q)))
    g = gcd(abs(p), q)
    return Fraction(p // g, q // g), flagged
