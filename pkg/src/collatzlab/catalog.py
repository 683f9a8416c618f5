"""Executable catalog of the ternary-suffix lemmas and theorems.

Each claim instantiates an input from the parameter A (the cluster base),
runs a witness construction under M1 guards (MS where noted), and compares
the endpoint against an arithmetic target. Witnesses are mostly literal
action scripts; a few segments fall back to bounded search where the
source argument is itself non-constructive.

Suffix-digit arithmetic used throughout (base 3, A is the prefix value):
    A0 = 3A, A1 = 3A+1, A2 = 3A+2, and e.g. A21 = 9A+7.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .actions import ActionSeq, ModelId, seq_of

# Core scripts, one per unconditional suffix lemma.
SEQ_10_11 = seq_of("TDDFFBBT")        # A10 -> A11 (also the +1 identity)
SEQ_11_10 = seq_of("FDDTTBBF")
SEQ_02_11 = seq_of("DFFBTT")
SEQ_11_02 = seq_of("FFDTTB")
SEQ_01_11 = seq_of("DDFFBBTT")
SEQ_11_01 = seq_of("FFDDTTBB")
SEQ_00_11 = seq_of("TDDFDDFFBBBBTT")
SEQ_11_00 = seq_of("FFDDDDTTBBTBBF")
SEQ_20_21 = seq_of("TDDFFBBT")
SEQ_21_20 = seq_of("FDDTTBBF")
SEQ_12_21 = seq_of("DDDFFBBTBT")
SEQ_21_12 = seq_of("FDFDDTTBBB")

# Appending / erasing a trailing '2'. For any value v = 3W+2 (numeral W2):
# T, D land on (2W+1)12; swapping the 12-suffix to 21 and halving gives
# W22 = 3v+2. Guard-legal for every such v, so one script covers the
# R0... and R1... appending lemmas at once. Its inverse erases the 2.
SEQ_APPEND2 = seq_of("TD") + SEQ_12_21 + seq_of("B")
SEQ_BACKSPACE2 = seq_of("DFDFDDTTBBBBF")

# Conditional 3-cluster-to-5-cluster scripts (A21 -> A11, A22 -> A11),
# split on A's parity and, for odd A, on A's last ternary digit.
SEQ_21_11_EVEN = seq_of("TB") + SEQ_02_11 + seq_of("FFFDTT")
SEQ_21_11_LAST0 = (seq_of("DTTB") + SEQ_02_11 + seq_of("FFF")
                   + SEQ_02_11 + SEQ_11_01 + seq_of("T"))
SEQ_21_11_LAST1 = SEQ_21_12 + seq_of("TTB") + SEQ_02_11 + seq_of("FFFDT")
SEQ_21_11_LAST2 = seq_of("F") + SEQ_BACKSPACE2 + seq_of("TT")
SEQ_22_11_EVEN = seq_of("BFFDTT")
SEQ_22_11_LAST0 = (seq_of("D") + SEQ_21_12 + seq_of("BF")
                   + SEQ_02_11 + SEQ_11_01 + seq_of("T"))
SEQ_22_11_LAST1 = seq_of("TB") + SEQ_BACKSPACE2 + SEQ_BACKSPACE2 + seq_of("DT")
SEQ_22_11_LAST2 = SEQ_BACKSPACE2 + SEQ_BACKSPACE2 + seq_of("TT")

# Succession identities over exact rationals, +1 through +4.
SUCCESSION_SEQS = {
    1: seq_of("TDDFFBBT"),
    2: seq_of("DFFBTT"),
    3: seq_of("DDFFBBTT"),
    4: seq_of("TDDFDDFFBBBBTT"),
}

# Short hops to 4 (= 11 in base 3) for values below the first 9-cluster.
SMALL_TO_FOUR = {
    1: "T", 2: "D", 3: "TBTBB", 4: "", 5: "TBB", 6: "BTBTBB", 7: "FD", 8: "B",
}


def seq_21_to_11(a: int) -> ActionSeq:
    """A21 -> A11 script selected by A's parity / last ternary digit."""
    if a % 2 == 0:
        return SEQ_21_11_EVEN
    return (SEQ_21_11_LAST0, SEQ_21_11_LAST1, SEQ_21_11_LAST2)[a % 3]


def seq_22_to_11(a: int) -> ActionSeq:
    """A22 -> A11 script selected the same way."""
    if a % 2 == 0:
        return SEQ_22_11_EVEN
    return (SEQ_22_11_LAST0, SEQ_22_11_LAST1, SEQ_22_11_LAST2)[a % 3]


def to_eleven_script(value: int) -> ActionSeq:
    """A full witness script value => 4 built from the cluster lemmas.

    Strips two ternary digits per round: move within the 9-cluster to the
    hub 9W+4, then erase the '11' suffix; finish with a table lookup once
    below 9.
    """
    if value < 1:
        raise ValueError(f"positive integer required, got {value}")
    parts = []
    v = value
    while v > 8:
        w, r = divmod(v, 9)
        if r == 0:
            parts.append(SEQ_00_11)
        elif r == 1:
            parts.append(SEQ_01_11)
        elif r == 2:
            parts.append(SEQ_02_11)
        elif r == 3:
            parts.append(SEQ_10_11)
        elif r == 5:
            parts.append(SEQ_12_21)
            parts.append(seq_21_to_11(w))
        elif r == 6:
            parts.append(SEQ_20_21)
            parts.append(seq_21_to_11(w))
        elif r == 7:
            parts.append(seq_21_to_11(w))
        elif r == 8:
            parts.append(seq_22_to_11(w))
        parts.append(seq_of("FF"))
        v = w
    if SMALL_TO_FOUR[v]:
        parts.append(seq_of(SMALL_TO_FOUR[v]))
    steps = tuple(a for part in parts for a in part.steps)
    return ActionSeq(steps)


# Witness segments: a literal script, or a bounded search to a value.
def prim(seq: ActionSeq):
    return ("prim", seq)


def bfs(target: int):
    return ("bfs", target)


@dataclass(frozen=True)
class Claim:
    """One catalog entry: an executable reading of a lemma or theorem."""

    id: str
    description: str
    input_fn: Callable[[int], int]
    expected_fn: Callable[[int], int]
    build: Callable[[int], list] | None = None
    applies: Callable[[int], bool] = lambda a: True
    skip_reason: str = ""
    model: ModelId = ModelId.M1
    inverse_of: str | None = None
    close_cycle: bool = False
    min_a: int = 1


def _simple(claim_id, description, offset_in, offset_out, seq, *,
            applies=None, skip_reason=""):
    return Claim(
        id=claim_id,
        description=description,
        input_fn=lambda a: 9 * a + offset_in,
        expected_fn=lambda a: 9 * a + offset_out,
        build=lambda a: [prim(seq)],
        applies=applies or (lambda a: True),
        skip_reason=skip_reason,
    )


def _inverse(claim_id, description, forward_id, offset_in, offset_out, *,
             applies=None, skip_reason=""):
    return Claim(
        id=claim_id,
        description=description,
        input_fn=lambda a: 9 * a + offset_in,
        expected_fn=lambda a: 9 * a + offset_out,
        inverse_of=forward_id,
        applies=applies or (lambda a: True),
        skip_reason=skip_reason,
    )


def _is_even(a):
    return a % 2 == 0


def _odd_last(digit):
    return lambda a: a % 2 == 1 and a % 3 == digit


_EVEN = "A must be even"
_ODD0 = "A must be odd with last ternary digit 0"
_ODD1 = "A must be odd with last ternary digit 1"
_ODD2 = "A must be odd with last ternary digit 2"

APPEND_DEPTH_DEFAULT = 6


def _append2_expected(a, depth=APPEND_DEPTH_DEFAULT):
    # Appending one '2' maps v to 3v + 2, i.e. v + 1 triples.
    return (a + 1) * 3**depth - 1


def build_claims(append_depth: int = APPEND_DEPTH_DEFAULT) -> dict[str, Claim]:
    claims = [
        _simple("L.10-11", "A10 => A11 via TDDFFBBT", 3, 4, SEQ_10_11),
        _simple("L.11-10", "A11 => A10 via FDDTTBBF", 4, 3, SEQ_11_10),
        _simple("L.02-11", "A02 => A11 via DFFBTT", 2, 4, SEQ_02_11),
        _simple("L.11-02", "A11 => A02 via FFDTTB", 4, 2, SEQ_11_02),
        _simple("L.01-11", "A01 => A11 via DDFFBBTT", 1, 4, SEQ_01_11),
        _simple("L.11-01", "A11 => A01 via FFDDTTBB", 4, 1, SEQ_11_01),
        _simple("L.00-11", "A00 => A11 via TDDFDDFFBBBBTT", 0, 4, SEQ_00_11),
        _simple("L.11-00", "A11 => A00 via FFDDDDTTBBTBBF", 4, 0, SEQ_11_00),
        _simple("L.20-21", "A20 => A21 via TDDFFBBT", 6, 7, SEQ_20_21),
        _simple("L.21-20", "A21 => A20 via FDDTTBBF", 7, 6, SEQ_21_20),
        _simple("L.12-21", "A12 => A21 via DDDFFBBTBT", 5, 7, SEQ_12_21),
        _simple("L.21-12", "A21 => A12 via FDFDDTTBBB", 7, 5, SEQ_21_12),
        Claim(
            id="T.attach",
            description="TT attaches any A to its 5-cluster hub A11",
            input_fn=lambda a: a,
            expected_fn=lambda a: 9 * a + 4,
            build=lambda a: [prim(seq_of("TT"))],
        ),
        # 3-cluster to 5-cluster, conditional on A.
        _simple("L.21-11.even", "A21 => A11 when A even", 7, 4,
                SEQ_21_11_EVEN, applies=_is_even, skip_reason=_EVEN),
        _inverse("L.11-21.even", "A11 => A21 when A even",
                 "L.21-11.even", 4, 7, applies=_is_even, skip_reason=_EVEN),
        _simple("L.21-11.last0", "R021 => R011 (A odd, A = R0)", 7, 4,
                SEQ_21_11_LAST0, applies=_odd_last(0), skip_reason=_ODD0),
        _inverse("L.11-21.last0", "R011 => R021 (A odd, A = R0)",
                 "L.21-11.last0", 4, 7, applies=_odd_last(0), skip_reason=_ODD0),
        _simple("L.21-11.last1", "R121 => R111 (A odd, A = R1)", 7, 4,
                SEQ_21_11_LAST1, applies=_odd_last(1), skip_reason=_ODD1),
        _inverse("L.11-21.last1", "R111 => R121 (A odd, A = R1)",
                 "L.21-11.last1", 4, 7, applies=_odd_last(1), skip_reason=_ODD1),
        _simple("L.21-11.last2", "R221 => R211 (A odd, A = R2)", 7, 4,
                SEQ_21_11_LAST2, applies=_odd_last(2), skip_reason=_ODD2),
        _inverse("L.11-21.last2", "R211 => R221 (A odd, A = R2)",
                 "L.21-11.last2", 4, 7, applies=_odd_last(2), skip_reason=_ODD2),
        _simple("L.22-11.even", "A22 => A11 when A even", 8, 4,
                SEQ_22_11_EVEN, applies=_is_even, skip_reason=_EVEN),
        _inverse("L.11-22.even", "A11 => A22 when A even",
                 "L.22-11.even", 4, 8, applies=_is_even, skip_reason=_EVEN),
        _simple("L.22-11.last0", "R022 => R011 (A odd, A = R0)", 8, 4,
                SEQ_22_11_LAST0, applies=_odd_last(0), skip_reason=_ODD0),
        _inverse("L.11-22.last0", "R011 => R022 (A odd, A = R0)",
                 "L.22-11.last0", 4, 8, applies=_odd_last(0), skip_reason=_ODD0),
        _simple("L.22-11.last1", "R122 => R111 (A odd, A = R1)", 8, 4,
                SEQ_22_11_LAST1, applies=_odd_last(1), skip_reason=_ODD1),
        _inverse("L.11-22.last1", "R111 => R122 (A odd, A = R1)",
                 "L.22-11.last1", 4, 8, applies=_odd_last(1), skip_reason=_ODD1),
        _simple("L.22-11.last2", "R222 => R211 (A odd, A = R2)", 8, 4,
                SEQ_22_11_LAST2, applies=_odd_last(2), skip_reason=_ODD2),
        _inverse("L.11-22.last2", "R211 => R222 (A odd, A = R2)",
                 "L.22-11.last2", 4, 8, applies=_odd_last(2), skip_reason=_ODD2),
        Claim(
            id="T.append2",
            description=f"appending a trailing 2, iterated {append_depth} times",
            input_fn=lambda a: a,
            expected_fn=lambda a: _append2_expected(a, append_depth),
            build=lambda a: [prim(SEQ_APPEND2)] * append_depth,
            applies=lambda a: a % 3 == 2,
            skip_reason="A must end in ternary digit 2",
        ),
        Claim(
            id="T.backspace2",
            description=f"erasing a trailing 2, iterated {append_depth} times",
            input_fn=lambda a: _append2_expected(a, append_depth),
            expected_fn=lambda a: a,
            build=lambda a: [prim(SEQ_BACKSPACE2)] * append_depth,
            applies=lambda a: a % 3 == 2,
            skip_reason="A must end in ternary digit 2",
        ),
        Claim(
            id="T.a-11",
            description="every A reaches 11 (i.e. 4), cluster lemmas composed",
            input_fn=lambda a: a,
            expected_fn=lambda a: 4,
            build=lambda a: [prim(to_eleven_script(a))],
        ),
        Claim(
            id="T.node-loop",
            description="every A lies on a directed cycle",
            input_fn=lambda a: a,
            expected_fn=_node_loop_waypoint,
            build=_node_loop_build,
            close_cycle=True,
        ),
    ]
    return {c.id: c for c in claims}


def _node_loop_waypoint(a: int) -> int:
    # Descend to floor(a/2) per the source argument; a=1 cycles through 4,2.
    return 1 if a == 1 else a // 2


def _node_loop_build(a: int):
    if a == 1:
        return [prim(seq_of("TBB"))]
    half = a // 2
    if a % 2 == 0:
        # A => A11 => (A/2)02 => (A/2)11 => A/2, fully scripted.
        return [prim(seq_of("TTB") + SEQ_02_11 + seq_of("FF"))]
    # Odd: A => A111 => half's ..202 => ..211 => half's ..2, then a short
    # search hop 3*half+2 => half.
    return [prim(seq_of("TTTB") + SEQ_02_11 + seq_of("FF")), bfs(half)]
