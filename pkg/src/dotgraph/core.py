"""Dot sequences, sawtooth graphs, and the bracket notation.

A dot sequence records which of the curves 1..n-1 is met at each
intersection along a reference arc of a length-n path.  Plotting a dot
at (position, value) gives the dot graph.  The sequence is brought to
*sawtooth form* by commutations (adjacent swaps of entries that differ
by at least 2) until every ascent is by exactly +1; the result cuts
into maximal ascending segments, written ``[p/q]`` for the run
p, p+1, ..., q.

Text formats (whitespace around tokens is ignored)::

    n=7; seq=2,3,3,4,5,4,5,4,5,3,4,5,6     raw sequence
    n=7; [2/3,3/5,4/5,4/5,3/6]             sawtooth graph

Normalization is deterministic: repeatedly swap the leftmost adjacent
pair (j_i, j_{i+1}) with j_i < j_{i+1} and j_{i+1} != j_i + 1.  Each
swap moves a strictly larger value left, so the weighted sum of
position*value strictly decreases and the pass terminates.
"""

from __future__ import annotations

import re
from dataclasses import dataclass


class ParseError(ValueError):
    """Input text does not match the grammar."""


class InvariantError(ValueError):
    """Well-formed input that violates a structural invariant."""


@dataclass(frozen=True)
class Segment:
    """Ascending run p, p+1, ..., q of dot values, printed ``p/q``."""

    p: int
    q: int

    def __post_init__(self) -> None:
        if not 1 <= self.p <= self.q:
            raise InvariantError(f"segment {self.p}/{self.q}: need 1 <= p <= q")

    def __len__(self) -> int:
        return self.q - self.p + 1

    def values(self) -> range:
        return range(self.p, self.q + 1)

    def __str__(self) -> str:
        return f"{self.p}/{self.q}"


@dataclass(frozen=True)
class DotSequence:
    """Intersection sequence along a reference arc for a length-n path.

    Entries are curve indices, each in [1, n-1]; the list may be empty.
    """

    n: int
    entries: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "entries", tuple(self.entries))
        if self.n < 3:
            raise InvariantError(f"n={self.n}: need n >= 3")
        for i, e in enumerate(self.entries):
            if not 1 <= e <= self.n - 1:
                raise InvariantError(
                    f"entry {e} at index {i} outside [1, {self.n - 1}]"
                )

    def __len__(self) -> int:
        return len(self.entries)


@dataclass(frozen=True)
class SawtoothGraph:
    """Ordered maximal ascending segments of a sawtooth-form sequence.

    Validity: every segment fits in [1, n-1], and each segment starts at
    or below the end of its predecessor (p_{i+1} <= q_i).  A start of
    exactly q_i + 1 would merge with the previous run, a larger start
    would be an ascent of more than +1; both are rejected.

    >>> SawtoothGraph(4, (Segment(1, 3), Segment(1, 1))).dots
    4
    """

    n: int
    segments: tuple[Segment, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "segments", tuple(self.segments))
        if self.n < 3:
            raise InvariantError(f"n={self.n}: need n >= 3")
        for i, s in enumerate(self.segments):
            if s.q > self.n - 1:
                raise InvariantError(
                    f"segment {i} ({s}) exceeds the value range [1, {self.n - 1}]"
                )
        for i in range(len(self.segments) - 1):
            a, b = self.segments[i], self.segments[i + 1]
            if b.p > a.q:
                why = "runs would merge" if b.p == a.q + 1 else "ascent larger than +1"
                raise InvariantError(
                    f"segments {i} and {i + 1} ({a} then {b}): start {b.p} > end {a.q} ({why})"
                )

    @property
    def dots(self) -> int:
        return sum(len(s) for s in self.segments)


@dataclass(frozen=True)
class DotRef:
    """A dot addressed by its 0-based position in the flattened sequence."""

    position: int
    value: int


# ---------------------------------------------------------------------------
# flatten / segment / normalize

def flatten(g: SawtoothGraph) -> DotSequence:
    """Concatenate the runs p..q of every segment, in order."""
    entries: list[int] = []
    for s in g.segments:
        entries.extend(s.values())
    return DotSequence(g.n, tuple(entries))


def segments_of(entries: tuple[int, ...]) -> tuple[Segment, ...]:
    """Cut a sawtooth-form sequence into its maximal ascending runs."""
    segs: list[Segment] = []
    i = 0
    while i < len(entries):
        j = i
        while j + 1 < len(entries) and entries[j + 1] == entries[j] + 1:
            j += 1
        segs.append(Segment(entries[i], entries[j]))
        i = j + 1
    return tuple(segs)


def sawtooth_swaps(entries: tuple[int, ...]) -> tuple[tuple[int, ...], list[int]]:
    """Run the leftmost-violation commutation pass.

    Returns the sawtooth-form reordering together with the trace of swap
    indices, so callers can replay it and confirm every swap exchanged
    entries differing by at least 2.
    """
    e = list(entries)
    trace: list[int] = []
    i = 0
    while i < len(e) - 1:
        if e[i] < e[i + 1] and e[i + 1] != e[i] + 1:
            e[i], e[i + 1] = e[i + 1], e[i]
            trace.append(i)
            # a swap can only expose a new violation one slot to the left
            i = max(i - 1, 0)
        else:
            i += 1
    return tuple(e), trace


def to_sawtooth(s: DotSequence) -> SawtoothGraph:
    """Normalize a sequence by commutations and cut it into segments.

    >>> to_sawtooth(DotSequence(5, (2, 4, 3))).segments
    (Segment(p=4, q=4), Segment(p=2, q=3))
    """
    ordered, _ = sawtooth_swaps(s.entries)
    return SawtoothGraph(s.n, segments_of(ordered))


# ---------------------------------------------------------------------------
# text format

_HEADER_RE = re.compile(r"^\s*n\s*=\s*(\d+)\s*$")
_SEGMENT_RE = re.compile(r"^\s*(\d+)\s*/\s*(\d+)\s*$")


def _split_header(text: str) -> tuple[int, str]:
    head, sep, body = text.partition(";")
    if not sep:
        raise ParseError(f"missing ';' in {text!r}")
    m = _HEADER_RE.match(head)
    if not m:
        raise ParseError(f"bad header {head!r}: expected 'n=INT'")
    return int(m.group(1)), body.strip()


def _parse_int_list(body: str) -> tuple[int, ...]:
    if not body:
        return ()
    out = []
    for tok in body.split(","):
        tok = tok.strip()
        if not re.fullmatch(r"\d+", tok):
            raise ParseError(f"bad integer {tok!r}")
        out.append(int(tok))
    return tuple(out)


def parse_segment_list(body: str) -> tuple[Segment, ...]:
    """Parse ``[seg,...]`` into segments without cross-segment checks."""
    body = body.strip()
    if not (body.startswith("[") and body.endswith("]")):
        raise ParseError(f"expected '[...]', got {body!r}")
    inner = body[1:-1].strip()
    if not inner:
        return ()
    segs = []
    for tok in inner.split(","):
        m = _SEGMENT_RE.match(tok)
        if not m:
            raise ParseError(f"bad segment {tok!r}: expected 'INT/INT'")
        segs.append(Segment(int(m.group(1)), int(m.group(2))))
    return tuple(segs)


def parse_sequence(text: str) -> DotSequence:
    """Parse ``n=INT; seq=i,j,...`` (the list may be empty)."""
    n, body = _split_header(text)
    if not body.startswith("seq="):
        raise ParseError(f"expected 'seq=...', got {body!r}")
    return DotSequence(n, _parse_int_list(body[4:].strip()))


def parse_segments(text: str) -> SawtoothGraph:
    """Parse ``n=INT; [p/q,...]`` and validate the sawtooth invariants."""
    n, body = _split_header(text)
    return SawtoothGraph(n, parse_segment_list(body))


def parse_graph(text: str) -> SawtoothGraph:
    """Parse either text form, normalizing a raw sequence if needed."""
    _, body = _split_header(text)
    if body.startswith("seq="):
        return to_sawtooth(parse_sequence(text))
    return parse_segments(text)


def serialize(g: SawtoothGraph) -> str:
    """Exact bracket notation; round-trips through ``parse_segments``."""
    return f"n={g.n}; [" + ",".join(str(s) for s in g.segments) + "]"


def serialize_sequence(s: DotSequence) -> str:
    return f"n={s.n}; seq=" + ",".join(str(e) for e in s.entries)


# ---------------------------------------------------------------------------
# rendering

def render(g: SawtoothGraph, format: str = "ascii") -> str:
    if format == "ascii":
        return render_ascii(g)
    if format == "svg":
        return render_svg(g)
    raise ValueError(f"unknown render format {format!r}")


def render_ascii(g: SawtoothGraph) -> str:
    """Character grid, rows for values n-1 down to 1, '*' at each dot."""
    entries = flatten(g).entries
    if not entries:
        return ""
    rows = []
    for v in range(g.n - 1, 0, -1):
        rows.append("".join("*" if e == v else "." for e in entries))
    return "\n".join(rows)


def render_svg(g: SawtoothGraph) -> str:
    """One circle per dot at (40k+20, 40(n-value)+20), one line per segment."""
    entries = flatten(g).entries
    width = 40 * max(len(entries), 1) + 20
    height = 40 * g.n + 20
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}">'
    ]
    pos = 0
    for seg in g.segments:
        x1, y1 = 40 * pos + 20, 40 * (g.n - seg.p) + 20
        x2, y2 = 40 * (pos + len(seg) - 1) + 20, 40 * (g.n - seg.q) + 20
        parts.append(
            f'<line x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}" stroke="black"/>'
        )
        pos += len(seg)
    for k, v in enumerate(entries):
        cy = 40 * (g.n - v) + 20
        parts.append(f'<circle cx="{40 * k + 20}" cy="{cy}" r="6" fill="black"/>')
    parts.append("</svg>")
    return "\n".join(parts)
