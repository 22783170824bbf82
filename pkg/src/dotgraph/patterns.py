"""Surgery patterns and shape classification for sawtooth graphs.

Each detector scans consecutive segment windows and checks an algebraic
condition on the endpoints:

* box ``[p1/q1, p2/q2]``: p1 <= p2 and q1 <= q2
* hexagon type 1 ``[p1/q1, p2/q2, p3/q3]``: p1 <= p2, q1 <= q3, p3 <= q2
* hexagon type 2: p1 <= p3, q2 <= q3, p2 <= q1
* double box: q1 <= q2, p2 <= p3, p1 <= q3 + 1
* left half box: p1 <= p2 (right: q1 <= q2); a pair satisfying both is a
  box and is not reported as a half box
* double hexagon: a left half box pair, a right half box pair to its
  right, and every segment strictly between the two pairs staying
  strictly inside the value window they span
* horizontal line: q_i = p_{i+1}

Half boxes certify nothing by themselves; all other matches witness a
reducing surgery.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .core import DotSequence, InvariantError, SawtoothGraph, Segment, flatten, to_sawtooth


class PatternKind(Enum):
    BOX = "Box"
    HEXAGON_T1 = "HexagonT1"
    HEXAGON_T2 = "HexagonT2"
    DOUBLE_BOX = "DoubleBox"
    LEFT_HALF_BOX = "LeftHalfBox"
    RIGHT_HALF_BOX = "RightHalfBox"
    DOUBLE_HEXAGON = "DoubleHexagon"
    HORIZONTAL_LINE = "HorizontalLine"


@dataclass(frozen=True)
class PatternMatch:
    kind: PatternKind
    segment_indices: tuple[int, ...]

    def __str__(self) -> str:
        return f"{self.kind.value} @ segs=" + ",".join(
            str(i) for i in self.segment_indices
        )


def find_boxes(g: SawtoothGraph) -> list[PatternMatch]:
    out = []
    s = g.segments
    for i in range(len(s) - 1):
        if s[i].p <= s[i + 1].p and s[i].q <= s[i + 1].q:
            out.append(PatternMatch(PatternKind.BOX, (i, i + 1)))
    return out


def find_hexagons_t1(g: SawtoothGraph) -> list[PatternMatch]:
    out = []
    s = g.segments
    for i in range(len(s) - 2):
        a, b, c = s[i], s[i + 1], s[i + 2]
        if a.p <= b.p and a.q <= c.q and c.p <= b.q:
            out.append(PatternMatch(PatternKind.HEXAGON_T1, (i, i + 1, i + 2)))
    return out


def find_hexagons_t2(g: SawtoothGraph) -> list[PatternMatch]:
    out = []
    s = g.segments
    for i in range(len(s) - 2):
        a, b, c = s[i], s[i + 1], s[i + 2]
        if a.p <= c.p and b.q <= c.q and b.p <= a.q:
            out.append(PatternMatch(PatternKind.HEXAGON_T2, (i, i + 1, i + 2)))
    return out


def find_double_boxes(g: SawtoothGraph) -> list[PatternMatch]:
    out = []
    s = g.segments
    for i in range(len(s) - 2):
        a, b, c = s[i], s[i + 1], s[i + 2]
        if a.q <= b.q and b.p <= c.p and a.p <= c.q + 1:
            out.append(PatternMatch(PatternKind.DOUBLE_BOX, (i, i + 1, i + 2)))
    return out


def find_half_boxes(g: SawtoothGraph) -> list[PatternMatch]:
    out = []
    s = g.segments
    for i in range(len(s) - 1):
        left = s[i].p <= s[i + 1].p
        right = s[i].q <= s[i + 1].q
        if left and right:
            continue  # a full box is reported by find_boxes only
        if left:
            out.append(PatternMatch(PatternKind.LEFT_HALF_BOX, (i, i + 1)))
        elif right:
            out.append(PatternMatch(PatternKind.RIGHT_HALF_BOX, (i, i + 1)))
    return out


def find_double_hexagons(g: SawtoothGraph) -> list[PatternMatch]:
    out = []
    s = g.segments
    for i in range(len(s) - 1):
        if s[i].p > s[i + 1].p:
            continue  # need a left half box condition at (i, i+1)
        lo = min(s[i].p, s[i + 1].p)
        for j in range(i + 2, len(s)):
            if s[j - 1].q > s[j].q:
                continue  # right half box condition at (j-1, j)
            hi = max(s[j - 1].q, s[j].q)
            if all(s[m].p > lo and s[m].q < hi for m in range(i + 2, j - 1)):
                out.append(
                    PatternMatch(PatternKind.DOUBLE_HEXAGON, tuple(range(i, j + 1)))
                )
    return out


def find_horizontal_lines(g: SawtoothGraph) -> list[PatternMatch]:
    out = []
    s = g.segments
    for i in range(len(s) - 1):
        if s[i].q == s[i + 1].p:
            out.append(PatternMatch(PatternKind.HORIZONTAL_LINE, (i, i + 1)))
    return out


_DETECTORS = (
    find_boxes,
    find_hexagons_t1,
    find_hexagons_t2,
    find_double_boxes,
    find_half_boxes,
    find_double_hexagons,
    find_horizontal_lines,
)

# patterns that certify a reducing surgery (half boxes do not)
CERTIFYING_KINDS = frozenset(
    {
        PatternKind.BOX,
        PatternKind.HEXAGON_T1,
        PatternKind.HEXAGON_T2,
        PatternKind.DOUBLE_BOX,
        PatternKind.DOUBLE_HEXAGON,
        PatternKind.HORIZONTAL_LINE,
    }
)


def find_all_patterns(g: SawtoothGraph) -> list[PatternMatch]:
    """All matches, grouped by detector in the order listed above."""
    out: list[PatternMatch] = []
    for det in _DETECTORS:
        out.extend(det(g))
    return out


# ---------------------------------------------------------------------------
# spindles

@dataclass(frozen=True)
class SpindleSpec:
    n: int
    k: int

    def __post_init__(self) -> None:
        if self.n < 3:
            raise InvariantError(f"n={self.n}: need n >= 3")
        if not 0 <= self.k <= self.n - 2:
            raise InvariantError(f"k={self.k} outside [0, {self.n - 2}]")


def make_spindle(spec: SpindleSpec) -> SawtoothGraph:
    """The spindle at k: upper triangle, maximal segment 1/(n-1), lower triangle.

    k = n-2 degenerates to the lower complete triangle, k = 0 to the
    upper complete triangle.
    """
    n, k = spec.n, spec.k
    segs = [Segment(m, n - 1) for m in range(n - 1, k + 1, -1)]
    segs.append(Segment(1, n - 1))
    segs.extend(Segment(1, j) for j in range(k, 0, -1))
    return SawtoothGraph(n, tuple(segs))


def is_spindle(g: SawtoothGraph) -> int | None:
    """The k with g equal to the spindle at k, if any."""
    for k in range(g.n - 1):
        if g.segments == make_spindle(SpindleSpec(g.n, k)).segments:
            return k
    return None


def _greedy_embedding(
    src: tuple[Segment, ...], dst: tuple[Segment, ...]
) -> list[int] | None:
    # Greedy leftmost assignment decides existence of an order-preserving
    # injection with containment: any valid injection can be exchanged
    # slot by slot toward the greedy one.
    out = []
    t = 0
    for s in src:
        while t < len(dst) and not (dst[t].p <= s.p and s.q <= dst[t].q):
            t += 1
        if t == len(dst):
            return None
        out.append(t)
        t += 1
    return out


def is_subgraph_of_spindle(
    g: SawtoothGraph,
) -> tuple[int, tuple[tuple[int, int], ...]] | None:
    """Smallest k whose spindle contains g segment-by-segment, with witness.

    The witness maps each segment index of g to a segment index of the
    spindle at k, order-preservingly, with p' <= p <= q <= q' at each
    image.  The empty graph embeds into the spindle at 0.
    """
    for k in range(g.n - 1):
        target = make_spindle(SpindleSpec(g.n, k)).segments
        emb = _greedy_embedding(g.segments, target)
        if emb is not None:
            return k, tuple(enumerate(emb))
    return None


# ---------------------------------------------------------------------------
# exponent shapes, combs, slopes

def _exponent_ok(entries: tuple[int, ...], n: int, base: int) -> bool:
    # lower form: at most `base` entries equal to 1, and between two
    # consecutive occurrences of i (also before the first and after the
    # last) at most `base` entries equal to i+1
    if sum(1 for v in entries if v == 1) > base:
        return False
    for i in range(1, n - 1):
        run = 0
        for v in entries:
            if v == i:
                run = 0
            elif v == i + 1:
                run += 1
                if run > base:
                    return False
    return True


def is_exponent_shape(g: SawtoothGraph, base: int, side: str = "lower") -> bool:
    """Growth-bounded shape check on the flattened sequence.

    The upper form is the lower form of the value-flipped sequence
    (v -> n - v), so the top value plays the role of 1.
    """
    if base < 1:
        raise InvariantError(f"base={base}: need base >= 1")
    if side not in ("lower", "upper"):
        raise ValueError(f"side must be 'lower' or 'upper', got {side!r}")
    entries = flatten(g).entries
    if side == "upper":
        entries = tuple(g.n - v for v in entries)
    return _exponent_ok(entries, g.n, base)


def genus_base(genus: int) -> int:
    """Exponent base for a closed surface: 44 at genus 2, 15(6g-8) above."""
    if genus < 2:
        raise InvariantError(f"genus={genus}: need genus >= 2")
    return 44 if genus == 2 else 15 * (6 * genus - 8)


def classify_comb(g: SawtoothGraph, genus: int) -> tuple[int, int] | None:
    """Value thresholds (a, b) splitting g into a comb, or None.

    A comb has a subgraph of a spindle on the value band [a, b]
    (renumbered to 1..b-a+1), an upper exponent shape strictly above b,
    and a lower exponent shape strictly below a, with the base set by
    the genus.  Thresholds are searched exhaustively and need not be
    unique; the lexicographically first pair is returned.
    """
    base = genus_base(genus)
    entries = flatten(g).entries
    for a in range(1, g.n):
        for b in range(a, g.n):
            middle = tuple(v - a + 1 for v in entries if a <= v <= b)
            band_n = max(b - a + 2, 3)
            mid_graph = to_sawtooth(DotSequence(band_n, middle))
            if is_subgraph_of_spindle(mid_graph) is None:
                continue
            above = tuple(g.n - v for v in entries if v > b)
            if not _exponent_ok(above, g.n, base):
                continue
            below = tuple(v for v in entries if v < a)
            if not _exponent_ok(below, g.n, base):
                continue
            return a, b
    return None


def slopes(g: SawtoothGraph) -> tuple[Fraction | None, Fraction | None]:
    """(upper, lower) slopes around the unique longest segment.

    The upper slope is taken over the start values of the segments
    before it, the lower slope over the end values of the segments
    after it; a part with fewer than two segments has no slope, and a
    graph without a unique longest segment has neither.
    """
    if not g.segments:
        return None, None
    longest = max(len(s) for s in g.segments)
    where = [i for i, s in enumerate(g.segments) if len(s) == longest]
    if len(where) != 1:
        return None, None
    m = where[0]
    upper = g.segments[:m]
    lower = g.segments[m + 1 :]
    up = (
        Fraction(upper[-1].p - upper[0].p, len(upper) - 1)
        if len(upper) >= 2
        else None
    )
    lo = (
        Fraction(lower[-1].q - lower[0].q, len(lower) - 1)
        if len(lower) >= 2
        else None
    )
    return up, lo


def value_multiplicity(g: SawtoothGraph, v: int) -> int:
    """Number of dots with value v."""
    if not 1 <= v <= g.n - 1:
        raise InvariantError(f"value {v} outside [1, {g.n - 1}]")
    return sum(1 for s in g.segments if s.p <= v <= s.q)


@dataclass(frozen=True)
class ShapeReport:
    is_spindle: int | None
    is_lower_triangle: bool
    is_upper_triangle: bool
    subgraph_of_spindle: tuple[int, tuple[tuple[int, int], ...]] | None
    upper_slope: Fraction | None
    lower_slope: Fraction | None


def classify_shape(g: SawtoothGraph) -> ShapeReport:
    k = is_spindle(g)
    up, lo = slopes(g)
    return ShapeReport(
        is_spindle=k,
        is_lower_triangle=k is not None and k == g.n - 2,
        is_upper_triangle=k is not None and k == 0,
        subgraph_of_spindle=is_subgraph_of_spindle(g),
        upper_slope=up,
        lower_slope=lo,
    )
