"""The five screen-layout aesthetics measures and their aggregate value.

Every measure maps a valid layout to a score in [0, 1] (1 = best):

* balance      - equal area-weighted distance on both sides of each axis;
* equilibrium  - the objects' center of mass sits at the frame center;
* symmetry     - per-quadrant geometry agrees across the vertical,
                 horizontal and radial (diagonal) pairings;
* sequence     - quadrant visual weight follows the left-to-right,
                 top-to-bottom reading pattern;
* rhythm       - per-quadrant mean position and size statistics are uniform.

The aggregate aesthetic value is the plain mean of the five.

All functions are pure and operate on immutable inputs; callers may evaluate
many layouts concurrently. Sums use ``math.fsum`` so results do not depend on
object order.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Mapping, NamedTuple, Sequence

from .model import (
    Layout,
    LayoutValidationError,
    Violation,
    ViolationCode,
    validate_layout,
)
from .partition import (
    QUADRANTS,
    Quadrant,
    Side,
    quadrant_partition,
    split_at_horizontal_axis,
    split_at_vertical_axis,
)

#: Reading-pattern priority of each quadrant: upper-left is scanned first.
READING_PRIORITY: Mapping[Quadrant, int] = {
    Quadrant.UL: 4,
    Quadrant.UR: 3,
    Quadrant.LL: 2,
    Quadrant.LR: 1,
}

_VERTICAL_PAIRS = ((Quadrant.UL, Quadrant.UR), (Quadrant.LL, Quadrant.LR))
_HORIZONTAL_PAIRS = ((Quadrant.UL, Quadrant.LL), (Quadrant.UR, Quadrant.LR))
_RADIAL_PAIRS = ((Quadrant.UL, Quadrant.LR), (Quadrant.UR, Quadrant.LL))
_ALL_PAIRS = tuple(combinations(QUADRANTS, 2))


class ComponentOutOfRangeError(ValueError):
    """A component score handed to :func:`aesthetic_value` is outside [0, 1]."""


@dataclass(frozen=True, slots=True)
class QuadrantStats:
    """Aggregate geometry of the sub-objects inside one quadrant.

    Offsets are absolute distances of piece centers from the frame center
    lines; ``slope_sum`` accumulates |dy|/|dx| per piece and ``radius_sum``
    the straight-line center distances.
    """

    count: int
    area: float
    x_offset_sum: float
    y_offset_sum: float
    width_sum: float
    height_sum: float
    slope_sum: float
    radius_sum: float


class BalanceScore(NamedTuple):
    score: float
    vertical: float  # signed left-minus-right imbalance in [-1, 1]
    horizontal: float  # signed top-minus-bottom imbalance in [-1, 1]


class EquilibriumScore(NamedTuple):
    score: float
    x: float  # signed normalized first moment in [-1, 1]
    y: float


class SymmetryScore(NamedTuple):
    score: float
    vertical: float
    horizontal: float
    radial: float


class SequenceScore(NamedTuple):
    score: float
    weight_rank: dict[Quadrant, int]  # rank 4..1 by quadrant visual weight


class RhythmScore(NamedTuple):
    score: float
    x: float
    y: float
    area: float


class RankedEntry(NamedTuple):
    id: str
    value: float
    rank: int


@dataclass(frozen=True, slots=True)
class Intermediates:
    """Signed axis terms, per-direction differences and quadrant ranks that
    the component scores are assembled from."""

    balance_vertical: float
    balance_horizontal: float
    equilibrium_x: float
    equilibrium_y: float
    symmetry_vertical: float
    symmetry_horizontal: float
    symmetry_radial: float
    rhythm_x: float
    rhythm_y: float
    rhythm_area: float
    reading_priority: dict[Quadrant, int]
    weight_rank: dict[Quadrant, int]


@dataclass(frozen=True, slots=True)
class MeasureReport:
    """All five component scores, the aggregate, and the intermediates."""

    balance: float
    equilibrium: float
    symmetry: float
    sequence: float
    rhythm: float
    aesthetic_value: float
    intermediates: Intermediates

    def components(self) -> tuple[float, float, float, float, float]:
        return (self.balance, self.equilibrium, self.symmetry, self.sequence, self.rhythm)


@dataclass(frozen=True, slots=True)
class ObjectDetail:
    """Per-object geometry row of the detail report."""

    id: str
    width: float
    height: float
    area: float
    center_x: float
    center_y: float
    offset_x: float  # signed center offset from the frame center
    offset_y: float


@dataclass(frozen=True, slots=True)
class DetailReport:
    """Object-by-object geometry table plus the full measure report."""

    object_count: int
    objects: tuple[ObjectDetail, ...]
    report: MeasureReport


def _require_objects(layout: Layout) -> None:
    if not layout.objects:
        raise LayoutValidationError(
            [Violation(ViolationCode.EMPTY_OBJECTS, "layout has no objects to measure")]
        )


def _signed_imbalance(a: float, b: float) -> float:
    # Both weights zero means no asymmetry detected.
    if a == 0 and b == 0:
        return 0.0
    return (a - b) / max(a, b)


def balance(layout: Layout) -> BalanceScore:
    """Weigh each half of the screen by area times distance from the axis.

    Objects straddling an axis are split there, each piece weighing in with
    its own center and area. The signed per-axis imbalance is the weight
    difference over the heavier side.
    """
    _require_objects(layout)
    x_c = layout.frame.center_x
    y_c = layout.frame.center_y
    weights: dict[Side, list[float]] = {side: [] for side in Side}
    for obj in layout.objects:
        for p in split_at_vertical_axis(obj, x_c):
            weights[p.side].append(p.area * abs(p.center_x - x_c))
        for p in split_at_horizontal_axis(obj, y_c):
            weights[p.side].append(p.area * abs(p.center_y - y_c))
    vertical = _signed_imbalance(math.fsum(weights[Side.LEFT]), math.fsum(weights[Side.RIGHT]))
    horizontal = _signed_imbalance(math.fsum(weights[Side.TOP]), math.fsum(weights[Side.BOTTOM]))
    return BalanceScore(1 - (abs(vertical) + abs(horizontal)) / 2, vertical, horizontal)


def equilibrium(layout: Layout) -> EquilibriumScore:
    """Compare the objects' center of mass with the frame center.

    Uses whole-object first moments (no splitting); each axis term is the
    area-weighted mean offset normalized by the half-extent of the frame.
    """
    _require_objects(layout)
    frame = layout.frame
    total_area = math.fsum(o.area for o in layout.objects)
    moment_x = math.fsum(o.area * (o.center_x - frame.center_x) for o in layout.objects)
    moment_y = math.fsum(o.area * (o.center_y - frame.center_y) for o in layout.objects)
    e_x = 2 * moment_x / (frame.width * total_area)
    e_y = 2 * moment_y / (frame.height * total_area)
    return EquilibriumScore(1 - (abs(e_x) + abs(e_y)) / 2, e_x, e_y)


def quadrant_stats(layout: Layout) -> dict[Quadrant, QuadrantStats]:
    """Aggregate the quadrant partition into the per-quadrant statistics that
    feed symmetry, sequence and rhythm."""
    _require_objects(layout)
    frame = layout.frame
    x_c, y_c = frame.center_x, frame.center_y
    # Partition pieces have centers strictly off-axis; the guard only covers
    # degenerate float slivers.
    eps = 1e-9 * max(frame.width, frame.height)
    stats: dict[Quadrant, QuadrantStats] = {}
    for quad, pieces in quadrant_partition(layout).items():
        dx = [abs(p.center_x - x_c) for p in pieces]
        dy = [abs(p.center_y - y_c) for p in pieces]
        stats[quad] = QuadrantStats(
            count=len(pieces),
            area=math.fsum(p.area for p in pieces),
            x_offset_sum=math.fsum(dx),
            y_offset_sum=math.fsum(dy),
            width_sum=math.fsum(p.width for p in pieces),
            height_sum=math.fsum(p.height for p in pieces),
            slope_sum=math.fsum(b / max(a, eps) for a, b in zip(dx, dy)),
            radius_sum=math.fsum(math.hypot(a, b) for a, b in zip(dx, dy)),
        )
    return stats


_STAT_FAMILIES = (
    "x_offset_sum",
    "y_offset_sum",
    "height_sum",
    "width_sum",
    "slope_sum",
    "radius_sum",
)


def _normalize(values: Mapping[Quadrant, float]) -> dict[Quadrant, float]:
    # An all-zero family carries no asymmetry signal and normalizes to zeros.
    peak = max(values.values())
    if peak <= 0:
        return {q: 0.0 for q in QUADRANTS}
    return {q: values[q] / peak for q in QUADRANTS}


def _direction_difference(
    families: Sequence[Mapping[Quadrant, float]],
    pairs: Sequence[tuple[Quadrant, Quadrant]],
) -> float:
    terms = [abs(fam[a] - fam[b]) for fam in families for a, b in pairs]
    return math.fsum(terms) / len(terms)


def _symmetry_from_stats(stats: Mapping[Quadrant, QuadrantStats]) -> SymmetryScore:
    families = [
        _normalize({q: getattr(stats[q], name) for q in QUADRANTS})
        for name in _STAT_FAMILIES
    ]
    vertical = _direction_difference(families, _VERTICAL_PAIRS)
    horizontal = _direction_difference(families, _HORIZONTAL_PAIRS)
    radial = _direction_difference(families, _RADIAL_PAIRS)
    return SymmetryScore(1 - (vertical + horizontal + radial) / 3, vertical, horizontal, radial)


def symmetry(layout: Layout) -> SymmetryScore:
    """Agreement of normalized quadrant statistics across the vertical,
    horizontal and radial quadrant pairings."""
    return _symmetry_from_stats(quadrant_stats(layout))


def _sequence_from_stats(stats: Mapping[Quadrant, QuadrantStats]) -> SequenceScore:
    weight = {q: READING_PRIORITY[q] * stats[q].area for q in QUADRANTS}
    # Heaviest quadrant first; ties go to the quadrant read earlier.
    ordering = sorted(QUADRANTS, key=lambda q: (weight[q], READING_PRIORITY[q]), reverse=True)
    ranks = {q: 4 - position for position, q in enumerate(ordering)}
    mismatch = sum(abs(READING_PRIORITY[q] - ranks[q]) for q in QUADRANTS)
    return SequenceScore(1 - mismatch / 8, ranks)


def sequence(layout: Layout) -> SequenceScore:
    """Agreement of the quadrant visual-weight ordering with the
    left-to-right, top-to-bottom reading pattern."""
    return _sequence_from_stats(quadrant_stats(layout))


def _rhythm_from_stats(stats: Mapping[Quadrant, QuadrantStats]) -> RhythmScore:
    def mean_family(total: str) -> dict[Quadrant, float]:
        return {
            q: (getattr(stats[q], total) / stats[q].count if stats[q].count else 0.0)
            for q in QUADRANTS
        }

    diffs = []
    for family in ("x_offset_sum", "y_offset_sum", "area"):
        normalized = _normalize(mean_family(family))
        diffs.append(_direction_difference([normalized], _ALL_PAIRS))
    x_diff, y_diff, area_diff = diffs
    return RhythmScore(1 - (x_diff + y_diff + area_diff) / 3, x_diff, y_diff, area_diff)


def rhythm(layout: Layout) -> RhythmScore:
    """Uniformity of per-quadrant mean offsets and mean piece area."""
    return _rhythm_from_stats(quadrant_stats(layout))


def aesthetic_value(components: Sequence[float]) -> float:
    """Mean of the five component scores; each must lie in [0, 1]."""
    if len(components) != 5:
        raise ValueError(f"expected 5 component scores, got {len(components)}")
    for value in components:
        if not (0.0 <= value <= 1.0):
            raise ComponentOutOfRangeError(f"component score {value!r} outside [0, 1]")
    return math.fsum(components) / 5


def measure(layout: Layout) -> MeasureReport:
    """Validate the layout and compute all five measures plus the aggregate."""
    validate_layout(layout)
    bal = balance(layout)
    equ = equilibrium(layout)
    stats = quadrant_stats(layout)
    sym = _symmetry_from_stats(stats)
    seq = _sequence_from_stats(stats)
    rhy = _rhythm_from_stats(stats)
    value = aesthetic_value((bal.score, equ.score, sym.score, seq.score, rhy.score))
    return MeasureReport(
        balance=bal.score,
        equilibrium=equ.score,
        symmetry=sym.score,
        sequence=seq.score,
        rhythm=rhy.score,
        aesthetic_value=value,
        intermediates=Intermediates(
            balance_vertical=bal.vertical,
            balance_horizontal=bal.horizontal,
            equilibrium_x=equ.x,
            equilibrium_y=equ.y,
            symmetry_vertical=sym.vertical,
            symmetry_horizontal=sym.horizontal,
            symmetry_radial=sym.radial,
            rhythm_x=rhy.x,
            rhythm_y=rhy.y,
            rhythm_area=rhy.area,
            reading_priority=dict(READING_PRIORITY),
            weight_rank=seq.weight_rank,
        ),
    )


def detail(layout: Layout) -> DetailReport:
    """Per-object geometry (sizes, centers, offsets from the frame center)
    together with the full measure report."""
    validate_layout(layout)
    frame = layout.frame
    rows = tuple(
        ObjectDetail(
            id=o.id,
            width=o.width,
            height=o.height,
            area=o.area,
            center_x=o.center_x,
            center_y=o.center_y,
            offset_x=o.center_x - frame.center_x,
            offset_y=o.center_y - frame.center_y,
        )
        for o in layout.objects
    )
    return DetailReport(object_count=len(rows), objects=rows, report=measure(layout))


def rank(entries: Iterable[tuple[str, float]]) -> list[RankedEntry]:
    """Order (id, value) pairs by value descending with competition ranking:
    equal values share a rank and the next rank skips accordingly."""
    ordered = sorted(entries, key=lambda item: item[1], reverse=True)
    ranked: list[RankedEntry] = []
    for position, (entry_id, value) in enumerate(ordered):
        if ranked and value == ranked[-1].value:
            ranked.append(RankedEntry(entry_id, value, ranked[-1].rank))
        else:
            ranked.append(RankedEntry(entry_id, value, position + 1))
    return ranked
