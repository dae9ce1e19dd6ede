"""Axis splitting and quadrant partitioning of layout objects.

Objects that straddle a center line are cut at the line and each piece
contributes with its own center and area. An object whose edge merely touches
a center line is not split; it belongs to the side holding its interior.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .model import Layout, LayoutObject


class Side(str, Enum):
    LEFT = "left"
    RIGHT = "right"
    TOP = "top"
    BOTTOM = "bottom"


class Quadrant(str, Enum):
    UL = "UL"
    UR = "UR"
    LL = "LL"
    LR = "LR"


QUADRANTS: tuple[Quadrant, ...] = (Quadrant.UL, Quadrant.UR, Quadrant.LL, Quadrant.LR)

_QUADRANT_OF: dict[tuple[Side, Side], Quadrant] = {
    (Side.LEFT, Side.TOP): Quadrant.UL,
    (Side.RIGHT, Side.TOP): Quadrant.UR,
    (Side.LEFT, Side.BOTTOM): Quadrant.LL,
    (Side.RIGHT, Side.BOTTOM): Quadrant.LR,
}


@dataclass(frozen=True, slots=True)
class SubObject:
    """A positive-area piece of an object lying wholly on one side of an
    axis (``side``) or inside one quadrant (``quadrant``); edges may touch
    the center lines but the interior never crosses them."""

    parent_id: str
    x: float
    y: float
    width: float
    height: float
    side: Side | None = None
    quadrant: Quadrant | None = None

    @property
    def center_x(self) -> float:
        return self.x + self.width / 2

    @property
    def center_y(self) -> float:
        return self.y + self.height / 2

    @property
    def area(self) -> float:
        return self.width * self.height


def _cut_spans(start: float, length: float, axis: float) -> list[tuple[float, float, Side]]:
    """Cut the 1-D span [start, start+length] at ``axis``.

    Returns (start, length, below/above) pieces; a span that only touches the
    axis stays whole. The Side values returned are LEFT/RIGHT placeholders and
    are remapped by the caller for the y direction.
    """
    end = start + length
    if end <= axis:
        return [(start, length, Side.LEFT)]
    if start >= axis:
        return [(start, length, Side.RIGHT)]
    return [(start, axis - start, Side.LEFT), (axis, end - axis, Side.RIGHT)]


_X_TO_Y_SIDE = {Side.LEFT: Side.TOP, Side.RIGHT: Side.BOTTOM}


def split_at_vertical_axis(obj: LayoutObject, x_c: float) -> list[SubObject]:
    """Split ``obj`` at the vertical center line x = x_c into 1 or 2 pieces
    tagged left/right. Piece areas sum to the object's area."""
    return [
        SubObject(obj.id, x, obj.y, w, obj.height, side=side)
        for x, w, side in _cut_spans(obj.x, obj.width, x_c)
    ]


def split_at_horizontal_axis(obj: LayoutObject, y_c: float) -> list[SubObject]:
    """Split ``obj`` at the horizontal center line y = y_c into 1 or 2 pieces
    tagged top/bottom (top = smaller y)."""
    return [
        SubObject(obj.id, obj.x, y, obj.width, h, side=_X_TO_Y_SIDE[side])
        for y, h, side in _cut_spans(obj.y, obj.height, y_c)
    ]


def quadrant_partition(layout: Layout) -> dict[Quadrant, list[SubObject]]:
    """Split every object at both center lines into 1-4 positive-area pieces
    and bucket them by the quadrant containing each piece's interior.

    The union of a given object's pieces covers exactly that object, so piece
    areas sum to the object's area.
    """
    x_c = layout.frame.center_x
    y_c = layout.frame.center_y
    parts: dict[Quadrant, list[SubObject]] = {q: [] for q in QUADRANTS}
    for obj in layout.objects:
        for x, w, x_side in _cut_spans(obj.x, obj.width, x_c):
            for y, h, y_raw in _cut_spans(obj.y, obj.height, y_c):
                quad = _QUADRANT_OF[(x_side, _X_TO_Y_SIDE[y_raw])]
                parts[quad].append(
                    SubObject(obj.id, x, y, w, h, quadrant=quad)
                )
    return parts
