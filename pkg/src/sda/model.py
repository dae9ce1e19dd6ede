"""Domain types for frames, annotated objects and layouts, plus validation.

Coordinates are real-valued pixels with the origin at the top-left corner and
y growing downward; "top" therefore means smaller y. All types are immutable
values, so they are safe to share between threads.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Iterable


class ObjectKind(str, Enum):
    """What an annotated rectangle depicts. Metadata only: no measure uses it."""

    IMAGE = "image"
    TEXT = "text"
    OTHER = "other"


@dataclass(frozen=True, slots=True)
class Frame:
    """The interface canvas. Its center lines split the screen into halves
    and quadrants that every quadrant-based measure refers to."""

    width: float
    height: float

    def __post_init__(self) -> None:
        object.__setattr__(self, "width", float(self.width))
        object.__setattr__(self, "height", float(self.height))

    @property
    def center_x(self) -> float:
        return self.width / 2

    @property
    def center_y(self) -> float:
        return self.height / 2


@dataclass(frozen=True, slots=True)
class LayoutObject:
    """An axis-aligned rectangle annotated on a frame."""

    id: str
    x: float
    y: float
    width: float
    height: float
    kind: ObjectKind = ObjectKind.OTHER
    label: str | None = None

    def __post_init__(self) -> None:
        for name in ("x", "y", "width", "height"):
            object.__setattr__(self, name, float(getattr(self, name)))

    @property
    def right(self) -> float:
        return self.x + self.width

    @property
    def bottom(self) -> float:
        return self.y + self.height

    @property
    def center_x(self) -> float:
        return self.x + self.width / 2

    @property
    def center_y(self) -> float:
        return self.y + self.height / 2

    @property
    def area(self) -> float:
        return self.width * self.height


@dataclass(frozen=True, slots=True)
class LayoutMeta:
    """Optional descriptive metadata attached to a layout."""

    title: str | None = None
    screenshot: str | None = None

    def is_empty(self) -> bool:
        return self.title is None and self.screenshot is None


@dataclass(frozen=True)
class Layout:
    """A frame plus the objects annotated on it: the unit of measurement."""

    frame: Frame
    objects: tuple[LayoutObject, ...]
    meta: LayoutMeta | None = None
    version: int = 1

    def __post_init__(self) -> None:
        # Accept any iterable of objects but store an immutable tuple.
        if not isinstance(self.objects, tuple):
            object.__setattr__(self, "objects", tuple(self.objects))


class ViolationCode(str, Enum):
    EMPTY_OBJECTS = "empty_objects"
    BAD_FRAME = "bad_frame"
    NON_POSITIVE_SIZE = "non_positive_size"
    OUT_OF_FRAME = "out_of_frame"
    DUPLICATE_ID = "duplicate_id"


@dataclass(frozen=True, slots=True)
class Violation:
    """One broken layout invariant, with the offending object where relevant."""

    code: ViolationCode
    message: str
    object_id: str | None = None


class LayoutValidationError(ValueError):
    """Raised by :func:`validate_layout`; carries the complete violation list."""

    def __init__(self, violations: Iterable[Violation]):
        self.violations: tuple[Violation, ...] = tuple(violations)
        super().__init__("; ".join(v.message for v in self.violations))


def _check_frame(frame: Frame, out: list[Violation]) -> None:
    for name, value in (("width", frame.width), ("height", frame.height)):
        if not (math.isfinite(value) and value > 0):
            out.append(
                Violation(
                    ViolationCode.BAD_FRAME,
                    f"frame {name} must be a positive finite number, got {value!r}",
                )
            )


def _check_object(obj: LayoutObject, frame: Frame, out: list[Violation]) -> None:
    size_ok = True
    for name, value in (("width", obj.width), ("height", obj.height)):
        if not (math.isfinite(value) and value > 0):
            size_ok = False
            out.append(
                Violation(
                    ViolationCode.NON_POSITIVE_SIZE,
                    f"object {obj.id!r}: {name} must be positive, got {value!r}",
                    object_id=obj.id,
                )
            )
    inside = (
        obj.x >= 0
        and obj.y >= 0
        and obj.right <= frame.width
        and obj.bottom <= frame.height
    )
    if size_ok and not inside:
        out.append(
            Violation(
                ViolationCode.OUT_OF_FRAME,
                f"object {obj.id!r} extends outside the frame: "
                f"({obj.x}, {obj.y}, {obj.width}, {obj.height}) "
                f"vs frame {frame.width}x{frame.height}",
                object_id=obj.id,
            )
        )


def validate_layout(layout: Layout) -> Layout:
    """Return ``layout`` unchanged if every invariant holds.

    Otherwise raise :class:`LayoutValidationError` carrying the complete list
    of violations, not just the first one found.
    """
    violations: list[Violation] = []
    _check_frame(layout.frame, violations)
    if not layout.objects:
        violations.append(
            Violation(ViolationCode.EMPTY_OBJECTS, "layout has no objects to measure")
        )
    seen: set[str] = set()
    for obj in layout.objects:
        if obj.id in seen:
            violations.append(
                Violation(
                    ViolationCode.DUPLICATE_ID,
                    f"duplicate object id {obj.id!r}",
                    object_id=obj.id,
                )
            )
        seen.add(obj.id)
        _check_object(obj, layout.frame, violations)
    if violations:
        raise LayoutValidationError(violations)
    return layout
