"""Layout file format, report serialization and presentation rounding.

The layout document is strict JSON: version 1, fixed key sets (unknown keys
are rejected to catch annotation-tool skew early), objects in input order.
Reports render to JSON (full precision), CSV or plain text; textual numbers
are rounded half away from zero to exactly four decimals, which only happens
at presentation time.
"""

from __future__ import annotations

import csv
import io
import json
from decimal import ROUND_HALF_UP, Decimal
from typing import Any, Mapping

from .metrics import DetailReport, Intermediates, MeasureReport
from .model import Frame, Layout, LayoutMeta, LayoutObject, ObjectKind, validate_layout


class DocumentError(ValueError):
    """Base class for layout-document problems."""


class MalformedSyntaxError(DocumentError):
    """The bytes are not valid JSON."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.line = line
        self.column = column
        if line is not None:
            message = f"{message} (line {line}, column {column})"
        super().__init__(message)


class SchemaError(DocumentError):
    """The JSON is well-formed but does not match the layout schema."""

    def __init__(self, field: str, message: str):
        self.field = field
        super().__init__(f"{field}: {message}")


def round4(value: float) -> str:
    """Format a finite number with exactly four decimals, rounding half away
    from zero (0.95068 -> "0.9507")."""
    return str(Decimal(value).quantize(Decimal("0.0001"), rounding=ROUND_HALF_UP))


def _reject_constant(name: str) -> Any:
    raise MalformedSyntaxError(f"non-finite JSON constant {name!r} is not allowed")


def _require_keys(obj: Mapping[str, Any], path: str, required: tuple[str, ...], optional: tuple[str, ...] = ()) -> None:
    for key in obj:
        if key not in required and key not in optional:
            raise SchemaError(f"{path}{key}" if path else key, "unknown key")
    for key in required:
        if key not in obj:
            raise SchemaError(f"{path}{key}" if path else key, "missing required key")


def _as_dict(value: Any, field: str) -> Mapping[str, Any]:
    if not isinstance(value, dict):
        raise SchemaError(field, "must be a JSON object")
    return value


def _as_number(value: Any, field: str) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise SchemaError(field, "must be a number")
    return float(value)


def _as_str(value: Any, field: str) -> str:
    if not isinstance(value, str):
        raise SchemaError(field, "must be a string")
    return value


def layout_from_document(raw: Any) -> Layout:
    """Build and validate a Layout from already-decoded JSON data."""
    doc = _as_dict(raw, "$")
    # Missing keys are reported frame-first: the frame is what orients every
    # other check, and an empty document should point there.
    _require_keys(doc, "", ("frame", "objects", "version"), ("meta",))
    version = doc["version"]
    if isinstance(version, bool) or not isinstance(version, int) or version != 1:
        raise SchemaError("version", f"unsupported version {version!r}, expected 1")

    frame_doc = _as_dict(doc["frame"], "frame")
    _require_keys(frame_doc, "frame.", ("width", "height"))
    frame = Frame(
        width=_as_number(frame_doc["width"], "frame.width"),
        height=_as_number(frame_doc["height"], "frame.height"),
    )

    if not isinstance(doc["objects"], list):
        raise SchemaError("objects", "must be an array")
    objects = []
    for i, item in enumerate(doc["objects"]):
        path = f"objects[{i}]"
        obj_doc = _as_dict(item, path)
        _require_keys(obj_doc, f"{path}.", ("id", "x", "y", "width", "height"), ("kind", "label"))
        kind_raw = obj_doc.get("kind", "other")
        try:
            kind = ObjectKind(_as_str(kind_raw, f"{path}.kind"))
        except ValueError:
            raise SchemaError(f"{path}.kind", f"must be one of image/text/other, got {kind_raw!r}") from None
        label = obj_doc.get("label")
        objects.append(
            LayoutObject(
                id=_as_str(obj_doc["id"], f"{path}.id"),
                x=_as_number(obj_doc["x"], f"{path}.x"),
                y=_as_number(obj_doc["y"], f"{path}.y"),
                width=_as_number(obj_doc["width"], f"{path}.width"),
                height=_as_number(obj_doc["height"], f"{path}.height"),
                kind=kind,
                label=_as_str(label, f"{path}.label") if label is not None else None,
            )
        )

    meta = None
    if "meta" in doc:
        meta_doc = _as_dict(doc["meta"], "meta")
        _require_keys(meta_doc, "meta.", (), ("title", "screenshot"))
        meta = LayoutMeta(
            title=_as_str(meta_doc["title"], "meta.title") if "title" in meta_doc else None,
            screenshot=_as_str(meta_doc["screenshot"], "meta.screenshot") if "screenshot" in meta_doc else None,
        )

    return validate_layout(Layout(frame=frame, objects=tuple(objects), meta=meta, version=1))


def parse_layout(data: bytes | str) -> Layout:
    """Parse and validate a layout document.

    Raises :class:`MalformedSyntaxError` with position context for bad JSON,
    :class:`SchemaError` with a field path for schema violations, and
    :class:`~sda.model.LayoutValidationError` for invariant violations.
    """
    text = data.decode("utf-8") if isinstance(data, bytes) else data
    try:
        raw = json.loads(text, parse_constant=_reject_constant)
    except json.JSONDecodeError as exc:
        raise MalformedSyntaxError(exc.msg, exc.lineno, exc.colno) from None
    return layout_from_document(raw)


def _num(value: float) -> int | float:
    # Canonical form prints whole-pixel coordinates without a fraction.
    return int(value) if float(value).is_integer() else value


def layout_to_document(layout: Layout) -> dict[str, Any]:
    """The canonical JSON-ready form of a layout: schema key order, objects
    in input order, empty meta omitted."""
    doc: dict[str, Any] = {
        "version": layout.version,
        "frame": {"width": _num(layout.frame.width), "height": _num(layout.frame.height)},
        "objects": [],
    }
    for obj in layout.objects:
        item: dict[str, Any] = {
            "id": obj.id,
            "x": _num(obj.x),
            "y": _num(obj.y),
            "width": _num(obj.width),
            "height": _num(obj.height),
            "kind": obj.kind.value,
        }
        if obj.label is not None:
            item["label"] = obj.label
        doc["objects"].append(item)
    if layout.meta is not None and not layout.meta.is_empty():
        meta: dict[str, Any] = {}
        if layout.meta.title is not None:
            meta["title"] = layout.meta.title
        if layout.meta.screenshot is not None:
            meta["screenshot"] = layout.meta.screenshot
        doc["meta"] = meta
    return doc


def serialize_layout(layout: Layout) -> bytes:
    """Serialize a valid layout to canonical UTF-8 JSON bytes.

    ``parse_layout(serialize_layout(x))`` returns a Layout equal to ``x``.
    """
    return (json.dumps(layout_to_document(layout), indent=2, ensure_ascii=False) + "\n").encode("utf-8")


_TEXT_LINES = (
    ("Balance", "balance"),
    ("Equilibrium", "equilibrium"),
    ("Symmetry", "symmetry"),
    ("Sequence", "sequence"),
    ("Rhythm", "rhythm"),
    ("Aesthetic value (av)", "aesthetic_value"),
)

CSV_COLUMNS = (
    "path",
    "objects",
    "balance",
    "equilibrium",
    "symmetry",
    "sequence",
    "rhythm",
    "aesthetic_value",
)


def _intermediates_to_dict(inter: Intermediates) -> dict[str, Any]:
    return {
        "balance_vertical": inter.balance_vertical,
        "balance_horizontal": inter.balance_horizontal,
        "equilibrium_x": inter.equilibrium_x,
        "equilibrium_y": inter.equilibrium_y,
        "symmetry_vertical": inter.symmetry_vertical,
        "symmetry_horizontal": inter.symmetry_horizontal,
        "symmetry_radial": inter.symmetry_radial,
        "rhythm_x": inter.rhythm_x,
        "rhythm_y": inter.rhythm_y,
        "rhythm_area": inter.rhythm_area,
        "reading_priority": {q.value: v for q, v in inter.reading_priority.items()},
        "weight_rank": {q.value: v for q, v in inter.weight_rank.items()},
    }


def _detail_to_dict(report: DetailReport) -> dict[str, Any]:
    return {
        "object_count": report.object_count,
        "objects": [
            {
                "id": row.id,
                "width": row.width,
                "height": row.height,
                "area": row.area,
                "center_x": row.center_x,
                "center_y": row.center_y,
                "offset_x": row.offset_x,
                "offset_y": row.offset_y,
            }
            for row in report.objects
        ],
    }


def report_to_dict(report: MeasureReport | DetailReport, detail: bool = False) -> dict[str, Any]:
    """Full-precision JSON-ready form of a report; intermediates and the
    per-object detail block are included only when ``detail`` is set."""
    mr = report.report if isinstance(report, DetailReport) else report
    doc: dict[str, Any] = {
        "balance": mr.balance,
        "equilibrium": mr.equilibrium,
        "symmetry": mr.symmetry,
        "sequence": mr.sequence,
        "rhythm": mr.rhythm,
        "aesthetic_value": mr.aesthetic_value,
    }
    if detail:
        doc["intermediates"] = _intermediates_to_dict(mr.intermediates)
        if isinstance(report, DetailReport):
            doc["detail"] = _detail_to_dict(report)
    return doc


def csv_header() -> str:
    return ",".join(CSV_COLUMNS) + "\n"


def csv_row(report: DetailReport, source: str) -> str:
    mr = report.report
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(
        [
            source,
            report.object_count,
            round4(mr.balance),
            round4(mr.equilibrium),
            round4(mr.symmetry),
            round4(mr.sequence),
            round4(mr.rhythm),
            round4(mr.aesthetic_value),
        ]
    )
    return buf.getvalue()


def _format_quantity(value: float) -> str:
    return format(value, "g")


def _render_text(report: MeasureReport | DetailReport, detail: bool) -> str:
    mr = report.report if isinstance(report, DetailReport) else report
    lines = [f"{label} {round4(getattr(mr, attr))}" for label, attr in _TEXT_LINES]
    if detail and isinstance(report, DetailReport):
        lines.append(f"Objects {report.object_count}")
        lines.append("id width height area center_x center_y offset_x offset_y")
        for row in report.objects:
            lines.append(
                " ".join(
                    [row.id]
                    + [
                        _format_quantity(v)
                        for v in (
                            row.width,
                            row.height,
                            row.area,
                            row.center_x,
                            row.center_y,
                            row.offset_x,
                            row.offset_y,
                        )
                    ]
                )
            )
    return "\n".join(lines) + "\n"


def render_report(
    report: MeasureReport | DetailReport,
    fmt: str = "text",
    *,
    detail: bool = False,
    source: str = "-",
) -> bytes:
    """Render a report deterministically as ``json``, ``csv`` or ``text``.

    JSON keeps full float precision; CSV and text round to four decimals.
    CSV needs a :class:`DetailReport` (for the object count) and ignores the
    detail flag; text appends the per-object table when ``detail`` is set.
    """
    if fmt == "json":
        doc = report_to_dict(report, detail=detail)
        return (json.dumps(doc, indent=2, ensure_ascii=False) + "\n").encode("utf-8")
    if fmt == "text":
        return _render_text(report, detail).encode("utf-8")
    if fmt == "csv":
        if not isinstance(report, DetailReport):
            raise ValueError("csv format requires a DetailReport")
        return (csv_header() + csv_row(report, source)).encode("utf-8")
    raise ValueError(f"unknown report format {fmt!r}")
