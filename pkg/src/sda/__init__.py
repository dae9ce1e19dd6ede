"""Screen-design aesthetics toolkit.

Annotate an interface as rectangles over a frame, score it on balance,
equilibrium, symmetry, sequence and rhythm (each in [0, 1]), aggregate the
five into a single aesthetic value, and rank competing layouts.
"""

from .model import (
    Frame,
    Layout,
    LayoutMeta,
    LayoutObject,
    LayoutValidationError,
    ObjectKind,
    Violation,
    ViolationCode,
    validate_layout,
)
from .partition import (
    QUADRANTS,
    Quadrant,
    Side,
    SubObject,
    quadrant_partition,
    split_at_horizontal_axis,
    split_at_vertical_axis,
)
from .metrics import (
    ComponentOutOfRangeError,
    DetailReport,
    Intermediates,
    MeasureReport,
    ObjectDetail,
    QuadrantStats,
    RankedEntry,
    READING_PRIORITY,
    aesthetic_value,
    balance,
    detail,
    equilibrium,
    measure,
    quadrant_stats,
    rank,
    rhythm,
    sequence,
    symmetry,
)
from .formats import (
    DocumentError,
    MalformedSyntaxError,
    SchemaError,
    layout_from_document,
    layout_to_document,
    parse_layout,
    render_report,
    report_to_dict,
    round4,
    serialize_layout,
)

__version__ = "0.1.0"

__all__ = [
    "Frame",
    "Layout",
    "LayoutMeta",
    "LayoutObject",
    "LayoutValidationError",
    "ObjectKind",
    "Violation",
    "ViolationCode",
    "validate_layout",
    "QUADRANTS",
    "Quadrant",
    "Side",
    "SubObject",
    "quadrant_partition",
    "split_at_horizontal_axis",
    "split_at_vertical_axis",
    "ComponentOutOfRangeError",
    "DetailReport",
    "Intermediates",
    "MeasureReport",
    "ObjectDetail",
    "QuadrantStats",
    "RankedEntry",
    "READING_PRIORITY",
    "aesthetic_value",
    "balance",
    "detail",
    "equilibrium",
    "measure",
    "quadrant_stats",
    "rank",
    "rhythm",
    "sequence",
    "symmetry",
    "DocumentError",
    "MalformedSyntaxError",
    "SchemaError",
    "layout_from_document",
    "layout_to_document",
    "parse_layout",
    "render_report",
    "report_to_dict",
    "round4",
    "serialize_layout",
    "__version__",
]
