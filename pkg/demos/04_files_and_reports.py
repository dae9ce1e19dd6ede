"""Layout files and report formats.

Layouts persist as strict JSON documents (version 1, unknown keys rejected).
Reports render as text and CSV with four-decimal presentation rounding, or
as JSON at full float precision.
"""

import tempfile
from pathlib import Path

from sda import detail, parse_layout, render_report, serialize_layout

document = b"""{
  "version": 1,
  "frame": {"width": 640, "height": 480},
  "objects": [
    {"id": "logo", "x": 20, "y": 20, "width": 120, "height": 60, "kind": "image"},
    {"id": "nav", "x": 160, "y": 20, "width": 460, "height": 60, "kind": "text"},
    {"id": "body", "x": 20, "y": 100, "width": 600, "height": 340, "kind": "text", "label": "article"}
  ],
  "meta": {"title": "article page"}
}
"""

layout = parse_layout(document)
print(f"parsed {len(layout.objects)} objects from a {layout.frame.width:g}x{layout.frame.height:g} frame")

# Serialization is canonical: parse(serialize(x)) == x, bytes are stable.
round_tripped = parse_layout(serialize_layout(layout))
print("round-trip preserves the layout:", round_tripped == layout)

report = detail(layout)
print("\n--- text ---")
print(render_report(report, "text", detail=True).decode(), end="")
print("--- csv ---")
print(render_report(report, "csv", source="article.json").decode(), end="")

with tempfile.TemporaryDirectory() as tmp:
    path = Path(tmp) / "article.json"
    path.write_bytes(serialize_layout(layout))
    print(f"--- saved to {path.name}; measure it with: sda measure {path.name} ---")
