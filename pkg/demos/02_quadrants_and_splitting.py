"""How the quadrant-based measures see a layout.

Symmetry, sequence and rhythm work on per-quadrant statistics. Objects that
straddle a center line are cut there, each piece counting toward its own
quadrant with its own center and area.
"""

from sda import (
    Frame,
    Layout,
    LayoutObject,
    quadrant_partition,
    quadrant_stats,
    split_at_vertical_axis,
)

frame = Frame(100, 100)

# This object spans x in [40, 60]; the vertical center line x=50 cuts it.
straddler = LayoutObject("banner", x=40, y=10, width=20, height=15)
for piece in split_at_vertical_axis(straddler, frame.center_x):
    print(f"{piece.side.value:>5} piece: x={piece.x} width={piece.width} area={piece.area}")

# A full partition buckets every piece by quadrant.
layout = Layout(
    frame=frame,
    objects=(
        straddler,
        LayoutObject("sidebar", x=5, y=55, width=20, height=40),
        LayoutObject("badge", x=70, y=70, width=12, height=12),
    ),
)
print("\nPer-quadrant pieces:")
for quadrant, pieces in quadrant_partition(layout).items():
    names = ", ".join(f"{p.parent_id}({p.width:g}x{p.height:g})" for p in pieces) or "-"
    print(f"  {quadrant.value}: {names}")

# The measures consume these aggregates, never the raw pieces.
print("\nPer-quadrant statistics (count, area, sum |dx|, sum |dy|):")
for quadrant, s in quadrant_stats(layout).items():
    print(f"  {quadrant.value}: n={s.count} area={s.area:g} dx={s.x_offset_sum:g} dy={s.y_offset_sum:g}")
