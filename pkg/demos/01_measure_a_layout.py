"""Score a single layout.

A layout is a frame (the page canvas) plus axis-aligned rectangles for the
things on it. Five measures each map the geometry to [0, 1]; their mean is
the overall aesthetic value.
"""

from sda import Frame, Layout, LayoutObject, ObjectKind, measure, round4

# A small: header banner, a hero image on the left, text on the right,
# and a footer. 800x600 canvas.
page = Layout(
    frame=Frame(800, 600),
    objects=(
        LayoutObject("header", x=40, y=20, width=720, height=80, kind=ObjectKind.TEXT),
        LayoutObject("hero", x=60, y=140, width=320, height=300, kind=ObjectKind.IMAGE),
        LayoutObject("copy", x=420, y=140, width=320, height=300, kind=ObjectKind.TEXT),
        LayoutObject("footer", x=40, y=500, width=720, height=60, kind=ObjectKind.TEXT),
    ),
)

report = measure(page)

print("A tidy two-column page:")
for name, score in zip(
    ("balance", "equilibrium", "symmetry", "sequence", "rhythm"), report.components()
):
    print(f"  {name:<12} {round4(score)}")
print(f"  {'overall':<12} {round4(report.aesthetic_value)}")

# Push everything into one corner and the scores collapse.
cramped = Layout(
    frame=Frame(800, 600),
    objects=(LayoutObject("blob", x=10, y=10, width=150, height=120),),
)
print("\nEverything crammed into the top-left corner:")
print(f"  overall      {round4(measure(cramped).aesthetic_value)}")

# The signed intermediates say *which way* a layout leans.
inter = measure(cramped).intermediates
print(f"  leans left   (vertical imbalance {inter.balance_vertical:+.2f})")
print(f"  leans up     (horizontal imbalance {inter.balance_horizontal:+.2f})")
