"""Rank competing designs of the same page.

Four variants of one page, degraded step by step: the well-formed original,
a version with the columns nudged off-center, a version with one column
dropped low, and a version collapsed into a corner. Ranking follows the
aggregate aesthetic value with competition semantics (ties share a rank).
"""

from sda import Frame, Layout, LayoutObject, measure, rank, round4


def variant(name: str, boxes: list[tuple[str, float, float, float, float]]) -> tuple[str, Layout]:
    objects = tuple(LayoutObject(obj_id, x, y, w, h) for obj_id, x, y, w, h in boxes)
    return name, Layout(frame=Frame(400, 300), objects=objects)


variants = [
    variant("original", [
        ("left", 40, 80, 140, 140),
        ("right", 220, 80, 140, 140),
        ("header", 40, 20, 320, 40),
    ]),
    variant("nudged", [
        ("left", 20, 70, 140, 140),
        ("right", 190, 95, 140, 140),
        ("header", 30, 15, 320, 40),
    ]),
    variant("sunken", [
        ("left", 30, 140, 140, 140),
        ("right", 200, 40, 140, 120),
        ("header", 120, 10, 200, 25),
    ]),
    variant("cornered", [
        ("left", 5, 5, 90, 90),
        ("right", 100, 5, 60, 60),
        ("header", 5, 100, 70, 25),
    ]),
]

scores = [(name, measure(layout).aesthetic_value) for name, layout in variants]
print("rank  value   variant")
for entry in rank(scores):
    print(f"{entry.rank:>4}  {round4(entry.value)}  {entry.id}")
