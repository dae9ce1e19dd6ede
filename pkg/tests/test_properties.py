import math

from hypothesis import given, settings, strategies as st

from sda import (
    Frame,
    Layout,
    LayoutObject,
    measure,
    parse_layout,
    quadrant_partition,
    round4,
    serialize_layout,
    validate_layout,
)
from layoutgen import mirrored_across_horizontal_axis, mirrored_across_vertical_axis


@st.composite
def layouts(draw) -> Layout:
    width = draw(st.integers(min_value=8, max_value=1200))
    height = draw(st.integers(min_value=8, max_value=1200))
    count = draw(st.integers(min_value=1, max_value=8))
    objects = []
    for i in range(count):
        w = draw(st.integers(min_value=1, max_value=width))
        h = draw(st.integers(min_value=1, max_value=height))
        x = draw(st.integers(min_value=0, max_value=width - w))
        y = draw(st.integers(min_value=0, max_value=height - h))
        objects.append(LayoutObject(f"o{i + 1}", x, y, w, h))
    return Layout(frame=Frame(width, height), objects=tuple(objects))


@given(layouts())
def test_all_measures_stay_in_unit_interval(layout):
    report = measure(layout)
    for value in (*report.components(), report.aesthetic_value):
        assert 0.0 <= value <= 1.0


@given(layouts())
def test_aggregate_equals_component_mean(layout):
    report = measure(layout)
    assert abs(report.aesthetic_value - math.fsum(report.components()) / 5) <= 1e-15


@given(layouts())
def test_partition_conserves_area(layout):
    by_parent: dict[str, list[float]] = {}
    for pieces in quadrant_partition(layout).values():
        for p in pieces:
            by_parent.setdefault(p.parent_id, []).append(p.area)
    for obj in layout.objects:
        assert math.isclose(math.fsum(by_parent[obj.id]), obj.area, rel_tol=1e-12)


@given(layouts())
def test_serialize_parse_round_trip(layout):
    assert parse_layout(serialize_layout(layout)) == layout


@given(layouts())
def test_validate_accepts_its_own_output(layout):
    assert validate_layout(validate_layout(layout)) is layout


@given(layouts())
@settings(max_examples=60)
def test_double_mirror_restores_every_measure(layout):
    double = mirrored_across_vertical_axis(mirrored_across_vertical_axis(layout))
    assert measure(double) == measure(layout)
    double = mirrored_across_horizontal_axis(mirrored_across_horizontal_axis(layout))
    assert measure(double) == measure(layout)


@given(layouts())
@settings(max_examples=60)
def test_mirror_symmetric_layouts_score_perfectly(layout):
    """A layout unioned with both of its mirrors is mirror-invariant, so the
    four direction-blind measures must be exactly 1."""
    objects = list(layout.objects)
    for tag, transform in (
        ("v", mirrored_across_vertical_axis),
        ("h", mirrored_across_horizontal_axis),
        ("vh", lambda l: mirrored_across_horizontal_axis(mirrored_across_vertical_axis(l))),
    ):
        for obj in transform(layout).objects:
            objects.append(
                LayoutObject(f"{obj.id}-{tag}", obj.x, obj.y, obj.width, obj.height)
            )
    symmetric = Layout(frame=layout.frame, objects=tuple(objects))
    report = measure(symmetric)
    assert report.balance == 1.0
    assert report.equilibrium == 1.0
    assert report.symmetry == 1.0
    assert report.rhythm == 1.0


@given(st.floats(min_value=0, max_value=1, allow_nan=False))
def test_round4_is_four_decimals_within_half_ulp(value):
    text = round4(value)
    assert len(text.split(".")[1]) == 4
    assert abs(float(text) - value) <= 5e-5
