from __future__ import annotations

import pytest

from sda import Frame, Layout, LayoutObject, serialize_layout


@pytest.fixture
def l0() -> Layout:
    """Single 20x20 object centered in a 100x100 frame: every measure is 1."""
    return Layout(frame=Frame(100, 100), objects=(LayoutObject("o1", 40, 40, 20, 20),))


@pytest.fixture
def l1() -> Layout:
    """Single 20x20 object in the upper-left corner of a 100x100 frame."""
    return Layout(frame=Frame(100, 100), objects=(LayoutObject("o1", 10, 10, 20, 20),))


@pytest.fixture
def l2() -> Layout:
    """Pair mirrored across the vertical center line: every measure is 1."""
    return Layout(
        frame=Frame(100, 100),
        objects=(LayoutObject("a", 10, 40, 20, 20), LayoutObject("b", 70, 40, 20, 20)),
    )


@pytest.fixture
def layout_file(tmp_path):
    """Write a layout to a JSON file and return its path."""

    def write(layout: Layout, name: str = "layout.json"):
        path = tmp_path / name
        path.write_bytes(serialize_layout(layout))
        return path

    return write
