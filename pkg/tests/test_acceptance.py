"""Acceptance suite: one test per criterion, one printed PASS/FAIL line each.

Run with ``pytest tests/test_acceptance.py -v -s``.
"""

from __future__ import annotations

import json
import math
import random
import time
from contextlib import contextmanager

import pytest

from sda import (
    Frame,
    Layout,
    LayoutObject,
    aesthetic_value,
    measure,
    parse_layout,
    rank,
    round4,
    serialize_layout,
)
from sda.cli import main as cli_main
from layoutgen import (
    mirrored_across_horizontal_axis,
    mirrored_across_vertical_axis,
    random_layout,
    scaled,
    shuffled,
)
from oracles import pixel_balance, pixel_equilibrium


@contextmanager
def criterion(name: str, budget_seconds: float | None = None):
    start = time.perf_counter()
    try:
        yield
    except BaseException:
        print(f"[FAIL] {name}")
        raise
    elapsed = time.perf_counter() - start
    if budget_seconds is not None and elapsed > budget_seconds:
        print(f"[FAIL] {name} (took {elapsed:.2f}s, budget {budget_seconds}s)")
        raise AssertionError(f"{name}: runtime {elapsed:.2f}s exceeds {budget_seconds}s")
    print(f"[PASS] {name} ({elapsed:.2f}s)")


# Published per-page component scores and aggregate strings (group, page kind).
PUBLISHED_ROWS = [
    ("group1-main", (0.9445, 0.9991, 0.9013, 1.0000, 0.9085), "0.9507"),
    ("group1-learning", (0.6558, 0.9954, 0.6062, 0.7500, 0.6663), "0.7347"),
    ("group1-exercise", (0.8054, 0.9965, 0.4402, 0.7500, 0.5592), "0.7103"),
    ("group2-main", (0.9369, 0.9990, 0.8234, 1.0000, 0.8700), "0.9259"),
    ("group2-learning", (0.5784, 0.9945, 0.4161, 0.7500, 0.4917), "0.6461"),
    ("group2-exercise", (0.6911, 0.9932, 0.3796, 0.7500, 0.4331), "0.6494"),
    ("group3-main", (0.7656, 0.9960, 0.4958, 0.6250, 0.5324), "0.6830"),
    ("group3-learning", (0.5309, 0.9935, 0.4555, 0.5000, 0.4870), "0.5934"),
    ("group3-exercise", (0.5944, 0.9913, 0.4515, 0.5000, 0.3459), "0.5766"),
    ("group4-main", (0.5674, 0.9918, 0.2689, 0.3750, 0.2258), "0.4858"),
    ("group4-learning", (0.5411, 0.9934, 0.3399, 0.3750, 0.3511), "0.5201"),
    ("group4-exercise", (0.3296, 0.9859, 0.3421, 0.5000, 0.3134), "0.4942"),
]

# Published aggregate values per page kind, one per design group, best first.
PUBLISHED_RANK_COLUMNS = {
    "main": (0.9507, 0.9259, 0.6830, 0.4858),
    "learning": (0.7347, 0.6461, 0.5934, 0.5201),
    "exercise": (0.7103, 0.6494, 0.5766, 0.4942),
}


def test_criterion_1_aggregation_of_published_components():
    with criterion("C1 published component aggregation (12/12 rows)", budget_seconds=1.0):
        for name, components, expected in PUBLISHED_ROWS:
            got = round4(aesthetic_value(components))
            assert got == expected, f"{name}: {got} != {expected}"


def test_criterion_2_published_ranking_columns():
    with criterion("C2 published ranking per page kind (3 columns)", budget_seconds=1.0):
        for kind, values in PUBLISHED_RANK_COLUMNS.items():
            entries = [(f"group{i + 1}", value) for i, value in enumerate(values)]
            ranked = rank(entries)
            assert [r.rank for r in ranked] == [1, 2, 3, 4], kind
            assert [r.id for r in ranked] == [e[0] for e in entries], kind


FIXTURES = [
    (
        "L0 centered",
        Layout(Frame(100, 100), (LayoutObject("o1", 40, 40, 20, 20),)),
        (1.0, 1.0, 1.0, 1.0, 1.0),
        1.0,
    ),
    (
        "L1 corner",
        Layout(Frame(100, 100), (LayoutObject("o1", 10, 10, 20, 20),)),
        (0.0, 0.4, 0.5, 1.0, 0.5),
        0.48,
    ),
    (
        "L2 mirrored pair",
        Layout(
            Frame(100, 100),
            (LayoutObject("a", 10, 40, 20, 20), LayoutObject("b", 70, 40, 20, 20)),
        ),
        (1.0, 1.0, 1.0, 1.0, 1.0),
        1.0,
    ),
]


def test_criterion_3_canonical_fixtures():
    with criterion("C3 canonical fixtures L0/L1/L2 (1e-12)"):
        for name, layout, expected, expected_av in FIXTURES:
            report = measure(layout)
            for got, want in zip(report.components(), expected):
                assert abs(got - want) <= 1e-12, f"{name}: {report.components()}"
            assert abs(report.aesthetic_value - expected_av) <= 1e-12, name


def test_criterion_4_property_suite_on_random_layouts():
    rng = random.Random(0xA11CE)
    # Integer coordinates and dyadic/integer scale factors keep the transforms
    # exact in binary floating point, so the invariance bounds below test the
    # formulas rather than representation noise.
    scale_factors = (0.5, 0.75, 1.5, 2.0, 2.5, 3.0, 5.0, 8.0)
    n = 10_000
    with criterion(f"C4 property suite on {n} random layouts", budget_seconds=30.0):
        for i in range(n):
            layout = random_layout(rng)
            report = measure(layout)
            components = report.components()

            for value in (*components, report.aesthetic_value):
                assert 0.0 <= value <= 1.0
            assert abs(report.aesthetic_value - math.fsum(components) / 5) <= 1e-15

            scaled_report = measure(scaled(layout, scale_factors[i % len(scale_factors)]))
            for got, want in zip(scaled_report.components(), components):
                assert abs(got - want) <= 1e-9

            permuted_report = measure(shuffled(layout, rng))
            for got, want in zip(permuted_report.components(), components):
                assert abs(got - want) <= 1e-12

            for mirror in (mirrored_across_vertical_axis, mirrored_across_horizontal_axis):
                mirrored_report = measure(mirror(layout))
                assert abs(mirrored_report.balance - report.balance) <= 1e-12
                assert abs(mirrored_report.equilibrium - report.equilibrium) <= 1e-12
                assert abs(mirrored_report.symmetry - report.symmetry) <= 1e-12
                assert abs(mirrored_report.rhythm - report.rhythm) <= 1e-12


def test_criterion_5_rasterization_oracle():
    rng = random.Random(0xBEEF)
    with criterion("C5 rasterization oracle for balance/equilibrium (200 layouts, 1e-9)"):
        for _ in range(200):
            layout = random_layout(rng, min_side=20, max_side=240, even_frame=True, max_objects=6)
            report = measure(layout)
            oracle_score, oracle_v, oracle_h = pixel_balance(layout)
            assert abs(report.balance - oracle_score) <= 1e-9
            assert abs(report.intermediates.balance_vertical - oracle_v) <= 1e-9
            assert abs(report.intermediates.balance_horizontal - oracle_h) <= 1e-9
            oracle_score, oracle_x, oracle_y = pixel_equilibrium(layout)
            assert abs(report.equilibrium - oracle_score) <= 1e-9
            assert abs(report.intermediates.equilibrium_x - oracle_x) <= 1e-9
            assert abs(report.intermediates.equilibrium_y - oracle_y) <= 1e-9


def test_criterion_6_format_and_cli_contract(tmp_path, capsys):
    with criterion("C6 format round-trip, batch determinism, exit codes"):
        # parse/serialize round-trip on random layouts
        rng = random.Random(0xC0FFEE)
        for _ in range(300):
            layout = random_layout(rng)
            assert parse_layout(serialize_layout(layout)) == layout

        # batch determinism: jobs=1 and jobs=8 write identical bytes
        for i in range(10):
            path = tmp_path / f"page{i}.json"
            path.write_bytes(serialize_layout(random_layout(rng)))
        out1 = tmp_path / "jobs1.csv"
        out8 = tmp_path / "jobs8.csv"
        assert cli_main(["batch", str(tmp_path / "page*.json"), "--out", str(out1), "--jobs", "1"]) == 0
        assert cli_main(["batch", str(tmp_path / "page*.json"), "--out", str(out8), "--jobs", "8"]) == 0
        capsys.readouterr()
        assert out1.read_bytes() == out8.read_bytes()

        # exit codes: 0 success, 1 domain, 2 I/O, 3 usage
        good = tmp_path / "good.json"
        good.write_bytes(serialize_layout(random_layout(rng)))
        assert cli_main(["measure", str(good)]) == 0
        bad = tmp_path / "bad.json"
        bad.write_text(
            json.dumps(
                {
                    "version": 1,
                    "frame": {"width": 50, "height": 50},
                    "objects": [{"id": "o1", "x": 40, "y": 40, "width": 20, "height": 20}],
                }
            )
        )
        assert cli_main(["measure", str(bad)]) == 1
        assert cli_main(["measure", str(tmp_path / "absent.json")]) == 2
        assert cli_main(["batch", str(tmp_path / "zilch*.json"), "--out", str(tmp_path / "o.csv")]) == 3
        capsys.readouterr()
