import { describe, expect, it } from "vitest";

import {
  clampPoint,
  clampRectPosition,
  clipRectToFrame,
  rectFromDrag,
  rectInsideFrame,
  rescaleRect,
} from "../src/geometry";

const FRAME = { width: 100, height: 80 };

describe("rectFromDrag", () => {
  it("normalizes any drag direction to the same rectangle", () => {
    const expected = { x: 10, y: 10, width: 20, height: 20 };
    expect(rectFromDrag({ x: 10, y: 10 }, { x: 30, y: 30 })).toEqual(expected);
    expect(rectFromDrag({ x: 30, y: 30 }, { x: 10, y: 10 })).toEqual(expected);
    expect(rectFromDrag({ x: 30, y: 10 }, { x: 10, y: 30 })).toEqual(expected);
  });
});

describe("clamping", () => {
  it("clamps points to the frame", () => {
    expect(clampPoint({ x: -5, y: 200 }, FRAME)).toEqual({ x: 0, y: 80 });
  });

  it("keeps a moved rect inside the frame", () => {
    const rect = { x: 95, y: -10, width: 20, height: 20 };
    const clamped = clampRectPosition(rect, FRAME);
    expect(rectInsideFrame(clamped, FRAME)).toBe(true);
    expect(clamped).toEqual({ x: 80, y: 0, width: 20, height: 20 });
  });

  it("clips an oversized rect to the frame", () => {
    const clipped = clipRectToFrame({ x: -10, y: 70, width: 200, height: 30 }, FRAME);
    expect(clipped).toEqual({ x: 0, y: 70, width: 100, height: 10 });
  });
});

describe("rescaleRect", () => {
  it("scales proportionally between frames", () => {
    const rect = { x: 10, y: 20, width: 30, height: 40 };
    const scaled = rescaleRect(rect, { width: 100, height: 100 }, { width: 200, height: 50 });
    expect(scaled).toEqual({ x: 20, y: 10, width: 60, height: 20 });
  });
});
