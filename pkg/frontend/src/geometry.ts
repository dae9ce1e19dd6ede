/** Rectangle helpers shared by the session and the canvas layer. */

export interface Point {
  x: number;
  y: number;
}

export interface Rect {
  x: number;
  y: number;
  width: number;
  height: number;
}

export interface FrameSize {
  width: number;
  height: number;
}

export function clampPoint(p: Point, frame: FrameSize): Point {
  return {
    x: Math.min(Math.max(p.x, 0), frame.width),
    y: Math.min(Math.max(p.y, 0), frame.height),
  };
}

/** Normalize a drag between two corners (any direction) into a rectangle. */
export function rectFromDrag(a: Point, b: Point): Rect {
  return {
    x: Math.min(a.x, b.x),
    y: Math.min(a.y, b.y),
    width: Math.abs(a.x - b.x),
    height: Math.abs(a.y - b.y),
  };
}

/** Move a rectangle fully inside the frame, preserving its size. */
export function clampRectPosition(rect: Rect, frame: FrameSize): Rect {
  const x = Math.min(Math.max(rect.x, 0), Math.max(frame.width - rect.width, 0));
  const y = Math.min(Math.max(rect.y, 0), Math.max(frame.height - rect.height, 0));
  return { ...rect, x, y };
}

/** Clip a rectangle's extent to the frame (size may shrink). */
export function clipRectToFrame(rect: Rect, frame: FrameSize): Rect {
  const x = Math.min(Math.max(rect.x, 0), frame.width);
  const y = Math.min(Math.max(rect.y, 0), frame.height);
  return {
    x,
    y,
    width: Math.min(rect.x + rect.width, frame.width) - x,
    height: Math.min(rect.y + rect.height, frame.height) - y,
  };
}

export function rectInsideFrame(rect: Rect, frame: FrameSize): boolean {
  return (
    rect.x >= 0 &&
    rect.y >= 0 &&
    rect.x + rect.width <= frame.width &&
    rect.y + rect.height <= frame.height
  );
}

export function rectContains(rect: Rect, p: Point): boolean {
  return (
    p.x >= rect.x && p.x <= rect.x + rect.width && p.y >= rect.y && p.y <= rect.y + rect.height
  );
}

/** Scale a rectangle proportionally between two frames. */
export function rescaleRect(rect: Rect, from: FrameSize, to: FrameSize): Rect {
  const sx = to.width / from.width;
  const sy = to.height / from.height;
  return {
    x: rect.x * sx,
    y: rect.y * sy,
    width: rect.width * sx,
    height: rect.height * sy,
  };
}
