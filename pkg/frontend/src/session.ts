/**
 * The annotation session: one screenshot, a working list of rectangles, a
 * selection, an undo history and a dirty flag.
 *
 * Invariants enforced after every interaction:
 *  - frame dimensions equal the loaded image's pixel dimensions;
 *  - every object lies fully inside the frame;
 *  - ids are stable: deleting never renumbers, undo restores the same id.
 */

import type { LayoutDocument, DocumentObject, ObjectKind } from "./document";
import {
  clampPoint,
  clampRectPosition,
  clipRectToFrame,
  rectFromDrag,
  rescaleRect,
  type FrameSize,
  type Point,
  type Rect,
} from "./geometry";

export interface WorkingObject extends Rect {
  id: string;
  kind: ObjectKind;
  label?: string;
}

/** Drags smaller than this (either side) are treated as accidental clicks. */
export const MIN_DRAW_SIZE = 3;
/** Resizes may not shrink an object below one pixel on a side. */
export const MIN_OBJECT_SIZE = 1;

export class FrameMismatchError extends Error {
  constructor(
    readonly documentFrame: FrameSize,
    readonly sessionFrame: FrameSize,
  ) {
    super(
      `document frame ${documentFrame.width}x${documentFrame.height} does not match ` +
        `the loaded screenshot ${sessionFrame.width}x${sessionFrame.height}`,
    );
    this.name = "FrameMismatchError";
  }
}

export class AnnotationSession {
  private frameSize: FrameSize | null = null;
  private screenshot: string | null = null;
  private objects: WorkingObject[] = [];
  private history: WorkingObject[][] = [];
  private nextIdNumber = 1;
  selectedId: string | null = null;
  dirty = false;

  get frame(): FrameSize | null {
    return this.frameSize;
  }

  get screenshotName(): string | null {
    return this.screenshot;
  }

  get objectList(): readonly WorkingObject[] {
    return this.objects;
  }

  get objectCount(): number {
    return this.objects.length;
  }

  /**
   * Attach a screenshot; the frame adopts the image's pixel dimensions.
   * Existing objects are discarded unless `keepObjects`, in which case they
   * are rescaled proportionally from the previous frame.
   */
  loadScreenshot(size: FrameSize, name: string, keepObjects = false): void {
    if (!(size.width > 0) || !(size.height > 0)) {
      throw new RangeError(`image dimensions must be positive, got ${size.width}x${size.height}`);
    }
    const previous = this.frameSize;
    if (keepObjects && previous !== null) {
      this.objects = this.objects.map((obj) => ({
        ...obj,
        ...clipRectToFrame(rescaleRect(obj, previous, size), size),
      }));
    } else {
      this.objects = [];
      this.nextIdNumber = 1;
      this.selectedId = null;
    }
    this.frameSize = { ...size };
    this.screenshot = name;
    this.history = [];
    this.dirty = this.objects.length > 0;
  }

  private requireFrame(): FrameSize {
    if (this.frameSize === null) {
      throw new Error("no screenshot loaded");
    }
    return this.frameSize;
  }

  private snapshot(): void {
    this.history.push(this.objects.map((obj) => ({ ...obj })));
  }

  private find(id: string): WorkingObject {
    const obj = this.objects.find((o) => o.id === id);
    if (!obj) {
      throw new Error(`no object with id ${JSON.stringify(id)}`);
    }
    return obj;
  }

  /**
   * Turn a drag gesture into a new rectangle: endpoints are clamped to the
   * frame, the rect is normalized for any drag direction, and drags smaller
   * than 3x3 px are ignored. Returns the new object, or null if ignored.
   */
  drawObject(from: Point, to: Point): WorkingObject | null {
    const frame = this.requireFrame();
    const rect = rectFromDrag(clampPoint(from, frame), clampPoint(to, frame));
    if (rect.width < MIN_DRAW_SIZE || rect.height < MIN_DRAW_SIZE) {
      return null;
    }
    this.snapshot();
    const obj: WorkingObject = { id: `o${this.nextIdNumber}`, kind: "other", ...rect };
    this.nextIdNumber += 1;
    this.objects.push(obj);
    this.selectedId = obj.id;
    this.dirty = true;
    return obj;
  }

  /** Translate an object; the move is clamped so it stays inside the frame. */
  moveObject(id: string, dx: number, dy: number): WorkingObject {
    const frame = this.requireFrame();
    const obj = this.find(id);
    this.snapshot();
    const moved = clampRectPosition({ ...obj, x: obj.x + dx, y: obj.y + dy }, frame);
    Object.assign(obj, moved);
    this.dirty = true;
    return obj;
  }

  /**
   * Replace an object's rectangle. The new rect is clipped to the frame;
   * anything below the 1x1 px minimum is rejected (returns false, no change).
   */
  resizeObject(id: string, rect: Rect): boolean {
    const frame = this.requireFrame();
    const obj = this.find(id);
    const clipped = clipRectToFrame(rect, frame);
    if (clipped.width < MIN_OBJECT_SIZE || clipped.height < MIN_OBJECT_SIZE) {
      return false;
    }
    this.snapshot();
    Object.assign(obj, clipped);
    this.dirty = true;
    return true;
  }

  /** Kind and label are metadata: persisted in exports, never affect scores. */
  setKind(id: string, kind: ObjectKind): void {
    const obj = this.find(id);
    this.snapshot();
    obj.kind = kind;
    this.dirty = true;
  }

  setLabel(id: string, label: string | undefined): void {
    const obj = this.find(id);
    this.snapshot();
    if (label === undefined || label === "") {
      delete obj.label;
    } else {
      obj.label = label;
    }
    this.dirty = true;
  }

  /** Remove an object. Remaining ids are untouched. */
  deleteObject(id: string): void {
    this.find(id);
    this.snapshot();
    this.objects = this.objects.filter((o) => o.id !== id);
    if (this.selectedId === id) {
      this.selectedId = null;
    }
    this.dirty = true;
  }

  /** Revert the last mutation; a deleted object comes back with its old id. */
  undo(): boolean {
    const previous = this.history.pop();
    if (!previous) {
      return false;
    }
    this.objects = previous;
    if (this.selectedId !== null && !this.objects.some((o) => o.id === this.selectedId)) {
      this.selectedId = null;
    }
    this.dirty = true;
    return true;
  }

  /** The session as a layout document; requires at least one object. */
  exportDocument(): LayoutDocument {
    const frame = this.requireFrame();
    if (this.objects.length === 0) {
      throw new Error("annotate at least one object before exporting");
    }
    const objects: DocumentObject[] = this.objects.map((obj) => {
      const out: DocumentObject = {
        id: obj.id,
        x: obj.x,
        y: obj.y,
        width: obj.width,
        height: obj.height,
        kind: obj.kind,
      };
      if (obj.label !== undefined) {
        out.label = obj.label;
      }
      return out;
    });
    const doc: LayoutDocument = {
      version: 1,
      frame: { width: frame.width, height: frame.height },
      objects,
    };
    if (this.screenshot !== null) {
      doc.meta = { screenshot: this.screenshot };
    }
    return doc;
  }

  /**
   * Replace the working objects with a document's. If the document frame
   * differs from the loaded screenshot, a FrameMismatchError is thrown
   * unless `allowRescale` (the user confirmed a proportional rescale).
   */
  importDocument(doc: LayoutDocument, allowRescale = false): void {
    const frame = this.frameSize;
    let objects: WorkingObject[] = doc.objects.map((obj) => ({ ...obj }));
    if (frame === null) {
      this.frameSize = { ...doc.frame };
    } else if (doc.frame.width !== frame.width || doc.frame.height !== frame.height) {
      if (!allowRescale) {
        throw new FrameMismatchError(doc.frame, frame);
      }
      objects = objects.map((obj) => ({
        ...obj,
        ...clipRectToFrame(rescaleRect(obj, doc.frame, frame), frame),
      }));
    }
    this.snapshot();
    this.objects = objects;
    this.selectedId = null;
    this.dirty = false;
    const numbers = this.objects
      .map((o) => /^o(\d+)$/.exec(o.id))
      .filter((m): m is RegExpExecArray => m !== null)
      .map((m) => Number(m[1]));
    this.nextIdNumber = numbers.length > 0 ? Math.max(...numbers) + 1 : 1;
  }
}
