/**
 * Canvas rendering and pointer interaction: drag on empty space to draw a
 * rectangle, drag an object to move it, drag a corner handle to resize.
 Coordinates are image pixels (the canvas bitmap matches the screenshot).
 */

import { rectContains, type Point, type Rect } from "./geometry";
import { MIN_OBJECT_SIZE, type AnnotationSession, type WorkingObject } from "./session";

const HANDLE_RADIUS = 6;

type Interaction =
  | { mode: "draw"; from: Point }
  | { mode: "move"; id: string; last: Point }
  | { mode: "resize"; id: string; anchor: Point }
  | null;

export class AnnotatorCanvas {
  private readonly ctx: CanvasRenderingContext2D;
  private image: ImageBitmap | null = null;
  private interaction: Interaction = null;
  private draft: Rect | null = null;

  constructor(
    private readonly canvas: HTMLCanvasElement,
    private readonly session: AnnotationSession,
    private readonly onChange: () => void,
  ) {
    const ctx = canvas.getContext("2d");
    if (!ctx) {
      throw new Error("canvas 2d context unavailable");
    }
    this.ctx = ctx;
    canvas.addEventListener("pointerdown", (e) => this.pointerDown(e));
    canvas.addEventListener("pointermove", (e) => this.pointerMove(e));
    canvas.addEventListener("pointerup", (e) => this.pointerUp(e));
    canvas.addEventListener("pointercancel", () => {
      this.interaction = null;
      this.draft = null;
      this.render();
    });
  }

  setImage(image: ImageBitmap): void {
    this.image = image;
    this.canvas.width = image.width;
    this.canvas.height = image.height;
    this.render();
  }

  private toImagePoint(event: PointerEvent): Point {
    const box = this.canvas.getBoundingClientRect();
    return {
      x: ((event.clientX - box.left) / box.width) * this.canvas.width,
      y: ((event.clientY - box.top) / box.height) * this.canvas.height,
    };
  }

  private handleAt(obj: WorkingObject, p: Point): Point | null {
    const corners: Point[] = [
      { x: obj.x, y: obj.y },
      { x: obj.x + obj.width, y: obj.y },
      { x: obj.x, y: obj.y + obj.height },
      { x: obj.x + obj.width, y: obj.y + obj.height },
    ];
    for (const corner of corners) {
      if (Math.hypot(corner.x - p.x, corner.y - p.y) <= HANDLE_RADIUS) {
        // the anchor is the corner opposite the grabbed handle
        return {
          x: corner.x === obj.x ? obj.x + obj.width : obj.x,
          y: corner.y === obj.y ? obj.y + obj.height : obj.y,
        };
      }
    }
    return null;
  }

  private pointerDown(event: PointerEvent): void {
    if (this.session.frame === null) {
      return;
    }
    this.canvas.setPointerCapture(event.pointerId);
    const p = this.toImagePoint(event);
    const selected = this.session.objectList.find((o) => o.id === this.session.selectedId);
    if (selected) {
      const anchor = this.handleAt(selected, p);
      if (anchor) {
        this.interaction = { mode: "resize", id: selected.id, anchor };
        return;
      }
    }
    // topmost object under the pointer wins
    const hit = [...this.session.objectList].reverse().find((o) => rectContains(o, p));
    if (hit) {
      this.session.selectedId = hit.id;
      this.interaction = { mode: "move", id: hit.id, last: p };
    } else {
      this.session.selectedId = null;
      this.interaction = { mode: "draw", from: p };
    }
    this.render();
  }

  private pointerMove(event: PointerEvent): void {
    if (!this.interaction) {
      return;
    }
    const p = this.toImagePoint(event);
    if (this.interaction.mode === "draw") {
      this.draft = {
        x: Math.min(this.interaction.from.x, p.x),
        y: Math.min(this.interaction.from.y, p.y),
        width: Math.abs(this.interaction.from.x - p.x),
        height: Math.abs(this.interaction.from.y - p.y),
      };
      this.render();
    } else if (this.interaction.mode === "move") {
      const { id, last } = this.interaction;
      this.session.moveObject(id, p.x - last.x, p.y - last.y);
      this.interaction.last = p;
      this.onChange();
      this.render();
    } else {
      const { id, anchor } = this.interaction;
      const rect: Rect = {
        x: Math.min(anchor.x, p.x),
        y: Math.min(anchor.y, p.y),
        width: Math.max(Math.abs(anchor.x - p.x), MIN_OBJECT_SIZE),
        height: Math.max(Math.abs(anchor.y - p.y), MIN_OBJECT_SIZE),
      };
      if (this.session.resizeObject(id, rect)) {
        this.onChange();
        this.render();
      }
    }
  }

  private pointerUp(event: PointerEvent): void {
    if (!this.interaction) {
      return;
    }
    if (this.interaction.mode === "draw") {
      const p = this.toImagePoint(event);
      if (this.session.drawObject(this.interaction.from, p)) {
        this.onChange();
      }
    }
    this.interaction = null;
    this.draft = null;
    this.render();
  }

  render(): void {
    const { ctx, canvas } = this;
    ctx.clearRect(0, 0, canvas.width, canvas.height);
    if (this.image) {
      ctx.drawImage(this.image, 0, 0);
    }
    for (const obj of this.session.objectList) {
      const selected = obj.id === this.session.selectedId;
      ctx.lineWidth = selected ? 2 : 1.5;
      ctx.strokeStyle = obj.kind === "image" ? "#2e7dd1" : obj.kind === "text" ? "#2ea043" : "#d18616";
      ctx.fillStyle = "rgba(46, 125, 209, 0.08)";
      ctx.fillRect(obj.x, obj.y, obj.width, obj.height);
      ctx.strokeRect(obj.x, obj.y, obj.width, obj.height);
      ctx.fillStyle = "#1b1f23";
      ctx.font = "12px system-ui, sans-serif";
      ctx.fillText(obj.label ?? obj.id, obj.x + 4, obj.y + 14);
      if (selected) {
        ctx.fillStyle = "#2e7dd1";
        for (const [hx, hy] of [
          [obj.x, obj.y],
          [obj.x + obj.width, obj.y],
          [obj.x, obj.y + obj.height],
          [obj.x + obj.width, obj.y + obj.height],
        ] as const) {
          ctx.fillRect(hx - 3, hy - 3, 6, 6);
        }
      }
    }
    if (this.draft) {
      ctx.setLineDash([4, 3]);
      ctx.strokeStyle = "#666";
      ctx.strokeRect(this.draft.x, this.draft.y, this.draft.width, this.draft.height);
      ctx.setLineDash([]);
    }
  }
}
