/**
 * The layout document wire format: strict JSON, version 1, unknown keys
 * rejected, object order preserved. Serialization is canonical so that
 * export -> import -> export reproduces identical bytes.
 */

export type ObjectKind = "image" | "text" | "other";

export interface DocumentObject {
  id: string;
  x: number;
  y: number;
  width: number;
  height: number;
  kind: ObjectKind;
  label?: string;
}

export interface LayoutDocument {
  version: 1;
  frame: { width: number; height: number };
  objects: DocumentObject[];
  meta?: { title?: string; screenshot?: string };
}

export class DocumentSchemaError extends Error {
  constructor(
    readonly field: string,
    message: string,
  ) {
    super(`${field}: ${message}`);
    this.name = "DocumentSchemaError";
  }
}

const KINDS: readonly string[] = ["image", "text", "other"];

function asRecord(value: unknown, field: string): Record<string, unknown> {
  if (typeof value !== "object" || value === null || Array.isArray(value)) {
    throw new DocumentSchemaError(field, "must be a JSON object");
  }
  return value as Record<string, unknown>;
}

function requireKeys(
  record: Record<string, unknown>,
  prefix: string,
  required: readonly string[],
  optional: readonly string[] = [],
): void {
  for (const key of Object.keys(record)) {
    if (!required.includes(key) && !optional.includes(key)) {
      throw new DocumentSchemaError(prefix + key, "unknown key");
    }
  }
  for (const key of required) {
    if (!(key in record)) {
      throw new DocumentSchemaError(prefix + key, "missing required key");
    }
  }
}

function asNumber(value: unknown, field: string): number {
  if (typeof value !== "number" || !Number.isFinite(value)) {
    throw new DocumentSchemaError(field, "must be a finite number");
  }
  return value;
}

function asString(value: unknown, field: string): string {
  if (typeof value !== "string") {
    throw new DocumentSchemaError(field, "must be a string");
  }
  return value;
}

/** Parse and schema-check a layout document from JSON text. */
export function parseDocument(text: string): LayoutDocument {
  let raw: unknown;
  try {
    raw = JSON.parse(text);
  } catch (error) {
    throw new DocumentSchemaError("$", `not valid JSON: ${(error as Error).message}`);
  }
  const doc = asRecord(raw, "$");
  requireKeys(doc, "", ["frame", "objects", "version"], ["meta"]);
  if (doc.version !== 1) {
    throw new DocumentSchemaError("version", `unsupported version ${JSON.stringify(doc.version)}, expected 1`);
  }
  const frameDoc = asRecord(doc.frame, "frame");
  requireKeys(frameDoc, "frame.", ["width", "height"]);
  const frame = {
    width: asNumber(frameDoc.width, "frame.width"),
    height: asNumber(frameDoc.height, "frame.height"),
  };
  if (!Array.isArray(doc.objects)) {
    throw new DocumentSchemaError("objects", "must be an array");
  }
  const objects: DocumentObject[] = doc.objects.map((item, i) => {
    const path = `objects[${i}]`;
    const objDoc = asRecord(item, path);
    requireKeys(objDoc, `${path}.`, ["id", "x", "y", "width", "height"], ["kind", "label"]);
    const kind = objDoc.kind ?? "other";
    if (typeof kind !== "string" || !KINDS.includes(kind)) {
      throw new DocumentSchemaError(`${path}.kind`, "must be one of image/text/other");
    }
    const parsed: DocumentObject = {
      id: asString(objDoc.id, `${path}.id`),
      x: asNumber(objDoc.x, `${path}.x`),
      y: asNumber(objDoc.y, `${path}.y`),
      width: asNumber(objDoc.width, `${path}.width`),
      height: asNumber(objDoc.height, `${path}.height`),
      kind: kind as ObjectKind,
    };
    if ("label" in objDoc) {
      parsed.label = asString(objDoc.label, `${path}.label`);
    }
    return parsed;
  });
  let meta: LayoutDocument["meta"];
  if ("meta" in doc) {
    const metaDoc = asRecord(doc.meta, "meta");
    requireKeys(metaDoc, "meta.", [], ["title", "screenshot"]);
    meta = {};
    if ("title" in metaDoc) meta.title = asString(metaDoc.title, "meta.title");
    if ("screenshot" in metaDoc) meta.screenshot = asString(metaDoc.screenshot, "meta.screenshot");
  }
  const result: LayoutDocument = { version: 1, frame, objects };
  if (meta && Object.keys(meta).length > 0) {
    result.meta = meta;
  }
  return result;
}

/** Canonical serialization: fixed key order, two-space indent, one trailing newline. */
export function serializeDocument(doc: LayoutDocument): string {
  const canonical: Record<string, unknown> = {
    version: 1,
    frame: { width: doc.frame.width, height: doc.frame.height },
    objects: doc.objects.map((obj) => {
      const item: Record<string, unknown> = {
        id: obj.id,
        x: obj.x,
        y: obj.y,
        width: obj.width,
        height: obj.height,
        kind: obj.kind,
      };
      if (obj.label !== undefined) {
        item.label = obj.label;
      }
      return item;
    }),
  };
  if (doc.meta && (doc.meta.title !== undefined || doc.meta.screenshot !== undefined)) {
    const meta: Record<string, unknown> = {};
    if (doc.meta.title !== undefined) meta.title = doc.meta.title;
    if (doc.meta.screenshot !== undefined) meta.screenshot = doc.meta.screenshot;
    canonical.meta = meta;
  }
  return JSON.stringify(canonical, null, 2) + "\n";
}
