import { measureLayout, rankLayouts, type ReportDocument } from "./api";
import { AnnotatorCanvas } from "./canvas";
import { ComparisonSet } from "./compare";
import { parseDocument, serializeDocument, type ObjectKind } from "./document";
import { renderPanel } from "./panel";
import { round4 } from "./round";
import { LiveScorer } from "./scheduler";
import { AnnotationSession, FrameMismatchError } from "./session";

const API_BASE = "";

function el<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (!node) {
    throw new Error(`missing element #${id}`);
  }
  return node as T;
}

const session = new AnnotationSession();
const comparison = new ComparisonSet();

const panelRoot = el<HTMLDivElement>("score-panel");
const objectListRoot = el<HTMLUListElement>("object-list");
const compareRoot = el<HTMLDivElement>("compare-panel");
const statusLine = el<HTMLParagraphElement>("status-line");

let lastReport: ReportDocument | null = null;
let stale = false;

const scorer = new LiveScorer(
  (payload) => measureLayout(API_BASE, payload),
  {
    onUpdate(report) {
      lastReport = report;
      stale = false;
      refreshPanel();
    },
    onError() {
      stale = true; // keep the previous values on screen
      refreshPanel();
    },
  },
);

function refreshPanel(): void {
  renderPanel(panelRoot, {
    report: session.objectCount === 0 ? null : lastReport,
    objectCount: session.objectCount,
    stale,
  });
}

function scheduleScore(): void {
  if (session.objectCount === 0) {
    lastReport = null;
    refreshPanel();
    return;
  }
  scorer.schedule(serializeDocument(session.exportDocument()));
}

function onSessionChanged(): void {
  renderObjectList();
  refreshPanel();
  scheduleScore();
}

const canvas = new AnnotatorCanvas(el<HTMLCanvasElement>("annotator"), session, onSessionChanged);

function renderObjectList(): void {
  objectListRoot.replaceChildren();
  for (const obj of session.objectList) {
    const item = document.createElement("li");
    if (obj.id === session.selectedId) {
      item.classList.add("selected");
    }

    const title = document.createElement("span");
    title.textContent = `${obj.id} (${Math.round(obj.width)}x${Math.round(obj.height)})`;
    title.addEventListener("click", () => {
      session.selectedId = obj.id;
      canvas.render();
      renderObjectList();
    });

    const kind = document.createElement("select");
    for (const value of ["other", "image", "text"] as ObjectKind[]) {
      const option = document.createElement("option");
      option.value = value;
      option.textContent = value;
      option.selected = obj.kind === value;
      kind.append(option);
    }
    kind.addEventListener("change", () => {
      session.setKind(obj.id, kind.value as ObjectKind);
      onSessionChanged();
      canvas.render();
    });

    const label = document.createElement("input");
    label.placeholder = "label";
    label.value = obj.label ?? "";
    label.addEventListener("change", () => {
      session.setLabel(obj.id, label.value || undefined);
      onSessionChanged();
      canvas.render();
    });

    const remove = document.createElement("button");
    remove.textContent = "delete";
    remove.addEventListener("click", () => {
      session.deleteObject(obj.id);
      onSessionChanged();
      canvas.render();
    });

    item.append(title, kind, label, remove);
    objectListRoot.append(item);
  }
}

function setStatus(text: string): void {
  statusLine.textContent = text;
}

async function loadImageFile(file: File): Promise<void> {
  let bitmap: ImageBitmap;
  try {
    bitmap = await createImageBitmap(file);
  } catch {
    setStatus(`cannot decode ${file.name}: unsupported image format`);
    return;
  }
  let keep = false;
  if (session.frame !== null && session.objectCount > 0) {
    keep = window.confirm(
      "Keep the existing objects (rescaled proportionally to the new image)? " +
        "Cancel discards them.",
    );
  }
  session.loadScreenshot({ width: bitmap.width, height: bitmap.height }, file.name, keep);
  canvas.setImage(bitmap);
  setStatus(`${file.name}: ${bitmap.width}x${bitmap.height}`);
  onSessionChanged();
}

el<HTMLInputElement>("screenshot-input").addEventListener("change", (event) => {
  const input = event.target as HTMLInputElement;
  const file = input.files?.[0];
  if (file) {
    void loadImageFile(file);
  }
  input.value = "";
});

el<HTMLButtonElement>("recompute").addEventListener("click", () => {
  if (session.objectCount > 0) {
    void scorer.flush();
  }
});

el<HTMLButtonElement>("export").addEventListener("click", () => {
  if (session.objectCount === 0) {
    setStatus("annotate at least one object before exporting");
    return;
  }
  const payload = serializeDocument(session.exportDocument());
  const blob = new Blob([payload], { type: "application/json" });
  const link = document.createElement("a");
  link.href = URL.createObjectURL(blob);
  link.download = "layout.json";
  link.click();
  URL.revokeObjectURL(link.href);
  session.dirty = false;
});

el<HTMLInputElement>("import-input").addEventListener("change", async (event) => {
  const input = event.target as HTMLInputElement;
  const file = input.files?.[0];
  input.value = "";
  if (!file) {
    return;
  }
  try {
    const doc = parseDocument(await file.text());
    try {
      session.importDocument(doc);
    } catch (error) {
      if (
        error instanceof FrameMismatchError &&
        window.confirm(`${error.message}. Rescale the objects proportionally?`)
      ) {
        session.importDocument(doc, true);
      } else {
        throw error;
      }
    }
    setStatus(`imported ${file.name} (${doc.objects.length} objects)`);
    onSessionChanged();
    canvas.render();
  } catch (error) {
    setStatus(`import failed: ${(error as Error).message}`);
  }
});

el<HTMLButtonElement>("add-to-compare").addEventListener("click", () => {
  if (session.objectCount === 0) {
    setStatus("annotate at least one object first");
    return;
  }
  const name = window.prompt("Name for this layout in the comparison set:");
  if (!name) {
    return;
  }
  try {
    comparison.add(name, session.exportDocument());
    renderComparison();
  } catch (error) {
    setStatus((error as Error).message);
  }
});

el<HTMLButtonElement>("run-compare").addEventListener("click", () => {
  void (async () => {
    try {
      await comparison.compare((layouts) => rankLayouts(API_BASE, layouts));
    } catch (error) {
      setStatus(`ranking failed: ${(error as Error).message}`);
    }
    renderComparison();
  })();
});

function renderComparison(): void {
  compareRoot.replaceChildren();
  const names = document.createElement("p");
  names.textContent = comparison.size
    ? `in set: ${comparison.names.join(", ")}`
    : "comparison set is empty";
  compareRoot.append(names);
  if (comparison.flaggedName !== null) {
    const flag = document.createElement("p");
    flag.className = "stale-badge";
    flag.textContent = `"${comparison.flaggedName}" failed validation; fix or remove it`;
    compareRoot.append(flag);
  }
  if (comparison.ranking) {
    const table = document.createElement("table");
    const head = document.createElement("tr");
    for (const column of ["rank", "layout", "aesthetic value"]) {
      const cell = document.createElement("th");
      cell.textContent = column;
      head.append(cell);
    }
    table.append(head);
    for (const row of comparison.ranking) {
      const tr = document.createElement("tr");
      for (const text of [String(row.rank), row.id, round4(row.aesthetic_value)]) {
        const cell = document.createElement("td");
        cell.textContent = text;
        tr.append(cell);
      }
      table.append(tr);
    }
    compareRoot.append(table);
  }
}

document.addEventListener("keydown", (event) => {
  const target = event.target as HTMLElement | null;
  if (target && (target.tagName === "INPUT" || target.tagName === "SELECT")) {
    return;
  }
  if ((event.key === "Delete" || event.key === "Backspace") && session.selectedId !== null) {
    session.deleteObject(session.selectedId);
    onSessionChanged();
    canvas.render();
    event.preventDefault();
  } else if ((event.ctrlKey || event.metaKey) && event.key.toLowerCase() === "z") {
    if (session.undo()) {
      onSessionChanged();
      canvas.render();
    }
    event.preventDefault();
  }
});

el<HTMLButtonElement>("help-toggle").addEventListener("click", () => {
  el<HTMLDivElement>("help-panel").classList.toggle("hidden");
});

refreshPanel();
renderComparison();
setStatus("load a screenshot to begin");
