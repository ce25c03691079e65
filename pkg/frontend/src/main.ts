// DOM shell: wires the editor core to the page.

import { ApiClient } from "./api.js";
import { Editor } from "./state.js";
import { canvasCell, paintGrid } from "./view.js";
import type { CatalogEntry } from "./types.js";

const SERVICE = (window as { PINART_SERVICE?: string }).PINART_SERVICE ?? "http://127.0.0.1:8373";

const api = new ApiClient(SERVICE);
const editor = new Editor(api);

const canvas = document.getElementById("grid") as HTMLCanvasElement;
const banner = document.getElementById("banner") as HTMLElement;
const lintPanel = document.getElementById("lint") as HTMLElement;
const itemsPanel = document.getElementById("items") as HTMLElement;
const historyPanel = document.getElementById("history") as HTMLElement;
const diffPanel = document.getElementById("diff") as HTMLElement;
const shapeSelect = document.getElementById("shape") as HTMLSelectElement;
const placeButton = document.getElementById("place") as HTMLButtonElement;
const snapshotButton = document.getElementById("snapshot") as HTMLButtonElement;
const eraseToggle = document.getElementById("erase-mode") as HTMLInputElement;
const dotToggle = document.getElementById("physical-dots") as HTMLInputElement;

let entries: CatalogEntry[] = [];
let dragStart: [number, number] | null = null;

function redraw(): void {
  paintGrid(canvas, editor);
  banner.hidden = !editor.offline;

  lintPanel.replaceChildren();
  if (editor.lint.violations.length === 0) {
    lintPanel.append(line("all guidelines satisfied", "ok"));
  }
  for (const v of editor.lint.violations) {
    const tag = v.item !== null ? `item ${v.item} ` : "";
    const coords = v.at.length ? ` at (${v.at[0][0]},${v.at[0][1]})` : "";
    line(`${tag}${v.rule}${coords}: ${v.message}`, v.rule === "ADVISORY" ? "advisory" : "violation", lintPanel);
  }

  itemsPanel.replaceChildren();
  editor.scene.items.forEach((item, index) => {
    const el = document.createElement("div");
    el.className = "item" + (editor.selection === index ? " selected" : "");
    const label =
      item.kind === "catalog" ? `${item.kind}: ${item.name}` : item.kind;
    el.textContent = `${index}. ${label}`;
    el.onclick = () => editor.select(editor.selection === index ? null : index);
    const del = document.createElement("button");
    del.textContent = "x";
    del.onclick = (ev) => {
      ev.stopPropagation();
      void editor.removeItem(index);
    };
    el.append(del);
    itemsPanel.append(el);
  });

  historyPanel.replaceChildren();
  editor.history.forEach((snap, index) => {
    const el = document.createElement("div");
    el.className = "item";
    el.textContent = snap.label;
    const compare = document.createElement("button");
    compare.textContent = "compare";
    compare.onclick = () => void editor.compareWith(index);
    el.append(compare);
    historyPanel.append(el);
  });

  diffPanel.replaceChildren();
  if (editor.diffView) {
    const d = editor.diffView;
    line(
      `against ${d.againstLabel}: +${d.counts.added} / -${d.counts.removed}`,
      "ok",
      diffPanel,
    );
    const clear = document.createElement("button");
    clear.textContent = "clear";
    clear.onclick = () => editor.clearDiff();
    diffPanel.append(clear);
  }
}

function line(text: string, cls: string, parent?: HTMLElement): HTMLElement {
  const el = document.createElement("div");
  el.className = cls;
  el.textContent = text;
  parent?.append(el);
  return el;
}

editor.onChange = redraw;

canvas.addEventListener("mousedown", (ev) => {
  dragStart = canvasCell(canvas, ev);
});

canvas.addEventListener("mouseup", (ev) => {
  const start = dragStart;
  dragStart = null;
  if (!start) return;
  const end = canvasCell(canvas, ev);
  if (eraseToggle.checked) {
    const x = Math.min(start[0], end[0]);
    const y = Math.min(start[1], end[1]);
    const w = Math.abs(end[0] - start[0]) + 1;
    const h = Math.abs(end[1] - start[1]) + 1;
    void editor.eraseRegion([x, y, w, h]);
  } else if (start[0] === end[0] && start[1] === end[1]) {
    void editor.togglePixel(start);
  }
});

placeButton.onclick = () => {
  const entry = entries.find((e) => e.name === shapeSelect.value);
  if (!entry) return;
  const [w, h] = entry.default_bbox;
  const grid = editor.scene.grid;
  const x = Math.max(0, Math.floor((grid.width - w) / 2));
  const y = Math.max(0, Math.floor((grid.height - h) / 2));
  void editor.placeShape(entry.name, [x, y, w, h]);
};

snapshotButton.onclick = () => {
  editor.snapshot(`snapshot ${editor.history.length + 1}`);
};

dotToggle.onchange = () => {
  editor.view.physicalDots = dotToggle.checked;
  redraw();
};

async function start(): Promise<void> {
  redraw();
  try {
    const catalog = await api.catalog();
    entries = catalog.entries;
    shapeSelect.replaceChildren(
      ...entries.map((e) => {
        const option = document.createElement("option");
        option.value = e.name;
        option.textContent = `${e.name} (${e.default_bbox[0]}x${e.default_bbox[1]})`;
        return option;
      }),
    );
  } catch {
    editor.offline = true;
  }
  await editor.sync();
}

void start();
