// Editor core: scene edits, service sync, history, and diff views.
//
// All geometry authority lives in the service: the client edits the scene
// document and displays whatever grid and lint report come back. The only
// local pixel knowledge is the last synced grid, used to decide whether a
// toggle should draw, erase, or undo a previous toggle.

import { ApiClient } from "./api.js";
import type {
  Box,
  Coord,
  DiffResponse,
  GridSpec,
  LintReport,
  RenderResponse,
  Scene,
  SceneItem,
  EraseSceneItem,
  PixelsSceneItem,
} from "./types.js";

export interface Snapshot {
  label: string;
  scene: Scene;
}

export interface DiffView {
  againstLabel: string;
  added: Coord[];
  removed: Coord[];
  counts: { added: number; removed: number };
}

export interface ViewOptions {
  // draw pins as circles at their physical proportion (dot width over pitch)
  physicalDots: boolean;
  dotWidthMm: number;
  pitchMm: number;
}

const cloneScene = (scene: Scene): Scene => JSON.parse(JSON.stringify(scene));

export class Editor {
  scene: Scene;
  grid: string[] = [];
  lint: LintReport = { pass: true, violations: [] };
  renders: RenderResponse["renders"] = [];
  history: Snapshot[] = [];
  diffView: DiffView | null = null;
  selection: number | null = null;
  offline = false;
  syncCount = 0;
  view: ViewOptions = { physicalDots: true, dotWidthMm: 1.2, pitchMm: 2.5 };
  onChange: () => void = () => {};

  private seq = 0;

  constructor(
    private readonly api: ApiClient,
    grid: GridSpec = { width: 27, height: 27 },
  ) {
    this.scene = { grid, items: [] };
  }

  // --- scene edits ----------------------------------------------------------

  async placeShape(name: string, bbox: Box): Promise<void> {
    const items = this.drawItems();
    items.push({ kind: "catalog", name, bbox });
    this.setItems(items, this.eraseItems(), this.overlayCoords());
    await this.sync();
  }

  async togglePixel(at: Coord): Promise<void> {
    const overlay = this.overlayCoords();
    const erases = this.eraseItems();
    const inOverlay = overlay.findIndex(
      (p) => p[0] === at[0] && p[1] === at[1],
    );
    if (inOverlay >= 0) {
      overlay.splice(inOverlay, 1);
    } else if (this.pixelOn(at)) {
      erases.push({ kind: "erase", rect: [at[0], at[1], 1, 1] });
    } else {
      const erased = erases.findIndex(
        (e) =>
          e.rect[0] === at[0] &&
          e.rect[1] === at[1] &&
          e.rect[2] === 1 &&
          e.rect[3] === 1,
      );
      if (erased >= 0) {
        erases.splice(erased, 1);
      } else {
        overlay.push(at);
      }
    }
    this.setItems(this.drawItems(), erases, overlay);
    await this.sync();
  }

  async eraseRegion(rect: Box): Promise<void> {
    const [x, y, w, h] = rect;
    const overlay = this.overlayCoords().filter(
      ([px, py]) => !(x <= px && px < x + w && y <= py && py < y + h),
    );
    const erases = this.eraseItems();
    erases.push({ kind: "erase", rect });
    this.setItems(this.drawItems(), erases, overlay);
    await this.sync();
  }

  async removeItem(index: number): Promise<void> {
    const items = this.scene.items.filter((_, i) => i !== index);
    this.scene = { ...this.scene, items };
    if (this.selection === index) this.selection = null;
    await this.sync();
  }

  select(index: number | null): void {
    this.selection = index;
    this.onChange();
  }

  // --- history and diffs -------------------------------------------------------

  snapshot(label: string): void {
    this.history.push({ label, scene: cloneScene(this.scene) });
    this.onChange();
  }

  async compareWith(index: number): Promise<DiffView> {
    const snap = this.history[index];
    const diff: DiffResponse = await this.api.diff(snap.scene, this.scene);
    this.diffView = {
      againstLabel: snap.label,
      added: diff.added,
      removed: diff.removed,
      counts: diff.counts,
    };
    this.onChange();
    return this.diffView;
  }

  async compareSnapshots(a: number, b: number): Promise<DiffView> {
    const diff = await this.api.diff(this.history[a].scene, this.history[b].scene);
    this.diffView = {
      againstLabel: `${this.history[a].label} -> ${this.history[b].label}`,
      added: diff.added,
      removed: diff.removed,
      counts: diff.counts,
    };
    this.onChange();
    return this.diffView;
  }

  clearDiff(): void {
    this.diffView = null;
    this.onChange();
  }

  // --- service sync ----------------------------------------------------------------

  async sync(): Promise<void> {
    const ticket = ++this.seq;
    try {
      const response = await this.api.render(this.scene);
      if (ticket !== this.seq) return; // a newer edit is in flight
      this.grid = response.grid.rows;
      this.renders = response.renders;
      this.lint = response.lint;
      this.offline = false;
      this.syncCount += 1;
    } catch {
      if (ticket !== this.seq) return;
      this.offline = true; // banner only; the scene edit is preserved
    }
    this.onChange();
  }

  pixelOn(at: Coord): boolean {
    const row = this.grid[at[1]];
    return row !== undefined && row[at[0]] === "1";
  }

  pixelCount(): number {
    let count = 0;
    for (const row of this.grid) {
      for (const ch of row) if (ch === "1") count += 1;
    }
    return count;
  }

  gridHash(): string {
    // FNV-1a over the row text; enough to compare against the service grid
    let hash = 0x811c9dc5;
    for (const row of this.grid) {
      for (let i = 0; i < row.length; i++) {
        hash ^= row.charCodeAt(i);
        hash = Math.imul(hash, 0x01000193) >>> 0;
      }
      hash ^= 10;
      hash = Math.imul(hash, 0x01000193) >>> 0;
    }
    return hash.toString(16).padStart(8, "0");
  }

  // --- item layering -------------------------------------------------------------------
  // items are kept as [draw items..., erase items..., pixel overlay]: the
  // overlay must win over erases so toggling a pixel back on always works

  private drawItems(): SceneItem[] {
    return this.scene.items.filter(
      (item) => item.kind !== "erase" && !this.isOverlay(item),
    );
  }

  private eraseItems(): EraseSceneItem[] {
    return this.scene.items.filter(
      (item): item is EraseSceneItem => item.kind === "erase",
    );
  }

  private overlayCoords(): Coord[] {
    const overlay = this.scene.items.find((item) => this.isOverlay(item)) as
      | PixelsSceneItem
      | undefined;
    return overlay ? overlay.coords.map((c) => [c[0], c[1]] as Coord) : [];
  }

  private isOverlay(item: SceneItem): boolean {
    return item.kind === "pixels" && !item.vertices;
  }

  private setItems(
    draws: SceneItem[],
    erases: EraseSceneItem[],
    overlay: Coord[],
  ): void {
    const items: SceneItem[] = [...draws, ...erases];
    if (overlay.length > 0) {
      items.push({ kind: "pixels", coords: overlay });
    }
    this.scene = { ...this.scene, items };
  }
}
