// Scene interchange types, mirroring the service's JSON contract.

export type Coord = [number, number];
export type Box = [number, number, number, number]; // x, y, w, h

export interface GridSpec {
  width: number;
  height: number;
  pitch_mm?: number;
  dot_width_mm?: number;
  dot_height_mm?: number;
}

export interface CatalogSceneItem {
  kind: "catalog";
  name: string;
  bbox?: Box;
}

export interface LineSceneItem {
  kind: "line";
  from: Coord;
  to: Coord;
}

export interface PolygonSceneItem {
  kind: "polygon";
  points: Coord[];
  closed: boolean;
}

export interface ConicSceneItem {
  kind: "conic";
  bbox: Box;
}

export interface MarkerSceneItem {
  kind: "marker";
  at: Coord;
  size: number;
}

export interface PixelsSceneItem {
  kind: "pixels";
  coords: Coord[];
  vertices?: Coord[];
}

export interface EraseSceneItem {
  kind: "erase";
  rect: Box;
}

export type SceneItem =
  | CatalogSceneItem
  | LineSceneItem
  | PolygonSceneItem
  | ConicSceneItem
  | MarkerSceneItem
  | PixelsSceneItem
  | EraseSceneItem;

export interface Scene {
  grid: GridSpec;
  items: SceneItem[];
}

export interface GridPayload {
  width: number;
  height: number;
  rows: string[]; // row-major "0101..." strings
}

export interface LintViolation {
  rule: string;
  item: number | null;
  at: Coord[];
  message: string;
}

export interface LintReport {
  pass: boolean;
  violations: LintViolation[];
}

export interface RenderSummary {
  item: number | null;
  kind: string;
  strokes: number;
  pixels: number;
  vertices: Coord[];
  markers: [Coord, number][];
}

export interface RenderResponse {
  grid: GridPayload;
  renders: RenderSummary[];
  lint: LintReport;
}

export interface DiffResponse {
  added: Coord[];
  removed: Coord[];
  counts: { added: number; removed: number };
}

export interface CatalogEntry {
  name: string;
  default_bbox: [number, number];
  size_mm: [number, number];
  group: string;
}

export interface CatalogResponse {
  entries: CatalogEntry[];
}
