"""Scene interchange format and grid exporters.

The interchange document is JSON: an object with "grid" and "items",
items being tagged objects. Emission is canonical (fixed key order,
2-space indent, trailing newline) so identical scenes are byte-identical
and safe to diff or freeze as fixtures.

Grid exporters: ascii art ('o'/'.'), braille cells (2x4 pixels per
character, with a width/height header line), and plain PBM.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .grid import Coord, GridSpec, PinGrid
from .scene import (
    CatalogItem,
    ConicItem,
    EraseItem,
    Item,
    LineItem,
    MarkerItem,
    PixelsItem,
    PolygonItem,
    Scene,
)


@dataclass(frozen=True)
class ParseError(ValueError):
    line: int
    column: int
    message: str

    def __str__(self) -> str:
        return f"{self.line}:{self.column}: {self.message}"


def _item_positions(text: str) -> list[tuple[int, int]]:
    """1-based (line, column) of each element in the top-level "items"
    array, by lexical scan."""
    positions: list[tuple[int, int]] = []
    depth = 0
    in_string = False
    escape = False
    key = ""
    items_at: int | None = None
    in_items = False
    expect_value = False
    for i, ch in enumerate(text):
        if in_string:
            if escape:
                escape = False
            elif ch == "\\":
                escape = True
            elif ch == '"':
                in_string = False
            else:
                key += ch
            continue
        if ch == '"':
            in_string = True
            key = ""
            continue
        if ch in "{[":
            if in_items and depth == items_at:
                positions.append(_line_col(text, i))
            depth += 1
        elif ch in "}]":
            depth -= 1
            if in_items and ch == "]" and items_at is not None and depth == items_at - 1:
                in_items = False
        elif ch == ":" and depth == 1 and key == "items":
            expect_value = True
            continue
        if expect_value and ch == "[":
            in_items = True
            items_at = depth  # depth already incremented past the array
            expect_value = False
    return positions


def _line_col(text: str, offset: int) -> tuple[int, int]:
    line = text.count("\n", 0, offset) + 1
    col = offset - (text.rfind("\n", 0, offset) + 1) + 1
    return line, col


def _coord(v, where: tuple[int, int], what: str) -> Coord:
    if (
        not isinstance(v, list)
        or len(v) != 2
        or not all(isinstance(c, int) for c in v)
    ):
        raise ParseError(*where, f"{what} must be a [x, y] pair of integers")
    return (v[0], v[1])


def _rect(v, where: tuple[int, int], what: str) -> tuple[int, int, int, int]:
    if (
        not isinstance(v, list)
        or len(v) != 4
        or not all(isinstance(c, int) for c in v)
    ):
        raise ParseError(*where, f"{what} must be [x, y, w, h] integers")
    return (v[0], v[1], v[2], v[3])


def _require_keys(obj: dict, allowed: set[str], needed: set[str], where, kind: str):
    missing = needed - obj.keys()
    if missing:
        raise ParseError(
            *where, f"{kind} item is missing required field(s) {sorted(missing)}"
        )
    extra = obj.keys() - allowed - {"kind"}
    if extra:
        raise ParseError(*where, f"{kind} item has unknown field(s) {sorted(extra)}")


def parse_scene(text: str) -> Scene:
    """Parse the interchange document; raises ParseError with a 1-based
    position for malformed syntax, unknown item kinds, and bad fields."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.lineno, exc.colno, exc.msg) from None
    if not isinstance(doc, dict):
        raise ParseError(1, 1, "document must be a JSON object")
    grid = doc.get("grid")
    if not isinstance(grid, dict):
        raise ParseError(1, 1, 'document needs a "grid" object')
    try:
        spec = GridSpec(
            width_px=int(grid["width"]),
            height_px=int(grid["height"]),
            pitch_mm=float(grid.get("pitch_mm", GridSpec.pitch_mm)),
            dot_width_mm=float(grid.get("dot_width_mm", GridSpec.dot_width_mm)),
            dot_height_mm=float(grid.get("dot_height_mm", GridSpec.dot_height_mm)),
        )
    except KeyError as exc:
        raise ParseError(1, 1, f"grid is missing {exc.args[0]!r}") from None
    except (TypeError, ValueError) as exc:
        raise ParseError(1, 1, f"invalid grid: {exc}") from None
    raw_items = doc.get("items", [])
    if not isinstance(raw_items, list):
        raise ParseError(1, 1, '"items" must be an array')
    positions = _item_positions(text)
    items: list[Item] = []
    for index, raw in enumerate(raw_items):
        where = positions[index] if index < len(positions) else (1, 1)
        if not isinstance(raw, dict) or "kind" not in raw:
            raise ParseError(*where, f"item {index} must be an object with a \"kind\"")
        kind = raw["kind"]
        if kind == "catalog":
            _require_keys(raw, {"name", "bbox"}, {"name"}, where, kind)
            bbox = _rect(raw["bbox"], where, "bbox") if "bbox" in raw else None
            items.append(CatalogItem(name=str(raw["name"]), bbox=bbox))
        elif kind == "line":
            _require_keys(raw, {"from", "to"}, {"from", "to"}, where, kind)
            items.append(
                LineItem(_coord(raw["from"], where, '"from"'), _coord(raw["to"], where, '"to"'))
            )
        elif kind == "polygon":
            _require_keys(raw, {"points", "closed"}, {"points"}, where, kind)
            pts = raw["points"]
            if not isinstance(pts, list) or len(pts) < 2:
                raise ParseError(*where, "polygon needs at least 2 points")
            items.append(
                PolygonItem(
                    tuple(_coord(p, where, "point") for p in pts),
                    closed=bool(raw.get("closed", True)),
                )
            )
        elif kind == "conic":
            _require_keys(raw, {"bbox"}, {"bbox"}, where, kind)
            items.append(ConicItem(_rect(raw["bbox"], where, "bbox")))
        elif kind == "marker":
            _require_keys(raw, {"at", "size"}, {"at"}, where, kind)
            size = raw.get("size", 1)
            if not isinstance(size, int):
                raise ParseError(*where, "marker size must be an integer")
            items.append(MarkerItem(_coord(raw["at"], where, '"at"'), size))
        elif kind == "pixels":
            _require_keys(raw, {"coords", "vertices"}, {"coords"}, where, kind)
            coords = raw["coords"]
            if not isinstance(coords, list) or not coords:
                raise ParseError(*where, "pixels needs a non-empty coords array")
            items.append(
                PixelsItem(
                    tuple(_coord(p, where, "coord") for p in coords),
                    tuple(
                        _coord(p, where, "vertex") for p in raw.get("vertices", [])
                    ),
                )
            )
        elif kind == "erase":
            _require_keys(raw, {"rect"}, {"rect"}, where, kind)
            items.append(EraseItem(_rect(raw["rect"], where, "rect")))
        else:
            raise ParseError(*where, f"unknown item kind {kind!r}")
    return Scene(grid=spec, items=tuple(items))


def _item_to_obj(item: Item) -> dict:
    if isinstance(item, CatalogItem):
        obj: dict = {"kind": "catalog", "name": item.name}
        if item.bbox is not None:
            obj["bbox"] = list(item.bbox)
        return obj
    if isinstance(item, LineItem):
        return {"kind": "line", "from": list(item.p0), "to": list(item.p1)}
    if isinstance(item, PolygonItem):
        return {
            "kind": "polygon",
            "points": [list(p) for p in item.points],
            "closed": item.closed,
        }
    if isinstance(item, ConicItem):
        return {"kind": "conic", "bbox": list(item.bbox)}
    if isinstance(item, MarkerItem):
        return {"kind": "marker", "at": list(item.at), "size": item.size}
    if isinstance(item, PixelsItem):
        obj = {"kind": "pixels", "coords": [list(p) for p in item.coords]}
        if item.vertices:
            obj["vertices"] = [list(p) for p in item.vertices]
        return obj
    if isinstance(item, EraseItem):
        return {"kind": "erase", "rect": list(item.rect)}
    raise TypeError(f"not an item: {item!r}")


def scene_to_obj(scene: Scene) -> dict:
    return {
        "grid": {
            "width": scene.grid.width_px,
            "height": scene.grid.height_px,
            "pitch_mm": scene.grid.pitch_mm,
            "dot_width_mm": scene.grid.dot_width_mm,
            "dot_height_mm": scene.grid.dot_height_mm,
        },
        "items": [_item_to_obj(i) for i in scene.items],
    }


def canonical_json(obj) -> str:
    """Byte-stable JSON used everywhere output determinism matters."""
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"


def emit_scene(scene: Scene) -> str:
    """Canonical interchange form; parse(emit(s)) == s."""
    return canonical_json(scene_to_obj(scene))


# --- response payloads -------------------------------------------------------
# shared by the CLI's json output and the HTTP service so both emit
# byte-identical canonical bodies

def grid_payload(grid: PinGrid) -> dict:
    return {
        "width": grid.spec.width_px,
        "height": grid.spec.height_px,
        "rows": [
            "".join(
                "1" if (x, y) in grid.actuated else "0"
                for x in range(grid.spec.width_px)
            )
            for y in range(grid.spec.height_px)
        ],
    }


def report_payload(report) -> dict:
    return {
        "pass": report.passed,
        "violations": [
            {
                "rule": v.rule,
                "item": v.item_index,
                "at": [list(p) for p in v.at],
                "message": v.message,
            }
            for v in report.violations
        ],
    }


def render_payload(grid: PinGrid, renders, report) -> dict:
    return {
        "grid": grid_payload(grid),
        "renders": [
            {
                "item": r.item_index,
                "kind": r.kind,
                "strokes": len(r.strokes),
                "pixels": len(r.pixels()),
                "vertices": [list(v) for v in r.vertices],
                "markers": [[list(at), size] for at, size in r.markers],
            }
            for r in renders
        ],
        "lint": report_payload(report),
    }


# --- grid exporters --------------------------------------------------------

def export_ascii(grid: PinGrid) -> str:
    rows = []
    for y in range(grid.spec.height_px):
        rows.append(
            "".join(
                "o" if (x, y) in grid.actuated else "."
                for x in range(grid.spec.width_px)
            )
        )
    return "\n".join(rows) + "\n"


_BRAILLE_BITS = {
    (0, 0): 0x01, (0, 1): 0x02, (0, 2): 0x04, (0, 3): 0x40,
    (1, 0): 0x08, (1, 1): 0x10, (1, 2): 0x20, (1, 3): 0x80,
}


def export_braille(grid: PinGrid) -> str:
    """Grid tiled into 2x4-pixel braille cells, padded with flat pixels on
    the right/bottom edges; a "W H" header keeps the true size for
    import."""
    w, h = grid.spec.width_px, grid.spec.height_px
    lines = [f"{w} {h}"]
    for cy in range(0, h, 4):
        chars = []
        for cx in range(0, w, 2):
            bits = 0
            for (dx, dy), bit in _BRAILLE_BITS.items():
                if (cx + dx, cy + dy) in grid.actuated:
                    bits |= bit
            chars.append(chr(0x2800 + bits))
        lines.append("".join(chars))
    return "\n".join(lines) + "\n"


def import_braille(text: str) -> PinGrid:
    lines = text.splitlines()
    if not lines:
        raise ParseError(1, 1, "empty braille document")
    header = lines[0].split()
    if len(header) != 2 or not all(p.isdigit() for p in header):
        raise ParseError(1, 1, 'braille header must be "WIDTH HEIGHT"')
    w, h = int(header[0]), int(header[1])
    actuated: set[Coord] = set()
    for row_index, row in enumerate(lines[1:]):
        for col_index, ch in enumerate(row):
            code = ord(ch)
            if not (0x2800 <= code <= 0x28FF):
                raise ParseError(
                    row_index + 2,
                    col_index + 1,
                    f"not a braille pattern character: {ch!r}",
                )
            bits = code - 0x2800
            for (dx, dy), bit in _BRAILLE_BITS.items():
                if bits & bit:
                    x = col_index * 2 + dx
                    y = row_index * 4 + dy
                    if x >= w or y >= h:
                        raise ParseError(
                            row_index + 2,
                            col_index + 1,
                            f"dot at ({x}, {y}) outside the declared {w}x{h} grid",
                        )
                    actuated.add((x, y))
    return PinGrid(GridSpec(w, h), frozenset(actuated))


def export_pbm(grid: PinGrid) -> bytes:
    """Plain PBM, one bit per pin (1 = actuated), rows wrapped at 70
    characters as the format requires."""
    w, h = grid.spec.width_px, grid.spec.height_px
    lines = ["P1", f"{w} {h}"]
    for y in range(h):
        row = "".join("1" if (x, y) in grid.actuated else "0" for x in range(w))
        for i in range(0, len(row), 70):
            lines.append(row[i : i + 70])
    return ("\n".join(lines) + "\n").encode("ascii")
