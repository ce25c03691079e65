"""Scenes: ordered drawable items composed onto a grid.

Items draw or erase in list order, so a later erase wins over an earlier
draw — that is the whole iteration workflow (render, read, edit, diff).
Scenes are immutable values; rendering returns a fresh grid plus the
per-item shape renders the linter consumes.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import catalog as _catalog
from .grid import Coord, GridSpec, PinGrid, BoundsError
from .lint import LintReport, lint_renders, order_pixels
from .scanconv import ShapeRender, Stroke, TooSmallError, conic, line, polygon


@dataclass(frozen=True)
class CatalogItem:
    name: str
    bbox: tuple[int, int, int, int] | None = None  # x, y, w, h

    kind = "catalog"


@dataclass(frozen=True)
class LineItem:
    p0: Coord
    p1: Coord

    kind = "line"


@dataclass(frozen=True)
class PolygonItem:
    points: tuple[Coord, ...]
    closed: bool = True

    kind = "polygon"


@dataclass(frozen=True)
class ConicItem:
    bbox: tuple[int, int, int, int]

    kind = "conic"


@dataclass(frozen=True)
class MarkerItem:
    at: Coord
    size: int = 1

    kind = "marker"


@dataclass(frozen=True)
class PixelsItem:
    coords: tuple[Coord, ...]
    vertices: tuple[Coord, ...] = ()

    kind = "pixels"


@dataclass(frozen=True)
class EraseItem:
    rect: tuple[int, int, int, int]  # x, y, w, h

    kind = "erase"


Item = (
    CatalogItem
    | LineItem
    | PolygonItem
    | ConicItem
    | MarkerItem
    | PixelsItem
    | EraseItem
)


@dataclass(frozen=True)
class Scene:
    grid: GridSpec
    items: tuple[Item, ...] = ()


@dataclass(frozen=True)
class SceneIssue:
    item_index: int
    message: str

    def __str__(self) -> str:  # stable CLI form
        return f"item {self.item_index}: {self.message}"


def _pixels_item_renders(item: PixelsItem) -> list[ShapeRender]:
    """Raw pixels become one stroke per 8-connected component; components
    that are simple paths or rings keep a walkable order so the run checks
    apply, anything else is left for the structure check to call out."""
    remaining = set(item.coords)
    strokes: list[Stroke] = []
    while remaining:
        seed = min(remaining, key=lambda c: (c[1], c[0]))
        comp = {seed}
        frontier = [seed]
        while frontier:
            cx, cy = frontier.pop()
            for q in (
                (cx + dx, cy + dy)
                for dx in (-1, 0, 1)
                for dy in (-1, 0, 1)
                if (dx, dy) != (0, 0)
            ):
                if q in remaining and q not in comp:
                    comp.add(q)
                    frontier.append(q)
        remaining -= comp
        ordered = order_pixels(set(comp), closed=False)
        if ordered:
            strokes.append(Stroke(tuple(ordered)))
        else:
            ring = order_pixels(set(comp), closed=True)
            if ring:
                strokes.append(Stroke(tuple(ring), closed=True))
            else:
                strokes.append(
                    Stroke(tuple(sorted(comp, key=lambda c: (c[1], c[0]))))
                )
    vertices = tuple(item.vertices)
    edges = ()
    if len(vertices) >= 3:
        pairs = list(zip(vertices, vertices[1:])) + [(vertices[-1], vertices[0])]
        edges = tuple((u, v, None) for u, v in pairs)
    return [
        ShapeRender(
            kind="pixels", strokes=tuple(strokes), vertices=vertices, edges=edges
        )
    ]


def _item_renders(item: Item) -> list[ShapeRender]:
    if isinstance(item, CatalogItem):
        if item.bbox is None:
            renders = _catalog.build(item.name)
            ox = oy = 0
        else:
            ox, oy, w, h = item.bbox
            renders = _catalog.build(item.name, (w, h))
        return [r.translate(ox, oy) for r in renders] if (ox or oy) else renders
    if isinstance(item, LineItem):
        return [line(item.p0, item.p1)]
    if isinstance(item, PolygonItem):
        return [polygon(list(item.points), item.closed)]
    if isinstance(item, ConicItem):
        x, y, w, h = item.bbox
        return [conic((x, y), w, h)]
    if isinstance(item, MarkerItem):
        return [ShapeRender(kind="marker", strokes=(), markers=((item.at, item.size),))]
    if isinstance(item, PixelsItem):
        return _pixels_item_renders(item)
    raise TypeError(f"not a drawable item: {item!r}")


def validate_scene(scene: Scene) -> list[SceneIssue]:
    """Collect problems without raising: unknown names, bad parameters,
    too-small shapes, and out-of-grid pixels (the default is strict; grid
    clipping is an explicit render option)."""
    issues: list[SceneIssue] = []
    for index, item in enumerate(scene.items):
        if isinstance(item, EraseItem):
            x, y, w, h = item.rect
            if w <= 0 or h <= 0:
                issues.append(SceneIssue(index, f"erase rectangle {w}x{h} is empty"))
            continue
        if isinstance(item, MarkerItem) and item.size < 1:
            issues.append(SceneIssue(index, f"marker size {item.size} must be >= 1"))
            continue
        if isinstance(item, PixelsItem) and not item.coords:
            issues.append(SceneIssue(index, "pixels item has no coordinates"))
            continue
        try:
            renders = _item_renders(item)
        except _catalog.UnknownShapeError as exc:
            issues.append(SceneIssue(index, f"unknown catalog shape {exc.args[0]!r}"))
            continue
        except (TooSmallError, ValueError) as exc:
            issues.append(SceneIssue(index, str(exc)))
            continue
        out = sorted(
            p
            for r in renders
            for p in r.pixels()
            if not scene.grid.contains(p)
        )
        if out:
            issues.append(
                SceneIssue(
                    index,
                    f"{len(out)} pixel(s) outside the "
                    f"{scene.grid.width_px}x{scene.grid.height_px} grid, "
                    f"first at {out[0]}",
                )
            )
    return issues


class SceneValidationError(ValueError):
    def __init__(self, issues: list[SceneIssue]):
        self.issues = issues
        super().__init__("; ".join(str(i) for i in issues))


def render_scene(
    scene: Scene, clip: bool = False
) -> tuple[PinGrid, list[ShapeRender]]:
    """Apply items in order onto a fresh grid.

    Returns the grid and the flat list of shape renders (each tagged with
    its item index) for linting. With ``clip`` set, out-of-grid pixels are
    dropped instead of failing validation.
    """
    issues = validate_scene(scene)
    if issues and not clip:
        raise SceneValidationError(issues)
    if issues and clip:
        hard = [
            i
            for i in issues
            if "outside the" not in i.message
        ]
        if hard:
            raise SceneValidationError(hard)
    actuated: set[Coord] = set()
    renders: list[ShapeRender] = []
    for index, item in enumerate(scene.items):
        if isinstance(item, EraseItem):
            x, y, w, h = item.rect
            actuated -= {
                (px, py)
                for (px, py) in actuated
                if x <= px < x + w and y <= py < y + h
            }
            continue
        for render in _item_renders(item):
            tagged = render.with_item_index(index)
            renders.append(tagged)
            for p in tagged.pixels():
                if scene.grid.contains(p):
                    actuated.add(p)
                elif not clip:
                    raise BoundsError(f"pixel {p} outside grid")  # unreachable
    return PinGrid(scene.grid, frozenset(actuated)), renders


def lint_scene(scene: Scene, clip: bool = False) -> LintReport:
    """Per-item lint reports concatenated, each violation tagged with its
    item index."""
    _, renders = render_scene(scene, clip=clip)
    return lint_renders(renders)
