"""Builders for the shape inventory, at their default sizes or custom boxes.

Default box sizes follow the physical sizes of the study set at the
2.5 mm pitch (25 mm = 10 px and so on). Geometry that the size table does
not pin down (star proportions, glyph shapes, sine amplitude...) is fixed
here; see each builder.

Builders return renders in local coordinates with the shape touching all
four sides of its box.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

from .grid import Coord
from .scanconv import (
    Marker,
    ShapeRender,
    TooSmallError,
    conic,
    conic_arc,
    parametric_stroke,
    pixel_art_line,
    polygon,
)


class UnknownShapeError(KeyError):
    """Catalog name not in the inventory."""


def _round(v: float) -> int:
    return math.floor(v + 0.5)


def _require(cond: bool, name: str, w: int, h: int, why: str) -> None:
    if not cond:
        raise TooSmallError(f"{name} cannot be built at {w}x{h}: {why}")


# --- simple outlines ------------------------------------------------------

def build_square(w: int, h: int) -> list[ShapeRender]:
    _require(w >= 3 and h >= 3, "square", w, h, "needs at least 3x3")
    return [polygon([(0, 0), (w - 1, 0), (w - 1, h - 1), (0, h - 1)])]


def build_circle(w: int, h: int) -> list[ShapeRender]:
    return [conic((0, 0), w, h)]


def build_triangle(w: int, h: int) -> list[ShapeRender]:
    _require(w >= 3 and h >= 3, "triangle", w, h, "needs at least 3x3")
    apex = ((w - 1) // 2, 0)
    return [polygon([apex, (w - 1, h - 1), (0, h - 1)])]


_PENTA_OUTER = [90.0, 18.0, -54.0, -126.0, -198.0]


def build_pentagon(w: int, h: int) -> list[ShapeRender]:
    _require(w >= 7 and h >= 7, "pentagon", w, h, "needs at least 7x7")
    # flat-base, point-up pentagon scaled independently per axis
    pts = []
    for ang in _PENTA_OUTER:
        a = math.radians(ang)
        pts.append((math.cos(a), math.sin(a)))
    xs = [p[0] for p in pts]
    ys = [p[1] for p in pts]
    verts = [
        (
            _round((x - min(xs)) / (max(xs) - min(xs)) * (w - 1)),
            _round((max(ys) - y) / (max(ys) - min(ys)) * (h - 1)),
        )
        for x, y in pts
    ]
    return [polygon(verts)]


# Five-point star outline: 5 outer points interleaved with 5 concave inner
# corners, point up. The inner ring is wider than a true pentagram's
# (ratio ~0.55 rather than 0.38) so the edges leaving the side points are
# steeper than 45 degrees: shallower spikes would rasterize with doubled
# pixels hugging the horizontal arms. Fractions tuned on the default box.
_STAR_SHAPE: list[tuple[float, float]] = [
    (12 / 24, 0 / 18),   # top point
    (16 / 24, 5 / 18),
    (24 / 24, 7 / 18),   # right point
    (21 / 24, 14 / 18),
    (19 / 24, 18 / 18),  # bottom right point
    (12 / 24, 14 / 18),
    (5 / 24, 18 / 18),   # bottom left point
    (3 / 24, 14 / 18),
    (0 / 24, 7 / 18),    # left point
    (8 / 24, 5 / 18),
]


def build_star(w: int, h: int) -> list[ShapeRender]:
    _require(w >= 15 and h >= 11, "star", w, h, "needs at least 15x11")
    verts = [
        (_round(fx * (w - 1)), _round(fy * (h - 1))) for fx, fy in _STAR_SHAPE
    ]
    return [polygon(verts)]


# --- heart -----------------------------------------------------------------

def build_heart(w: int, h: int) -> list[ShapeRender]:
    _require(w >= 11 and w % 2 == 1, "heart", w, h, "needs odd width >= 11")
    d = (w + 1) // 2  # lobe diameter; lobes share one column
    _require(h >= d + 4, "heart", w, h, f"needs height >= {d + 4} for its lobes")
    ring = conic((0, 0), d, d).strokes[0].pixel_set()
    cusp_y = min(y for x, y in ring if x == d - 1)

    def keep_left(p: Coord) -> bool:
        x, y = p
        if y == d - 1:
            return False  # lobe bottoms are inside the heart
        if x == d - 1:
            return y <= cusp_y  # inner column reduced to the cusp pixel
        return True

    def keep_right(p: Coord) -> bool:
        x, y = p
        if y == d - 1:
            return False
        if x == 0:
            return y <= cusp_y
        return True

    lobe_l = conic_arc((0, 0), d, d, keep_left)
    lobe_r = conic_arc((w - d, 0), d, d, keep_right)
    cusp = (d - 1, cusp_y)
    bottom = (w // 2, h - 1)
    diag_l = pixel_art_line((1, d - 1), bottom)
    diag_r = pixel_art_line((w - 2, d - 1), bottom)
    outer_l = min(lobe_l.points, key=lambda p: (p[0], -p[1]))
    outer_r = max(lobe_r.points, key=lambda p: (p[0], p[1]))
    return [
        ShapeRender(
            kind="heart",
            strokes=(lobe_l, lobe_r, diag_l, diag_r),
            vertices=(cusp, bottom),
            curved=(True, True, False, False),
            edges=(((1, d - 1), bottom, 2), ((w - 2, d - 1), bottom, 3)),
            caps=(
                (outer_l, 0), (cusp, 0),
                (outer_r, 1), (cusp, 1),
                ((1, d - 1), 2), ((w - 2, d - 1), 3),
            ),
        )
    ]


# --- sine curve with axes ----------------------------------------------------

def build_sine(w: int, h: int) -> list[ShapeRender]:
    _require(w >= 15 and h >= 15, "sine_curve", w, h, "needs at least 15x15")
    cx, cy = (w - 1) // 2, (h - 1) // 2
    amp = min(10 * (h - 1) / 26.0, (h - 1) / 2 - 1)

    def sampler(t: float) -> tuple[float, float]:
        return (t, cy - amp * math.sin(2 * math.pi * (t - cx) / (w - 1)))

    curve = parametric_stroke(sampler, 0.0, float(w - 1))
    x_axis = pixel_art_line((0, cy), (w - 1, cy))
    y_axis = pixel_art_line((cx, 0), (cx, h - 1))
    return [
        ShapeRender(
            kind="axes",
            strokes=(x_axis, y_axis),
            # the origin is a declared junction: the axes legitimately cross
            vertices=((0, cy), (w - 1, cy), (cx, 0), (cx, h - 1), (cx, cy)),
            edges=(((0, cy), (w - 1, cy), 0), ((cx, 0), (cx, h - 1), 1)),
        ),
        ShapeRender(
            kind="wave",
            strokes=(curve,),
            curved=(True,),
            caps=((curve.points[0], 0), (curve.points[-1], 0)),
        ),
    ]


# --- smiley -------------------------------------------------------------------

def build_smiley(w: int, h: int, eye_px: int) -> list[ShapeRender]:
    _require(w >= 13 and h >= 13, "smiley", w, h, "needs at least 13x13")
    face = conic((0, 0), w, h)
    mw = max(7, _round(w * 9 / 15))
    if mw % 2 == 0:
        mw += 1
    mx = (w - mw) // 2
    my = _round(h * 4 / 15)
    mid = (mw - 1) // 2  # mouth ring center row, local
    mouth = conic_arc((mx, my), mw, mw, lambda p: p[1] >= mid)
    ex = _round(w * 4 / 15)
    ey = _round(h * 5 / 15)
    eyes: tuple[Marker, ...] = (
        ((ex, ey), eye_px),
        ((w - 1 - ex - 1, ey), eye_px),
    )
    return [
        face,
        ShapeRender(
            kind="mouth",
            strokes=(mouth,),
            curved=(True,),
            caps=((mouth.points[0], 0), (mouth.points[-1], 0)),
        ),
        ShapeRender(kind="eyes", strokes=(), markers=eyes),
    ]


# --- flower --------------------------------------------------------------------

def build_flower(w: int, h: int, with_stem: bool) -> list[ShapeRender]:
    _require(w >= 19 and h >= 17, "flower", w, h, "needs at least 19x17")
    pw = max(5, _round(w * 7 / 23))
    if pw % 2 == 0:
        pw += 1
    ph = pw
    sw = max(3, _round(w * 5 / 23))
    if sw % 2 == 0:
        sw += 1
    ew = _round(w * 8 / 23)  # east/west petal width
    eh = pw
    nx = (w - pw) // 2
    wy = (h - eh) // 2
    renders = [
        conic((nx, 0), pw, ph),                # north petal
        conic((nx, h - ph), pw, ph),           # south petal
        conic((0, wy), ew, eh),                # west petal
        conic((w - ew, wy), ew, eh),           # east petal
        conic((nx + (pw - sw) // 2, wy + (eh - sw) // 2), sw, sw),  # center
    ]
    if with_stem:
        # starts one step below the center ring's bottom-right corner
        x0 = nx + (pw - sw) // 2 + sw - 1
        y0 = wy + (eh - sw) // 2 + sw
        x1 = min(w - 4, x0 + 6)
        y1 = h - 1

        def sampler(t: float) -> tuple[float, float]:
            return (x0 + (x1 - x0) * t, y0 + (y1 - y0) * t * t)

        stem = parametric_stroke(sampler, 0.0, 1.0)
        renders.append(
            ShapeRender(
                kind="stem",
                strokes=(stem,),
                curved=(True,),
                caps=((stem.points[0], 0), (stem.points[-1], 0)),
            )
        )
    return renders


# --- cuboid ---------------------------------------------------------------------

def build_cuboid(w: int, h: int) -> list[ShapeRender]:
    """Oblique cuboid showing exactly three faces.

    Each visible face is its own closed polygon render; the faces share
    edges pixel for pixel. Drawing the nine edges as one figure is
    impossible under the single-width rule: at the back corners a receding
    diagonal always touches the straight edge orthogonally. The receding
    edges run at slope 2 so they leave each corner with a straight step.
    """
    _require(w >= 9 and h >= 9, "cuboid", w, h, "needs at least 9x9")
    dx = max(2, _round(w / 5))
    dy = 2 * dx
    _require(w - dx >= 4 and h - dy >= 4, "cuboid", w, h, "depth leaves no face")
    a = (0, dy)                # front top-left
    b = (w - 1 - dx, dy)       # front top-right
    c = (w - 1 - dx, h - 1)    # front bottom-right
    d = (0, h - 1)             # front bottom-left
    e = (dx, 0)                # back top-left
    f = (w - 1, 0)             # back top-right
    g = (w - 1, h - 1 - dy)    # back bottom-right
    front = polygon([a, b, c, d])
    top = polygon([a, e, f, b])
    # the side face shares b-f and b-c with the other faces; it contributes
    # only its outer edges, since a closed parallelogram this thin cannot
    # keep its acute corners single pixel wide
    side = polygon([f, g, c], closed=False)
    return [front, top, side]


# --- block letters ----------------------------------------------------------------

def _letter_i(x: int, y: int, lw: int, lh: int) -> ShapeRender:
    top = pixel_art_line((x, y), (x + lw - 1, y))
    bottom = pixel_art_line((x, y + lh - 1), (x + lw - 1, y + lh - 1))
    mid = x + lw // 2
    stem = pixel_art_line((mid, y), (mid, y + lh - 1))
    return ShapeRender(
        kind="glyph_i",
        strokes=(top, bottom, stem),
        vertices=((mid, y), (mid, y + lh - 1)),
        edges=(((mid, y), (mid, y + lh - 1), 2),),
        caps=(
            ((x, y), 0), ((x + lw - 1, y), 0),
            ((x, y + lh - 1), 1), ((x + lw - 1, y + lh - 1), 1),
        ),
    )


def _letter_t(x: int, y: int, lw: int, lh: int) -> ShapeRender:
    top = pixel_art_line((x, y), (x + lw - 1, y))
    mid = x + lw // 2
    stem = pixel_art_line((mid, y), (mid, y + lh - 1))
    return ShapeRender(
        kind="glyph_t",
        strokes=(top, stem),
        vertices=((mid, y),),
        edges=(((mid, y), (mid, y + lh - 1), 1),),
        caps=(((x, y), 0), ((x + lw - 1, y), 0), ((mid, y + lh - 1), 1)),
    )


def _letter_u(x: int, y: int, lw: int, lh: int) -> ShapeRender:
    bowl_h = min(lh - 2, lw + 2)
    straight_h = lh - bowl_h
    ring_y = y + straight_h
    mid = bowl_h - (bowl_h + 1) // 2  # local row where the bowl arc starts
    arc = conic_arc((x, ring_y), lw, bowl_h, lambda p: p[1] >= mid)
    left = pixel_art_line((x, y), (x, ring_y + mid - 1))
    right = pixel_art_line((x + lw - 1, y), (x + lw - 1, ring_y + mid - 1))
    return ShapeRender(
        kind="glyph_u",
        strokes=(left, right, arc),
        curved=(False, False, True),
        caps=(
            ((x, y), 0), ((x, ring_y + mid - 1), 0),
            ((x + lw - 1, y), 1), ((x + lw - 1, ring_y + mid - 1), 1),
            ((arc.points[0], 2)), ((arc.points[-1], 2)),
        ),
    )


def _letter_c(x: int, y: int, lw: int, lh: int) -> ShapeRender:
    ring = conic((0, 0), lw, lh).strokes[0].pixel_set()
    right_rows = sorted(yy for xx, yy in ring if xx == lw - 1)
    arc = conic_arc(
        (x, y), lw, lh, lambda p: not (p[0] == lw - 1 and p[1] in right_rows)
    )
    return ShapeRender(
        kind="glyph_c",
        strokes=(arc,),
        curved=(True,),
        caps=((arc.points[0], 0), (arc.points[-1], 0)),
    )


def _letter_l(x: int, y: int, lw: int, lh: int) -> ShapeRender:
    r = polygon([(x, y), (x, y + lh - 1), (x + lw - 1, y + lh - 1)], closed=False)
    return ShapeRender(
        kind="glyph_l",
        strokes=r.strokes,
        vertices=r.vertices,
        edges=r.edges,
    )


def build_glyphs(w: int, h: int) -> list[ShapeRender]:
    _require(w >= 20 and h >= 26, "glyphs", w, h, "needs at least 20x26")
    gap = 2
    lh = (h - gap) // 2
    row2 = lh + gap
    w5 = (w - 2 * gap - 6) // 2  # two narrow letters and one wide per row
    w6 = w - 2 * gap - 2 * w5
    return [
        _letter_i(0, 0, w5, lh),
        _letter_t(w5 + gap, 0, w5, lh),
        _letter_u(2 * (w5 + gap), 0, w6, lh),
        _letter_c(0, row2, w6, lh),
        _letter_l(w6 + gap, row2, w5 + 1, lh),
    ]


# --- the catalog ------------------------------------------------------------------

@dataclass(frozen=True)
class CatalogEntry:
    name: str
    default_bbox_px: tuple[int, int]
    builder: Callable[[int, int], list[ShapeRender]]
    source: str  # which part of the study set the shape belongs to


_ENTRIES: list[CatalogEntry] = [
    CatalogEntry("square", (10, 10), build_square, "basic"),
    CatalogEntry("rectangle", (20, 10), build_square, "basic"),
    CatalogEntry("circle", (14, 14), build_circle, "basic"),
    CatalogEntry("ellipse", (14, 19), build_circle, "basic"),
    CatalogEntry("triangle", (11, 22), build_triangle, "basic"),
    CatalogEntry("star", (25, 19), build_star, "basic"),
    CatalogEntry("pentagon", (17, 17), build_pentagon, "compound"),
    CatalogEntry("heart", (15, 15), build_heart, "compound"),
    CatalogEntry("sine_curve", (27, 27), build_sine, "freeform"),
    CatalogEntry("smiley_a", (15, 15), lambda w, h: build_smiley(w, h, 2), "freeform"),
    CatalogEntry("smiley_b", (15, 15), lambda w, h: build_smiley(w, h, 1), "freeform"),
    CatalogEntry("flower_a", (23, 20), lambda w, h: build_flower(w, h, False), "freeform"),
    CatalogEntry("flower_b", (23, 20), lambda w, h: build_flower(w, h, True), "freeform"),
    CatalogEntry("cuboid", (16, 13), build_cuboid, "freeform"),
    CatalogEntry("glyphs", (20, 26), build_glyphs, "freeform"),
]

_BY_NAME = {e.name: e for e in _ENTRIES}


def catalog_list() -> list[CatalogEntry]:
    return list(_ENTRIES)


def build(name: str, bbox_px: tuple[int, int] | None = None) -> list[ShapeRender]:
    """Build a catalog shape at its default size or a custom box."""
    entry = _BY_NAME.get(name)
    if entry is None:
        raise UnknownShapeError(name)
    w, h = bbox_px if bbox_px is not None else entry.default_bbox_px
    return entry.builder(w, h)
