"""Integer scan conversion for single-pixel-wide pin-array art.

Primitives here produce strokes that follow the pixel-art rules by
construction: lines are balanced staircases of near-equal runs joined
corner to corner, closed conics are reflection-symmetric rings with
straight apex runs, and ``thin`` removes redundant "double" pixels.

All geometry is grid-independent; coordinates may be negative. Placement
onto a finite grid happens in the scene layer.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Iterable

from .grid import Coord


class TooSmallError(ValueError):
    """Shape below the minimum size that can be rendered recognizably."""


_ORTH = ((1, 0), (-1, 0), (0, 1), (0, -1))
_N8 = ((1, 0), (-1, 0), (0, 1), (0, -1), (1, 1), (1, -1), (-1, 1), (-1, -1))


def _neighbors8(p: Coord):
    x, y = p
    for dx, dy in _N8:
        yield (x + dx, y + dy)


def _adjacent8(a: Coord, b: Coord) -> bool:
    return a != b and abs(a[0] - b[0]) <= 1 and abs(a[1] - b[1]) <= 1


@dataclass(frozen=True)
class Stroke:
    """Ordered pixel path, open or closed.

    Strokes produced by the constructors in this module are 8-connected
    and single pixel wide. Raw strokes (e.g. user pixel items) may break
    that; the linter reports them instead of refusing to hold them.
    """

    points: tuple[Coord, ...]
    closed: bool = False

    def __post_init__(self) -> None:
        if not self.points:
            raise ValueError("stroke needs at least one pixel")
        for a, b in zip(self.points, self.points[1:]):
            if a == b:
                raise ValueError(f"immediate duplicate pixel {a} in stroke")

    def pixel_set(self) -> frozenset[Coord]:
        return frozenset(self.points)

    def is_path(self) -> bool:
        """True when consecutive points (and the wrap, if closed) are 8-adjacent."""
        pairs = list(zip(self.points, self.points[1:]))
        if self.closed and len(self.points) > 2:
            pairs.append((self.points[-1], self.points[0]))
        return all(_adjacent8(a, b) for a, b in pairs)

    def translate(self, dx: int, dy: int) -> "Stroke":
        return Stroke(tuple((x + dx, y + dy) for x, y in self.points), self.closed)


@dataclass(frozen=True)
class RunDecomposition:
    """Maximal straight runs of a stroke along its dominant axis."""

    orientation: str  # "horizontal-major" | "vertical-major"
    runs: tuple[int, ...]


Marker = tuple[Coord, int]  # (top-left coord, square side in px)
Edge = tuple[Coord, Coord, int | None]  # declared edge (u, v, owning stroke index)


@dataclass(frozen=True)
class ShapeRender:
    """Strokes plus the intent metadata the linter needs.

    ``vertices`` are declared sharp corners (exempt from the corner rules
    that forbid orthogonal joins, and required to be actuated).
    ``edges`` declare straight edges between coords, with the stroke that
    realizes them, for overshoot checks. ``caps`` are the intended
    terminal pixels of open strokes without a vertex at that end.
    ``curved`` flags strokes checked as curves instead of straight edges.
    """

    kind: str
    strokes: tuple[Stroke, ...]
    vertices: tuple[Coord, ...] = ()
    markers: tuple[Marker, ...] = ()
    curved: tuple[bool, ...] = ()
    edges: tuple[Edge, ...] = ()
    caps: tuple[tuple[Coord, int], ...] = ()  # (pixel, stroke index)
    item_index: int | None = None

    def __post_init__(self) -> None:
        if not self.curved:
            object.__setattr__(self, "curved", tuple(False for _ in self.strokes))
        if len(self.curved) != len(self.strokes):
            raise ValueError("curved flags must match strokes")
        for at, size in self.markers:
            if size < 1:
                raise ValueError(f"marker size must be >= 1, got {size}")
        overlap = self.marker_pixels() & self.stroke_pixels()
        if overlap:
            raise ValueError(f"markers overlap strokes at {sorted(overlap)}")

    def stroke_pixels(self) -> frozenset[Coord]:
        pixels: set[Coord] = set()
        for s in self.strokes:
            pixels.update(s.points)
        return frozenset(pixels)

    def marker_pixels(self) -> frozenset[Coord]:
        pixels: set[Coord] = set()
        for (mx, my), size in self.markers:
            for dy in range(size):
                for dx in range(size):
                    pixels.add((mx + dx, my + dy))
        return frozenset(pixels)

    def pixels(self) -> frozenset[Coord]:
        return self.stroke_pixels() | self.marker_pixels()

    def translate(self, dx: int, dy: int) -> "ShapeRender":
        return ShapeRender(
            kind=self.kind,
            strokes=tuple(s.translate(dx, dy) for s in self.strokes),
            vertices=tuple((x + dx, y + dy) for x, y in self.vertices),
            markers=tuple(((x + dx, y + dy), size) for (x, y), size in self.markers),
            curved=self.curved,
            edges=tuple(
                ((ux + dx, uy + dy), (vx + dx, vy + dy), si)
                for (ux, uy), (vx, vy), si in self.edges
            ),
            caps=tuple(((x + dx, y + dy), si) for (x, y), si in self.caps),
            item_index=self.item_index,
        )

    def with_item_index(self, index: int) -> "ShapeRender":
        return ShapeRender(
            kind=self.kind,
            strokes=self.strokes,
            vertices=self.vertices,
            markers=self.markers,
            curved=self.curved,
            edges=self.edges,
            caps=self.caps,
            item_index=index,
        )

    def bbox(self) -> tuple[int, int, int, int]:
        """(x, y, w, h) of all pixels."""
        px = self.pixels()
        xs = [p[0] for p in px]
        ys = [p[1] for p in px]
        return min(xs), min(ys), max(xs) - min(xs) + 1, max(ys) - min(ys) + 1


def midpoint_line(p0: Coord, p1: Coord) -> Stroke:
    """Closest-pixel line: one pixel per major-axis coordinate, each
    minimizing distance to the ideal segment; exact midpoint ties take the
    smaller minor coordinate so identical inputs always give identical
    output."""
    x0, y0 = p0
    x1, y1 = p1
    dx = x1 - x0
    dy = y1 - y0
    pts = [(x0, y0)]
    if abs(dx) >= abs(dy):
        steps = abs(dx)
        sx = 1 if dx >= 0 else -1
        v = y0
        vstep = 1 if dy > 0 else -1
        for i in range(1, steps + 1):
            # sign of (ideal minor) - (midpoint of candidates), times 2*steps
            d = 2 * i * dy - steps * (2 * (v - y0) + vstep)
            if dy > 0:
                if d > 0:
                    v += 1
            elif dy < 0:
                if d <= 0:  # tie goes to the smaller y
                    v -= 1
            pts.append((x0 + i * sx, v))
    else:
        steps = abs(dy)
        sy = 1 if dy >= 0 else -1
        v = x0
        vstep = 1 if dx > 0 else -1
        for i in range(1, steps + 1):
            d = 2 * i * dx - steps * (2 * (v - x0) + vstep)
            if dx > 0:
                if d > 0:
                    v += 1
            elif dx < 0:
                if d <= 0:
                    v -= 1
            pts.append((v, y0 + i * sy))
    return Stroke(tuple(pts))


def run_slice(n_px: int, n_runs: int) -> list[int]:
    """Split ``n_px`` pixels into ``n_runs`` runs whose lengths differ by at
    most one, via the boundary function f(i) = floor((2*i*n_px + n_runs) /
    (2*n_runs))."""
    if n_runs < 1:
        raise ValueError(f"need at least one run, got {n_runs}")
    if n_px < n_runs:
        raise ValueError(f"cannot split {n_px} px into {n_runs} runs")

    def f(i: int) -> int:
        return (2 * i * n_px + n_runs) // (2 * n_runs)

    return [f(i + 1) - f(i) for i in range(n_runs)]


def pixel_art_line(p0: Coord, p1: Coord) -> Stroke:
    """Line as a staircase of near-equal runs joined only diagonally.

    Same endpoints and per-major-axis coverage as midpoint_line; run
    lengths come from run_slice. Run placement is anchored at the endpoint
    with smaller (y, x), so swapping the endpoints returns the exact
    reversed pixel sequence.
    """
    if p0 == p1:
        return Stroke((p0,))
    a, b = p0, p1
    if (a[1], a[0]) > (b[1], b[0]):
        a, b = b, a
    pts = _pixel_art_from(a, b)
    if a != p0:
        pts.reverse()
    return Stroke(tuple(pts))


def _pixel_art_from(a: Coord, b: Coord) -> list[Coord]:
    dx = b[0] - a[0]
    dy = b[1] - a[1]  # >= 0 by canonical ordering
    adx, ady = abs(dx), abs(dy)
    pts: list[Coord] = []
    if adx >= ady:
        runs = run_slice(adx + 1, ady + 1)
        sx = 1 if dx > 0 else -1
        x, y = a
        for length in runs:
            for _ in range(length):
                pts.append((x, y))
                x += sx
            y += 1
    else:
        runs = run_slice(ady + 1, adx + 1)
        sx = 1 if dx > 0 else (-1 if dx < 0 else 0)
        x, y = a
        for length in runs:
            for _ in range(length):
                pts.append((x, y))
                y += 1
            x += sx
    return pts


def _is_removable(p: Coord, pixels: set[Coord] | frozenset[Coord]) -> bool:
    """A "double": p has a horizontal and a vertical neighbor (any such
    pair is mutually diagonal), and dropping p keeps its 8-neighborhood
    connected."""
    x, y = p
    has_h = (x + 1, y) in pixels or (x - 1, y) in pixels
    has_v = (x, y + 1) in pixels or (x, y - 1) in pixels
    if not (has_h and has_v):
        return False
    neigh = [q for q in _neighbors8(p) if q in pixels]
    if len(neigh) <= 1:
        return True
    seen = {neigh[0]}
    queue = [neigh[0]]
    while queue:
        cur = queue.pop()
        for q in neigh:
            if q not in seen and _adjacent8(cur, q):
                seen.add(q)
                queue.append(q)
    return len(seen) == len(neigh)


def thin(pixels: Iterable[Coord], protected: Iterable[Coord] = ()) -> set[Coord]:
    """Remove removable doubles in row-major order until a fixed point.

    Deterministic and idempotent; ``protected`` pixels (declared corners)
    are never removed.
    """
    px = set(pixels)
    keep = set(protected)
    changed = True
    while changed:
        changed = False
        for p in sorted(px, key=lambda c: (c[1], c[0])):
            if p in keep:
                continue
            if _is_removable(p, px):
                px.discard(p)
                changed = True
    return px


def run_decompose(stroke: Stroke) -> RunDecomposition:
    """Group stroke pixels into maximal runs of constant minor coordinate,
    in path order, along the stroke's dominant axis."""
    xs = [p[0] for p in stroke.points]
    ys = [p[1] for p in stroke.points]
    width = max(xs) - min(xs) + 1
    height = max(ys) - min(ys) + 1
    horizontal = width >= height
    minor = (lambda p: p[1]) if horizontal else (lambda p: p[0])
    runs: list[int] = []
    current = None
    for p in stroke.points:
        m = minor(p)
        if current is None or m != current:
            runs.append(1)
            current = m
        else:
            runs[-1] += 1
    return RunDecomposition(
        orientation="horizontal-major" if horizontal else "vertical-major",
        runs=tuple(runs),
    )


def polygon(vertices: list[Coord] | tuple[Coord, ...], closed: bool = True) -> ShapeRender:
    """Chain of pixel-art edges with declared corner vertices.

    Each edge includes both endpoints; adjacent edges share exactly the
    corner pixel. No edge pixel extends past a vertex along the edge
    direction (that is a construction property of pixel_art_line).
    """
    verts = [tuple(v) for v in vertices]
    if len(verts) < 2:
        raise ValueError("polygon needs at least 2 vertices")
    pairs = list(zip(verts, verts[1:]))
    if closed:
        pairs.append((verts[-1], verts[0]))
    for u, v in pairs:
        if u == v:
            raise ValueError(f"consecutive duplicate vertex {u}")
    strokes = tuple(pixel_art_line(u, v) for u, v in pairs)
    edges = tuple((u, v, i) for i, (u, v) in enumerate(pairs))
    return ShapeRender(
        kind="polygon" if closed else "polyline",
        strokes=strokes,
        vertices=tuple(verts),
        edges=edges,
    )


def line(p0: Coord, p1: Coord) -> ShapeRender:
    """Single pixel-art segment with both endpoints declared."""
    stroke = pixel_art_line(p0, p1)
    return ShapeRender(
        kind="line",
        strokes=(stroke,),
        vertices=(p0, p1) if p0 != p1 else (p0,),
        edges=((p0, p1, 0),) if p0 != p1 else (),
    )


# --- closed conics -----------------------------------------------------

def _conic_quadrant(width_px: int, height_px: int) -> list[Coord]:
    """Greedy march of the top-right quadrant arc on a doubled-coordinate
    grid (so half-integer centers stay exact).

    The ideal ellipse is inscribed in the pixel-cell box: center
    ((W-1)/2, (H-1)/2), semi-axes W/2 and H/2. From the top apex the march
    moves right/down one pixel at a time choosing the candidate with the
    smallest |implicit value|, never turning 90 degrees (runs must join
    corner to corner), and stops at the right apex.
    """
    a2, b2 = width_px, height_px  # doubled semi-axes
    cx, cy = width_px - 1, height_px - 1  # doubled center

    def implicit(px: int, py: int) -> int:
        xx = 2 * px - cx
        yy = 2 * py - cy
        return b2 * b2 * xx * xx + a2 * a2 * yy * yy - a2 * a2 * b2 * b2

    x = width_px // 2
    y = 0
    pts = [(x, y)]
    last = ""  # "h" | "v" | "d"
    while x < width_px - 1 or 2 * y < cy - 1:
        candidates: list[tuple[Coord, str]] = []
        if x + 1 <= width_px - 1:
            candidates.append(((x + 1, y), "h"))
            candidates.append(((x + 1, y + 1), "d"))
        candidates.append(((x, y + 1), "v"))

        def allowed(c: Coord, d: str, relax: bool) -> bool:
            px, py = c
            if 2 * py > cy + 1:
                return False  # never more than one step past the center row
            if 2 * py >= cy - 1 and px != width_px - 1:
                return False  # rows at the center belong to the side apex column
            if d == "v" and px == width_px // 2:
                return False  # columns at the center hold only the top apex pixel
            if not relax and ((d == "v" and last == "h") or (d == "h" and last == "v")):
                return False  # no 90-degree turns: runs join corner to corner
            return True

        valid = [(c, d) for c, d in candidates if allowed(c, d, relax=False)]
        if not valid:
            valid = [(c, d) for c, d in candidates if allowed(c, d, relax=True)]
        if not valid:
            break  # cannot happen for sizes >= 3; guard against looping
        (nx, ny), nd = min(
            valid, key=lambda cd: (abs(implicit(*cd[0])), cd[1] != "d")
        )
        pts.append((nx, ny))
        x, y, last = nx, ny, nd
    return _smooth_quadrant(pts, width_px, height_px, implicit)


def _groups_by_axis(points: list[Coord], axis: int) -> list[list[Coord]]:
    groups: list[list[Coord]] = []
    cur = None
    for p in points:
        if cur is None or p[axis] != cur:
            groups.append([p])
            cur = p[axis]
        else:
            groups[-1].append(p)
    return groups


def _smooth_quadrant(
    pts: list[Coord], width_px: int, height_px: int, implicit
) -> list[Coord]:
    """Remove interior run-length dips from a quadrant arc.

    Greedy marching can emit runs like [2,1,2] where the ideal lengths are
    nearly equal; a finger reads that dip as a notch, so the boundary pixel
    of a neighboring run is shifted into the dip (whichever shift stays
    closer to the ideal curve). Apex runs are left alone.
    """
    for _ in range(64):
        pts = sorted(pts)
        arc = [p for p in pts if p[1] != 0 and p[0] != width_px - 1]
        move: tuple[Coord, Coord] | None = None
        best = None
        for axis in (1, 0):  # constant-y runs, then constant-x runs
            groups = _groups_by_axis(arc, axis)
            for i in range(1, len(groups) - 1):
                a, m, b = len(groups[i - 1]), len(groups[i]), len(groups[i + 1])
                if not (a > m < b):
                    continue
                prev_last = groups[i - 1][-1]
                next_first = groups[i + 1][0]
                if axis == 1:  # horizontal runs on consecutive rows
                    cands = [
                        (prev_last, (prev_last[0], prev_last[1] + 1)),
                        (next_first, (next_first[0], next_first[1] - 1)),
                    ]
                else:  # vertical runs on consecutive columns
                    cands = [
                        (prev_last, (prev_last[0] + 1, prev_last[1])),
                        (next_first, (next_first[0] - 1, next_first[1])),
                    ]
                for src, dst in cands:
                    err = abs(implicit(*dst))
                    if best is None or err < best:
                        best = err
                        move = (src, dst)
                break
            if move:
                break
        if not move:
            return pts
        src, dst = move
        pts = [dst if p == src else p for p in pts]
    return sorted(pts)


def _order_loop(pixels: set[Coord]) -> list[Coord]:
    """Order a single-width closed ring into a clockwise path starting at
    the leftmost pixel of the top apex run."""
    degree: dict[Coord, list[Coord]] = {}
    for p in pixels:
        degree[p] = [q for q in _neighbors8(p) if q in pixels]
    bad = [p for p, nb in degree.items() if len(nb) != 2]
    if bad:
        raise ValueError(f"not a simple closed ring, odd degree at {sorted(bad)[:4]}")
    start = min(pixels, key=lambda c: (c[1], c[0]))
    first = min(degree[start], key=lambda c: (c[1], -c[0]))
    path = [start, first]
    while True:
        prev, cur = path[-2], path[-1]
        nxt = [q for q in degree[cur] if q != prev]
        if len(nxt) != 1:
            raise ValueError(f"branching ring at {cur}")
        if nxt[0] == start:
            break
        path.append(nxt[0])
    if len(path) != len(pixels):
        raise ValueError("ring is not a single loop")
    return path


def conic(bbox_top_left: Coord, width_px: int, height_px: int) -> ShapeRender:
    """Closed single-pixel-wide ellipse/circle ring inscribed in the box.

    Symmetric under horizontal and vertical reflection (and the diagonal
    reflections when width == height); the four apex runs are straight,
    with top = bottom and left = right lengths.
    """
    if width_px < 3 or height_px < 3:
        raise TooSmallError(
            f"conic needs at least a 3x3 box, got {width_px}x{height_px}"
        )
    quarter = _conic_quadrant(width_px, height_px)
    cx, cy = width_px - 1, height_px - 1
    ring: set[Coord] = set()
    for x, y in quarter:
        ring.add((x, y))
        ring.add((cx - x, y))
        ring.add((x, cy - y))
        ring.add((cx - x, cy - y))
    ring = thin(ring)
    loop = _order_loop(ring)
    ox, oy = bbox_top_left
    stroke = Stroke(tuple((x + ox, y + oy) for x, y in loop), closed=True)
    return ShapeRender(kind="conic", strokes=(stroke,), curved=(True,))


def conic_arc(
    bbox_top_left: Coord,
    width_px: int,
    height_px: int,
    keep: Callable[[Coord], bool],
) -> Stroke:
    """Open arc cut from a conic ring: the pixels of the ring (in local
    box coordinates) satisfying ``keep``, which must form one contiguous
    stretch of the loop."""
    ring = conic((0, 0), width_px, height_px).strokes[0].points
    n = len(ring)
    kept = [keep(p) for p in ring]
    if all(kept):
        raise ValueError("arc predicate keeps the whole ring")
    if not any(kept):
        raise ValueError("arc predicate keeps nothing")
    # rotate so the loop starts just after a dropped pixel
    start = next(i for i in range(n) if not kept[i])
    order = [(i + start) % n for i in range(n)]
    arc: list[Coord] = []
    seen_gap_after_arc = False
    for i in order:
        if kept[i]:
            if seen_gap_after_arc:
                raise ValueError("arc predicate selects a non-contiguous stretch")
            arc.append(ring[i])
        elif arc:
            seen_gap_after_arc = True
    ox, oy = bbox_top_left
    return Stroke(tuple((x + ox, y + oy) for x, y in arc))


def parametric_stroke(
    sampler: Callable[[float], tuple[float, float]],
    t0: float,
    t1: float,
    n_samples: int | None = None,
) -> Stroke:
    """Rasterize a parametric curve: sample, round, join consecutive
    samples with midpoint lines, collapse duplicates, then thin.

    With ``n_samples`` omitted, a coarse pre-pass estimates the bounding
    box and 8 samples per diagonal pixel are used.
    """
    if n_samples is None:
        coarse = [sampler(t0 + (t1 - t0) * i / 32) for i in range(33)]
        _check_finite(coarse)
        xs = [p[0] for p in coarse]
        ys = [p[1] for p in coarse]
        diag = math.hypot(max(xs) - min(xs) + 1, max(ys) - min(ys) + 1)
        n_samples = max(2, math.ceil(8 * diag))
    if n_samples < 2:
        raise ValueError(f"need at least 2 samples, got {n_samples}")
    raw = [sampler(t0 + (t1 - t0) * i / (n_samples - 1)) for i in range(n_samples)]
    _check_finite(raw)
    rounded = [(math.floor(x + 0.5), math.floor(y + 0.5)) for x, y in raw]
    pts: list[Coord] = []
    for p in rounded:
        if pts and p == pts[-1]:
            continue
        if pts:
            seg = midpoint_line(pts[-1], p).points
            pts.extend(seg[1:])
        else:
            pts.append(p)
    if len(pts) == 1:
        return Stroke(tuple(pts))
    survivors = thin(pts)
    ordered: list[Coord] = []
    for p in pts:
        if p in survivors and (not ordered or p != ordered[-1]):
            ordered.append(p)
    stroke = Stroke(tuple(ordered))
    if not stroke.is_path():
        # thinning ate a pivot pixel; re-walk the surviving set
        ordered = _order_path(survivors)
        stroke = Stroke(tuple(ordered))
    dense = [
        sampler(t0 + (t1 - t0) * i / (4 * n_samples)) for i in range(4 * n_samples + 1)
    ]

    def err(p: Coord) -> float:
        return min((p[0] - sx) ** 2 + (p[1] - sy) ** 2 for sx, sy in dense)

    return Stroke(tuple(_smooth_open_path(list(stroke.points), err)))


def _smooth_open_path(pts: list[Coord], err) -> list[Coord]:
    """Remove run-length dips from an open stroke by shifting a boundary
    pixel of a neighboring run into the dip, mirroring the conic
    smoothing. Moves must keep the path 8-connected and endpoints stay
    put."""
    for _ in range(32):
        move: tuple[int, Coord] | None = None
        best = None
        for axis in (1, 0):
            groups: list[list[int]] = []
            cur = None
            for i, p in enumerate(pts):
                if cur is None or p[axis] != cur:
                    groups.append([i])
                    cur = p[axis]
                else:
                    groups[-1].append(i)
            for gi in range(1, len(groups) - 1):
                a, m, b = len(groups[gi - 1]), len(groups[gi]), len(groups[gi + 1])
                if not (a > m < b):
                    continue
                for src_i in (groups[gi - 1][-1], groups[gi + 1][0]):
                    if src_i in (0, len(pts) - 1):
                        continue
                    src = pts[src_i]
                    ref = pts[groups[gi][0]]
                    dst = (src[0], ref[1]) if axis == 1 else (ref[0], src[1])
                    if dst in pts:
                        continue
                    trial = pts[:src_i] + [dst] + pts[src_i + 1 :]
                    if not all(
                        _adjacent8(q, r) for q, r in zip(trial, trial[1:])
                    ):
                        continue
                    e = err(dst)
                    if best is None or e < best:
                        best = e
                        move = (src_i, dst)
            if move:
                break
        if move is None:
            return pts
        src_i, dst = move
        pts = pts[:src_i] + [dst] + pts[src_i + 1 :]
    return pts


def _order_path(pixels: set[Coord]) -> list[Coord]:
    degree = {p: [q for q in _neighbors8(p) if q in pixels] for p in pixels}
    ends = sorted(
        (p for p, nb in degree.items() if len(nb) == 1), key=lambda c: (c[1], c[0])
    )
    start = ends[0] if ends else min(pixels, key=lambda c: (c[1], c[0]))
    path = [start]
    visited = {start}
    while len(path) < len(pixels):
        nxt = [q for q in degree[path[-1]] if q not in visited]
        if not nxt:
            raise ValueError("pixels do not form a single path")
        nxt.sort(key=lambda c: (c[1], c[0]))
        path.append(nxt[0])
        visited.add(nxt[0])
    return path


def _check_finite(samples: list[tuple[float, float]]) -> None:
    for x, y in samples:
        if not (math.isfinite(x) and math.isfinite(y)):
            raise ValueError(f"sampler produced non-finite point ({x}, {y})")
