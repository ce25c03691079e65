"""Guideline conformance checks for rendered shapes.

Rules G1..G6 encode the pixel-art constraints the scan converters follow
by construction; the linter verifies them on any render, constructed or
hand-made. STRUCTURE covers defects the G rules cannot express (broken,
branching, or mis-terminated strokes). ADVISORY entries never fail a
report.

Checks work on pixel sets plus the render's declared intent (vertices,
edges, caps), so a mutated or hand-drawn render is checkable even when
its strokes are not clean paths.
"""

from __future__ import annotations

from dataclasses import dataclass

from .grid import Coord, PinGrid
from .scanconv import ShapeRender, Stroke, _is_removable, _neighbors8

RULE_ORDER = ("STRUCTURE", "G1", "G2", "G3", "G4", "G5", "G6", "ADVISORY")
FAILING_RULES = frozenset(RULE_ORDER[:-1])


@dataclass(frozen=True)
class Violation:
    rule: str
    at: tuple[Coord, ...]
    message: str
    item_index: int | None = None

    def __post_init__(self) -> None:
        if self.rule not in RULE_ORDER:
            raise ValueError(f"unknown rule {self.rule!r}")


@dataclass(frozen=True)
class LintReport:
    violations: tuple[Violation, ...]

    @property
    def passed(self) -> bool:
        return not any(v.rule in FAILING_RULES for v in self.violations)

    def by_rule(self, rule: str) -> list[Violation]:
        return [v for v in self.violations if v.rule == rule]


def _sort_key(v: Violation):
    first = min(v.at) if v.at else (-1, -1)
    return (RULE_ORDER.index(v.rule), first[1], first[0])


def _sorted_report(violations: list[Violation]) -> LintReport:
    return LintReport(tuple(sorted(violations, key=_sort_key)))


def _orth_neighbors(p: Coord, pixels) -> tuple[bool, bool]:
    x, y = p
    has_h = (x + 1, y) in pixels or (x - 1, y) in pixels
    has_v = (x, y + 1) in pixels or (x, y - 1) in pixels
    return has_h, has_v


def order_pixels(pixels: set[Coord], closed: bool) -> list[Coord] | None:
    """Order a pixel set into a simple path or cycle, or None if the set
    is not a single-width connected figure."""
    if not pixels:
        return None
    if len(pixels) == 1:
        return [] if closed else list(pixels)
    degree = {p: [q for q in _neighbors8(p) if q in pixels] for p in pixels}
    ones = [p for p, nb in degree.items() if len(nb) == 1]
    if any(len(nb) > 2 or not nb for nb in degree.values()):
        return None
    if closed:
        if ones:
            return None
        start = min(pixels, key=lambda c: (c[1], c[0]))
        prev, cur = start, min(degree[start], key=lambda c: (c[1], -c[0]))
    else:
        if len(ones) != 2:
            return None
        start = min(ones, key=lambda c: (c[1], c[0]))
        prev, cur = start, degree[start][0]
    path = [prev, cur]
    while True:
        nxt = [q for q in degree[cur] if q != prev]
        if closed and nxt and nxt[0] == start:
            break
        if not closed and not nxt:
            break
        if len(nxt) != 1:
            return None
        prev, cur = cur, nxt[0]
        path.append(cur)
    return path if len(path) == len(pixels) else None


# --- structural checks --------------------------------------------------

def check_structure(render: ShapeRender) -> list[Violation]:
    out: list[Violation] = []
    # raw pixel art may contain junctions and scattered dots; the path
    # discipline only binds strokes a constructor produced
    if render.kind != "pixels":
        for idx, stroke in enumerate(render.strokes):
            px = set(stroke.points)
            if order_pixels(px, stroke.closed) is None:
                kind = "closed loop" if stroke.closed else "path"
                out.append(
                    Violation(
                        "STRUCTURE",
                        tuple(sorted(px, key=lambda c: (c[1], c[0]))[:8]),
                        f"stroke {idx} pixels do not form a single-width {kind}",
                    )
                )
    for cap, sidx in render.caps:
        px = set(render.strokes[sidx].points)
        if cap not in px:
            out.append(
                Violation(
                    "STRUCTURE", (cap,), f"stroke {sidx} does not reach its end {cap}"
                )
            )
            continue
        nb = sum(1 for q in _neighbors8(cap) if q in px)
        if len(px) > 1 and nb != 1:
            out.append(
                Violation(
                    "STRUCTURE", (cap,), f"spur at stroke {sidx} end {cap}"
                )
            )
    # a stroke realizing a declared edge must span exactly that edge: a
    # walkable path whose loose ends wander off the corners is a defect
    # the projection test cannot see
    for u, v, sidx in render.edges:
        if sidx is None or u == v:
            continue
        stroke = render.strokes[sidx]
        if stroke.closed or len(stroke.points) < 2:
            continue
        px = set(stroke.points)
        ordered = order_pixels(px, closed=False)
        if ordered is None:
            continue  # already reported above
        ends = {ordered[0], ordered[-1]}
        if ends != {u, v}:
            stray = tuple(sorted(ends - {u, v}))
            out.append(
                Violation(
                    "STRUCTURE",
                    stray or (u,),
                    f"stroke {sidx} ends at {stray} instead of its corners "
                    f"{u} and {v}",
                )
            )
    return out


# --- G1: single pixel wide ----------------------------------------------

def check_g1(render: ShapeRender) -> list[Violation]:
    pixels = render.stroke_pixels()
    vertices = set(render.vertices)
    out: list[Violation] = []
    for x, y in sorted(pixels, key=lambda c: (c[1], c[0])):
        block = ((x, y), (x + 1, y), (x, y + 1), (x + 1, y + 1))
        if all(p in pixels for p in block):
            out.append(Violation("G1", block, "2x2 block of actuated pixels"))
    for p in sorted(pixels, key=lambda c: (c[1], c[0])):
        if p in vertices:
            continue
        if _is_removable(p, pixels):
            out.append(
                Violation("G1", (p,), "removable extra pixel (outline locally double)")
            )
    return out


def lint_grid(grid: PinGrid) -> LintReport:
    """Bare-grid lint: only the purely local single-width rule can be
    checked without knowing which pixels are intended corners."""
    pixels = frozenset(grid.actuated)
    fake = ShapeRender(kind="pixels", strokes=(Stroke(tuple(pixels)),)) if pixels else None
    if fake is None:
        return LintReport(())
    return _sorted_report(check_g1(fake))


# --- G2: only diagonal connections between runs --------------------------

def check_g2(render: ShapeRender) -> list[Violation]:
    vertices = set(render.vertices)
    out: list[Violation] = []
    for stroke in render.strokes:
        px = stroke.pixel_set()
        for p in sorted(px, key=lambda c: (c[1], c[0])):
            if p in vertices:
                continue
            has_h, has_v = _orth_neighbors(p, px)
            if has_h and has_v:
                out.append(
                    Violation(
                        "G2",
                        (p,),
                        "horizontal and vertical segments join orthogonally "
                        "(undeclared corner)",
                    )
                )
    return out


# --- run extraction helpers ----------------------------------------------

def _groups_by(points, minor) -> list[list[Coord]]:
    groups: list[list[Coord]] = []
    cur = None
    for p in points:
        m = minor(p)
        if cur is None or m != cur:
            groups.append([p])
            cur = m
        else:
            groups[-1].append(p)
    return groups


def _stroke_runs(stroke: Stroke) -> list[list[Coord]]:
    xs = [p[0] for p in stroke.points]
    ys = [p[1] for p in stroke.points]
    horizontal = (max(xs) - min(xs)) >= (max(ys) - min(ys))
    minor = (lambda p: p[1]) if horizontal else (lambda p: p[0])
    return _groups_by(stroke.points, minor)


# --- G3: equal segments in straight lines --------------------------------

def check_g3(render: ShapeRender) -> list[Violation]:
    out: list[Violation] = []
    for idx, stroke in enumerate(render.strokes):
        if render.curved[idx] or stroke.closed:
            continue
        if len(stroke.points) < 2 or not stroke.is_path():
            continue
        runs = _stroke_runs(stroke)
        lengths = [len(r) for r in runs]
        if max(lengths) - min(lengths) > 1:
            longest = max(runs, key=len)
            shortest = min(runs, key=len)
            out.append(
                Violation(
                    "G3",
                    tuple(shortest + longest),
                    f"run lengths uneven: {len(longest)} px against "
                    f"{len(shortest)} px (difference must be at most 1)",
                )
            )
    return out


# --- G4: proportional segments in curves ----------------------------------

def _dip_violations(groups: list[list[Coord]]) -> list[Violation]:
    out = []
    for i in range(1, len(groups) - 1):
        a, b, c = len(groups[i - 1]), len(groups[i]), len(groups[i + 1])
        if a > b < c:
            out.append(
                Violation(
                    "G4",
                    tuple(groups[i]),
                    f"run of {b} px dips between runs of {a} and {c} px (blip)",
                )
            )
    return out


def _conic_segments(points: tuple[Coord, ...]):
    """Split an ordered conic loop (starting at the top run's left end,
    clockwise) into apex runs and the four connecting arcs."""
    xs = [p[0] for p in points]
    ys = [p[1] for p in points]
    xmin, xmax, ymin, ymax = min(xs), max(xs), min(ys), max(ys)
    n = len(points)
    i = 0

    def take(pred):
        nonlocal i
        seg = []
        while i < n and pred(points[i]):
            seg.append(points[i])
            i += 1
        return seg

    top = take(lambda p: p[1] == ymin)
    arc_tr = take(lambda p: p[0] != xmax)
    right = take(lambda p: p[0] == xmax)
    arc_br = take(lambda p: p[1] != ymax)
    bottom = take(lambda p: p[1] == ymax)
    arc_bl = take(lambda p: p[0] != xmin)
    left = take(lambda p: p[0] == xmin)
    arc_tl = points[i:]
    return top, arc_tr, right, arc_br, bottom, arc_bl, left, arc_tl


def check_g4(render: ShapeRender) -> list[Violation]:
    out: list[Violation] = []
    for idx, stroke in enumerate(render.strokes):
        if not render.curved[idx] or not stroke.is_path():
            continue
        if stroke.closed and render.kind == "conic":
            out.extend(_conic_g4(stroke))
        else:
            out.extend(_dip_violations(_groups_by(stroke.points, lambda p: p[1])))
            out.extend(_dip_violations(_groups_by(stroke.points, lambda p: p[0])))
    return out


def _conic_g4(stroke: Stroke) -> list[Violation]:
    segs = _conic_segments(stroke.points)
    top, arc_tr, right, arc_br, bottom, arc_bl, left, arc_tl = segs
    pixel_count = sum(len(s) for s in segs)
    if pixel_count != len(stroke.points):
        return []  # malformed loop; structure/G5 report it
    out: list[Violation] = []
    # Integer rounding wiggles run lengths by one even on an ideal ellipse,
    # so the mechanized form of the rule is blip detection: within each
    # family of runs along an arc, a run strictly shorter than both of its
    # neighbors is a dip-and-rise the finger reads as a notch. Apex runs
    # are excluded (G5 owns them).
    for arc in (arc_tr, arc_br, arc_bl, arc_tl):
        walk = list(arc)
        out.extend(_dip_violations(_groups_by(walk, lambda p: p[1])))
        out.extend(_dip_violations(_groups_by(walk, lambda p: p[0])))
    return out


# --- G5: straight, equal apex runs on closed curves -----------------------

def check_g5(render: ShapeRender) -> list[Violation]:
    if render.kind != "conic":
        return []
    out: list[Violation] = []
    for stroke in render.strokes:
        if not stroke.closed:
            continue
        px = stroke.pixel_set()
        xs = [p[0] for p in px]
        ys = [p[1] for p in px]
        xmin, xmax, ymin, ymax = min(xs), max(xs), min(ys), max(ys)
        apexes = {
            "top": sorted(p for p in px if p[1] == ymin),
            "bottom": sorted(p for p in px if p[1] == ymax),
            "left": sorted((p for p in px if p[0] == xmin), key=lambda p: p[1]),
            "right": sorted((p for p in px if p[0] == xmax), key=lambda p: p[1]),
        }
        straight = True
        for name, run in apexes.items():
            axis = 0 if name in ("top", "bottom") else 1
            vals = [p[axis] for p in run]
            if vals != list(range(vals[0], vals[0] + len(vals))):
                straight = False
                out.append(
                    Violation("G5", tuple(run), f"{name} apex run is not straight")
                )
        if not straight:
            continue
        if len(apexes["top"]) != len(apexes["bottom"]):
            out.append(
                Violation(
                    "G5",
                    tuple(apexes["top"] + apexes["bottom"]),
                    f"apex runs differ: top {len(apexes['top'])} px, "
                    f"bottom {len(apexes['bottom'])} px",
                )
            )
        if len(apexes["left"]) != len(apexes["right"]):
            out.append(
                Violation(
                    "G5",
                    tuple(apexes["left"] + apexes["right"]),
                    f"apex runs differ: left {len(apexes['left'])} px, "
                    f"right {len(apexes['right'])} px",
                )
            )
        if (xmax - xmin) == (ymax - ymin) and len(apexes["top"]) != len(apexes["left"]):
            out.append(
                Violation(
                    "G5",
                    tuple(apexes["top"] + apexes["left"]),
                    "circle apex runs differ between sides and top/bottom",
                )
            )
    return out


# --- G6: sharp corner pixels ----------------------------------------------

def check_g6(render: ShapeRender) -> list[Violation]:
    if not render.vertices:
        return []
    union = render.stroke_pixels()
    vertices = list(dict.fromkeys(render.vertices))
    out: list[Violation] = []
    eroded: set[Coord] = set()
    for v in vertices:
        if v not in union:
            eroded.add(v)
            out.append(
                Violation("G6", (v,), f"eroded corner: vertex pixel {v} not actuated")
            )
    # overshoot: pixels projecting strictly past a vertex along its edge
    overshoot: dict[Coord, set[Coord]] = {}
    for u, v, sidx in render.edges:
        pool = (
            render.strokes[sidx].pixel_set() if sidx is not None else union
        )
        ux, uy = u
        vx, vy = v
        dx, dy = vx - ux, vy - uy
        for px, py in pool:
            if (px - vx) * dx + (py - vy) * dy > 0 and v in render.vertices:
                overshoot.setdefault(v, set()).add((px, py))
            if (px - ux) * -dx + (py - uy) * -dy > 0 and u in render.vertices:
                overshoot.setdefault(u, set()).add((px, py))
    for v in vertices:
        if v in overshoot:
            pts = tuple(sorted(overshoot[v], key=lambda c: (c[1], c[0])))
            out.append(
                Violation(
                    "G6", pts, f"extended corner: stroke continues past vertex {v}"
                )
            )
    # each declared incident edge must actually contain its corner pixel
    for u, v, sidx in render.edges:
        if sidx is None:
            continue
        spx = render.strokes[sidx].pixel_set()
        for corner in (u, v):
            if corner in render.vertices and corner not in eroded and corner not in spx:
                out.append(
                    Violation(
                        "G6",
                        (corner,),
                        f"corner pixel {corner} missing from its incident edge",
                    )
                )
    return out


# --- advisories ------------------------------------------------------------

def check_advisories(render: ShapeRender) -> list[Violation]:
    out = []
    for at, size in render.markers:
        if size > 1:
            out.append(
                Violation(
                    "ADVISORY",
                    (at,),
                    f"marker at {at} is {size}x{size} px; a single dot reads "
                    "more clearly as a point",
                )
            )
    return out


def lint_render(render: ShapeRender) -> LintReport:
    """All applicable checks in rule order; deterministic output."""
    violations = (
        check_structure(render)
        + check_g1(render)
        + check_g2(render)
        + check_g3(render)
        + check_g4(render)
        + check_g5(render)
        + check_g6(render)
        + check_advisories(render)
    )
    if render.item_index is not None:
        violations = [
            Violation(v.rule, v.at, v.message, render.item_index) for v in violations
        ]
    return _sorted_report(violations)


def lint_renders(renders) -> LintReport:
    violations: list[Violation] = []
    for render in renders:
        violations.extend(lint_render(render).violations)
    return LintReport(tuple(violations))
