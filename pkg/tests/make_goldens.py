"""Regenerate the golden fixtures under tests/goldens/.

Run manually after an intentional geometry change, then review the diffs
(every ascii golden is meant to be eyeballed before committing):

    python3 tests/make_goldens.py
"""

from __future__ import annotations

import io
import json
import sys
import threading
from http.client import HTTPConnection
from pathlib import Path

from pinart.catalog import build, catalog_list
from pinart.cli import main
from pinart.codec import emit_scene, export_ascii, export_braille, export_pbm, parse_scene
from pinart.grid import GridSpec, PinGrid
from pinart.scene import (
    CatalogItem,
    EraseItem,
    MarkerItem,
    PixelsItem,
    Scene,
)
from pinart.service import make_server

ROOT = Path(__file__).parent / "goldens"


def catalog_grid(name: str) -> PinGrid:
    renders = build(name)
    pixels = set()
    for r in renders:
        pixels.update(r.pixels())
    w = max(p[0] for p in pixels) + 1
    h = max(p[1] for p in pixels) + 1
    return PinGrid(GridSpec(w, h), frozenset(pixels))


def write(path: Path, data) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    if isinstance(data, bytes):
        path.write_bytes(data)
    else:
        path.write_text(data, encoding="utf-8")
    print(f"wrote {path.relative_to(ROOT.parent)}")


def triangle_pixels_at(ox: int, oy: int):
    render = build("triangle")[0]
    moved = render.translate(ox, oy)
    return moved.stroke_pixels(), moved.vertices


def scene_fixtures() -> dict[str, Scene]:
    grid = GridSpec(27, 27)
    smiley_a = Scene(grid, (CatalogItem("smiley_a", (6, 6, 15, 15)),))
    smiley_b = Scene(grid, (CatalogItem("smiley_b", (6, 6, 15, 15)),))
    # the same iteration done by hand: erase each 2x2 eye, redraw single dots
    smiley_iterated = Scene(
        grid,
        (
            CatalogItem("smiley_a", (6, 6, 15, 15)),
            EraseItem((10, 11, 2, 2)),
            EraseItem((15, 11, 2, 2)),
            MarkerItem((10, 11), 1),
            MarkerItem((15, 11), 1),
        ),
    )
    tri_px, tri_verts = triangle_pixels_at(8, 2)
    base_y = 2 + 21
    eroded = Scene(
        grid,
        (
            PixelsItem(
                coords=tuple(sorted(tri_px - {(8, base_y), (18, base_y)})),
                vertices=tri_verts,
            ),
        ),
    )
    extended = Scene(
        grid,
        (
            PixelsItem(
                coords=tuple(sorted(tri_px | {(7, base_y), (19, base_y)})),
                vertices=tri_verts,
            ),
        ),
    )
    suite = Scene(
        GridSpec(27, 27),
        (
            CatalogItem("square", (1, 1, 10, 10)),
            CatalogItem("circle", (12, 1, 14, 14)),
            CatalogItem("triangle", (1, 12, 11, 14)),
            MarkerItem((24, 24), 1),
        ),
    )
    return {
        "smiley_a": smiley_a,
        "smiley_b": smiley_b,
        "smiley_iterated": smiley_iterated,
        "fig_eroded_triangle": eroded,
        "fig_extended_triangle": extended,
        "catalog_suite": suite,
    }


def run_cli(args: list[str]) -> tuple[int, str]:
    out = io.StringIO()
    old = sys.stdout
    sys.stdout = out
    try:
        code = main(args)
    finally:
        sys.stdout = old
    return code, out.getvalue()


def main_gen() -> None:
    for entry in catalog_list():
        write(ROOT / "catalog" / f"{entry.name}.txt", export_ascii(catalog_grid(entry.name)))

    scenes = scene_fixtures()
    for name, scene in scenes.items():
        write(ROOT / "scenes" / f"{name}.scene", emit_scene(scene))

    write(ROOT / "export" / "circle.pbm", export_pbm(catalog_grid("circle")))
    write(ROOT / "export" / "circle.braille", export_braille(catalog_grid("circle")))

    cli_cases = {
        "catalog_list.txt": ["catalog"],
        "catalog_square_ascii.txt": ["catalog", "square", "--format", "ascii"],
        "lint_extended_triangle.txt": [
            "lint", str(ROOT / "scenes" / "fig_extended_triangle.scene")
        ],
        "lint_eroded_triangle.txt": [
            "lint", str(ROOT / "scenes" / "fig_eroded_triangle.scene")
        ],
        "lint_smiley_a.txt": ["lint", str(ROOT / "scenes" / "smiley_a.scene")],
        "diff_smiley.txt": [
            "diff",
            str(ROOT / "scenes" / "smiley_a.scene"),
            str(ROOT / "scenes" / "smiley_b.scene"),
        ],
        "render_smiley_a_ascii.txt": [
            "render", str(ROOT / "scenes" / "smiley_a.scene"), "--format", "ascii"
        ],
    }
    for fname, args in cli_cases.items():
        code, out = run_cli(args)
        write(ROOT / "cli" / fname, out)
        print(f"  ({fname}: exit {code})")

    srv = make_server(0)
    port = srv.server_address[1]
    threading.Thread(target=srv.serve_forever, daemon=True).start()

    def req(method: str, path: str, body=None) -> bytes:
        conn = HTTPConnection("127.0.0.1", port)
        payload = json.dumps(body).encode() if body is not None else None
        conn.request(method, path, payload, {"Content-Type": "application/json"} if payload else {})
        resp = conn.getresponse()
        data = resp.read()
        conn.close()
        return data

    scene_obj = lambda name: json.loads(emit_scene(scenes[name]))
    write(ROOT / "service" / "catalog.json", req("GET", "/api/catalog"))
    write(
        ROOT / "service" / "render_smiley_a.json",
        req("POST", "/api/render", {"scene": scene_obj("smiley_a")}),
    )
    write(
        ROOT / "service" / "diff_smiley.json",
        req(
            "POST",
            "/api/diff",
            {"before": scene_obj("smiley_a"), "after": scene_obj("smiley_b")},
        ),
    )
    srv.shutdown()


if __name__ == "__main__":
    main_gen()
