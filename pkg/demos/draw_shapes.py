"""Walk the shape catalog: build each entry at its default physical size
and print it as ascii art next to its dimensions."""

from pinart import GridSpec, PinGrid, build, catalog_list, export_ascii, extent_mm

for entry in catalog_list():
    w, h = entry.default_bbox_px
    pixels = set()
    for render in build(entry.name):
        pixels.update(render.pixels())
    grid = PinGrid(GridSpec(w, h), frozenset(pixels))
    mm_w, mm_h = extent_mm(w), extent_mm(h)
    print(f"{entry.name}  {w}x{h} px  ({mm_w:g} x {mm_h:g} mm)")
    print(export_ascii(grid))
