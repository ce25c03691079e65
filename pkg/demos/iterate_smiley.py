"""The iteration loop on a smiley face.

The first draft gives the face 2x2 eyes; the linter advises that single
dots read better as points. We erase the eye regions, place 1-px markers,
and diff the grids -- the edit removes exactly six pixels and the result
matches the revised catalog variant bit for bit.
"""

from pinart import (
    CatalogItem,
    EraseItem,
    GridSpec,
    MarkerItem,
    Scene,
    diff_grids,
    export_ascii,
    lint_scene,
    render_scene,
)

GRID = GridSpec(27, 27)

draft = Scene(GRID, (CatalogItem("smiley_a", (6, 6, 15, 15)),))
grid_a, _ = render_scene(draft)
print("draft:")
print(export_ascii(grid_a))

for violation in lint_scene(draft).violations:
    print(f"feedback: {violation.rule}: {violation.message}")

revised = Scene(
    GRID,
    draft.items
    + (
        EraseItem((10, 11, 2, 2)),
        EraseItem((15, 11, 2, 2)),
        MarkerItem((10, 11), 1),
        MarkerItem((15, 11), 1),
    ),
)
grid_b, _ = render_scene(revised)
print("\nrevised:")
print(export_ascii(grid_b))

diff = diff_grids(grid_a, grid_b)
print(f"diff: {len(diff.added)} added, {len(diff.removed)} removed")
for p in sorted(diff.removed, key=lambda c: (c[1], c[0])):
    print(f"  - {p}")

reference, _ = render_scene(Scene(GRID, (CatalogItem("smiley_b", (6, 6, 15, 15)),)))
print("matches the single-dot variant:", grid_b == reference)
