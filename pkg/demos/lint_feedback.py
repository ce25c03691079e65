"""What the linter catches on hand-drawn shapes.

A triangle drawn from raw pixels with its base extended one pixel past
each bottom corner feels like an error under the finger; eroding the
corner pixels makes the shape read as distorted. Both show up as G6
violations with exact locations.
"""

from pinart import (
    GridSpec,
    PixelsItem,
    Scene,
    build,
    lint_scene,
)

triangle = build("triangle")[0].translate(8, 2)
outline = triangle.stroke_pixels()
corners = triangle.vertices
base_y = max(y for _, y in corners)

variants = {
    "clean": outline,
    "extended base": outline | {(7, base_y), (19, base_y)},
    "eroded corners": outline - {(8, base_y), (18, base_y)},
}

for label, pixels in variants.items():
    scene = Scene(
        GridSpec(27, 27),
        (PixelsItem(coords=tuple(sorted(pixels)), vertices=corners),),
    )
    report = lint_scene(scene)
    verdict = "PASS" if report.passed else "FAIL"
    print(f"{label}: {verdict}")
    for v in report.violations:
        print(f"  {v.rule} at {v.at[0]}: {v.message}")
