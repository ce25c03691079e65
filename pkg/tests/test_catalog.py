from pathlib import Path

import pytest

from pinart.catalog import CatalogEntry, UnknownShapeError, build, catalog_list
from pinart.codec import export_ascii
from pinart.grid import GridSpec, PinGrid, diff_grids, extent_mm
from pinart.lint import lint_render
from pinart.scanconv import TooSmallError

GOLDENS = Path(__file__).parent / "goldens" / "catalog"

# physical sizes of the study set, in mm, at the 2.5 mm pitch
EXPECTED_MM = {
    "square": (25.0, 25.0),
    "rectangle": (50.0, 25.0),
    "circle": (35.0, 35.0),
    "ellipse": (35.0, 47.5),
    "triangle": (27.5, 55.0),
    "star": (62.5, 47.5),
    "pentagon": (42.5, 42.5),
    "heart": (37.5, 37.5),
    "sine_curve": (67.5, 67.5),
    "smiley_a": (37.5, 37.5),
    "smiley_b": (37.5, 37.5),
    "flower_a": (57.5, 50.0),
    "flower_b": (57.5, 50.0),
    "cuboid": (40.0, 32.5),
    "glyphs": (50.0, 65.0),
}


def union_grid(name: str, bbox=None) -> PinGrid:
    renders = build(name, bbox)
    pixels = set()
    for r in renders:
        pixels.update(r.pixels())
    w = max(p[0] for p in pixels) + 1
    h = max(p[1] for p in pixels) + 1
    return PinGrid(GridSpec(w, h), frozenset(pixels))


def test_catalog_listing_is_complete():
    names = [e.name for e in catalog_list()]
    assert names == list(EXPECTED_MM)


@pytest.mark.parametrize("entry", catalog_list(), ids=lambda e: e.name)
def test_default_boxes_match_physical_sizes(entry: CatalogEntry):
    w, h = entry.default_bbox_px
    assert (extent_mm(w), extent_mm(h)) == EXPECTED_MM[entry.name]


@pytest.mark.parametrize("entry", catalog_list(), ids=lambda e: e.name)
def test_default_render_matches_golden(entry: CatalogEntry):
    golden = (GOLDENS / f"{entry.name}.txt").read_text(encoding="utf-8")
    assert export_ascii(union_grid(entry.name)) == golden


@pytest.mark.parametrize("entry", catalog_list(), ids=lambda e: e.name)
def test_default_render_fills_its_box(entry: CatalogEntry):
    grid = union_grid(entry.name)
    assert (grid.spec.width_px, grid.spec.height_px) == entry.default_bbox_px
    xs = [p[0] for p in grid.actuated]
    ys = [p[1] for p in grid.actuated]
    assert min(xs) == 0 and min(ys) == 0


@pytest.mark.parametrize("entry", catalog_list(), ids=lambda e: e.name)
def test_default_render_lints_clean(entry: CatalogEntry):
    failing = []
    advisories = []
    for render in build(entry.name):
        for v in lint_render(render).violations:
            (advisories if v.rule == "ADVISORY" else failing).append(v)
    assert failing == []
    if entry.name == "smiley_a":
        assert len(advisories) == 2
    else:
        assert advisories == []


def test_square_is_36_pixels_with_4_corners():
    renders = build("square")
    assert len(renders) == 1
    assert len(renders[0].stroke_pixels()) == 36
    assert len(renders[0].vertices) == 4


def test_heart_structure():
    (heart,) = build("heart")
    assert len(heart.strokes) == 4
    assert list(heart.curved) == [True, True, False, False]
    assert len(heart.vertices) == 2
    cusp, bottom = heart.vertices
    assert cusp == (7, 1) and bottom == (7, 14)
    assert lint_render(heart).passed


def test_smiley_variants_differ_by_six_eye_pixels():
    a = union_grid("smiley_a")
    b = union_grid("smiley_b")
    diff = diff_grids(a, b)
    assert len(diff.removed) == 6 and not diff.added


def test_build_unknown_name():
    with pytest.raises(UnknownShapeError):
        build("blob")


def test_build_too_small():
    with pytest.raises(TooSmallError):
        build("circle", (2, 2))
    with pytest.raises(TooSmallError):
        build("heart", (5, 5))


@pytest.mark.parametrize(
    "name,bbox",
    [
        ("square", (6, 8)),
        ("circle", (9, 9)),
        ("ellipse", (11, 17)),
        ("triangle", (9, 16)),
        ("heart", (13, 13)),
        ("star", (25, 19)),
        ("cuboid", (20, 16)),
    ],
)
def test_alternate_boxes_stay_clean(name, bbox):
    for render in build(name, bbox):
        report = lint_render(render)
        assert not [v for v in report.violations if v.rule != "ADVISORY"], (
            name,
            bbox,
            report.violations,
        )


def test_cuboid_shows_three_faces():
    renders = build("cuboid")
    assert len(renders) == 3


def test_glyph_row_layout():
    renders = build("glyphs")
    kinds = [r.kind for r in renders]
    assert kinds == ["glyph_i", "glyph_t", "glyph_u", "glyph_c", "glyph_l"]
