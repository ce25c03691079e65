from pathlib import Path

import pytest

from pinart.codec import export_ascii, parse_scene
from pinart.grid import GridSpec, diff_grids
from pinart.scene import (
    CatalogItem,
    ConicItem,
    EraseItem,
    LineItem,
    MarkerItem,
    PixelsItem,
    PolygonItem,
    Scene,
    SceneValidationError,
    lint_scene,
    render_scene,
    validate_scene,
)

GOLDENS = Path(__file__).parent / "goldens"
GRID = GridSpec(27, 27)


def scene_of(*items):
    return Scene(GRID, tuple(items))


def test_single_square_renders_36_pixels():
    grid, renders = render_scene(scene_of(CatalogItem("square", (5, 5, 10, 10))))
    assert grid.actuated_count == 36
    assert len(renders) == 1 and renders[0].item_index == 0


def test_empty_scene_renders_empty_grid():
    grid, renders = render_scene(scene_of())
    assert grid.actuated_count == 0 and renders == []


def test_iterated_smiley_equals_variant_b():
    iterated = parse_scene(
        (GOLDENS / "scenes" / "smiley_iterated.scene").read_text(encoding="utf-8")
    )
    variant_b = parse_scene(
        (GOLDENS / "scenes" / "smiley_b.scene").read_text(encoding="utf-8")
    )
    grid_iter, _ = render_scene(iterated)
    grid_b, _ = render_scene(variant_b)
    assert grid_iter == grid_b


def test_order_sensitivity_of_erase():
    draw = CatalogItem("square", (5, 5, 10, 10))
    erase = EraseItem((5, 5, 10, 10))
    erased_after, _ = render_scene(scene_of(draw, erase))
    erased_before, _ = render_scene(scene_of(erase, draw))
    assert erased_after.actuated_count == 0
    assert erased_before.actuated_count == 36


def test_disjoint_items_pixel_counts_add_up():
    items = (
        CatalogItem("square", (1, 1, 6, 6)),
        LineItem((10, 1), (20, 4)),
        MarkerItem((24, 24), 1),
    )
    grid, renders = render_scene(scene_of(*items))
    assert grid.actuated_count == sum(len(r.pixels()) for r in renders)


def test_noop_item_keeps_grid_identical():
    base = scene_of(CatalogItem("square", (5, 5, 10, 10)))
    extended = scene_of(
        CatalogItem("square", (5, 5, 10, 10)), EraseItem((0, 0, 2, 2))
    )
    grid_a, _ = render_scene(base)
    grid_b, _ = render_scene(extended)
    assert diff_grids(grid_a, grid_b).empty


def test_validate_out_of_bounds():
    issues = validate_scene(scene_of(CatalogItem("circle", (20, 20, 14, 14))))
    assert len(issues) == 1 and "outside" in issues[0].message


def test_validate_unknown_catalog_name():
    issues = validate_scene(scene_of(CatalogItem("blob")))
    assert len(issues) == 1 and "unknown catalog shape" in issues[0].message


def test_validate_too_small_conic():
    issues = validate_scene(scene_of(ConicItem((0, 0, 2, 2))))
    assert len(issues) == 1 and "3x3" in issues[0].message


def test_validate_clean_scene():
    issues = validate_scene(
        scene_of(CatalogItem("smiley_a", (6, 6, 15, 15)), MarkerItem((0, 0), 1))
    )
    assert issues == []


def test_render_raises_on_invalid_scene():
    with pytest.raises(SceneValidationError):
        render_scene(scene_of(CatalogItem("circle", (20, 20, 14, 14))))


def test_clip_renders_partial_shape():
    grid, _ = render_scene(scene_of(CatalogItem("circle", (20, 20, 14, 14))), clip=True)
    assert 0 < grid.actuated_count < 44
    assert all(GRID.contains(p) for p in grid.actuated)


def test_clip_does_not_mask_unknown_names():
    with pytest.raises(SceneValidationError):
        render_scene(scene_of(CatalogItem("blob")), clip=True)


def test_lint_scene_tags_item_indices():
    report = lint_scene(
        scene_of(
            CatalogItem("square", (1, 1, 10, 10)),
            PixelsItem(coords=((20, 20), (21, 20), (20, 21), (21, 21))),
        )
    )
    assert not report.passed
    assert {v.item_index for v in report.violations} == {1}


def test_lint_scene_extended_triangle_fixture():
    scene = parse_scene(
        (GOLDENS / "scenes" / "fig_extended_triangle.scene").read_text(encoding="utf-8")
    )
    report = lint_scene(scene)
    extended = [v for v in report.violations if "extended corner" in v.message]
    assert len(extended) == 2
    assert all(v.item_index == 0 for v in extended)


def test_lint_scene_catalog_defaults_pass():
    scene = parse_scene(
        (GOLDENS / "scenes" / "catalog_suite.scene").read_text(encoding="utf-8")
    )
    assert lint_scene(scene).passed


def test_polygon_and_pixels_items_render():
    grid, renders = render_scene(
        scene_of(
            PolygonItem(((0, 0), (6, 0), (6, 6), (0, 6))),
            PixelsItem(coords=((10, 10), (12, 10))),
        )
    )
    assert len(renders) == 2
    assert (0, 0) in grid.actuated and (12, 10) in grid.actuated


def test_scene_rendering_is_deterministic():
    scene = scene_of(
        CatalogItem("flower_b", (2, 3, 23, 20)), LineItem((0, 0), (26, 26))
    )
    assert render_scene(scene)[0] == render_scene(scene)[0]
    assert export_ascii(render_scene(scene)[0]) == export_ascii(render_scene(scene)[0])
