"""Pixel-art rasterization, linting, and iteration toolkit for binary
pin-array tactile displays."""

from .grid import (
    BoundsError,
    Coord,
    GridDiff,
    GridSpec,
    PinGrid,
    SpecError,
    SpecMismatchError,
    apply_diff,
    diff_grids,
    edit_pixel,
    erase_rect,
    extent_mm,
    make_grid,
)
from .scanconv import (
    Marker,
    RunDecomposition,
    ShapeRender,
    Stroke,
    TooSmallError,
    conic,
    conic_arc,
    line,
    midpoint_line,
    parametric_stroke,
    pixel_art_line,
    polygon,
    run_decompose,
    run_slice,
    thin,
)
from .lint import (
    LintReport,
    Violation,
    check_g1,
    check_g2,
    check_g3,
    check_g4,
    check_g5,
    check_g6,
    lint_grid,
    lint_render,
    lint_renders,
)
from .catalog import CatalogEntry, UnknownShapeError, build, catalog_list
from .scene import (
    CatalogItem,
    ConicItem,
    EraseItem,
    Item,
    LineItem,
    MarkerItem,
    PixelsItem,
    PolygonItem,
    Scene,
    SceneIssue,
    SceneValidationError,
    lint_scene,
    render_scene,
    validate_scene,
)
from .codec import (
    ParseError,
    canonical_json,
    emit_scene,
    export_ascii,
    export_braille,
    export_pbm,
    import_braille,
    parse_scene,
)

__version__ = "0.1.0"
