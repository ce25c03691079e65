"""Binary pin-grid data model.

Coordinate convention used across the package: ``x`` is the column
(0 = leftmost, increasing right), ``y`` is the row (0 = topmost,
increasing down). Grids are immutable values; every edit returns a new
grid, which keeps history/undo and concurrent use trivial.

Physical sizes count pixel cells: a span of ``n`` pixels is
``n * pitch_mm`` wide, so a 27-pixel row at the default 2.5 mm pitch is
67.5 mm.
"""

from __future__ import annotations

from dataclasses import dataclass, field

Coord = tuple[int, int]

DEFAULT_PITCH_MM = 2.5
DEFAULT_DOT_WIDTH_MM = 1.2
DEFAULT_DOT_HEIGHT_MM = 0.4


class SpecError(ValueError):
    """Invalid grid specification."""


class BoundsError(ValueError):
    """Coordinate outside the grid."""


class SpecMismatchError(ValueError):
    """Operation mixing grids with different specifications."""


def extent_mm(n_px: int, pitch_mm: float = DEFAULT_PITCH_MM) -> float:
    """Physical extent of ``n_px`` pixel cells at the given pitch."""
    if n_px < 0:
        raise ValueError(f"pixel count must be >= 0, got {n_px}")
    return n_px * pitch_mm


@dataclass(frozen=True)
class GridSpec:
    """Dimensions and physical layout of a pin array."""

    width_px: int
    height_px: int
    pitch_mm: float = DEFAULT_PITCH_MM
    dot_width_mm: float = DEFAULT_DOT_WIDTH_MM
    dot_height_mm: float = DEFAULT_DOT_HEIGHT_MM

    def __post_init__(self) -> None:
        if self.width_px < 1 or self.height_px < 1:
            raise SpecError(
                f"grid must be at least 1x1, got {self.width_px}x{self.height_px}"
            )
        if not (self.pitch_mm > self.dot_width_mm > 0):
            raise SpecError(
                f"need pitch_mm > dot_width_mm > 0, got pitch={self.pitch_mm} "
                f"dot_width={self.dot_width_mm}"
            )
        if self.dot_height_mm <= 0:
            raise SpecError(f"dot_height_mm must be > 0, got {self.dot_height_mm}")

    def contains(self, at: Coord) -> bool:
        x, y = at
        return 0 <= x < self.width_px and 0 <= y < self.height_px

    def extent_mm(self) -> tuple[float, float]:
        return (
            extent_mm(self.width_px, self.pitch_mm),
            extent_mm(self.height_px, self.pitch_mm),
        )


@dataclass(frozen=True)
class PinGrid:
    """Immutable snapshot of pin states: a cell is actuated or flat."""

    spec: GridSpec
    actuated: frozenset[Coord] = field(default_factory=frozenset)

    def __post_init__(self) -> None:
        for at in self.actuated:
            if not self.spec.contains(at):
                raise BoundsError(f"actuated cell {at} outside {self.spec.width_px}x{self.spec.height_px} grid")

    def is_actuated(self, at: Coord) -> bool:
        return at in self.actuated

    @property
    def actuated_count(self) -> int:
        return len(self.actuated)


@dataclass(frozen=True)
class GridDiff:
    """Cells that changed between two grids of identical spec."""

    added: frozenset[Coord]
    removed: frozenset[Coord]

    def __post_init__(self) -> None:
        if self.added & self.removed:
            raise ValueError("a cell cannot be both added and removed")

    @property
    def empty(self) -> bool:
        return not self.added and not self.removed


def make_grid(spec: GridSpec) -> PinGrid:
    """All-flat grid for the given spec."""
    return PinGrid(spec)


def edit_pixel(grid: PinGrid, at: Coord, actuated: bool) -> PinGrid:
    """Set one pin; idempotent. Out-of-grid coordinates are an error."""
    if not grid.spec.contains(at):
        raise BoundsError(
            f"{at} outside {grid.spec.width_px}x{grid.spec.height_px} grid"
        )
    if actuated:
        if at in grid.actuated:
            return grid
        return PinGrid(grid.spec, grid.actuated | {at})
    if at not in grid.actuated:
        return grid
    return PinGrid(grid.spec, grid.actuated - {at})


def erase_rect(grid: PinGrid, top_left: Coord, width: int, height: int) -> PinGrid:
    """Flatten every pin in the rectangle; the rectangle is clipped to the
    grid, so erasing outside the grid is a no-op (erasure is a repair
    gesture and should be forgiving)."""
    if width <= 0 or height <= 0:
        raise ValueError(f"rectangle sides must be positive, got {width}x{height}")
    x0, y0 = top_left
    x1, y1 = x0 + width, y0 + height
    cleared = {
        (x, y)
        for (x, y) in grid.actuated
        if x0 <= x < x1 and y0 <= y < y1
    }
    if not cleared:
        return grid
    return PinGrid(grid.spec, grid.actuated - cleared)


def draw_pixels(grid: PinGrid, pixels, clip: bool = False) -> PinGrid:
    """Actuate a batch of pixels. With ``clip`` unset, any out-of-grid pixel
    raises; with it set, out-of-grid pixels are dropped."""
    coords = set()
    for at in pixels:
        if grid.spec.contains(at):
            coords.add(at)
        elif not clip:
            raise BoundsError(
                f"{at} outside {grid.spec.width_px}x{grid.spec.height_px} grid"
            )
    if not coords:
        return grid
    return PinGrid(grid.spec, grid.actuated | coords)


def diff_grids(before: PinGrid, after: PinGrid) -> GridDiff:
    """Cells actuated only in ``after`` (added) or only in ``before``
    (removed). Both grids must share a spec."""
    if before.spec != after.spec:
        raise SpecMismatchError(
            f"cannot diff {before.spec.width_px}x{before.spec.height_px} against "
            f"{after.spec.width_px}x{after.spec.height_px} grids"
        )
    return GridDiff(
        added=frozenset(after.actuated - before.actuated),
        removed=frozenset(before.actuated - after.actuated),
    )


def apply_diff(grid: PinGrid, diff: GridDiff) -> PinGrid:
    """Apply removals then additions; inverse of diff_grids round-trips."""
    return PinGrid(grid.spec, (grid.actuated - diff.removed) | diff.added)
