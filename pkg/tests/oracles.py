"""Independent reference implementations used as test oracles.

These deliberately avoid the code paths they check: the line oracle rounds
an exact rational per major column instead of marching, and the ellipse
oracle measures distances against a densely sampled ideal curve.
"""

from __future__ import annotations

import math


def nearest_line(p0, p1):
    """Per major-axis coordinate, the minor coordinate closest to the ideal
    segment; an exact tie takes the smaller minor. Pure integer math."""
    x0, y0 = p0
    x1, y1 = p1
    dx, dy = x1 - x0, y1 - y0
    pts = []
    if abs(dx) >= abs(dy):
        steps = abs(dx)
        sx = 1 if dx >= 0 else -1
        for i in range(steps + 1):
            if steps == 0:
                y = y0
            else:
                # ideal y = y0 + i*dy/steps, rounded half-down = ceil((2P-Q)/2Q)
                p = y0 * steps + i * dy
                q = steps
                y = -((-(2 * p - q)) // (2 * q))
            pts.append((x0 + i * sx, y))
    else:
        steps = abs(dy)
        sy = 1 if dy >= 0 else -1
        for i in range(steps + 1):
            p = x0 * steps + i * dx
            q = steps
            x = -((-(2 * p - q)) // (2 * q))
            pts.append((x, y0 + i * sy))
    return pts


def slice_boundaries(n_px: int, n_runs: int) -> list[int]:
    """Reference boundary sequence f(i) = floor((2*i*n_px + n_runs) / (2*n_runs))."""
    return [(2 * i * n_px + n_runs) // (2 * n_runs) for i in range(n_runs + 1)]


def ellipse_max_deviation(pixels, width_px: int, height_px: int) -> float:
    """Largest distance from any pixel center to the ideal box-inscribed
    ellipse, measured against a dense parametric sampling (an upper bound
    on the true distance, so a pass here is a true pass)."""
    import numpy as np

    cx, cy = (width_px - 1) / 2.0, (height_px - 1) / 2.0
    a, b = width_px / 2.0, height_px / 2.0
    t = np.linspace(0.0, 2.0 * math.pi, 4096, endpoint=False)
    curve = np.stack([cx + a * np.cos(t), cy + b * np.sin(t)], axis=1)
    pts = np.array(sorted(pixels), dtype=float)
    d2 = ((pts[:, None, :] - curve[None, :, :]) ** 2).sum(axis=2)
    return float(np.sqrt(d2.min(axis=1)).max())


BRAILLE_CELL = {
    # (col, row) -> bit, per the braille patterns block layout
    (0, 0): 0x01,
    (0, 1): 0x02,
    (0, 2): 0x04,
    (1, 0): 0x08,
    (1, 1): 0x10,
    (1, 2): 0x20,
    (0, 3): 0x40,
    (1, 3): 0x80,
}


def braille_reference(width: int, height: int, actuated) -> str:
    """Header plus rows of braille characters, built cell by cell."""
    lines = [f"{width} {height}"]
    for cy in range(0, height, 4):
        row = []
        for cx in range(0, width, 2):
            bits = 0
            for (dx, dy), bit in BRAILLE_CELL.items():
                if (cx + dx, cy + dy) in actuated:
                    bits |= bit
            row.append(chr(0x2800 + bits))
        lines.append("".join(row))
    return "\n".join(lines) + "\n"
