"""Command-line front end.

Exit codes: 0 success, 1 guideline violations found by ``lint``,
2 parse/validation errors, 3 I/O errors. Output is deterministic so
stdout can be frozen as golden fixtures.
"""

from __future__ import annotations

import argparse
import sys

from .catalog import build, catalog_list
from .codec import (
    ParseError,
    canonical_json,
    export_ascii,
    export_braille,
    export_pbm,
    parse_scene,
    render_payload,
    report_payload,
)
from .grid import GridSpec, PinGrid, diff_grids, extent_mm
from .lint import LintReport
from .scene import Scene, SceneValidationError, lint_scene, render_scene

EXIT_OK = 0
EXIT_VIOLATIONS = 1
EXIT_INVALID = 2
EXIT_IO = 3


def _read_scene(path: str) -> Scene:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise _IOFailure(f"cannot read {path}: {exc.strerror}") from exc
    return parse_scene(text)


class _IOFailure(Exception):
    pass


def _report_text(report: LintReport) -> str:
    lines = []
    for v in report.violations:
        where = f"item {v.item_index} " if v.item_index is not None else ""
        coords = ", ".join(f"({x},{y})" for x, y in v.at[:4])
        if len(v.at) > 4:
            coords += f", +{len(v.at) - 4} more"
        lines.append(f"{where}{v.rule} at {coords}: {v.message}")
    failing = sum(1 for v in report.violations if v.rule != "ADVISORY")
    advisories = len(report.violations) - failing
    verdict = "PASS" if report.passed else "FAIL"
    lines.append(f"{verdict} ({failing} violation(s), {advisories} advisory)")
    return "\n".join(lines) + "\n"


def _emit(text: str, out_path: str | None, stdout) -> None:
    if out_path:
        mode = "wb" if isinstance(text, bytes) else "w"
        try:
            with open(out_path, mode) as fh:
                fh.write(text)
        except OSError as exc:
            raise _IOFailure(f"cannot write {out_path}: {exc.strerror}") from exc
    else:
        if isinstance(text, bytes):
            stdout.buffer.write(text) if hasattr(stdout, "buffer") else stdout.write(
                text.decode("ascii")
            )
        else:
            stdout.write(text)


def _format_grid(grid: PinGrid, fmt: str):
    if fmt == "ascii":
        return export_ascii(grid)
    if fmt == "braille":
        return export_braille(grid)
    if fmt == "pbm":
        return export_pbm(grid)
    raise AssertionError(fmt)


def _cmd_render(args, stdout) -> int:
    scene = _read_scene(args.scene)
    grid, renders = render_scene(scene, clip=args.clip)
    if args.format == "json":
        report = lint_scene(scene, clip=args.clip)
        _emit(canonical_json(render_payload(grid, renders, report)), args.out, stdout)
    else:
        _emit(_format_grid(grid, args.format), args.out, stdout)
    return EXIT_OK


def _cmd_lint(args, stdout) -> int:
    scene = _read_scene(args.scene)
    report = lint_scene(scene, clip=args.clip)
    if args.format == "json":
        stdout.write(canonical_json(report_payload(report)))
    else:
        stdout.write(_report_text(report))
    return EXIT_OK if report.passed else EXIT_VIOLATIONS


def _cmd_diff(args, stdout) -> int:
    before = _read_scene(args.before)
    after = _read_scene(args.after)
    grid_a, _ = render_scene(before, clip=args.clip)
    grid_b, _ = render_scene(after, clip=args.clip)
    diff = diff_grids(grid_a, grid_b)
    added = sorted(diff.added, key=lambda c: (c[1], c[0]))
    removed = sorted(diff.removed, key=lambda c: (c[1], c[0]))
    if args.format == "json":
        stdout.write(
            canonical_json(
                {
                    "added": [list(p) for p in added],
                    "removed": [list(p) for p in removed],
                    "counts": {"added": len(added), "removed": len(removed)},
                }
            )
        )
    else:
        lines = [f"added {len(added)} removed {len(removed)}"]
        lines += [f"+ ({x},{y})" for x, y in added]
        lines += [f"- ({x},{y})" for x, y in removed]
        stdout.write("\n".join(lines) + "\n")
    return EXIT_OK


def _cmd_catalog(args, stdout) -> int:
    if args.name is None:
        lines = []
        for e in catalog_list():
            w, h = e.default_bbox_px
            mm_w, mm_h = extent_mm(w), extent_mm(h)
            lines.append(f"{e.name:<12} {w:>2}x{h:<2}  {mm_w:.1f} x {mm_h:.1f} mm")
        stdout.write("\n".join(lines) + "\n")
        return EXIT_OK
    bbox = None
    if args.bbox:
        try:
            w_s, h_s = args.bbox.lower().split("x")
            bbox = (int(w_s), int(h_s))
        except ValueError:
            raise ParseError(1, 1, f"--bbox must look like 14x14, got {args.bbox!r}")
    renders = build(args.name, bbox)
    pixels = set()
    for r in renders:
        pixels.update(r.pixels())
    w = max(p[0] for p in pixels) + 1
    h = max(p[1] for p in pixels) + 1
    grid = PinGrid(GridSpec(w, h), frozenset(pixels))
    if args.format == "json":
        from .lint import lint_renders

        report = lint_renders(renders)
        _emit(canonical_json(render_payload(grid, renders, report)), args.out, stdout)
    else:
        _emit(_format_grid(grid, args.format), args.out, stdout)
    return EXIT_OK


def _cmd_serve(args, stdout) -> int:
    from .service import serve

    stdout.write(f"listening on port {args.port}\n")
    serve(args.port)
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(
        prog="pinart",
        description="Rasterize, lint, and diff pin-array pixel art scenes.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_render = sub.add_parser("render", help="rasterize a scene file")
    p_render.add_argument("scene")
    p_render.add_argument(
        "--format", choices=("ascii", "braille", "pbm", "json"), default="ascii"
    )
    p_render.add_argument("--out", default=None)
    p_render.add_argument("--clip", action="store_true")
    p_render.set_defaults(func=_cmd_render)

    p_lint = sub.add_parser("lint", help="check a scene against the guidelines")
    p_lint.add_argument("scene")
    p_lint.add_argument("--format", choices=("text", "json"), default="text")
    p_lint.add_argument("--clip", action="store_true")
    p_lint.set_defaults(func=_cmd_lint)

    p_diff = sub.add_parser("diff", help="pixel diff between two scenes")
    p_diff.add_argument("before")
    p_diff.add_argument("after")
    p_diff.add_argument("--format", choices=("text", "json"), default="text")
    p_diff.add_argument("--clip", action="store_true")
    p_diff.set_defaults(func=_cmd_diff)

    p_cat = sub.add_parser("catalog", help="list or render catalog shapes")
    p_cat.add_argument("name", nargs="?", default=None)
    p_cat.add_argument("--bbox", default=None, help="WxH, e.g. 14x14")
    p_cat.add_argument(
        "--format", choices=("ascii", "braille", "pbm", "json"), default="ascii"
    )
    p_cat.add_argument("--out", default=None)
    p_cat.set_defaults(func=_cmd_catalog)

    p_serve = sub.add_parser("serve", help="run the HTTP service")
    p_serve.add_argument("--port", type=int, default=8373)
    p_serve.set_defaults(func=_cmd_serve)

    args = parser.parse_args(argv)
    try:
        return args.func(args, sys.stdout)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except SceneValidationError as exc:
        for issue in exc.issues:
            print(f"error: {issue}", file=sys.stderr)
        return EXIT_INVALID
    except (KeyError, ValueError) as exc:
        msg = exc.args[0] if exc.args else exc
        print(f"error: {msg}", file=sys.stderr)
        return EXIT_INVALID
    except _IOFailure as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    raise SystemExit(main())
