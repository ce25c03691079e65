import io
import sys
from pathlib import Path

import pytest

from pinart.cli import main

GOLDENS = Path(__file__).parent / "goldens"
SCENES = GOLDENS / "scenes"


def run_cli(*args: str) -> tuple[int, str]:
    out = io.StringIO()
    old = sys.stdout
    sys.stdout = out
    try:
        code = main(list(args))
    finally:
        sys.stdout = old
    return code, out.getvalue()


def golden(name: str) -> str:
    return (GOLDENS / "cli" / name).read_text(encoding="utf-8")


def test_catalog_listing_golden():
    code, out = run_cli("catalog")
    assert code == 0 and out == golden("catalog_list.txt")


def test_catalog_square_ascii_golden():
    code, out = run_cli("catalog", "square", "--format", "ascii")
    assert code == 0 and out == golden("catalog_square_ascii.txt")


def test_catalog_custom_bbox():
    code, out = run_cli("catalog", "circle", "--bbox", "9x9")
    assert code == 0 and out.count("\n") == 9


def test_catalog_unknown_name_exits_2(capsys):
    code, _ = run_cli("catalog", "blob")
    assert code == 2


def test_render_smiley_ascii_golden():
    code, out = run_cli("render", str(SCENES / "smiley_a.scene"))
    assert code == 0 and out == golden("render_smiley_a_ascii.txt")


def test_render_out_file(tmp_path):
    out_path = tmp_path / "grid.pbm"
    code, _ = run_cli(
        "render", str(SCENES / "smiley_a.scene"), "--format", "pbm",
        "--out", str(out_path),
    )
    assert code == 0
    assert out_path.read_bytes().startswith(b"P1\n27 27\n")


def test_render_missing_file_exits_3():
    code, _ = run_cli("render", "no-such-file.scene")
    assert code == 3


def test_render_unparseable_scene_exits_2(tmp_path):
    bad = tmp_path / "bad.scene"
    bad.write_text('{"grid": {"width": 9, "height": 9}, "items": [{"kind": "blob"}]}')
    code, _ = run_cli("render", str(bad))
    assert code == 2


def test_render_out_of_bounds_exits_2_without_clip(tmp_path):
    doc = (
        '{"grid": {"width": 9, "height": 9},'
        ' "items": [{"kind": "catalog", "name": "circle", "bbox": [5, 5, 14, 14]}]}'
    )
    scene = tmp_path / "oob.scene"
    scene.write_text(doc)
    code, _ = run_cli("render", str(scene))
    assert code == 2
    code, out = run_cli("render", str(scene), "--clip")
    assert code == 0 and "o" in out


def test_lint_extended_triangle_golden():
    code, out = run_cli("lint", str(SCENES / "fig_extended_triangle.scene"))
    assert code == 1
    assert out == golden("lint_extended_triangle.txt")
    assert out.count("extended corner") == 2


def test_lint_eroded_triangle_golden():
    code, out = run_cli("lint", str(SCENES / "fig_eroded_triangle.scene"))
    assert code == 1
    assert out == golden("lint_eroded_triangle.txt")
    assert out.count("eroded corner") == 2


def test_lint_passing_scene_exits_0():
    code, out = run_cli("lint", str(SCENES / "smiley_a.scene"))
    assert code == 0
    assert out == golden("lint_smiley_a.txt")
    assert "ADVISORY" in out  # advisories listed but do not fail


def test_lint_json_format():
    code, out = run_cli("lint", str(SCENES / "smiley_a.scene"), "--format", "json")
    assert code == 0
    import json

    obj = json.loads(out)
    assert obj["pass"] is True
    assert [v["rule"] for v in obj["violations"]] == ["ADVISORY", "ADVISORY"]


def test_diff_smiley_golden():
    code, out = run_cli(
        "diff", str(SCENES / "smiley_a.scene"), str(SCENES / "smiley_b.scene")
    )
    assert code == 0 and out == golden("diff_smiley.txt")
    assert "removed 6" in out


def test_diff_json():
    import json

    code, out = run_cli(
        "diff",
        str(SCENES / "smiley_a.scene"),
        str(SCENES / "smiley_b.scene"),
        "--format",
        "json",
    )
    assert code == 0
    assert json.loads(out)["counts"] == {"added": 0, "removed": 6}


def test_stdout_byte_stable():
    a = run_cli("catalog", "heart")
    b = run_cli("catalog", "heart")
    assert a == b
