import io
import json
import pathlib
import re
import subprocess
import sys

import pytest

from mixedtori import __version__
from mixedtori.cli import build_parser, cmd_analyze, cmd_nested_check, main
from mixedtori.newton import newton_boundary, support
from mixedtori.mixedpoly import parse
from mixedtori.report import SCHEMA
from mixedtori.svg import render_polygon_svg

from conftest import TWO_FACE, THREE_FACE, FOUR_FACE, FIXTURES

GOLDEN = pathlib.Path(__file__).parent / "golden"


def run(argv):
    args = build_parser().parse_args(argv)
    out = io.StringIO()
    fn = cmd_analyze if args.command == "analyze" else cmd_nested_check
    return fn(args, stdout=out), out.getvalue()


def struct(poly, *extra):
    code, text = run(["analyze", poly, "--out", "struct", *extra])
    return code, json.loads(text)


def test_two_face_end_to_end():
    code, doc = struct(TWO_FACE)
    assert code == 0 and doc["schema"] == SCHEMA and doc["status"] == "ok"
    assert doc["table"]["ms_t"] == [0, 2, 4] and doc["table"]["ms_phi"] == [6, -2, 0]
    assert doc["verdict"]["essential"] == [1]
    assert doc["verdict"]["non_hyperbolic"] == "yes"
    assert doc["verdict"]["fired"] == ["thm1.1"]


def test_four_face_end_to_end():
    code, doc = struct(FOUR_FACE)
    assert code == 0
    assert doc["verdict"]["fired"] == ["thm1.3"]
    assert doc["verdict"]["non_hyperbolic"] == "yes"


def test_single_face_is_vacuous():
    code, doc = struct("u + v")
    assert code == 0 and doc["boundary"]["N"] == 1
    assert doc["verdict"]["fired"] == [] and doc["verdict"]["non_hyperbolic"] == "unknown"


def test_exit_code_input_error(capsys):
    code, text = run(["analyze", "u +", "--out", "struct"])
    assert code == 1
    doc = json.loads(text)
    assert doc["status"] == "input-error" and doc["exit_code"] == 1
    assert doc["errors"][0]["error"] == "syntax-error" and doc["errors"][0]["position"] == 3
    assert run(["analyze", "u + v", "--grid", "2"])[0] == 1
    assert "error" in capsys.readouterr().err


def test_exit_code_hypothesis_violation():
    code, doc = struct("u^2 - ~u^2 + v^3")
    assert code == 2 and doc["exit_code"] == 2 and doc["status"] == "hypothesis-violation"
    err = doc["errors"][0]
    assert err["error"] == "root-on-unit-circle" and err["vertex"] == 1 and err["side"] == "t"
    assert err["root"] == {"re": 1, "im": 0}
    code, doc = struct("u^3 + u v + ~u v + v^3")  # 2 Re(u) v vanishes on the torus
    assert code == 2 and doc["hypotheses"]["gamma_nice"] == "violated"
    code, _ = struct("u v")
    assert code == 2


def test_both_output_contains_text_and_json():
    code, text = run(["analyze", THREE_FACE, "--out", "both"])
    assert code == 0
    head, _, tail = text.partition("\n{")
    assert "ms_t" in head
    assert json.loads("{" + tail)["verdict"]["essential"] == [2]


def test_cfg_flags_are_echoed():
    _, doc = struct(TWO_FACE, "--t-samples", "3", "--grid", "64")
    assert doc["config"]["t_samples"] == 3 and doc["config"]["grid"] == 64
    assert doc["table"]["ms_t"] == [0, 2, 4]


def _spec(tmp_path, text):
    path = tmp_path / "link.txt"
    path.write_text(text)
    return str(path)


def test_nested_check_examples(tmp_path):
    code, out = run(["nested-check", _spec(tmp_path, "n=2\nwrap=2 winding=0 knot=true trivial=unknown\nwrap=2 winding=0 knot=true trivial=unknown\n")])
    assert code == 0 and re.search(r"torus 1: essential", out)
    lines = "n=4\n" + "".join(f"wrap={w} winding=0 knot=true trivial=true\n" for w in (1, 0, 1, 1))
    code, out = run(["nested-check", _spec(tmp_path, lines), "--out", "struct"])
    doc = json.loads(out)
    assert code == 0 and doc["tori"][1]["status"] == "essential"
    code, out = run(["nested-check", _spec(tmp_path, "n=2\nwrap=1 winding=1 knot=true trivial=true\nwrap=1 winding=1 knot=true trivial=true\n")])
    assert re.search(r"torus 1: not-essential", out)


def test_nested_check_errors(tmp_path):
    assert run(["nested-check", str(tmp_path / "missing.txt")])[0] == 1
    assert run(["nested-check", _spec(tmp_path, "n=2\nwrap=1\n")])[0] == 1


def test_svg_three_face(tmp_path):
    path = tmp_path / "f.svg"
    code, _ = run(["analyze", THREE_FACE, "--svg", str(path)])
    assert code == 0
    svg = path.read_text()
    assert svg.count('class="support"') == 5
    chain = re.search(r'class="chain"[^>]*points="([^"]+)"', svg).group(1)
    assert len(chain.split()) == 4
    for k in "₁₂₃":
        assert f"Δ¹{k}" in svg
    assert svg.count('class="face-label"') == 3
    assert 'class="region"' in svg and 'version="1.1"' in svg


def test_svg_two_face_and_single_vertex():
    p = parse(TWO_FACE)
    svg = render_polygon_svg(newton_boundary(support(p)), support(p))
    assert svg.count('class="support"') == 4
    chain = re.search(r'class="chain"[^>]*points="([^"]+)"', svg).group(1)
    assert len(chain.split()) == 3
    p = parse("u^2 v^3")
    svg = render_polygon_svg(newton_boundary(support(p)), support(p))
    assert svg.count('class="support"') == 1 and 'class="chain"' not in svg
    assert svg == render_polygon_svg(newton_boundary(support(p)), support(p))


@pytest.mark.parametrize("name", sorted(FIXTURES))
def test_golden_reports(name):
    _, text = run(["analyze", FIXTURES[name], "--out", "struct"])
    assert text == (GOLDEN / f"{name}.json").read_text(encoding="utf-8")


def test_report_is_deterministic_across_processes():
    outs = set()
    for _ in range(2):
        r = subprocess.run([sys.executable, "-m", "mixedtori", "analyze", FOUR_FACE, "--out", "struct"],
                           capture_output=True, text=True, check=True)
        outs.add(r.stdout)
    assert len(outs) == 1


def test_version_flag(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["--version"])
    assert exc.value.code == 0
    assert capsys.readouterr().out.strip() == f"mixedtori {__version__}"
