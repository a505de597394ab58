from __future__ import annotations

import json
import re
from pathlib import Path

import pytest
from hypothesis import given
from hypothesis import strategies as st

from planar_perfect.checker import Kernel, Verdict, Witness, is_perfect, triangle_neighborhood_check
from planar_perfect.cli import main
from planar_perfect.cli_io import (
    ParseError,
    ValidationError,
    emit_graph,
    emit_verdict,
    parse_graph,
    parse_verdict,
)
from planar_perfect.decomposer import w_components
from planar_perfect.embedder import schnyder_embed
from planar_perfect.generator import GenSpec, named_fixture, random_near_triangulation

FIXTURE_DIR = Path(__file__).resolve().parents[1] / "fixtures"

K4_DOC = {"format_version": 1, "n": 4, "rotation": [[1, 3, 2], [2, 3, 0], [0, 3, 1], [2, 0, 1]], "outer_face": [0, 1, 2]}


def doc(**changes):
    d = json.loads(json.dumps(K4_DOC))
    d.update(changes)
    return json.dumps(d)


# ---------------------------------------------------------------------------
# Graph documents
# ---------------------------------------------------------------------------


def test_k4_document():
    g, e = parse_graph(json.dumps(K4_DOC))
    assert (g.n, g.m) == (4, 6) and e is None


def test_asymmetric_names_edge():
    with pytest.raises(ValidationError) as exc:
        parse_graph(doc(rotation=[[1, 3, 2], [2, 3], [0, 3, 1], [2, 0, 1]]))
    assert "(1, 0)" in str(exc.value) and exc.value.location == "rotation[1]"


def test_parse_errors_carry_position():
    with pytest.raises(ParseError) as exc:
        parse_graph('{"n": 4,\n  "rotation": [1,}')
    assert exc.value.location.startswith("line 2")
    with pytest.raises(ParseError) as exc:
        parse_graph(doc(outer_face="abc"))
    assert exc.value.location == "outer_face"
    with pytest.raises(ParseError):
        parse_graph(doc(format_version=7))
    with pytest.raises(ValidationError):
        parse_graph(doc(n=5))


def test_shipped_fixture_documents_match():
    for path in sorted(FIXTURE_DIR.glob("*.json")):
        g, _ = parse_graph(path.read_text())
        ref = named_fixture(path.stem)
        assert g.rotation == ref.rotation and g.outer_face == ref.outer_face, path.name


def test_coords_validated():
    g, _ = parse_graph(json.dumps(K4_DOC))
    good = [list(p) for p in schnyder_embed(g).coords]
    parsed = parse_graph(doc(coords=good))
    assert parsed.embedding.coords == tuple(map(tuple, good))
    with pytest.raises(ValidationError, match="cross|order"):
        parse_graph(doc(coords=[[0, 0], [2, 0], [1, 2], [1, -1]]))
    with pytest.raises(ParseError):
        parse_graph(doc(coords=[[0, 0]]))


@given(st.integers(3, 40), st.integers(0, 2**32))
def test_round_trip(n, seed):
    g = random_near_triangulation(GenSpec("random", n, seed))
    h, _ = parse_graph(emit_graph(g))
    assert h.rotation == g.rotation and h.outer_face == g.outer_face


# ---------------------------------------------------------------------------
# Verdict documents
# ---------------------------------------------------------------------------


def test_perfect_verdict_document():
    d = json.loads(emit_verdict(is_perfect(named_fixture("k4"))))
    assert d["status"] == "perfect" and "hole" not in d


def test_w5_verdict_document():
    d = json.loads(emit_verdict(is_perfect(named_fixture("w5"))))
    assert d["kernel"]["kind"] == "vertex" and len(d["hole"]) == 5


def test_verdict_round_trip():
    for name in ("k4", "w5", "fig9_like", "triforce9"):
        v = is_perfect(named_fixture(name))
        assert parse_verdict(emit_verdict(v)) == v


def test_triforce7_svg_styles():
    g = named_fixture("triforce7")
    (comp,) = w_components(g)
    w = triangle_neighborhood_check(comp)
    # the {x, y, z} face witness, rendered
    xyz = Witness(Kernel("triangle", (7, 8, 9)), w.hole, 0, w.component)
    svg = emit_verdict(Verdict("NotPerfect", xyz, 1), "svg", graph=g)
    classes = re.findall(r'<circle class="([^"]*)"', svg)
    assert sum("hole" in c.split() for c in classes) == 7
    assert sum("kernel" in c.split() for c in classes) == 3


def test_dot_output():
    g = named_fixture("w5")
    dot = emit_verdict(is_perfect(g), "dot", graph=g)
    assert dot.startswith("graph G {") and dot.count("penwidth=3") == 5 + 5


# ---------------------------------------------------------------------------
# CLI
# ---------------------------------------------------------------------------


def test_cli_check_exit_codes(tmp_path, capsys):
    assert main(["check", str(FIXTURE_DIR / "k4.json")]) == 0
    assert main(["check", str(FIXTURE_DIR / "w5.json"), "--witness"]) == 1
    out = json.loads(capsys.readouterr().out.strip().splitlines()[-1])
    assert out["kernel"] == {"kind": "vertex", "vertices": [5]}
    bad = tmp_path / "bad.json"
    bad.write_text(doc(rotation=[[1, 3, 2], [2, 3], [0, 3, 1], [2, 0, 1]]))
    assert main(["check", str(bad)]) == 2
    assert "rotation[1]" in capsys.readouterr().err


def test_cli_other_commands(tmp_path, capsys):
    assert main(["gen", "--n", "12", "--seed", "3", "--near", "-o", str(tmp_path / "g.json")]) == 0
    assert main(["decompose", str(tmp_path / "g.json")]) == 0
    assert "components" in json.loads(capsys.readouterr().out)
    assert main(["embed", str(FIXTURE_DIR / "octahedron.json"), "-o", str(tmp_path / "e.json")]) == 0
    assert parse_graph((tmp_path / "e.json").read_text()).embedding is not None
    assert main(["oracle", str(FIXTURE_DIR / "triforce7.json")]) == 0
    assert json.loads(capsys.readouterr().out)["hole"] == list(range(7))
    assert main(["oracle", str(FIXTURE_DIR / "triforce7.json"), "--oracle-limit", "5"]) == 2
    assert main(["check", str(FIXTURE_DIR / "triforce7.json"), "--format", "svg", "-o", str(tmp_path / "t.svg")]) == 1
    assert (tmp_path / "t.svg").read_text().startswith("<svg")


def test_cli_bench_writes_table_and_plot(tmp_path):
    out = tmp_path / "bench.tsv"
    assert main(["bench", "--sizes", "100,200,400", "--seed", "7", "-o", str(out), "--plot"]) == 0
    rows = out.read_text().strip().splitlines()
    assert rows[0].split("\t")[:2] == ["n", "m"] and len(rows) == 4
    assert [int(r.split("\t")[0]) for r in rows[1:]] == [100, 200, 400]
    assert (tmp_path / "bench.png").stat().st_size > 0
