"""Tests for the symtope command line"""

import json

import pytest

from symtope.cli import (
    EXIT_GUARD,
    EXIT_OK,
    EXIT_USAGE,
    load_complex,
    main,
    render_table,
)
from symtope.corpus import FIXTURES


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_analyze_builtin_json(capsys):
    code, out, _ = run(capsys, "analyze", "builtin:triangle", "--json")
    assert code == EXIT_OK
    data = json.loads(out)
    assert data["schema"] == "symtope/1"
    assert data["name"] == "triangle"
    assert data["polytopes"]["homology"]["facet_count"] == 6


def test_analyze_table_output(capsys):
    code, out, _ = run(capsys, "analyze", "builtin:segment", "--which", "homology")
    assert code == EXIT_OK
    assert "polytopes.homology.dim" in out
    assert "schema" in out


def test_analyze_json_file(capsys, tmp_path):
    path = tmp_path / "disk.json"
    path.write_text(json.dumps({"name": "disk", "facets": [[1, 2, 3], [2, 3, 4]]}))
    code, out, _ = run(capsys, "analyze", str(path), "--json", "--which", "cohomology")
    assert code == EXIT_OK
    assert json.loads(out)["polytopes"]["cohomology"]["vertices"] == 6


def test_analyze_graph_file(tmp_path):
    path = tmp_path / "square.json"
    path.write_text(json.dumps({"edges": [[1, 2], [2, 3], [3, 4], [1, 4]]}))
    assert load_complex(str(path)).f_vector == (4, 4)


def test_unknown_builtin_exits_1(capsys):
    code, out, _ = run(capsys, "analyze", "builtin:klein_bottle", "--json")
    assert code == EXIT_USAGE
    assert json.loads(out)["error"]["code"] == "UNKNOWN_BUILTIN"


@pytest.mark.parametrize(
    "content,error",
    [
        ("{not json", "MALFORMED_JSON"),
        ('{"facets": [[0, 1]]}', "MALFORMED_INPUT"),
        ('{"facets": []}', "MALFORMED_INPUT"),
    ],
)
def test_malformed_input_exits_1(capsys, tmp_path, content, error):
    path = tmp_path / "bad.json"
    path.write_text(content)
    code, out, _ = run(capsys, "analyze", str(path), "--json")
    assert code == EXIT_USAGE
    assert json.loads(out)["error"]["code"] == error


def test_missing_file_exits_1(capsys, tmp_path):
    code, _, err = run(capsys, "analyze", str(tmp_path / "missing.json"))
    assert code == EXIT_USAGE
    assert "cannot read" in err


@pytest.mark.parametrize(
    "argv",
    [
        ["analyze"],
        ["analyze", "builtin:rp2", "--which", "both-ways"],
        ["analyze", "builtin:rp2", "--permute", "1,1,2"],
        ["analyze", "builtin:rp2", "--max-points", "0"],
        ["analyze", "builtin:rp2", "--json", "--table"],
        ["frobnicate"],
    ],
)
def test_bad_flags_exit_1(capsys, argv):
    assert main(argv) == EXIT_USAGE


def test_requested_field_over_guard_exits_2(capsys):
    code, out, _ = run(
        capsys,
        "analyze",
        "builtin:triangle",
        "--which",
        "homology",
        "--hstar",
        "--max-points",
        "1",
        "--json",
    )
    assert code == EXIT_GUARD
    assert json.loads(out)["polytopes"]["homology"]["hstar"]["skipped"] == "max_points"


def test_unrequested_skips_keep_exit_0(capsys):
    code, out, _ = run(
        capsys,
        "analyze",
        "builtin:triangle",
        "--which",
        "homology",
        "--max-points",
        "1",
        "--json",
    )
    assert code == EXIT_OK
    assert json.loads(out)["polytopes"]["homology"]["dim"] == 2


def test_compare(capsys):
    code, out, _ = run(
        capsys, "compare", "builtin:sphere_a", "builtin:sphere_b", "--json"
    )
    data = json.loads(out)
    assert code in (EXIT_OK, EXIT_GUARD)
    assert data["facet_ridge_isomorphic"] is False
    assert data["sphere_equivalence"]["equivalent"] is False


def test_compare_cycles(capsys):
    code, out, _ = run(
        capsys,
        "compare",
        "builtin:triangle",
        "builtin:cycle_3",
        "--which",
        "homology",
        "--json",
    )
    assert code == EXIT_OK
    assert json.loads(out)["fingerprints_agree"] is True


def test_corpus_list(capsys):
    code, out, _ = run(capsys, "corpus", "list", "--json")
    assert code == EXIT_OK
    entries = json.loads(out)["entries"]
    assert len(entries) == len(FIXTURES)
    rp2 = next(e for e in entries if e["name"] == "rp2")
    assert rp2["f_vector"] == [6, 15, 10]


def test_corpus_list_table(capsys):
    code, out, _ = run(capsys, "corpus", "list")
    assert code == EXIT_OK
    assert len(out.strip().splitlines()) == len(FIXTURES)


def test_corpus_show(capsys):
    code, out, _ = run(capsys, "corpus", "show", "rp2", "--json")
    assert code == EXIT_OK
    assert len(json.loads(out)["facets"]) == 10
    assert run(capsys, "corpus", "show", "nope")[0] == EXIT_USAGE


def test_sweep_subcomplexes(capsys):
    code, out, _ = run(capsys, "sweep-subcomplexes", "builtin:two_triangles", "--json")
    assert code == EXIT_OK
    data = json.loads(out)
    assert data["reflexive"] == 3
    assert data["entries"][0]["deleted"] == []


def test_render_table_marks_skips():
    table = render_table(
        {"a": {"b": {"skipped": "max_points", "reason": None}}, "c": [1, 2]}
    )
    assert table.splitlines() == ["a.b  skipped (max_points)", "c    (1, 2)"]
