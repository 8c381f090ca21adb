import io
import json

import pytest

from osgkit.cli import main
from osgkit.fixtures import fixture_path


def run_cli(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def run_json(*argv):
    code, text = run_cli(*argv, "--format", "json")
    return code, json.loads(text)


PX3 = str(fixture_path("px3"))
SL2 = str(fixture_path("sl2"))
LZ2 = str(fixture_path("lz2"))
N2 = str(fixture_path("n2"))


# ---------------------------------------------------------------------------
# validate


def test_validate_px3_exits_1_with_witness():
    code, text = run_cli("validate", PX3)
    assert code == 1
    assert "valid: no" in text
    assert "associativity" in text
    assert "(e, a, a)" in text


def test_validate_sl2_exits_0():
    code, text = run_cli("validate", SL2)
    assert code == 0
    assert "valid: yes" in text


def test_validate_json_findings():
    code, doc = run_json("validate", PX3)
    assert code == 1
    assert doc["command"] == "validate"
    assert doc["valid"] is False
    finding = doc["findings"][0]
    assert finding["kind"] == "axiom_failure"
    assert finding["axiom"] == "associativity"
    assert finding["witness"] == ["e", "a", "a"]
    assert isinstance(finding["structure"], str)


def test_validate_missing_file_exits_2(capsys):
    code, _ = run_cli("validate", "no/such/file.osg")
    assert code == 2


def test_validate_malformed_file_exits_2(tmp_path):
    bad = tmp_path / "bad.osg"
    bad.write_text("order 2\nmult 0 9\nmult 0 0\n")
    code, _ = run_cli("validate", str(bad))
    assert code == 2


# ---------------------------------------------------------------------------
# analyze


def test_analyze_sl2():
    code, doc = run_json("analyze", SL2)
    assert code == 0
    by_kind = {}
    for finding in doc["findings"]:
        by_kind.setdefault(finding["kind"], []).append(finding)
    assert by_kind["idempotents"][0]["subset"] == ["e", "f"]
    greens = by_kind["greens"][0]
    assert greens["H"] == [["e"], ["f"]]
    inverse = by_kind["inverse"][0]
    assert inverse["holds"] is True
    simple = {f["side"]: f["holds"] for f in by_kind["simplicity"]}
    assert simple == {"left": False, "right": False, "two_sided": False}


def test_analyze_lz2_simplicity():
    code, doc = run_json("analyze", LZ2)
    assert code == 0
    simple = {
        f["side"]: (f["holds"], f["witness"])
        for f in doc["findings"]
        if f["kind"] == "simplicity"
    }
    assert simple["left"] == (True, None)
    assert simple["right"] == (False, ["a"])
    inverse = next(f for f in doc["findings"] if f["kind"] == "inverse")
    assert inverse["holds"] is False
    assert inverse["witness"] == ["a", "a", "b"]


def test_analyze_n2_group_like_not_applicable():
    code, doc = run_json("analyze", N2)
    assert code == 0
    group_like = [f for f in doc["findings"] if f["kind"] == "group_like"]
    assert all(f.get("applicable") is False for f in group_like)
    regular = next(
        f for f in doc["findings"]
        if f["kind"] == "regularity" and f["property"] == "regular"
    )
    assert regular["holds"] is False and regular["witness"] == ["a"]


def test_analyze_invalid_structure_exits_1():
    code, text = run_cli("analyze", PX3)
    assert code == 1
    assert "valid: no" in text


def test_text_and_json_agree_on_findings():
    _, text = run_cli("analyze", SL2)
    _, doc = run_json("analyze", SL2)
    assert "ordered idempotents: {e, f}" in text
    assert "inverse: yes" in text
    inverse = next(f for f in doc["findings"] if f["kind"] == "inverse")
    assert inverse["holds"] is True


# ---------------------------------------------------------------------------
# inverses


def test_inverses_lz2():
    code, text = run_cli("inverses", LZ2, "a")
    assert code == 0
    assert "inverses of a: {a, b}" in text


def test_inverses_by_index():
    code, doc = run_json("inverses", SL2, "1")
    assert code == 0
    assert doc["findings"][0]["inverses"] == ["f"]


def test_inverses_unknown_element_exits_2():
    code, _ = run_cli("inverses", SL2, "zz")
    assert code == 2


# ---------------------------------------------------------------------------
# enumerate


def test_enumerate_writes_corpus(tmp_path):
    out_file = tmp_path / "corpus.osg"
    code, text = run_cli("enumerate", "--order", "2", "--out", str(out_file))
    assert code == 0
    assert "20 structures" in text
    content = out_file.read_text()
    assert content.count("order 2") == 20
    assert "# count: 20" in content


def test_enumerate_json_counts():
    code, doc = run_json("enumerate", "--order", "2", "--up-to-iso")
    assert code == 0
    assert doc["count"] == 11
    assert len(doc["findings"]) == 11


def test_enumerate_filter():
    code, doc = run_json(
        "enumerate", "--order", "2", "--up-to-iso", "--filter", "inverse"
    )
    assert code == 0
    assert doc["count"] == 5


def test_enumerate_rejects_large_order():
    code, _ = run_cli("enumerate", "--order", "5")
    assert code == 2


def test_enumerate_bad_shard():
    code, _ = run_cli("enumerate", "--order", "2", "--shard", "nope")
    assert code == 2


# ---------------------------------------------------------------------------
# check-theorems


def test_check_theorems_order_2_labelled():
    code, text = run_cli("check-theorems", "--order", "2", "--labelled")
    assert code == 0
    assert "24 candidate pairs" in text
    assert "all groupings consistent" in text


def test_check_theorems_json():
    code, doc = run_json(
        "check-theorems", "--order", "2", "--labelled", "--theorem", "THM_3_5"
    )
    assert code == 0
    assert doc["candidates"] == 24
    assert doc["structures"] == 20
    entry = doc["findings"][0]
    assert entry["theorem"] == "THM_3_5"
    assert entry["inconsistent"] == 0
    assert entry["hypothesis_met"] == 16


def test_check_theorems_corpus_round_trip(tmp_path):
    corpus_file = tmp_path / "c.osg"
    run_cli("enumerate", "--order", "2", "--up-to-iso", "--out", str(corpus_file))
    code, doc = run_json("check-theorems", "--corpus", str(corpus_file))
    assert code == 0
    assert doc["structures"] == 11
    assert doc["inconsistent"] == 0


def test_check_theorems_corpus_shard(tmp_path):
    corpus_file = tmp_path / "c.osg"
    run_cli("enumerate", "--order", "2", "--out", str(corpus_file))
    total = 0
    for index in range(3):
        code, doc = run_json(
            "check-theorems", "--corpus", str(corpus_file),
            "--theorem", "LEM_2_1", "--shard", f"{index}/3",
        )
        assert code == 0
        total += doc["structures"]
    assert total == 20


def test_check_theorems_unknown_theorem():
    code, _ = run_cli("check-theorems", "--order", "2", "--theorem", "THM_X")
    assert code == 2


def test_check_theorems_needs_exactly_one_source():
    code, _ = run_cli("check-theorems")
    assert code == 2
    code, _ = run_cli("check-theorems", "--order", "2", "--corpus", "x.osg")
    assert code == 2


# ---------------------------------------------------------------------------
# oracle


def test_oracle_px3():
    code, text = run_cli("oracle", "px3")
    assert code == 0
    assert "associative: no" in text
    assert "least witness: (e, a, a)" in text
    assert "opposite reading associative: no" in text


def test_oracle_semigroups_json():
    code, doc = run_json("oracle", "semigroups")
    assert code == 0
    counts = doc["findings"][0]["labelled"]
    assert counts == {"1": 1, "2": 8, "3": 113}
    assert doc["findings"][0]["iso_classes"]["2"] == 5


def test_oracle_posets():
    code, doc = run_json("oracle", "posets")
    assert code == 0
    assert doc["findings"][0]["counts"] == {"1": 1, "2": 3, "3": 19}


def test_oracle_ordered():
    code, doc = run_json("oracle", "ordered")
    assert code == 0
    assert doc["findings"][0]["counts"]["2"] == 20


def test_oracle_fixtures():
    code, doc = run_json("oracle", "fixtures")
    assert code == 0
    verdicts = doc["findings"][0]["verdicts"]
    assert verdicts["sl2"] is True
    assert verdicts["px3"] is False


def test_oracle_unknown_suite():
    code, _ = run_cli("oracle", "nonexistent")
    assert code == 2


# ---------------------------------------------------------------------------
# determinism


def test_cli_runs_are_deterministic():
    first = run_cli("check-theorems", "--order", "2", "--format", "json")
    second = run_cli("check-theorems", "--order", "2", "--format", "json")
    assert first == second
