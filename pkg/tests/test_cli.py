import io
import json

import pytest

from prymatroid.catalog import cover_c, cover_d
from prymatroid.cli import run
from prymatroid.document import (
    DocumentError,
    cover_from_dict,
    cover_to_dict,
    dump,
    dumps,
    load,
    loads,
    shipped_path,
)


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(map(str, argv)), out, err)
    return code, out.getvalue(), err.getvalue()


def call_json(*argv):
    code, out, err = call(*argv)
    return code, json.loads(out) if out else None, err


def write(tmp_path, name, doc):
    p = tmp_path / name
    p.write_text(json.dumps(doc) if not isinstance(doc, str) else doc)
    return p


def doc(vertices, edges):
    return {"schemaVersion": 1, "vertices": vertices, "edges": edges}


def test_validate_cover_a():
    code, rep, _ = call_json("validate", shipped_path("cover_a"))
    assert code == 0
    r = rep["results"]
    assert (r["g"], r["g_total"], r["h"], r["d"]) == (3, 5, 2, 1)


def test_validate_rejects_sign_on_dilated_edge(tmp_path):
    d = doc(
        [{"id": "w", "dilated": True}, {"id": "u"}],
        [{"id": "e", "ends": ["w", "u"], "length": 1, "sign": -1}, {"id": "l", "ends": ["u", "u"], "length": 1, "sign": -1}],
    )
    code, rep, err = call_json("validate", write(tmp_path, "bad.json", d))
    assert code == 1 and rep["valid"] is False
    assert "edge 'e'" in rep["error"]


def test_validate_rejects_trivial_cover(tmp_path):
    d = doc(
        [{"id": "u"}, {"id": "v"}],
        [{"id": "a", "ends": ["u", "v"], "length": 1, "sign": 1}, {"id": "b", "ends": ["u", "v"], "length": 1, "sign": 1}],
    )
    code, rep, _ = call_json("validate", write(tmp_path, "t.json", d))
    assert code == 1 and "trivial cover" in rep["error"]


@pytest.mark.parametrize(
    "bad, needle",
    [
        ("{not json", "line 1"),
        (doc([{"id": "u"}], [{"id": "l", "ends": ["u", "x"], "length": 1, "sign": -1}]), "unknown vertex"),
        (doc([{"id": "u"}], [{"id": "l", "ends": ["u", "u"], "length": "-1", "sign": -1}]), "positive"),
        (doc([{"id": "u"}], [{"id": "l", "ends": ["u", "u"], "length": 1.5, "sign": -1}]), "length"),
        (doc([{"id": "u"}], [{"id": "l", "ends": ["u", "u"], "length": 1}]), "needs a sign"),
        (doc([{"id": "u"}, {"id": "u"}], []), "duplicate"),
        ({"schemaVersion": 2, "vertices": [], "edges": []}, "schemaVersion"),
        (doc([{"id": "u"}, {"id": "v"}], [{"id": "l", "ends": ["u", "u"], "length": 1, "sign": -1}]), "disconnected"),
    ],
)
def test_document_errors(tmp_path, bad, needle):
    code, rep, _ = call_json("validate", write(tmp_path, "bad.json", bad))
    assert code == 1
    assert needle in rep["error"]


def test_missing_file_is_io_error(tmp_path):
    code, out, err = call("validate", tmp_path / "missing.json")
    assert code == 3 and out == "" and "error" in err


def test_analyze_cover_c():
    code, rep, _ = call_json("analyze", shipped_path("cover_c"))
    assert code == 0
    r = rep["results"]
    assert r["rank_dual"] == 1
    assert {tuple(o["edges"]): o["index"] for o in r["ogods"]} == {("e1",): 1, ("b",): 2, ("e2",): 1}
    assert r["circuits"] == [{"edges": ["e1", "b", "e2"], "type": "II", "cycle": {"e1": 1, "b": -2, "e2": -1}}]
    assert ["e1", "b"] in r["dual_2_circuits"]
    assert r["multiplicities"]["b"] == 2 and not r["simple"]


def test_gram_cover_a_and_b_agree():
    _, a, _ = call_json("gram", shipped_path("cover_a"))
    _, b, _ = call_json("gram", shipped_path("cover_b"))
    assert a["results"]["gram"] == b["results"]["gram"] == [["6", "6"], ["6", "14"]]
    assert a["results"]["gram_halved"] == [["3", "3"], ["3", "7"]]
    assert a["results"]["volume_squared_det"] == a["results"]["volume_squared_ogod"] == "12"
    assert a["results"]["polarization_type"] == [2, 2]


def test_gram_symbolic():
    code, rep, _ = call_json("gram", shipped_path("cover_a"), "--symbolic")
    assert code == 0
    assert rep["results"]["gram_symbolic_halved"] == [
        ["e1 + e2 + e3", "e1 + 2*e2"],
        ["e1 + 2*e2", "e1 + 4*e2 + e4"],
    ]


def test_gram_with_index_two_ogod():
    code, rep, _ = call_json("gram", shipped_path("no_ogod"), "--ogod", "a,b,c")
    assert code == 0
    assert rep["results"]["basis_source"] == "ogod-sublattice"
    assert rep["warnings"]


def test_gram_with_bad_ogod():
    code, _, err = call("gram", shipped_path("cover_a"), "--ogod", "e1")
    assert code == 2 and "not an ogod" in err


def test_simplify_cover_c(tmp_path):
    out = tmp_path / "s.json"
    code, rep, _ = call_json("simplify", shipped_path("cover_c"), "--out", out)
    assert code == 0
    r = rep["results"]
    assert r["invariant"] and r["gram_before"] == r["gram_after"] == [["12"]]
    # the output is simple, so simplifying again changes nothing
    code, rep2, _ = call_json("simplify", out)
    assert code == 0 and rep2["results"]["transcript"] == []
    assert rep2["results"]["document"] == json.loads(out.read_text())


def test_compare():
    code, rep, _ = call_json("compare", shipped_path("cover_a"), shipped_path("cover_b"))
    assert code == 0 and rep["results"]["verdict"] == "equal-gram"


def test_compare_distinct(tmp_path):
    p = tmp_path / "d.json"
    dump(cover_d(2), p)
    code, rep, _ = call_json("compare", p, shipped_path("cover_c"))
    assert rep["results"]["verdict"] == "distinct"
    assert rep["results"]["witness"]["dimension"] == [2, 1]


def test_fuzz():
    code, rep, _ = call_json("fuzz", "--seed", 3, "--trials", 5, "--max-edges", 6)
    assert code == 0
    assert rep["results"]["failures"] == []
    assert rep["results"]["checks"]["volume_identity"]["passed"] == 5


def test_table_format():
    code, out, _ = call("validate", shipped_path("cover_b"), "--format", "table")
    assert code == 0 and "g_total: 4" in out


def test_output_is_deterministic():
    for argv in (
        ("gram", shipped_path("cover_a"), "--symbolic"),
        ("analyze", shipped_path("no_ogod")),
        ("fuzz", "--seed", 9, "--trials", 3),
    ):
        assert call(*argv) == call(*argv)


def test_document_round_trip():
    c = cover_c([1, "3/2", 2])
    back, warnings = loads(dumps(c))
    assert back == c and warnings == []


def test_sign_normalization_warning():
    d = doc(
        [{"id": "u"}, {"id": "v"}],
        [
            {"id": "a", "ends": ["u", "v"], "length": 1, "sign": -1},
            {"id": "b", "ends": ["u", "v"], "length": 1, "sign": 1},
        ],
    )
    c, warnings = cover_from_dict(d)
    assert c.sign == {"a": 1, "b": -1}
    assert warnings and "a" in warnings[0]
    raw, none = cover_from_dict(d, normalize=False)
    assert raw.sign == {"a": -1, "b": 1} and none == []


def test_shipped_documents_load():
    for name in ("cover_a", "cover_b", "cover_c", "no_ogod"):
        c, _ = load(shipped_path(name))
        assert cover_to_dict(c)["schemaVersion"] == 1


def test_dilated_edge_needs_dilated_ends():
    d = doc(
        [{"id": "w", "dilated": True}, {"id": "u"}],
        [{"id": "d", "ends": ["w", "u"], "length": 1, "dilated": True}],
    )
    with pytest.raises(DocumentError, match="undilated end"):
        cover_from_dict(d)
