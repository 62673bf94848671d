import json

import pytest
from helpers import random_category
from hypothesis import given, settings
from hypothesis import strategies as st

from kcat import QQ, Field, ParseError, io, validate_category, validate_hopf
from kcat.cli import DATA
from kcat.constructions import Partition, contract
from kcat.library import a2, graded_kc2


def test_category_round_trip():
    A = a2()
    back = io.category_from_doc(io.Doc(io.category_to_dict(A)))
    assert back.structure_equal(A)


def test_dump_is_valid_json(tmp_path):
    p = tmp_path / "a2.json"
    io.dump(io.category_to_dict(a2()), p)
    assert json.loads(p.read_text())["objects"] == ["x", "y"]
    assert io.load_category(p).structure_equal(a2())


def test_tuple_objects_survive_as_strings():
    A = a2()
    T = contract(A, Partition.whole(A))
    S = io.stringify(T)
    assert S.hom_dims() == {(io.name(x), io.name(y)): d for (x, y), d in T.hom_dims().items()}
    assert validate_category(S).ok


@settings(max_examples=20, deadline=None)
@given(st.integers(0, 10_000), st.sampled_from([2, 3]))
def test_random_round_trip(seed, p):
    C = random_category(Field.prime(p), seed)
    back = io.category_from_doc(io.Doc(io.category_to_dict(C)))
    assert back.structure_equal(C, labels=False)


def test_field_override():
    C = io.load_category(DATA / "dual_numbers.json", Field.prime(5))
    assert C.field == Field.prime(5)


@pytest.mark.parametrize("fname", sorted(p.name for p in DATA.glob("*.json")))
def test_bundled_files_parse(fname):
    data = json.loads((DATA / fname).read_text())
    assert isinstance(data, dict)


def test_bundled_loaders():
    C, G, gr = io.grading_from_doc(io.Doc.load(DATA / "kc2_grading.json"))
    B, G2, gr2 = graded_kc2()
    assert C.structure_equal(B, labels=False)
    assert gr.deg == gr2.deg
    C, H, rho, G = io.hmodule_from_doc(io.Doc.load(DATA / "sign_action.json"))
    assert G is not None and H.dim == 2
    H = io.hopf_from_doc(io.Doc.load(DATA / "kc2_hopf.json"))
    assert validate_hopf(H).ok
    C, G, act = io.action_from_doc(io.Doc.load(DATA / "sign_group_action.json"))
    assert act.object_action_trivial()
    M = io.module_from_doc(io.Doc.load(DATA / "a2_module.json"))
    assert M.dims == {"x": 1, "y": 1}


def test_module_round_trip():
    M = io.module_from_doc(io.Doc.load(DATA / "a2_module.json"))
    again = io.module_from_doc(io.Doc(io.module_to_dict(M)), C=M.category)
    assert again == M


def test_hopf_round_trip():
    H = io.hopf_from_doc(io.Doc.load(DATA / "kc2_hopf.json"))
    back = io.hopf_from_doc(io.Doc(io.hopf_to_dict(H)))
    assert back.structure_equal(H)


def test_partitions():
    A = a2()
    assert io.partition_from_doc(io.Doc("whole"), A).blocks == [("x", "y")]
    assert io.partition_from_doc(io.Doc("singletons"), A).blocks == [("x",), ("y",)]
    P = io.partition_from_doc(io.Doc({"blocks": [["x", "y"]], "names": ["*"]}), A)
    assert P.names == ["*"]


def _cat(**changes):
    d = io.category_to_dict(a2())
    d.update(changes)
    return io.Doc(d)


@pytest.mark.parametrize("changes,where", [
    ({"field": "r"}, "$.field"),
    ({"homs": {"x-y": []}}, "$.homs.x-y"),
    ({"homs": {"x->w": []}}, "$.homs.x->w"),
    ({"identities": {"x": [["1x", "1"]]}}, "$.identities"),
    ({"identities": {"x": [["nope", "1"]], "y": [["1y", "1"]]}}, "$.identities.x[0]"),
    ({"identities": {"x": [["1x", "one"]], "y": [["1y", "1"]]}}, "$.identities.x[0][1]"),
    ({"objects": "xy"}, "$.objects"),
])
def test_parse_errors_carry_a_path(changes, where):
    with pytest.raises(ParseError) as exc:
        io.category_from_doc(_cat(**changes))
    assert where in str(exc.value)


def test_missing_key():
    with pytest.raises(ParseError, match="missing key 'homs'"):
        io.category_from_doc(io.Doc({"objects": ["x"]}))


def test_invalid_json(tmp_path):
    p = tmp_path / "bad.json"
    p.write_text("{ not json")
    with pytest.raises(ParseError):
        io.Doc.load(p)


def test_missing_reference(tmp_path):
    p = tmp_path / "g.json"
    p.write_text(json.dumps({"category": "nowhere.json", "group": "c2.json", "degrees": {}}))
    with pytest.raises(ParseError, match="cannot read"):
        io.grading_from_doc(io.Doc.load(p))


def test_inline_references():
    d = {"category": io.category_to_dict(graded_kc2()[0]),
         "group": json.loads((DATA / "c2.json").read_text()),
         "degrees": {"1": "1", "t": "t"}}
    C, G, gr = io.grading_from_doc(io.Doc(d, DATA))
    assert gr.degree("*", "*", 1) == "t"
    assert QQ == C.field
