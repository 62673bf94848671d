import json

import pytest

from kcat import io
from kcat.cli import DATA, main
from kcat.functor import identity_functor
from kcat.library import a2


def d(name):
    return str(DATA / name)


@pytest.mark.parametrize("argv,code", [
    (["validate", "category", d("a2.json")], 0),
    (["validate", "category", d("kc2_perturbed.json")], 1),
    (["validate", "group", d("c2.json")], 0),
    (["validate", "hopf", d("kc2_hopf.json")], 0),
    (["validate", "hopf", d("kc2_bad_hopf.json")], 1),
    (["validate", "grading", d("kc2_grading.json")], 0),
    (["validate", "grading", d("kc2_bad_grading.json")], 1),
    (["validate", "action", d("sign_group_action.json")], 0),
    (["validate", "hmodule", d("sign_action.json")], 0),
    (["validate", "hmodule", d("sign_action_f3.json")], 0),
    (["validate", "module", d("a2_module.json")], 0),
    (["validate", "context", d("matrix_context_2.json"), d("a2.json")], 0),
    (["validate", "context", d("identity_context.json"), d("kc2.json")], 0),
])
def test_validate(argv, code, capsys):
    assert main(argv) == code
    out = capsys.readouterr().out
    assert ("FAIL" in out) == (code == 1)


@pytest.mark.parametrize("argv", [
    ["construct", "contract", d("a2.json"), d("a2_whole.json")],
    ["construct", "inflate", d("kc2.json"), d("inflate_c2.json")],
    ["construct", "matrix", d("a2.json"), "2"],
    ["construct", "smash-hopf", d("sign_action.json")],
    ["construct", "smash-cover", d("kc2_grading.json")],
    ["construct", "skew", d("sign_group_action.json")],
    ["construct", "karoubi", d("kxk_f2.json")],
    ["construct", "additivise", d("a2.json"), "2"],
    ["construct", "rebase", d("a2.json"), d("matrix_context_2.json")],
])
def test_construct_writes_valid_category(argv, tmp_path, capsys):
    assert main(argv + ["--out", str(tmp_path)]) == 0
    files = list(tmp_path.glob("*.json"))
    assert len(files) == 1
    # the written file is itself a valid category
    assert main(["validate", "category", str(files[0])]) == 0


def test_construct_expand(tmp_path):
    spec = tmp_path / "idem.json"
    spec.write_text(json.dumps({"idempotents": {"*": [[["e1", "1"]], [["e2", "1"]]]}}))
    assert main(["construct", "expand", d("kxk_f2.json"), str(spec), "--out", str(tmp_path)]) == 0
    out = io.load_category(tmp_path / "expand.json")
    assert len(out.objects) == 2


def test_construct_to_stdout(capsys):
    assert main(["construct", "matrix", d("a2.json"), "1"]) == 0
    out = capsys.readouterr().out
    assert '"objects"' in out


def test_quotient_of_fixed_action_fails(capsys):
    assert main(["construct", "quotient", d("sign_group_action.json")]) == 1
    assert "NotFreeAction" in capsys.readouterr().out


@pytest.mark.parametrize("argv", [
    ["check", "iso-L", d("kc2_grading.json")],
    ["check", "duality", d("kc2_grading.json")],
    ["check", "quotient-iso", d("sign_action.json")],
    ["check", "quotient-iso", d("sign_action_f3.json")],
    ["check", "module-roundtrip", d("a2_module.json"), d("a2_whole.json")],
])
def test_checks_pass(argv, capsys):
    assert main(argv) == 0


def test_props(tmp_path, capsys):
    f = tmp_path / "id.json"
    io.dump(io.functor_to_dict(identity_functor(a2())), f)
    assert main(["check", "props", str(f), "--json"]) == 0
    rep = json.loads(capsys.readouterr().out)
    assert rep["ok"] is True


def test_pipelines_json(capsys):
    assert main(["pipeline", "galois-to-smash", "--json"]) == 0
    rep = json.loads(capsys.readouterr().out)
    assert rep["ok"] and len(rep["checks"]) >= 10
    assert main(["pipeline", "smash-to-galois", d("sign_action_f3.json"), "-v"]) == 0


def test_pipeline_on_bad_grading(capsys):
    assert main(["pipeline", "galois-to-smash", d("kc2_bad_grading.json")]) == 1


def test_malformed_input_exit_two(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text("[1, 2")
    assert main(["validate", "category", str(bad)]) == 2
    assert main(["validate", "category", str(tmp_path / "missing.json")]) == 2
    shape = tmp_path / "shape.json"
    shape.write_text(json.dumps({"objects": ["x"], "homs": [], "identities": {}}))
    assert main(["validate", "category", str(shape)]) == 2
    assert "error:" in capsys.readouterr().err


def test_context_needs_category(capsys):
    assert main(["validate", "context", d("identity_context.json")]) == 2


def test_examples_command(capsys):
    assert main(["examples"]) == 0
    assert capsys.readouterr().out.strip() == str(DATA)


def test_usage_errors():
    with pytest.raises(SystemExit):
        main(["frobnicate"])
    assert main(["construct", "contract", d("a2.json")]) == 2
