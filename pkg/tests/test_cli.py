import json
import shutil
import subprocess

import pytest

from grig.cli import main
from grig.io import algebra_to_doc, dump_json, module_to_doc
from grig.modules import direct_sum, is_projective, projective_indecomposables, regular_module, simple_modules
from recheck import recheck_report


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def run_json(capsys, *argv):
    code, out = run(capsys, *argv)
    return code, json.loads(out)


@pytest.fixture
def files(tmp_path, corpus):
    """Module documents over N(3,2) and D2, plus an algebra file."""
    a = corpus("N(3,2)")
    d2 = corpus("D2")
    s = simple_modules(a)
    paths = {}

    def put(name, doc):
        p = tmp_path / f"{name}.json"
        p.write_text(dump_json(doc))
        paths[name] = str(p)

    put("s1", module_to_doc(s[0]))
    put("s2", module_to_doc(s[1]))
    put("gen", module_to_doc(direct_sum([regular_module(a), s[0]])))
    put("reg", module_to_doc(regular_module(a)))
    put("p1", module_to_doc(projective_indecomposables(a)[0]))
    put("d2s", module_to_doc(simple_modules(d2)[0]))
    put("alg", algebra_to_doc(a))
    put("s1_only", {"dimension_vector": {"1": 1}})
    seeds = tmp_path / "seeds"
    seeds.mkdir()
    (seeds / "a.json").write_text(dump_json(module_to_doc(s[0])))
    paths["seeds"] = str(seeds)
    return paths


def test_validate_corpus_name_and_file(capsys, files):
    code, rep = run_json(capsys, "validate", "N(3,2)")
    assert code == 0
    assert rep["result"]["dim"] == 6 and rep["result"]["radical_nilpotency_index"] == 2
    assert len(rep["result"]["idempotents"]) == 3
    code, rep2 = run_json(capsys, "validate", files["alg"])
    assert code == 0 and rep2["result"]["dim"] == 6


@pytest.mark.parametrize("kind,dims", [("simples", [1, 1, 1]), ("projectives", [2, 2, 2]),
                                       ("injectives", [2, 2, 2])])
def test_modules(capsys, kind, dims):
    code, rep = run_json(capsys, "modules", "N(3,2)", "--kind", kind)
    assert code == 0
    assert [m["dim"] for m in rep["result"]["modules"]] == dims


def test_resolve_with_certificate(capsys, files):
    code, rep = run_json(capsys, "resolve", files["s1"], "--cutoff", "10")
    assert code == 0
    res = rep["result"]
    assert res["status"]["kind"] == "periodic" and res["status"]["period"] == 3
    assert "certificate" in res and recheck_report(rep) == 1
    code, rep = run_json(capsys, "resolve", files["s1"], "--direction", "inj")
    assert code == 0 and rep["result"]["term_dims"][0] == 2


def test_ext(capsys, files):
    code, rep = run_json(capsys, "--cutoff", "6", "ext", "--from", files["s1"], "--to", files["s1"])
    assert code == 0
    assert rep["result"]["dims"] == [1, 0, 0, 1, 0, 0, 1]
    assert rep["cutoff"] == 6


def test_ext_with_representation_form(capsys, files):
    code, rep = run_json(capsys, "ext", "--from", files["s1_only"], "--to", files["s2"], "--algebra", "N(3,2)",
                         "--cutoff", "4")
    assert code == 0 and rep["result"]["dims"] == [0, 1, 0, 0, 1]


def test_gorenstein(capsys):
    code, rep = run_json(capsys, "gorenstein", "T2(Q)")
    assert code == 0 and rep["result"]["verdict"] == "Gorenstein"


def test_gproj_certify_exit_codes(capsys, files):
    code, rep = run_json(capsys, "gproj", "certify", files["s1"])
    assert code == 0 and rep["result"]["verdict"] == "Certified"
    code, rep = run_json(capsys, "gproj", "certify", files["p1"])
    assert code == 0 and rep["result"]["method"] == "Projective"


def test_gproj_refuted_is_exit_one(capsys, tmp_path, corpus):
    t2 = corpus("T2(Q)")
    x = [m for m in simple_modules(t2) if not is_projective(m)][0]
    p = tmp_path / "x.json"
    p.write_text(dump_json(module_to_doc(x)))
    code, rep = run_json(capsys, "gproj", "certify", str(p))
    assert code == 1 and rep["result"]["verdict"] == "Refuted"


def test_gproj_closure(capsys, files):
    code, rep = run_json(capsys, "gproj", "closure", "--seeds", files["seeds"])
    assert code == 0
    assert len(rep["result"]["members"]) == 3
    code, rep = run_json(capsys, "gproj", "closure", "--seeds", files["seeds"], "--max-steps", "1")
    assert code == 3 and rep["result"]["closure_status"]["kind"] == "NotClosed"


def test_rd_and_domdim(capsys, files):
    code, rep = run_json(capsys, "rd", files["gen"])
    assert code == 0 and rep["result"]["rigidity_degree"] == {"finite": 2}
    code, rep = run_json(capsys, "rd", files["reg"])
    assert "infinite" in rep["result"]["rigidity_degree"]
    assert recheck_report(rep) == 1
    code, rep = run_json(capsys, "domdim", files["s1"], "--relative-to", files["reg"], "--cutoff", "8")
    assert code == 0 and "infinite" in rep["result"]["t_domdim"]
    assert recheck_report(rep) == 1


def test_grigdim_with_and_without_set(capsys, files, tmp_path):
    code, rep = run_json(capsys, "grigdim", "N(3,2)")
    assert code == 0
    assert rep["result"]["strict_value"] == {"finite": 4}
    assert rep["result"]["full_generator_value"] == {"finite": 2}
    set_doc = {"algebra": "N(3,2)", "members": [json.loads(open(files["s1"]).read())], "completeness": "asserted"}
    p = tmp_path / "set.json"
    p.write_text(json.dumps(set_doc))
    code, rep = run_json(capsys, "grigdim", "N(3,2)", "--set", str(p))
    assert code == 0 and rep["result"]["completeness"] == "UserAsserted"
    assert len(rep["result"]["gproj_set"]["members"]) == 3
    code, rep = run_json(capsys, "grigdim", "T2(Q)")
    assert code == 0 and rep["result"]["strict_value"] == "DegenerateCMFree"


def test_bad_set_document(capsys, tmp_path):
    p = tmp_path / "set.json"
    p.write_text(json.dumps({"members": 3}))
    code, rep = run_json(capsys, "grigdim", "N(3,2)", "--set", str(p))
    assert code == 2 and rep["error"]["type"] == "MalformedDoc"


@pytest.mark.parametrize("argv,dim", [
    (["construct", "product", "N(3,2)", "D2"], 8),
    (["construct", "tensor", "N(2,2)", "D2"], 8),
    (["construct", "corner", "N(3,2)", "--e", "idem:0,1"], 3),
    (["construct", "morita-context", "N(3,2)", "--e", "idem:0", "--f", "idem:2"], None),
    (["construct", "morita-context", "N(3,2)", "--e", "0", "--f", "0"], 12),
])
def test_construct(capsys, argv, dim):
    code, rep = run_json(capsys, *argv)
    assert code == 0
    if dim is not None:
        assert rep["result"]["dim"] == dim
    assert rep["result"]["algebra"]["kind"] in ("bound_quiver", "structure_constants")


def test_construct_endo(capsys, files):
    code, rep = run_json(capsys, "construct", "endo", files["gen"])
    assert code == 0 and rep["result"]["dim"] == 9


def test_construct_context_not_zero(capsys):
    code, rep = run_json(capsys, "construct", "morita-context", "D2", "--e", "idem:0", "--f", "idem:0")
    assert code == 2 and rep["error"]["type"] == "ContextNotZero"


@pytest.mark.parametrize("argv", [
    ["verify", "lemma33", "N(3,2)"],
    ["verify", "prop35-product", "N(3,2)", "D2"],
    ["verify", "prop35-tensor", "D2", "N(2,2)", "--cutoff", "8"],
    ["verify", "prop35-morita", "N(3,2)"],
    ["verify", "ex38", "D2"],
    ["verify", "ex310", "N(3,2)", "--e", "idem:0", "--f", "idem:2"],
    ["verify", "gendo", "N(3,2)", "--e", "idem:0,1,2", "--n", "5"],
])
def test_verify_commands_hold(capsys, argv):
    code, rep = run_json(capsys, *argv)
    assert code == 0, rep
    assert rep["result"]["holds"] is True
    recheck_report(rep)


def test_verify_gendo_with_generator(capsys, files):
    code, rep = run_json(capsys, "verify", "gendo", "--generator", files["s1"], "--n", "4")
    assert code == 0 and rep["result"]["holds"]


def test_verify_exactness_identity_cm_free_is_input_error(capsys):
    code, rep = run_json(capsys, "verify", "lemma33", "T2(Q)")
    assert code == 2


def test_verify_uncertified_module_is_inconclusive(capsys, tmp_path, corpus):
    t2 = corpus("T2(Q)")
    x = [m for m in simple_modules(t2) if not is_projective(m)][0]
    p = tmp_path / "x.json"
    p.write_text(dump_json(module_to_doc(x)))
    code, rep = run_json(capsys, "verify", "lemma33", "T2(Q)", "--module", str(p))
    assert code == 3 and rep["error"]["type"] == "CertificationUnknown"


def test_input_errors(capsys, tmp_path):
    code, rep = run_json(capsys, "validate", "no-such-algebra")
    assert code == 2 and rep["error"]["type"] == "MalformedDoc"
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    code, rep = run_json(capsys, "rd", str(bad), "--algebra", "D2")
    assert code == 2
    with pytest.raises(SystemExit) as exc:
        main(["nonsense"])
    assert exc.value.code == 2
    capsys.readouterr()


def test_inconclusive_split_exit_code(capsys, tmp_path):
    quaternions = {
        "kind": "structure_constants", "name": "H", "dim": 4, "unit": ["1", "0", "0", "0"],
        "mult": [[0, k, k, "1"] for k in range(4)] + [[k, 0, k, "1"] for k in range(1, 4)]
        + [[1, 1, 0, "-1"], [2, 2, 0, "-1"], [3, 3, 0, "-1"],
           [1, 2, 3, "1"], [2, 1, 3, "-1"], [2, 3, 1, "1"], [3, 2, 1, "-1"], [3, 1, 2, "1"], [1, 3, 2, "-1"]],
    }
    p = tmp_path / "h.json"
    p.write_text(json.dumps(quaternions))
    code, rep = run_json(capsys, "validate", str(p))
    assert code == 3 and rep["error"]["type"] == "NotSplit"


def test_markdown_report(capsys):
    code, out = run(capsys, "--format", "md", "verify", "ex38", "N(3,2)")
    assert code == 0
    assert out.startswith("# grig verify")
    assert "| lhs | relation | rhs | holds | note |" in out
    assert "caveat:" in out
    code, out = run(capsys, "rd", "--format", "md", "--algebra", "D2", "/nonexistent.json")
    assert code == 2 and "- error:" in out


def test_output_file(capsys, tmp_path):
    out = tmp_path / "r.json"
    assert main(["-o", str(out), "validate", "D2"]) == 0
    assert capsys.readouterr().out == ""
    assert json.loads(out.read_text())["result"]["dim"] == 2


def test_reports_are_deterministic_modulo_timestamp(capsys, files):
    argv = ["verify", "prop35-morita", "N(3,2)"]
    _, first = run_json(capsys, *argv)
    _, second = run_json(capsys, *argv)
    first.pop("timestamp")
    second.pop("timestamp")
    assert dump_json(first) == dump_json(second)


@pytest.mark.skipif(shutil.which("grig") is None, reason="console script not installed")
def test_console_script():
    proc = subprocess.run(["grig", "validate", "D2"], capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["result"]["dim"] == 2
