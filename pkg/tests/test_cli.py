"""End-to-end CLI coverage: every command, golden-report comparison,
and the exit-code contract."""

import json
from pathlib import Path

from comonoids.cli import main
from comonoids.documents import build, parse_doc

from conftest import compare_with_golden


def run(workdir, name, argv, expect=0):
    code = main(argv + ["--report", f"{name}.report.json"])
    assert code == expect, f"{name}: exit {code} != {expect}"
    report = json.loads(Path(f"{name}.report.json").read_text())
    compare_with_golden(report, name)
    return report


def load(path):
    return build(parse_doc(Path(path).read_bytes()))


def test_check(workdir):
    run(workdir, "check", ["check", "--in", "m2c.doc"])


def test_check_all_kinds(workdir):
    run(workdir, "check-kinds",
        ["check", "--in", "A.doc", "kc2.doc", "kc2h.doc", "regA.doc",
         "sw-carrier.doc", "mc.doc", "cc.doc", "vreg.doc", "span-x.doc"])


def test_coring_check(workdir):
    run(workdir, "coring-check",
        ["coring-check", "--in", "A.doc", "sw-carrier.doc", "sweedler.doc"])


def test_dual(workdir):
    run(workdir, "dual", ["dual", "--in", "m2c.doc", "--out", "m2.doc"])
    a = load("m2.doc")
    assert a.dim == 4


def test_comatrix_then_check(workdir):
    run(workdir, "comatrix",
        ["comatrix", "--field", "F2", "--n", "2", "--out", "mm.doc"])
    code = main(["check", "--in", "mm.doc"])
    assert code == 0


def test_presentation(workdir):
    run(workdir, "presentation",
        ["presentation", "--in", "g2.doc", "--out", "pres.doc"])


def test_generate_closure(workdir):
    rep = run(workdir, "generate-closure",
              ["generate-closure", "--in", "m2c.doc", "span-e11.doc",
               "--out", "closure.doc"])
    assert rep["data"]["dim"] == 4


def test_largest_sub(workdir):
    rep = run(workdir, "largest-sub",
              ["largest-sub", "--in", "m2c.doc", "window3.doc",
               "--out", "largest.doc"])
    assert rep["data"]["dim"] == 0


def test_equalizer(workdir):
    run(workdir, "equalizer",
        ["equalizer", "--in", "idmap.doc", "swapmap.doc", "g2.doc",
         "--out", "eq.doc"])


def test_coequalizer(workdir):
    run(workdir, "coequalizer",
        ["coequalizer", "--in", "idmap.doc", "swapmap.doc", "g2.doc",
         "--out", "coeq.doc"])
    q = load("coeq.doc")
    assert q.dim == 1


def test_coproduct(workdir):
    run(workdir, "coproduct",
        ["coproduct", "--in", "k.doc", "g2.doc", "--out", "cop.doc"])
    c = load("cop.doc")
    assert c.dim == 3


def test_colimit(workdir):
    run(workdir, "colimit",
        ["colimit", "--in", "span.doc", "apex.doc", "l.doc", "r.doc", "--out", "colim.doc"])
    c = load("colim.doc")
    assert c.dim == 3


def test_cofree_approx(workdir):
    rep = run(workdir, "cofree-approx",
              ["cofree-approx", "--field", "F2", "--vdim", "1",
               "--max-dim", "1", "--out", "cofree.doc"])
    assert rep["data"]["dim"] == 2
    assert rep["certificates"][0]["passed"]


def test_bounded_limit(workdir):
    rep = run(workdir, "bounded-limit",
              ["bounded-limit", "--in", "dia.doc", "a.doc", "b.doc",
               "--max-dim", "1", "--out", "blim.doc"])
    assert rep["certificates"][0]["passed"]


def test_enumerate(workdir):
    rep = run(workdir, "enumerate",
              ["enumerate", "--field", "F2", "--dim", "2", "--out", "enum.doc"])
    assert rep["data"]["count"] == 12
    assert Path("enum-0.doc").exists() and Path("enum-11.doc").exists()


def test_invariant_closure(workdir):
    run(workdir, "invariant-closure",
        ["invariant-closure", "--in", "A.doc", "sw-carrier.doc",
         "sweedler.doc", "seed-1x1.doc", "--out", "inv.doc"])


def test_cohn_saturate(workdir):
    rep = run(workdir, "cohn-saturate",
              ["cohn-saturate", "--in", "A.doc", "regA.doc", "span-x.doc",
               "--out", "sat.doc"])
    assert rep["data"]["dim"] == 2


def test_subcoring_closure(workdir):
    rep = run(workdir, "subcoring-closure",
              ["subcoring-closure", "--in", "A.doc", "sw-carrier.doc",
               "sweedler.doc", "seed-1x1.doc", "--out", "subcoring.doc"])
    assert all(c["passed"] for c in rep["certificates"])


def test_purity_reports_counterexample(workdir):
    rep = run(workdir, "purity",
              ["purity", "--in", "A.doc", "regA.doc", "span-x.doc",
               "--side", "left"])
    assert rep["data"]["pure"] is False
    assert "x1" in rep["data"]["witness"]


def test_antipode_success(workdir):
    run(workdir, "antipode",
        ["antipode", "--in", "kc2.doc", "--out", "hopf.doc"])
    h = load("hopf.doc")
    assert h.antipode.rows == 2


def test_antipode_not_hopf_exit2(workdir):
    rep = run(workdir, "antipode-fail",
              ["antipode", "--in", "im.doc", "--out", "nohopf.doc"], expect=2)
    assert not rep["certificates"][0]["passed"]


def test_smash(workdir):
    run(workdir, "smash",
        ["smash", "--in", "kc2.doc", "cc.doc", "--out", "smash.doc"])
    s = load("smash.doc")
    assert s.dim == 8


def test_module_closure(workdir):
    rep = run(workdir, "module-closure",
              ["module-closure", "--in", "kc2.doc", "mc.doc", "span-g.doc",
               "--out", "mclo.doc"])
    assert rep["data"]["dim"] == 2


def test_comodule_closure(workdir):
    run(workdir, "comodule-closure",
        ["comodule-closure", "--in", "kc2.doc", "cc.doc", "span-e11.doc",
         "--out", "cclo.doc"])


def test_coefficients_of_comodule(workdir):
    rep = run(workdir, "coefficients",
              ["coefficients", "--in", "kc2.doc", "vreg.doc",
               "--out", "coeffs.doc"])
    assert rep["data"]["dim"] == 2


def test_coefficients_regular_flag(workdir):
    rep = run(workdir, "coefficients-regular",
              ["coefficients", "--regular", "--in", "m2c.doc",
               "--out", "coeffs2.doc"])
    assert rep["data"]["dim"] == 4


def test_local_rep(workdir):
    rep = run(workdir, "local-rep",
              ["local-rep", "--in", "A.doc", "span-x.doc",
               "--functional", "0,1"])
    assert rep["data"]["rank"] <= 2


def test_local_rep_full_space(workdir):
    full = ["local-rep", "--in", "A.doc", "fullA.doc", "--functional", "0,1"]
    from comonoids.documents import canonical_bytes, doc_for
    from comonoids.exact import GF, Subspace
    Path("fullA.doc").write_bytes(canonical_bytes(
        doc_for(Subspace.full(GF(2), 2), "fullA")))
    rep = run(workdir, "local-rep-full", full)
    assert rep["data"]["rank"] == 2


def test_dualize_comodule(workdir):
    run(workdir, "dualize-comodule",
        ["dualize-comodule", "--in", "kc2h.doc", "kc2.doc", "vreg.doc",
         "--out", "vdual.doc"])


def test_endo_algebra(workdir):
    rep = run(workdir, "endo-algebra",
              ["endo-algebra", "--in", "kc2h.doc", "kc2.doc", "vreg.doc",
               "--out", "endo.doc"])
    assert all(c["passed"] for c in rep["certificates"])


def test_regular_embedding(workdir):
    # the regular coaction of KC2 on itself as a comodule algebra
    from comonoids.documents import canonical_bytes, doc_for
    from comonoids.families import cyclic_group_bialgebra
    from comonoids.exact import GF
    kc2 = cyclic_group_bialgebra(GF(2), 2)
    Path("kc2alg.doc").write_bytes(canonical_bytes(
        doc_for(kc2.algebra(), "kc2alg")))
    rep = run(workdir, "regular-embedding",
              ["regular-embedding", "--in", "kc2h.doc", "kc2alg.doc",
               "kc2.doc", "vreg.doc", "--out", "embed.doc"])
    assert all(c["passed"] for c in rep["certificates"])


def test_store_roundtrip(workdir):
    code = main(["store", "put", "--in", "m2c.doc", "--store", "st"])
    assert code == 0
    code = main(["store", "get", "--name", "m2c", "--store", "st",
                 "--out", "fetched.doc"])
    assert code == 0
    assert Path("fetched.doc").read_bytes() == Path("m2c.doc").read_bytes()
    code = main(["store", "list", "--store", "st"])
    assert code == 0


def test_store_collision_exit1(workdir):
    assert main(["store", "put", "--in", "m2c.doc", "--name", "x",
                 "--store", "st2"]) == 0
    assert main(["store", "put", "--in", "g2.doc", "--name", "x",
                 "--store", "st2"]) == 1
    assert main(["store", "put", "--in", "g2.doc", "--name", "x",
                 "--store", "st2", "--force"]) == 0


def test_malformed_input_exit1(workdir):
    Path("bad.doc").write_text("{broken")
    assert main(["check", "--in", "bad.doc"]) == 1
    assert main(["check", "--in", "missing.doc"]) == 1


def test_store_env_var_default(workdir, monkeypatch):
    monkeypatch.setenv("COMONOIDS_STORE", "envstore")
    assert main(["store", "put", "--in", "m2c.doc"]) == 0
    assert main(["store", "list"]) == 0
    assert (Path("envstore") / "names" / "m2c").exists()


def test_budget_flag_exit1(workdir):
    assert main(["enumerate", "--field", "F2", "--dim", "2",
                 "--budget", "5"]) == 1


def test_resolution_via_store(workdir):
    # morphism doc resolving its endpoints through the store
    assert main(["store", "put", "--in", "g2.doc", "--store", "st3"]) == 0
    code = main(["equalizer", "--in", "idmap.doc", "swapmap.doc",
                 "--store", "st3", "--out", "eq2.doc"])
    assert code == 0
