"""Batch command-line interface.

One command per invocation; inputs are document files (--in) plus named
references resolved through an optional store.  Every run can emit a
RunReport (--report): command, inputs with content digests, outputs,
certificate summaries, and wall time.  Exit codes: 0 success with all
certificates passing, 2 when a result was computed but a certificate
failed, 1 on malformed input.
"""

from __future__ import annotations

import argparse
import os
import sys
import time
from typing import Optional

from .documents import (
    Resolver,
    build,
    canonical_bytes,
    digest_of,
    doc_for,
    doc_for_comodule,
    doc_for_morphism,
    field_from_str,
    parse_doc,
)
from .errors import (
    BudgetExceeded,
    ComonoidsError,
    ConventionFailure,
    NameCollision,
    NotHopf,
    ParseError,
)
from .exact import Mat, Subspace, rank
from .coalgebras import (
    Algebra,
    Coalgebra,
    CoalgebraMorphism,
    check_algebra,
    check_coalgebra,
    comatrix_coalgebra,
    comatrix_presentation,
    dual_algebra,
    dual_coalgebra,
    enumerate_coalgebras,
    is_delta_stable,
    largest_subcoalgebra_in,
    subcoalgebra_generated,
)
from .corings import (
    Bimodule,
    Coring,
    check_bimodule,
    check_coring,
    cohn_saturate,
    invariant_closure,
    is_pure_submodule,
    purity_witness,
    subcoring_closure,
)
from .hopf import (
    Bialgebra,
    ComoduleAlgebra,
    ComoduleCoalgebra,
    ComoduleStructure,
    HopfAlgebra,
    ModuleCoalgebra,
    antipode_solve,
    check_bialgebra,
    check_comodule,
    check_comodule_algebra,
    check_comodule_coalgebra,
    check_hopf,
    check_module_coalgebra,
    coefficient_coalgebra,
    comodule_subcoalgebra_closure,
    dual_comodule,
    endomorphism_algebra,
    is_action_stable,
    is_coaction_stable,
    local_representativity,
    matrix_coalgebra_comodule,
    module_subcoalgebra_closure,
    regular_embedding,
    smash_coproduct,
)
from .limits import (
    BoundedClass,
    Diagram,
    EngineBudget,
    bounded_limit,
    coequalizer,
    cofree_approx,
    coproduct,
    equalizer,
    finite_colimit,
)
from .store import STORE_ENV_VAR, Store


class _Run:
    """Collects inputs, outputs, and certificates for one invocation."""

    def __init__(self, command: str, args):
        self.command = command
        self.args = args
        self.started = time.monotonic()
        self.inputs = []
        self.outputs = []
        self.certificates = []
        self.data = {}
        store_dir = getattr(args, "store", None) or os.environ.get(STORE_ENV_VAR)
        self.store = Store(store_dir) if store_dir else None
        self.resolver = Resolver(store=self.store)

    def load_inputs(self) -> list:
        objs = []
        for path in getattr(self.args, "inputs", None) or []:
            try:
                with open(path, "rb") as fh:
                    raw = fh.read()
            except OSError as exc:
                raise ParseError(f"cannot read {path}: {exc}") from exc
            doc = parse_doc(raw)
            self.resolver.add(doc)
            self.inputs.append({"name": doc.get("name", ""),
                                "digest": digest_of(doc)})
            objs.append(doc)
        return objs

    def certify(self, name: str, passed: bool, detail: str = ""):
        self.certificates.append({"name": name, "passed": bool(passed),
                                  "detail": detail})

    def write_doc(self, doc: dict, path: str):
        data = canonical_bytes(doc)
        with open(path, "wb") as fh:
            fh.write(data)
        self.outputs.append({"name": doc.get("name", ""), "file": path,
                             "digest": digest_of(doc)})
        if self.store is not None and doc.get("name"):
            self.store.put(data, doc["name"], force=True)

    def out_doc(self, obj, name_hint: str = "", suffix: str = "") -> Optional[str]:
        """Write obj as a document next to --out (with optional suffix)."""
        out = getattr(self.args, "out", None)
        if not out:
            return None
        path = out
        if suffix:
            stem, ext = os.path.splitext(out)
            path = f"{stem}.{suffix}{ext or '.doc'}"
        name = getattr(self.args, "name", None) or name_hint or \
            os.path.splitext(os.path.basename(path))[0]
        doc = doc_for(obj, name) if not isinstance(obj, dict) else obj
        doc["name"] = doc.get("name") or name
        self.write_doc(doc, path)
        return path

    def finish(self) -> int:
        report = {
            "command": self.command,
            "inputs": self.inputs,
            "outputs": self.outputs,
            "certificates": self.certificates,
            "data": self.data,
            "wall_time_s": round(time.monotonic() - self.started, 6),
        }
        path = getattr(self.args, "report", None)
        if path:
            with open(path, "wb") as fh:
                fh.write(canonical_bytes(report))
        failed = [c for c in self.certificates if not c["passed"]]
        for c in self.certificates:
            status = "pass" if c["passed"] else "FAIL"
            line = f"[{c['name']}] {status}"
            if c["detail"]:
                line += f": {c['detail']}"
            print(line)
        for key, value in self.data.items():
            if isinstance(value, (str, int, bool, float)):
                print(f"{key}: {value}")
        return 2 if failed else 0


def _first_of(objs, *types):
    for o in objs:
        if isinstance(o, types):
            return o
    raise ParseError(f"missing required input of kind {'/'.join(t.__name__ for t in types)}")


def _materialize(run: _Run, doc_list: list) -> list:
    return [build(d, run.resolver) for d in doc_list]


# ---------------------------------------------------------------------------
# command handlers


def _cmd_check(run: _Run) -> int:
    doc_list = run.load_inputs()
    if not doc_list:
        raise ParseError("check needs --in")
    for doc in doc_list:
        obj = build(doc, run.resolver)
        viols = _violations_for(doc["kind"], obj)
        detail = "" if not viols else "; ".join(str(v) for v in viols[:5])
        run.certify(f"axioms:{doc.get('name') or doc['kind']}", not viols, detail)
    return run.finish()


def _violations_for(kind: str, obj) -> list:
    if kind == "algebra":
        return check_algebra(obj)
    if kind == "coalgebra":
        return check_coalgebra(obj)
    if kind == "bialgebra":
        return check_bialgebra(obj)
    if kind == "hopf":
        return check_bialgebra(obj.bialgebra) + check_hopf(obj)
    if kind == "bimodule":
        return check_bimodule(obj)
    if kind == "coring":
        return check_coring(obj)
    if kind == "module-coalgebra":
        return check_module_coalgebra(obj)
    if kind == "comodule-coalgebra":
        return check_comodule_coalgebra(obj)
    if kind == "comodule":
        return check_comodule(obj)
    return []   # subspace/morphism/diagram validate structurally at build


def _cmd_dual(run: _Run) -> int:
    doc_list = run.load_inputs()
    objs = _materialize(run, doc_list)
    obj = _first_of(objs, Algebra, Coalgebra)
    if isinstance(obj, Algebra):
        out = dual_coalgebra(obj)
    else:
        out = dual_algebra(obj)
    run.out_doc(out, name_hint="dual")
    return run.finish()


def _cmd_comatrix(run: _Run) -> int:
    field = field_from_str(run.args.field)
    c = comatrix_coalgebra(run.args.n, field)
    run.certify("axioms", not check_coalgebra(c))
    run.out_doc(c, name_hint=f"M{run.args.n}c")
    return run.finish()


def _cmd_presentation(run: _Run) -> int:
    doc_list = run.load_inputs()
    objs = _materialize(run, doc_list)
    c = _first_of(objs, Coalgebra)
    n, mor = comatrix_presentation(c)
    run.data["n"] = n
    run.certify("surjective", rank(mor.matrix) == c.dim)
    run.certify("morphism", True)
    src_name = f"M{n}c"
    run.out_doc(doc_for(mor.source, src_name), name_hint=src_name)
    out = getattr(run.args, "out", None)
    if out:
        mdoc = doc_for_morphism(mor.matrix, src_name,
                                doc_list[0].get("name", ""), name="presentation")
        run.out_doc(mdoc, suffix="map")
    return run.finish()


def _cmd_generate_closure(run: _Run) -> int:
    doc_list = run.load_inputs()
    objs = _materialize(run, doc_list)
    c = _first_of(objs, Coalgebra)
    s = _first_of(objs, Subspace)
    w = subcoalgebra_generated(c, s)
    run.certify("delta-stable", is_delta_stable(c, w))
    run.certify("contains-seed", w.contains(s))
    run.data["dim"] = w.dim
    run.out_doc(w, name_hint="closure")
    return run.finish()


def _cmd_largest_sub(run: _Run) -> int:
    doc_list = run.load_inputs()
    objs = _materialize(run, doc_list)
    c = _first_of(objs, Coalgebra)
    s = _first_of(objs, Subspace)
    w = largest_subcoalgebra_in(c, s)
    run.certify("delta-stable", is_delta_stable(c, w))
    run.certify("inside-window", s.contains(w))
    run.data["dim"] = w.dim
    run.out_doc(w, name_hint="largest")
    return run.finish()


def _parallel_pair(run: _Run, objs) -> tuple:
    morphisms = [o for o in objs if isinstance(o, CoalgebraMorphism)]
    if len(morphisms) < 2:
        raise ParseError("need two morphism documents")
    return morphisms[0], morphisms[1]


def _cmd_equalizer(run: _Run) -> int:
    doc_list = run.load_inputs()
    objs = _materialize(run, doc_list)
    f, g = _parallel_pair(run, objs)
    e, incl = equalizer(f, g)
    run.certify("inclusion-morphism", True)
    run.data["dim"] = e.dim
    run.out_doc(e, name_hint="equalizer")
    if getattr(run.args, "out", None):
        mdoc = doc_for_morphism(incl.matrix, "equalizer", "", name="inclusion")
        run.out_doc(mdoc, suffix="incl")
    return run.finish()


def _cmd_coequalizer(run: _Run) -> int:
    doc_list = run.load_inputs()
    objs = _materialize(run, doc_list)
    f, g = _parallel_pair(run, objs)
    q, proj = coequalizer(f, g)
    expected = f.target.dim - rank(f.matrix - g.matrix)
    run.certify("projection-morphism", True)
    run.certify("quotient-dimension", q.dim == expected,
                f"dim {q.dim} expected {expected}")
    run.out_doc(q, name_hint="coequalizer")
    if getattr(run.args, "out", None):
        mdoc = doc_for_morphism(proj.matrix, "", "coequalizer", name="projection")
        run.out_doc(mdoc, suffix="proj")
    return run.finish()


def _cmd_coproduct(run: _Run) -> int:
    doc_list = run.load_inputs()
    objs = _materialize(run, doc_list)
    cs = [o for o in objs if isinstance(o, Coalgebra)]
    if len(cs) < 2:
        raise ParseError("coproduct needs two coalgebra documents")
    big, i1, i2 = coproduct(cs[0], cs[1])
    run.certify("injections-are-morphisms", True)
    run.data["dim"] = big.dim
    run.out_doc(big, name_hint="coproduct")
    if getattr(run.args, "out", None):
        run.out_doc(doc_for_morphism(i1.matrix, doc_list[0].get("name", ""),
                                     "coproduct", name="inj1"), suffix="inj1")
        run.out_doc(doc_for_morphism(i2.matrix, doc_list[1].get("name", ""),
                                     "coproduct", name="inj2"), suffix="inj2")
    return run.finish()


def _cmd_colimit(run: _Run) -> int:
    doc_list = run.load_inputs()
    objs = _materialize(run, doc_list)
    d = _first_of(objs, Diagram)
    res = finite_colimit(d)
    run.certify("cocone-morphisms", True)
    run.data["dim"] = res.coalgebra.dim
    run.out_doc(res.coalgebra, name_hint="colimit")
    if getattr(run.args, "out", None):
        for lab, leg in sorted(res.cocone.items()):
            run.out_doc(doc_for_morphism(leg.matrix, lab, "colimit",
                                         name=f"leg-{lab}"), suffix=f"leg-{lab}")
    return run.finish()


def _engine_budget(run: _Run) -> EngineBudget:
    budget = getattr(run.args, "budget", None)
    if budget:
        return EngineBudget(max_objects=budget, max_total_dim=4096,
                            hom_budget=1 << 22, enum_budget=budget)
    return EngineBudget()


def _cmd_cofree_approx(run: _Run) -> int:
    run.load_inputs()
    field = field_from_str(run.args.field)
    cls = BoundedClass.build(field, run.args.max_dim)
    res = cofree_approx(run.args.vdim, cls, _engine_budget(run))
    cert = res.certificate
    run.certify("finality", cert.ok, cert.summary())
    run.data["dim"] = res.coalgebra.dim
    run.data["objects"] = len(res.objects)
    run.data["p0"] = [[field.render(x) for x in row] for row in res.p0.data]
    run.out_doc(res.coalgebra, name_hint="cofree")
    return run.finish()


def _cmd_bounded_limit(run: _Run) -> int:
    doc_list = run.load_inputs()
    objs = _materialize(run, doc_list)
    d = _first_of(objs, Diagram)
    field = field_from_str(run.args.field) if run.args.field else cls_field_of(d)
    cls = BoundedClass.build(field, run.args.max_dim)
    res = bounded_limit(d, cls, _engine_budget(run))
    run.certify("finality", res.certificate.ok, res.certificate.summary())
    run.data["dim"] = res.coalgebra.dim
    run.out_doc(res.coalgebra, name_hint="limit")
    if getattr(run.args, "out", None):
        for lab, leg in sorted(res.cone.items()):
            run.out_doc(doc_for_morphism(leg.matrix, "limit", lab,
                                         name=f"cone-{lab}"), suffix=f"cone-{lab}")
    return run.finish()


def cls_field_of(d: Diagram):
    fields = d.fields()
    if not fields:
        raise ParseError("empty diagram: pass --field explicitly")
    return fields.pop()


def _cmd_enumerate(run: _Run) -> int:
    field = field_from_str(run.args.field)
    budget = run.args.budget or 2_000_000
    found = enumerate_coalgebras(field, run.args.dim, budget)
    run.data["count"] = len(found)
    out = getattr(run.args, "out", None)
    if out:
        stem, ext = os.path.splitext(out)
        for i, c in enumerate(found):
            doc = doc_for(c, c.name)
            path = f"{stem}-{i}{ext or '.doc'}"
            run.write_doc(doc, path)
    return run.finish()


def _cmd_invariant_closure(run: _Run) -> int:
    doc_list = run.load_inputs()
    objs = _materialize(run, doc_list)
    c = _first_of(objs, Coring)
    s = _first_of(objs, Subspace)
    w = invariant_closure(c, s)
    from .corings import is_invariant
    run.certify("invariant", is_invariant(c, w))
    run.data["dim"] = w.dim
    run.out_doc(w, name_hint="invariant-closure")
    return run.finish()


def _cmd_cohn_saturate(run: _Run) -> int:
    doc_list = run.load_inputs()
    objs = _materialize(run, doc_list)
    m = _first_of(objs, Bimodule)
    s = _first_of(objs, Subspace)
    bound = (run.args.bound, run.args.bound)
    w = cohn_saturate(m, s, bound)
    pl = is_pure_submodule(m, w, "left")
    pr = is_pure_submodule(m, w, "right")
    run.certify("pure-after-saturation", pl and pr,
                "" if (pl and pr) else "bound too small")
    run.data["dim"] = w.dim
    run.out_doc(w, name_hint="saturation")
    return run.finish()


def _cmd_subcoring_closure(run: _Run) -> int:
    doc_list = run.load_inputs()
    objs = _materialize(run, doc_list)
    c = _first_of(objs, Coring)
    s = _first_of(objs, Subspace)
    bound = (run.args.bound, run.args.bound)
    w, report = subcoring_closure(c, s, bound)
    run.certify("invariant", report.invariant)
    run.certify("pure-left", report.pure_left)
    run.certify("pure-right", report.pure_right)
    run.certify("tensor-square-injective", report.tensor_square_injective)
    run.certify("bound-sufficient", report.bound_sufficient)
    run.data["dim"] = w.dim
    run.out_doc(w, name_hint="subcoring")
    return run.finish()


def _cmd_purity(run: _Run) -> int:
    doc_list = run.load_inputs()
    objs = _materialize(run, doc_list)
    m = _first_of(objs, Bimodule)
    s = _first_of(objs, Subspace)
    side = run.args.side
    pure = is_pure_submodule(m, s, side)
    run.data["pure"] = pure
    if not pure:
        witness = purity_witness(m, s, side, (run.args.bound, run.args.bound))
        run.data["witness"] = witness.render(m.base) if witness else "none within bound"
    return run.finish()


def _cmd_antipode(run: _Run) -> int:
    doc_list = run.load_inputs()
    objs = _materialize(run, doc_list)
    b = _first_of(objs, Bialgebra)
    try:
        s = antipode_solve(b)
    except NotHopf as exc:
        run.certify("antipode-exists", False, str(exc))
        return run.finish()
    run.certify("antipode-exists", True)
    h = HopfAlgebra(b, s)
    run.out_doc(h, name_hint="hopf")
    return run.finish()


def _cmd_smash(run: _Run) -> int:
    doc_list = run.load_inputs()
    objs = _materialize(run, doc_list)
    cc = _first_of(objs, ComoduleCoalgebra)
    try:
        out = smash_coproduct(cc.h, cc)
    except ConventionFailure as exc:
        run.certify("axioms", False, str(exc))
        return run.finish()
    run.certify("axioms", True)
    run.data["dim"] = out.dim
    run.out_doc(out, name_hint="smash")
    return run.finish()


def _cmd_module_closure(run: _Run) -> int:
    doc_list = run.load_inputs()
    objs = _materialize(run, doc_list)
    mc = _first_of(objs, ModuleCoalgebra)
    s = _first_of(objs, Subspace)
    w = module_subcoalgebra_closure(mc, s)
    run.certify("action-stable", is_action_stable(mc, w))
    run.certify("delta-stable", is_delta_stable(mc.c, w))
    run.certify("contains-seed", w.contains(s))
    run.data["dim"] = w.dim
    run.out_doc(w, name_hint="module-closure")
    return run.finish()


def _cmd_comodule_closure(run: _Run) -> int:
    doc_list = run.load_inputs()
    objs = _materialize(run, doc_list)
    cc = _first_of(objs, ComoduleCoalgebra)
    s = _first_of(objs, Subspace)
    w = comodule_subcoalgebra_closure(cc, s)
    run.certify("coaction-stable", is_coaction_stable(cc, w))
    run.certify("delta-stable", is_delta_stable(cc.c, w))
    run.certify("contains-seed", w.contains(s))
    run.data["dim"] = w.dim
    run.out_doc(w, name_hint="comodule-closure")
    return run.finish()


def _cmd_coefficients(run: _Run) -> int:
    doc_list = run.load_inputs()
    objs = _materialize(run, doc_list)
    if getattr(run.args, "regular", False):
        c = _first_of(objs, Coalgebra)
        m = ComoduleStructure(c, c.dim, c.delta)
    else:
        m = _first_of(objs, ComoduleStructure)
    w = coefficient_coalgebra(m)
    run.certify("delta-stable", is_delta_stable(m.coeffs, w))
    run.data["dim"] = w.dim
    run.out_doc(w, name_hint="coefficients")
    return run.finish()


def _cmd_local_rep(run: _Run) -> int:
    doc_list = run.load_inputs()
    objs = _materialize(run, doc_list)
    a = _first_of(objs, Algebra)
    v = _first_of(objs, Subspace)
    entries = [x.strip() for x in run.args.functional.split(",")]
    f = Mat.row_vector(a.field, [a.field.parse(x) for x in entries])
    pairs = local_representativity(a, f, v)
    run.certify("identity-on-v", True)
    run.data["rank"] = len(pairs)
    run.data["pairs"] = [
        {"g": [a.field.render(x) for x in g.row(0)],
         "h": [a.field.render(x) for x in h.row(0)]}
        for g, h in pairs
    ]
    return run.finish()


def _cmd_dualize_comodule(run: _Run) -> int:
    doc_list = run.load_inputs()
    objs = _materialize(run, doc_list)
    h = _first_of(objs, HopfAlgebra)
    m = _first_of(objs, ComoduleStructure)
    out = dual_comodule(h, m)
    run.certify("comodule-axioms", not check_comodule(out))
    hopf_name = next((d.get("name", "") for d in doc_list if d["kind"] == "hopf"), "")
    if getattr(run.args, "out", None):
        doc = doc_for_comodule(out, hopf_name, name="dual-comodule")
        run.out_doc(doc, name_hint="dual-comodule")
    return run.finish()


def _cmd_endo_algebra(run: _Run) -> int:
    doc_list = run.load_inputs()
    objs = _materialize(run, doc_list)
    h = _first_of(objs, HopfAlgebra)
    m = _first_of(objs, ComoduleStructure)
    endo = endomorphism_algebra(h, m)
    comat = matrix_coalgebra_comodule(h, m)
    run.certify("endo-axioms", not check_algebra(endo.algebra))
    run.certify("endo-colinear", endo.mult_colinear and endo.unit_colinear)
    run.certify("comatrix-axioms", not check_coalgebra(comat.coalgebra))
    run.certify("comatrix-colinear", comat.delta_colinear and comat.counit_colinear)
    hopf_name = next((d.get("name", "") for d in doc_list if d["kind"] == "hopf"), "")
    run.out_doc(endo.algebra, name_hint="endo")
    if getattr(run.args, "out", None):
        run.out_doc(doc_for_comodule(endo.comodule, hopf_name, name="endo-coaction"),
                    suffix="coaction")
    return run.finish()


def _cmd_regular_embedding(run: _Run) -> int:
    doc_list = run.load_inputs()
    objs = _materialize(run, doc_list)
    h = _first_of(objs, HopfAlgebra)
    a = _first_of(objs, Algebra)
    m = _first_of(objs, ComoduleStructure)
    ca = ComoduleAlgebra(h.bialgebra, a, m.rho)
    viols = check_comodule_algebra(ca)
    if viols:
        raise ParseError(f"input is not a comodule algebra: {viols[:3]}")
    emb = regular_embedding(h, ca)
    run.certify("algebra-morphism", emb.algebra_morphism)
    run.certify("colinear", emb.colinear)
    run.certify("injective", emb.injective)
    if getattr(run.args, "out", None):
        a_name = next((d.get("name", "") for d in doc_list if d["kind"] == "algebra"), "")
        run.out_doc(doc_for_morphism(emb.matrix, a_name, "endo", name="embedding"),
                    name_hint="embedding")
    return run.finish()


def _cmd_store(run: _Run) -> int:
    if run.store is None:
        raise ParseError("store commands need --store or " + STORE_ENV_VAR)
    action = run.args.action
    if action == "put":
        if not run.args.inputs:
            raise ParseError("store put needs --in")
        for path in run.args.inputs:
            with open(path, "rb") as fh:
                raw = fh.read()
            doc = parse_doc(raw)
            name = run.args.name or doc.get("name") or \
                os.path.splitext(os.path.basename(path))[0]
            digest = run.store.put(canonical_bytes(doc), name,
                                   force=run.args.force)
            run.data[name] = digest
    elif action == "get":
        key = run.args.name
        if not key:
            raise ParseError("store get needs --name")
        data = run.store.get(key)
        if data is None:
            raise ParseError(f"no object named {key!r}")
        out = getattr(run.args, "out", None)
        if out:
            with open(out, "wb") as fh:
                fh.write(data)
            run.outputs.append({"name": key, "file": out,
                                "digest": digest_of(parse_doc(data))})
        else:
            sys.stdout.write(data.decode("utf-8"))
    elif action == "list":
        names = run.store.list_names()
        run.data["names"] = names
        for n in names:
            print(n)
    else:
        raise ParseError(f"unknown store action {action!r}")
    return run.finish()


_HANDLERS = {
    "check": _cmd_check,
    "dual": _cmd_dual,
    "comatrix": _cmd_comatrix,
    "presentation": _cmd_presentation,
    "generate-closure": _cmd_generate_closure,
    "largest-sub": _cmd_largest_sub,
    "equalizer": _cmd_equalizer,
    "coequalizer": _cmd_coequalizer,
    "coproduct": _cmd_coproduct,
    "colimit": _cmd_colimit,
    "cofree-approx": _cmd_cofree_approx,
    "bounded-limit": _cmd_bounded_limit,
    "enumerate": _cmd_enumerate,
    "coring-check": _cmd_check,
    "invariant-closure": _cmd_invariant_closure,
    "cohn-saturate": _cmd_cohn_saturate,
    "subcoring-closure": _cmd_subcoring_closure,
    "purity": _cmd_purity,
    "antipode": _cmd_antipode,
    "smash": _cmd_smash,
    "module-closure": _cmd_module_closure,
    "comodule-closure": _cmd_comodule_closure,
    "coefficients": _cmd_coefficients,
    "local-rep": _cmd_local_rep,
    "dualize-comodule": _cmd_dualize_comodule,
    "endo-algebra": _cmd_endo_algebra,
    "regular-embedding": _cmd_regular_embedding,
    "store": _cmd_store,
}


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="comonoids",
        description="Exact computations with finite-dimensional comonoids.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, out=True):
        p.add_argument("--in", dest="inputs", nargs="*", default=[],
                       help="input document files")
        if out:
            p.add_argument("--out", help="output document file")
        p.add_argument("--report", help="write the run report here")
        p.add_argument("--store", help="object store directory")
        p.add_argument("--name", help="name for the output document")
        p.add_argument("--budget", type=int, help="enumeration budget cap")

    for cmd in ("check", "coring-check", "dual", "generate-closure",
                "largest-sub", "equalizer", "coequalizer", "coproduct",
                "colimit", "invariant-closure", "subcoring-closure",
                "antipode", "smash", "module-closure", "comodule-closure",
                "presentation"):
        p = sub.add_parser(cmd)
        common(p)
        if cmd in ("subcoring-closure", "invariant-closure"):
            p.add_argument("--bound", type=int, default=2,
                           help="Cohn system size cap")

    p = sub.add_parser("comatrix")
    common(p)
    p.add_argument("--field", required=True)
    p.add_argument("--n", type=int, required=True)

    p = sub.add_parser("cofree-approx")
    common(p)
    p.add_argument("--field", required=True)
    p.add_argument("--vdim", type=int, required=True)
    p.add_argument("--max-dim", dest="max_dim", type=int, required=True)

    p = sub.add_parser("bounded-limit")
    common(p)
    p.add_argument("--field")
    p.add_argument("--max-dim", dest="max_dim", type=int, required=True)

    p = sub.add_parser("enumerate")
    common(p)
    p.add_argument("--field", required=True)
    p.add_argument("--dim", type=int, required=True)

    p = sub.add_parser("cohn-saturate")
    common(p)
    p.add_argument("--bound", type=int, default=2)

    p = sub.add_parser("purity")
    common(p, out=False)
    p.add_argument("--side", choices=("left", "right"), default="left")
    p.add_argument("--bound", type=int, default=2)

    p = sub.add_parser("coefficients")
    common(p)
    p.add_argument("--regular", action="store_true",
                   help="use the regular comodule of a coalgebra input")

    p = sub.add_parser("local-rep")
    common(p, out=False)
    p.add_argument("--functional", required=True,
                   help="comma-separated coordinates of the functional")

    for cmd in ("dualize-comodule", "endo-algebra", "regular-embedding"):
        p = sub.add_parser(cmd)
        common(p)

    p = sub.add_parser("store")
    p.add_argument("action", choices=("put", "get", "list"))
    common(p)
    p.add_argument("--force", action="store_true",
                   help="allow rebinding a name to new content")
    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    run = _Run(args.command, args)
    handler = _HANDLERS[args.command]
    try:
        return handler(run)
    except (ParseError, NameCollision, BudgetExceeded, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ComonoidsError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
