"""Text documents for every object kind, with canonical bytes.

Documents are JSON with sorted keys, two-space indent, and a trailing
newline; scalars are canonical strings (decimal integers, or "a/b" in
lowest terms over the rationals; integers in [0, p) over prime fields).
Structure 3-tensors are sorted sparse [i, j, k, value] quadruples;
matrices and vectors are dense string arrays.  Printing a parsed
canonical document reproduces it byte for byte.

Documents refer to other documents by name (bimodule -> base algebra,
coring -> carrier, acted coalgebras -> acting bialgebra, diagrams ->
objects); a Resolver supplies those.
"""

from __future__ import annotations

import hashlib
import json
from typing import Optional

from .errors import ParseError
from .exact import Field, GF, QQ, Mat, Subspace
from .coalgebras import Algebra, Coalgebra, CoalgebraMorphism
from .corings import Bimodule, Coring, tensor_over_A
from .hopf import (
    Bialgebra,
    ComoduleCoalgebra,
    ComoduleStructure,
    HopfAlgebra,
    ModuleCoalgebra,
)
from .limits import ConstraintProblem, Diagram

SCHEMA_VERSION = 1

KINDS = (
    "algebra", "coalgebra", "bimodule", "coring", "bialgebra", "hopf",
    "module-coalgebra", "comodule-coalgebra", "comodule", "morphism",
    "diagram", "constraint-problem", "subspace",
)


def field_to_str(f: Field) -> str:
    return "Q" if f.p is None else f"F{f.p}"


def field_from_str(s: str) -> Field:
    s = s.strip()
    if s == "Q":
        return QQ
    if s.startswith("Fp:"):
        return GF(int(s[3:]))
    if s.startswith("F"):
        return GF(int(s[1:]))
    raise ParseError(f"unknown field spec {s!r}")


def _render_matrix(field: Field, m: Mat) -> list:
    return [[field.render(x) for x in row] for row in m.data]


def _parse_matrix(field: Field, rows, n_rows: int, n_cols: int) -> Mat:
    if len(rows) != n_rows or any(len(r) != n_cols for r in rows):
        raise ParseError(f"matrix must be {n_rows} x {n_cols}")
    try:
        return Mat(field, [[field.parse(x) for x in row] for row in rows],
                   n_rows, n_cols)
    except (ValueError, TypeError) as exc:
        raise ParseError(f"bad scalar in matrix: {exc}") from exc


def _render_vector(field: Field, vec) -> list:
    return [field.render(x) for x in vec]


def _parse_vector(field: Field, entries, length: int) -> list:
    if len(entries) != length:
        raise ParseError(f"vector must have length {length}")
    try:
        return [field.parse(x) for x in entries]
    except (ValueError, TypeError) as exc:
        raise ParseError(f"bad scalar in vector: {exc}") from exc


def _render_triples(field: Field, triples) -> list:
    return [[i, j, k, field.render(v)] for (i, j, k, v) in sorted(
        (t[0], t[1], t[2], t[3]) for t in triples)]


def _triples_to_tensor(field: Field, triples, dim: int):
    tensor = [[[field.zero for _ in range(dim)] for _ in range(dim)]
              for _ in range(dim)]
    for entry in triples:
        if len(entry) != 4:
            raise ParseError("tensor entries are [i, j, k, value]")
        i, j, k, v = entry
        if not all(isinstance(t, int) and 0 <= t < dim for t in (i, j, k)):
            raise ParseError(f"tensor index out of range: {entry}")
        tensor[i][j][k] = field.parse(v)
    return tensor


def _action_triples(field: Field, mat: Mat, d_outer: int, d_inner: int) -> list:
    """Triples (i, j, k, v) for an action/coaction matrix, column (i, j)."""
    out = []
    for i in range(d_outer):
        for j in range(d_inner):
            col = mat.col(i * d_inner + j)
            for k, v in enumerate(col):
                if v:
                    out.append((i, j, k, v))
    return out


# ---------------------------------------------------------------------------
# object -> document


def doc_for(obj, name: str = "") -> dict:
    """The document dictionary for a library object."""
    if isinstance(obj, HopfAlgebra):
        return _doc_hopf(obj, name)
    if isinstance(obj, Bialgebra):
        return _doc_bialgebra(obj, name)
    if isinstance(obj, Algebra):
        return {
            "schema": SCHEMA_VERSION, "kind": "algebra", "name": name or obj.name,
            "field": field_to_str(obj.field),
            "payload": {
                "dim": obj.dim,
                "mult": _render_triples(obj.field, obj.mult_triples()),
                "unit": _render_vector(obj.field, obj.unit_vec()),
            },
        }
    if isinstance(obj, Coalgebra):
        return {
            "schema": SCHEMA_VERSION, "kind": "coalgebra", "name": name or obj.name,
            "field": field_to_str(obj.field),
            "payload": {
                "dim": obj.dim,
                "delta": _render_triples(obj.field, obj.delta_triples()),
                "counit": _render_vector(obj.field, obj.counit_vec()),
            },
        }
    if isinstance(obj, Subspace):
        return {
            "schema": SCHEMA_VERSION, "kind": "subspace", "name": name,
            "field": field_to_str(obj.field),
            "payload": {
                "ambient": obj.ambient,
                "basis": _render_matrix(obj.field, obj.basis),
            },
        }
    raise TypeError(f"no document form for {type(obj).__name__}")


def doc_for_morphism(m: Mat, source_name: str, target_name: str,
                     name: str = "") -> dict:
    return {
        "schema": SCHEMA_VERSION, "kind": "morphism", "name": name,
        "field": field_to_str(m.field),
        "payload": {
            "source": source_name, "target": target_name,
            "rows": m.rows, "cols": m.cols,
            "matrix": _render_matrix(m.field, m),
        },
    }


def doc_for_bimodule(b: Bimodule, base_name: str, name: str = "") -> dict:
    field = b.field
    left = []
    right = []
    for i in range(b.base.dim):
        for j in range(b.dim):
            for k, v in enumerate(b.left_mats[i].col(j)):
                if v:
                    left.append((i, j, k, v))
            for k, v in enumerate(b.right_mats[i].col(j)):
                if v:
                    right.append((j, i, k, v))
    return {
        "schema": SCHEMA_VERSION, "kind": "bimodule", "name": name or b.name,
        "field": field_to_str(field),
        "payload": {
            "base": base_name,
            "dim": b.dim,
            "left": _render_triples(field, left),
            "right": _render_triples(field, right),
        },
    }


def doc_for_coring(c: Coring, carrier_name: str, name: str = "") -> dict:
    field = c.field
    return {
        "schema": SCHEMA_VERSION, "kind": "coring", "name": name or c.name,
        "field": field_to_str(field),
        "payload": {
            "carrier": carrier_name,
            "delta": _render_matrix(field, c.delta),
            "counit": _render_matrix(field, c.counit),
        },
    }


def _doc_bialgebra(b: Bialgebra, name: str = "") -> dict:
    return {
        "schema": SCHEMA_VERSION, "kind": "bialgebra", "name": name or b.name,
        "field": field_to_str(b.field),
        "payload": {
            "dim": b.dim,
            "mult": _render_triples(b.field, b.algebra().mult_triples()),
            "unit": _render_vector(b.field, b.algebra().unit_vec()),
            "delta": _render_triples(b.field, b.coalgebra().delta_triples()),
            "counit": _render_vector(b.field, b.coalgebra().counit_vec()),
        },
    }


def _doc_hopf(h: HopfAlgebra, name: str = "") -> dict:
    doc = _doc_bialgebra(h.bialgebra, name)
    doc["kind"] = "hopf"
    doc["payload"]["antipode"] = _render_matrix(h.field, h.antipode)
    return doc


def doc_for_module_coalgebra(mc: ModuleCoalgebra, h_name: str, name: str = "") -> dict:
    field = mc.h.field
    return {
        "schema": SCHEMA_VERSION, "kind": "module-coalgebra", "name": name,
        "field": field_to_str(field),
        "payload": {
            "bialgebra": h_name,
            "dim": mc.c.dim,
            "delta": _render_triples(field, mc.c.delta_triples()),
            "counit": _render_vector(field, mc.c.counit_vec()),
            "action": _render_triples(
                field, _action_triples(field, mc.action, mc.h.dim, mc.c.dim)),
        },
    }


def doc_for_comodule_coalgebra(cc: ComoduleCoalgebra, h_name: str,
                               name: str = "") -> dict:
    field = cc.h.field
    triples = []
    for i in range(cc.c.dim):
        for (j, k), v in sorted(cc.rho_col(i).items()):
            triples.append((i, j, k, v))
    return {
        "schema": SCHEMA_VERSION, "kind": "comodule-coalgebra", "name": name,
        "field": field_to_str(field),
        "payload": {
            "bialgebra": h_name,
            "dim": cc.c.dim,
            "delta": _render_triples(field, cc.c.delta_triples()),
            "counit": _render_vector(field, cc.c.counit_vec()),
            "coaction": _render_triples(field, triples),
        },
    }


def doc_for_comodule(m: ComoduleStructure, coeffs_name: str, name: str = "") -> dict:
    field = m.coeffs.field
    triples = []
    for j in range(m.dim):
        for (i, k), v in sorted(m.rho_col(j).items()):
            triples.append((j, i, k, v))
    return {
        "schema": SCHEMA_VERSION, "kind": "comodule", "name": name,
        "field": field_to_str(field),
        "payload": {
            "coefficients": coeffs_name,
            "dim": m.dim,
            "coaction": _render_triples(field, triples),
        },
    }


def doc_for_diagram(d: Diagram, name: str = "") -> dict:
    fields = d.fields()
    field = fields.pop() if fields else QQ
    return {
        "schema": SCHEMA_VERSION, "kind": "diagram", "name": name,
        "field": field_to_str(field),
        "payload": {
            "objects": [lab for lab, _ in d.objects],
            "arrows": [
                {"name": nm, "source": s, "target": t,
                 "matrix": _render_matrix(field, m)}
                for nm, s, t, m in d.arrows
            ],
        },
    }


def doc_for_constraint_problem(p: ConstraintProblem, target_names: list,
                               name: str = "") -> dict:
    return {
        "schema": SCHEMA_VERSION, "kind": "constraint-problem", "name": name,
        "field": field_to_str(p.field),
        "payload": {
            "n_dim": p.n_dim,
            "constraints": [
                {"target": tn, "matrix": _render_matrix(p.field, f_i)}
                for tn, (_, f_i) in zip(target_names, p.constraints)
            ],
        },
    }


# ---------------------------------------------------------------------------
# canonical bytes


def canonical_bytes(doc: dict) -> bytes:
    return (json.dumps(doc, sort_keys=True, indent=2) + "\n").encode("utf-8")


def digest_of(doc: dict) -> str:
    return hashlib.sha256(canonical_bytes(doc)).hexdigest()


def parse_doc(data) -> dict:
    """Parse and structurally validate a document."""
    if isinstance(data, bytes):
        data = data.decode("utf-8")
    try:
        doc = json.loads(data)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON at line {exc.lineno}, column {exc.colno}") from exc
    if not isinstance(doc, dict):
        raise ParseError("document must be a JSON object")
    for key in ("schema", "kind", "name", "field", "payload"):
        if key not in doc:
            raise ParseError(f"missing field {key!r}")
    if doc["schema"] != SCHEMA_VERSION:
        raise ParseError(f"unsupported schema version {doc['schema']!r}")
    if doc["kind"] not in KINDS:
        raise ParseError(f"unknown kind {doc['kind']!r}")
    field_from_str(doc["field"])
    return doc


# ---------------------------------------------------------------------------
# document -> object


class Resolver:
    """Looks up named documents (from loaded files, then a store)."""

    def __init__(self, docs: Optional[dict] = None, store=None):
        self.docs = dict(docs or {})
        self.store = store

    def add(self, doc: dict):
        if doc.get("name"):
            self.docs[doc["name"]] = doc

    def lookup(self, name: str) -> dict:
        if name in self.docs:
            return self.docs[name]
        if self.store is not None:
            data = self.store.get(name)
            if data is not None:
                doc = parse_doc(data)
                self.docs[name] = doc
                return doc
        raise ParseError(f"unresolved reference {name!r}")


def build(doc: dict, resolver: Optional[Resolver] = None):
    """Materialize the library object a document describes."""
    resolver = resolver or Resolver()
    kind = doc["kind"]
    field = field_from_str(doc["field"])
    payload = doc["payload"]
    name = doc.get("name", "")
    try:
        if kind == "algebra":
            dim = payload["dim"]
            tensor = _triples_to_tensor(field, payload["mult"], dim)
            unit = _parse_vector(field, payload["unit"], dim)
            return Algebra.from_tensor(field, tensor, unit, name=name)
        if kind == "coalgebra":
            dim = payload["dim"]
            tensor = _triples_to_tensor(field, payload["delta"], dim)
            counit = _parse_vector(field, payload["counit"], dim)
            return Coalgebra.from_tensor(field, tensor, counit, name=name)
        if kind == "subspace":
            ambient = payload["ambient"]
            rows = payload["basis"]
            vecs = [_parse_vector(field, r, ambient) for r in rows]
            return Subspace.from_vectors(field, ambient, vecs)
        if kind == "morphism":
            src = build(resolver.lookup(payload["source"]), resolver)
            dst = build(resolver.lookup(payload["target"]), resolver)
            m = _parse_matrix(field, payload["matrix"], payload["rows"], payload["cols"])
            return CoalgebraMorphism(src, dst, m)
        if kind == "bialgebra":
            return _build_bialgebra(doc, field, name)
        if kind == "hopf":
            b = _build_bialgebra(doc, field, name)
            antipode = _parse_matrix(field, payload["antipode"], b.dim, b.dim)
            return HopfAlgebra(b, antipode)
        if kind == "bimodule":
            return _build_bimodule(doc, field, resolver, name)
        if kind == "coring":
            carrier_doc = resolver.lookup(payload["carrier"])
            carrier = build(carrier_doc, resolver)
            tsq = tensor_over_A(carrier, carrier)
            delta = _parse_matrix(field, payload["delta"], tsq.dim, carrier.dim)
            counit = _parse_matrix(field, payload["counit"],
                                   carrier.base.dim, carrier.dim)
            return Coring(carrier, delta, counit, name=name, tsq=tsq)
        if kind == "module-coalgebra":
            h = _acting_bialgebra(resolver.lookup(payload["bialgebra"]), resolver)
            dim = payload["dim"]
            tensor = _triples_to_tensor(field, payload["delta"], dim)
            counit = _parse_vector(field, payload["counit"], dim)
            c = Coalgebra.from_tensor(field, tensor, counit, name=name)
            action = _triples_to_action(field, payload["action"], h.dim, dim, dim)
            return ModuleCoalgebra(h, c, action)
        if kind == "comodule-coalgebra":
            h = _acting_bialgebra(resolver.lookup(payload["bialgebra"]), resolver)
            dim = payload["dim"]
            tensor = _triples_to_tensor(field, payload["delta"], dim)
            counit = _parse_vector(field, payload["counit"], dim)
            c = Coalgebra.from_tensor(field, tensor, counit, name=name)
            rho = _triples_to_coaction(field, payload["coaction"], dim, dim, h.dim)
            return ComoduleCoalgebra(h, c, rho)
        if kind == "comodule":
            coeffs_obj = build(resolver.lookup(payload["coefficients"]), resolver)
            if isinstance(coeffs_obj, (Bialgebra, HopfAlgebra)):
                coeffs = coeffs_obj.coalgebra()
            elif isinstance(coeffs_obj, Coalgebra):
                coeffs = coeffs_obj
            else:
                raise ParseError("comodule coefficients must be a coalgebra")
            dim = payload["dim"]
            rho = _triples_to_coaction(field, payload["coaction"], dim, dim,
                                       coeffs.dim)
            return ComoduleStructure(coeffs, dim, rho)
        if kind == "diagram":
            objects = []
            for lab in payload["objects"]:
                obj = build(resolver.lookup(lab), resolver)
                if not isinstance(obj, Coalgebra):
                    raise ParseError(f"diagram object {lab!r} is not a coalgebra")
                objects.append((lab, obj))
            by_label = dict(objects)
            arrows = []
            for arr in payload["arrows"]:
                src, dst = arr["source"], arr["target"]
                if src not in by_label or dst not in by_label:
                    raise ParseError(f"arrow {arr['name']!r} references unknown objects")
                m = _parse_matrix(field, arr["matrix"],
                                  by_label[dst].dim, by_label[src].dim)
                arrows.append((arr["name"], src, dst, m))
            return Diagram(objects, arrows)
        if kind == "constraint-problem":
            constraints = []
            for con in payload["constraints"]:
                target = build(resolver.lookup(con["target"]), resolver)
                m = _parse_matrix(field, con["matrix"], target.dim, payload["n_dim"])
                constraints.append((target, m))
            return ConstraintProblem(field, payload["n_dim"], tuple(constraints))
    except KeyError as exc:
        raise ParseError(f"missing payload field {exc}") from exc
    raise ParseError(f"unknown kind {kind!r}")


def _build_bialgebra(doc: dict, field: Field, name: str) -> Bialgebra:
    payload = doc["payload"]
    dim = payload["dim"]
    mult = _triples_to_tensor(field, payload["mult"], dim)
    unit = _parse_vector(field, payload["unit"], dim)
    delta = _triples_to_tensor(field, payload["delta"], dim)
    counit = _parse_vector(field, payload["counit"], dim)
    alg = Algebra.from_tensor(field, mult, unit, name=name)
    coalg = Coalgebra.from_tensor(field, delta, counit, name=name)
    return Bialgebra.from_parts(alg, coalg, name=name)


def _acting_bialgebra(doc: dict, resolver: Resolver) -> Bialgebra:
    obj = build(doc, resolver)
    if isinstance(obj, HopfAlgebra):
        return obj.bialgebra
    if isinstance(obj, Bialgebra):
        return obj
    raise ParseError("acting object must be a bialgebra or Hopf algebra")


def _build_bimodule(doc: dict, field: Field, resolver: Resolver, name: str) -> Bimodule:
    payload = doc["payload"]
    base = build(resolver.lookup(payload["base"]), resolver)
    if not isinstance(base, Algebra):
        raise ParseError("bimodule base must be an algebra")
    dim = payload["dim"]
    left = [[[field.zero] * dim for _ in range(dim)] for _ in range(base.dim)]
    right = [[[field.zero] * dim for _ in range(dim)] for _ in range(base.dim)]
    for i, j, k, v in payload["left"]:
        left[i][j][k] = field.parse(v)
    for j, i, k, v in payload["right"]:
        right[i][j][k] = field.parse(v)
    left_mats = [Mat.from_cols(field, [left[i][j] for j in range(dim)], rows=dim)
                 if dim else Mat.zeros(field, 0, 0) for i in range(base.dim)]
    right_mats = [Mat.from_cols(field, [right[i][j] for j in range(dim)], rows=dim)
                  if dim else Mat.zeros(field, 0, 0) for i in range(base.dim)]
    return Bimodule(base, dim, left_mats, right_mats, name=name)


def _triples_to_action(field: Field, triples, d_h: int, d_c: int, d_out: int) -> Mat:
    cols = [[field.zero] * d_out for _ in range(d_h * d_c)]
    for entry in triples:
        i, j, k, v = entry
        if not (0 <= i < d_h and 0 <= j < d_c and 0 <= k < d_out):
            raise ParseError(f"action index out of range: {entry}")
        cols[i * d_c + j][k] = field.parse(v)
    return (Mat.from_cols(field, cols, rows=d_out) if cols
            else Mat.zeros(field, d_out, 0))


def _triples_to_coaction(field: Field, triples, d_m: int, d_inner: int,
                         d_h: int) -> Mat:
    cols = [[field.zero] * (d_inner * d_h) for _ in range(d_m)]
    for entry in triples:
        j, i, k, v = entry
        if not (0 <= j < d_m and 0 <= i < d_inner and 0 <= k < d_h):
            raise ParseError(f"coaction index out of range: {entry}")
        cols[j][i * d_h + k] = field.parse(v)
    return (Mat.from_cols(field, cols, rows=d_inner * d_h) if cols
            else Mat.zeros(field, d_inner * d_h, 0))
