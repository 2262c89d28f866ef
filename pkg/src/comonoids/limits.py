"""Colimits, equalizers, and bounded final-object constructions.

Colimits of coalgebras are computed as a block direct sum quotiented by
the span of arrow relations; that span is a coideal, so the quotient
carries an induced comultiplication.  Limits go through the final object
of a comma category: objects are generator coalgebras G equipped with a
linear map q into a fixed space N subject to morphism constraints, and
the final object is the colimit over all such pairs.  Because the
generator class is a finite enumeration, finality is certified
exhaustively: for every (G, q) the mediating coalgebra morphism into the
result is counted and must be unique.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Optional, Sequence

from .errors import (
    BudgetExceeded,
    DimensionMismatch,
    FieldMismatch,
    IllFormedDiagram,
    InconsistentSystem,
)
from .exact import Field, Mat, RowSpace, Subspace, kernel, solve
from .coalgebras import (
    Coalgebra,
    CoalgebraMorphism,
    coalgebra_morphisms,
    enumerate_coalgebras,
    is_coalgebra_morphism,
    quotient_by_coideal,
    largest_subcoalgebra_in,
    subcoalgebra_on,
    require_valid_coalgebra,
)


@dataclass(frozen=True)
class EngineBudget:
    """Caps for exhaustive enumeration inside the engine."""

    max_objects: int = 20000
    max_total_dim: int = 4096
    hom_budget: int = 1 << 22
    enum_budget: int = 2_000_000


DEFAULT_BUDGET = EngineBudget()


class Diagram:
    """Labeled coalgebras plus labeled arrows between them."""

    def __init__(self, objects: Sequence[tuple[str, Coalgebra]],
                 arrows: Sequence[tuple[str, str, str, Mat]] = ()):
        labels = [lab for lab, _ in objects]
        if len(set(labels)) != len(labels):
            raise IllFormedDiagram("duplicate object labels")
        self.objects = list(objects)
        self.by_label = dict(objects)
        self.arrows = list(arrows)
        seen = set()
        for name, src, dst, mat in self.arrows:
            if name in seen:
                raise IllFormedDiagram(f"duplicate arrow label {name!r}")
            seen.add(name)
            if src not in self.by_label or dst not in self.by_label:
                raise IllFormedDiagram(f"arrow {name!r} references unknown objects")
            if not is_coalgebra_morphism(mat, self.by_label[src], self.by_label[dst]):
                raise IllFormedDiagram(f"arrow {name!r} is not a coalgebra morphism")

    def fields(self) -> set:
        return {c.field for _, c in self.objects}


# ---------------------------------------------------------------------------
# colimits


def _direct_sum(cs: Sequence[Coalgebra], field: Field) -> tuple[Coalgebra, list[int]]:
    offsets = []
    total = 0
    for c in cs:
        offsets.append(total)
        total += c.dim
    zero = field.zero
    cols = []
    counit = []
    for o, c in enumerate(cs):
        base = offsets[o]
        for t in range(c.dim):
            col = [zero] * (total * total)
            for (j, k), v in c.delta_col(t).items():
                col[(base + j) * total + (base + k)] = v
            cols.append(col)
        counit.extend(c.counit_vec())
    delta = Mat.from_cols(field, cols, rows=total * total) if cols else Mat.zeros(field, 0, 0)
    big = Coalgebra(field, total, delta, Mat.row_vector(field, counit))
    return big, offsets


def coproduct(c1: Coalgebra, c2: Coalgebra) -> tuple[Coalgebra, CoalgebraMorphism, CoalgebraMorphism]:
    """Block direct sum with its two injections."""
    if c1.field != c2.field:
        raise FieldMismatch("coproduct requires a common field")
    field = c1.field
    big, offsets = _direct_sum([c1, c2], field)
    zero, one = field.zero, field.one
    inj = []
    for o, c in enumerate([c1, c2]):
        m = Mat(field, [[one if offsets[o] + j == i else zero for j in range(c.dim)]
                        for i in range(big.dim)], big.dim, c.dim, _raw=True)
        inj.append(CoalgebraMorphism(c, big, m))
    return big, inj[0], inj[1]


def coequalizer(f: CoalgebraMorphism, g: CoalgebraMorphism
                ) -> tuple[Coalgebra, CoalgebraMorphism]:
    """Quotient of the common target by the image of f - g."""
    if f.source != g.source or f.target != g.target:
        raise DimensionMismatch("coequalizer needs a parallel pair")
    target = f.target
    diff = f.matrix - g.matrix
    gens = [diff.col(j) for j in range(diff.cols)]
    r = Subspace.from_vectors(target.field, target.dim, gens)
    return quotient_by_coideal(target, r)


def equalizer(f: CoalgebraMorphism, g: CoalgebraMorphism
              ) -> tuple[Coalgebra, CoalgebraMorphism]:
    """Largest subcoalgebra inside ker(f - g), with its inclusion."""
    if f.source != g.source or f.target != g.target:
        raise DimensionMismatch("equalizer needs a parallel pair")
    source = f.source
    diff = f.matrix - g.matrix
    k = Subspace(source.field, source.dim, kernel(diff))
    w = largest_subcoalgebra_in(source, k)
    return subcoalgebra_on(source, w)


def factor_through_inclusion(incl: CoalgebraMorphism, h: CoalgebraMorphism
                             ) -> CoalgebraMorphism:
    """The unique u with incl . u = h; raises InconsistentSystem if none."""
    if h.target != incl.target:
        raise DimensionMismatch("factorization targets differ")
    u, ker = solve(incl.matrix, h.matrix)
    if ker.dim != 0:
        raise InconsistentSystem("inclusion is not injective")
    return CoalgebraMorphism(h.source, incl.source, u)


@dataclass
class ColimitResult:
    coalgebra: Coalgebra
    cocone: dict  # label -> CoalgebraMorphism


def finite_colimit(d: Diagram) -> ColimitResult:
    """Coproduct of all objects, then quotient by the arrow relations."""
    fields = d.fields()
    if len(fields) > 1:
        raise FieldMismatch("diagram objects live over different fields")
    field = fields.pop() if fields else None
    if field is None:
        raise IllFormedDiagram("empty diagram has no colimit field; supply one object")
    cs = [c for _, c in d.objects]
    big, offsets = _direct_sum(cs, field)
    index = {lab: o for o, (lab, _) in enumerate(d.objects)}
    rs = RowSpace(field, big.dim)
    for _, src, dst, mat in d.arrows:
        oi, oj = index[src], index[dst]
        csrc = d.by_label[src]
        for t in range(csrc.dim):
            vec = [field.zero] * big.dim
            for s, v in enumerate(mat.col(t)):
                if v:
                    vec[offsets[oj] + s] = v
            vec[offsets[oi] + t] = field.sub(vec[offsets[oi] + t], field.one)
            rs.add(vec)
    r = rs.subspace()
    quot, proj = quotient_by_coideal(big, r)
    cocone = {}
    for lab, c in d.objects:
        o = index[lab]
        cols = [proj.matrix.col(offsets[o] + t) for t in range(c.dim)]
        m = Mat.from_cols(field, cols, rows=quot.dim) if c.dim else Mat.zeros(field, quot.dim, 0)
        cocone[lab] = CoalgebraMorphism(c, quot, m)
    return ColimitResult(quot, cocone)


# ---------------------------------------------------------------------------
# bounded class and constraint problems


@dataclass(frozen=True)
class BoundedClass:
    """Exhaustive list of generator coalgebras up to a dimension bound."""

    field: Field
    max_dim: int
    generators: tuple

    @classmethod
    def build(cls, field: Field, max_dim: int,
              enum_budget: int = DEFAULT_BUDGET.enum_budget) -> "BoundedClass":
        gens: list[Coalgebra] = []
        for d in range(max_dim + 1):
            gens.extend(enumerate_coalgebras(field, d, enum_budget))
        return cls(field, max_dim, tuple(gens))


@dataclass(frozen=True)
class ConstraintProblem:
    """Target space N with morphism constraints f_i : N -> C_i."""

    field: Field
    n_dim: int
    constraints: tuple = ()

    def __post_init__(self):
        for c_i, f_i in self.constraints:
            if f_i.rows != c_i.dim or f_i.cols != self.n_dim:
                raise DimensionMismatch("constraint map must be dim(C_i) x n")


@dataclass
class MediatorRecord:
    gen_index: int
    q: Mat
    count: int
    mediator: Optional[Mat]  # the unique one when count == 1


@dataclass
class FinalityCertificate:
    records: list
    ok: bool
    first_failure: Optional[int]  # object index

    def summary(self) -> str:
        status = "pass" if self.ok else f"FAIL at object {self.first_failure}"
        return f"finality certificate over {len(self.records)} objects: {status}"


@dataclass
class FinalObjectResult:
    coalgebra: Coalgebra
    p0: Mat                      # n x dim(E0)
    objects: list                # (gen_index, q)
    cocone: list                 # CoalgebraMorphism per object
    certificate: Optional[FinalityCertificate]


def _enumerate_objects(problem: ConstraintProblem, cls: BoundedClass,
                       budget: EngineBudget) -> list:
    field = cls.field
    n = problem.n_dim
    cand_total = sum(field.p ** (n * g.dim) for g in cls.generators)
    if cand_total > budget.max_objects:
        raise BudgetExceeded(
            f"{cand_total} candidate objects exceed budget {budget.max_objects}")
    elems = field.elements()
    objects = []
    for gi, g in enumerate(cls.generators):
        width = g.dim
        for entries in product(elems, repeat=n * width):
            q = Mat(field, [entries[r * width:(r + 1) * width] for r in range(n)],
                    n, width)
            ok = True
            for c_i, f_i in problem.constraints:
                if not is_coalgebra_morphism(f_i @ q, g, c_i):
                    ok = False
                    break
            if ok:
                objects.append((gi, q))
    return objects


def bounded_final_object(problem: ConstraintProblem, cls: BoundedClass,
                         budget: EngineBudget = DEFAULT_BUDGET,
                         certify: bool = True) -> FinalObjectResult:
    """Final object of the bounded comma category, with certificate.

    Objects are pairs (G, q) with G a generator and q : G -> N linear such
    that every constraint composite is a coalgebra morphism; arrows are
    coalgebra morphisms commuting over N.  The result is the colimit of
    the G's with the induced map p0 to N.  The certificate checks, for
    every object, that exactly one mediating coalgebra morphism into the
    result commutes with p0."""
    if problem.field != cls.field:
        raise FieldMismatch("problem and class fields differ")
    field = cls.field
    n = problem.n_dim
    objects = _enumerate_objects(problem, cls, budget)
    total_dim = sum(cls.generators[gi].dim for gi, _ in objects)
    if total_dim > budget.max_total_dim:
        raise BudgetExceeded(f"total colimit dimension {total_dim} exceeds budget")
    big, offsets = _direct_sum([cls.generators[gi] for gi, _ in objects], field)

    hom_cache: dict = {}

    def homs(gi: int, gj: int) -> list:
        key = (gi, gj)
        if key not in hom_cache:
            hom_cache[key] = coalgebra_morphisms(cls.generators[gi],
                                                 cls.generators[gj],
                                                 budget.hom_budget)
        return hom_cache[key]

    rs = RowSpace(field, big.dim)
    for oi, (gi, qi) in enumerate(objects):
        g = cls.generators[gi]
        if g.dim == 0:
            continue
        for oj, (gj, qj) in enumerate(objects):
            for phi in homs(gi, gj):
                if qj @ phi != qi:
                    continue
                for t in range(g.dim):
                    vec = [field.zero] * big.dim
                    for s, v in enumerate(phi.col(t)):
                        if v:
                            vec[offsets[oj] + s] = v
                    vec[offsets[oi] + t] = field.sub(vec[offsets[oi] + t], field.one)
                    rs.add(vec)
    r = rs.subspace()
    e0, proj = quotient_by_coideal(big, r)
    require_valid_coalgebra(e0)

    # induced map to N: on the canonical representatives, read off the q's
    pivset = set(r.pivots)
    reps = [i for i in range(big.dim) if i not in pivset]
    block_of = []
    for oi, (gi, _) in enumerate(objects):
        block_of.extend([(oi, t) for t in range(cls.generators[gi].dim)])
    p0_cols = []
    for m in reps:
        oi, t = block_of[m]
        p0_cols.append(objects[oi][1].col(t))
    p0 = Mat.from_cols(field, p0_cols, rows=n) if p0_cols else Mat.zeros(field, n, 0)

    # the whole cocone must commute over N
    for x in r.basis.data:
        acc = [field.zero] * n
        for i, v in enumerate(x):
            if v:
                oi, t = block_of[i]
                qcol = objects[oi][1].col(t)
                for rrow in range(n):
                    acc[rrow] = field.add(acc[rrow], field.mul(v, qcol[rrow]))
        if any(acc):
            raise InconsistentSystem("relations do not respect the maps to N")

    cocone = []
    for oi, (gi, q) in enumerate(objects):
        g = cls.generators[gi]
        cols = [proj.matrix.col(offsets[oi] + t) for t in range(g.dim)]
        m = Mat.from_cols(field, cols, rows=e0.dim) if g.dim else Mat.zeros(field, e0.dim, 0)
        leg = CoalgebraMorphism(g, e0, m)
        if p0 @ m != q:
            raise InconsistentSystem("cocone leg does not commute over N")
        cocone.append(leg)

    certificate = None
    if certify:
        hom_to_e0: dict = {}
        records = []
        ok = True
        first_failure = None
        for oi, (gi, q) in enumerate(objects):
            if gi not in hom_to_e0:
                hom_to_e0[gi] = coalgebra_morphisms(cls.generators[gi], e0,
                                                    budget.hom_budget)
            meds = [psi for psi in hom_to_e0[gi] if p0 @ psi == q]
            if cocone[oi].matrix not in meds:
                raise InconsistentSystem("cocone leg missing from mediator set")
            rec = MediatorRecord(gi, q, len(meds), meds[0] if len(meds) == 1 else None)
            records.append(rec)
            if len(meds) != 1 and ok:
                ok = False
                first_failure = oi
        certificate = FinalityCertificate(records, ok, first_failure)
    return FinalObjectResult(e0, p0, objects, cocone, certificate)


def cofree_approx(v_dim: int, cls: BoundedClass,
                  budget: EngineBudget = DEFAULT_BUDGET) -> FinalObjectResult:
    """Bounded cofree object on N = field^v_dim (no constraints).

    The certificate records, for every (G, h), the mediating morphism
    with p0 . psi = h."""
    problem = ConstraintProblem(cls.field, v_dim, ())
    return bounded_final_object(problem, cls, budget, certify=True)


# ---------------------------------------------------------------------------
# limits


def vector_space_limit(d: Diagram, field: Optional[Field] = None
                       ) -> tuple[Subspace, dict, list[int]]:
    """Limit of the underlying vector-space diagram.

    Returns (P, q_maps, offsets) where P sits inside the direct sum of all
    object spaces and q_maps[label] : P -> F(label) are the projections.
    An explicit field is only needed for the empty diagram."""
    fields = d.fields()
    if len(fields) > 1:
        raise FieldMismatch("diagram objects live over different fields")
    if fields:
        inferred = fields.pop()
        if field is not None and field != inferred:
            raise FieldMismatch("requested field differs from diagram field")
        field = inferred
    if field is None:
        raise IllFormedDiagram("empty diagram needs an explicit field")
    offsets = []
    total = 0
    for _, c in d.objects:
        offsets.append(total)
        total += c.dim
    index = {lab: o for o, (lab, _) in enumerate(d.objects)}
    rows = []
    for _, src, dst, mat in d.arrows:
        oi, oj = index[src], index[dst]
        for crow in range(mat.rows):
            vec = [field.zero] * total
            vec[offsets[oj] + crow] = field.one
            for j, v in enumerate(mat.row(crow)):
                if v:
                    vec[offsets[oi] + j] = field.sub(vec[offsets[oi] + j], v)
            rows.append(vec)
    if rows:
        p = Subspace(field, total, kernel(Mat(field, rows)))
    else:
        p = Subspace.full(field, total)
    q_maps = {}
    for lab, c in d.objects:
        o = index[lab]
        cols = []
        for rrow in p.basis.data:
            cols.append(rrow[offsets[o]:offsets[o] + c.dim])
        m = (Mat.from_cols(field, cols, rows=c.dim) if cols
             else Mat.zeros(field, c.dim, 0))
        q_maps[lab] = m
    return p, q_maps, offsets


@dataclass
class LimitResult:
    coalgebra: Coalgebra
    cone: dict                   # label -> CoalgebraMorphism
    p0: Mat
    problem: ConstraintProblem
    certificate: Optional[FinalityCertificate]


def bounded_limit(d: Diagram, cls: BoundedClass,
                  budget: EngineBudget = DEFAULT_BUDGET) -> LimitResult:
    """Limit of a coalgebra diagram relative to a bounded generator class.

    Computes the vector-space limit P with projections q_a, then the
    bounded final object over (P, (q_a)); the cone legs are q_a . p0.
    A cone from a class member is exactly an object of the comma
    category, so the finality certificate doubles as the cone
    factorization certificate."""
    field = cls.field
    p, q_maps, _ = vector_space_limit(d, field)
    constraints = []
    for lab, c in d.objects:
        constraints.append((c, q_maps[lab]))
    problem = ConstraintProblem(field, p.dim, tuple(constraints))
    res = bounded_final_object(problem, cls, budget, certify=True)
    cone = {}
    for lab, c in d.objects:
        m = q_maps[lab] @ res.p0
        cone[lab] = CoalgebraMorphism(res.coalgebra, c, m)
    return LimitResult(res.coalgebra, cone, res.p0, problem, res.certificate)
