"""Bialgebras, Hopf algebras, and their actions and coactions on coalgebras.

Module coalgebras carry an action H (x) C -> C compatible with the
comultiplication; comodule coalgebras carry a coaction C -> C (x) H.
Closure operations produce the submodule/subcomodule subcoalgebras that
witness local finiteness, and the crossed coproduct installs a coalgebra
structure on H (x) C which is validated rather than assumed.  Rigid-dual
machinery (evaluation, coevaluation, endomorphism algebra on V (x) V*,
comatrix coalgebra on V* (x) V, regular embedding) requires an antipode.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import (
    ConventionFailure,
    DimensionMismatch,
    FieldMismatch,
    InconsistentSystem,
    InvalidStructure,
    NotHopf,
)
from .exact import Field, Mat, RowSpace, Subspace, kron_vec, rank, rref, solve
from .coalgebras import (
    Algebra,
    Coalgebra,
    check_algebra,
    check_coalgebra,
    comatrix_coalgebra,
    matrix_algebra,
    subcoalgebra_generated,
)


class Bialgebra:
    """Algebra and coalgebra on one carrier with multiplicative delta."""

    __slots__ = ("field", "dim", "mult", "unit", "delta", "counit", "name",
                 "_alg", "_coalg")

    def __init__(self, field: Field, dim: int, mult: Mat, unit: Mat,
                 delta: Mat, counit: Mat, name: str = ""):
        self.field = field
        self.dim = dim
        self.mult = mult
        self.unit = unit
        self.delta = delta
        self.counit = counit
        self.name = name
        self._alg = Algebra(field, dim, mult, unit, name=name)
        self._coalg = Coalgebra(field, dim, delta, counit, name=name)

    @classmethod
    def from_parts(cls, alg: Algebra, coalg: Coalgebra, name: str = "") -> "Bialgebra":
        if alg.field != coalg.field or alg.dim != coalg.dim:
            raise DimensionMismatch("algebra and coalgebra parts disagree")
        return cls(alg.field, alg.dim, alg.mult, alg.unit, coalg.delta,
                   coalg.counit, name=name or alg.name or coalg.name)

    def algebra(self) -> Algebra:
        return self._alg

    def coalgebra(self) -> Coalgebra:
        return self._coalg

    def __eq__(self, other):
        return (isinstance(other, Bialgebra) and self.field == other.field
                and self.dim == other.dim and self.mult == other.mult
                and self.unit == other.unit and self.delta == other.delta
                and self.counit == other.counit)

    def __hash__(self):
        return hash((self.field, self.dim, self.mult, self.unit,
                     self.delta, self.counit))

    def __repr__(self):
        return f"Bialgebra({self.name or 'B'}, dim {self.dim} over {self.field})"


def check_bialgebra(b: Bialgebra) -> list:
    """Both sets of axioms plus multiplicativity of delta and counit."""
    field = b.field
    add, mul, zero = field.add, field.mul, field.zero
    viols = [("algebra",) + v for v in check_algebra(b.algebra())]
    viols += [("coalgebra",) + v for v in check_coalgebra(b.coalgebra())]
    alg, coalg = b.algebra(), b.coalgebra()
    d = b.dim
    for i in range(d):
        for j in range(d):
            lhs = {k: v for k, v in coalg.delta_vec(alg.mult_col(i, j)).items() if v}
            rhs: dict = {}
            for (p, q), v in coalg.delta_col(i).items():
                for (r, s), w in coalg.delta_col(j).items():
                    vw = mul(v, w)
                    pr = alg.mult_col(p, r)
                    qs = alg.mult_col(q, s)
                    for x, cx in enumerate(pr):
                        if not cx:
                            continue
                        cxv = mul(vw, cx)
                        for y, cy in enumerate(qs):
                            if cy:
                                key = (x, y)
                                rhs[key] = add(rhs.get(key, zero), mul(cxv, cy))
            rhs = {k: v for k, v in rhs.items() if v}
            if lhs != rhs:
                viols.append(("delta-multiplicative", (i, j)))
            eps_prod = coalg.counit_of(alg.mult_col(i, j))
            eps_i = coalg.counit_vec()[i]
            eps_j = coalg.counit_vec()[j]
            if eps_prod != mul(eps_i, eps_j):
                viols.append(("counit-multiplicative", (i, j)))
    u = alg.unit_vec()
    du = {k: v for k, v in coalg.delta_vec(u).items() if v}
    uu = {}
    for i, x in enumerate(u):
        if x:
            for j, y in enumerate(u):
                if y:
                    uu[(i, j)] = mul(x, y)
    if du != uu:
        viols.append(("delta-unit",))
    if coalg.counit_of(u) != field.one:
        viols.append(("counit-unit",))
    return viols


class HopfAlgebra:
    """Bialgebra with a validated antipode."""

    __slots__ = ("bialgebra", "antipode")

    def __init__(self, bialgebra: Bialgebra, antipode: Mat):
        if antipode.rows != bialgebra.dim or antipode.cols != bialgebra.dim:
            raise DimensionMismatch("antipode must be dim x dim")
        self.bialgebra = bialgebra
        self.antipode = antipode
        viols = check_hopf(self)
        if viols:
            raise InvalidStructure(f"antipode identities fail: {viols[:3]}")

    @property
    def field(self) -> Field:
        return self.bialgebra.field

    @property
    def dim(self) -> int:
        return self.bialgebra.dim

    def algebra(self) -> Algebra:
        return self.bialgebra.algebra()

    def coalgebra(self) -> Coalgebra:
        return self.bialgebra.coalgebra()

    def __repr__(self):
        return f"HopfAlgebra({self.bialgebra.name or 'H'}, dim {self.dim})"


def check_hopf(h: HopfAlgebra) -> list:
    """Convolution identities sum S(h1) h2 = eps(h) 1 = sum h1 S(h2)."""
    b = h.bialgebra
    field = b.field
    alg, coalg = b.algebra(), b.coalgebra()
    s = h.antipode
    viols = []
    u = alg.unit_vec()
    for i in range(b.dim):
        left = [field.zero] * b.dim
        right = [field.zero] * b.dim
        for (j, k), v in coalg.delta_col(i).items():
            sj = s.col(j)
            ek = tuple(field.one if t == k else field.zero for t in range(b.dim))
            for t, x in enumerate(alg.product(sj, ek)):
                if x:
                    left[t] = field.add(left[t], field.mul(v, x))
            ej = tuple(field.one if t == j else field.zero for t in range(b.dim))
            sk = s.col(k)
            for t, x in enumerate(alg.product(ej, sk)):
                if x:
                    right[t] = field.add(right[t], field.mul(v, x))
        expect = tuple(field.mul(coalg.counit_vec()[i], x) for x in u)
        if tuple(left) != expect:
            viols.append(("antipode-left", i))
        if tuple(right) != expect:
            viols.append(("antipode-right", i))
    return viols


def antipode_solve(b: Bialgebra) -> Mat:
    """Solve the linear convolution system for an antipode.

    Raises NotHopf when the system is inconsistent.  The solution is
    unique whenever it exists (convolution inverses are unique)."""
    field = b.field
    alg, coalg = b.algebra(), b.coalgebra()
    d = b.dim
    nvars = d * d  # S[a, c] = coefficient of e_a in S(e_c), variable a * d + c
    rows = []
    rhs = []
    u = alg.unit_vec()
    eps = coalg.counit_vec()
    for i in range(d):
        lrows = [[field.zero] * nvars for _ in range(d)]
        rrows = [[field.zero] * nvars for _ in range(d)]
        for (j, k), v in coalg.delta_col(i).items():
            for a in range(d):
                col = alg.mult_col(a, k)
                for r in range(d):
                    if col[r]:
                        lrows[r][a * d + j] = field.add(
                            lrows[r][a * d + j], field.mul(v, col[r]))
                col = alg.mult_col(j, a)
                for r in range(d):
                    if col[r]:
                        rrows[r][a * d + k] = field.add(
                            rrows[r][a * d + k], field.mul(v, col[r]))
        for r in range(d):
            rows.append(lrows[r])
            rhs.append(field.mul(eps[i], u[r]))
        for r in range(d):
            rows.append(rrows[r])
            rhs.append(field.mul(eps[i], u[r]))
    try:
        x, ker = solve(Mat(field, rows), Mat.col_vector(field, rhs))
    except InconsistentSystem as exc:
        raise NotHopf("no antipode: convolution system inconsistent") from exc
    if ker.dim != 0:
        raise InvalidStructure("antipode system is underdetermined")
    vec = x.col(0)
    return Mat(field, [[vec[a * d + c] for c in range(d)] for a in range(d)], d, d)


def hopf_from_bialgebra(b: Bialgebra) -> HopfAlgebra:
    return HopfAlgebra(b, antipode_solve(b))


# ---------------------------------------------------------------------------
# actions: module coalgebras


class ModuleCoalgebra:
    """Coalgebra with an action H (x) C -> C (column (i, j) is h_i . c_j)."""

    __slots__ = ("h", "c", "action", "_cols")

    def __init__(self, h: Bialgebra, c: Coalgebra, action: Mat):
        if action.rows != c.dim or action.cols != h.dim * c.dim:
            raise DimensionMismatch("action must be dim(C) x dim(H)dim(C)")
        self.h = h
        self.c = c
        self.action = action
        self._cols = None

    def act_col(self, i: int, j: int) -> tuple:
        if self._cols is None:
            self._cols = [self.action.col(t) for t in range(self.action.cols)]
        return self._cols[i * self.c.dim + j]

    def act(self, hvec: Sequence, cvec: Sequence) -> tuple:
        field = self.h.field
        acc = [field.zero] * self.c.dim
        for i, x in enumerate(hvec):
            if not x:
                continue
            for j, y in enumerate(cvec):
                if not y:
                    continue
                xy = field.mul(x, y)
                for t, v in enumerate(self.act_col(i, j)):
                    if v:
                        acc[t] = field.add(acc[t], field.mul(xy, v))
        return tuple(acc)


def trivial_action(h: Bialgebra, c: Coalgebra) -> Mat:
    """h . c = eps(h) c."""
    field = h.field
    eps = h.coalgebra().counit_vec()
    cols = []
    for i in range(h.dim):
        for j in range(c.dim):
            cols.append(tuple(field.mul(eps[i], field.one) if t == j else field.zero
                              for t in range(c.dim)))
    return Mat.from_cols(field, cols, rows=c.dim)


def check_module_coalgebra(mc: ModuleCoalgebra) -> list:
    """Unital/associative action and compatibility with delta and counit."""
    field = mc.h.field
    add, mul, zero = field.add, field.mul, field.zero
    halg = mc.h.algebra()
    hco = mc.h.coalgebra()
    c = mc.c
    viols = []
    u = halg.unit_vec()
    for j in range(c.dim):
        acc = [zero] * c.dim
        for i, x in enumerate(u):
            if x:
                for t, v in enumerate(mc.act_col(i, j)):
                    if v:
                        acc[t] = add(acc[t], mul(x, v))
        if tuple(acc) != tuple(field.one if t == j else zero for t in range(c.dim)):
            viols.append(("action-unital", j))
    for i in range(mc.h.dim):
        for j in range(mc.h.dim):
            hij = halg.mult_col(i, j)
            for k in range(c.dim):
                lhs = [zero] * c.dim
                for a, x in enumerate(hij):
                    if x:
                        for t, v in enumerate(mc.act_col(a, k)):
                            if v:
                                lhs[t] = add(lhs[t], mul(x, v))
                rhs = [zero] * c.dim
                for b, x in enumerate(mc.act_col(j, k)):
                    if x:
                        for t, v in enumerate(mc.act_col(i, b)):
                            if v:
                                rhs[t] = add(rhs[t], mul(x, v))
                if lhs != rhs:
                    viols.append(("action-associative", (i, j, k)))
    for i in range(mc.h.dim):
        for j in range(c.dim):
            hc = mc.act_col(i, j)
            lhs = {k: v for k, v in c.delta_vec(hc).items() if v}
            rhs: dict = {}
            for (p, q), v in hco.delta_col(i).items():
                for (r, s), w in c.delta_col(j).items():
                    vw = mul(v, w)
                    pr = mc.act_col(p, r)
                    qs = mc.act_col(q, s)
                    for x, cx in enumerate(pr):
                        if not cx:
                            continue
                        cxv = mul(vw, cx)
                        for y, cy in enumerate(qs):
                            if cy:
                                key = (x, y)
                                rhs[key] = add(rhs.get(key, zero), mul(cxv, cy))
            rhs = {k: v for k, v in rhs.items() if v}
            if lhs != rhs:
                viols.append(("delta-compatible", (i, j)))
            if c.counit_of(hc) != mul(hco.counit_vec()[i], c.counit_vec()[j]):
                viols.append(("counit-compatible", (i, j)))
    return viols


def module_subcoalgebra_closure(mc: ModuleCoalgebra, f: Subspace) -> Subspace:
    """Span of H . E for E the subcoalgebra generated by f."""
    e = subcoalgebra_generated(mc.c, f)
    field = mc.h.field
    rs = RowSpace(field, mc.c.dim)
    for v in e.basis.data:
        rs.add(v)
        for i in range(mc.h.dim):
            hi = tuple(field.one if t == i else field.zero for t in range(mc.h.dim))
            rs.add(mc.act(hi, v))
    return rs.subspace()


def is_action_stable(mc: ModuleCoalgebra, w: Subspace) -> bool:
    field = mc.h.field
    for v in w.basis.data:
        for i in range(mc.h.dim):
            hi = tuple(field.one if t == i else field.zero for t in range(mc.h.dim))
            if not w.contains_vector(mc.act(hi, v)):
                return False
    return True


# ---------------------------------------------------------------------------
# comodules


class ComoduleStructure:
    """Right comodule over a coalgebra: rho : M -> M (x) C."""

    __slots__ = ("coeffs", "dim", "rho", "_cols")

    def __init__(self, coeffs: Coalgebra, dim: int, rho: Mat):
        if rho.rows != dim * coeffs.dim or rho.cols != dim:
            raise DimensionMismatch("rho must be dim*dim(C) x dim")
        self.coeffs = coeffs
        self.dim = dim
        self.rho = rho
        self._cols = None

    def rho_col(self, j: int) -> dict:
        """rho(e_j) as sparse {(i, k): coeff} with i in M and k in C."""
        if self._cols is None:
            dc = self.coeffs.dim
            cols = []
            for t in range(self.dim):
                col = self.rho.col(t)
                cols.append({(idx // dc, idx % dc): v
                             for idx, v in enumerate(col) if v})
            self._cols = cols
        return self._cols[j]

    def rho_vec(self, x: Sequence) -> dict:
        field = self.coeffs.field
        acc: dict = {}
        for j, xj in enumerate(x):
            if not xj:
                continue
            for key, v in self.rho_col(j).items():
                w = field.mul(xj, v)
                s = field.add(acc.get(key, field.zero), w)
                if s:
                    acc[key] = s
                elif key in acc:
                    del acc[key]
        return acc

    def __eq__(self, other):
        return (isinstance(other, ComoduleStructure) and self.coeffs == other.coeffs
                and self.dim == other.dim and self.rho == other.rho)

    def __hash__(self):
        return hash((self.coeffs, self.dim, self.rho))


def check_comodule(m: ComoduleStructure) -> list:
    """Coassociativity and counitality of the coaction."""
    field = m.coeffs.field
    add, mul, zero = field.add, field.mul, field.zero
    c = m.coeffs
    viols = []
    for j in range(m.dim):
        t = m.rho_col(j)
        lhs: dict = {}
        rhs: dict = {}
        for (i, k), v in t.items():
            for (a, b), w in m.rho_col(i).items():
                key = (a, b, k)
                lhs[key] = add(lhs.get(key, zero), mul(v, w))
            for (p, q), w in c.delta_col(k).items():
                key = (i, p, q)
                rhs[key] = add(rhs.get(key, zero), mul(v, w))
        if ({k: v for k, v in lhs.items() if v} != {k: v for k, v in rhs.items() if v}):
            viols.append(("coaction-coassociative", j))
        acc = [zero] * m.dim
        eps = c.counit_vec()
        for (i, k), v in t.items():
            if eps[k]:
                acc[i] = add(acc[i], mul(v, eps[k]))
        if tuple(acc) != tuple(field.one if t2 == j else zero for t2 in range(m.dim)):
            viols.append(("coaction-counital", j))
    return viols


def trivial_comodule(coeffs: Coalgebra, dim: int, unit_vec: Sequence) -> ComoduleStructure:
    """rho(m) = m (x) g for the distinguished grouplike coordinates."""
    field = coeffs.field
    dc = coeffs.dim
    cols = []
    for j in range(dim):
        col = [field.zero] * (dim * dc)
        for k, v in enumerate(unit_vec):
            if v:
                col[j * dc + k] = v
        cols.append(col)
    return ComoduleStructure(coeffs, dim, Mat.from_cols(field, cols, rows=dim * dc))


def regular_comodule(b: Bialgebra) -> ComoduleStructure:
    """H over itself with rho = delta."""
    return ComoduleStructure(b.coalgebra(), b.dim, b.delta)


def is_comodule_morphism(f: Mat, src: ComoduleStructure, dst: ComoduleStructure) -> bool:
    """(f (x) id) . rho_src == rho_dst . f  (same coefficient coalgebra)."""
    if src.coeffs != dst.coeffs:
        raise FieldMismatch("comodules over different coefficient coalgebras")
    if f.rows != dst.dim or f.cols != src.dim:
        raise DimensionMismatch("colinearity: shape mismatch")
    field = src.coeffs.field
    add, mul, zero = field.add, field.mul, field.zero
    fcols = [f.col(j) for j in range(src.dim)]
    for j in range(src.dim):
        lhs: dict = {}
        for (i, k), v in src.rho_col(j).items():
            for a, x in enumerate(fcols[i]):
                if x:
                    key = (a, k)
                    lhs[key] = add(lhs.get(key, zero), mul(v, x))
        rhs = dst.rho_vec(fcols[j])
        if ({k: v for k, v in lhs.items() if v} != {k: v for k, v in rhs.items() if v}):
            return False
    return True


def coefficient_coalgebra(m: ComoduleStructure) -> Subspace:
    """Smallest subcoalgebra D with rho(M) inside M (x) D."""
    field = m.coeffs.field
    rs = RowSpace(field, m.coeffs.dim)
    for j in range(m.dim):
        per_leg: dict = {}
        for (i, k), v in m.rho_col(j).items():
            per_leg.setdefault(i, [field.zero] * m.coeffs.dim)[k] = v
        for vec in per_leg.values():
            rs.add(vec)
    return subcoalgebra_generated(m.coeffs, rs.subspace())


def comodule_on_subspace(m: ComoduleStructure, w: Subspace) -> ComoduleStructure:
    """Restrict the coaction to a rho-stable subspace (coords of w)."""
    field = m.coeffs.field
    dc = m.coeffs.dim
    cols = []
    for v in w.basis.data:
        t = m.rho_vec(v)
        legs: dict = {}
        for (i, k), x in t.items():
            legs.setdefault(k, [field.zero] * m.dim)[i] = x
        col = [field.zero] * (w.dim * dc)
        for k, leg in legs.items():
            coords = w.coordinates(leg)
            for r, x in enumerate(coords):
                if x:
                    col[r * dc + k] = x
        cols.append(col)
    rho = (Mat.from_cols(field, cols, rows=w.dim * dc) if cols
           else Mat.zeros(field, 0, 0))
    return ComoduleStructure(m.coeffs, w.dim, rho)


# ---------------------------------------------------------------------------
# comodule coalgebras


class ComoduleCoalgebra:
    """Coalgebra with a coaction rho : C -> C (x) H over a bialgebra H."""

    __slots__ = ("h", "c", "rho", "_comodule")

    def __init__(self, h: Bialgebra, c: Coalgebra, rho: Mat):
        if rho.rows != c.dim * h.dim or rho.cols != c.dim:
            raise DimensionMismatch("rho must be dim(C)dim(H) x dim(C)")
        self.h = h
        self.c = c
        self.rho = rho
        self._comodule = ComoduleStructure(h.coalgebra(), c.dim, rho)

    def comodule(self) -> ComoduleStructure:
        return self._comodule

    def rho_col(self, j: int) -> dict:
        return self._comodule.rho_col(j)

    def rho_vec(self, x: Sequence) -> dict:
        return self._comodule.rho_vec(x)


def trivial_coaction(h: Bialgebra, c: Coalgebra) -> Mat:
    """rho(c) = c (x) 1."""
    field = h.field
    unit = h.algebra().unit_vec()
    cols = []
    for j in range(c.dim):
        col = [field.zero] * (c.dim * h.dim)
        for k, v in enumerate(unit):
            if v:
                col[j * h.dim + k] = v
        cols.append(col)
    return Mat.from_cols(field, cols, rows=c.dim * h.dim)


def check_comodule_coalgebra(cc: ComoduleCoalgebra) -> list:
    """Comodule axioms plus colinearity of delta and counit."""
    field = cc.h.field
    add, mul, zero = field.add, field.mul, field.zero
    viols = list(check_comodule(cc.comodule()))
    halg = cc.h.algebra()
    c = cc.c
    dh = cc.h.dim
    for i in range(c.dim):
        lhs: dict = {}
        for (j, k), v in c.delta_col(i).items():
            for (a, b), w in cc.rho_col(j).items():
                vw = mul(v, w)
                for (p, q), x in cc.rho_col(k).items():
                    vwx = mul(vw, x)
                    for t, y in enumerate(halg.mult_col(b, q)):
                        if y:
                            key = (a, p, t)
                            lhs[key] = add(lhs.get(key, zero), mul(vwx, y))
        rhs: dict = {}
        for (a, b), v in cc.rho_col(i).items():
            for (p, q), w in c.delta_col(a).items():
                key = (p, q, b)
                rhs[key] = add(rhs.get(key, zero), mul(v, w))
        if ({k: v for k, v in lhs.items() if v} != {k: v for k, v in rhs.items() if v}):
            viols.append(("coaction-delta-compatible", i))
        acc = [zero] * dh
        eps = c.counit_vec()
        for (a, b), v in cc.rho_col(i).items():
            if eps[a]:
                acc[b] = add(acc[b], mul(v, eps[a]))
        expect = tuple(mul(eps[i], x) for x in halg.unit_vec())
        if tuple(acc) != expect:
            viols.append(("coaction-counit-compatible", i))
    return viols


def is_coaction_stable(cc: ComoduleCoalgebra, w: Subspace) -> bool:
    """rho(w) inside w (x) H."""
    field = cc.h.field
    for v in w.basis.data:
        legs: dict = {}
        for (i, k), x in cc.rho_vec(v).items():
            legs.setdefault(k, [field.zero] * cc.c.dim)[i] = x
        for leg in legs.values():
            if not w.contains_vector(leg):
                return False
    return True


def comodule_subcoalgebra_closure(cc: ComoduleCoalgebra, f: Subspace) -> Subspace:
    """Span of the dual-basis hits (id (x) alpha) rho(E) for the
    subcoalgebra E generated by f."""
    e = subcoalgebra_generated(cc.c, f)
    field = cc.h.field
    rs = RowSpace(field, cc.c.dim)
    for v in e.basis.data:
        per_alpha: dict = {}
        for (i, k), x in cc.rho_vec(v).items():
            per_alpha.setdefault(k, [field.zero] * cc.c.dim)[i] = x
        for vec in per_alpha.values():
            rs.add(vec)
    return rs.subspace()


def sweedler_expansion_report(cc: ComoduleCoalgebra, f: Subspace) -> dict:
    """Term-by-term verification of the finiteness argument.

    For E the subcoalgebra generated by f and D its dual-basis closure,
    every basis element d of E and dual-basis functional alpha must
    satisfy  Delta(alpha . d) = sum_i (beta_i . d_(1)) (x) (gamma_i . d_(2)),
    where the beta/gamma pairs factor alpha over the coefficient
    coalgebra of D.  Returns the closure plus per-pair outcomes."""
    field = cc.h.field
    add, mul, zero = field.add, field.mul, field.zero
    c = cc.c
    e = subcoalgebra_generated(c, f)
    d = comodule_subcoalgebra_closure(cc, f)
    if not is_coaction_stable(cc, d):
        raise InvalidStructure("closure is not a subcomodule")
    restricted = comodule_on_subspace(cc.comodule(), d)
    vspace = coefficient_coalgebra(restricted)
    halg = cc.h.algebra()

    def hit(alpha: int, vec: Sequence) -> tuple:
        acc = [zero] * c.dim
        for (i, k), x in cc.rho_vec(vec).items():
            if k == alpha:
                acc[i] = add(acc[i], x)
        return tuple(acc)

    checks = []
    ok = True
    for dvec in e.basis.data:
        for alpha in range(cc.h.dim):
            f_row = Mat.row_vector(field, [field.one if t == alpha else zero
                                           for t in range(cc.h.dim)])
            pairs = local_representativity(halg, f_row, vspace)
            lhs = {k: v for k, v in c.delta_vec(hit(alpha, dvec)).items() if v}
            rhs: dict = {}
            for (j, k), v in c.delta_vec(dvec).items():
                ej = tuple(field.one if t == j else zero for t in range(c.dim))
                ek = tuple(field.one if t == k else zero for t in range(c.dim))
                for beta, gamma in pairs:
                    left = _functional_hit(cc, beta, ej)
                    right = _functional_hit(cc, gamma, ek)
                    for p, x in enumerate(left):
                        if not x:
                            continue
                        vx = mul(v, x)
                        for q, y in enumerate(right):
                            if y:
                                key = (p, q)
                                rhs[key] = add(rhs.get(key, zero), mul(vx, y))
            rhs = {k: v for k, v in rhs.items() if v}
            good = lhs == rhs
            ok = ok and good
            checks.append(good)
    return {"closure": d, "coefficients": vspace, "ok": ok, "checks": checks}


def _functional_hit(cc: ComoduleCoalgebra, functional: Mat, vec: Sequence) -> tuple:
    """(id (x) functional) applied to rho(vec)."""
    field = cc.h.field
    acc = [field.zero] * cc.c.dim
    frow = functional.row(0)
    for (i, k), x in cc.rho_vec(vec).items():
        if frow[k]:
            acc[i] = field.add(acc[i], field.mul(x, frow[k]))
    return tuple(acc)


# ---------------------------------------------------------------------------
# local representativity


def local_representativity(a: Algebra, f: Mat, v: Subspace) -> list:
    """Minimal families (g_i, h_i) with f(xy) = sum g_i(x) h_i(y) on v.

    Works through a rank factorization of the multiplication pullback
    restricted to v; the functionals read coordinates off the canonical
    pivot positions of v and extend by zero."""
    if f.rows != 1 or f.cols != a.dim:
        raise DimensionMismatch("functional must be 1 x dim")
    field = a.field
    fr = f.row(0)
    basis = v.basis.data
    k = len(basis)
    phi_rows = []
    for x in basis:
        row = []
        for y in basis:
            p = a.product(x, y)
            s = field.zero
            for t, c in enumerate(fr):
                if c and p[t]:
                    s = field.add(s, field.mul(c, p[t]))
            row.append(s)
        phi_rows.append(row)
    if k == 0:
        return []
    phi = Mat(field, phi_rows, k, k)
    red, pivots = rref(phi)
    pairs = []
    for r, pc in enumerate(pivots):
        grow = [field.zero] * a.dim
        hrow = [field.zero] * a.dim
        for t in range(k):
            grow[v.pivots[t]] = phi.data[t][pc]
            hrow[v.pivots[t]] = red.data[r][t]
        pairs.append((Mat.row_vector(field, grow), Mat.row_vector(field, hrow)))
    for x in basis:
        for y in basis:
            p = a.product(x, y)
            lhs = field.zero
            for t, c in enumerate(fr):
                if c and p[t]:
                    lhs = field.add(lhs, field.mul(c, p[t]))
            rhs = field.zero
            for g, hh in pairs:
                gx = sum_apply(field, g.row(0), x)
                hy = sum_apply(field, hh.row(0), y)
                rhs = field.add(rhs, field.mul(gx, hy))
            if lhs != rhs:
                raise InvalidStructure("rank factorization failed to reproduce f")
    return pairs


def sum_apply(field: Field, row: Sequence, vec: Sequence):
    s = field.zero
    for c, x in zip(row, vec):
        if c and x:
            s = field.add(s, field.mul(c, x))
    return s


# ---------------------------------------------------------------------------
# crossed coproduct


def smash_coproduct(h: Bialgebra, cc: ComoduleCoalgebra, name: str = "") -> Coalgebra:
    """Crossed coproduct on H (x) C induced by the coaction.

    delta(h (x) c) = sum (h1 (x) c(1)0) (x) (h2 c(1)1 (x) c(2)).  The
    result must pass the coalgebra axioms; a failure raises
    ConventionFailure (it signals a sidedness mismatch in the input)."""
    if cc.h != h:
        raise FieldMismatch("coaction is not over the given bialgebra")
    field = h.field
    add, mul, zero = field.add, field.mul, field.zero
    dh, dc = h.dim, cc.c.dim
    n = dh * dc
    halg = h.algebra()
    hco = h.coalgebra()
    c = cc.c
    cols = []
    for i in range(dh):
        for j in range(dc):
            col = [zero] * (n * n)
            for (p, q), v1 in hco.delta_col(i).items():
                for (r, s), v2 in c.delta_col(j).items():
                    v12 = mul(v1, v2)
                    for (a, b), v3 in cc.rho_col(r).items():
                        v123 = mul(v12, v3)
                        for t, v4 in enumerate(halg.mult_col(q, b)):
                            if v4:
                                idx = (p * dc + a) * n + (t * dc + s)
                                col[idx] = add(col[idx], mul(v123, v4))
            cols.append(col)
    delta = Mat.from_cols(field, cols, rows=n * n)
    counit = Mat.row_vector(field, kron_vec(field, hco.counit_vec(), c.counit_vec()))
    out = Coalgebra(field, n, delta, counit, name=name or "smash")
    viols = check_coalgebra(out)
    if viols:
        raise ConventionFailure(f"crossed coproduct fails axioms: {viols[:3]}")
    return out


# ---------------------------------------------------------------------------
# rigid duals


def dual_comodule(h: HopfAlgebra, v: ComoduleStructure) -> ComoduleStructure:
    """Coaction on V* determined by <v*_0, v> v*_1 = <v*, v_0> S(v_1)."""
    if v.coeffs != h.coalgebra():
        raise FieldMismatch("comodule is not over the Hopf algebra's coalgebra")
    field = h.field
    dh, dv = h.dim, v.dim
    s = h.antipode
    cols = []
    for j in range(dv):
        col = [field.zero] * (dv * dh)
        for i in range(dv):
            for (ii, k), x in v.rho_col(i).items():
                if ii != j:
                    continue
                for t, y in enumerate(s.col(k)):
                    if y:
                        idx = i * dh + t
                        col[idx] = field.add(col[idx], field.mul(x, y))
        cols.append(col)
    rho = Mat.from_cols(field, cols, rows=dv * dh)
    out = ComoduleStructure(h.coalgebra(), dv, rho)
    viols = check_comodule(out)
    if viols:
        raise InvalidStructure(f"dual comodule fails axioms: {viols[:3]}")
    return out


def tensor_comodule(h: Bialgebra, v: ComoduleStructure, w: ComoduleStructure
                    ) -> ComoduleStructure:
    """Codiagonal coaction on V (x) W: x0 (x) y0 (x) x1 y1."""
    field = h.field
    halg = h.algebra()
    dh = h.dim
    dv, dw = v.dim, w.dim
    cols = []
    for i in range(dv):
        for j in range(dw):
            col = [field.zero] * (dv * dw * dh)
            for (a, b), x in v.rho_col(i).items():
                for (p, q), y in w.rho_col(j).items():
                    xy = field.mul(x, y)
                    for t, z in enumerate(halg.mult_col(b, q)):
                        if z:
                            idx = (a * dw + p) * dh + t
                            col[idx] = field.add(col[idx], field.mul(xy, z))
            cols.append(col)
    rho = Mat.from_cols(field, cols, rows=dv * dw * dh)
    return ComoduleStructure(h.coalgebra(), dv * dw, rho)


def unit_comodule(h: Bialgebra) -> ComoduleStructure:
    """The ground field with rho(1) = 1 (x) 1."""
    return trivial_comodule(h.coalgebra(), 1, h.algebra().unit_vec())


@dataclass
class EvCoMaps:
    ev: Mat
    co: Mat
    ev_colinear: bool
    co_colinear: bool
    zigzag_v: bool
    zigzag_dual: bool


def ev_co_maps(h: HopfAlgebra, v: ComoduleStructure) -> EvCoMaps:
    """Evaluation V* (x) V -> K and coevaluation K -> V (x) V* with
    colinearity certificates and the rigidity identities."""
    field = h.field
    d = v.dim
    ev = Mat(field, [[field.one if (t // d) == (t % d) else field.zero
                      for t in range(d * d)]], 1, d * d)
    co = Mat(field, [[field.one if (t // d) == (t % d) else field.zero]
                     for t in range(d * d)], d * d, 1)
    vd = dual_comodule(h, v)
    vsv = tensor_comodule(h.bialgebra, vd, v)
    vvs = tensor_comodule(h.bialgebra, v, vd)
    triv = unit_comodule(h.bialgebra)
    ev_ok = is_comodule_morphism(ev, vsv, triv)
    co_ok = is_comodule_morphism(co, triv, vvs)
    eye = Mat.identity(field, d)
    zig_v = (eye.kron(ev) @ co.kron(eye)) == eye
    zig_d = (ev.kron(eye) @ eye.kron(co)) == eye
    return EvCoMaps(ev, co, ev_ok, co_ok, zig_v, zig_d)


@dataclass
class ComoduleAlgebraStructure:
    """Algebra in comodules: underlying algebra plus its coaction."""

    algebra: Algebra
    comodule: ComoduleStructure
    mult_colinear: bool
    unit_colinear: bool


@dataclass
class ComoduleCoalgebraStructure:
    """Coalgebra in comodules: underlying coalgebra plus its coaction."""

    coalgebra: Coalgebra
    comodule: ComoduleStructure
    delta_colinear: bool
    counit_colinear: bool


def endomorphism_algebra(h: HopfAlgebra, v: ComoduleStructure
                         ) -> ComoduleAlgebraStructure:
    """V (x) V* with multiplication id (x) ev (x) id and unit co.

    Forgetting the coaction this is the matrix algebra of size dim V."""
    field = h.field
    d = v.dim
    alg = matrix_algebra(d, field)
    vd = dual_comodule(h, v)
    vvs = tensor_comodule(h.bialgebra, v, vd)
    pair = tensor_comodule(h.bialgebra, vvs, vvs)
    triv = unit_comodule(h.bialgebra)
    mult_ok = is_comodule_morphism(alg.mult, pair, vvs)
    unit_ok = is_comodule_morphism(alg.unit, triv, vvs)
    return ComoduleAlgebraStructure(alg, vvs, mult_ok, unit_ok)


def matrix_coalgebra_comodule(h: HopfAlgebra, v: ComoduleStructure
                              ) -> ComoduleCoalgebraStructure:
    """V* (x) V with comultiplication id (x) co (x) id and counit ev.

    Forgetting the coaction this is the comatrix coalgebra of size dim V."""
    field = h.field
    d = v.dim
    coalg = comatrix_coalgebra(d, field)
    vd = dual_comodule(h, v)
    vsv = tensor_comodule(h.bialgebra, vd, v)
    pair = tensor_comodule(h.bialgebra, vsv, vsv)
    triv = unit_comodule(h.bialgebra)
    delta_ok = is_comodule_morphism(coalg.delta, vsv, pair)
    counit_ok = is_comodule_morphism(coalg.counit, vsv, triv)
    return ComoduleCoalgebraStructure(coalg, vsv, delta_ok, counit_ok)


class ComoduleAlgebra:
    """An algebra with an H-coaction (used by the regular embedding)."""

    __slots__ = ("h", "algebra", "rho", "_comodule")

    def __init__(self, h: Bialgebra, algebra: Algebra, rho: Mat):
        if rho.rows != algebra.dim * h.dim or rho.cols != algebra.dim:
            raise DimensionMismatch("rho must be dim(A)dim(H) x dim(A)")
        self.h = h
        self.algebra = algebra
        self.rho = rho
        self._comodule = ComoduleStructure(h.coalgebra(), algebra.dim, rho)

    def comodule(self) -> ComoduleStructure:
        return self._comodule


def check_comodule_algebra(ca: ComoduleAlgebra) -> list:
    """Comodule axioms plus colinearity of multiplication and unit."""
    viols = list(check_comodule(ca.comodule()))
    pair = tensor_comodule(ca.h, ca.comodule(), ca.comodule())
    triv = unit_comodule(ca.h)
    if not is_comodule_morphism(ca.algebra.mult, pair, ca.comodule()):
        viols.append(("mult-colinear",))
    if not is_comodule_morphism(ca.algebra.unit, triv, ca.comodule()):
        viols.append(("unit-colinear",))
    return viols


@dataclass
class RegularEmbedding:
    matrix: Mat
    algebra_morphism: bool
    colinear: bool
    injective: bool


def regular_embedding(h: HopfAlgebra, ca: ComoduleAlgebra) -> RegularEmbedding:
    """a |-> sum_i a v_i (x) v_i* into the endomorphism algebra of A."""
    if ca.h != h.bialgebra:
        raise FieldMismatch("comodule algebra is not over the Hopf algebra")
    field = h.field
    a = ca.algebra
    d = a.dim
    cols = []
    for j in range(d):
        col = [field.zero] * (d * d)
        for l in range(d):
            prod = a.mult_col(j, l)
            for i, x in enumerate(prod):
                if x:
                    col[i * d + l] = field.add(col[i * d + l], x)
        cols.append(col)
    phi = Mat.from_cols(field, cols, rows=d * d)
    endo = endomorphism_algebra(h, ca.comodule())
    alg_ok = True
    for i in range(d):
        for j in range(d):
            lhs = phi.apply(a.mult_col(i, j))
            rhs = endo.algebra.product(phi.col(i), phi.col(j))
            if tuple(lhs) != tuple(rhs):
                alg_ok = False
    if phi.apply(a.unit_vec()) != endo.algebra.unit_vec():
        alg_ok = False
    colinear = is_comodule_morphism(phi, ca.comodule(), endo.comodule)
    injective = rank(phi) == d
    return RegularEmbedding(phi, alg_ok, colinear, injective)
