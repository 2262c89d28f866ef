"""Corings over a finite-dimensional base algebra.

Bimodules are stored through one left and one right action matrix per
base-algebra basis element.  The tensor product over the base is a
quotient of the plain tensor square by the balancing relations, with the
canonical complement (non-pivot standard tensor coordinates) as quotient
basis.  Purity of submodules is decided by the direct-summand criterion,
which is equivalent to solvability-based purity at finite dimension; the
solvability saturation is kept as the constructive enlargement step.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Optional, Sequence

from .errors import (
    BaseMismatch,
    DimensionMismatch,
    InconsistentSystem,
    InvalidStructure,
    NotASubmodule,
)
from .exact import Field, Mat, RowSpace, Subspace, kron_vec, rank, solve
from .coalgebras import Algebra, Coalgebra


def ground_algebra(field: Field) -> Algebra:
    return Algebra.from_tensor(field, [[[field.one]]], [field.one], name="K")


class Bimodule:
    """A-bimodule: left_mats[i] is the action of the i-th base basis
    element on the left, right_mats[i] on the right."""

    __slots__ = ("base", "dim", "left_mats", "right_mats", "name")

    def __init__(self, base: Algebra, dim: int, left_mats: Sequence[Mat],
                 right_mats: Sequence[Mat], name: str = ""):
        if len(left_mats) != base.dim or len(right_mats) != base.dim:
            raise DimensionMismatch("one action matrix per base basis element")
        for m in list(left_mats) + list(right_mats):
            if m.rows != dim or m.cols != dim:
                raise DimensionMismatch("action matrices must be dim x dim")
        self.base = base
        self.dim = dim
        self.left_mats = tuple(left_mats)
        self.right_mats = tuple(right_mats)
        self.name = name

    @classmethod
    def regular(cls, a: Algebra) -> "Bimodule":
        """A as a bimodule over itself."""
        left = []
        right = []
        for i in range(a.dim):
            left.append(Mat.from_cols(a.field, [a.mult_col(i, j) for j in range(a.dim)],
                                      rows=a.dim))
            right.append(Mat.from_cols(a.field, [a.mult_col(j, i) for j in range(a.dim)],
                                       rows=a.dim))
        return cls(a, a.dim, left, right, name=a.name or "A")

    @classmethod
    def outer_tensor(cls, m: "Bimodule", n: "Bimodule", name: str = "") -> "Bimodule":
        """M (x) N with a.(m (x) n) = (a.m) (x) n and (m (x) n).a = m (x) (n.a)."""
        if m.base != n.base:
            raise BaseMismatch("outer tensor over different base algebras")
        field = m.base.field
        eye_m = Mat.identity(field, m.dim)
        eye_n = Mat.identity(field, n.dim)
        left = [lm.kron(eye_n) for lm in m.left_mats]
        right = [eye_m.kron(rn) for rn in n.right_mats]
        return cls(m.base, m.dim * n.dim, left, right, name=name)

    @property
    def field(self) -> Field:
        return self.base.field

    def act_left(self, i: int, vec: Sequence) -> tuple:
        return self.left_mats[i].apply(vec)

    def act_right(self, i: int, vec: Sequence) -> tuple:
        return self.right_mats[i].apply(vec)

    def module_closure(self, vectors: Sequence[Sequence]) -> Subspace:
        """Smallest sub-bimodule (as a subspace) containing the vectors."""
        rs = RowSpace(self.field, self.dim)
        for v in vectors:
            rs.add(v)
        while True:
            grew = False
            for v in rs.subspace().basis.data:
                for i in range(self.base.dim):
                    grew |= rs.add(self.act_left(i, v))
                    grew |= rs.add(self.act_right(i, v))
            if not grew:
                return rs.subspace()

    def is_sub_bimodule(self, w: Subspace) -> bool:
        for v in w.basis.data:
            for i in range(self.base.dim):
                if not w.contains_vector(self.act_left(i, v)):
                    return False
                if not w.contains_vector(self.act_right(i, v)):
                    return False
        return True

    def sub_bimodule(self, w: Subspace, name: str = "") -> "Bimodule":
        """The restricted bimodule on a sub-bimodule subspace."""
        if not self.is_sub_bimodule(w):
            raise NotASubmodule("subspace is not action stable")
        k = w.dim
        left = []
        right = []
        for i in range(self.base.dim):
            lcols = [w.coordinates(self.act_left(i, v)) for v in w.basis.data]
            rcols = [w.coordinates(self.act_right(i, v)) for v in w.basis.data]
            left.append(Mat.from_cols(self.field, lcols, rows=k) if k
                        else Mat.zeros(self.field, 0, 0))
            right.append(Mat.from_cols(self.field, rcols, rows=k) if k
                         else Mat.zeros(self.field, 0, 0))
        return Bimodule(self.base, k, left, right, name=name)

    def __eq__(self, other):
        return (isinstance(other, Bimodule) and self.base == other.base
                and self.dim == other.dim and self.left_mats == other.left_mats
                and self.right_mats == other.right_mats)

    def __hash__(self):
        return hash((self.base, self.dim, self.left_mats, self.right_mats))

    def __repr__(self):
        return f"Bimodule({self.name or 'M'}, dim {self.dim} over {self.base!r})"


def check_bimodule(m: Bimodule) -> list:
    """Violations of the unital, associative, and commuting-action laws."""
    a = m.base
    field = a.field
    viols = []
    eye = Mat.identity(field, m.dim)
    u = a.unit_vec()
    lsum = Mat.zeros(field, m.dim, m.dim)
    rsum = Mat.zeros(field, m.dim, m.dim)
    for i, ui in enumerate(u):
        if ui:
            lsum = lsum + m.left_mats[i].scale(ui)
            rsum = rsum + m.right_mats[i].scale(ui)
    if lsum != eye:
        viols.append(("left-unital",))
    if rsum != eye:
        viols.append(("right-unital",))
    for i in range(a.dim):
        for j in range(a.dim):
            lexp = Mat.zeros(field, m.dim, m.dim)
            rexp = Mat.zeros(field, m.dim, m.dim)
            for k, v in enumerate(a.mult_col(i, j)):
                if v:
                    lexp = lexp + m.left_mats[k].scale(v)
                    rexp = rexp + m.right_mats[k].scale(v)
            if m.left_mats[i] @ m.left_mats[j] != lexp:
                viols.append(("left-associative", (i, j)))
            if m.right_mats[j] @ m.right_mats[i] != rexp:
                viols.append(("right-associative", (i, j)))
            if m.left_mats[i] @ m.right_mats[j] != m.right_mats[j] @ m.left_mats[i]:
                viols.append(("actions-commute", (i, j)))
    return viols


class TensorOverA:
    """M (x)_A N: plain tensor square modulo balancing relations."""

    __slots__ = ("left", "right", "ambient", "relations", "reps", "dim",
                 "_pi_cols", "_bimodule")

    def __init__(self, left: Bimodule, right: Bimodule):
        if left.base != right.base:
            raise BaseMismatch("tensor factors over different base algebras")
        self.left = left
        self.right = right
        field = left.field
        m, n = left.dim, right.dim
        self.ambient = m * n
        rs = RowSpace(field, self.ambient)
        for x in range(m):
            ex = tuple(field.one if t == x else field.zero for t in range(m))
            for i in range(left.base.dim):
                xa = left.act_right(i, ex)
                for y in range(n):
                    ey = tuple(field.one if t == y else field.zero for t in range(n))
                    ay = right.act_left(i, ey)
                    vec = list(kron_vec(field, xa, ey))
                    for idx, v in enumerate(kron_vec(field, ex, ay)):
                        if v:
                            vec[idx] = field.sub(vec[idx], v)
                    rs.add(vec)
        self.relations = rs.subspace()
        pivset = set(self.relations.pivots)
        self.reps = [i for i in range(self.ambient) if i not in pivset]
        self.dim = len(self.reps)
        field_one = field.one
        cols = []
        for i in range(self.ambient):
            e = tuple(field_one if j == i else field.zero for j in range(self.ambient))
            red = self.relations.reduce(e)
            cols.append(tuple(red[r] for r in self.reps))
        self._pi_cols = cols
        self._bimodule = None

    @property
    def field(self) -> Field:
        return self.left.field

    def project(self, vec: Sequence) -> tuple:
        """Quotient coordinates of an ambient tensor vector."""
        field = self.field
        add, mul = field.add, field.mul
        acc = [field.zero] * self.dim
        for i, v in enumerate(vec):
            if v:
                for t, p in enumerate(self._pi_cols[i]):
                    if p:
                        acc[t] = add(acc[t], mul(v, p))
        return tuple(acc)

    def section(self, coords: Sequence) -> tuple:
        """Canonical ambient representative of quotient coordinates."""
        field = self.field
        out = [field.zero] * self.ambient
        for t, c in enumerate(coords):
            if c:
                out[self.reps[t]] = c
        return tuple(out)

    def pure_tensor(self, mvec: Sequence, nvec: Sequence) -> tuple:
        return self.project(kron_vec(self.field, mvec, nvec))

    def projection_matrix(self) -> Mat:
        return Mat.from_cols(self.field, self._pi_cols, rows=self.dim)

    def as_bimodule(self) -> Bimodule:
        """Outer bimodule structure induced on the quotient."""
        if self._bimodule is None:
            field = self.field
            n = self.right.dim
            base = self.left.base
            left = []
            right = []
            for i in range(base.dim):
                lcols = []
                rcols = []
                for r in self.reps:
                    x, y = divmod(r, n)
                    ex = tuple(field.one if t == x else field.zero
                               for t in range(self.left.dim))
                    ey = tuple(field.one if t == y else field.zero for t in range(n))
                    lcols.append(self.pure_tensor(self.left.act_left(i, ex), ey))
                    rcols.append(self.pure_tensor(ex, self.right.act_right(i, ey)))
                left.append(Mat.from_cols(field, lcols, rows=self.dim) if self.dim
                            else Mat.zeros(field, 0, 0))
                right.append(Mat.from_cols(field, rcols, rows=self.dim) if self.dim
                             else Mat.zeros(field, 0, 0))
            self._bimodule = Bimodule(base, self.dim, left, right)
        return self._bimodule


def tensor_over_A(m: Bimodule, n: Bimodule) -> TensorOverA:
    return TensorOverA(m, n)


class Coring:
    """Comonoid in bimodules: delta maps into the tensor-over-A quotient."""

    __slots__ = ("carrier", "tsq", "delta", "counit", "name")

    def __init__(self, carrier: Bimodule, delta: Mat, counit: Mat, name: str = "",
                 tsq: Optional[TensorOverA] = None):
        self.carrier = carrier
        self.tsq = tsq if tsq is not None else tensor_over_A(carrier, carrier)
        if delta.rows != self.tsq.dim or delta.cols != carrier.dim:
            raise DimensionMismatch("delta must be quotient-dim x carrier-dim")
        if counit.rows != carrier.base.dim or counit.cols != carrier.dim:
            raise DimensionMismatch("counit must be base-dim x carrier-dim")
        self.delta = delta
        self.counit = counit
        self.name = name

    @property
    def field(self) -> Field:
        return self.carrier.field

    def delta_rep(self, vec: Sequence) -> tuple:
        """Canonical ambient representative of delta(vec)."""
        return self.tsq.section(self.delta.apply(vec))

    def __repr__(self):
        return f"Coring({self.name or 'C'}, dim {self.carrier.dim} over {self.carrier.base!r})"


def _base_regular_mats(a: Algebra) -> tuple[list, list]:
    left = [Mat.from_cols(a.field, [a.mult_col(i, j) for j in range(a.dim)], rows=a.dim)
            for i in range(a.dim)]
    right = [Mat.from_cols(a.field, [a.mult_col(j, i) for j in range(a.dim)], rows=a.dim)
             for i in range(a.dim)]
    return left, right


def check_coring(c: Coring) -> list:
    """Violated coring axioms; empty when valid."""
    carrier = c.carrier
    base = carrier.base
    field = carrier.field
    m = carrier.dim
    viols = []
    tsq = c.tsq
    quot_bimod = tsq.as_bimodule()
    # A-bilinearity of delta and counit
    base_left, base_right = _base_regular_mats(base)
    for i in range(base.dim):
        if c.delta @ carrier.left_mats[i] != quot_bimod.left_mats[i] @ c.delta:
            viols.append(("delta-left-linear", i))
        if c.delta @ carrier.right_mats[i] != quot_bimod.right_mats[i] @ c.delta:
            viols.append(("delta-right-linear", i))
        if c.counit @ carrier.left_mats[i] != base_left[i] @ c.counit:
            viols.append(("counit-left-linear", i))
        if c.counit @ carrier.right_mats[i] != base_right[i] @ c.counit:
            viols.append(("counit-right-linear", i))
    # counit laws through the canonical representatives
    for j in range(m):
        ej = tuple(field.one if t == j else field.zero for t in range(m))
        rep = c.delta_rep(ej)
        left_out = [field.zero] * m
        right_out = [field.zero] * m
        for idx, v in enumerate(rep):
            if not v:
                continue
            u, w = divmod(idx, m)
            eu = tuple(field.one if t == u else field.zero for t in range(m))
            ew = tuple(field.one if t == w else field.zero for t in range(m))
            eps_u = c.counit.apply(eu)
            for i, av in enumerate(eps_u):
                if av:
                    for t, x in enumerate(carrier.act_left(i, ew)):
                        if x:
                            left_out[t] = field.add(left_out[t],
                                                    field.mul(v, field.mul(av, x)))
            eps_w = c.counit.apply(ew)
            for i, av in enumerate(eps_w):
                if av:
                    for t, x in enumerate(carrier.act_right(i, eu)):
                        if x:
                            right_out[t] = field.add(right_out[t],
                                                     field.mul(v, field.mul(av, x)))
        if tuple(left_out) != ej:
            viols.append(("counit-law-left", j))
        if tuple(right_out) != ej:
            viols.append(("counit-law-right", j))
    # coassociativity inside the triple quotient
    t3 = _TripleQuotient(carrier)
    for j in range(m):
        ej = tuple(field.one if t == j else field.zero for t in range(m))
        rep = c.delta_rep(ej)
        lhs = [field.zero] * (m ** 3)
        rhs = [field.zero] * (m ** 3)
        for idx, v in enumerate(rep):
            if not v:
                continue
            u, w = divmod(idx, m)
            eu = tuple(field.one if t == u else field.zero for t in range(m))
            ew = tuple(field.one if t == w else field.zero for t in range(m))
            drep_u = c.delta_rep(eu)
            for idx2, v2 in enumerate(drep_u):
                if v2:
                    p, q = divmod(idx2, m)
                    lhs[(p * m + q) * m + w] = field.add(
                        lhs[(p * m + q) * m + w], field.mul(v, v2))
            drep_w = c.delta_rep(ew)
            for idx2, v2 in enumerate(drep_w):
                if v2:
                    p, q = divmod(idx2, m)
                    rhs[(u * m + p) * m + q] = field.add(
                        rhs[(u * m + p) * m + q], field.mul(v, v2))
        if t3.project(lhs) != t3.project(rhs):
            viols.append(("coassociativity", j))
    return viols


class _TripleQuotient:
    """C (x)_A C (x)_A C as a quotient of the plain triple tensor."""

    def __init__(self, carrier: Bimodule):
        field = carrier.field
        m = carrier.dim
        base = carrier.base
        rs = RowSpace(field, m ** 3)
        for x in range(m):
            ex = tuple(field.one if t == x else field.zero for t in range(m))
            for i in range(base.dim):
                xa = carrier.act_right(i, ex)
                ax = carrier.act_left(i, ex)
                for y in range(m):
                    ey = tuple(field.one if t == y else field.zero for t in range(m))
                    ya = carrier.act_right(i, ey)
                    ay = carrier.act_left(i, ey)
                    for z in range(m):
                        # (x.a (x) y - x (x) a.y) (x) e_z   at slots (1,2)
                        vec = [field.zero] * (m ** 3)
                        for p, v in enumerate(xa):
                            if v:
                                vec[(p * m + y) * m + z] = v
                        for p, v in enumerate(ay):
                            if v:
                                idx = (x * m + p) * m + z
                                vec[idx] = field.sub(vec[idx], v)
                        rs.add(vec)
                        # e_z (x) (x.a (x) y - x (x) a.y)   at slots (2,3)
                        vec = [field.zero] * (m ** 3)
                        for p, v in enumerate(xa):
                            if v:
                                vec[(z * m + p) * m + y] = v
                        for p, v in enumerate(ay):
                            if v:
                                idx = (z * m + x) * m + p
                                vec[idx] = field.sub(vec[idx], v)
                        rs.add(vec)
        self.relations = rs.subspace()

    def project(self, vec: Sequence) -> tuple:
        return self.relations.reduce(vec)


def trivial_coring(a: Algebra) -> Coring:
    """C = A with the canonical isomorphism onto A (x)_A A and counit id."""
    carrier = Bimodule.regular(a)
    tsq = tensor_over_A(carrier, carrier)
    field = a.field
    unit = a.unit_vec()
    cols = []
    for j in range(a.dim):
        ej = tuple(field.one if t == j else field.zero for t in range(a.dim))
        cols.append(tsq.pure_tensor(ej, unit))
    delta = Mat.from_cols(field, cols, rows=tsq.dim)
    counit = Mat.identity(field, a.dim)
    return Coring(carrier, delta, counit, name=f"triv({a.name})", tsq=tsq)


def sweedler_coring(a: Algebra) -> Coring:
    """The coring A (x) A of the ground-field extension of A."""
    field = a.field
    reg = Bimodule.regular(a)
    carrier = Bimodule.outer_tensor(reg, reg, name=f"{a.name}(x){a.name}")
    tsq = tensor_over_A(carrier, carrier)
    d = a.dim
    unit = a.unit_vec()
    cols = []
    for i in range(d):
        ei = tuple(field.one if t == i else field.zero for t in range(d))
        for j in range(d):
            ej = tuple(field.one if t == j else field.zero for t in range(d))
            left_leg = kron_vec(field, ei, unit)   # a (x) 1
            right_leg = kron_vec(field, unit, ej)  # 1 (x) b
            cols.append(tsq.pure_tensor(left_leg, right_leg))
    delta = Mat.from_cols(field, cols, rows=tsq.dim)
    ccols = [a.mult_col(i, j) for i in range(d) for j in range(d)]
    counit = Mat.from_cols(field, ccols, rows=d)
    return Coring(carrier, delta, counit, name=f"sweedler({a.name})", tsq=tsq)


def coring_of_coalgebra(c: Coalgebra) -> Coring:
    """A coalgebra viewed as a coring over the ground field."""
    base = ground_algebra(c.field)
    eye = Mat.identity(c.field, c.dim)
    carrier = Bimodule(base, c.dim, [eye], [eye], name=c.name)
    return Coring(carrier, c.delta, c.counit, name=c.name)


# ---------------------------------------------------------------------------
# invariant closure


def product_image(c: Coring, w: Subspace) -> Subspace:
    """Image of W (x) W inside the tensor-over-A quotient (W . W)."""
    field = c.field
    vecs = [c.tsq.pure_tensor(u, v) for u in w.basis.data for v in w.basis.data]
    return Subspace.from_vectors(field, c.tsq.dim, vecs)


def is_invariant(c: Coring, w: Subspace) -> bool:
    img = product_image(c, w)
    return all(img.contains_vector(c.delta.apply(v)) for v in w.basis.data)


def invariant_closure(c: Coring, s: Subspace) -> Subspace:
    """Smallest action-and-component-closed sub-bimodule containing s with
    delta landing in its product image.

    Components of delta values are extracted from the canonical quotient
    representative, then the result is re-closed under both actions."""
    carrier = c.carrier
    field = c.field
    m = carrier.dim
    current = carrier.module_closure(s.basis.data)
    while True:
        rs = RowSpace(field, m)
        for v in current.basis.data:
            rs.add(v)
        grew = False
        for v in current.basis.data:
            rep = c.delta_rep(v)
            rows: dict = {}
            cols: dict = {}
            for idx, x in enumerate(rep):
                if x:
                    u, w = divmod(idx, m)
                    rows.setdefault(u, [field.zero] * m)[w] = x
                    cols.setdefault(w, [field.zero] * m)[u] = x
            for vec in rows.values():
                grew |= rs.add(vec)
            for vec in cols.values():
                grew |= rs.add(vec)
        if not grew:
            return current
        current = carrier.module_closure(rs.subspace().basis.data)


# ---------------------------------------------------------------------------
# purity


def _side_mats(m: Bimodule, side: str) -> tuple:
    if side == "left":
        return m.left_mats
    if side == "right":
        return m.right_mats
    raise ValueError("side must be 'left' or 'right'")


def is_pure_submodule(m: Bimodule, n: Subspace, side: str) -> bool:
    """Existence of an A-linear projection onto n (split = pure here)."""
    mats = _side_mats(m, side)
    for v in n.basis.data:
        for a in mats:
            if not n.contains_vector(a.apply(v)):
                raise NotASubmodule("subspace not stable under the action")
    if n.dim in (0, m.dim):
        return True
    field = m.field
    d = m.dim
    nvars = d * d
    rows = []
    rhs = []
    # commuting with every action matrix: P A - A P = 0
    for a in mats:
        for r in range(d):
            for cc in range(d):
                row = [field.zero] * nvars
                for k in range(d):
                    row[r * d + k] = field.add(row[r * d + k], a.data[k][cc])
                    row[k * d + cc] = field.sub(row[k * d + cc], a.data[r][k])
                rows.append(row)
                rhs.append(field.zero)
    # identity on n
    for v in n.basis.data:
        for r in range(d):
            row = [field.zero] * nvars
            for k, x in enumerate(v):
                if x:
                    row[r * d + k] = x
            rows.append(row)
            rhs.append(v[r])
    # image inside n
    ann = n.annihilator()
    for phi in ann.basis.data:
        for k in range(d):
            row = [field.zero] * nvars
            for r, x in enumerate(phi):
                if x:
                    row[r * d + k] = x
            rows.append(row)
            rhs.append(field.zero)
    try:
        solve(Mat(field, rows), Mat.col_vector(field, rhs))
    except InconsistentSystem:
        return False
    return True


@dataclass(frozen=True)
class CohnSystem:
    """A finite linear system sum_i lam[i][j] . x_i = rhs_j over one side."""

    side: str
    lam: tuple          # lam[i][j]: base basis index
    rhs: tuple          # rhs[j]: coordinate vector in the ambient module

    def render(self, base: Algebra) -> str:
        k = len(self.lam)
        jn = len(self.rhs)
        eqs = []
        for j in range(jn):
            if self.side == "left":
                terms = [f"a{self.lam[i][j]}.x{i + 1}" for i in range(k)]
            else:
                terms = [f"x{i + 1}.a{self.lam[i][j]}" for i in range(k)]
            eqs.append(" + ".join(terms) + f" = n{j + 1}")
        return "; ".join(eqs)


def _system_matrix(m: Bimodule, system: CohnSystem) -> tuple[Mat, Mat]:
    field = m.field
    d = m.dim
    mats = _side_mats(m, system.side)
    k = len(system.lam)
    jn = len(system.rhs)
    rows = []
    for j in range(jn):
        for r in range(d):
            row = []
            for i in range(k):
                row.extend(mats[system.lam[i][j]].data[r])
            rows.append(row)
    rhs_rows = [[system.rhs[j][r]] for j in range(jn) for r in range(d)]
    return Mat(field, rows, jn * d, k * d), Mat(field, rhs_rows, jn * d, 1)


def _solvable_within(m: Bimodule, n: Subspace, system: CohnSystem) -> bool:
    """Whether the system has a solution with every unknown inside n."""
    field = m.field
    if n.dim == 0:
        mat, rhs = _system_matrix(m, system)
        return rhs.is_zero()
    mat, rhs = _system_matrix(m, system)
    k = len(system.lam)
    basis_t = n.basis.T  # d x n.dim
    blocks = []
    for j in range(mat.rows):
        row = mat.row(j)
        out_row = []
        for i in range(k):
            seg = Mat(field, [row[i * m.dim:(i + 1) * m.dim]], 1, m.dim, _raw=True)
            out_row.extend((seg @ basis_t).row(0))
        blocks.append(out_row)
    try:
        solve(Mat(field, blocks), rhs)
    except InconsistentSystem:
        return False
    return True


def _cohn_systems(m: Bimodule, n: Subspace, bound: tuple[int, int]):
    kmax, jmax = bound
    base_dim = m.base.dim
    for side in ("left", "right"):
        for k in range(1, kmax + 1):
            for jn in range(1, jmax + 1):
                for lam_flat in product(range(base_dim), repeat=k * jn):
                    lam = tuple(tuple(lam_flat[i * jn + j] for j in range(jn))
                                for i in range(k))
                    for rhs_pick in product(range(n.dim), repeat=jn):
                        rhs = tuple(n.basis.data[t] for t in rhs_pick)
                        yield CohnSystem(side, lam, rhs)


def purity_witness(m: Bimodule, n: Subspace, side: str,
                   bound: tuple[int, int] = (2, 2)) -> Optional[CohnSystem]:
    """A bounded system solvable in the module but not inside n, if any."""
    for system in _cohn_systems(m, n, bound):
        if system.side != side:
            continue
        mat, rhs = _system_matrix(m, system)
        try:
            solve(mat, rhs)
        except InconsistentSystem:
            continue
        if not _solvable_within(m, n, system):
            return system
    return None


def cohn_saturate(m: Bimodule, n: Subspace, bound: tuple[int, int] = (2, 2)) -> Subspace:
    """Enlarge n until every bounded system solvable in m solves inside it.

    For each offending system the span of the full solution set (one
    particular solution plus the homogeneous kernel) is adjoined and the
    result re-closed as a sub-bimodule; repeated to a fixed point.
    Systems already solvable inside n contribute nothing, so split
    submodules are left unchanged."""
    field = m.field
    current = m.module_closure(n.basis.data)
    while True:
        added = RowSpace(field, m.dim)
        for v in current.basis.data:
            added.add(v)
        grew = False
        for system in _cohn_systems(m, current, bound):
            mat, rhs = _system_matrix(m, system)
            try:
                part, ker = solve(mat, rhs)
            except InconsistentSystem:
                continue
            if _solvable_within(m, current, system):
                continue
            k = len(system.lam)
            xs = part.col(0)
            for i in range(k):
                grew |= added.add(xs[i * m.dim:(i + 1) * m.dim])
            for kv in ker.basis.data:
                for i in range(k):
                    grew |= added.add(kv[i * m.dim:(i + 1) * m.dim])
        if not grew:
            return current
        current = m.module_closure(added.subspace().basis.data)


# ---------------------------------------------------------------------------
# subcoring closure


def tensor_square_injectivity(c: Coring, d: Subspace) -> tuple[bool, Optional[Mat]]:
    """Whether D (x)_A D -> C (x)_A C is injective; returns the map too."""
    sub = c.carrier.sub_bimodule(d)
    tsq_d = tensor_over_A(sub, sub)
    cols = []
    for r in tsq_d.reps:
        x, y = divmod(r, sub.dim)
        cols.append(c.tsq.pure_tensor(d.basis.data[x], d.basis.data[y]))
    if not cols:
        return True, Mat.zeros(c.field, c.tsq.dim, 0)
    mat = Mat.from_cols(c.field, cols, rows=c.tsq.dim)
    return rank(mat) == tsq_d.dim, mat


@dataclass
class SubcoringReport:
    invariant: bool
    pure_left: bool
    pure_right: bool
    tensor_square_injective: bool
    bound_sufficient: bool

    @property
    def all_flags(self) -> bool:
        return (self.invariant and self.pure_left and self.pure_right
                and self.tensor_square_injective and self.bound_sufficient)


def subcoring_closure(c: Coring, s: Subspace,
                      bound: tuple[int, int] = (2, 2)) -> tuple[Subspace, SubcoringReport]:
    """Alternate invariant closure and solvability saturation to a fixed
    point; report invariance, two-sided purity (summand test), and
    injectivity of the tensor square."""
    carrier = c.carrier
    current = carrier.module_closure(s.basis.data)
    while True:
        after_inv = invariant_closure(c, current)
        after_sat = cohn_saturate(carrier, after_inv, bound)
        if after_sat == current:
            break
        current = after_sat
    pure_left = is_pure_submodule(carrier, current, "left")
    pure_right = is_pure_submodule(carrier, current, "right")
    inj, _ = tensor_square_injectivity(c, current)
    report = SubcoringReport(
        invariant=is_invariant(c, current),
        pure_left=pure_left,
        pure_right=pure_right,
        tensor_square_injective=inj,
        bound_sufficient=pure_left and pure_right,
    )
    return current, report


def subcoring_on(c: Coring, d: Subspace, name: str = "") -> Coring:
    """The coring carried by an invariant, tensor-square-injective
    sub-bimodule."""
    inj, mat = tensor_square_injectivity(c, d)
    if not inj:
        raise InvalidStructure("tensor square does not embed")
    if not is_invariant(c, d):
        raise InvalidStructure("subspace is not invariant")
    sub = c.carrier.sub_bimodule(d, name=name)
    cols = []
    for v in d.basis.data:
        target = Mat.col_vector(c.field, c.delta.apply(v))
        coords, _ = solve(mat, target)
        cols.append(coords.col(0))
    tsq_d = tensor_over_A(sub, sub)
    delta = (Mat.from_cols(c.field, cols, rows=tsq_d.dim) if cols
             else Mat.zeros(c.field, tsq_d.dim, 0))
    counit = c.counit @ d.basis.T
    return Coring(sub, delta, counit, name=name, tsq=tsq_d)
