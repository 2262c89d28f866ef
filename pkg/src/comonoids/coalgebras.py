"""Finite-dimensional algebras and coalgebras by structure constants.

An algebra stores its multiplication as a matrix A (x) A -> A and its unit
as a column; a coalgebra stores the comultiplication C -> C (x) C and the
counit as a row.  Tensor legs flatten left-factor-major, matching
`exact.kron_vec`.  Structure checks and closures work column by column on
sparse dictionaries so that large carriers (block coproducts) stay cheap.

All values are immutable after construction and every operation is a pure
function.
"""

from __future__ import annotations

from itertools import product
from typing import Sequence

from .errors import (
    BudgetExceeded,
    DimensionMismatch,
    FieldMismatch,
    InvalidStructure,
)
from .exact import Field, Mat, RowSpace, Subspace, kernel, kron_vec, rank, solve, solve_vec

DEFAULT_ENUM_BUDGET = 2_000_000
BRUTE_HOM_THRESHOLD = 4096
DEFAULT_HOM_BUDGET = 1 << 22


def _clean(d: dict) -> dict:
    return {k: v for k, v in d.items() if v}


class Algebra:
    """Associative unital algebra: mult is (dim x dim^2), unit (dim x 1)."""

    __slots__ = ("field", "dim", "mult", "unit", "name", "_cols")

    def __init__(self, field: Field, dim: int, mult: Mat, unit: Mat, name: str = ""):
        if mult.rows != dim or mult.cols != dim * dim:
            raise DimensionMismatch("mult must be dim x dim^2")
        if unit.rows != dim or unit.cols != 1:
            raise DimensionMismatch("unit must be dim x 1")
        self.field = field
        self.dim = dim
        self.mult = mult
        self.unit = unit
        self.name = name
        self._cols = None

    @classmethod
    def from_tensor(cls, field: Field, tensor, unit: Sequence, name: str = "") -> "Algebra":
        """tensor[i][j][k]: coefficient of e_k in e_i * e_j."""
        dim = len(tensor)
        cols = []
        for i in range(dim):
            for j in range(dim):
                cols.append([tensor[i][j][k] for k in range(dim)])
        mult = Mat.from_cols(field, cols, rows=dim) if cols else Mat.zeros(field, dim, 0)
        return cls(field, dim, mult, Mat.col_vector(field, unit), name)

    def mult_col(self, i: int, j: int) -> tuple:
        """Coordinates of e_i * e_j."""
        if self._cols is None:
            self._cols = [self.mult.col(c) for c in range(self.dim * self.dim)]
        return self._cols[i * self.dim + j]

    def product(self, x: Sequence, y: Sequence) -> tuple:
        add, mul, zero = self.field.add, self.field.mul, self.field.zero
        acc = [zero] * self.dim
        for i, xi in enumerate(x):
            if not xi:
                continue
            for j, yj in enumerate(y):
                if not yj:
                    continue
                col = self.mult_col(i, j)
                c = mul(xi, yj)
                for k, m in enumerate(col):
                    if m:
                        acc[k] = add(acc[k], mul(c, m))
        return tuple(acc)

    def unit_vec(self) -> tuple:
        return self.unit.col(0)

    def mult_triples(self) -> list:
        out = []
        for i in range(self.dim):
            for j in range(self.dim):
                for k, v in enumerate(self.mult_col(i, j)):
                    if v:
                        out.append((i, j, k, v))
        return out

    def __eq__(self, other):
        return (isinstance(other, Algebra) and self.field == other.field
                and self.dim == other.dim and self.mult == other.mult
                and self.unit == other.unit)

    def __hash__(self):
        return hash((self.field, self.dim, self.mult, self.unit))

    def __repr__(self):
        label = self.name or "algebra"
        return f"Algebra({label}, dim {self.dim} over {self.field})"


class Coalgebra:
    """Coassociative counital coalgebra: delta (dim^2 x dim), counit (1 x dim)."""

    __slots__ = ("field", "dim", "delta", "counit", "name", "_cols")

    def __init__(self, field: Field, dim: int, delta: Mat, counit: Mat, name: str = ""):
        if delta.rows != dim * dim or delta.cols != dim:
            raise DimensionMismatch("delta must be dim^2 x dim")
        if counit.rows != 1 or counit.cols != dim:
            raise DimensionMismatch("counit must be 1 x dim")
        self.field = field
        self.dim = dim
        self.delta = delta
        self.counit = counit
        self.name = name
        self._cols = None

    @classmethod
    def from_tensor(cls, field: Field, tensor, counit: Sequence, name: str = "") -> "Coalgebra":
        """tensor[i][j][k]: coefficient of e_j (x) e_k in delta(e_i)."""
        dim = len(tensor)
        cols = []
        for i in range(dim):
            col = []
            for j in range(dim):
                for k in range(dim):
                    col.append(tensor[i][j][k])
            cols.append(col)
        delta = Mat.from_cols(field, cols, rows=dim * dim) if cols else Mat.zeros(field, 0, 0)
        return cls(field, dim, delta, Mat.row_vector(field, counit), name)

    def delta_col(self, i: int) -> dict:
        """delta(e_i) as a sparse {(j, k): coeff} dictionary."""
        if self._cols is None:
            d = self.dim
            cols = []
            for c in range(d):
                col = self.delta.col(c)
                cols.append({(idx // d, idx % d): v for idx, v in enumerate(col) if v})
            self._cols = cols
        return self._cols[i]

    def delta_vec(self, x: Sequence) -> dict:
        """delta applied to a coordinate vector, as sparse {(j, k): coeff}."""
        add, mul = self.field.add, self.field.mul
        acc: dict = {}
        for i, xi in enumerate(x):
            if not xi:
                continue
            for key, v in self.delta_col(i).items():
                w = mul(xi, v)
                if key in acc:
                    s = add(acc[key], w)
                    if s:
                        acc[key] = s
                    else:
                        del acc[key]
                elif w:
                    acc[key] = w
        return acc

    def counit_vec(self) -> tuple:
        return self.counit.row(0)

    def counit_of(self, x: Sequence):
        add, mul, zero = self.field.add, self.field.mul, self.field.zero
        s = zero
        for e, xi in zip(self.counit_vec(), x):
            if e and xi:
                s = add(s, mul(e, xi))
        return s

    def delta_triples(self) -> list:
        out = []
        for i in range(self.dim):
            for (j, k), v in sorted(self.delta_col(i).items()):
                out.append((i, j, k, v))
        return out

    def __eq__(self, other):
        return (isinstance(other, Coalgebra) and self.field == other.field
                and self.dim == other.dim and self.delta == other.delta
                and self.counit == other.counit)

    def __hash__(self):
        return hash((self.field, self.dim, self.delta, self.counit))

    def __repr__(self):
        label = self.name or "coalgebra"
        return f"Coalgebra({label}, dim {self.dim} over {self.field})"


# ---------------------------------------------------------------------------
# axiom checks


def check_algebra(a: Algebra) -> list:
    """Violated algebra axioms as (kind, indices) pairs; empty when valid."""
    field = a.field
    add, mul, zero = field.add, field.mul, field.zero
    d = a.dim
    viols = []
    u = a.unit_vec()
    for j in range(d):
        left = [zero] * d
        right = [zero] * d
        for i, ui in enumerate(u):
            if not ui:
                continue
            for k, v in enumerate(a.mult_col(i, j)):
                if v:
                    left[k] = add(left[k], mul(ui, v))
            for k, v in enumerate(a.mult_col(j, i)):
                if v:
                    right[k] = add(right[k], mul(ui, v))
        expect = [field.one if k == j else zero for k in range(d)]
        if left != expect:
            viols.append(("unit-left", j))
        if right != expect:
            viols.append(("unit-right", j))
    for i in range(d):
        for j in range(d):
            pij = a.mult_col(i, j)
            for k in range(d):
                lhs = [zero] * d
                for x, c in enumerate(pij):
                    if c:
                        for t, v in enumerate(a.mult_col(x, k)):
                            if v:
                                lhs[t] = add(lhs[t], mul(c, v))
                rhs = [zero] * d
                pjk = a.mult_col(j, k)
                for y, c in enumerate(pjk):
                    if c:
                        for t, v in enumerate(a.mult_col(i, y)):
                            if v:
                                rhs[t] = add(rhs[t], mul(c, v))
                if lhs != rhs:
                    viols.append(("associativity", (i, j, k)))
    return viols


def check_coalgebra(c: Coalgebra) -> list:
    """Violated coalgebra axioms as (kind, index) pairs; empty when valid."""
    field = c.field
    add, mul, zero = field.add, field.mul, field.zero
    d = c.dim
    eps = c.counit_vec()
    viols = []
    for i in range(d):
        t = c.delta_col(i)
        left = [zero] * d
        right = [zero] * d
        for (j, k), v in t.items():
            if eps[j]:
                left[k] = add(left[k], mul(v, eps[j]))
            if eps[k]:
                right[j] = add(right[j], mul(v, eps[k]))
        expect = [field.one if k == i else zero for k in range(d)]
        if left != expect:
            viols.append(("counit-left", i))
        if right != expect:
            viols.append(("counit-right", i))
    for i in range(d):
        lhs: dict = {}
        rhs: dict = {}
        for (j, k), v in c.delta_col(i).items():
            for (p, q), w in c.delta_col(j).items():
                key = (p, q, k)
                lhs[key] = add(lhs.get(key, zero), mul(v, w))
            for (p, q), w in c.delta_col(k).items():
                key = (j, p, q)
                rhs[key] = add(rhs.get(key, zero), mul(v, w))
        if _clean(lhs) != _clean(rhs):
            viols.append(("coassociativity", i))
    return viols


def require_valid_coalgebra(c: Coalgebra) -> Coalgebra:
    viols = check_coalgebra(c)
    if viols:
        raise InvalidStructure(f"coalgebra axioms fail: {viols[:3]}")
    return c


# ---------------------------------------------------------------------------
# duality and standard constructions


def dual_coalgebra(a: Algebra) -> Coalgebra:
    """Transpose of the structure constants; counit is the unit vector."""
    return Coalgebra(a.field, a.dim, a.mult.T, a.unit.T,
                     name=f"{a.name}^*" if a.name else "")


def dual_algebra(c: Coalgebra) -> Algebra:
    """Transpose of the comultiplication; unit is the counit vector."""
    return Algebra(c.field, c.dim, c.delta.T, c.counit.T,
                   name=f"{c.name}^*" if c.name else "")


def matrix_algebra(n: int, field: Field) -> Algebra:
    """n x n matrix units: E_ij E_kl = delta_jk E_il."""
    d = n * n
    zero, one = field.zero, field.one
    cols = []
    for i in range(n):
        for j in range(n):
            for k in range(n):
                for l in range(n):
                    col = [zero] * d
                    if j == k:
                        col[i * n + l] = one
                    cols.append(col)
    unit = [zero] * d
    for i in range(n):
        unit[i * n + i] = one
    return Algebra(field, d, Mat.from_cols(field, cols, rows=d),
                   Mat.col_vector(field, unit), name=f"M{n}")


def comatrix_coalgebra(n: int, field: Field) -> Coalgebra:
    """Basis e_ij; delta(e_ij) = sum_k e_ik (x) e_kj; counit(e_ij) = [i == j]."""
    if n < 1:
        raise ValueError("n must be >= 1")
    d = n * n
    zero, one = field.zero, field.one
    cols = []
    for i in range(n):
        for j in range(n):
            col = [zero] * (d * d)
            for k in range(n):
                col[(i * n + k) * d + (k * n + j)] = one
            cols.append(col)
    counit = [one if i == j else zero for i in range(n) for j in range(n)]
    return Coalgebra(field, d, Mat.from_cols(field, cols, rows=d * d),
                     Mat.row_vector(field, counit), name=f"M{n}c")


def ground_coalgebra(field: Field) -> Coalgebra:
    return comatrix_coalgebra(1, field)


def grouplikes_coalgebra(field: Field, n: int, name: str = "") -> Coalgebra:
    """n grouplike basis vectors: delta(g_i) = g_i (x) g_i, counit 1."""
    zero, one = field.zero, field.one
    cols = []
    for i in range(n):
        col = [zero] * (n * n)
        col[i * n + i] = one
        cols.append(col)
    delta = Mat.from_cols(field, cols, rows=n * n) if n else Mat.zeros(field, 0, 0)
    return Coalgebra(field, n, delta, Mat.row_vector(field, [one] * n),
                     name=name or f"grouplikes{n}")


def zero_coalgebra(field: Field) -> Coalgebra:
    return Coalgebra(field, 0, Mat.zeros(field, 0, 0), Mat.zeros(field, 1, 0), name="0")


def tensor_coalgebra(c1: Coalgebra, c2: Coalgebra, name: str = "") -> Coalgebra:
    """Tensor-product coalgebra on C1 (x) C2."""
    if c1.field != c2.field:
        raise FieldMismatch("tensor of coalgebras over different fields")
    field = c1.field
    d1, d2 = c1.dim, c2.dim
    d = d1 * d2
    mul, add, zero = field.mul, field.add, field.zero
    cols = []
    for i in range(d1):
        for j in range(d2):
            col = [zero] * (d * d)
            for (a, b), v in c1.delta_col(i).items():
                for (p, q), w in c2.delta_col(j).items():
                    idx = (a * d2 + p) * d + (b * d2 + q)
                    col[idx] = add(col[idx], mul(v, w))
            cols.append(col)
    counit = kron_vec(field, c1.counit_vec(), c2.counit_vec())
    delta = Mat.from_cols(field, cols, rows=d * d) if cols else Mat.zeros(field, 0, 0)
    return Coalgebra(field, d, delta, Mat.row_vector(field, counit), name=name)


# ---------------------------------------------------------------------------
# morphisms


def coalgebra_morphism_violation(f: Mat, source: Coalgebra, target: Coalgebra):
    """First failing identity as (kind, basis index), or None."""
    if f.rows != target.dim or f.cols != source.dim:
        raise DimensionMismatch("morphism matrix must be target.dim x source.dim")
    if f.field != source.field or source.field != target.field:
        raise FieldMismatch("morphism fields disagree")
    field = f.field
    add, mul, zero = field.add, field.mul, field.zero
    eps_t = target.counit_vec()
    eps_s = source.counit_vec()
    fcols = [f.col(j) for j in range(source.dim)]
    for j in range(source.dim):
        s = zero
        for e, x in zip(eps_t, fcols[j]):
            if e and x:
                s = add(s, mul(e, x))
        if s != eps_s[j]:
            return ("counit", j)
    for j in range(source.dim):
        lhs = _clean(target.delta_vec(fcols[j]))
        rhs: dict = {}
        for (a, b), w in source.delta_col(j).items():
            fa, fb = fcols[a], fcols[b]
            for p, x in enumerate(fa):
                if not x:
                    continue
                wx = mul(w, x)
                for q, y in enumerate(fb):
                    if y:
                        key = (p, q)
                        rhs[key] = add(rhs.get(key, zero), mul(wx, y))
        if lhs != _clean(rhs):
            return ("delta", j)
    return None


def is_coalgebra_morphism(f: Mat, source: Coalgebra, target: Coalgebra) -> bool:
    return coalgebra_morphism_violation(f, source, target) is None


class CoalgebraMorphism:
    """A structure-preserving map, validated at construction."""

    __slots__ = ("source", "target", "matrix")

    def __init__(self, source: Coalgebra, target: Coalgebra, matrix: Mat):
        bad = coalgebra_morphism_violation(matrix, source, target)
        if bad is not None:
            raise InvalidStructure(f"not a coalgebra morphism: fails {bad}")
        self.source = source
        self.target = target
        self.matrix = matrix

    @classmethod
    def identity(cls, c: Coalgebra) -> "CoalgebraMorphism":
        return cls(c, c, Mat.identity(c.field, c.dim))

    def compose(self, other: "CoalgebraMorphism") -> "CoalgebraMorphism":
        """self after other."""
        if other.target is not self.source and other.target != self.source:
            raise DimensionMismatch("composition endpoints do not match")
        return CoalgebraMorphism(other.source, self.target, self.matrix @ other.matrix)

    def __eq__(self, other):
        return (isinstance(other, CoalgebraMorphism) and self.source == other.source
                and self.target == other.target and self.matrix == other.matrix)

    def __hash__(self):
        return hash((self.source, self.target, self.matrix))

    def __repr__(self):
        return f"CoalgebraMorphism({self.source!r} -> {self.target!r})"


# ---------------------------------------------------------------------------
# closures


def subcoalgebra_generated(c: Coalgebra, s: Subspace) -> Subspace:
    """Smallest delta-stable subspace containing s.

    Primary route: span of the middle tensor legs of the twice-applied
    comultiplication of each generator.  Cross-check route: iterated left
    and right leg spans of delta to a fixed point.  Both must agree.
    """
    _check_subspace(c, s)
    primary = _generated_middle(c, s)
    cross = _generated_iterative(c, s)
    if primary != cross:
        raise InvalidStructure("subcoalgebra closure routes disagree")
    return primary


def _generated_middle(c: Coalgebra, s: Subspace) -> Subspace:
    field = c.field
    add, mul, zero = field.add, field.mul, field.zero
    rs = RowSpace(field, c.dim)
    for x in s.basis.data:
        t3: dict = {}
        for (j, k), v in c.delta_vec(x).items():
            for (p, q), w in c.delta_col(j).items():
                key = (p, q, k)
                t3[key] = add(t3.get(key, zero), mul(v, w))
        mids: dict = {}
        for (p, q, k), v in t3.items():
            if not v:
                continue
            vec = mids.get((p, k))
            if vec is None:
                vec = [zero] * c.dim
                mids[(p, k)] = vec
            vec[q] = add(vec[q], v)
        for vec in mids.values():
            rs.add(vec)
    return rs.subspace()


def _generated_iterative(c: Coalgebra, s: Subspace) -> Subspace:
    field = c.field
    zero = field.zero
    rs = RowSpace(field, c.dim)
    for x in s.basis.data:
        rs.add(x)
    while True:
        grew = False
        for x in rs.subspace().basis.data:
            t = c.delta_vec(x)
            rows: dict = {}
            cols: dict = {}
            for (j, k), v in t.items():
                rows.setdefault(j, [zero] * c.dim)[k] = v
                cols.setdefault(k, [zero] * c.dim)[j] = v
            for vec in rows.values():
                grew |= rs.add(vec)
            for vec in cols.values():
                grew |= rs.add(vec)
        if not grew:
            return rs.subspace()


def largest_subcoalgebra_in(c: Coalgebra, w: Subspace) -> Subspace:
    """Largest delta-stable subspace inside w (decreasing iteration)."""
    _check_subspace(c, w)
    field = c.field
    current = w
    while True:
        if current.dim == 0:
            return current
        tensor_sq = current.tensor(current)
        ann = tensor_sq.annihilator()
        if ann.dim == 0:
            return current
        cond_mat = ann.basis @ c.delta
        cond = Subspace(field, c.dim, kernel(cond_mat))
        nxt = current.intersect(cond)
        if nxt == current:
            return current
        current = nxt


def _check_subspace(c: Coalgebra, s: Subspace):
    if s.ambient != c.dim:
        raise DimensionMismatch("subspace ambient does not match coalgebra dim")
    if s.field != c.field:
        raise FieldMismatch("subspace field does not match coalgebra field")


def is_delta_stable(c: Coalgebra, w: Subspace) -> bool:
    """Whether delta(w) lands in w (x) w."""
    tensor_sq = w.tensor(w)
    for x in w.basis.data:
        flat = _delta_flat(c, x)
        if not tensor_sq.contains_vector(flat):
            return False
    return True


def _delta_flat(c: Coalgebra, x: Sequence) -> tuple:
    zero = c.field.zero
    out = [zero] * (c.dim * c.dim)
    for (j, k), v in c.delta_vec(x).items():
        out[j * c.dim + k] = v
    return tuple(out)


# ---------------------------------------------------------------------------
# sub- and quotient coalgebras


def subcoalgebra_on(c: Coalgebra, w: Subspace) -> tuple[Coalgebra, CoalgebraMorphism]:
    """The coalgebra carried by a delta-stable subspace, with its inclusion."""
    _check_subspace(c, w)
    field = c.field
    k = w.dim
    rows = w.basis.data
    if k == 0:
        sub = zero_coalgebra(field)
        return sub, CoalgebraMorphism(sub, c, Mat.zeros(field, c.dim, 0))
    pair_cols = [kron_vec(field, u, v) for u in rows for v in rows]
    K = Mat.from_cols(field, pair_cols, rows=c.dim * c.dim)
    delta_cols = []
    for u in rows:
        delta_cols.append(solve_vec(K, _delta_flat(c, u)))
    delta = Mat.from_cols(field, delta_cols, rows=k * k)
    incl = w.basis.T
    counit = c.counit @ incl
    sub = Coalgebra(field, k, delta, counit)
    return sub, CoalgebraMorphism(sub, c, incl)


def is_coideal(c: Coalgebra, r: Subspace) -> bool:
    """delta(R) inside R (x) C + C (x) R and counit vanishing on R.

    Decided by projecting delta(r) into (C/R) (x) (C/R), whose kernel is
    exactly R (x) C + C (x) R."""
    _check_subspace(c, r)
    field = c.field
    add, mul, zero = field.add, field.mul, field.zero
    pi_cols = _projection_columns(field, r, c.dim)
    q = c.dim - r.dim
    for x in r.basis.data:
        if c.counit_of(x):
            return False
        acc = [zero] * (q * q)
        for (a, b), v in c.delta_vec(x).items():
            pa, pb = pi_cols[a], pi_cols[b]
            for p, u in enumerate(pa):
                if not u:
                    continue
                vu = mul(v, u)
                for s, w in enumerate(pb):
                    if w:
                        idx = p * q + s
                        acc[idx] = add(acc[idx], mul(vu, w))
        if any(acc):
            return False
    return True


def _projection_columns(field: Field, r: Subspace, dim: int) -> list:
    """Columns of the projection onto canonical complement coordinates."""
    pivset = set(r.pivots)
    reps = [i for i in range(dim) if i not in pivset]
    rep_pos = {m: t for t, m in enumerate(reps)}
    cols = []
    for i in range(dim):
        v = r.reduce(tuple(field.one if j == i else field.zero for j in range(dim)))
        cols.append(tuple(v[m] for m in reps))
    return cols


def quotient_by_coideal(c: Coalgebra, r: Subspace, check: bool = True
                        ) -> tuple[Coalgebra, CoalgebraMorphism]:
    """Quotient coalgebra C / R with its projection, for a coideal R.

    The quotient basis is the canonical complement (standard basis vectors
    at non-pivot coordinates of R)."""
    _check_subspace(c, r)
    field = c.field
    add, mul, zero = field.add, field.mul, field.zero
    d = c.dim
    pivset = set(r.pivots)
    reps = [i for i in range(d) if i not in pivset]
    q = len(reps)
    pi_cols = _projection_columns(field, r, d)
    if check:
        for x in r.basis.data:
            if c.counit_of(x):
                raise InvalidStructure("counit does not vanish on the coideal")
    delta_cols = []
    for m in reps:
        col = [zero] * (q * q)
        for (a, b), v in c.delta_col(m).items():
            pa, pb = pi_cols[a], pi_cols[b]
            for p, x in enumerate(pa):
                if not x:
                    continue
                vx = mul(v, x)
                for s, y in enumerate(pb):
                    if y:
                        idx = p * q + s
                        col[idx] = add(col[idx], mul(vx, y))
        delta_cols.append(col)
    delta = Mat.from_cols(field, delta_cols, rows=q * q) if q else Mat.zeros(field, 0, 0)
    counit = Mat.row_vector(field, [c.counit_vec()[m] for m in reps])
    quot = Coalgebra(field, q, delta, counit)
    pi = Mat.from_cols(field, pi_cols, rows=q)
    return quot, CoalgebraMorphism(c, quot, pi)


# ---------------------------------------------------------------------------
# comatrix presentation


def comatrix_presentation(c: Coalgebra) -> tuple[int, CoalgebraMorphism]:
    """A surjection from a comatrix coalgebra onto c.

    The dual algebra acts on itself by left multiplication; transposing
    that faithful representation yields the quotient map M_n^c -> c with
    n = dim c."""
    if c.dim < 1:
        raise ValueError("comatrix presentation needs dim >= 1")
    a = dual_algebra(c)
    d = c.dim
    cols = []
    for i in range(d):
        for j in range(d):
            # column (i, j) of the surjection: k-th coord of left-regular L_k at (i, j)
            cols.append([a.mult_col(k, j)[i] for k in range(d)])
    pi = Mat.from_cols(field=c.field, cols=cols, rows=d)
    source = comatrix_coalgebra(d, c.field)
    mor = CoalgebraMorphism(source, c, pi)
    if rank(pi) != d:
        raise InvalidStructure("regular representation was not faithful")
    return d, mor


# ---------------------------------------------------------------------------
# enumeration


def enumerate_coalgebras(field: Field, dim: int,
                         budget: int = DEFAULT_ENUM_BUDGET) -> list[Coalgebra]:
    """All valid coalgebra structures at this dimension, in lexicographic
    order of (delta tensor, counit) entries.  Raw structures, no quotient
    by isomorphism."""
    if not field.is_finite:
        raise ValueError("enumeration requires a finite field")
    if dim not in (0, 1, 2):
        raise ValueError("enumeration is supported for dim <= 2")
    count = field.p ** (dim ** 3 + dim)
    if count > budget:
        raise BudgetExceeded(f"{count} candidates exceed budget {budget}")
    if dim == 0:
        return [zero_coalgebra(field)]
    elems = field.elements()
    out = []
    index = 0
    for delta_entries in product(elems, repeat=dim ** 3):
        tensor = [[[delta_entries[(i * dim + j) * dim + k] for k in range(dim)]
                   for j in range(dim)] for i in range(dim)]
        for counit_entries in product(elems, repeat=dim):
            cand = Coalgebra.from_tensor(field, tensor, list(counit_entries))
            if not check_coalgebra(cand):
                cand.name = f"enum-{field}-d{dim}-{index}"
                out.append(cand)
                index += 1
    return out


# ---------------------------------------------------------------------------
# truncated tensor algebra


def tensor_algebra_truncated(field: Field, v_dim: int, degree: int,
                             max_dim: int = 4096) -> Algebra:
    """Free algebra on v_dim generators, truncated above the given degree
    (products of too-high degree are zero)."""
    if degree < 0:
        raise ValueError("degree must be >= 0")
    dim = sum(v_dim ** k for k in range(degree + 1))
    if dim > max_dim:
        raise BudgetExceeded(f"truncated tensor algebra dim {dim} exceeds {max_dim}")
    words: list[tuple] = []
    for length in range(degree + 1):
        words.extend(product(range(v_dim), repeat=length))
    pos = {w: i for i, w in enumerate(words)}
    zero, one = field.zero, field.one
    cols = []
    for w1 in words:
        for w2 in words:
            col = [zero] * dim
            cat = w1 + w2
            if len(cat) <= degree:
                col[pos[cat]] = one
            cols.append(col)
    unit = [zero] * dim
    unit[pos[()]] = one
    return Algebra(field, dim, Mat.from_cols(field, cols, rows=dim),
                   Mat.col_vector(field, unit), name=f"T{v_dim}le{degree}")


# ---------------------------------------------------------------------------
# hom-set enumeration (finite fields)


def _all_vectors(field: Field, n: int):
    return product(field.elements(), repeat=n)


def algebra_morphisms(a: Algebra, b: Algebra,
                      budget: int = DEFAULT_HOM_BUDGET) -> list[Mat]:
    """All unital algebra morphisms a -> b over a finite field.

    The source is generated by a small set found greedily; candidates
    assign images to those generators and extend along a multiplication
    DAG, then get verified on all basis pairs."""
    field = a.field
    if not field.is_finite:
        raise ValueError("hom enumeration requires a finite field")
    if a.dim == 0:
        return [Mat.zeros(field, b.dim, 0)] if b.dim == 0 else []
    if b.dim == 0:
        return []
    items: list[tuple] = []   # (vector, expr)
    rs = RowSpace(field, a.dim)
    unit = a.unit_vec()
    rs.add(unit)
    items.append((unit, ("one",)))
    gens: list[int] = []
    tried: set = set()
    while rs.dim < a.dim:
        progressed = True
        while progressed:
            progressed = False
            n = len(items)
            for i in range(n):
                for j in range(n):
                    if (i, j) in tried:
                        continue
                    tried.add((i, j))
                    prod_vec = a.product(items[i][0], items[j][0])
                    if rs.add(prod_vec):
                        items.append((prod_vec, ("mul", i, j)))
                        progressed = True
        if rs.dim == a.dim:
            break
        new_idx = None
        for e in range(a.dim):
            vec = tuple(field.one if t == e else field.zero for t in range(a.dim))
            if not rs.contains(vec):
                new_idx = e
                break
        vec = tuple(field.one if t == new_idx else field.zero for t in range(a.dim))
        rs.add(vec)
        gens.append(len(items))
        items.append((vec, ("gen", new_idx)))
    n_gens = len(gens)
    n_cands = field.p ** (b.dim * n_gens)
    if n_cands > budget:
        raise BudgetExceeded(f"{n_cands} morphism candidates exceed budget {budget}")
    basis_mat = Mat(field, [it[0] for it in items])
    k_inv, _ = solve(basis_mat.T, Mat.identity(field, a.dim))
    b_unit = b.unit_vec()
    out = []
    pool = [tuple(v) for v in _all_vectors(field, b.dim)]
    for assignment in product(pool, repeat=n_gens):
        imgs: list = [None] * len(items)
        for idx, (vec, expr) in enumerate(items):
            if expr[0] == "one":
                imgs[idx] = b_unit
            elif expr[0] == "gen":
                imgs[idx] = assignment[gens.index(idx)]
            else:
                imgs[idx] = b.product(imgs[expr[1]], imgs[expr[2]])
        img_mat = Mat(field, imgs)
        m = img_mat.T @ k_inv
        mcols = [m.col(j) for j in range(a.dim)]
        ok = True
        for i in range(a.dim):
            if not ok:
                break
            for j in range(a.dim):
                lhs = m.apply(a.mult_col(i, j))
                rhs = b.product(mcols[i], mcols[j])
                if lhs != rhs:
                    ok = False
                    break
        if ok:
            out.append(m)
    out.sort(key=lambda mm: mm.data)
    return out


def coalgebra_morphisms(source: Coalgebra, target: Coalgebra,
                        budget: int = DEFAULT_HOM_BUDGET) -> list[Mat]:
    """All coalgebra morphisms source -> target over a finite field,
    sorted by matrix entries."""
    field = source.field
    if not field.is_finite:
        raise ValueError("hom enumeration requires a finite field")
    if source.dim == 0:
        return [Mat.zeros(field, target.dim, 0)]
    if target.dim == 0:
        return []
    n_cands = field.p ** (source.dim * target.dim)
    if n_cands <= BRUTE_HOM_THRESHOLD:
        out = []
        for entries in product(field.elements(), repeat=target.dim * source.dim):
            m = Mat(field, [entries[i * source.dim:(i + 1) * source.dim]
                            for i in range(target.dim)])
            if is_coalgebra_morphism(m, source, target):
                out.append(m)
        out.sort(key=lambda mm: mm.data)
        return out
    duals = algebra_morphisms(dual_algebra(target), dual_algebra(source), budget)
    out = [m.T for m in duals]
    out.sort(key=lambda mm: mm.data)
    return out


def grouplike_vectors(c: Coalgebra) -> list[tuple]:
    """All grouplike elements, by exhaustive search (small finite cases)."""
    field = c.field
    if not field.is_finite:
        raise ValueError("grouplike search requires a finite field")
    one = field.one
    out = []
    for v in _all_vectors(field, c.dim):
        if not any(v):
            continue
        if c.counit_of(v) != one:
            continue
        t = _clean(c.delta_vec(v))
        expect = {}
        for j, x in enumerate(v):
            if not x:
                continue
            for k, y in enumerate(v):
                if y:
                    expect[(j, k)] = field.mul(x, y)
        if t == expect:
            out.append(tuple(v))
    return out
