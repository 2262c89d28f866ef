"""Exact fields, dense matrices, and canonical subspaces.

Scalars are plain Python values: `fractions.Fraction` over the rationals
(automatically lowest terms with positive denominator) and ints in
[0, p) over a prime field.  Matrices are immutable and dense.  Subspaces
are stored by their reduced-row-echelon basis, so two equal subspaces
compare equal entry by entry.

Tensor flattening convention, used everywhere: the pair (i, j) with
j running over the *right* factor flattens to i * dim_right + j
(row-major, left factor major).  `kron` follows the same convention.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .errors import DimensionMismatch, FieldMismatch, InconsistentSystem


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


class Field:
    """The rationals (p is None) or the prime field F_p."""

    __slots__ = ("p", "zero", "one")

    def __init__(self, p: Optional[int] = None):
        if p is not None and not _is_prime(p):
            raise ValueError(f"characteristic must be prime, got {p}")
        self.p = p
        if p is None:
            self.zero = Fraction(0)
            self.one = Fraction(1)
        else:
            self.zero = 0
            self.one = 1

    @property
    def kind(self) -> str:
        return "rationals" if self.p is None else "prime-field"

    @property
    def is_finite(self) -> bool:
        return self.p is not None

    def coerce(self, x):
        """Bring x (int, Fraction, or string) to canonical form."""
        if self.p is None:
            if isinstance(x, Fraction):
                return x
            return Fraction(x)
        if isinstance(x, str):
            x = int(x)
        elif not isinstance(x, int):
            raise TypeError(f"cannot coerce {x!r} into F_{self.p}")
        return x % self.p

    def add(self, a, b):
        return a + b if self.p is None else (a + b) % self.p

    def sub(self, a, b):
        return a - b if self.p is None else (a - b) % self.p

    def mul(self, a, b):
        return a * b if self.p is None else (a * b) % self.p

    def neg(self, a):
        return -a if self.p is None else (-a) % self.p

    def inv(self, a):
        if not a:
            raise ZeroDivisionError("inverse of zero")
        if self.p is None:
            return 1 / a
        return pow(a, self.p - 2, self.p)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def elements(self) -> list:
        """All field elements, in canonical order (finite fields only)."""
        if self.p is None:
            raise ValueError("the rationals are not enumerable")
        return list(range(self.p))

    def render(self, a) -> str:
        """Canonical string: decimal int, or 'a/b' in lowest terms."""
        if self.p is None and a.denominator != 1:
            return f"{a.numerator}/{a.denominator}"
        return str(int(a) if self.p is None else a)

    def parse(self, s: str):
        if self.p is None:
            return Fraction(s)
        return self.coerce(s)

    def __eq__(self, other):
        return isinstance(other, Field) and self.p == other.p

    def __hash__(self):
        return hash(("Field", self.p))

    def __repr__(self):
        return "Q" if self.p is None else f"F{self.p}"


QQ = Field(None)

_gf_cache: dict = {}


def GF(p: int) -> Field:
    """The prime field F_p (cached)."""
    if p not in _gf_cache:
        _gf_cache[p] = Field(p)
    return _gf_cache[p]


def _check_same_field(a: "Mat", b: "Mat"):
    if a.field != b.field:
        raise FieldMismatch(f"{a.field} vs {b.field}")


class Mat:
    """Immutable dense matrix over an exact field."""

    __slots__ = ("field", "rows", "cols", "data")

    def __init__(self, field: Field, data: Iterable[Iterable], rows: Optional[int] = None,
                 cols: Optional[int] = None, _raw: bool = False):
        if _raw:
            self.data = tuple(row if isinstance(row, tuple) else tuple(row)
                              for row in data)
        else:
            co = field.coerce
            self.data = tuple(tuple(co(x) for x in row) for row in data)
        self.field = field
        self.rows = len(self.data) if rows is None else rows
        self.cols = (len(self.data[0]) if self.data else 0) if cols is None else cols
        for row in self.data:
            if len(row) != self.cols:
                raise DimensionMismatch("ragged rows")

    # -- constructors -------------------------------------------------
    @classmethod
    def identity(cls, field: Field, n: int) -> "Mat":
        one, zero = field.one, field.zero
        return cls(field, [[one if i == j else zero for j in range(n)] for i in range(n)],
                   n, n, _raw=True)

    @classmethod
    def zeros(cls, field: Field, rows: int, cols: int) -> "Mat":
        zero = field.zero
        return cls(field, [[zero] * cols for _ in range(rows)], rows, cols, _raw=True)

    @classmethod
    def row_vector(cls, field: Field, entries: Sequence) -> "Mat":
        return cls(field, [list(entries)], 1, len(entries))

    @classmethod
    def col_vector(cls, field: Field, entries: Sequence) -> "Mat":
        return cls(field, [[x] for x in entries], len(entries), 1)

    @classmethod
    def from_cols(cls, field: Field, cols: Sequence[Sequence], rows: Optional[int] = None) -> "Mat":
        nr = len(cols[0]) if cols else (rows or 0)
        return cls(field, [[col[i] for col in cols] for i in range(nr)], nr, len(cols))

    # -- basic access --------------------------------------------------
    def __getitem__(self, ij):
        i, j = ij
        return self.data[i][j]

    def row(self, i: int) -> tuple:
        return self.data[i]

    def col(self, j: int) -> tuple:
        return tuple(r[j] for r in self.data)

    def entries(self):
        for row in self.data:
            yield from row

    def is_zero(self) -> bool:
        return not any(any(row) for row in self.data)

    # -- arithmetic ----------------------------------------------------
    def __add__(self, other: "Mat") -> "Mat":
        _check_same_field(self, other)
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise DimensionMismatch("add requires equal shapes")
        add = self.field.add
        return Mat(self.field,
                   [tuple(add(x, y) for x, y in zip(r1, r2))
                    for r1, r2 in zip(self.data, other.data)],
                   self.rows, self.cols, _raw=True)

    def __sub__(self, other: "Mat") -> "Mat":
        _check_same_field(self, other)
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise DimensionMismatch("sub requires equal shapes")
        sub = self.field.sub
        return Mat(self.field,
                   [tuple(sub(x, y) for x, y in zip(r1, r2))
                    for r1, r2 in zip(self.data, other.data)],
                   self.rows, self.cols, _raw=True)

    def __neg__(self) -> "Mat":
        neg = self.field.neg
        return Mat(self.field, [tuple(neg(x) for x in r) for r in self.data],
                   self.rows, self.cols, _raw=True)

    def scale(self, c) -> "Mat":
        c = self.field.coerce(c)
        mul = self.field.mul
        return Mat(self.field, [tuple(mul(c, x) for x in r) for r in self.data],
                   self.rows, self.cols, _raw=True)

    def __matmul__(self, other: "Mat") -> "Mat":
        _check_same_field(self, other)
        if self.cols != other.rows:
            raise DimensionMismatch(f"matmul {self.rows}x{self.cols} @ {other.rows}x{other.cols}")
        add, mul, zero = self.field.add, self.field.mul, self.field.zero
        odata = other.data
        out = []
        for r1 in self.data:
            acc = [zero] * other.cols
            for k, x in enumerate(r1):
                if x:
                    orow = odata[k]
                    for j, y in enumerate(orow):
                        if y:
                            acc[j] = add(acc[j], mul(x, y))
            out.append(tuple(acc))
        return Mat(self.field, out, self.rows, other.cols, _raw=True)

    def apply(self, vec: Sequence) -> tuple:
        """Matrix-vector product on a plain tuple/list."""
        if self.cols != len(vec):
            raise DimensionMismatch("apply: length mismatch")
        add, mul, zero = self.field.add, self.field.mul, self.field.zero
        acc = [zero] * self.rows
        for i, row in enumerate(self.data):
            s = zero
            for x, v in zip(row, vec):
                if x and v:
                    s = add(s, mul(x, v))
            acc[i] = s
        return tuple(acc)

    def transpose(self) -> "Mat":
        return Mat(self.field, list(zip(*self.data)) if self.data else [],
                   self.cols, self.rows, _raw=True) if self.rows else \
            Mat.zeros(self.field, self.cols, 0)

    @property
    def T(self) -> "Mat":
        return self.transpose()

    def hstack(self, other: "Mat") -> "Mat":
        _check_same_field(self, other)
        if self.rows != other.rows:
            raise DimensionMismatch("hstack requires equal row counts")
        return Mat(self.field, [r1 + r2 for r1, r2 in zip(self.data, other.data)],
                   self.rows, self.cols + other.cols, _raw=True)

    def vstack(self, other: "Mat") -> "Mat":
        _check_same_field(self, other)
        if self.cols != other.cols:
            raise DimensionMismatch("vstack requires equal col counts")
        return Mat(self.field, self.data + other.data,
                   self.rows + other.rows, self.cols, _raw=True)

    def kron(self, other: "Mat") -> "Mat":
        """Kronecker product: index (i, k) flattens to i * other.rows + k."""
        _check_same_field(self, other)
        mul, zero = self.field.mul, self.field.zero
        zrow = (zero,) * other.cols
        out = []
        for arow in self.data:
            for brow in other.data:
                row = []
                for x in arow:
                    if x:
                        row.extend(mul(x, y) for y in brow)
                    else:
                        row.extend(zrow)
                out.append(tuple(row))
        return Mat(self.field, out, self.rows * other.rows,
                   self.cols * other.cols, _raw=True)

    # -- comparisons ---------------------------------------------------
    def __eq__(self, other):
        return (isinstance(other, Mat) and self.field == other.field
                and self.rows == other.rows and self.cols == other.cols
                and self.data == other.data)

    def __hash__(self):
        return hash((self.field, self.rows, self.cols, self.data))

    def __repr__(self):
        body = "; ".join(" ".join(self.field.render(x) for x in row) for row in self.data)
        return f"Mat({self.field}, {self.rows}x{self.cols}: {body})"


def kron_vec(field: Field, u: Sequence, v: Sequence) -> tuple:
    """Flattened tensor of two coordinate vectors (left factor major)."""
    mul, zero = field.mul, field.zero
    n = len(v)
    out = [zero] * (len(u) * n)
    for i, x in enumerate(u):
        if x:
            base = i * n
            for j, y in enumerate(v):
                if y:
                    out[base + j] = mul(x, y)
    return tuple(out)


def tensor_perm_matrix(field: Field, dims: Sequence[int], perm: Sequence[int]) -> Mat:
    """Permutation of tensor slots as a matrix.

    Sends the basis vector with multi-index (i_0, .., i_{k-1}) to the one
    with multi-index (i_{perm[0]}, .., i_{perm[k-1]}); the target flattening
    uses dims reordered by perm.
    """
    k = len(dims)
    total = 1
    for d in dims:
        total *= d
    new_dims = [dims[s] for s in perm]
    old_strides = [1] * k
    for s in range(k - 2, -1, -1):
        old_strides[s] = old_strides[s + 1] * dims[s + 1]
    new_strides = [1] * k
    for s in range(k - 2, -1, -1):
        new_strides[s] = new_strides[s + 1] * new_dims[s + 1]
    one, zero = field.one, field.zero
    rows = [[zero] * total for _ in range(total)]
    for flat in range(total):
        rem = flat
        idx = []
        for s in range(k):
            idx.append(rem // old_strides[s])
            rem %= old_strides[s]
        new_flat = sum(idx[perm[s]] * new_strides[s] for s in range(k))
        rows[new_flat][flat] = one
    return Mat(field, rows, total, total, _raw=True)


def rref(m: Mat) -> tuple[Mat, tuple]:
    """Reduced row echelon form and pivot columns (row space preserved)."""
    field = m.field
    sub, mul, inv = field.sub, field.mul, field.inv
    rows = [list(r) for r in m.data]
    nr, nc = m.rows, m.cols
    pivots = []
    r = 0
    for c in range(nc):
        if r == nr:
            break
        pr = None
        for i in range(r, nr):
            if rows[i][c]:
                pr = i
                break
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        pv = rows[r][c]
        if pv != field.one:
            iv = inv(pv)
            rows[r] = [mul(iv, x) for x in rows[r]]
        prow = rows[r]
        for i in range(nr):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [sub(x, mul(f, y)) for x, y in zip(rows[i], prow)]
        pivots.append(c)
        r += 1
    return Mat(field, rows, nr, nc), tuple(pivots)


def rank(m: Mat) -> int:
    return len(rref(m)[1])


def kernel(m: Mat) -> Mat:
    """Canonical basis (rows) of the right null space {x : m @ x = 0}."""
    field = m.field
    R, pivots = rref(m)
    pivset = set(pivots)
    free = [c for c in range(m.cols) if c not in pivset]
    neg, zero, one = field.neg, field.zero, field.one
    vecs = []
    for f in free:
        v = [zero] * m.cols
        v[f] = one
        for r, p in enumerate(pivots):
            v[p] = neg(R.data[r][f])
        vecs.append(v)
    if not vecs:
        return Mat.zeros(field, 0, m.cols)
    K, _ = rref(Mat(field, vecs))
    return Mat(field, [row for row in K.data if any(row)], None, m.cols)


def solve(a: Mat, b: Mat) -> tuple[Mat, "Subspace"]:
    """One solution x of a @ x = b plus the homogeneous kernel.

    b may carry several right-hand sides as columns.  The particular
    solution sets all free variables to zero.  Raises InconsistentSystem
    when no solution exists.
    """
    _check_same_field(a, b)
    if a.rows != b.rows:
        raise DimensionMismatch("solve: row counts differ")
    field = a.field
    aug = a.hstack(b)
    R, pivots = rref(aug)
    for p in pivots:
        if p >= a.cols:
            raise InconsistentSystem("no solution")
    zero = field.zero
    cols = []
    for j in range(b.cols):
        x = [zero] * a.cols
        for r, p in enumerate(pivots):
            x[p] = R.data[r][a.cols + j]
        cols.append(x)
    particular = Mat.from_cols(field, cols, rows=a.cols) if cols else Mat.zeros(field, a.cols, 0)
    ker = Subspace(field, a.cols, kernel(a))
    return particular, ker


def solve_vec(a: Mat, b: Sequence) -> tuple:
    """Particular solution of a @ x = b for a plain vector b."""
    x, _ = solve(a, Mat.col_vector(a.field, b))
    return x.col(0)


class Subspace:
    """A subspace of F^ambient in canonical reduced-row-echelon form."""

    __slots__ = ("field", "ambient", "basis", "pivots")

    def __init__(self, field: Field, ambient: int, basis: Mat, _canonical: bool = False):
        if basis.cols != ambient:
            raise DimensionMismatch("basis width must equal ambient dimension")
        if _canonical:
            self.basis = basis
            self.pivots = tuple(next(j for j, x in enumerate(row) if x) for row in basis.data)
        else:
            R, pivots = rref(basis)
            keep = [row for row in R.data if any(row)]
            self.basis = Mat(field, keep, len(keep), ambient, _raw=True)
            self.pivots = pivots[:len(keep)]
        self.field = field
        self.ambient = ambient

    # -- constructors --------------------------------------------------
    @classmethod
    def from_vectors(cls, field: Field, ambient: int, vectors: Iterable[Sequence]) -> "Subspace":
        vecs = [tuple(field.coerce(x) for x in v) for v in vectors]
        if not vecs:
            return cls.zero(field, ambient)
        return cls(field, ambient, Mat(field, vecs, len(vecs), ambient, _raw=True))

    @classmethod
    def zero(cls, field: Field, ambient: int) -> "Subspace":
        return cls(field, ambient, Mat.zeros(field, 0, ambient), _canonical=True)

    @classmethod
    def full(cls, field: Field, ambient: int) -> "Subspace":
        return cls(field, ambient, Mat.identity(field, ambient), _canonical=True)

    # -- structure -----------------------------------------------------
    @property
    def dim(self) -> int:
        return self.basis.rows

    def vectors(self) -> tuple:
        return self.basis.data

    def reduce(self, vec: Sequence) -> tuple:
        """Normal form of vec modulo this subspace (pivot coords cleared)."""
        field = self.field
        sub, mul = field.sub, field.mul
        v = [field.coerce(x) for x in vec]
        for row, p in zip(self.basis.data, self.pivots):
            c = v[p]
            if c:
                v = [sub(x, mul(c, y)) for x, y in zip(v, row)]
        return tuple(v)

    def contains_vector(self, vec: Sequence) -> bool:
        return not any(self.reduce(vec))

    def contains(self, other: "Subspace") -> bool:
        return all(self.contains_vector(v) for v in other.basis.data)

    def __le__(self, other: "Subspace") -> bool:
        return other.contains(self)

    def coordinates(self, vec: Sequence) -> tuple:
        """Coordinates of vec in this basis (raises if not a member)."""
        v = [self.field.coerce(x) for x in vec]
        coords = tuple(v[p] for p in self.pivots)
        rebuilt = [self.field.zero] * self.ambient
        for c, row in zip(coords, self.basis.data):
            if c:
                rebuilt = [self.field.add(x, self.field.mul(c, y))
                           for x, y in zip(rebuilt, row)]
        if tuple(rebuilt) != tuple(v):
            raise InconsistentSystem("vector not in subspace")
        return coords

    def sum(self, other: "Subspace") -> "Subspace":
        self._compat(other)
        return Subspace.from_vectors(self.field, self.ambient,
                                     list(self.basis.data) + list(other.basis.data))

    def intersect(self, other: "Subspace") -> "Subspace":
        """Zassenhaus block trick: rref of [[U U], [W 0]]."""
        self._compat(other)
        n = self.ambient
        zero = self.field.zero
        rows = [tuple(r) + tuple(r) for r in self.basis.data]
        rows += [tuple(r) + (zero,) * n for r in other.basis.data]
        if not rows:
            return Subspace.zero(self.field, n)
        R, _ = rref(Mat(self.field, rows, len(rows), 2 * n, _raw=True))
        inter = []
        for row in R.data:
            if not any(row[:n]) and any(row[n:]):
                inter.append(row[n:])
        return Subspace.from_vectors(self.field, n, inter)

    def tensor(self, other: "Subspace") -> "Subspace":
        """Image of U (x) W inside the flattened tensor square."""
        if self.field != other.field:
            raise FieldMismatch("tensor of subspaces over different fields")
        vecs = [kron_vec(self.field, u, w)
                for u in self.basis.data for w in other.basis.data]
        return Subspace.from_vectors(self.field, self.ambient * other.ambient, vecs)

    def quotient_basis(self) -> Mat:
        """Standard basis vectors at non-pivot coordinates: canonical
        representatives of a basis of ambient/self."""
        field = self.field
        pivset = set(self.pivots)
        rows = []
        for i in range(self.ambient):
            if i not in pivset:
                v = [field.zero] * self.ambient
                v[i] = field.one
                rows.append(v)
        return Mat(field, rows, len(rows), self.ambient)

    def annihilator(self) -> "Subspace":
        """Functionals (as coordinate vectors) vanishing on this subspace."""
        K = kernel(self.basis) if self.dim else Mat.identity(self.field, self.ambient)
        return Subspace(self.field, self.ambient, K)

    def _compat(self, other: "Subspace"):
        if self.field != other.field:
            raise FieldMismatch("subspaces over different fields")
        if self.ambient != other.ambient:
            raise DimensionMismatch("subspaces in different ambient spaces")

    def __eq__(self, other):
        return (isinstance(other, Subspace) and self.field == other.field
                and self.ambient == other.ambient and self.basis == other.basis)

    def __hash__(self):
        return hash((self.field, self.ambient, self.basis))

    def __repr__(self):
        return f"Subspace(dim {self.dim} of {self.ambient} over {self.field})"


class RowSpace:
    """Mutable row-space accumulator for closure loops.

    Rows are kept in echelon form (not reduced) with a pivot index, so
    insertion costs one reduction pass.  `subspace()` canonicalizes.
    """

    __slots__ = ("field", "ambient", "_rows", "_pivot_of_row", "_row_of_pivot")

    def __init__(self, field: Field, ambient: int):
        self.field = field
        self.ambient = ambient
        self._rows: list = []
        self._pivot_of_row: list = []
        self._row_of_pivot: dict = {}

    @property
    def dim(self) -> int:
        return len(self._rows)

    def _reduce(self, vec: Sequence) -> list:
        field = self.field
        sub, mul, div = field.sub, field.mul, field.div
        v = list(vec)
        while True:
            lead = None
            for j, x in enumerate(v):
                if x:
                    lead = j
                    break
            if lead is None or lead not in self._row_of_pivot:
                return v
            r = self._row_of_pivot[lead]
            row = self._rows[r]
            f = div(v[lead], row[lead])
            v = [sub(x, mul(f, y)) for x, y in zip(v, row)]

    def contains(self, vec: Sequence) -> bool:
        return not any(self._reduce(vec))

    def add(self, vec: Sequence) -> bool:
        """Insert vec; returns True when the space grew."""
        v = self._reduce(vec)
        lead = None
        for j, x in enumerate(v):
            if x:
                lead = j
                break
        if lead is None:
            return False
        self._row_of_pivot[lead] = len(self._rows)
        self._pivot_of_row.append(lead)
        self._rows.append(v)
        return True

    def extend(self, vecs: Iterable[Sequence]) -> bool:
        grew = False
        for v in vecs:
            grew |= self.add(v)
        return grew

    def subspace(self) -> Subspace:
        return Subspace.from_vectors(self.field, self.ambient, self._rows)
