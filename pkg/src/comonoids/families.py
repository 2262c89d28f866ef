"""Standard example structures and deterministic test families.

Monoid bialgebras (all basis elements grouplike), duals of small
commutative algebras, grouplike-graded coactions, and conjugation by
random basis changes.  The dim-3 coalgebra family extends the exhaustive
dim <= 2 enumeration with a deterministic derived set, since exhausting
all dim-3 structure tensors over F_2 is out of reach.
"""

from __future__ import annotations

import random
from typing import Sequence

from .exact import Field, GF, Mat, Subspace, rank, solve
from .coalgebras import (
    Algebra,
    Coalgebra,
    coalgebra_morphisms,
    comatrix_coalgebra,
    dual_coalgebra,
    enumerate_coalgebras,
    grouplike_vectors,
    grouplikes_coalgebra,
)
from .limits import coproduct
from .hopf import (
    Bialgebra,
    ComoduleCoalgebra,
    HopfAlgebra,
    ModuleCoalgebra,
    check_comodule_coalgebra,
    check_module_coalgebra,
    hopf_from_bialgebra,
    trivial_coaction,
)


# ---------------------------------------------------------------------------
# algebras


def truncated_polynomial_algebra(field: Field, k: int) -> Algebra:
    """K[x]/x^k with basis 1, x, .., x^(k-1)."""
    zero, one = field.zero, field.one
    tensor = [[[one if (i + j) == t else zero for t in range(k)]
               for j in range(k)] for i in range(k)]
    unit = [one] + [zero] * (k - 1)
    return Algebra.from_tensor(field, tensor, unit, name=f"K[x]/x^{k}")


def split_algebra(field: Field, n: int) -> Algebra:
    """K x .. x K with componentwise multiplication."""
    zero, one = field.zero, field.one
    tensor = [[[one if i == j == t else zero for t in range(n)]
               for j in range(n)] for i in range(n)]
    return Algebra.from_tensor(field, tensor, [one] * n, name=f"K^{n}")


def upper_triangular_algebra(field: Field) -> Algebra:
    """2x2 upper triangular matrices, basis E11, E22, E12."""
    zero, one = field.zero, field.one
    # E11*E11=E11, E11*E12=E12, E22*E22=E22, E12*E22=E12, rest 0
    t = [[[zero] * 3 for _ in range(3)] for _ in range(3)]
    t[0][0][0] = one
    t[0][2][2] = one
    t[1][1][1] = one
    t[2][1][2] = one
    return Algebra.from_tensor(field, t, [one, one, zero], name="UT2")


def cyclic_group_algebra_mult(field: Field, n: int) -> Algebra:
    """Group algebra of Z/n, basis the group elements."""
    zero, one = field.zero, field.one
    tensor = [[[one if (i + j) % n == t else zero for t in range(n)]
               for j in range(n)] for i in range(n)]
    unit = [one] + [zero] * (n - 1)
    return Algebra.from_tensor(field, tensor, unit, name=f"K[C{n}]")


# ---------------------------------------------------------------------------
# bialgebras and Hopf algebras from monoids


def monoid_bialgebra(field: Field, table: Sequence[Sequence[int]],
                     unit_index: int = 0, name: str = "") -> Bialgebra:
    """Monoid algebra with every basis element grouplike.

    table[i][j] is the index of the product of elements i and j."""
    n = len(table)
    zero, one = field.zero, field.one
    tensor = [[[one if table[i][j] == t else zero for t in range(n)]
               for j in range(n)] for i in range(n)]
    unit = [one if i == unit_index else zero for i in range(n)]
    alg = Algebra.from_tensor(field, tensor, unit, name=name)
    coalg = grouplikes_coalgebra(field, n, name=name)
    return Bialgebra.from_parts(alg, coalg, name=name)


def cyclic_group_bialgebra(field: Field, n: int) -> Bialgebra:
    table = [[(i + j) % n for j in range(n)] for i in range(n)]
    return monoid_bialgebra(field, table, 0, name=f"K[C{n}]")


def cyclic_group_hopf(field: Field, n: int) -> HopfAlgebra:
    return hopf_from_bialgebra(cyclic_group_bialgebra(field, n))


def idempotent_monoid_bialgebra(field: Field) -> Bialgebra:
    """The monoid {1, e} with e^2 = e (not a group: no antipode)."""
    return monoid_bialgebra(field, [[0, 1], [1, 1]], 0, name="K[1,e]")


def dual_group_bialgebra(field: Field, n: int) -> Bialgebra:
    """Functions on Z/n: pointwise product, group-law coproduct."""
    zero, one = field.zero, field.one
    alg = split_algebra(field, n)
    tensor = [[[one if (j + k) % n == i else zero for k in range(n)]
               for j in range(n)] for i in range(n)]
    # delta(delta_i) = sum_{j+k=i} delta_j (x) delta_k ; counit = eval at 0
    cols = []
    for i in range(n):
        col = [zero] * (n * n)
        for j in range(n):
            col[j * n + ((i - j) % n)] = one
        cols.append(col)
    delta = Mat.from_cols(field, cols, rows=n * n)
    counit = Mat.row_vector(field, [one] + [zero] * (n - 1))
    coalg = Coalgebra(field, n, delta, counit, name=f"K^{n}dual")
    return Bialgebra.from_parts(alg, coalg, name=f"O(C{n})")


def small_bialgebras(field: Field) -> list[Bialgebra]:
    """A deterministic pool of bialgebras of dimension <= 3."""
    out = [
        monoid_bialgebra(field, [[0]], 0, name="K"),
        cyclic_group_bialgebra(field, 2),
        idempotent_monoid_bialgebra(field),
        cyclic_group_bialgebra(field, 3),
        monoid_bialgebra(field, [[0, 1, 2], [1, 1, 1], [2, 1, 2]], 0, name="K[M3]"),
        dual_group_bialgebra(field, 2),
        dual_group_bialgebra(field, 3),
    ]
    return out


# ---------------------------------------------------------------------------
# coalgebra families


def standard_dim3_coalgebras(field: Field) -> list[Coalgebra]:
    """Duals of the standard commutative/noncommutative dim-3 algebras."""
    algs = [
        split_algebra(field, 3),
        truncated_polynomial_algebra(field, 3),
        upper_triangular_algebra(field),
        cyclic_group_algebra_mult(field, 3),
    ]
    out = []
    for a in algs:
        c = dual_coalgebra(a)
        c.name = f"{a.name}^*"
        out.append(c)
    return out


def f2_coalgebra_family(max_dim: int = 3) -> list[Coalgebra]:
    """Deterministic F_2 test family.

    Dimensions 0-2 are the exhaustive enumeration; dimension 3 is derived:
    coproducts of the ground coalgebra with every dim-2 structure plus the
    standard dual-algebra examples."""
    field = GF(2)
    family: list[Coalgebra] = []
    for d in range(min(max_dim, 2) + 1):
        family.extend(enumerate_coalgebras(field, d))
    if max_dim >= 3:
        ground = enumerate_coalgebras(field, 1)[0]
        for c2 in enumerate_coalgebras(field, 2):
            big, _, _ = coproduct(ground, c2)
            big.name = f"K+{c2.name}"
            family.append(big)
        family.extend(standard_dim3_coalgebras(field))
    return family


def all_subspaces(field: Field, dim: int) -> list[Subspace]:
    """Every subspace of F^dim (finite fields, small dim)."""
    from itertools import product as iproduct
    out = [Subspace.zero(field, dim)]
    seen = {out[0]}
    vec_pool = [v for v in iproduct(field.elements(), repeat=dim) if any(v)]
    stack = [Subspace.zero(field, dim)]
    while stack:
        w = stack.pop()
        for v in vec_pool:
            if w.contains_vector(v):
                continue
            bigger = w.sum(Subspace.from_vectors(field, dim, [v]))
            if bigger not in seen:
                seen.add(bigger)
                out.append(bigger)
                stack.append(bigger)
    out.sort(key=lambda s: (s.dim, s.basis.data))
    return out


def random_invertible(field: Field, n: int, rng: random.Random) -> Mat:
    while True:
        if field.is_finite:
            data = [[rng.randrange(field.p) for _ in range(n)] for _ in range(n)]
        else:
            data = [[rng.randint(-3, 3) for _ in range(n)] for _ in range(n)]
        m = Mat(field, data, n, n)
        if rank(m) == n:
            return m
    raise AssertionError


def conjugate_coalgebra(c: Coalgebra, p: Mat, name: str = "") -> Coalgebra:
    """Transport of structure along the basis change x |-> p x."""
    pinv, _ = solve(p, Mat.identity(c.field, c.dim))
    delta = p.kron(p) @ c.delta @ pinv
    counit = c.counit @ pinv
    return Coalgebra(c.field, c.dim, delta, counit, name=name or c.name)


def random_coalgebra(field: Field, dim: int, rng: random.Random) -> Coalgebra:
    """A valid coalgebra: a standard seed conjugated by a random basis
    change."""
    seeds = []
    if dim == 0:
        return enumerate_coalgebras(GF(2), 0)[0] if field.is_finite else \
            Coalgebra(field, 0, Mat.zeros(field, 0, 0), Mat.zeros(field, 1, 0))
    seeds.append(grouplikes_coalgebra(field, dim))
    seeds.append(dual_coalgebra(truncated_polynomial_algebra(field, dim)))
    if dim == 4:
        seeds.append(comatrix_coalgebra(2, field))
    if dim == 3:
        seeds.append(dual_coalgebra(upper_triangular_algebra(field)))
    seed = seeds[rng.randrange(len(seeds))]
    return conjugate_coalgebra(seed, random_invertible(field, dim, rng))


# ---------------------------------------------------------------------------
# coactions and actions


def diagonal_coactions(h: Bialgebra, c: Coalgebra) -> list[Mat]:
    """All valid coactions sending each basis vector e_i to e_i (x) g_i
    for grouplikes g_i of H (includes the trivial coaction)."""
    from itertools import product as iproduct
    field = h.field
    gls = grouplike_vectors(h.coalgebra())
    out = []
    for pick in iproduct(range(len(gls)), repeat=c.dim):
        cols = []
        for j in range(c.dim):
            col = [field.zero] * (c.dim * h.dim)
            for k, v in enumerate(gls[pick[j]]):
                if v:
                    col[j * h.dim + k] = v
            cols.append(col)
        rho = (Mat.from_cols(field, cols, rows=c.dim * h.dim) if cols
               else Mat.zeros(field, 0 if c.dim else c.dim, c.dim))
        cand = ComoduleCoalgebra(h, c, rho)
        if not check_comodule_coalgebra(cand):
            out.append(rho)
    return out


def coalgebra_automorphisms(c: Coalgebra) -> list[Mat]:
    return [m for m in coalgebra_morphisms(c, c) if rank(m) == c.dim]


def conjugate_coaction(h: Bialgebra, c: Coalgebra, rho: Mat, phi: Mat) -> Mat:
    """Transport a coaction along a coalgebra automorphism phi of C."""
    phi_inv, _ = solve(phi, Mat.identity(c.field, c.dim))
    return phi.kron(Mat.identity(c.field, h.dim)) @ rho @ phi_inv


def random_comodule_coalgebras(count: int, seed: int = 0,
                               max_dim: int = 3) -> list[ComoduleCoalgebra]:
    """Deterministic pool of valid comodule coalgebras over F_2 with
    dim C, dim H <= max_dim, sampled by grouplike gradings conjugated by
    random coalgebra automorphisms."""
    field = GF(2)
    rng = random.Random(seed)
    hs = [b for b in small_bialgebras(field) if b.dim <= max_dim]
    cs = [c for c in f2_coalgebra_family(max_dim) if 0 < c.dim <= max_dim]
    pool = []
    seen = set()
    for h in hs:
        for c in cs:
            autos = coalgebra_automorphisms(c)
            for rho in diagonal_coactions(h, c):
                variants = [rho]
                variants.extend(conjugate_coaction(h, c, rho, phi)
                                for phi in autos)
                for r in variants:
                    key = (id(h), hash(c), hash(r))
                    if key in seen:
                        continue
                    seen.add(key)
                    cand = ComoduleCoalgebra(h, c, r)
                    if not check_comodule_coalgebra(cand):
                        pool.append(cand)
    rng.shuffle(pool)
    if len(pool) >= count:
        return pool[:count]
    # pad with trivial coactions if the graded pool is short
    extra = []
    for h in hs:
        for c in cs:
            cand = ComoduleCoalgebra(h, c, trivial_coaction(h, c))
            extra.append(cand)
    i = 0
    while len(pool) < count and i < len(extra):
        pool.append(extra[i])
        i += 1
    return pool[:count]


def left_multiplication_action(h: Bialgebra) -> ModuleCoalgebra:
    """H acting on itself by multiplication (a module coalgebra when the
    coalgebra part is grouplike-graded accordingly)."""
    field = h.field
    halg = h.algebra()
    cols = []
    for i in range(h.dim):
        for j in range(h.dim):
            cols.append(halg.mult_col(i, j))
    action = Mat.from_cols(field, cols, rows=h.dim)
    return ModuleCoalgebra(h, h.coalgebra(), action)


def random_module_coalgebras(count: int, seed: int = 0,
                             max_dim: int = 3) -> list[ModuleCoalgebra]:
    """Valid module coalgebras over F_2: trivial actions plus group
    algebras acting on themselves."""
    field = GF(2)
    rng = random.Random(seed)
    hs = [b for b in small_bialgebras(field) if b.dim <= max_dim]
    cs = [c for c in f2_coalgebra_family(max_dim) if 0 < c.dim <= max_dim]
    pool = []
    for h in hs:
        mc = left_multiplication_action(h)
        if not check_module_coalgebra(mc):
            pool.append(mc)
        for c in cs:
            from .hopf import trivial_action
            mc = ModuleCoalgebra(h, c, trivial_action(h, c))
            if not check_module_coalgebra(mc):
                pool.append(mc)
    rng.shuffle(pool)
    return pool[:count]
