"""Colimits, equalizers, and the bounded final-object engine."""

import random

import pytest

from comonoids.errors import BudgetExceeded, FieldMismatch, IllFormedDiagram
from comonoids.exact import GF, Mat, rank
from comonoids.coalgebras import (
    CoalgebraMorphism,
    check_coalgebra,
    coalgebra_morphisms,
    comatrix_coalgebra,
    ground_coalgebra,
    grouplikes_coalgebra,
    is_coalgebra_morphism,
    zero_coalgebra,
)
from comonoids.limits import (
    BoundedClass,
    ConstraintProblem,
    Diagram,
    EngineBudget,
    bounded_final_object,
    bounded_limit,
    coequalizer,
    cofree_approx,
    coproduct,
    equalizer,
    factor_through_inclusion,
    finite_colimit,
    vector_space_limit,
)

F2 = GF(2)


@pytest.fixture(scope="module")
def cls1():
    return BoundedClass.build(F2, 1)


@pytest.fixture(scope="module")
def cls2():
    return BoundedClass.build(F2, 2)


# ---------------------------------------------------------------------------
# coproduct


def test_coproduct_of_grounds_is_grouplikes():
    k = ground_coalgebra(F2)
    big, i1, i2 = coproduct(k, k)
    assert big == grouplikes_coalgebra(F2, 2)
    assert i1.matrix == Mat(F2, [[1], [0]])
    assert i2.matrix == Mat(F2, [[0], [1]])


def test_coproduct_with_zero():
    c = comatrix_coalgebra(2, F2)
    big, i1, _ = coproduct(c, zero_coalgebra(F2))
    assert big == c
    assert i1.matrix == Mat.identity(F2, 4)


def test_coproduct_injections_random_pairs():
    from comonoids.families import f2_coalgebra_family
    rng = random.Random(2)
    family = [c for c in f2_coalgebra_family(2)]
    for _ in range(8):
        c1, c2 = rng.choice(family), rng.choice(family)
        big, i1, i2 = coproduct(c1, c2)
        assert check_coalgebra(big) == []
        assert is_coalgebra_morphism(i1.matrix, c1, big)
        assert is_coalgebra_morphism(i2.matrix, c2, big)


def test_coproduct_field_mismatch():
    with pytest.raises(FieldMismatch):
        coproduct(ground_coalgebra(F2), ground_coalgebra(GF(3)))


# ---------------------------------------------------------------------------
# coequalizer / equalizer


def test_coequalizer_of_equal_maps_is_identity():
    g2 = grouplikes_coalgebra(F2, 2)
    f = CoalgebraMorphism.identity(g2)
    q, proj = coequalizer(f, f)
    assert q == g2
    assert proj.matrix == Mat.identity(F2, 2)


def test_coequalizer_of_swap_glues_grouplikes():
    g2 = grouplikes_coalgebra(F2, 2)
    f = CoalgebraMorphism.identity(g2)
    g = CoalgebraMorphism(g2, g2, Mat(F2, [[0, 1], [1, 0]]))
    q, proj = coequalizer(f, g)
    assert q.dim == 1
    assert q == ground_coalgebra(F2)
    assert proj.matrix == Mat(F2, [[1, 1]])


def test_coequalizer_dimension_contract():
    from comonoids.families import f2_coalgebra_family
    rng = random.Random(4)
    family = [c for c in f2_coalgebra_family(2) if c.dim]
    for _ in range(10):
        c1, c2 = rng.choice(family), rng.choice(family)
        homs = coalgebra_morphisms(c1, c2)
        if len(homs) < 1:
            continue
        f = CoalgebraMorphism(c1, c2, rng.choice(homs))
        g = CoalgebraMorphism(c1, c2, rng.choice(homs))
        q, proj = coequalizer(f, g)
        assert q.dim == c2.dim - rank(f.matrix - g.matrix)
        assert proj.matrix @ f.matrix == proj.matrix @ g.matrix


def test_equalizer_of_equal_maps_is_source():
    g2 = grouplikes_coalgebra(F2, 2)
    f = CoalgebraMorphism.identity(g2)
    e, incl = equalizer(f, f)
    assert e == g2


def test_equalizer_of_swap_is_zero_over_q():
    from comonoids.exact import QQ
    g2 = grouplikes_coalgebra(QQ, 2)
    f = CoalgebraMorphism.identity(g2)
    g = CoalgebraMorphism(g2, g2, Mat(QQ, [[0, 1], [1, 0]]))
    e, _ = equalizer(f, g)
    assert e.dim == 0


def test_equalizer_factorization():
    g3 = grouplikes_coalgebra(F2, 3)
    g2 = grouplikes_coalgebra(F2, 2)
    f = CoalgebraMorphism(g3, g2, Mat(F2, [[1, 0, 0], [0, 1, 1]]))
    g = CoalgebraMorphism(g3, g2, Mat(F2, [[1, 1, 0], [0, 0, 1]]))
    e, incl = equalizer(f, g)
    # f and g agree exactly on the grouplikes g_0 and g_2
    assert e.dim == 2
    k = ground_coalgebra(F2)
    h = CoalgebraMorphism(k, g3, Mat(F2, [[0], [0], [1]]))
    assert f.matrix @ h.matrix == g.matrix @ h.matrix
    u = factor_through_inclusion(incl, h)
    assert incl.matrix @ u.matrix == h.matrix


# ---------------------------------------------------------------------------
# finite colimits


def test_colimit_single_object():
    c = comatrix_coalgebra(2, F2)
    res = finite_colimit(Diagram([("c", c)]))
    assert res.coalgebra == c


def test_colimit_two_objects_no_arrows_is_coproduct():
    k = ground_coalgebra(F2)
    res = finite_colimit(Diagram([("a", k), ("b", k)]))
    assert res.coalgebra == grouplikes_coalgebra(F2, 2)


def test_colimit_span_glues_grouplikes():
    # K <- K -> 2 grouplikes amalgamates to a 3-dim grouplikes coalgebra? No:
    # glue g_0 of the pair with the single grouplike of K: pushout has dim 2.
    k = ground_coalgebra(F2)
    g2 = grouplikes_coalgebra(F2, 2)
    left = Mat(F2, [[1]])
    right = Mat(F2, [[1], [0]])
    d = Diagram([("apex", k), ("l", k), ("r", g2)],
                [("f", "apex", "l", left), ("g", "apex", "r", right)])
    res = finite_colimit(d)
    assert res.coalgebra.dim == 2
    assert check_coalgebra(res.coalgebra) == []
    # gluing two disjoint grouplike pairs along one point: 3 grouplikes
    d2 = Diagram([("apex", k), ("l", g2), ("r", g2)],
                 [("f", "apex", "l", right), ("g", "apex", "r", right)])
    res2 = finite_colimit(d2)
    assert res2.coalgebra == grouplikes_coalgebra(F2, 3)
    for lab, leg in res2.cocone.items():
        assert is_coalgebra_morphism(leg.matrix, d2.by_label[lab], res2.coalgebra)


def test_diagram_validation():
    k = ground_coalgebra(F2)
    with pytest.raises(IllFormedDiagram):
        Diagram([("a", k)], [("f", "a", "missing", Mat.identity(F2, 1))])
    g2 = grouplikes_coalgebra(F2, 2)
    with pytest.raises(IllFormedDiagram):
        Diagram([("a", g2)], [("f", "a", "a", Mat.zeros(F2, 2, 2))])


# ---------------------------------------------------------------------------
# bounded final object


def test_final_object_on_zero_target(cls1):
    res = bounded_final_object(ConstraintProblem(F2, 0, ()), cls1)
    assert res.coalgebra == ground_coalgebra(F2)
    assert res.p0 == Mat.zeros(F2, 0, 1)
    assert res.certificate.ok
    assert len(res.objects) == 2  # (0, empty) and (K, zero map)


def test_cofree_line_over_dim1_class(cls1):
    res = cofree_approx(1, cls1)
    assert res.coalgebra == grouplikes_coalgebra(F2, 2)
    assert res.p0 == Mat(F2, [[0, 1]])
    assert res.certificate.ok
    assert len(res.objects) == 3
    # the mediators reported for each (G, h) are the cocone legs
    for rec, leg in zip(res.certificate.records, res.cocone):
        assert rec.count == 1
        assert rec.mediator == leg.matrix


def test_constraint_shrinks_objects(cls1):
    # force compatibility with the counit map to K: q itself must be a morphism
    k = ground_coalgebra(F2)
    eye = Mat.identity(F2, 1)
    res = bounded_final_object(
        ConstraintProblem(F2, 1, ((k, eye),)), cls1)
    # objects: (0, 0) and (K, q) where q must be a coalgebra morphism K -> K
    assert len(res.objects) == 2
    assert res.certificate.ok
    assert res.coalgebra == ground_coalgebra(F2)


def test_cofree_over_dim2_class_certifies(cls2):
    res = cofree_approx(1, cls2)
    assert res.certificate.ok
    assert len(res.objects) == 51
    assert res.coalgebra.dim == 6
    assert check_coalgebra(res.coalgebra) == []


def test_budget_guard(cls2):
    tight = EngineBudget(max_objects=10)
    with pytest.raises(BudgetExceeded):
        cofree_approx(1, cls2, tight)


def test_cofree_on_a_point(cls1):
    # v_dim = 0: every generator admits only the zero map
    res = cofree_approx(0, cls1)
    assert res.coalgebra == ground_coalgebra(F2)
    assert res.certificate.ok


def test_pushout_universal_property_exhaustive(cls2):
    # pushout of two grouplike pairs glued along a point, checked against
    # every test cocone from the enumerated dim <= 2 class
    k = ground_coalgebra(F2)
    g2 = grouplikes_coalgebra(F2, 2)
    f = Mat(F2, [[1], [0]])
    d = Diagram([("apex", k), ("l", g2), ("r", g2)],
                [("f", "apex", "l", f), ("g", "apex", "r", f)])
    res = finite_colimit(d)
    p = res.coalgebra
    leg_l, leg_r = res.cocone["l"].matrix, res.cocone["r"].matrix
    leg_apex = res.cocone["apex"].matrix
    assert leg_l @ f == leg_apex and leg_r @ f == leg_apex
    for t in cls2.generators:
        homs_p = coalgebra_morphisms(p, t)
        homs_l = coalgebra_morphisms(g2, t)
        homs_r = coalgebra_morphisms(g2, t)
        for u in homs_l:
            for v in homs_r:
                if u @ f != v @ f:
                    continue
                mediators = [m for m in homs_p
                             if m @ leg_l == u and m @ leg_r == v]
                assert len(mediators) == 1


# ---------------------------------------------------------------------------
# bounded limits


def test_vector_space_limit_equalizer_shape():
    g2 = grouplikes_coalgebra(F2, 2)
    swap = Mat(F2, [[0, 1], [1, 0]])
    d = Diagram([("a", g2), ("b", g2)],
                [("f", "a", "b", Mat.identity(F2, 2)), ("g", "a", "b", swap)])
    p, qmaps, _ = vector_space_limit(d)
    # pairs (x, y) with y = x and y = swap x: x on the diagonal
    assert p.dim == 1


def test_bounded_limit_single_object_in_class(cls2):
    c = grouplikes_coalgebra(F2, 2)
    res = bounded_limit(Diagram([("c", c)]), cls2)
    assert res.certificate.ok
    assert res.coalgebra.dim == 2
    leg = res.cone["c"]
    assert rank(leg.matrix) == 2  # isomorphic copy of c


def test_bounded_limit_empty_diagram_terminal(cls1):
    res = bounded_limit(Diagram([]), cls1)
    assert res.coalgebra == ground_coalgebra(F2)
    assert res.certificate.ok


def test_bounded_limit_matches_equalizer(cls2):
    g2 = grouplikes_coalgebra(F2, 2)
    swap = Mat(F2, [[0, 1], [1, 0]])
    f = CoalgebraMorphism.identity(g2)
    g = CoalgebraMorphism(g2, g2, swap)
    e, incl = equalizer(f, g)
    d = Diagram([("a", g2), ("b", g2)],
                [("f", "a", "b", f.matrix), ("g", "a", "b", g.matrix)])
    res = bounded_limit(d, cls2)
    assert res.certificate.ok
    assert res.coalgebra.dim == e.dim == 0


def test_bounded_limit_equalizer_nonzero(cls2):
    g3 = grouplikes_coalgebra(F2, 3)
    g2 = grouplikes_coalgebra(F2, 2)
    f = Mat(F2, [[1, 0, 0], [0, 1, 1]])
    g = Mat(F2, [[1, 1, 0], [0, 0, 1]])
    e, incl = equalizer(CoalgebraMorphism(g3, g2, f), CoalgebraMorphism(g3, g2, g))
    d = Diagram([("a", g3), ("b", g2)],
                [("f", "a", "b", f), ("g", "a", "b", g)])
    res = bounded_limit(d, cls2)
    assert res.certificate.ok
    assert res.coalgebra.dim == e.dim == 2
    # comparison maps in both directions invert each other
    qa = res.cone["a"].matrix
    # the limit cone leg into a equalizes f and g, so it factors through e
    u = factor_through_inclusion(incl, res.cone["a"])
    # and e's cone factors through the bounded limit final object: that
    # mediator is recorded for (e, q) if e lies in the class; check via ranks
    assert rank(u.matrix) == 2
