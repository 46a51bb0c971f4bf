import random
from fractions import Fraction

import pytest

from gradedhecke import linalg
from gradedhecke.bigraded import Bigraded, shift_gr, tensor
from gradedhecke.errors import BadLevels, LevelMismatch, NonHalfIntegerTwist
from gradedhecke.mixed import (
    MixedObject,
    collapse_grading,
    gr,
    hom_enriched,
    hom_graded,
    hom_graded_over,
    hom_mixed,
    induce,
    oblv_gr_sum,
    tate_twist,
    tensor_mixed,
    unit,
)
from gradedhecke.sampling import random_mixed


def swap_object():
    """Two-dimensional weight-0 space with theta the transposition."""
    under = Bigraded({(0, 0): 2})
    th = [[Fraction(0), Fraction(1)], [Fraction(1), Fraction(0)]]
    return MixedObject(under, {(0, 0): th})


def rank_one(w, theta=1):
    return MixedObject(Bigraded({(w, 0): 1}), {(w, 0): [[Fraction(theta)]]})


def test_gr_forgets_theta():
    assert gr(unit()).entries == {(0, 0): 1}
    assert gr(swap_object()).entries == {(0, 0): 2}
    jordan = MixedObject(
        Bigraded({(0, 0): 2}),
        {(0, 0): [[Fraction(1), Fraction(1)], [Fraction(0), Fraction(1)]]},
    )
    assert gr(jordan).entries == {(0, 0): 2}


def test_theta_validation():
    with pytest.raises(ValueError):
        MixedObject(Bigraded({(0, 0): 1}), {(0, 0): [[Fraction(0)]]})
    with pytest.raises(ValueError):
        # eigenvalue 2 is not a root of unity times unipotent
        MixedObject(Bigraded({(0, 0): 1}), {(0, 0): [[Fraction(2)]]})


def test_theta_commutes_with_d():
    under = Bigraded({(0, 0): 1, (0, 1): 1}, {(0, 0): [[Fraction(1)]]})
    with pytest.raises(ValueError):
        MixedObject(under, {(0, 0): [[Fraction(1)]], (0, 1): [[Fraction(-1)]]})


def test_tate_twist():
    t = tate_twist(unit(), Fraction(-1, 2))
    assert gr(t).entries == {(1, 0): 1}
    m = swap_object()
    t0 = tate_twist(m, 0)
    assert gr(t0).entries == gr(m).entries
    with pytest.raises(NonHalfIntegerTwist):
        tate_twist(m, Fraction(1, 3))
    rng = random.Random(0)
    for _ in range(5):
        m = random_mixed(rng)
        assert gr(tate_twist(m, 1)).entries == shift_gr(gr(m), 2).entries


def test_hom_enriched_unit():
    h = hom_enriched(unit(), unit())
    assert gr(h).entries == {(0, 0): 1}
    assert h.theta[(0, 0)] == [[Fraction(1)]]


def test_hom_enriched_swap():
    m = swap_object()
    h = hom_enriched(m, m)
    assert gr(h).entries == {(0, 0): 4}
    th = h.theta[(0, 0)]
    # conjugation by a transposition squares to the identity
    assert linalg.mat_eq(linalg.mat_mul(th, th), linalg.identity(4))
    assert not linalg.mat_eq(th, linalg.identity(4))


def test_hom_enriched_relative_weight():
    h = hom_enriched(rank_one(1), rank_one(3))
    assert gr(h).entries == {(2, 0): 1}


def test_hom_enriched_level_mismatch():
    with pytest.raises(LevelMismatch):
        hom_enriched(unit(1), unit(2))


def test_hom_graded():
    assert hom_graded(unit(), unit()).entries == {(0, 0): 1}
    assert hom_graded(rank_one(0), rank_one(2)).is_zero()


def test_hom_graded_dichotomy():
    # the unit over pt_2, seen over pt_1 versus over pt_2
    assert hom_graded_over(unit(2), unit(2), 1).entries == {(0, 0): 2}
    assert hom_graded_over(unit(2), unit(2), 2).entries == {(0, 0): 1}


def test_hom_graded_blind_to_theta():
    rng = random.Random(1)
    for _ in range(5):
        m = random_mixed(rng)
        n = random_mixed(rng)
        m2 = MixedObject(m.underlying, None, m.level)  # identity theta
        n2 = MixedObject(n.underlying, None, n.level)
        assert hom_graded(m, n).entries == hom_graded(m2, n2).entries


def test_hom_mixed_unit():
    h = hom_mixed(unit(), unit())
    coh = h.cohomology_dims()
    assert coh.get((0, 0)) == 1
    assert coh.get((0, 1)) == 1


def test_hom_mixed_distinct_weights():
    h = hom_mixed(rank_one(0), rank_one(2))
    assert h.cohomology_dims().get((0, 0), 0) == 0


def test_hom_mixed_swap_centralizer():
    m = swap_object()
    h = hom_mixed(m, m)
    assert h.cohomology_dims().get((0, 0)) == 2


def test_hom_mixed_is_complex():
    rng = random.Random(2)
    for _ in range(5):
        m, n = random_mixed(rng), random_mixed(rng)
        h = hom_mixed(m, n)
        Bigraded(h.entries, h.diff, h.basis)  # validates d o d = 0


def test_induce_unit():
    two = induce(unit(2), 1)
    assert two.level == 1
    assert gr(two).entries == {(0, 0): 2}
    th = two.theta[(0, 0)]
    assert linalg.mat_eq(linalg.mat_mul(th, th), linalg.identity(2))
    assert th[1][0] == 1 and th[0][1] == 1


def test_induce_same_level():
    m = swap_object()
    assert gr(induce(m, 1)).entries == gr(m).entries
    with pytest.raises(BadLevels):
        induce(unit(2), 4)


def test_induce_dimension_multiplicity():
    rng = random.Random(3)
    for _ in range(4):
        m = random_mixed(rng, level=4)
        for n in (1, 2, 4):
            ind = induce(m, n)
            assert ind.level == n
            for k, d in gr(m).entries.items():
                assert gr(ind).entries[k] == (4 // n) * d
            # companion theta really is a root of the original theta
            r = 4 // n
            for k, th in ind.theta.items():
                p = linalg.identity(len(th))
                for _ in range(r):
                    p = linalg.mat_mul(p, th)
                orig = m.theta[k]
                dim = len(orig)
                for blk in range(r):
                    for i in range(dim):
                        for j in range(dim):
                            assert p[blk * dim + i][blk * dim + j] == orig[i][j]


def test_induce_hom_dichotomy():
    # over pt_1 the induced unit has a two-dimensional Hom, over pt_2 one
    over1 = induce(unit(2), 1)
    assert hom_mixed(over1, over1).cohomology_dims().get((0, 0)) == 2
    over2 = unit(2)
    assert hom_mixed(over2, over2).cohomology_dims().get((0, 0)) == 1


def test_oblv_gr_sum():
    lhs, rhs, ok = oblv_gr_sum(unit(), unit())
    assert ok and lhs == {0: 1} == rhs
    lhs, rhs, ok = oblv_gr_sum(swap_object(), unit())
    assert ok and lhs == {0: 2} == rhs
    rng = random.Random(4)
    for _ in range(6):
        m, n = random_mixed(rng), random_mixed(rng)
        _, _, ok = oblv_gr_sum(m, n)
        assert ok


def test_weight_zero_summand_splitting():
    rng = random.Random(5)
    for _ in range(5):
        m, n = random_mixed(rng), random_mixed(rng)
        graded = hom_graded(m, n)
        full = collapse_grading(hom_enriched(m, n).underlying)
        # the weight-0 piece sits inside the total space degreewise
        for (g, c), d in graded.entries.items():
            assert d <= full.dim(0, c)


def test_gr_monoidal():
    rng = random.Random(6)
    for _ in range(4):
        m, n = random_mixed(rng, n_groups=2), random_mixed(rng, n_groups=2)
        t = tensor_mixed(m, n)
        ref = tensor(gr(m), gr(n))
        assert gr(t).entries == ref.entries
        for k in ref.diff:
            assert linalg.mat_eq(gr(t).d(*k), ref.d(*k))
        t._validate()


def test_mixed_json_roundtrip():
    m = swap_object()
    m2 = MixedObject.from_json(m.to_json())
    assert gr(m2).entries == gr(m).entries
    assert m2.theta[(0, 0)] == m.theta[(0, 0)]
    assert m2.level == m.level
