import random
from fractions import Fraction

import pytest

from gradedhecke import linalg
from gradedhecke.bigraded import (
    Bigraded,
    cone,
    decompose_pure,
    hom_complex,
    inclusion_map,
    shear_bwd,
    shear_fwd,
    shift_coh,
    shift_gr,
    t_truncate,
    tensor,
    unit,
    weight,
    weight_truncate,
)
from gradedhecke.errors import NotPure
from gradedhecke.sampling import random_bigraded


def one_dim(g, c):
    return Bigraded({(g, c): 1})


def same(v, w):
    if v.entries != w.entries:
        return False
    keys = set(v.diff) | set(w.diff)
    return all(linalg.mat_eq(v.d(*k), w.d(*k)) for k in keys)


def test_weight_convention():
    assert weight(0, 0) == 0
    assert weight(3, 1) == 2
    assert weight(0, 2) == -2


def test_shift_coh_identity():
    v = one_dim(0, 0)
    assert same(shift_coh(v, 0), v)


def test_shift_coh_one():
    v = shift_coh(one_dim(0, 0), 1)
    assert v.entries == {(0, -1): 1}
    assert weight(0, -1) == 1


def test_shift_coh_two_term():
    v = Bigraded({(0, 0): 1, (0, 1): 1}, {(0, 0): [[Fraction(1)]]})
    w = shift_coh(v, 2)
    assert w.entries == {(0, -2): 1, (0, -1): 1}
    assert linalg.fast_rank(w.d(0, -2)) == 1


def test_shift_coh_sign():
    v = Bigraded({(0, 0): 1, (0, 1): 1}, {(0, 0): [[Fraction(1)]]})
    w = shift_coh(v, 1)
    assert w.d(0, -1)[0][0] == -1


def test_shift_gr_examples():
    v = shift_gr(one_dim(2, 0), 2)
    assert v.entries == {(0, 0): 1}
    r = random_bigraded(random.Random(0))
    assert same(shift_gr(r, 0), r)
    assert same(shift_gr(shift_gr(r, 3), -5), shift_gr(r, -2))


def test_tensor_unit():
    rng = random.Random(1)
    for _ in range(5):
        v = random_bigraded(rng)
        assert tensor(unit(), v).entries == v.entries
        assert same(tensor(unit(), v), v)


def test_tensor_one_dims():
    t = tensor(one_dim(1, 0), one_dim(2, 3))
    assert t.entries == {(3, 3): 1}


def test_tensor_d_squared():
    rng = random.Random(2)
    for _ in range(10):
        v, w = random_bigraded(rng), random_bigraded(rng)
        t = tensor(v, w)
        Bigraded(t.entries, t.diff, t.basis)  # validates d o d = 0


def test_tensor_dimension_convolution():
    rng = random.Random(3)
    v, w = random_bigraded(rng), random_bigraded(rng)
    t = tensor(v, w)
    expect = {}
    for (g1, c1), d1 in v.entries.items():
        for (g2, c2), d2 in w.entries.items():
            k = (g1 + g2, c1 + c2)
            expect[k] = expect.get(k, 0) + d1 * d2
    assert t.entries == expect


def test_hom_unit_law():
    rng = random.Random(4)
    for _ in range(5):
        w = random_bigraded(rng)
        assert same(hom_complex(unit(), w), w)


def test_hom_dual_indices():
    v = Bigraded({(1, 2): 1, (-1, 0): 2})
    h = hom_complex(v, unit())
    assert h.entries == {(-1, -2): 1, (1, 0): 2}


def test_hom_euler_oracle():
    rng = random.Random(5)
    for _ in range(8):
        v, w = random_bigraded(rng), random_bigraded(rng)
        h = hom_complex(v, w)
        chi = lambda x, g: sum(
            (-1) ** c * d for (gg, c), d in x.entries.items() if gg == g
        )
        for g in {gg for gg, _ in h.entries}:
            expect = sum(
                chi(v, a) * chi(w, a + g) for a in {aa for aa, _ in v.entries}
            )
            assert chi(h, g) == expect


def test_hom_d_squared():
    rng = random.Random(6)
    for _ in range(8):
        v, w = random_bigraded(rng), random_bigraded(rng)
        h = hom_complex(v, w)
        Bigraded(h.entries, h.diff, h.basis)


def test_weight_truncate_pure_cases():
    v = one_dim(0, 0)
    low, high = weight_truncate(v, 0)
    assert same(low, v) and high.is_zero()
    v2 = one_dim(2, 0)
    low, high = weight_truncate(v2, 0)
    assert low.is_zero() and same(high, v2)


def test_weight_truncate_acyclic():
    v = Bigraded({(0, 0): 1, (0, 1): 1}, {(0, 0): [[Fraction(1)]]})
    low, high = weight_truncate(v, 0)
    assert same(low, v) and high.is_zero()


def test_weight_truncate_triangle():
    rng = random.Random(7)
    for _ in range(6):
        v = random_bigraded(rng)
        for n in (-1, 0, 1):
            low, high = weight_truncate(v, n)
            assert low.total_dim() + high.total_dim() == v.total_dim()
            cn = cone(inclusion_map(low, v), low, v)
            assert cn.cohomology_dims() == high.cohomology_dims()


def test_t_truncate_zero_differential():
    v = Bigraded({(0, -1): 2, (1, 3): 1})
    below, above = t_truncate(v, 0)
    assert below.entries == {(0, -1): 2}
    assert above.entries == {(1, 3): 1}


def test_t_truncate_acyclic():
    v = Bigraded({(0, 0): 1, (0, 1): 1}, {(0, 0): [[Fraction(1)]]})
    below, above = t_truncate(v, 0)
    assert not below.cohomology_dims()
    assert not above.cohomology_dims()


def test_t_truncate_cohomology_split():
    rng = random.Random(8)
    for _ in range(8):
        v = random_bigraded(rng)
        coh = v.cohomology_dims()
        for n in (-1, 0, 1):
            below, above = t_truncate(v, n)
            Bigraded(below.entries, below.diff, below.basis)
            Bigraded(above.entries, above.diff, above.basis)
            assert below.cohomology_dims() == {
                k: d for k, d in coh.items() if k[1] <= n
            }
            assert above.cohomology_dims() == {
                k: d for k, d in coh.items() if k[1] >= n + 1
            }


def test_t_truncate_weight_exact():
    rng = random.Random(9)
    for _ in range(8):
        v = random_bigraded(rng)
        lo, hi = v.weight_bounds()
        for n in (-1, 0, 1):
            for part in t_truncate(v, n):
                if not part.is_zero():
                    plo, phi = part.weight_bounds()
                    assert lo <= plo and phi <= hi


def test_decompose_pure_cases():
    assert decompose_pure(one_dim(1, 1)) == [(1, 1, 1)]
    with pytest.raises(NotPure):
        decompose_pure(one_dim(0, 1))
    v = Bigraded(
        {(0, -1): 1, (0, 0): 2},
        {(0, -1): [[Fraction(1)], [Fraction(0)]]},
    )
    assert decompose_pure(v) == [(0, 0, 1)]


def test_shear_examples():
    assert shear_fwd(one_dim(2, 0)).entries == {(2, 2): 1}
    rng = random.Random(10)
    for _ in range(6):
        v = random_bigraded(rng)
        assert same(shear_bwd(shear_fwd(v)), v)
        s = shear_fwd(v)
        Bigraded(s.entries, s.diff, s.basis)


def test_shear_monoidal_dims():
    rng = random.Random(11)
    for _ in range(6):
        v, w = random_bigraded(rng), random_bigraded(rng)
        lhs = shear_fwd(tensor(v, w)).entries
        rhs = tensor(shear_fwd(v), shear_fwd(w)).entries
        assert lhs == rhs


def test_weight_orthogonality_sample():
    rng = random.Random(12)
    for _ in range(20):
        v = weight_truncate(random_bigraded(rng), 0)[0]
        w = weight_truncate(random_bigraded(rng), 0)[1]
        if v.is_zero() or w.is_zero():
            continue
        h = hom_complex(v, w)
        assert h.cohomology_dims().get((0, 0), 0) == 0


def test_json_roundtrip():
    rng = random.Random(13)
    v = random_bigraded(rng)
    w = Bigraded.from_json(v.to_json())
    assert same(v, w)
    assert v.basis == w.basis
