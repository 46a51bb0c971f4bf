import random

import pytest

from gradedhecke import bigraded, sampling
from gradedhecke.bigraded import Bigraded
from gradedhecke.complexes import (
    BimoduleComplex,
    ChainSummand,
    WeightFiltration,
    chain_hom_dim_mod_homotopy,
    from_bimodule,
    gaussian_eliminate,
    homotopy_equal,
    is_weight_ge,
    is_weight_le,
    k_class,
    rouquier,
    split_summands,
    stupid_truncate,
    tensor_complex,
    unit_complex,
    weight_axiom_suite,
    weight_complex,
)
from gradedhecke.coxeter import CoxeterSystem
from gradedhecke.errors import ImpureQuotient, NotTypeA, RingMismatch
from gradedhecke.hecke import HeckeElement, braid_class, kl_basis, mult
from gradedhecke.laurent import V
from gradedhecke.soergel import (
    BimoduleMap,
    PolyRing,
    bott_samelson,
    free_module,
)

A2 = CoxeterSystem("A2")
R = PolyRing(A2)


def test_unit_complex():
    u = unit_complex(R)
    assert u.chain_degrees() == [0]
    assert k_class(u) == HeckeElement.unit(A2)
    u.validate()


def test_rouquier_letters():
    f = rouquier(R, [1], reduce=False)
    f.validate()
    assert f.chain_degrees() == [-1, 0]
    assert k_class(f) == braid_class(A2, [1])
    fi = rouquier(R, [-1], reduce=False)
    fi.validate()
    assert fi.chain_degrees() == [0, 1]
    assert k_class(fi) == braid_class(A2, [-1])


def test_rouquier_empty_word():
    u = rouquier(R, [])
    assert homotopy_equal(u, unit_complex(R))


def test_rouquier_crossing_pair_is_unit():
    assert homotopy_equal(rouquier(R, [1, -1]), unit_complex(R))
    assert homotopy_equal(rouquier(R, [-2, 2]), unit_complex(R))


def test_rouquier_braid_relation():
    assert homotopy_equal(rouquier(R, [1, 2, 1]), rouquier(R, [2, 1, 2]))


def test_rouquier_not_type_a():
    with pytest.raises(NotTypeA):
        rouquier(PolyRing(CoxeterSystem("B2")), [1])


def test_tensor_unit_law():
    f = rouquier(R, [1], reduce=False)
    u = unit_complex(R)
    for prod in (tensor_complex(u, f), tensor_complex(f, u)):
        prod.validate()
        assert prod.chain_degrees() == f.chain_degrees()
        assert {c: prod.term_rank(c) for c in prod.terms} == {
            c: f.term_rank(c) for c in f.terms
        }


def test_tensor_totalization_ranks():
    f = rouquier(R, [1], reduce=False)
    prod = tensor_complex(f, f)
    prod.validate()
    assert prod.chain_degrees() == [-2, -1, 0]
    assert prod.term_rank(-2) == 1
    assert prod.term_rank(-1) == 4
    assert prod.term_rank(0) == 4


def test_tensor_ring_mismatch():
    other = PolyRing(CoxeterSystem("A1"))
    with pytest.raises(RingMismatch):
        tensor_complex(unit_complex(R), unit_complex(other))


def test_k_class_multiplicative():
    rng = random.Random(0)
    for _ in range(6):
        w1 = [rng.choice([1, -1, 2, -2]) for _ in range(rng.randint(1, 2))]
        w2 = [rng.choice([1, -1, 2, -2]) for _ in range(rng.randint(1, 2))]
        c1 = rouquier(R, w1, reduce=False)
        c2 = rouquier(R, w2, reduce=False)
        assert k_class(tensor_complex(c1, c2)) == mult(k_class(c1), k_class(c2))


def test_gaussian_eliminate_identity_pair():
    b = bott_samelson(R, (0,))
    terms = {0: [ChainSummand(b)], 1: [ChainSummand(b)]}
    diffs = {0: {(0, 0): BimoduleMap.identity(b)}}
    cx = BimoduleComplex(R, terms, diffs)
    cx.validate()
    assert gaussian_eliminate(cx).is_zero()


def test_gaussian_eliminate_scaled_acyclic():
    r = free_module(R)
    ident = BimoduleMap.identity(r)
    terms = {0: [ChainSummand(r)], 1: [ChainSummand(r)]}
    diffs = {0: {(0, 0): ident.scale(3)}}
    assert gaussian_eliminate(BimoduleComplex(R, terms, diffs)).is_zero()


def test_gaussian_eliminate_crossing_pair():
    cx = rouquier(R, [1, -1], reduce=False)
    red = gaussian_eliminate(split_summands(cx))
    assert red.chain_degrees() == [0]
    assert red.term_rank(0) == 1
    assert k_class(red) == HeckeElement.unit(A2)


def test_minimal_rouquier_sts():
    cx = rouquier(R, [1, 2, 1])
    cx.validate()
    # one summand per chain degree pattern 1, 2, 2, 1 and top term B_sts
    assert [len(cx.terms[c]) for c in cx.chain_degrees()] == [1, 2, 2, 1]
    sts = A2.from_word((0, 1, 0))
    assert sorted(s.label() for s in cx.terms[0]) == [((0, 1, 0), 0)]
    assert k_class(cx) == braid_class(A2, [1, 2, 1])


def test_homotopy_equal_reflexive():
    for word in ([1], [1, 2], [1, -2]):
        cx = rouquier(R, word)
        assert homotopy_equal(cx, cx)


def test_homotopy_equal_distinguishes():
    u = unit_complex(R)
    bs = from_bimodule(bott_samelson(R, (0,)), 0, A2.simple(0), 0)
    assert not homotopy_equal(u, bs)
    assert not homotopy_equal(rouquier(R, [1]), rouquier(R, [2]))


def test_chain_hom_dim():
    u = unit_complex(R)
    assert chain_hom_dim_mod_homotopy(u, u) == 1
    f = rouquier(R, [1])
    assert chain_hom_dim_mod_homotopy(f, f) == 1


def test_stupid_truncate_one_term():
    u = unit_complex(R)
    low, high = stupid_truncate(u, 0)
    assert low.chain_degrees() == [0] and high.is_zero()
    low, high = stupid_truncate(u, -1)
    assert low.is_zero() and high.chain_degrees() == [0]


def test_stupid_truncate_termwise_split():
    cx = rouquier(R, [1, -2], reduce=False)
    for n in (-2, -1, 0, 1, 2):
        low, high = stupid_truncate(cx, n)
        assert is_weight_le(low, n)
        assert is_weight_ge(high, n + 1)
        for c in cx.terms:
            assert len(low.terms.get(c, [])) + len(high.terms.get(c, [])) == len(
                cx.terms[c]
            )


def test_weight_axiom_suite_passes():
    sample = [
        unit_complex(R),
        rouquier(R, [1]),
        rouquier(R, [-2]),
        rouquier(R, [1, 2]),
        rouquier(R, [1, -2]),
    ]
    report = weight_axiom_suite(sample)
    assert report["passed"]


def test_weight_bounds_negative_control():
    # a heart object pushed into chain degree -2 has weight 2
    b = from_bimodule(bott_samelson(R, (0,)), -2, A2.simple(0), 0)
    assert not is_weight_le(b, 0)
    assert is_weight_ge(b, 1)


# -- weight complex functor --------------------------------------------


def test_weight_complex_pure_object():
    x = Bigraded({(1, 1): 2, (0, 0): 1})
    w = weight_complex(x)
    assert w.entries == x.entries


def test_weight_complex_heart_extension():
    # cone of a map from a weight-0 heart piece to a weight-1 piece
    x = Bigraded({(1, 0): 1, (1, 1): 1}, {(1, 0): [[1]]})
    filt = WeightFiltration(x)
    assert sorted(filt.pieces) == [0, 1]
    w = weight_complex(filt)
    assert w.entries == x.entries
    assert w.d(1, 0) == [[1]]


def test_weight_complex_of_chain_complex_is_identity():
    cx = rouquier(R, [1, 2])
    w = weight_complex(cx)
    assert w.terms.keys() == cx.terms.keys()
    assert all(w.terms[c] == cx.terms[c] for c in cx.terms)


def test_weight_complex_monoidal_on_samples():
    rng = random.Random(5)
    for _ in range(10):
        x = sampling.random_bigraded(rng, n_atoms=3)
        y = sampling.random_bigraded(rng, n_atoms=3)
        lhs = weight_complex(bigraded.tensor(x, y))
        rhs = bigraded.tensor(weight_complex(x), weight_complex(y))
        assert lhs.entries == rhs.entries
        for k in set(lhs.diff) | set(rhs.diff):
            assert lhs.d(*k) == rhs.d(*k)


def test_impure_quotient():
    rng = random.Random(7)
    x = sampling.random_bigraded(rng)
    with pytest.raises(ImpureQuotient):
        WeightFiltration(x, pieces={0: x})


def test_to_json_shape():
    data = rouquier(R, [1]).to_json()
    assert {t["chain_degree"] for t in data["terms"]} == {-1, 0}
    assert data["differentials"][0]["blocks"][0]["matrix"]
