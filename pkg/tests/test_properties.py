"""Dimension laws and algebra identities across constructions, on random inputs."""

from helpers import random_category, sign_module
from hypothesis import given, settings
from hypothesis import strategies as st

from kcat import Field, Partition, contract, expand, inflate, matrix_category, trivial_system
from kcat.category import assemble_algebra, endomorphism_algebra, validate_algebra
from kcat.galois import inflated_action, quotient, skew
from kcat.smash import smash_cover

seeds = st.integers(0, 100_000)
fields = st.sampled_from([Field.prime(2), Field.prime(3)])


@settings(max_examples=40, deadline=None)
@given(seeds, fields)
def test_whole_contraction_is_the_assembled_algebra(seed, F):
    C = random_category(F, seed)
    T = contract(C, Partition.whole(C))
    assert T.total_dim() == C.total_dim()
    A = assemble_algebra(C)
    assert validate_algebra(A).ok
    assert endomorphism_algebra(T, "*").structure_equal(A)


@settings(max_examples=40, deadline=None)
@given(seeds, fields, st.integers(1, 3))
def test_inflation_and_matrix_dims(seed, F, k):
    C = random_category(F, seed)
    I, _ = inflate(C, {x: list(range(k)) for x in C.objects})
    assert I.total_dim() == k * k * C.total_dim()
    M = matrix_category(C, k)
    assert M.total_dim() == k * k * C.total_dim()
    # contracting the copies of each object gives matrices again
    blocks = Partition([[(x, i) for i in range(k)] for x in C.objects], names=list(C.objects))
    assert contract(I, blocks).hom_dims() == M.hom_dims()


@settings(max_examples=40, deadline=None)
@given(seeds, fields)
def test_trivial_expansion(seed, F):
    C = random_category(F, seed)
    E = expand(C, trivial_system(C))
    assert sorted(E.hom_dims().values()) == sorted(C.hom_dims().values())


@settings(max_examples=30, deadline=None)
@given(seeds, fields)
def test_cover_splits_homs_by_degree(seed, F):
    C, G, gr = random_category(F, seed, graded=True)
    cover = smash_cover(C, G, gr)
    for x in C.objects:
        for y in C.objects:
            s = G.identity
            assert sum(cover.dim((x, s), (y, t)) for t in G.elements) == C.dim(x, y)


@settings(max_examples=30, deadline=None)
@given(seeds, fields)
def test_quotient_and_skew_dims(seed, F):
    C, G, gr = random_category(F, seed, graded=True)
    D, act, _ = inflated_action(C, G, sign_module(C, G, gr))
    Q = quotient(D, G, act)
    S = skew(D, G, act)
    n = G.order
    for (al, be), d in Q.hom_dims().items():
        assert d == n * C.dim(al[0], be[0])
    for (a, b), d in S.hom_dims().items():
        assert d == n * C.dim(a[0], b[0])
