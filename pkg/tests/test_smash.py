import pytest
from helpers import random_category, sign_module
from hypothesis import given, settings
from hypothesis import strategies as st

from kcat import QQ, AxiomViolation, Field, FiniteGroup, Grading, validate_category
from kcat.category import assemble_algebra
from kcat.hopf import group_algebra
from kcat.library import a2, dual_numbers, graded_group_category, graded_kc2, sign_action
from kcat.smash import assembled_hmodule, smash_algebra, smash_cover, smash_hopf
from kcat.structures import HModuleStructure, grading_to_dual_module, trivial_hmodule


def test_cover_of_kc2():
    C, G, gr = graded_kc2()
    cover = smash_cover(C, G, gr)
    assert len(cover.objects) == 2
    for a in cover.objects:
        for b in cover.objects:
            assert cover.dim(a, b) == 1
    assert validate_category(cover).ok


def test_cover_of_trivially_graded_a2_is_two_copies():
    A = a2()
    G = FiniteGroup.cyclic(2)
    cover = smash_cover(A, G, Grading.trivial(A, G))
    assert len(cover.objects) == 4
    assert cover.dim(("x", "1"), ("y", "t")) == 0
    assert cover.dim(("x", "t"), ("y", "t")) == 1


def test_cover_degree_component():
    # hom((x, s), (y, t)) is the degree t^-1 s part
    G = FiniteGroup.cyclic(3)
    C, gr = graded_group_category(G)
    cover = smash_cover(C, G, gr)
    g = G.elements[1]
    for s in G.elements:
        for t in G.elements:
            want = G.mul(G.inv(t), s)
            assert cover.hom(("*", s), ("*", t)) == (want,)
    assert validate_category(cover).ok
    assert cover.dim(("*", g), ("*", g)) == 1


def test_smash_with_dual_has_one_object():
    C, G, gr = graded_kc2()
    rho = grading_to_dual_module(C, G, gr)
    S = smash_hopf(C, rho.hopf, rho)
    assert S.objects == ("*",)
    assert S.dim("*", "*") == 4
    assert validate_category(S).ok


@pytest.mark.parametrize("F", [QQ, Field.prime(3)])
def test_smash_dual_numbers_sign(F):
    C = dual_numbers(F)
    rho = sign_action(C)
    S = smash_hopf(C, rho.hopf, rho)
    assert validate_category(S).ok
    lhs = assemble_algebra(S)
    rhs = smash_algebra(assemble_algebra(C), rho.hopf, assembled_hmodule(C, rho))
    assert lhs.structure_equal(rhs)


def test_smash_rejects_invalid_structure():
    C = dual_numbers()
    H = group_algebra(FiniteGroup.cyclic(2), QQ)
    bad = HModuleStructure(C, H, [{("*", "*"): [[1, 0], [0, 1]]}, {("*", "*"): [[2, 0], [0, 1]]}])
    with pytest.raises(AxiomViolation):
        smash_hopf(C, H, bad)


def test_smash_with_trivial_structure_is_tensor():
    A = a2()
    H = group_algebra(FiniteGroup.symmetric3(), QQ)
    S = smash_hopf(A, H, trivial_hmodule(A, H))
    assert S.dim("x", "y") == 6
    assert validate_category(S).ok


@settings(max_examples=20, deadline=None)
@given(st.integers(0, 10_000))
def test_assembly_commutes_with_smash(seed):
    C, G, gr = random_category(Field.prime(3), seed, graded=True)
    for rho in (grading_to_dual_module(C, G, gr), sign_module(C, G, gr)):
        lhs = assemble_algebra(smash_hopf(C, rho.hopf, rho))
        rhs = smash_algebra(assemble_algebra(C), rho.hopf, assembled_hmodule(C, rho))
        assert lhs.structure_equal(rhs)
