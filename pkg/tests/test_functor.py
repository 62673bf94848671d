import pytest

from kcat import AxiomViolation, Field, FiniteGroup, LinearFunctor, MalformedInput, validate_functor
from kcat.category import full_subcategory
from kcat.constructions import Partition, contract, inflate
from kcat.functor import (
    compose,
    find_isomorphism,
    functor_equal,
    functor_properties,
    identity_functor,
    inclusion_functor,
    inverse_of,
    is_identity,
    require_functor,
)
from kcat.isos import inflation_section, inflation_witnesses, smash_inclusion
from kcat.library import a2, dual_numbers, group_category, k_times_k, sign_action


def test_identity_is_iso():
    A = a2()
    Id = identity_functor(A)
    assert validate_functor(Id).ok
    props = functor_properties(Id)
    assert props.iso and props.full and props.faithful and props.dense
    assert is_identity(compose(Id, Id))


def test_inclusion_is_full_faithful_not_dense():
    A = a2()
    sub = full_subcategory(A, ["x"])
    J = inclusion_functor(sub, A)
    assert validate_functor(J).ok
    p = functor_properties(J)
    assert p.full and p.faithful and not p.iso
    # over Q there is no search: density stays unknown
    assert p.dense is None


def test_inclusion_dense_decided_over_finite_field():
    A = a2(Field.prime(2))
    p = functor_properties(inclusion_functor(full_subcategory(A, ["x"]), A))
    assert p.dense is False


def test_budget_exhaustion_is_unknown():
    C = group_category(FiniteGroup.symmetric3(), Field.prime(3))
    sec, _ = inflation_section(C, {"*": [0, 1]})
    p = functor_properties(sec, budget=10)
    assert p.dense is None
    assert any("budget" in n for n in p.notes)


def test_inflation_section_with_witnesses():
    C = a2()
    index = {"x": [0, 1], "y": [0]}
    sec, I = inflation_section(C, index)
    _, section = inflate(C, index)
    wit = inflation_witnesses(C, I, section)
    p = functor_properties(sec, witnesses=wit)
    assert p.full and p.faithful and p.dense and not p.iso


def test_bad_witness_is_rejected():
    C = a2()
    sec, I = inflation_section(C, {"x": [0, 1], "y": [0]})
    p = functor_properties(sec, witnesses={("x", 1): ("x", [0], [0])})
    assert p.dense is None
    assert any("rejected" in n for n in p.notes)


def test_smash_inclusion_and_its_failure():
    C = dual_numbers()
    rho = sign_action(C)
    H = rho.hopf
    incl = smash_inclusion(C, H, rho)
    assert validate_functor(incl).ok
    p = functor_properties(incl)
    assert p.faithful and not p.full
    t = H.basis_vector(H.group_element("t"))
    twisted = smash_inclusion(C, H, rho, h=t)
    rep = validate_functor(twisted)
    assert rep.status_of("F(1_*) = 1_F*") == "fail"
    with pytest.raises(AxiomViolation):
        require_functor(twisted)


def test_find_isomorphism():
    C = k_times_k(Field.prime(2))
    u, v = find_isomorphism(C, "*", "*")
    assert C.compose("*", "*", "*", u, v) == C.identity("*")
    D = dual_numbers()
    # 1 + e is invertible with inverse 1 - e
    assert inverse_of(D, "*", "*", [1, 1]) == [1, -1]
    assert inverse_of(D, "*", "*", [0, 1]) is None


def test_contraction_comparison():
    # the identity-on-homs functor from singletons to the contraction of nothing
    A = a2()
    S = contract(A, Partition.singletons(A))
    F = LinearFunctor.from_rule(A, S, {x: x for x in A.objects}, lambda x, y, i: A.basis_vector(x, y, i))
    assert validate_functor(F).ok
    assert functor_properties(F).iso


def test_functor_equality():
    A = a2()
    assert functor_equal(identity_functor(A), compose(identity_functor(A), identity_functor(A)))


def test_wrong_shape():
    A = a2()
    with pytest.raises(MalformedInput):
        LinearFunctor(A, A, {"x": "x", "y": "y"}, {})


def test_iso_implies_full_faithful_dense():
    from kcat.isos import contraction_iso_L, duality_pair, rebase_to_matrix, smash_quotient_iso
    from kcat.library import graded_kc2

    C, G, gr = graded_kc2()
    D = dual_numbers(Field.prime(3))
    cases = [
        identity_functor(a2()),
        contraction_iso_L(C, G, gr)[0],
        smash_quotient_iso(D, FiniteGroup.cyclic(2), sign_action(D))[0],
        *duality_pair(C, G, gr)[:2],
        rebase_to_matrix(a2(), 2)[0],
        inclusion_functor(full_subcategory(a2(), ["x"]), a2()),
    ]
    for F in cases:
        p = functor_properties(F)
        if p.iso:
            assert p.full and p.faithful and p.dense is True
    assert sum(functor_properties(F).iso for F in cases) == len(cases) - 1
