import pytest

from kcat import QQ, Field, FiniteGroup, MalformedInput, function_algebra, group_algebra, validate_group, validate_hopf
from kcat.cli import DATA
from kcat.hopf import duality_pairing_check, trivial_hopf
from kcat.io import Doc, hopf_from_doc


@pytest.mark.parametrize("G", [FiniteGroup.cyclic(2), FiniteGroup.cyclic(3), FiniteGroup.symmetric3(),
                               FiniteGroup.trivial()])
def test_groups(G):
    assert validate_group(G).ok
    for g in G.elements:
        assert G.mul(g, G.inv(g)) == G.identity


def test_s3_not_abelian():
    G = FiniteGroup.symmetric3()
    assert any(G.mul(a, b) != G.mul(b, a) for a in G.elements for b in G.elements)


def test_not_a_group():
    # a two-element monoid with no inverse for "a"
    M = FiniteGroup(["e", "a"], [["e", "a"], ["a", "a"]])
    assert not validate_group(M).ok


def test_bad_cayley_table():
    with pytest.raises(MalformedInput):
        FiniteGroup(["e", "a"], [["e", "a"]])


@pytest.mark.parametrize("F", [QQ, Field.prime(2), Field.prime(3)])
@pytest.mark.parametrize("G", [FiniteGroup.cyclic(2), FiniteGroup.symmetric3()])
def test_standard_hopf_algebras(F, G):
    assert validate_hopf(group_algebra(G, F)).ok
    assert validate_hopf(function_algebra(G, F)).ok
    assert duality_pairing_check(G, F).ok


def test_trivial_hopf():
    assert validate_hopf(trivial_hopf(QQ)).ok


def test_group_elements_are_grouplike():
    G = FiniteGroup.cyclic(3)
    H = group_algebra(G, QQ)
    for g in G.elements:
        i = H.group_element(g)
        assert H.delta(H.basis_vector(i)) == {(i, i): 1}
        assert H.eps(H.basis_vector(i)) == 1


def test_function_algebra_idempotents():
    G = FiniteGroup.cyclic(2)
    H = function_algebra(G, QQ)
    for i in range(H.dim):
        d = H.basis_vector(i)
        assert H.mul(d, d) == d


def test_bad_hopf_file():
    H = hopf_from_doc(Doc.load(DATA / "kc2_bad_hopf.json"))
    rep = validate_hopf(H)
    assert rep.status_of("counit") == "fail"
    assert rep.status_of("antipode") == "fail"
    assert rep.status_of("associativity") == "pass"
