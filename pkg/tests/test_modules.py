import random

import pytest

from kcat import QQ, Field, MalformedInput, Partition
from kcat.library import a2, dual_numbers
from kcat.modules import (
    CatModule,
    change_basis,
    direct_sum,
    internal_sum_map,
    is_module_isomorphism,
    module_contract,
    module_expand,
    representable_module,
    roundtrip_report,
    validate_module,
)


def rep_a2(dx, dy, M):
    A = a2()
    eye = lambda d: [[QQ.one if i == j else QQ.zero for j in range(d)] for i in range(d)]  # noqa: E731
    act = {("x", "x"): [eye(dx)], ("y", "y"): [eye(dy)], ("x", "y"): [M], ("y", "x"): []}
    return CatModule(A, {"x": dx, "y": dy}, act)


def test_representables_valid():
    A = a2()
    for z in A.objects:
        assert validate_module(representable_module(A, z)).ok
    h = representable_module(A, "x")
    assert h.dims == {"x": 1, "y": 1}


def test_invalid_module_detected():
    D = dual_numbers()
    # e acting invertibly breaks e o e = 0
    bad = CatModule(D, {"*": 1}, {("*", "*"): [[[1]], [[1]]]})
    assert validate_module(bad).status_of("(g o f) m = g (f m) *->*->*") == "fail"
    unit = CatModule(D, {"*": 1}, {("*", "*"): [[[2]], [[0]]]})
    assert validate_module(unit).status_of("1_* acts as identity") == "fail"


def test_shape_check():
    with pytest.raises(MalformedInput):
        CatModule(a2(), {"x": 1, "y": 1}, {})


def test_contract_a2_module():
    M = rep_a2(1, 2, [[QQ(1)], [QQ(3)]])
    A = a2()
    N = module_contract(M, Partition.whole(A))
    assert N.dims == {"*": 3}
    assert validate_module(N).ok
    assert module_expand(N, A, Partition.whole(A)) == M


def test_direct_sum_and_basis_change():
    M = rep_a2(1, 1, [[QQ(2)]])
    S = direct_sum(M, M)
    assert validate_module(S).ok
    bases = {"x": [[1, 1], [0, 1]], "y": [[1, 0], [1, 1]]}
    T = change_basis(S, {x: [[QQ(v) for v in r] for r in b] for x, b in bases.items()})
    assert validate_module(T).ok
    assert T != S


def test_roundtrip_report_exact():
    A = a2()
    E = Partition.whole(A)
    M = rep_a2(2, 1, [[QQ(1), QQ(-1)]])
    rep = roundtrip_report(M=M, N=module_contract(M, E), E=E, C=A)
    assert rep.ok
    assert all(c.detail in ("", "exact") for c in rep.checks)


def test_roundtrip_via_internal_sum():
    """A module over the contraction whose basis mixes the summands."""
    A = a2()
    E = Partition.whole(A)
    N = module_contract(rep_a2(1, 1, [[QQ(1)]]), E)
    mixed = change_basis(N, {"*": [[QQ(1), QQ(0)], [QQ(1), QQ(1)]]})
    assert validate_module(mixed).ok
    rep = roundtrip_report(N=mixed, E=E, C=A)
    assert rep.ok
    assert rep.checks[0].detail == "via internal sum"
    T = internal_sum_map(mixed, A, E)
    G = module_expand(mixed, A, E)
    assert is_module_isomorphism(module_contract(G, E, mixed.category), mixed, T)


def test_random_roundtrips_over_f3():
    F = Field.prime(3)
    A = a2(F)
    rng = random.Random(0)
    for _ in range(20):
        dx, dy = rng.randint(0, 3), rng.randint(0, 3)
        M = [[F(rng.randint(0, 2)) for _ in range(dx)] for _ in range(dy)]
        eye = lambda d: [[F.one if i == j else F.zero for j in range(d)] for i in range(d)]  # noqa: E731
        mod = CatModule(A, {"x": dx, "y": dy}, {("x", "x"): [eye(dx)], ("y", "y"): [eye(dy)],
                                                ("x", "y"): [M], ("y", "x"): []})
        for E in (Partition.whole(A), Partition.singletons(A)):
            N = module_contract(mod, E)
            assert module_expand(N, A, E) == mod
            assert roundtrip_report(M=mod, N=N, E=E, C=A).ok


def test_contracted_block_shape():
    # alpha acts on k (+) k as the strictly lower elementary matrix
    M = rep_a2(1, 1, [[QQ(1)]])
    A = a2()
    N = module_contract(M, Partition.whole(A))
    T = N.category
    alpha = next(i for i, lab in enumerate(T.hom("*", "*")) if "alpha" in str(lab))
    assert N.action[("*", "*")][alpha] == [[0, 0], [1, 0]]


def test_regular_module_splits_back():
    A = a2()
    E = Partition.whole(A)
    T = module_contract(representable_module(A, "x"), E).category
    reg = representable_module(T, "*")
    assert reg.dims == {"*": 3}
    G = module_expand(reg, A, E)
    assert validate_module(G).ok
    assert G.dims == {"x": 1, "y": 2}


def test_unit_must_act_as_identity():
    bad = rep_a2(1, 1, [[QQ(1)]])
    bad.action[("y", "y")] = [[[QQ(0)]]]
    assert validate_module(bad).status_of("1_y acts as identity") == "fail"
