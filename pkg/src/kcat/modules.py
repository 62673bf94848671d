"""Finite-dimensional left modules over a k-category and the two functors
relating modules over ``C`` and over a contraction ``C_E``."""

from __future__ import annotations

import itertools

from . import linalg
from .category import KCategory
from .constructions import Partition, contract, contraction_layout
from .errors import AxiomViolation, MalformedInput
from .linalg import Subspace
from .report import Report


class CatModule:
    """``dims[x]`` is the dimension of the space at ``x``; ``action[(x, y)][i]``
    is the ``dims[y] x dims[x]`` matrix of the ``i``-th basis morphism."""

    def __init__(self, category: KCategory, dims: dict, action: dict, name: str = "M"):
        self.category = category
        self.dims = {x: int(dims[x]) for x in category.objects}
        self.action = {k: [[list(r) for r in M] for M in mats] for k, mats in action.items()}
        self.name = name
        C = category
        for x in C.objects:
            for y in C.objects:
                mats = self.action.get((x, y))
                if mats is None or len(mats) != C.dim(x, y):
                    raise MalformedInput(f"{name}: need one matrix per basis morphism {x!r}->{y!r}")
                for M in mats:
                    if len(M) != self.dims[y] or any(len(r) != self.dims[x] for r in M):
                        raise MalformedInput(f"{name}: matrix on {x!r}->{y!r} has the wrong shape")

    def matrix(self, x, y, f) -> list[list]:
        """Matrix of the morphism with coordinates ``f``."""
        F = self.category.field
        out = linalg.zeros(F, self.dims[y], self.dims[x])
        for c, M in zip(f, self.action[(x, y)]):
            if c:
                out = [[o + c * m for o, m in zip(orow, mrow)] for orow, mrow in zip(out, M)]
        return out

    def __eq__(self, other):
        return (
            isinstance(other, CatModule)
            and self.category.objects == other.category.objects
            and self.dims == other.dims
            and self.action == other.action
        )

    def __repr__(self):
        return f"<CatModule {self.name} dims {self.dims}>"


def validate_module(M: CatModule) -> Report:
    """``(g o f) m = g (f m)`` over all basis pairs and ``1_x m = m``."""
    C = M.category
    F = C.field
    rep = Report(f"module {M.name}")
    for x in C.objects:
        ok = linalg.mat_eq(M.matrix(x, x, C.identity(x)), linalg.identity(F, M.dims[x]))
        rep.add(f"1_{x} acts as identity", ok, None if ok else x)
    for x, y, z in itertools.product(C.objects, repeat=3):
        if not C.dim(x, y) or not C.dim(y, z):
            continue
        bad = None
        for i, j in itertools.product(range(C.dim(y, z)), range(C.dim(x, y))):
            gf = C.compose_basis(x, y, z, i, j)
            lhs = M.matrix(x, z, gf)
            rhs = linalg.matmul(F, M.action[(y, z)][i], M.action[(x, y)][j], M.dims[y])
            if not linalg.mat_eq(lhs, rhs):
                bad = (C.hom(y, z)[i], C.hom(x, y)[j])
                break
        rep.add(f"(g o f) m = g (f m) {x}->{y}->{z}", bad is None, bad)
    return rep


def require_module(M: CatModule) -> CatModule:
    validate_module(M).raise_if_failed(AxiomViolation)
    return M


# -- examples -----------------------------------------------------------------


def representable_module(C: KCategory, z) -> CatModule:
    """``x |-> hom(z, x)`` with action by post-composition."""
    dims = {x: C.dim(z, x) for x in C.objects}
    action = {(x, y): [C.left_matrix(z, x, y, C.basis_vector(x, y, i)) for i in range(C.dim(x, y))]
              for x in C.objects for y in C.objects}
    return CatModule(C, dims, action, name=f"h^{z}")


def direct_sum(M: CatModule, N: CatModule) -> CatModule:
    C = M.category
    F = C.field
    dims = {x: M.dims[x] + N.dims[x] for x in C.objects}
    action = {}
    for (x, y), mats in M.action.items():
        out = []
        for A, B in zip(mats, N.action[(x, y)]):
            top = [list(r) + [F.zero] * N.dims[x] for r in A]
            bottom = [[F.zero] * M.dims[x] + list(r) for r in B]
            out.append(top + bottom)
        action[(x, y)] = out
    return CatModule(C, dims, action, name=f"{M.name}+{N.name}")


def change_basis(M: CatModule, bases: dict) -> CatModule:
    """Rewrite ``M`` in new bases: ``bases[x]`` is an invertible matrix whose
    columns are the new basis vectors at ``x``."""
    C = M.category
    F = C.field
    inv = {x: linalg.inverse(F, bases[x]) if M.dims[x] else [] for x in C.objects}
    action = {}
    for (x, y), mats in M.action.items():
        action[(x, y)] = [
            linalg.matmul(F, linalg.matmul(F, inv[y], A, M.dims[y]), bases[x], M.dims[x]) if M.dims[x] and M.dims[y]
            else A for A in mats
        ]
    return CatModule(C, M.dims, action, name=f"{M.name}'")


# -- contraction functors -----------------------------------------------------


def module_contract(M: CatModule, E: Partition, CE: KCategory | None = None) -> CatModule:
    """Block i carries ``sum_{x in E_i} M_x``; a basis morphism ``(y, x, f)``
    acts through ``M(f)`` placed in the ``(y, x)`` block."""
    C = M.category
    F = C.field
    CE = CE or contract(C, E)
    layout = contraction_layout(C, E)
    offs, dims = {}, {}
    for name, block in zip(E.names, E.blocks):
        o = 0
        for x in block:
            offs[x] = o
            o += M.dims[x]
        dims[name] = o
    action = {}
    for (i, j), slots in layout.items():
        mats = []
        for (x, y, k) in slots:
            A = linalg.zeros(F, dims[j], dims[i])
            for r, row in enumerate(M.action[(x, y)][k]):
                for c, v in enumerate(row):
                    A[offs[y] + r][offs[x] + c] = v
            mats.append(A)
        action[(i, j)] = mats
    return CatModule(CE, dims, action, name=f"F{M.name}")


def module_expand(N: CatModule, C: KCategory, E: Partition) -> CatModule:
    """The space at ``x`` is ``e_x N_i`` for ``x`` in block ``i`` (with its
    echelon basis); ``f: x -> y`` acts through its single-entry lift."""
    F = C.field
    layout = contraction_layout(C, E)
    pos = {key: {s: n for n, s in enumerate(slots)} for key, slots in layout.items()}

    def lift(x, y, vec):
        i, j = E.block_of(x), E.block_of(y)
        out = [F.zero] * len(layout[(i, j)])
        for k, c in enumerate(vec):
            if c:
                out[pos[(i, j)][(x, y, k)]] = c
        return out

    spaces = {}
    for x in C.objects:
        i = E.block_of(x)
        P = N.matrix(i, i, lift(x, x, C.identity(x)))
        cols = linalg.transpose(P, N.dims[i]) if P else []
        spaces[x] = Subspace(F, N.dims[i], cols)
    dims = {x: spaces[x].dim for x in C.objects}
    action = {}
    for x in C.objects:
        for y in C.objects:
            i, j = E.block_of(x), E.block_of(y)
            mats = []
            for k in range(C.dim(x, y)):
                A = N.matrix(i, j, lift(x, y, C.basis_vector(x, y, k)))
                cols = [spaces[y].coords(linalg.matvec(F, A, b)) for b in spaces[x].basis]
                mats.append(linalg.transpose(cols, dims[y]) if cols else [[] for _ in range(dims[y])])
            action[(x, y)] = mats
    return CatModule(C, dims, action, name=f"G{N.name}")


def internal_sum_map(N: CatModule, C: KCategory, E: Partition) -> dict:
    """Per block ``i``: the matrix ``sum_{x in E_i} e_x N_i -> N_i`` whose
    columns are the echelon bases of the summands, in block order."""
    out = {}
    for name, block in zip(E.names, E.blocks):
        cols = []
        for x in block:
            cols.extend(_basis_of_summand(N, C, E, x))
        out[name] = linalg.transpose(cols, N.dims[name]) if cols else []
    return out


def _basis_of_summand(N, C, E, x):
    F = C.field
    layout = contraction_layout(C, E)
    i = E.block_of(x)
    slots = layout[(i, i)]
    vec = [F.zero] * len(slots)
    for n, (a, b, k) in enumerate(slots):
        if a == x and b == x:
            vec[n] = C.identity(x)[k]
    P = N.matrix(i, i, vec)
    cols = linalg.transpose(P, N.dims[i]) if P else []
    return Subspace(F, N.dims[i], cols).basis


def is_module_isomorphism(M: CatModule, N: CatModule, T: dict) -> bool:
    """``T[x]: M_x -> N_x`` invertible and ``T_y M(f) = N(f) T_x`` for every basis ``f``."""
    C = M.category
    F = C.field
    for x in C.objects:
        if M.dims[x] != N.dims[x]:
            return False
        if M.dims[x] and not linalg.is_invertible(F, T[x]):
            return False
    for (x, y), mats in M.action.items():
        if not M.dims[x] or not M.dims[y]:
            continue
        for A, B in zip(mats, N.action[(x, y)]):
            lhs = linalg.matmul(F, T[y], A, M.dims[y])
            rhs = linalg.matmul(F, B, T[x], N.dims[x])
            if not linalg.mat_eq(lhs, rhs):
                return False
    return True


def roundtrip_report(M: CatModule | None = None, N: CatModule | None = None, E: Partition | None = None,
                     C: KCategory | None = None) -> Report:
    """``G F M = M`` exactly and ``F G N`` equal to ``N`` (exactly when ``N``'s basis
    is adapted to the summands, otherwise through the internal-sum isomorphism)."""
    rep = Report("module roundtrip")
    if M is not None:
        C = M.category
        FM = module_contract(M, E)
        rep.add(f"G(F {M.name}) = {M.name}", module_expand(FM, C, E) == M)
    if N is not None:
        G = module_expand(N, C, E)
        FG = module_contract(G, E, N.category)
        if FG == N:
            rep.add(f"F(G {N.name}) = {N.name}", True, detail="exact")
        else:
            T = internal_sum_map(N, C, E)
            rep.add(f"F(G {N.name}) = {N.name}", is_module_isomorphism(FG, N, T), detail="via internal sum")
    return rep
