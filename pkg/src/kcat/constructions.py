"""Constructions that reshape objects: contraction and expansion, inflation,
matrix categories, restricted karoubianisation and bounded additivisation.

Every function takes a :class:`~kcat.category.KCategory` and returns a new
one with a canonical, deterministic basis.
"""

from __future__ import annotations

import itertools

from .category import AssocAlgebra, KCategory
from .errors import (
    DimTooLarge,
    EmptyIndexSet,
    FieldNotFinite,
    InvalidPartition,
    MalformedInput,
    NotComplete,
    NotIdempotent,
    NotOrthogonal,
)
from .linalg import Subspace


class Partition:
    """Finite disjoint blocks of objects; ``names[i]`` names block ``i``."""

    def __init__(self, blocks, names=None):
        self.blocks = [tuple(b) for b in blocks]
        if names is None:
            names = [tuple(b) for b in self.blocks]
        self.names = list(names)
        if len(self.names) != len(self.blocks) or len(set(self.names)) != len(self.names):
            raise InvalidPartition("block names must be distinct, one per block")

    @classmethod
    def singletons(cls, C: KCategory) -> Partition:
        return cls([[x] for x in C.objects], list(C.objects))

    @classmethod
    def whole(cls, C: KCategory, name="*") -> Partition:
        return cls([list(C.objects)], [name])

    def block_of(self, x):
        for name, b in zip(self.names, self.blocks):
            if x in b:
                return name
        raise KeyError(x)

    def validate(self, C: KCategory) -> None:
        seen = set()
        for b in self.blocks:
            if not b:
                raise InvalidPartition("empty block")
            for x in b:
                if x not in C._index:
                    raise InvalidPartition(f"unknown object {x!r}")
                if x in seen:
                    raise InvalidPartition(f"object {x!r} lies in two blocks")
                seen.add(x)
        missing = [x for x in C.objects if x not in seen]
        if missing:
            raise InvalidPartition(f"objects not covered: {missing!r}")


def contraction_layout(C: KCategory, E: Partition) -> dict:
    """For each block pair ``(i, j)``: the list of ``(x, y, k)`` per basis slot,
    with ``x`` in block ``i`` (outer), ``y`` in block ``j``, ``k`` a basis index
    of ``hom(x, y)``."""
    layout = {}
    for ni, bi in zip(E.names, E.blocks):
        for nj, bj in zip(E.names, E.blocks):
            layout[(ni, nj)] = [(x, y, k) for x in bi for y in bj for k in range(C.dim(x, y))]
    return layout


def contract(C: KCategory, E: Partition) -> KCategory:
    """Merge each block of ``E`` into one object; homs become block matrices.

    Basis labels are ``(y, x, f)``; composition is the matrix product.
    """
    E.validate(C)
    layout = contraction_layout(C, E)
    homs = {key: [(y, x, C.hom(x, y)[k]) for (x, y, k) in slots] for key, slots in layout.items()}
    pos = {key: {s: n for n, s in enumerate(slots)} for key, slots in layout.items()}

    def rule(i, j, l, a, b):
        x, y, fk = layout[(i, j)][b]
        y2, z, gk = layout[(j, l)][a]
        out = [C.field.zero] * len(layout[(i, l)])
        if y != y2:
            return out
        col = C.compose_basis(x, y, z, gk, fk)
        p = pos[(i, l)]
        for k, c in enumerate(col):
            if c:
                out[p[(x, z, k)]] = c
        return out

    ids = {}
    for name, block in zip(E.names, E.blocks):
        vec = [C.field.zero] * len(layout[(name, name)])
        p = pos[(name, name)]
        for z in block:
            for k, c in enumerate(C.identity(z)):
                if c:
                    vec[p[(z, z, k)]] = c
        ids[name] = vec
    return KCategory.from_rule(C.field, E.names, homs, rule, ids, name=f"{C.name}_E")


# -- idempotents -------------------------------------------------------------


def _sandwich(C: KCategory, x, y, e, f) -> Subspace:
    """``f o hom(x, y) o e`` as a subspace of ``hom(x, y)``, RREF basis."""
    vecs = []
    for k in range(C.dim(x, y)):
        b = C.basis_vector(x, y, k)
        vecs.append(C.compose(x, y, y, f, C.compose(x, x, y, b, e)))
    return Subspace(C.field, C.dim(x, y), vecs)


def sandwich_basis(C: KCategory, x, y, e, f) -> Subspace:
    return _sandwich(C, x, y, e, f)


def _idempotent_category(C: KCategory, idems: dict, name: str) -> KCategory:
    objects = [(x, i) for x in C.objects for i in range(len(idems.get(x, [])))]
    spaces = {}
    for (x, i) in objects:
        for (y, j) in objects:
            spaces[((x, i), (y, j))] = _sandwich(C, x, y, idems[x][i], idems[y][j])
    homs = {k: list(range(s.dim)) for k, s in spaces.items()}

    def rule(a, b, c, i, j):
        g = spaces[(b, c)].basis[i]
        f = spaces[(a, b)].basis[j]
        return spaces[(a, c)].coords(C.compose(a[0], b[0], c[0], g, f))

    ids = {a: spaces[(a, a)].coords(list(idems[a[0]][a[1]])) for a in objects}
    return KCategory.from_rule(C.field, objects, homs, rule, ids, name=name)


def check_idempotents(C: KCategory, idems: dict) -> None:
    for x, vecs in idems.items():
        if x not in C._index:
            raise MalformedInput(f"unknown object {x!r}")
        for e in vecs:
            if len(e) != C.dim(x, x):
                raise MalformedInput(f"idempotent at {x!r} has the wrong length")
            if C.compose(x, x, x, e, e) != list(e):
                raise NotIdempotent(f"vector at {x!r} is not idempotent", witness=(x, list(e)))


def karoubi_restricted(C: KCategory, idems: dict) -> KCategory:
    """Full subcategory of the karoubianisation on the supplied idempotents.

    Objects are ``(x, i)`` for the ``i``-th supplied idempotent ``e`` at ``x``;
    ``hom((x, e), (y, f)) = f o hom(x, y) o e`` with its RREF basis.
    """
    idems = {x: [list(v) for v in idems.get(x, [])] for x in C.objects}
    check_idempotents(C, idems)
    return _idempotent_category(C, idems, name=f"Kar({C.name})")


def validate_idempotent_system(C: KCategory, system: dict) -> None:
    """Raise unless each object carries a complete orthogonal idempotent family."""
    for x in C.objects:
        if x not in system or not system[x]:
            raise NotComplete(f"no idempotents at {x!r}", witness=x)
    check_idempotents(C, system)
    for x in C.objects:
        vecs = [list(v) for v in system[x]]
        for i, j in itertools.permutations(range(len(vecs)), 2):
            if any(C.compose(x, x, x, vecs[i], vecs[j])):
                raise NotOrthogonal(f"idempotents {i} and {j} at {x!r} are not orthogonal", witness=(x, i, j))
        total = [sum(col, C.field.zero) for col in zip(*vecs)]
        if total != C.identity(x):
            raise NotComplete(f"idempotents at {x!r} do not sum to the identity", witness=x)


def expand(C: KCategory, system: dict) -> KCategory:
    """Split each object along a complete system of orthogonal idempotents."""
    system = {x: [list(v) for v in system.get(x, [])] for x in C.objects}
    validate_idempotent_system(C, system)
    return _idempotent_category(C, system, name=f"{C.name}^S")


def trivial_system(C: KCategory) -> dict:
    return {x: [C.identity(x)] for x in C.objects}


def enumerate_idempotents(A: AssocAlgebra, dim_bound: int = 6) -> list[list]:
    """Every idempotent of a finite-dimensional algebra over a prime field,
    by exhaustive scan of all ``p^dim`` coordinate vectors."""
    if not A.field.is_finite:
        raise FieldNotFinite("idempotent enumeration needs a finite field")
    if A.dim > dim_bound:
        raise DimTooLarge(f"dim {A.dim} exceeds bound {dim_bound}")
    return [v for v in A.field.vectors(A.dim) if A.mul(v, v) == v]


def complement_partition(C: KCategory, K: KCategory, idems: dict) -> Partition:
    """Pair every karoubi object ``(x, e)`` with ``(x, 1 - e)``.

    ``K`` must be ``karoubi_restricted(C, idems)`` with ``idems`` closed under
    ``e -> 1 - e``.
    """
    blocks, seen = [], set()
    for (x, i) in K.objects:
        if (x, i) in seen:
            continue
        e = list(idems[x][i])
        comp = [a - b for a, b in zip(C.identity(x), e)]
        try:
            j = [list(v) for v in idems[x]].index(comp)
        except ValueError:
            raise InvalidPartition(f"complement of idempotent {i} at {x!r} was not supplied") from None
        block = [(x, i)] if i == j else [(x, i), (x, j)]
        seen.update(block)
        blocks.append(block)
    return Partition(blocks)


# -- inflation, matrices, additivisation ---------------------------------------


def inflate(C: KCategory, F: dict):
    """Duplicate each object ``x`` along the index list ``F[x]``.

    Returns ``(I_F C, section)`` where ``section`` maps ``x`` to the
    representative ``(x, F[x][0])``.
    """
    for x in C.objects:
        if not F.get(x):
            raise EmptyIndexSet(f"empty index set at {x!r}")
    objects = [(x, i) for x in C.objects for i in F[x]]
    homs = {(a, b): C.hom(a[0], b[0]) for a in objects for b in objects}
    comp = {}
    for a in objects:
        for b in objects:
            for c in objects:
                t = C.comp.get((a[0], b[0], c[0]))
                if t:
                    comp[(a, b, c)] = t
    ids = {a: C.identity(a[0]) for a in objects}
    section = {x: (x, F[x][0]) for x in C.objects}
    return KCategory(C.field, objects, homs, comp, ids, name=f"I({C.name})"), section


def matrix_category(C: KCategory, n) -> KCategory:
    """``M_n(C)``: ``hom(x, y)`` is ``n_y x n_x`` matrices over ``hom(x, y)``.

    ``n`` is an int or a per-object dict.  Labels ``(a, f, b)`` stand for
    ``f`` in row ``a``, column ``b``.
    """
    if isinstance(n, int):
        n = {x: n for x in C.objects}
    for x in C.objects:
        if n.get(x, 0) < 1:
            raise MalformedInput(f"matrix size at {x!r} must be positive")
    homs = {(x, y): [(a, f, b) for a in range(n[y]) for f in labs for b in range(n[x])]
            for (x, y), labs in C.homs.items()}

    def rule(x, y, z, i, j):
        nx, ny = n[x], n[y]
        dg = C.dim(y, z)
        a, r = divmod(i, dg * ny)
        gk, b = divmod(r, ny)
        a2, r2 = divmod(j, C.dim(x, y) * nx)
        fk, b2 = divmod(r2, nx)
        out = [C.field.zero] * (n[z] * C.dim(x, z) * nx)
        if b != a2:
            return out
        col = C.compose_basis(x, y, z, gk, fk)
        base = a * C.dim(x, z) * nx
        for k, c in enumerate(col):
            if c:
                out[base + k * nx + b2] = c
        return out

    ids = {}
    for x in C.objects:
        d = C.dim(x, x)
        vec = [C.field.zero] * (n[x] * d * n[x])
        for a in range(n[x]):
            for k, c in enumerate(C.identity(x)):
                if c:
                    vec[a * d * n[x] + k * n[x] + a] = c
        ids[x] = vec
    return KCategory.from_rule(C.field, C.objects, homs, rule, ids, name=f"M({C.name})")


def additivise(C: KCategory, total_bound: int) -> KCategory:
    """Bounded additivisation: objects are multiplicity vectors with
    ``1 <= total <= total_bound`` (the empty sum is omitted), homs are block
    matrices, composition is the block matrix product.

    Object ids are tuples of multiplicities aligned with ``C.objects``;
    labels are ``((y, b), f, (x, a))`` for ``f`` from slot ``(x, a)`` to slot ``(y, b)``.
    """
    if total_bound < 1:
        raise MalformedInput("total_bound must be at least 1")
    objs = C.objects
    mults = [m for m in itertools.product(range(total_bound + 1), repeat=len(objs))
             if 1 <= sum(m) <= total_bound]
    mults.sort(key=lambda m: (sum(m), [-c for c in m]))

    def slots(m):
        return [(x, a) for x, c in zip(objs, m) for a in range(c)]

    layout = {}
    for m in mults:
        for m2 in mults:
            layout[(m, m2)] = [(ys, xs, k) for ys in slots(m2) for xs in slots(m)
                               for k in range(C.dim(xs[0], ys[0]))]
    pos = {key: {s: i for i, s in enumerate(v)} for key, v in layout.items()}
    homs = {key: [(ys, C.hom(xs[0], ys[0])[k], xs) for (ys, xs, k) in v] for key, v in layout.items()}

    def rule(m, m2, m3, i, j):
        zs, ys, gk = layout[(m2, m3)][i]
        ys2, xs, fk = layout[(m, m2)][j]
        out = [C.field.zero] * len(layout[(m, m3)])
        if ys != ys2:
            return out
        col = C.compose_basis(xs[0], ys[0], zs[0], gk, fk)
        p = pos[(m, m3)]
        for k, c in enumerate(col):
            if c:
                out[p[(zs, xs, k)]] = c
        return out

    ids = {}
    for m in mults:
        vec = [C.field.zero] * len(layout[(m, m)])
        for s in slots(m):
            for k, c in enumerate(C.identity(s[0])):
                if c:
                    vec[pos[(m, m)][(s, s, k)]] = c
        ids[m] = vec
    return KCategory.from_rule(C.field, mults, homs, rule, ids, name=f"Add({C.name})")
