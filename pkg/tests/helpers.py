"""Random small categories and independent dense oracles for the tests."""

from __future__ import annotations

import itertools
import random

from kcat import linalg
from kcat.category import KCategory
from kcat.field import Field
from kcat.hopf import FiniteGroup, group_algebra
from kcat.structures import Grading, HModuleStructure


def radical_square_zero(F: Field, rng: random.Random, max_objects: int = 3, graded: bool = False):
    """A random category on up to three objects.

    Every object has ``End = k`` or ``k[e]/(e^2)``; for ``x < y`` there may be
    one arrow ``x -> y``; the composite of two arrows is a random multiple of
    the direct arrow (when present) and every other product of non-identity
    basis morphisms vanishes.  With ``graded`` a ``C2``-grading is returned as
    well (arrow degrees drawn at random, composite scalars zeroed whenever the
    degrees disagree).
    """
    G = FiniteGroup.cyclic(2)
    n = rng.randint(1, max_objects)
    objs = [f"o{i}" for i in range(n)]
    loops = {x: rng.random() < 0.5 for x in objs}
    arrows = {(x, y): rng.random() < 0.6 for i, x in enumerate(objs) for y in objs[i + 1:]}
    deg_of = {}
    homs = {}
    for x in objs:
        for y in objs:
            labs = []
            if x == y:
                labs.append(f"1{x}")
                deg_of[f"1{x}"] = "1"
                if loops[x]:
                    labs.append(f"e{x}")
                    deg_of[f"e{x}"] = rng.choice(G.elements)
            elif arrows.get((x, y)):
                labs.append(f"a{x}{y}")
                deg_of[f"a{x}{y}"] = rng.choice(G.elements)
            homs[(x, y)] = labs
    comp = {}
    one = F.one
    for x in objs:
        for y in objs:
            for j in range(len(homs[(x, y)])):
                comp.setdefault((x, x, y), {})[(j, 0)] = {j: one}
                comp.setdefault((x, y, y), {})[(0, j)] = {j: one}
    for i, x in enumerate(objs):
        for k in range(i + 1, n):
            z = objs[k]
            for y in objs[i + 1:k]:
                if arrows[(x, y)] and arrows[(y, z)] and arrows[(x, z)]:
                    lam = rng.choice(F.elements()) if F.is_finite else F(rng.randint(-2, 2))
                    a, b, c = f"a{x}{y}", f"a{y}{z}", f"a{x}{z}"
                    if graded and G.mul(deg_of[b], deg_of[a]) != deg_of[c]:
                        lam = F.zero
                    if lam:
                        comp.setdefault((x, y, z), {})[(0, 0)] = {0: lam}
    ids = {x: [one] + ([F.zero] if loops[x] else []) for x in objs}
    C = KCategory(F, objs, homs, comp, ids, name="R")
    if graded:
        return C, G, Grading.from_labels(C, G, deg_of)
    return C


def random_basis_change(C: KCategory, rng: random.Random) -> KCategory:
    """The same category in new bases: a random invertible matrix per hom space."""
    F = C.field
    change, inv = {}, {}
    for (x, y), labs in C.homs.items():
        d = len(labs)
        while True:
            M = [[rng.choice(F.elements()) if F.is_finite else F(rng.randint(-2, 2)) for _ in range(d)]
                 for _ in range(d)]
            Mi = linalg.inverse(F, M) if d else []
            if d == 0 or Mi is not None:
                break
        change[(x, y)], inv[(x, y)] = M, Mi

    def to_new(x, y, v):
        return linalg.matvec(F, inv[(x, y)], v)

    def rule(x, y, z, i, j):
        g = [row[i] for row in change[(y, z)]]
        f = [row[j] for row in change[(x, y)]]
        return to_new(x, z, C.compose(x, y, z, g, f))

    ids = {x: to_new(x, x, C.identity(x)) for x in C.objects}
    return KCategory.from_rule(F, C.objects, C.homs, rule, ids, name=C.name + "'")


def random_category(F: Field, seed: int, graded: bool = False):
    rng = random.Random(seed)
    if graded:
        return radical_square_zero(F, rng, graded=True)
    C = radical_square_zero(F, rng)
    return random_basis_change(C, rng)


def sign_module(C: KCategory, G: FiniteGroup, grading: Grading) -> HModuleStructure:
    """``t`` acts by ``+1`` on degree 1 and ``-1`` on degree ``t`` (a kC2-structure)."""
    F = C.field
    H = group_algebra(G, F)
    fams = []
    for g in G.elements:
        fam = {}
        for (x, y), labs in C.homs.items():
            d = len(labs)
            M = linalg.zeros(F, d, d)
            for k in range(d):
                flip = g != G.identity and grading.degree(x, y, k) != G.identity
                M[k][k] = -F.one if flip else F.one
            fam[(x, y)] = M
        fams.append(fam)
    return HModuleStructure(C, H, fams)


# -- dense oracles -------------------------------------------------------------------


def dense_tensor(C: KCategory):
    """``T[(x, y, z)][k][i][j]``: coefficient of basis ``k`` in ``g_i o f_j``."""
    T = {}
    for x, y, z in itertools.product(C.objects, repeat=3):
        nk, ni, nj = C.dim(x, z), C.dim(y, z), C.dim(x, y)
        block = [[[C.field.zero] * nj for _ in range(ni)] for _ in range(nk)]
        for (i, j), vec in C.comp.get((x, y, z), {}).items():
            for k, c in vec.items():
                block[k][i][j] = c
        T[(x, y, z)] = block
    return T


def oracle_axioms_hold(F: Field, objects, dims: dict, T: dict, ids: dict) -> bool:
    """Evaluate both axiom families directly on the dense tensor."""
    zero = F.zero

    def comp(x, y, z, g, f):
        out = []
        for k in range(dims[(x, z)]):
            s = zero
            for i, gi in enumerate(g):
                if gi:
                    for j, fj in enumerate(f):
                        if fj:
                            s = s + gi * fj * T[(x, y, z)][k][i][j]
            out.append(s)
        return out

    def unit(n, i):
        v = [zero] * n
        v[i] = F.one
        return v

    for x, y in itertools.product(objects, repeat=2):
        for j in range(dims[(x, y)]):
            f = unit(dims[(x, y)], j)
            if comp(x, y, y, ids[y], f) != f or comp(x, x, y, f, ids[x]) != f:
                return False
    for w, x, y, z in itertools.product(objects, repeat=4):
        for a, b, c in itertools.product(range(dims[(y, z)]), range(dims[(x, y)]), range(dims[(w, x)])):
            h, g, f = unit(dims[(y, z)], a), unit(dims[(x, y)], b), unit(dims[(w, x)], c)
            if comp(w, y, z, h, comp(w, x, y, g, f)) != comp(w, x, z, comp(x, y, z, h, g), f):
                return False
    return True


def category_from_dense(F: Field, objects, homs, T, ids) -> KCategory:
    comp = {}
    for key, block in T.items():
        table = {}
        for k, rows in enumerate(block):
            for i, row in enumerate(rows):
                for j, c in enumerate(row):
                    if c:
                        table.setdefault((i, j), {})[k] = c
        if table:
            comp[key] = table
    return KCategory(F, objects, homs, comp, ids, name="perturbed")


# -- the property suite --------------------------------------------------------------


def construction_outputs(C: KCategory, rng: random.Random):
    """``(name, category)`` for every construction applicable to ``C``."""
    from kcat.category import endomorphism_algebra, full_subcategory
    from kcat.constructions import (
        Partition,
        additivise,
        contract,
        enumerate_idempotents,
        expand,
        inflate,
        karoubi_restricted,
        matrix_category,
        trivial_system,
    )
    from kcat.morita import identity_context, morita_rebase

    yield "contract-whole", contract(C, Partition.whole(C))
    yield "contract-singletons", contract(C, Partition.singletons(C))
    yield "expand-trivial", expand(C, trivial_system(C))
    sizes = {x: rng.randint(1, 2) for x in C.objects}
    yield "inflate", inflate(C, {x: list(range(k)) for x, k in sizes.items()})[0]
    yield "matrix", matrix_category(C, sizes)
    idems = {x: enumerate_idempotents(endomorphism_algebra(C, x)) for x in C.objects}
    yield "karoubi", karoubi_restricted(C, idems)
    # the bounded additivisation grows fast; two objects keep it cheap
    small = C if len(C.objects) <= 2 else full_subcategory(C, C.objects[:2])
    yield "additivise", additivise(small, 2)
    yield "rebase-identity", morita_rebase(C, identity_context(C))


def graded_outputs(C: KCategory, G, grading):
    """Smash, covering, skew and quotient outputs for a ``C2``-graded category."""
    from kcat.galois import inflated_action, quotient, skew
    from kcat.smash import smash_cover, smash_hopf
    from kcat.structures import grading_to_dual_module

    rho = grading_to_dual_module(C, G, grading)
    yield "smash-cover", smash_cover(C, G, grading)
    yield "smash-dual", smash_hopf(C, rho.hopf, rho)
    sign = sign_module(C, G, grading)
    yield "smash-kG", smash_hopf(C, sign.hopf, sign)
    D, act, _ = inflated_action(C, G, sign)
    yield "skew", skew(D, G, act)
    yield "quotient", quotient(D, G, act)


def perturbations(C: KCategory, rng: random.Random, count: int):
    """Random single-entry changes to the dense composition tensor or to an identity."""
    F = C.field
    T = dense_tensor(C)
    slots = [(key, k, i, j) for key, block in T.items() for k, rows in enumerate(block)
             for i, row in enumerate(rows) for j in range(len(row))]
    id_slots = [(x, k) for x in C.objects for k in range(C.dim(x, x))]
    for _ in range(count):
        T2 = {key: [[list(r) for r in rows] for rows in block] for key, block in T.items()}
        ids = {x: list(v) for x, v in C.identities.items()}
        if slots and rng.random() < 0.8:
            key, k, i, j = rng.choice(slots)
            old = T2[key][k][i][j]
            T2[key][k][i][j] = rng.choice([c for c in F.elements() if c != old])
        else:
            x, k = rng.choice(id_slots)
            old = ids[x][k]
            ids[x][k] = rng.choice([c for c in F.elements() if c != old])
        yield T2, ids
