"""Explicit functors between constructions: smash inclusions, the contraction
isomorphism ``L``, the smash/quotient isomorphism, the duality pair, and a few
comparison functors."""

from __future__ import annotations

from . import linalg
from .category import KCategory
from .constructions import (
    Partition,
    _sandwich,
    complement_partition,
    contract,
    inflate,
    karoubi_restricted,
    matrix_category,
)
from .functor import LinearFunctor
from .galois import coinvariant_data, inflated_action, quotient, skew
from .hopf import FiniteGroup, HopfAlgebra
from .morita import matrix_context, morita_rebase
from .smash import smash_cover, smash_hopf
from .structures import (
    Grading,
    GroupAction,
    HModuleStructure,
    grading_to_dual_module,
    induced_kG_structure_on_smash_dual,
)


def smash_inclusion(C: KCategory, H: HopfAlgebra, rho: HModuleStructure, h=None, CH: KCategory | None = None) -> LinearFunctor:
    """``f |-> f (x) h`` into ``C # H``; ``h`` defaults to the unit, which gives a functor."""
    CH = CH or smash_hopf(C, H, rho)
    h = list(H.unit) if h is None else list(h)
    n = H.dim

    def image(x, y, i):
        out = [C.field.zero] * (C.dim(x, y) * n)
        for m, c in enumerate(h):
            out[i * n + m] = c
        return out

    return LinearFunctor.from_rule(C, CH, {x: x for x in C.objects}, image, name="incl")


def orbit_partition(C: KCategory, G: FiniteGroup) -> Partition:
    """Blocks ``{(x, s) : s in G}`` of ``C # G``, named by ``x``."""
    return Partition([[(x, s) for s in G.elements] for x in C.objects], names=list(C.objects))


def contraction_iso_L(C: KCategory, G: FiniteGroup, grading: Grading):
    """``L``: the contraction of ``C # G`` along orbits to ``C # k^G``.

    A basis morphism ``f: (x, s) -> (y, t)`` goes to ``f (x) delta_{s^-1}``.
    Returns ``(L, source, target)``.
    """
    cover = smash_cover(C, G, grading)
    src = contract(cover, orbit_partition(C, G))
    rho = grading_to_dual_module(C, G, grading)
    tgt = smash_hopf(C, rho.hopf, rho)
    n = G.order

    def image(x, y, i):
        (yy, t), (xx, s), f = src.hom(x, y)[i]
        out = [C.field.zero] * tgt.dim(x, y)
        # labels of the cover are C's labels restricted to a degree component
        k = C.label_index(x, y, f)
        out[k * n + G.index(G.inv(s))] = C.field.one
        return out

    return LinearFunctor.from_rule(src, tgt, {x: x for x in C.objects}, image, name="L"), src, tgt


def smash_quotient_iso(C: KCategory, G: FiniteGroup, rho: HModuleStructure):
    """``C # kG -> (I_G C)/G``, ``f (x) u |-> [f placed in hom((x, u), (y, 1))]``.

    Returns ``(functor, source, target)``.
    """
    src = smash_hopf(C, rho.hopf, rho)
    D, act, _ = inflated_action(C, G, rho)
    tgt = quotient(D, G, act)
    data = coinvariant_data(D, G, act)
    e = G.identity
    n = G.order
    obj = {x: data.orbit_of[(x, e)] for x in C.objects}

    def image(x, y, i):
        fk, uk = divmod(i, n)
        u = rho.hopf.basis[uk]
        al, be = obj[x], obj[y]
        v = data.embed(D, al, be, (x, u), (y, e), C.basis_vector(x, y, fk))
        return data.coker[(al, be)].project(v)

    return LinearFunctor.from_rule(src, tgt, obj, image, name="Phi"), src, tgt


def skew_to_quotient(D: KCategory, G: FiniteGroup, act: GroupAction):
    """``D[G] -> D/G``: ``(f | u) |-> [f]``.

    Full, faithful and surjective on objects for a free action, hence an
    equivalence.  Returns ``(functor, source, target)``.
    """
    src = skew(D, G, act)
    tgt = quotient(D, G, act)
    data = coinvariant_data(D, G, act)
    obj = {a: data.orbit_of[a] for a in D.objects}

    def image(a, b, i):
        u, f = src.hom(a, b)[i]
        ub = act.obj[u][b]
        off = 0
        for w in G.elements:
            if w == u:
                break
            off += D.dim(a, act.obj[w][b])
        k = i - off
        v = data.embed(D, obj[a], obj[b], a, ub, D.basis_vector(a, ub, k))
        return data.coker[(obj[a], obj[b])].project(v)

    return LinearFunctor.from_rule(src, tgt, obj, image, name="Q"), src, tgt


def duality_pair(B: KCategory, G: FiniteGroup, grading: Grading):
    """``phi: (B # k^G) # kG -> M_|G|(B)`` and its inverse ``psi``.

    ``phi(f (x) delta_g (x) h) = f E_{rg, gh}`` and
    ``psi(f E_{g, h}) = f (x) delta_{r^-1 g} (x) g^-1 r h`` for ``f`` of degree ``r``.
    Matrix rows and columns are indexed by ``G`` in declared order.
    Returns ``(phi, psi, smash, matrices)``.
    """
    BkG, rho = induced_kG_structure_on_smash_dual(B, G, grading)
    S = smash_hopf(BkG, rho.hopf, rho)
    M = matrix_category(B, G.order)
    n = G.order
    F = B.field
    idx = G.index

    def phi_image(x, y, i):
        d = B.dim(x, y)
        (f, g), h = S.hom(x, y)[i]
        k = B.label_index(x, y, f)
        r = grading.degree(x, y, k)
        row, col = G.mul(r, g), G.mul(g, h)
        out = [F.zero] * (n * d * n)
        out[idx(row) * d * n + k * n + idx(col)] = F.one
        return out

    def psi_image(x, y, i):
        d = B.dim(x, y)
        a, k, b = divmod(i, d * n)[0], (i // n) % d, i % n
        g, h = G.elements[a], G.elements[b]
        r = grading.degree(x, y, k)
        dg = G.mul(G.inv(r), g)
        hh = G.prod(G.inv(g), r, h)
        out = [F.zero] * (d * n * n)
        out[(k * n + idx(dg)) * n + idx(hh)] = F.one
        return out

    ident = {x: x for x in B.objects}
    phi = LinearFunctor.from_rule(S, M, ident, phi_image, name="phi")
    psi = LinearFunctor.from_rule(M, S, ident, psi_image, name="psi")
    return phi, psi, S, M


def rebase_to_matrix(C: KCategory, n: int):
    """Comparison from the matrix-context rebase to ``M_n(C)``:
    ``(a, p) (x) f (x) (b, q) |-> (p o f o q) E_{a, b}``.

    Returns ``(functor, rebased, matrices)``.
    """
    D = morita_rebase(C, matrix_context(C, n))
    M = matrix_category(C, n)
    F = C.field

    def image(x, y, i):
        (a, plab), flab, (b, qlab) = D.hom(x, y)[i]
        p = C.basis_vector(y, y, C.label_index(y, y, plab))
        f = C.basis_vector(x, y, C.label_index(x, y, flab))
        q = C.basis_vector(x, x, C.label_index(x, x, qlab))
        w = C.compose(x, y, y, p, C.compose(x, x, y, f, q))
        d = C.dim(x, y)
        out = [F.zero] * (n * d * n)
        for k, c in enumerate(w):
            out[a * d * n + k * n + b] = c
        return out

    return LinearFunctor.from_rule(D, M, {x: x for x in C.objects}, image, name="R"), D, M


def inflation_section(C: KCategory, F: dict):
    """``C -> I_F C`` onto the representatives ``(x, F[x][0])``.

    Returns ``(functor, inflated)``.
    """
    I, section = inflate(C, F)
    mats = {(x, y): linalg.identity(C.field, C.dim(x, y)) for x in C.objects for y in C.objects}
    return LinearFunctor(C, I, section, mats, name="sec"), I


def inflation_witnesses(C: KCategory, I: KCategory, section: dict) -> dict:
    """Density witnesses for the section: every ``(x, j)`` is isomorphic to
    ``(x, i)`` through the copies of ``1_x`` in both directions."""
    out = {}
    for (x, j) in I.objects:
        if (x, j) != section[x]:
            out[(x, j)] = (x, list(C.identity(x)), list(C.identity(x)))
    return out


def karoubi_comparison(C: KCategory, idems: dict):
    """``C -> contract(Kar, {e, 1 - e})``: each object goes to the block holding
    its identity idempotent, each morphism to its sandwich coordinates.

    ``idems`` must contain the identity and be closed under complements.
    Returns ``(functor, karoubi, contracted)``.
    """
    K = karoubi_restricted(C, idems)
    E = complement_partition(C, K, idems)
    T = contract(K, E)
    home = {}
    for x in C.objects:
        i = [list(v) for v in idems[x]].index(list(C.identity(x)))
        home[x] = (x, i)
    obj = {x: E.block_of(home[x]) for x in C.objects}

    def image(x, y, i):
        a, b = home[x], home[y]
        space = _sandwich(C, x, y, C.identity(x), C.identity(y))
        coords = space.coords(C.basis_vector(x, y, i))
        labels = T.hom(obj[x], obj[y])
        out = [C.field.zero] * len(labels)
        for k, c in enumerate(coords):
            out[labels.index((b, a, k))] = c
        return out

    return LinearFunctor.from_rule(C, T, obj, image, name="J"), K, T
