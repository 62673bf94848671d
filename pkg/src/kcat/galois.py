"""Free group actions: the inflated action on ``I_G C``, the skew category
``D[G]`` and the quotient ``D/G`` computed through coinvariants."""

from __future__ import annotations

from dataclasses import dataclass

from .category import KCategory
from .constructions import inflate
from .errors import AxiomViolation, NotFreeAction
from .hopf import FiniteGroup
from .linalg import Cokernel
from .structures import GroupAction, HModuleStructure, validate_action, validate_hmodule


def inflated_action(C: KCategory, G: FiniteGroup, rho: HModuleStructure, check: bool = True):
    """Inflate ``C`` along ``G`` and let ``G`` act by left translation on the
    second coordinate and through ``rho`` on morphisms.

    Returns ``(I_G C, action, free)``; ``free`` is always ``True``.
    """
    if check:
        validate_hmodule(C, rho.hopf, rho).raise_if_failed(AxiomViolation)
    D, _ = inflate(C, {x: list(G.elements) for x in C.objects})
    obj = {u: {(x, s): (x, G.mul(u, s)) for (x, s) in D.objects} for u in G.elements}
    maps = {}
    for u in G.elements:
        b = rho.hopf.group_element(u)
        maps[u] = {(a, c): rho.act[b][(a[0], c[0])] for a in D.objects for c in D.objects}
    act = GroupAction(D, G, obj, maps)
    return D, act, act.is_free()


def skew(D: KCategory, G: FiniteGroup, act: GroupAction, check: bool = True) -> KCategory:
    """The skew category ``D[G]``.

    ``hom(a, b) = sum_u hom_D(a, u b)`` with labels ``(u, f)``, ``u`` major.
    A morphism ``(f | u)`` is ``f: a -> u b``; composition is
    ``(g | v) o (f | u) = (u(g) o f | uv)``.
    """
    if check:
        validate_action(D, G, act).raise_if_failed(AxiomViolation)
    F = D.field
    blocks = {}
    for a in D.objects:
        for b in D.objects:
            off, lay = 0, []
            for u in G.elements:
                ub = act.obj[u][b]
                lay.append((u, ub, off))
                off += D.dim(a, ub)
            blocks[(a, b)] = lay
    homs = {(a, b): [(u, f) for (u, ub, _) in lay for f in D.hom(a, ub)] for (a, b), lay in blocks.items()}

    def locate(a, b, i):
        for u, ub, off in blocks[(a, b)]:
            if i < off + D.dim(a, ub):
                return u, ub, i - off
        raise IndexError(i)

    def rule(a, b, c, i, j):
        v, vc, gi = locate(b, c, i)
        u, ub, fj = locate(a, b, j)
        g = D.basis_vector(b, vc, gi)
        ug = act.apply(u, b, vc, g)
        uvc = act.obj[u][vc]
        h = D.compose(a, ub, uvc, ug, D.basis_vector(a, ub, fj))
        uv = G.mul(u, v)
        out = [F.zero] * len(homs[(a, c)])
        for w, wc, off in blocks[(a, c)]:
            if w == uv:
                assert wc == uvc
                for k, x in enumerate(h):
                    out[off + k] = x
        return out

    ids = {}
    for a in D.objects:
        vec = [F.zero] * len(homs[(a, a)])
        for u, ua, off in blocks[(a, a)]:
            if u == G.identity:
                for k, x in enumerate(D.identity(a)):
                    vec[off + k] = x
        ids[a] = vec
    return KCategory.from_rule(F, D.objects, homs, rule, ids, name=f"{D.name}[{G.name}]")


@dataclass
class CoinvariantData:
    """Orbits and, per orbit pair, the layout of ``X = sum hom_D(a, b)`` and its
    coinvariant quotient."""

    orbits: list            # list of (representative, members)
    orbit_of: dict          # object -> representative
    layout: dict            # (alpha, beta) -> list of (a, b, offset)
    size: dict              # (alpha, beta) -> dim X
    coker: dict             # (alpha, beta) -> Cokernel
    translate: dict         # (b, c) -> unique s with s b = c

    def offset(self, alpha, beta, a, b) -> int:
        for a2, b2, off in self.layout[(alpha, beta)]:
            if (a2, b2) == (a, b):
                return off
        raise KeyError((a, b))

    def embed(self, D: KCategory, alpha, beta, a, b, vec) -> list:
        out = [D.field.zero] * self.size[(alpha, beta)]
        off = self.offset(alpha, beta, a, b)
        for k, x in enumerate(vec):
            out[off + k] = x
        return out

    def locate(self, D: KCategory, alpha, beta, col):
        for a, b, off in self.layout[(alpha, beta)]:
            if col < off + D.dim(a, b):
                return a, b, col - off
        raise IndexError(col)


def require_free(act: GroupAction) -> None:
    fixed = act.fixed_points()
    if fixed:
        s, x = fixed[0]
        raise NotFreeAction(x, s)


def coinvariant_data(D: KCategory, G: FiniteGroup, act: GroupAction) -> CoinvariantData:
    require_free(act)
    F = D.field
    orbits, orbit_of = [], {}
    for a in D.objects:
        if a in orbit_of:
            continue
        members = [b for b in D.objects if b in {act.obj[s][a] for s in G.elements}]
        orbits.append((a, members))
        for b in members:
            orbit_of[b] = a
    translate = {}
    for rep, members in orbits:
        for b in members:
            for s in G.elements:
                translate[(b, act.obj[s][b])] = s
    layout, size, coker = {}, {}, {}
    for ra, ma in orbits:
        for rb, mb in orbits:
            off, lay = 0, []
            for a in ma:
                for b in mb:
                    lay.append((a, b, off))
                    off += D.dim(a, b)
            layout[(ra, rb)] = lay
            size[(ra, rb)] = off
    data = CoinvariantData(orbits, orbit_of, layout, size, {}, translate)
    for key, lay in layout.items():
        rels = []
        for a, b, off in lay:
            for k in range(D.dim(a, b)):
                v = D.basis_vector(a, b, k)
                for s in G.elements:
                    if s == G.identity:
                        continue
                    sa, sb = act.obj[s][a], act.obj[s][b]
                    moved = data.embed(D, key[0], key[1], sa, sb, act.apply(s, a, b, v))
                    moved[off + k] = moved[off + k] - F.one
                    if any(moved):
                        rels.append(moved)
        coker[key] = Cokernel(F, size[key], rels)
    data.coker = coker
    return data


def quotient(D: KCategory, G: FiniteGroup, act: GroupAction, check: bool = True) -> KCategory:
    """The orbit category ``D/G`` of a free action.

    Objects are orbit representatives; ``hom(alpha, beta)`` is the coinvariant
    space of ``sum_{a in alpha, b in beta} hom_D(a, b)``.  Each canonical basis
    element is the class of one basis morphism, labelled ``(b, a, f)``.
    Composition: ``[g][f] = [g o (s f)]`` where ``s`` carries the target of
    ``f`` to the source of ``g``.
    """
    require_free(act)
    if check:
        validate_action(D, G, act).raise_if_failed(AxiomViolation)
    data = coinvariant_data(D, G, act)
    reps = [r for r, _ in data.orbits]
    homs = {}
    for key, ck in data.coker.items():
        labs = []
        for col in ck.kept:
            a, b, k = data.locate(D, key[0], key[1], col)
            labs.append((b, a, D.hom(a, b)[k]))
        homs[key] = labs

    def rule(al, be, ga, i, j):
        c, d, gk = data.locate(D, be, ga, data.coker[(be, ga)].kept[i])
        a, b, fk = data.locate(D, al, be, data.coker[(al, be)].kept[j])
        s = data.translate[(b, c)]
        sa = act.obj[s][a]
        sf = act.apply(s, a, b, D.basis_vector(a, b, fk))
        h = D.compose(sa, c, d, D.basis_vector(c, d, gk), sf)
        return data.coker[(al, ga)].project(data.embed(D, al, ga, sa, d, h))

    ids = {}
    for r in reps:
        ids[r] = data.coker[(r, r)].project(data.embed(D, r, r, r, r, D.identity(r)))
    return KCategory.from_rule(D.field, reps, homs, rule, ids, name=f"{D.name}/{G.name}")
