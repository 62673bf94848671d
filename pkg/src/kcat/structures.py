"""Gradings, group actions and Hopf-module structures on a category.

All three are overlays on a fixed :class:`~kcat.category.KCategory`:

* :class:`Grading` assigns a group element to every basis morphism
  (homogeneous bases only);
* :class:`GroupAction` permutes objects and maps ``hom(x, y)`` to
  ``hom(sx, sy)`` linearly;
* :class:`HModuleStructure` makes every hom space a module over a Hopf
  algebra, one matrix per Hopf basis element and hom space.
"""

from __future__ import annotations

import itertools

from . import linalg
from .category import KCategory
from .errors import AxiomViolation, MalformedInput, NontrivialObjectAction
from .hopf import FiniteGroup, HopfAlgebra, function_algebra, group_algebra
from .report import Report


class Grading:
    """``deg[(x, y)][i]`` is the degree of the ``i``-th basis element of ``hom(x, y)``."""

    def __init__(self, category: KCategory, group: FiniteGroup, deg):
        self.category = category
        self.group = group
        self.deg = {k: tuple(v) for k, v in deg.items()}
        for x in category.objects:
            for y in category.objects:
                d = self.deg.get((x, y))
                if d is None or len(d) != category.dim(x, y):
                    raise MalformedInput(f"grading does not cover {x!r}->{y!r}")
                for g in d:
                    if g not in group:
                        raise MalformedInput(f"degree {g!r} is not an element of {group.name}")

    @classmethod
    def from_labels(cls, category, group, label_deg: dict) -> Grading:
        """Build from a flat ``label -> degree`` map (labels must be unambiguous)."""
        deg = {}
        for (x, y), labs in category.homs.items():
            try:
                deg[(x, y)] = [label_deg[lab] for lab in labs]
            except KeyError as exc:
                raise MalformedInput(f"no degree for basis label {exc.args[0]!r}") from None
        return cls(category, group, deg)

    @classmethod
    def trivial(cls, category, group) -> Grading:
        e = group.identity
        return cls(category, group, {k: [e] * len(v) for k, v in category.homs.items()})

    def degree(self, x, y, i):
        return self.deg[(x, y)][i]

    def component(self, x, y, s) -> list[int]:
        """Basis indices of the degree-``s`` part of ``hom(x, y)``."""
        return [i for i, g in enumerate(self.deg[(x, y)]) if g == s]


def validate_grading(C: KCategory, G: FiniteGroup, grading: Grading) -> Report:
    """Homogeneous composites land in the product degree; identities have degree 1.

    A degree-``t`` morphism ``y -> z`` composed with a degree-``s`` morphism
    ``x -> y`` must lie in the degree-``ts`` part of ``hom(x, z)``.
    """
    rep = Report(f"grading of {C.name} by {G.name}".strip())
    deg = grading.deg
    for x in C.objects:
        bad = None
        for k, c in enumerate(C.identity(x)):
            if c and deg[(x, x)][k] != G.identity:
                bad = C.hom(x, x)[k]
                break
        rep.add(f"identity degree {x}", bad is None, bad)
    for x in C.objects:
        for y in C.objects:
            for z in C.objects:
                bad = None
                for i, j in itertools.product(range(C.dim(y, z)), range(C.dim(x, y))):
                    want = G.mul(deg[(y, z)][i], deg[(x, y)][j])
                    out = C.compose_basis(x, y, z, i, j)
                    for k, c in enumerate(out):
                        if c and deg[(x, z)][k] != want:
                            bad = (C.hom(y, z)[i], C.hom(x, y)[j], C.hom(x, z)[k])
                            break
                    if bad:
                        break
                rep.add(f"degree containment {x}->{y}->{z}", bad is None, bad)
    return rep


class GroupAction:
    """``obj[s][x] = s x`` and ``maps[s][(x, y)]``: ``hom(x, y) -> hom(sx, sy)``."""

    def __init__(self, category: KCategory, group: FiniteGroup, obj, maps):
        self.category = category
        self.group = group
        self.obj = {s: dict(obj[s]) for s in group.elements}
        self.maps = {s: {k: [list(r) for r in m] for k, m in maps[s].items()} for s in group.elements}
        C = category
        for s in group.elements:
            if sorted(map(C.index, self.obj[s].values())) != list(range(len(C.objects))):
                raise MalformedInput(f"object action of {s!r} is not a permutation")
            for x in C.objects:
                for y in C.objects:
                    M = self.maps[s].get((x, y))
                    sx, sy = self.obj[s][x], self.obj[s][y]
                    if M is None:
                        raise MalformedInput(f"no matrix for {s!r} on {x!r}->{y!r}")
                    rows, cols = linalg.shape(M) if M else (0, 0)
                    if len(M) != C.dim(sx, sy) or (M and cols != C.dim(x, y)):
                        raise MalformedInput(f"matrix for {s!r} on {x!r}->{y!r} has the wrong shape")

    def apply(self, s, x, y, v) -> list:
        return linalg.matvec(self.category.field, self.maps[s][(x, y)], v)

    def is_free(self) -> bool:
        return not self.fixed_points()

    def fixed_points(self) -> list[tuple]:
        e = self.group.identity
        return [(s, x) for s in self.group.elements if s != e for x in self.category.objects if self.obj[s][x] == x]

    def object_action_trivial(self) -> bool:
        return all(self.obj[s][x] == x for s in self.group.elements for x in self.category.objects)


def _eye_like(C, x, y):
    return linalg.identity(C.field, C.dim(x, y))


def validate_action(C: KCategory, G: FiniteGroup, act: GroupAction) -> Report:
    """Group action axioms on objects and homs, plus the freeness verdict."""
    rep = Report(f"action of {G.name} on {C.name}".strip())
    F = C.field
    e = G.identity
    objs = C.objects

    bad = None
    for x in objs:
        if act.obj[e][x] != x:
            bad = x
            break
    if bad is None:
        for s, t in itertools.product(G.elements, repeat=2):
            for x in objs:
                if act.obj[t][act.obj[s][x]] != act.obj[G.mul(t, s)][x]:
                    bad = (t, s, x)
                    break
            if bad:
                break
    rep.add("object action", bad is None, bad)

    bad = None
    for x, y in itertools.product(objs, repeat=2):
        if not linalg.mat_eq(act.maps[e][(x, y)], _eye_like(C, x, y)):
            bad = (x, y)
            break
    rep.add("identity acts trivially", bad is None, bad)

    bad = None
    for s, t in itertools.product(G.elements, repeat=2):
        ts = G.mul(t, s)
        for x, y in itertools.product(objs, repeat=2):
            sx, sy = act.obj[s][x], act.obj[s][y]
            lhs = linalg.matmul(F, act.maps[t][(sx, sy)], act.maps[s][(x, y)], C.dim(sx, sy))
            if C.dim(x, y) and not linalg.mat_eq(lhs, act.maps[ts][(x, y)]):
                bad = (t, s, x, y)
                break
        if bad:
            break
    rep.add("t(s f) = (ts) f", bad is None, bad)

    bad = None
    for s in G.elements:
        for x in objs:
            sx = act.obj[s][x]
            if act.apply(s, x, x, C.identity(x)) != C.identity(sx):
                bad = (s, x)
                break
        if bad:
            break
    rep.add("s(1_x) = 1_sx", bad is None, bad)

    bad = None
    for s in G.elements:
        for x, y, z in itertools.product(objs, repeat=3):
            sx, sy, sz = act.obj[s][x], act.obj[s][y], act.obj[s][z]
            for i, j in itertools.product(range(C.dim(y, z)), range(C.dim(x, y))):
                lhs = act.apply(s, x, z, C.compose_basis(x, y, z, i, j))
                rhs = C.compose(sx, sy, sz, act.apply(s, y, z, C.basis_vector(y, z, i)),
                                act.apply(s, x, y, C.basis_vector(x, y, j)))
                if lhs != rhs:
                    bad = (s, C.hom(y, z)[i], C.hom(x, y)[j])
                    break
            if bad:
                break
        if bad:
            break
    rep.add("s(g o f) = s(g) o s(f)", bad is None, bad)

    fixed = act.fixed_points()
    rep.add("free", True, None, detail=f"free={not fixed}")
    rep.checks[-1].witness = fixed[0] if fixed else None
    return rep


def is_free(act: GroupAction) -> bool:
    return act.is_free()


class HModuleStructure:
    """``act[b][(x, y)]`` is the matrix of Hopf basis element ``b`` on ``hom(x, y)``."""

    def __init__(self, category: KCategory, hopf: HopfAlgebra, act):
        self.category = category
        self.hopf = hopf
        C = category
        self.act = []
        if len(act) != hopf.dim:
            raise MalformedInput("one family of matrices per Hopf basis element is required")
        for b, mats in enumerate(act):
            fam = {}
            for x in C.objects:
                for y in C.objects:
                    M = mats.get((x, y))
                    n = C.dim(x, y)
                    if M is None or len(M) != n or any(len(r) != n for r in M):
                        raise MalformedInput(f"matrix of {hopf.basis[b]!r} on {x!r}->{y!r} has the wrong shape")
                    fam[(x, y)] = [list(r) for r in M]
            self.act.append(fam)

    def matrix(self, h, x, y) -> list[list]:
        """Matrix of an arbitrary Hopf element ``h`` (coordinate vector) on ``hom(x, y)``."""
        F = self.category.field
        n = self.category.dim(x, y)
        out = linalg.zeros(F, n, n)
        for b, c in enumerate(h):
            if c:
                M = self.act[b][(x, y)]
                out = [[o + c * m for o, m in zip(orow, mrow)] for orow, mrow in zip(out, M)]
        return out

    def apply(self, b, x, y, v) -> list:
        return linalg.matvec(self.category.field, self.act[b][(x, y)], v)


def validate_hmodule(C: KCategory, H: HopfAlgebra, rho: HModuleStructure) -> Report:
    """Module axioms, compatibility of composition with the coproduct, and the
    unit condition ``h 1_x = eps(h) 1_x``."""
    rep = Report(f"{H.name}-module structure on {C.name}".strip())
    F = C.field
    n = H.dim
    objs = C.objects

    bad = None
    for a, b in itertools.product(range(n), repeat=2):
        ab = H.mul(H.basis_vector(a), H.basis_vector(b))
        for x, y in itertools.product(objs, repeat=2):
            if not C.dim(x, y):
                continue
            lhs = rho.matrix(ab, x, y)
            rhs = linalg.matmul(F, rho.act[a][(x, y)], rho.act[b][(x, y)])
            if not linalg.mat_eq(lhs, rhs):
                bad = (H.basis[a], H.basis[b], (x, y))
                break
        if bad:
            break
    rep.add("(hh')f = h(h'f)", bad is None, bad)

    bad = None
    for x, y in itertools.product(objs, repeat=2):
        if not linalg.mat_eq(rho.matrix(H.unit, x, y), _eye_like(C, x, y)):
            bad = (x, y)
            break
    rep.add("1_H f = f", bad is None, bad)

    bad = None
    for h in range(n):
        delta = H.comult[h]
        for x, y, z in itertools.product(objs, repeat=3):
            for i, j in itertools.product(range(C.dim(y, z)), range(C.dim(x, y))):
                lhs = rho.apply(h, x, z, C.compose_basis(x, y, z, i, j))
                rhs = C.zero(x, z)
                g = C.basis_vector(y, z, i)
                f = C.basis_vector(x, y, j)
                for (a, b), c in delta.items():
                    term = C.compose(x, y, z, rho.apply(a, y, z, g), rho.apply(b, x, y, f))
                    rhs = [r + c * t for r, t in zip(rhs, term)]
                if lhs != rhs:
                    bad = (H.basis[h], C.hom(y, z)[i], C.hom(x, y)[j])
                    break
            if bad:
                break
        if bad:
            break
    rep.add("h(g o f) = sum (h1 g) o (h2 f)", bad is None, bad)

    bad = None
    for h in range(n):
        for x in objs:
            want = [H.counit[h] * c for c in C.identity(x)]
            if rho.apply(h, x, x, C.identity(x)) != want:
                bad = (H.basis[h], x)
                break
        if bad:
            break
    rep.add("h 1_x = eps(h) 1_x", bad is None, bad)
    return rep


# -- conversions -----------------------------------------------------------


def grading_to_dual_module(C: KCategory, G: FiniteGroup, grading: Grading, dual=None) -> HModuleStructure:
    """The ``k^G``-module structure where ``delta_s`` projects onto degree ``s``."""
    validate_grading(C, G, grading).raise_if_failed(AxiomViolation)
    F = C.field
    H = dual or function_algebra(G, F)
    act = []
    for s in G.elements:
        mats = {}
        for (x, y), degs in grading.deg.items():
            n = len(degs)
            M = linalg.zeros(F, n, n)
            for i, g in enumerate(degs):
                if g == s:
                    M[i][i] = F.one
            mats[(x, y)] = M
        act.append(mats)
    return HModuleStructure(C, H, act)


def action_to_kG_module(C: KCategory, G: FiniteGroup, act: GroupAction, kG=None) -> HModuleStructure:
    """A group action fixing every object, read as a ``kG``-module structure."""
    if not act.object_action_trivial():
        moved = next((s, x) for s in G.elements for x in C.objects if act.obj[s][x] != x)
        raise NontrivialObjectAction(f"group element {moved[0]!r} moves object {moved[1]!r}")
    validate_action(C, G, act).raise_if_failed(AxiomViolation)
    H = kG or group_algebra(G, C.field)
    return HModuleStructure(C, H, [act.maps[g] for g in G.elements])


def kG_module_to_action(C: KCategory, G: FiniteGroup, rho: HModuleStructure) -> GroupAction:
    """Forget a ``kG``-module structure to the group action it encodes."""
    obj = {s: {x: x for x in C.objects} for s in G.elements}
    maps = {s: rho.act[rho.hopf.group_element(s)] for s in G.elements}
    return GroupAction(C, G, obj, maps)


def trivial_kG_module(C: KCategory, G: FiniteGroup) -> HModuleStructure:
    H = group_algebra(G, C.field)
    mats = {(x, y): _eye_like(C, x, y) for x in C.objects for y in C.objects}
    return HModuleStructure(C, H, [mats for _ in G.elements])


def trivial_hmodule(C: KCategory, H: HopfAlgebra) -> HModuleStructure:
    """Every ``h`` acts by ``eps(h)``: valid for any Hopf algebra."""
    act = []
    for b in range(H.dim):
        act.append({(x, y): [[H.counit[b] * a for a in row] for row in _eye_like(C, x, y)]
                    for x in C.objects for y in C.objects})
    return HModuleStructure(C, H, act)


def induced_kG_structure_on_smash_dual(B: KCategory, G: FiniteGroup, grading: Grading):
    """``B # k^G`` together with its ``kG``-structure ``t (f (x) delta_s) = f (x) delta_{s t^-1}``.

    Returns ``(B # k^G, HModuleStructure over kG)``.
    """
    from .smash import smash_hopf

    F = B.field
    dual = function_algebra(G, F)
    rho = grading_to_dual_module(B, G, grading, dual)
    S = smash_hopf(B, dual, rho)
    kG = group_algebra(G, F)
    n = G.order
    act = []
    for t in G.elements:
        tinv = G.inv(t)
        mats = {}
        for x in S.objects:
            for y in S.objects:
                d = S.dim(x, y)
                M = linalg.zeros(F, d, d)
                for col, (f, s) in enumerate(S.hom(x, y)):
                    fi = col // n
                    row = fi * n + G.index(G.mul(s, tinv))
                    M[row][col] = F.one
                mats[(x, y)] = M
        act.append(mats)
    return S, HModuleStructure(S, kG, act)
