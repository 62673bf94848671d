"""Linear functors between finite k-categories, their validation, and the
faithful / full / dense / iso verdicts."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from . import linalg
from .category import KCategory
from .errors import AxiomViolation, MalformedInput
from .report import Report


class LinearFunctor:
    """``hom_matrices[(x, y)]`` maps coordinates in ``hom(x, y)`` to coordinates
    in ``hom(F x, F y)`` (shape ``dim target x dim source``)."""

    def __init__(self, source: KCategory, target: KCategory, object_map: dict, hom_matrices: dict, name: str = "F"):
        self.source = source
        self.target = target
        self.object_map = dict(object_map)
        self.hom_matrices = {k: [list(r) for r in M] for k, M in hom_matrices.items()}
        self.name = name
        self._check_shape()

    @classmethod
    def from_rule(cls, source, target, object_map, image, name="F"):
        """Build from ``image(x, y, i)``: coordinates of the image of the
        ``i``-th basis morphism of ``hom(x, y)``."""
        mats = {}
        for x in source.objects:
            for y in source.objects:
                rows = target.dim(object_map[x], object_map[y])
                cols = [image(x, y, i) for i in range(source.dim(x, y))]
                mats[(x, y)] = linalg.transpose(cols, rows) if cols else [[] for _ in range(rows)]
        return cls(source, target, object_map, mats, name)

    def _check_shape(self):
        S, T = self.source, self.target
        for x in S.objects:
            if x not in self.object_map:
                raise MalformedInput(f"{self.name}: object {x!r} has no image")
            if self.object_map[x] not in T._index:
                raise MalformedInput(f"{self.name}: image {self.object_map[x]!r} of {x!r} is not an object")
        for x in S.objects:
            for y in S.objects:
                M = self.hom_matrices.get((x, y))
                rows = T.dim(self.object_map[x], self.object_map[y])
                cols = S.dim(x, y)
                if M is None or len(M) != rows or any(len(r) != cols for r in M):
                    raise MalformedInput(f"{self.name}: hom matrix on {x!r}->{y!r} must be {rows}x{cols}")

    def __call__(self, x, y, v) -> list:
        """Image of the morphism with coordinates ``v`` in ``hom(x, y)``."""
        return linalg.matvec(self.target.field, self.hom_matrices[(x, y)], v)

    def ob(self, x):
        return self.object_map[x]

    def __repr__(self):
        return f"<LinearFunctor {self.name}: {self.source.name} -> {self.target.name}>"


def validate_functor(F: LinearFunctor) -> Report:
    """Identity and composition preservation over all basis pairs."""
    S, T = F.source, F.target
    rep = Report(f"functor {F.name}")
    for x in S.objects:
        fx = F.ob(x)
        ok = F(x, x, S.identity(x)) == T.identity(fx)
        rep.add(f"F(1_{x}) = 1_F{x}", ok, None if ok else x)
    for x, y, z in itertools.product(S.objects, repeat=3):
        if not S.dim(x, y) or not S.dim(y, z):
            continue
        bad = None
        for i, j in itertools.product(range(S.dim(y, z)), range(S.dim(x, y))):
            g = S.basis_vector(y, z, i)
            f = S.basis_vector(x, y, j)
            lhs = F(x, z, S.compose(x, y, z, g, f))
            rhs = T.compose(F.ob(x), F.ob(y), F.ob(z), F(y, z, g), F(x, y, f))
            if lhs != rhs:
                bad = (S.hom(y, z)[i], S.hom(x, y)[j])
                break
        rep.add(f"F(g o f) = F(g) o F(f) {x}->{y}->{z}", bad is None, bad)
    return rep


def require_functor(F: LinearFunctor) -> LinearFunctor:
    validate_functor(F).raise_if_failed(AxiomViolation, f"{F.name} is not a functor")
    return F


# -- properties -----------------------------------------------------------------


@dataclass
class FunctorProperties:
    """Verdicts are ``True``, ``False`` or ``None`` (unknown)."""

    faithful: bool
    full: bool
    iso: bool
    dense: bool | None
    witnesses: dict = field(default_factory=dict)
    notes: list = field(default_factory=list)

    def report(self, name: str = "functor properties") -> Report:
        rep = Report(name)
        rep.add("faithful", self.faithful)
        rep.add("full", self.full)
        rep.add("dense", self.dense, detail="; ".join(self.notes))
        rep.add("iso", self.iso)
        return rep

    def as_dict(self) -> dict:
        return {"faithful": self.faithful, "full": self.full, "iso": self.iso, "dense": self.dense}


def is_isomorphism_pair(C: KCategory, a, b, u, v) -> bool:
    """``u: a -> b`` and ``v: b -> a`` are mutually inverse."""
    return C.compose(b, a, b, u, v) == C.identity(b) and C.compose(a, b, a, v, u) == C.identity(a)


def inverse_of(C: KCategory, a, b, u) -> list | None:
    """The inverse ``v: b -> a`` of ``u: a -> b`` if one exists (a linear solve)."""
    n = C.dim(b, a)
    if n == 0:
        return [] if (C.dim(a, a) == 0 and C.dim(b, b) == 0) else None
    top = C.left_matrix(b, a, b, u)      # v |-> u o v
    bottom = C.right_matrix(a, b, a, u)  # v |-> v o u
    A = [list(r) for r in top] + [list(r) for r in bottom]
    rhs = list(C.identity(b)) + list(C.identity(a))
    v = linalg.solve(C.field, A, rhs, n)
    return v


def find_isomorphism(C: KCategory, a, b, budget: int | None = None):
    """Search ``hom(a, b)`` over a finite field for an isomorphism.

    Returns ``(u, v)``, ``None`` if there is none, or raises :class:`BudgetExhausted`.
    """
    F = C.field
    if not F.is_finite:
        raise BudgetExhausted("isomorphism search needs a finite field")
    n = C.dim(a, b)
    if budget is not None and F.p ** n > budget:
        raise BudgetExhausted(f"{F.p}^{n} candidates exceed budget {budget}")
    for u in F.vectors(n):
        v = inverse_of(C, a, b, list(u))
        if v is not None:
            return list(u), v
    return None


class BudgetExhausted(Exception):
    """Internal signal: a search could not be completed; reported as unknown."""


def functor_properties(F: LinearFunctor, budget: int | None = 10_000, witnesses: dict | None = None) -> FunctorProperties:
    """Faithful / full by exact rank of every hom map; dense by witness table
    or (finite fields only) brute-force isomorphism search within ``budget``.

    ``witnesses[b] = (x, u, v)`` claims ``u: F x -> b`` and ``v: b -> F x`` are
    mutually inverse.
    """
    S, T = F.source, F.target
    K = T.field
    faithful = full = True
    for (x, y), M in F.hom_matrices.items():
        r = linalg.rank(K, M) if S.dim(x, y) else 0
        if r < S.dim(x, y):
            faithful = False
        if r < T.dim(F.ob(x), F.ob(y)):
            full = False
    images = set(F.object_map.values())
    bijective_objects = len(images) == len(S.objects) == len(T.objects)
    iso = faithful and full and bijective_objects

    witnesses = dict(witnesses or {})
    found, notes = {}, []
    dense: bool | None = True
    for b in T.objects:
        if b in images:
            continue
        if b in witnesses:
            x, u, v = witnesses[b]
            if F.ob(x) in images and is_isomorphism_pair(T, F.ob(x), b, list(u), list(v)):
                found[b] = (x, list(u), list(v))
                continue
            notes.append(f"witness for {b!r} rejected")
        hit, unknown = None, False
        for x in S.objects:
            try:
                res = find_isomorphism(T, F.ob(x), b, budget)
            except BudgetExhausted as exc:
                unknown = True
                notes.append(f"{b!r}: {exc}")
                continue
            if res is not None:
                hit = (x, *res)
                break
        if hit is not None:
            found[b] = hit
        elif unknown:
            dense = None if dense is not False else False
        else:
            dense = False
            notes.append(f"{b!r} is not isomorphic to any image object")
            break
    return FunctorProperties(faithful, full, iso, dense, found, notes)


# -- basic functors ------------------------------------------------------------


def identity_functor(C: KCategory) -> LinearFunctor:
    mats = {(x, y): linalg.identity(C.field, C.dim(x, y)) for x in C.objects for y in C.objects}
    return LinearFunctor(C, C, {x: x for x in C.objects}, mats, name="Id")


def inclusion_functor(sub: KCategory, C: KCategory) -> LinearFunctor:
    """Inclusion of a full subcategory with the same hom bases."""
    return LinearFunctor(sub, C, {x: x for x in sub.objects},
                         {k: linalg.identity(C.field, sub.dim(*k)) for k in sub.homs}, name="incl")


def compose(G: LinearFunctor, F: LinearFunctor) -> LinearFunctor:
    """``G o F``."""
    if F.target is not G.source and not F.target.structure_equal(G.source):
        raise MalformedInput("functors are not composable")
    K = F.source.field
    obj = {x: G.ob(F.ob(x)) for x in F.source.objects}
    mats = {}
    for (x, y), M in F.hom_matrices.items():
        N = G.hom_matrices[(F.ob(x), F.ob(y))]
        mats[(x, y)] = linalg.matmul(K, N, M, len(M)) if M and N else [[K.zero] * F.source.dim(x, y) for _ in N]
    return LinearFunctor(F.source, G.target, obj, mats, name=f"{G.name}{F.name}")


def functor_equal(F: LinearFunctor, G: LinearFunctor) -> bool:
    """Same object map and entry-wise equal hom matrices."""
    return F.object_map == G.object_map and F.hom_matrices == G.hom_matrices


def is_identity(F: LinearFunctor) -> bool:
    S = F.source
    return F.target.structure_equal(S) and functor_equal(F, identity_functor(S))
