"""Smash products: ``C # H`` for a Hopf-module category, the covering ``C # G``
of a graded category, and the algebra-level ``A # H`` used as an independent
cross-check through :func:`~kcat.category.assemble_algebra`."""

from __future__ import annotations

from . import linalg
from .category import AssocAlgebra, KCategory, algebra_offsets
from .errors import AxiomViolation
from .hopf import FiniteGroup, HopfAlgebra
from .structures import Grading, HModuleStructure, validate_grading, validate_hmodule


def smash_hopf(C: KCategory, H: HopfAlgebra, rho: HModuleStructure, check: bool = True) -> KCategory:
    """The smash category ``C # H``.

    Homs are ``hom(x, y) (x) H`` with basis labels ``(f, h)`` (``f`` major).
    Composition: ``(g (x) h) o (f (x) h') = sum g o (h1 f) (x) h2 h'``.
    """
    if check:
        validate_hmodule(C, H, rho).raise_if_failed(AxiomViolation)
    F = C.field
    n = H.dim
    homs = {(x, y): [(f, h) for f in labs for h in H.basis] for (x, y), labs in C.homs.items()}

    # h . f for every Hopf basis element and basis morphism
    acted = {}
    for (x, y), labs in C.homs.items():
        for b in range(n):
            M = rho.act[b][(x, y)]
            for j in range(len(labs)):
                acted[(x, y, b, j)] = [row[j] for row in M]
    hprod = {(b, c): H.mul(H.basis_vector(b), H.basis_vector(c)) for b in range(n) for c in range(n)}

    def rule(x, y, z, i, j):
        gi, hi = divmod(i, n)
        fj, hj = divmod(j, n)
        g = C.basis_vector(y, z, gi)
        out = [F.zero] * (C.dim(x, z) * n)
        for (a, b), coeff in H.comult[hi].items():
            gf = C.compose(x, y, z, g, acted[(x, y, a, fj)])
            if not any(gf):
                continue
            hh = hprod[(b, hj)]
            for k, u in enumerate(gf):
                if not u:
                    continue
                for m, w in enumerate(hh):
                    if w:
                        out[k * n + m] = out[k * n + m] + coeff * u * w
        return out

    ids = {}
    for x in C.objects:
        vec = []
        for u in C.identity(x):
            vec.extend(u * w for w in H.unit)
        ids[x] = vec
    return KCategory.from_rule(F, C.objects, homs, rule, ids, name=f"{C.name}#{H.name}")


def assembled_hmodule(C: KCategory, rho: HModuleStructure) -> list[list[list]]:
    """Matrices of the Hopf basis on ``a(C)``: block diagonal over hom spaces."""
    F = C.field
    offsets = algebra_offsets(C)
    N = C.total_dim()
    out = []
    for b in range(rho.hopf.dim):
        M = linalg.zeros(F, N, N)
        for (x, y), o in offsets.items():
            blk = rho.act[b][(x, y)]
            for r, row in enumerate(blk):
                for c, v in enumerate(row):
                    M[o + r][o + c] = v
        out.append(M)
    return out


def smash_algebra(A: AssocAlgebra, H: HopfAlgebra, action) -> AssocAlgebra:
    """The smash product algebra ``A # H`` of an ``H``-module algebra.

    ``action[b]`` is the matrix of the ``b``-th Hopf basis element on ``A``.
    Basis labels ``(a, h)``; product ``(a (x) h)(a' (x) h') = sum a (h1 a') (x) h2 h'``.
    """
    F = A.field
    n, d = H.dim, A.dim
    basis = [(a, h) for a in A.basis for h in H.basis]
    mult = {}
    for i in range(d * n):
        ai, hi = divmod(i, n)
        for j in range(d * n):
            aj, hj = divmod(j, n)
            out = {}
            for (p, q), coeff in H.comult[hi].items():
                moved = [row[aj] for row in action[p]]
                prod = A.mul(A.basis_vector(ai), moved)
                if not any(prod):
                    continue
                hh = H.mul(H.basis_vector(q), H.basis_vector(hj))
                for k, u in enumerate(prod):
                    if not u:
                        continue
                    for m, w in enumerate(hh):
                        if w:
                            key = k * n + m
                            out[key] = out.get(key, F.zero) + coeff * u * w
            out = {k: v for k, v in out.items() if v}
            if out:
                mult[(i, j)] = out
    unit = [u * w for u in A.unit for w in H.unit]
    return AssocAlgebra(F, basis, mult, unit, name=f"{A.name}#{H.name}")


def smash_cover(C: KCategory, G: FiniteGroup, grading: Grading, check: bool = True) -> KCategory:
    """The Galois covering ``C # G`` of a graded category.

    Objects ``(x, s)``; ``hom((x, s), (y, t))`` is the degree ``t^-1 s`` part of
    ``hom(x, y)`` with the inherited labels; composition is restricted from ``C``.
    """
    if check:
        validate_grading(C, G, grading).raise_if_failed(AxiomViolation)
    objects = [(x, s) for x in C.objects for s in G.elements]
    sub = {}
    for (x, s) in objects:
        for (y, t) in objects:
            sub[((x, s), (y, t))] = grading.component(x, y, G.mul(G.inv(t), s))
    homs = {k: [C.hom(k[0][0], k[1][0])[i] for i in idx] for k, idx in sub.items()}

    def rule(a, b, c, i, j):
        x, y, z = a[0], b[0], c[0]
        gi = sub[(b, c)][i]
        fj = sub[(a, b)][j]
        full = C.compose_basis(x, y, z, gi, fj)
        return [full[k] for k in sub[(a, c)]]

    ids = {}
    for (x, s) in objects:
        idv = C.identity(x)
        ids[(x, s)] = [idv[k] for k in sub[((x, s), (x, s))]]
    return KCategory.from_rule(C.field, objects, homs, rule, ids, name=f"{C.name}#{G.name}")
