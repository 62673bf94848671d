"""The two end-to-end verification pipelines and the reusable checks they chain."""

from __future__ import annotations

import time

from .category import assemble_algebra, isomorphism_obstruction, validate_category
from .functor import compose, functor_properties, is_identity, validate_functor
from .galois import inflated_action, quotient
from .hopf import FiniteGroup, validate_hopf
from .isos import contraction_iso_L, duality_pair, skew_to_quotient, smash_quotient_iso
from .report import Report
from .smash import assembled_hmodule, smash_algebra, smash_cover, smash_hopf
from .structures import (
    Grading,
    HModuleStructure,
    grading_to_dual_module,
    induced_kG_structure_on_smash_dual,
    validate_action,
    validate_grading,
    validate_hmodule,
)


class _Timer:
    def __init__(self, rep: Report):
        self.rep = rep

    def __enter__(self):
        self.n = len(self.rep.checks)
        self.t = time.perf_counter()
        return self

    def __exit__(self, *exc):
        dt = time.perf_counter() - self.t
        new = self.rep.checks[self.n:]
        for c in new:
            c.seconds = dt / len(new)
        return False


def smash_prop_check(C, rho: HModuleStructure, rep: Report, prefix: str = "") -> None:
    """``a(C # H)`` against the directly built ``a(C) # H``, entry by entry."""
    H = rho.hopf
    lhs = assemble_algebra(smash_hopf(C, H, rho))
    rhs = smash_algebra(assemble_algebra(C), H, assembled_hmodule(C, rho))
    rep.add(f"{prefix}a(C#{H.name}) = a(C)#{H.name}", lhs.structure_equal(rhs),
            detail=f"dim {lhs.dim}")


def iso_L_checks(C, G: FiniteGroup, grading: Grading, rep: Report, prefix: str = "") -> None:
    cover = smash_cover(C, G, grading)
    rho = grading_to_dual_module(C, G, grading)
    dual = smash_hopf(C, rho.hopf, rho)
    obstruction = isomorphism_obstruction(cover, dual)
    rep.add(f"{prefix}C#G and C#k^G differ", obstruction is not None, detail=obstruction or "no obstruction found")
    L, src, tgt = contraction_iso_L(C, G, grading)
    rep.add(f"{prefix}L is a functor", validate_functor(L).ok)
    props = functor_properties(L)
    rep.add(f"{prefix}L is an isomorphism", props.iso, detail=str(props.as_dict()))


def duality_checks(B, G: FiniteGroup, grading: Grading, rep: Report, prefix: str = "") -> None:
    BkG, rho = induced_kG_structure_on_smash_dual(B, G, grading)
    rep.add(f"{prefix}kG-structure on B#k^G", validate_hmodule(BkG, rho.hopf, rho).ok)
    phi, psi, S, M = duality_pair(B, G, grading)
    rep.add(f"{prefix}(B#k^G)#kG valid", validate_category(S).ok)
    rep.add(f"{prefix}phi is a functor", validate_functor(phi).ok)
    rep.add(f"{prefix}psi is a functor", validate_functor(psi).ok)
    rep.add(f"{prefix}phi psi = Id", is_identity(compose(phi, psi)))
    rep.add(f"{prefix}psi phi = Id", is_identity(compose(psi, phi)))
    n2 = G.order ** 2
    bad = [(x, y) for x in B.objects for y in B.objects
           if not (S.dim(x, y) == M.dim(x, y) == n2 * B.dim(x, y))]
    dims = ", ".join(f"{x}->{y}: {S.dim(x, y)}" for x in B.objects for y in B.objects)
    rep.add(f"{prefix}hom dims = |G|^2 dim B", not bad, bad[0] if bad else None, detail=dims)


def quotient_iso_checks(C, G: FiniteGroup, rho: HModuleStructure, rep: Report, prefix: str = "") -> None:
    Phi, src, tgt = smash_quotient_iso(C, G, rho)
    rep.add(f"{prefix}Phi is a functor", validate_functor(Phi).ok)
    props = functor_properties(Phi)
    rep.add(f"{prefix}Phi is an isomorphism", props.iso)
    pairs = [(x, y) for x in C.objects for y in C.objects]
    dims = ", ".join(f"{src.dim(x, y)} = {tgt.dim(Phi.ob(x), Phi.ob(y))}" for x, y in pairs)
    ok = all(src.dim(x, y) == tgt.dim(Phi.ob(x), Phi.ob(y)) for x, y in pairs)
    rep.add(f"{prefix}hom dims agree", ok, detail=dims)


def galois_to_smash(B, G: FiniteGroup, grading: Grading) -> Report:
    """From a graded category: ``B # G``, ``B # k^G``, its ``kG``-structure,
    ``(B # k^G) # kG`` against ``M_|G|(B)``."""
    rep = Report(f"pipeline galois-to-smash on {B.name}")
    with _Timer(rep):
        rep.add("B is a category", validate_category(B).ok)
        rep.add("grading", validate_grading(B, G, grading).ok)
    if not rep.ok:
        return rep
    with _Timer(rep):
        iso_L_checks(B, G, grading, rep, "[L] ")
    with _Timer(rep):
        rho = grading_to_dual_module(B, G, grading)
        rep.add("[prop] k^G is a Hopf algebra", validate_hopf(rho.hopf).ok)
        smash_prop_check(B, rho, rep, "[prop] ")
    with _Timer(rep):
        duality_checks(B, G, grading, rep, "[duality] ")
    return rep


def smash_to_galois(C, G: FiniteGroup, rho: HModuleStructure) -> Report:
    """From a ``kG``-category: ``I_G C``, its free action, the quotient, and the
    isomorphism ``C # kG -> (I_G C)/G``; also the skew comparison."""
    rep = Report(f"pipeline smash-to-galois on {C.name}")
    with _Timer(rep):
        rep.add("C is a category", validate_category(C).ok)
        rep.add("kG is a Hopf algebra", validate_hopf(rho.hopf).ok)
        rep.add("kG-structure", validate_hmodule(C, rho.hopf, rho).ok)
    if not rep.ok:
        return rep
    with _Timer(rep):
        D, act, free = inflated_action(C, G, rho)
        rep.add("[inflate] action axioms", validate_action(D, G, act).ok)
        rep.add("[inflate] action is free", free)
        Q = quotient(D, G, act)
        rep.add("[quotient] valid", validate_category(Q).ok)
    with _Timer(rep):
        smash_prop_check(C, rho, rep, "[prop] ")
    with _Timer(rep):
        quotient_iso_checks(C, G, rho, rep, "[quotient-iso] ")
    with _Timer(rep):
        Qf, S, _ = skew_to_quotient(D, G, act)
        rep.add("[skew] D[G] valid", validate_category(S).ok)
        rep.add("[skew] D[G] -> D/G is a functor", validate_functor(Qf).ok)
        props = functor_properties(Qf)
        rep.add("[skew] D[G] -> D/G is an equivalence", props.full and props.faithful and props.dense,
                detail=str(props.as_dict()))
    return rep
