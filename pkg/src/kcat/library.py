"""Small standard instances: the A2 path category, group algebras as graded
one-object categories, dual numbers with the sign action, and friends."""

from __future__ import annotations

from .category import AssocAlgebra, KCategory, category_of_algebra
from .field import QQ, Field
from .hopf import FiniteGroup, group_algebra
from .structures import Grading, HModuleStructure


def a2(F: Field = QQ) -> KCategory:
    """Objects ``x, y``; one arrow ``alpha: x -> y`` besides the identities."""
    one = F.one
    homs = {("x", "x"): ["1x"], ("y", "y"): ["1y"], ("x", "y"): ["alpha"], ("y", "x"): []}
    comp = {
        ("x", "x", "x"): {(0, 0): {0: one}},
        ("y", "y", "y"): {(0, 0): {0: one}},
        ("x", "y", "y"): {(0, 0): {0: one}},
        ("x", "x", "y"): {(0, 0): {0: one}},
    }
    return KCategory(F, ["x", "y"], homs, comp, {"x": [one], "y": [one]}, name="A2")


def group_category(G: FiniteGroup, F: Field = QQ) -> KCategory:
    """``kG`` as a one-object category with basis labelled by the elements."""
    H = group_algebra(G, F)
    A = AssocAlgebra(F, H.basis, H.mult, H.unit, name=H.name)
    return category_of_algebra(A)


def graded_group_category(G: FiniteGroup, F: Field = QQ):
    """``kG`` graded by ``deg(g) = g``; returns ``(C, grading)``."""
    C = group_category(G, F)
    return C, Grading(C, G, {("*", "*"): list(G.elements)})


def graded_kc2(F: Field = QQ):
    """``(C, G, grading)`` for ``kC2`` with ``deg(t) = t``."""
    G = FiniteGroup.cyclic(2)
    C, gr = graded_group_category(G, F)
    return C, G, gr


def dual_numbers(F: Field = QQ) -> KCategory:
    """``k[e]/(e^2)`` on one object, basis ``1, e``."""
    one = F.one
    A = AssocAlgebra(F, ["1", "e"], {(0, 0): {0: one}, (0, 1): {1: one}, (1, 0): {1: one}},
                     [one, F.zero], name="k[e]")
    return category_of_algebra(A)


def sign_action(C: KCategory, F: Field | None = None) -> HModuleStructure:
    """``kC2`` acting on the dual numbers by ``t . e = -e``."""
    F = F or C.field
    G = FiniteGroup.cyclic(2)
    H = group_algebra(G, F)
    one, zero = F.one, F.zero
    ident = {("*", "*"): [[one, zero], [zero, one]]}
    flip = {("*", "*"): [[one, zero], [zero, -one]]}
    return HModuleStructure(C, H, [ident, flip])


def k_times_k(F: Field = QQ) -> KCategory:
    """The product algebra ``k x k`` on one object, basis ``e1, e2``."""
    one = F.one
    A = AssocAlgebra(F, ["e1", "e2"], {(0, 0): {0: one}, (1, 1): {1: one}}, [one, one], name="kxk")
    return category_of_algebra(A)


def perturbed_kc2(F: Field = QQ) -> KCategory:
    """``kC2`` with the single entry ``1 o t`` set to zero: the left unit law fails at ``t``."""
    C = group_category(FiniteGroup.cyclic(2), F)
    comp = {k: {p: dict(v) for p, v in t.items()} for k, t in C.comp.items()}
    del comp[("*", "*", "*")][(0, 1)]
    return KCategory(F, C.objects, C.homs, comp, C.identities, name="kC2'")
