"""Morita contexts per object and the rebased category
``hom_D(x, y) = P_y (x)_{A_y} hom(x, y) (x)_{A_x} Q_x``.

Right actions are stored as matrices acting on coordinate columns, so the
matrix of ``m |-> m a`` is ``right[a]`` and ``right[a a'] = right[a'] right[a]``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from . import linalg
from .category import AssocAlgebra, KCategory, endomorphism_algebra, validate_algebra
from .errors import ActionAxiomViolation, InvalidContext
from .field import Field
from .linalg import Cokernel
from .report import Report


@dataclass
class Bimodule:
    """A finite-dimensional module with an optional left and right action.

    ``left[b]`` / ``right[b]`` are the matrices of the ``b``-th basis element
    of the acting algebra.
    """

    dim: int
    left: list | None = None
    right: list | None = None
    labels: list = field(default_factory=list)

    def __post_init__(self):
        if not self.labels:
            self.labels = list(range(self.dim))

    def left_matrix(self, F: Field, a) -> list[list]:
        return _combine(F, self.left, a, self.dim)

    def right_matrix(self, F: Field, a) -> list[list]:
        return _combine(F, self.right, a, self.dim)


def _combine(F, mats, coeffs, n):
    out = linalg.zeros(F, n, n)
    for c, M in zip(coeffs, mats):
        if c:
            out = [[o + c * m for o, m in zip(orow, mrow)] for orow, mrow in zip(out, M)]
    return out


def validate_bimodule(F: Field, M: Bimodule, left_alg: AssocAlgebra | None, right_alg: AssocAlgebra | None,
                      name: str = "module") -> Report:
    rep = Report(name)
    eye = linalg.identity(F, M.dim)
    if left_alg is not None:
        bad = None
        for a, b in itertools.product(range(left_alg.dim), repeat=2):
            ab = left_alg.mul(left_alg.basis_vector(a), left_alg.basis_vector(b))
            if not linalg.mat_eq(M.left_matrix(F, ab), linalg.matmul(F, M.left[a], M.left[b], M.dim)):
                bad = (left_alg.basis[a], left_alg.basis[b])
                break
        rep.add("left action associative", bad is None, bad)
        rep.add("left unit", linalg.mat_eq(M.left_matrix(F, left_alg.unit), eye))
    if right_alg is not None:
        bad = None
        for a, b in itertools.product(range(right_alg.dim), repeat=2):
            ab = right_alg.mul(right_alg.basis_vector(a), right_alg.basis_vector(b))
            if not linalg.mat_eq(M.right_matrix(F, ab), linalg.matmul(F, M.right[b], M.right[a], M.dim)):
                bad = (right_alg.basis[a], right_alg.basis[b])
                break
        rep.add("right action associative", bad is None, bad)
        rep.add("right unit", linalg.mat_eq(M.right_matrix(F, right_alg.unit), eye))
    if left_alg is not None and right_alg is not None:
        bad = None
        for a, b in itertools.product(range(left_alg.dim), range(right_alg.dim)):
            lr = linalg.matmul(F, M.left[a], M.right[b], M.dim)
            rl = linalg.matmul(F, M.right[b], M.left[a], M.dim)
            if not linalg.mat_eq(lr, rl):
                bad = (left_alg.basis[a], right_alg.basis[b])
                break
        rep.add("actions commute", bad is None, bad)
    return rep


class BalancedTensor:
    """``M (x)_A N`` as a cokernel of ``M (x) N`` (index ``i * dim N + j``)."""

    def __init__(self, F: Field, M: Bimodule, A: AssocAlgebra, N: Bimodule):
        self.field = F
        self.M, self.A, self.N = M, A, N
        self.m, self.n = M.dim, N.dim
        rels = []
        for k in range(A.dim):
            R, L = M.right[k], N.left[k]
            for i in range(self.m):
                for j in range(self.n):
                    v = [F.zero] * (self.m * self.n)
                    for i2 in range(self.m):
                        c = R[i2][i]
                        if c:
                            v[i2 * self.n + j] = v[i2 * self.n + j] + c
                    for j2 in range(self.n):
                        c = L[j2][j]
                        if c:
                            v[i * self.n + j2] = v[i * self.n + j2] - c
                    if any(v):
                        rels.append(v)
        self.coker = Cokernel(F, self.m * self.n, rels)

    @property
    def dim(self) -> int:
        return self.coker.dim

    def pair(self, i: int) -> tuple[int, int]:
        """``(i_M, j_N)`` of the pure tensor representing basis element ``i``."""
        return divmod(self.coker.kept[i], self.n)

    def project(self, v) -> list:
        return self.coker.project(v)

    def project_pure(self, u, w) -> list:
        v = [a * b for a in u for b in w]
        return self.coker.project(v)

    def projection_matrix(self) -> list[list]:
        return self.coker.projection_matrix()

    def left_action(self) -> list[list[list]]:
        """Matrices of ``M``'s left action transported to the tensor product."""
        return [self._transport(lambda i, j, L=L: ([row[i] for row in L], True, j)) for L in self.M.left]

    def right_action(self) -> list[list[list]]:
        """Matrices of ``N``'s right action transported to the tensor product."""
        return [self._transport(lambda i, j, R=R: ([row[j] for row in R], False, i)) for R in self.N.right]

    def _transport(self, act):
        F = self.field
        cols = []
        for t in range(self.dim):
            i, j = self.pair(t)
            vec, on_left, other = act(i, j)
            if on_left:
                full = [F.zero] * (self.m * self.n)
                for i2, c in enumerate(vec):
                    if c:
                        full[i2 * self.n + other] = c
            else:
                full = [F.zero] * (self.m * self.n)
                for j2, c in enumerate(vec):
                    if c:
                        full[other * self.n + j2] = c
            cols.append(self.project(full))
        return linalg.transpose(cols, self.dim) if cols else []


def tensor_over_algebra(F: Field, M: Bimodule, A: AssocAlgebra, N: Bimodule, check: bool = True) -> BalancedTensor:
    """``M (x)_A N`` for a right ``A``-module ``M`` and a left ``A``-module ``N``."""
    if check:
        validate_bimodule(F, M, None, A, "right module").raise_if_failed(ActionAxiomViolation)
        validate_bimodule(F, N, A, None, "left module").raise_if_failed(ActionAxiomViolation)
    return BalancedTensor(F, M, A, N)


@dataclass
class ObjectContext:
    """Morita data at one object ``x`` with ``A = End(x)``.

    ``phi[(q, p)]``: coordinates of ``phi(q (x) p)`` in ``A``;
    ``psi[(p, q)]``: coordinates of ``psi(p (x) q)`` in ``B``.
    """

    B: AssocAlgebra
    P: Bimodule      # left B, right A
    Q: Bimodule      # left A, right B
    phi: dict
    psi: dict


def validate_context(C: KCategory, ctx: dict) -> Report:
    """Bimodule axioms, bimodule/balance properties of both pairings, and
    bijectivity of the induced maps on balanced tensor products, per object."""
    F = C.field
    rep = Report("Morita context")
    for x in C.objects:
        c = ctx[x]
        A = endomorphism_algebra(C, x)
        B = c.B
        p, q = c.P.dim, c.Q.dim
        rep.extend(validate_algebra(B), f"{x}: B ")
        rep.extend(validate_bimodule(F, c.P, B, A, "P"), f"{x}: P ")
        rep.extend(validate_bimodule(F, c.Q, A, B, "Q"), f"{x}: Q ")
        if not rep.ok:
            continue

        def phi(qv, pv):
            out = [F.zero] * A.dim
            for (i, j), val in c.phi.items():
                s = qv[i] * pv[j]
                if s:
                    out = [o + s * v for o, v in zip(out, val)]
            return out

        def psi(pv, qv):
            out = [F.zero] * B.dim
            for (i, j), val in c.psi.items():
                s = pv[i] * qv[j]
                if s:
                    out = [o + s * v for o, v in zip(out, val)]
            return out

        eq = [linalg.unit_vector(F, q, i) for i in range(q)]
        ep = [linalg.unit_vector(F, p, i) for i in range(p)]
        bad = None
        for i, j in itertools.product(range(q), range(p)):
            for a in range(A.dim):
                av = A.basis_vector(a)
                if phi(linalg.matvec(F, c.Q.left[a], eq[i]), ep[j]) != A.mul(av, phi(eq[i], ep[j])):
                    bad = ("left", i, j, A.basis[a])
                elif phi(eq[i], linalg.matvec(F, c.P.right[a], ep[j])) != A.mul(phi(eq[i], ep[j]), av):
                    bad = ("right", i, j, A.basis[a])
                if bad:
                    break
            for b in range(B.dim):
                if bad:
                    break
                if phi(linalg.matvec(F, c.Q.right[b], eq[i]), ep[j]) != phi(eq[i], linalg.matvec(F, c.P.left[b], ep[j])):
                    bad = ("balanced", i, j, B.basis[b])
            if bad:
                break
        rep.add(f"{x}: phi is a balanced A-bimodule map", bad is None, bad)

        bad = None
        for i, j in itertools.product(range(p), range(q)):
            for b in range(B.dim):
                bv = B.basis_vector(b)
                if psi(linalg.matvec(F, c.P.left[b], ep[i]), eq[j]) != B.mul(bv, psi(ep[i], eq[j])):
                    bad = ("left", i, j, B.basis[b])
                elif psi(ep[i], linalg.matvec(F, c.Q.right[b], eq[j])) != B.mul(psi(ep[i], eq[j]), bv):
                    bad = ("right", i, j, B.basis[b])
                if bad:
                    break
            for a in range(A.dim):
                if bad:
                    break
                if psi(linalg.matvec(F, c.P.right[a], ep[i]), eq[j]) != psi(ep[i], linalg.matvec(F, c.Q.left[a], eq[j])):
                    bad = ("balanced", i, j, A.basis[a])
            if bad:
                break
        rep.add(f"{x}: psi is a balanced B-bimodule map", bad is None, bad)

        qp = BalancedTensor(F, c.Q, B, c.P)
        cols = []
        for t in range(qp.dim):
            i, j = qp.pair(t)
            cols.append(phi(eq[i], ep[j]))
        ok = qp.dim == A.dim and (A.dim == 0 or linalg.rank(F, linalg.transpose(cols, A.dim)) == A.dim)
        rep.add(f"{x}: Q (x)_B P -> A bijective", ok, None if ok else (qp.dim, A.dim))

        pq = BalancedTensor(F, c.P, A, c.Q)
        cols = []
        for t in range(pq.dim):
            i, j = pq.pair(t)
            cols.append(psi(ep[i], eq[j]))
        ok = pq.dim == B.dim and (B.dim == 0 or linalg.rank(F, linalg.transpose(cols, B.dim)) == B.dim)
        rep.add(f"{x}: P (x)_A Q -> B bijective", ok, None if ok else (pq.dim, B.dim))
    return rep


def _hom_bimodule(C: KCategory, x, y) -> Bimodule:
    """``hom(x, y)`` as an ``End(y)``-``End(x)`` bimodule."""
    left = [C.left_matrix(x, y, y, C.basis_vector(y, y, a)) for a in range(C.dim(y, y))]
    right = [C.right_matrix(x, x, y, C.basis_vector(x, x, a)) for a in range(C.dim(x, x))]
    return Bimodule(C.dim(x, y), left, right, list(C.hom(x, y)))


def morita_rebase(C: KCategory, ctx: dict, check: bool = True) -> KCategory:
    """Replace every hom by ``P_y (x)_{A_y} hom(x, y) (x)_{A_x} Q_x``.

    The tensor is computed in two balanced steps; canonical basis elements are
    pure tensors labelled ``(p, f, q)``.  Composition:
    ``(p (x) g (x) q)(p' (x) f (x) q') = p (x) g phi(q (x) p') f (x) q'``.
    """
    F = C.field
    if check:
        rep = validate_context(C, ctx)
        bad = rep.first_failure()
        if bad is not None:
            raise InvalidContext(f"invalid Morita context: {bad.name}", report=rep, witness=bad.witness)
    A = {x: endomorphism_algebra(C, x) for x in C.objects}
    inner, outer = {}, {}
    for x in C.objects:
        for y in C.objects:
            T1 = BalancedTensor(F, ctx[y].P, A[y], _hom_bimodule(C, x, y))
            mid = Bimodule(T1.dim, None, T1.right_action())
            inner[(x, y)] = T1
            outer[(x, y)] = BalancedTensor(F, mid, A[x], ctx[x].Q)

    def triple(x, y, t):
        """``(p, f, q)`` indices of the ``t``-th basis element of ``hom_D(x, y)``."""
        u, q = outer[(x, y)].pair(t)
        p, f = inner[(x, y)].pair(u)
        return p, f, q

    homs = {}
    for (x, y), T in outer.items():
        homs[(x, y)] = []
        for t in range(T.dim):
            p, f, q = triple(x, y, t)
            homs[(x, y)].append((ctx[y].P.labels[p], C.hom(x, y)[f], ctx[x].Q.labels[q]))

    def project(x, z, p, w, q):
        T1, T = inner[(x, z)], outer[(x, z)]
        pv = linalg.unit_vector(F, ctx[z].P.dim, p)
        u = T1.project_pure(pv, w)
        return T.project_pure(u, linalg.unit_vector(F, ctx[x].Q.dim, q))

    def rule(x, y, z, i, j):
        p, g, q = triple(y, z, i)
        p2, f, q2 = triple(x, y, j)
        a = ctx[y].phi.get((q, p2))
        if a is None or not any(a):
            return [F.zero] * outer[(x, z)].dim
        af = C.compose(x, y, y, a, C.basis_vector(x, y, f))
        w = C.compose(x, y, z, C.basis_vector(y, z, g), af)
        return project(x, z, p, w, q2)

    ids = {}
    for x in C.objects:
        T = outer[(x, x)]
        c = ctx[x]
        cols = []
        for t in range(T.dim):
            p, a, q = triple(x, x, t)
            pa = [row[p] for row in _combine(F, c.P.right, A[x].basis_vector(a), c.P.dim)]
            out = [F.zero] * c.B.dim
            for i, s in enumerate(pa):
                if s and (i, q) in c.psi:
                    out = [o + s * v for o, v in zip(out, c.psi[(i, q)])]
            cols.append(out)
        Psi = linalg.transpose(cols, c.B.dim) if cols else []
        sol = linalg.solve(F, Psi, c.B.unit, T.dim) if c.B.dim else []
        if sol is None:
            raise InvalidContext(f"identity of {x!r} has no preimage")
        ids[x] = sol
    return KCategory.from_rule(F, C.objects, homs, rule, ids, name=f"D({C.name})")


# -- standard contexts -------------------------------------------------------


def identity_context(C: KCategory) -> dict:
    """``B = A``, ``P = Q = A`` with multiplication as both pairings."""
    ctx = {}
    for x in C.objects:
        A = endomorphism_algebra(C, x)
        d = A.dim
        L = [A.left_matrix(A.basis_vector(a)) for a in range(d)]
        R = [A.right_matrix(A.basis_vector(a)) for a in range(d)]
        mod = Bimodule(d, L, R, list(A.basis))
        pairing = {(i, j): A.mul(A.basis_vector(i), A.basis_vector(j)) for i in range(d) for j in range(d)}
        ctx[x] = ObjectContext(A, mod, Bimodule(d, L, R, list(A.basis)), pairing, dict(pairing))
    return ctx


def matrix_algebra(A: AssocAlgebra, n: int) -> AssocAlgebra:
    """``M_n(A)`` with basis ``(a, f, b)``: ``f`` in row ``a``, column ``b``."""
    F = A.field
    d = A.dim
    basis = [(a, f, b) for a in range(n) for f in A.basis for b in range(n)]
    mult = {}
    for a, fi, b in itertools.product(range(n), range(d), range(n)):
        i = (a * d + fi) * n + b
        for c in range(n):
            for gi in range(d):
                j = (b * d + gi) * n + c
                prod = A.mul(A.basis_vector(fi), A.basis_vector(gi))
                out = {(a * d + k) * n + c: v for k, v in enumerate(prod) if v}
                if out:
                    mult[(i, j)] = out
    unit = [F.zero] * len(basis)
    for a in range(n):
        for k, v in enumerate(A.unit):
            unit[(a * d + k) * n + a] = v
    return AssocAlgebra(F, basis, mult, unit, name=f"M{n}({A.name})")


def matrix_context(C: KCategory, n: int) -> dict:
    """``B = M_n(A)``, ``P`` = first column, ``Q`` = first row."""
    F = C.field
    ctx = {}
    for x in C.objects:
        A = endomorphism_algebra(C, x)
        d = A.dim
        B = matrix_algebra(A, n)
        nb = B.dim
        # P basis (a, p) ~ p E_{a,0}; Q basis (b, q) ~ q E_{0,b}
        pdim = n * d
        P_left, Q_right = [], []
        for bi in range(nb):
            r, hk, c = bi // (d * n), (bi // n) % d, bi % n
            h = A.basis_vector(hk)
            M = linalg.zeros(F, pdim, pdim)
            for a in range(n):
                if a != c:
                    continue
                for pk in range(d):
                    prod = A.mul(h, A.basis_vector(pk))
                    for k, v in enumerate(prod):
                        if v:
                            M[r * d + k][a * d + pk] = v
            P_left.append(M)
            M = linalg.zeros(F, pdim, pdim)
            for b in range(n):
                if b != r:
                    continue
                for qk in range(d):
                    prod = A.mul(A.basis_vector(qk), h)
                    for k, v in enumerate(prod):
                        if v:
                            M[c * d + k][b * d + qk] = v
            Q_right.append(M)
        P_right, Q_left = [], []
        for ak in range(d):
            av = A.basis_vector(ak)
            M = linalg.zeros(F, pdim, pdim)
            N = linalg.zeros(F, pdim, pdim)
            for a in range(n):
                for k in range(d):
                    for t, v in enumerate(A.mul(A.basis_vector(k), av)):
                        if v:
                            M[a * d + t][a * d + k] = v
                    for t, v in enumerate(A.mul(av, A.basis_vector(k))):
                        if v:
                            N[a * d + t][a * d + k] = v
            P_right.append(M)
            Q_left.append(N)
        labels = [(a, f) for a in range(n) for f in A.basis]
        P = Bimodule(pdim, P_left, P_right, labels)
        Q = Bimodule(pdim, Q_left, Q_right, list(labels))
        phi, psi = {}, {}
        for b, qk, a, pk in itertools.product(range(n), range(d), range(n), range(d)):
            prod = A.mul(A.basis_vector(qk), A.basis_vector(pk))
            if b == a:
                phi[(b * d + qk, a * d + pk)] = prod
            out = [F.zero] * nb
            for k, v in enumerate(A.mul(A.basis_vector(pk), A.basis_vector(qk))):
                out[(a * d + k) * n + b] = v
            psi[(a * d + pk, b * d + qk)] = out
        ctx[x] = ObjectContext(B, P, Q, phi, psi)
    return ctx
