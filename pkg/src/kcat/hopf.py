"""Finite groups (by Cayley table) and finite-dimensional Hopf algebras."""

from __future__ import annotations

import itertools

from .category import AssocAlgebra
from .errors import AxiomViolation, MalformedInput
from .field import Field
from .linalg import matvec
from .report import Report


class FiniteGroup:
    """A finite group given by its elements and a row-major Cayley table.

    ``table[i][j]`` is the index of ``elements[i] * elements[j]``.
    """

    def __init__(self, elements, table, name: str = ""):
        self.elements = tuple(elements)
        self.name = name
        n = len(self.elements)
        if n == 0 or len(set(self.elements)) != n:
            raise MalformedInput("group elements must be nonempty and distinct")
        self._idx = {g: i for i, g in enumerate(self.elements)}
        rows = []
        for row in table:
            if len(row) != n:
                raise MalformedInput("Cayley table row has the wrong length")
            rows.append([self._coerce_index(v) for v in row])
        if len(rows) != n:
            raise MalformedInput("Cayley table has the wrong number of rows")
        self.table = rows
        self.identity = self._find_identity()
        self._inv = self._find_inverses()

    def _coerce_index(self, v) -> int:
        if v in self._idx:
            return self._idx[v]
        if isinstance(v, int) and 0 <= v < len(self.elements):
            return v
        raise MalformedInput(f"Cayley table entry {v!r} is not a group element")

    def _find_identity(self):
        n = len(self.elements)
        for e in range(n):
            if all(self.table[e][i] == i and self.table[i][e] == i for i in range(n)):
                return self.elements[e]
        return None

    def _find_inverses(self):
        if self.identity is None:
            return None
        e = self._idx[self.identity]
        inv = {}
        for i, g in enumerate(self.elements):
            for j in range(len(self.elements)):
                if self.table[i][j] == e and self.table[j][i] == e:
                    inv[g] = self.elements[j]
                    break
        return inv if len(inv) == len(self.elements) else None

    # -- constructors ---------------------------------------------------

    @classmethod
    def cyclic(cls, n: int, gen: str = "t") -> FiniteGroup:
        names = ["1"] + [gen if k == 1 else f"{gen}^{k}" for k in range(1, n)]
        table = [[(i + j) % n for j in range(n)] for i in range(n)]
        return cls(names, table, name=f"C{n}")

    @classmethod
    def trivial(cls) -> FiniteGroup:
        return cls(["1"], [[0]], name="C1")

    @classmethod
    def symmetric3(cls) -> FiniteGroup:
        perms = sorted(itertools.permutations(range(3)))
        names = ["".join(map(str, p)) for p in perms]
        # (p*q)(i) = p(q(i))
        index = {p: i for i, p in enumerate(perms)}
        table = [[index[tuple(p[q[i]] for i in range(3))] for q in perms] for p in perms]
        return cls(names, table, name="S3")

    # -- arithmetic -----------------------------------------------------

    @property
    def order(self) -> int:
        return len(self.elements)

    def index(self, g) -> int:
        return self._idx[g]

    def mul(self, a, b):
        return self.elements[self.table[self._idx[a]][self._idx[b]]]

    def inv(self, a):
        return self._inv[a]

    def prod(self, *gs):
        out = self.identity
        for g in gs:
            out = self.mul(out, g)
        return out

    def __contains__(self, g):
        return g in self._idx

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)

    def __repr__(self):
        return f"<FiniteGroup {self.name} of order {self.order}>"


def validate_group(G: FiniteGroup) -> Report:
    rep = Report(f"group {G.name}".strip())
    n = G.order
    bad = None
    for i, j, k in itertools.product(range(n), repeat=3):
        if G.table[G.table[i][j]][k] != G.table[i][G.table[j][k]]:
            bad = (G.elements[i], G.elements[j], G.elements[k])
            break
    rep.add("associativity", bad is None, bad)
    rep.add("identity", G.identity is not None)
    rep.add("inverses", G._inv is not None)
    return rep


class HopfAlgebra(AssocAlgebra):
    """Hopf algebra by structure constants.

    ``comult[b]`` maps pairs ``(i, j)`` to the coefficient of ``b_i (x) b_j``
    in ``Delta(b)``; ``counit[b]`` is ``eps(b)``; ``antipode`` is a matrix
    acting on coordinate columns.
    """

    def __init__(self, field: Field, basis, mult, unit, comult, counit, antipode, name=""):
        super().__init__(field, basis, mult, unit, name=name)
        n = self.dim
        self.comult = {b: {ij: c for ij, c in comult.get(b, {}).items() if c} for b in range(n)}
        self.counit = list(counit)
        self.antipode = [list(r) for r in antipode]
        if len(self.counit) != n:
            raise MalformedInput("counit has the wrong length")
        if len(self.antipode) != n or any(len(r) != n for r in self.antipode):
            raise MalformedInput("antipode must be a square matrix")
        for b, d in self.comult.items():
            for i, j in d:
                if not (0 <= i < n and 0 <= j < n):
                    raise MalformedInput(f"comultiplication index out of range for {basis[b]!r}")
        for (i, j), col in self.mult.items():
            if not (0 <= i < n and 0 <= j < n) or any(not 0 <= k < n for k in col):
                raise MalformedInput("multiplication index out of range")

    def delta(self, v) -> dict:
        """``Delta(v)`` as a sparse dict on index pairs."""
        out = {}
        for b, c in enumerate(v):
            if not c:
                continue
            for ij, d in self.comult[b].items():
                out[ij] = out.get(ij, self.field.zero) + c * d
        return {k: c for k, c in out.items() if c}

    def eps(self, v):
        acc = self.field.zero
        for c, e in zip(v, self.counit):
            if c and e:
                acc = acc + c * e
        return acc

    def S(self, v) -> list:
        return matvec(self.field, self.antipode, v)

    def group_element(self, g) -> int:
        """Basis index of a group element (``kG``) or of ``delta_g`` (``k^G``)."""
        return self.basis.index(g)


# -- tensor helpers on sparse dicts keyed by index tuples ----------------


def _tensor_mul(H: HopfAlgebra, u: dict, v: dict) -> dict:
    """Product in ``H (x) H`` of sparse tensors keyed by ``(i, j)``."""
    out = {}
    for (a, b), c in u.items():
        for (a2, b2), d in v.items():
            x = H.mul(H.basis_vector(a), H.basis_vector(a2))
            y = H.mul(H.basis_vector(b), H.basis_vector(b2))
            for i, xi in enumerate(x):
                if not xi:
                    continue
                for j, yj in enumerate(y):
                    if yj:
                        out[(i, j)] = out.get((i, j), H.field.zero) + c * d * xi * yj
    return {k: c for k, c in out.items() if c}


def validate_hopf(H: HopfAlgebra) -> Report:
    """Algebra, coalgebra, bialgebra and antipode axioms, each reported separately."""
    F = H.field
    n = H.dim
    rep = Report(f"hopf {H.name}".strip())
    e = [H.basis_vector(i) for i in range(n)]

    bad = None
    for i, j, k in itertools.product(range(n), repeat=3):
        if H.mul(H.mul(e[i], e[j]), e[k]) != H.mul(e[i], H.mul(e[j], e[k])):
            bad = (H.basis[i], H.basis[j], H.basis[k])
            break
    rep.add("associativity", bad is None, bad)

    bad = None
    for i in range(n):
        if H.mul(H.unit, e[i]) != e[i] or H.mul(e[i], H.unit) != e[i]:
            bad = H.basis[i]
            break
    rep.add("unit", bad is None, bad)

    bad = None
    for b in range(n):
        d = H.comult[b]
        left, right = {}, {}
        for (i, j), c in d.items():
            for (a1, a2), c2 in H.delta(e[i]).items():
                key = (a1, a2, j)
                left[key] = left.get(key, F.zero) + c * c2
            for (a1, a2), c2 in H.delta(e[j]).items():
                key = (i, a1, a2)
                right[key] = right.get(key, F.zero) + c * c2
        left = {k: v for k, v in left.items() if v}
        right = {k: v for k, v in right.items() if v}
        if left != right:
            bad = H.basis[b]
            break
    rep.add("coassociativity", bad is None, bad)

    bad = None
    for b in range(n):
        lhs = [F.zero] * n
        rhs = [F.zero] * n
        for (i, j), c in H.comult[b].items():
            lhs[j] = lhs[j] + c * H.counit[i]
            rhs[i] = rhs[i] + c * H.counit[j]
        if lhs != e[b] or rhs != e[b]:
            bad = H.basis[b]
            break
    rep.add("counit", bad is None, bad)

    bad = None
    for i, j in itertools.product(range(n), repeat=2):
        if H.delta(H.mul(e[i], e[j])) != _tensor_mul(H, H.comult[i], H.comult[j]):
            bad = (H.basis[i], H.basis[j])
            break
    if bad is None:
        unit_sq = {}
        for a, ca in enumerate(H.unit):
            for b, cb in enumerate(H.unit):
                if ca and cb:
                    unit_sq[(a, b)] = ca * cb
        if H.delta(H.unit) != unit_sq:
            bad = "1"
    rep.add("comultiplication is multiplicative", bad is None, bad)

    bad = None
    for i, j in itertools.product(range(n), repeat=2):
        if H.eps(H.mul(e[i], e[j])) != H.counit[i] * H.counit[j]:
            bad = (H.basis[i], H.basis[j])
            break
    if bad is None and H.eps(H.unit) != F.one:
        bad = "1"
    rep.add("counit is multiplicative", bad is None, bad)

    bad = None
    for b in range(n):
        want = [H.counit[b] * u for u in H.unit]
        lhs = [F.zero] * n
        rhs = [F.zero] * n
        for (i, j), c in H.comult[b].items():
            lhs = [a + c * x for a, x in zip(lhs, H.mul(H.S(e[i]), e[j]))]
            rhs = [a + c * x for a, x in zip(rhs, H.mul(e[i], H.S(e[j])))]
        if lhs != want or rhs != want:
            bad = H.basis[b]
            break
    rep.add("antipode", bad is None, bad)
    return rep


def require_hopf(H: HopfAlgebra) -> HopfAlgebra:
    validate_hopf(H).raise_if_failed(AxiomViolation)
    return H


# -- the two built-in Hopf algebras of a finite group --------------------


def group_algebra(G: FiniteGroup, field: Field) -> HopfAlgebra:
    """``kG``: basis the group elements, ``Delta(g) = g (x) g``, ``S(g) = g^-1``."""
    n = G.order
    one = field.one
    mult = {(i, j): {G.table[i][j]: one} for i in range(n) for j in range(n)}
    unit = [field.zero] * n
    unit[G.index(G.identity)] = one
    comult = {i: {(i, i): one} for i in range(n)}
    counit = [one] * n
    antipode = [[field.zero] * n for _ in range(n)]
    for i, g in enumerate(G.elements):
        antipode[G.index(G.inv(g))][i] = one
    return HopfAlgebra(field, G.elements, mult, unit, comult, counit, antipode, name=f"k{G.name}")


def function_algebra(G: FiniteGroup, field: Field) -> HopfAlgebra:
    """``k^G``: basis ``delta_g`` (labelled by ``g``), pointwise product,
    ``Delta(delta_g) = sum_{ab=g} delta_a (x) delta_b``."""
    n = G.order
    one = field.one
    mult = {(i, i): {i: one} for i in range(n)}
    unit = [one] * n
    comult = {i: {} for i in range(n)}
    for a in range(n):
        for b in range(n):
            comult[G.table[a][b]][(a, b)] = one
    counit = [field.zero] * n
    counit[G.index(G.identity)] = one
    antipode = [[field.zero] * n for _ in range(n)]
    for i, g in enumerate(G.elements):
        antipode[G.index(G.inv(g))][i] = one
    return HopfAlgebra(field, G.elements, mult, unit, comult, counit, antipode, name=f"k^{G.name}")


def trivial_hopf(field: Field) -> HopfAlgebra:
    return group_algebra(FiniteGroup.trivial(), field)


def duality_pairing_check(G: FiniteGroup, field: Field) -> Report:
    """``<g, delta_h> = [g = h]`` intertwines the product of one algebra with
    the coproduct of the other, in both directions."""
    kG, kG_dual = group_algebra(G, field), function_algebra(G, field)
    n = G.order
    rep = Report(f"duality k{G.name} / k^{G.name}")

    def pair(u, v):
        return sum((a * b for a, b in zip(u, v)), field.zero)

    bad = None
    for i, j, h in itertools.product(range(n), repeat=3):
        # <g_i g_j, delta_h> = sum <g_i, d_a><g_j, d_b> over Delta(delta_h)
        lhs = pair(kG.mul(kG.basis_vector(i), kG.basis_vector(j)), kG_dual.basis_vector(h))
        rhs = sum((c for (a, b), c in kG_dual.comult[h].items() if a == i and b == j), field.zero)
        if lhs != rhs:
            bad = (G.elements[i], G.elements[j], G.elements[h])
            break
    rep.add("kG product vs k^G coproduct", bad is None, bad)
    bad = None
    for i, a, b in itertools.product(range(n), repeat=3):
        lhs = pair(kG.basis_vector(i), kG_dual.mul(kG_dual.basis_vector(a), kG_dual.basis_vector(b)))
        rhs = sum((c for (p, q), c in kG.comult[i].items() if p == a and q == b), field.zero)
        if lhs != rhs:
            bad = (G.elements[i], G.elements[a], G.elements[b])
            break
    rep.add("k^G product vs kG coproduct", bad is None, bad)
    return rep
