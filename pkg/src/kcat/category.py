"""Finite k-linear categories given by structure constants.

A :class:`KCategory` has an ordered object list, an ordered basis for every
hom space ``hom(x, y)`` (morphisms *from* ``x`` *to* ``y``), sparse
composition structure constants and identity coordinates.  Compositions are
indexed source-first: ``comp[(x, y, z)][(i, j)]`` is the sparse vector of
``g_i o f_j`` in ``hom(x, z)`` for ``g_i`` in ``hom(y, z)`` and ``f_j`` in
``hom(x, y)``.  Missing entries are zero.
"""

from __future__ import annotations

from .errors import AxiomViolation, MalformedInput
from .field import Field
from .report import Report


class KCategory:
    def __init__(self, field: Field, objects, homs, comp, identities, name: str = ""):
        self.field = field
        self.objects = tuple(objects)
        self.homs = {k: tuple(v) for k, v in homs.items()}
        self.comp = comp
        self.identities = {x: list(v) for x, v in identities.items()}
        self.name = name
        self._index = {x: i for i, x in enumerate(self.objects)}
        self._check_shape()

    # -- construction helpers -------------------------------------------

    @classmethod
    def from_rule(cls, field, objects, homs, rule, identities, name=""):
        """Materialise a category from ``rule(x, y, z, i, j) -> dense vector``."""
        objects = tuple(objects)
        comp = {}
        for x in objects:
            for y in objects:
                nf = len(homs[(x, y)])
                if not nf:
                    continue
                for z in objects:
                    ng = len(homs[(y, z)])
                    table = {}
                    for i in range(ng):
                        for j in range(nf):
                            vec = rule(x, y, z, i, j)
                            sparse = {k: c for k, c in enumerate(vec) if c}
                            if sparse:
                                table[(i, j)] = sparse
                    if table:
                        comp[(x, y, z)] = table
        return cls(field, objects, homs, comp, identities, name=name)

    def _check_shape(self):
        objs = set(self.objects)
        if len(objs) != len(self.objects):
            raise MalformedInput("duplicate object ids")
        for x in self.objects:
            for y in self.objects:
                if (x, y) not in self.homs:
                    raise MalformedInput(f"missing hom space {x!r}->{y!r}")
        for (x, y) in self.homs:
            if x not in objs or y not in objs:
                raise MalformedInput(f"hom {x!r}->{y!r} references an unknown object")
            labels = self.homs[(x, y)]
            if len(set(labels)) != len(labels):
                raise MalformedInput(f"duplicate basis labels in {x!r}->{y!r}")
        for x in self.objects:
            if x not in self.identities:
                raise MalformedInput(f"no identity for object {x!r}")
            if len(self.identities[x]) != self.dim(x, x):
                raise MalformedInput(
                    f"identity of {x!r} has length {len(self.identities[x])}, "
                    f"expected {self.dim(x, x)}"
                )
        for (x, y, z), table in self.comp.items():
            if x not in objs or y not in objs or z not in objs:
                raise MalformedInput(f"composition {x!r}->{y!r}->{z!r} references an unknown object")
            ng, nf, nh = self.dim(y, z), self.dim(x, y), self.dim(x, z)
            for (i, j), out in table.items():
                if not (0 <= i < ng and 0 <= j < nf):
                    raise MalformedInput(f"composition index ({i},{j}) out of range at {x!r}->{y!r}->{z!r}")
                for k in out:
                    if not 0 <= k < nh:
                        raise MalformedInput(f"output index {k} out of range in {x!r}->{z!r}")

    # -- accessors ------------------------------------------------------

    def hom(self, x, y) -> tuple:
        return self.homs[(x, y)]

    def dim(self, x, y) -> int:
        return len(self.homs[(x, y)])

    def index(self, x) -> int:
        return self._index[x]

    def label_index(self, x, y, label) -> int:
        try:
            return self.homs[(x, y)].index(label)
        except ValueError:
            raise MalformedInput(f"label {label!r} not in {x!r}->{y!r}") from None

    def zero(self, x, y) -> list:
        return [self.field.zero] * self.dim(x, y)

    def basis_vector(self, x, y, i) -> list:
        v = self.zero(x, y)
        v[i] = self.field.one
        return v

    def identity(self, x) -> list:
        return list(self.identities[x])

    def compose_basis(self, x, y, z, i, j) -> list:
        """Coordinates of ``g_i o f_j`` with ``g_i: y -> z`` and ``f_j: x -> y``."""
        out = self.zero(x, z)
        table = self.comp.get((x, y, z))
        if table:
            for k, c in table.get((i, j), {}).items():
                out[k] = c
        return out

    def compose(self, x, y, z, g, f) -> list:
        """Compose coordinate vectors ``g`` in ``hom(y, z)`` and ``f`` in ``hom(x, y)``."""
        out = self.zero(x, z)
        table = self.comp.get((x, y, z))
        if not table:
            return out
        for (i, j), col in table.items():
            a = g[i]
            if not a:
                continue
            b = f[j]
            if not b:
                continue
            ab = a * b
            for k, c in col.items():
                out[k] = out[k] + ab * c
        return out

    def left_matrix(self, x, y, z, g) -> list[list]:
        """Matrix of ``f |-> g o f`` from ``hom(x, y)`` to ``hom(x, z)``."""
        nf, nh = self.dim(x, y), self.dim(x, z)
        cols = [self.compose(x, y, z, g, self.basis_vector(x, y, j)) for j in range(nf)]
        return [[cols[j][k] for j in range(nf)] for k in range(nh)]

    def right_matrix(self, x, y, z, f) -> list[list]:
        """Matrix of ``g |-> g o f`` from ``hom(y, z)`` to ``hom(x, z)``."""
        ng, nh = self.dim(y, z), self.dim(x, z)
        cols = [self.compose(x, y, z, self.basis_vector(y, z, i), f) for i in range(ng)]
        return [[cols[i][k] for i in range(ng)] for k in range(nh)]

    def total_dim(self) -> int:
        return sum(len(v) for v in self.homs.values())

    def hom_dims(self) -> dict:
        return {(x, y): self.dim(x, y) for x in self.objects for y in self.objects}

    def structure_equal(self, other: KCategory, labels: bool = True) -> bool:
        """Equal objects, identities and structure constants; basis labels are
        compared too unless ``labels`` is false (then only hom dimensions)."""
        if self.field != other.field or self.objects != other.objects:
            return False
        if labels and self.homs != other.homs:
            return False
        if self.hom_dims() != other.hom_dims():
            return False
        if any(self.identities[x] != other.identities[x] for x in self.objects):
            return False
        return _nonzero_comp(self.comp) == _nonzero_comp(other.comp)

    def relabel(self, objects_map=None, label_map=None, name=None) -> KCategory:
        """Rename objects and/or basis labels without touching structure."""
        om = objects_map or (lambda x: x)
        lm = label_map or (lambda x, y, lab: lab)
        objects = [om(x) for x in self.objects]
        homs = {(om(x), om(y)): [lm(x, y, lab) for lab in labs] for (x, y), labs in self.homs.items()}
        comp = {(om(x), om(y), om(z)): t for (x, y, z), t in self.comp.items()}
        ids = {om(x): v for x, v in self.identities.items()}
        return KCategory(self.field, objects, homs, comp, ids, name=name if name is not None else self.name)

    def __repr__(self):
        return (
            f"<KCategory {self.name or ''} over {self.field}: {len(self.objects)} objects, "
            f"total dim {self.total_dim()}>"
        )


def _nonzero_comp(comp) -> dict:
    out = {}
    for key, table in comp.items():
        t = {}
        for ij, col in table.items():
            col = {k: c for k, c in col.items() if c}
            if col:
                t[ij] = col
        if t:
            out[key] = t
    return out


class AssocAlgebra:
    """A finite-dimensional algebra by multiplication structure constants.

    ``mult[(i, j)]`` is the sparse vector of ``b_i * b_j``.
    """

    def __init__(self, field: Field, basis, mult, unit, name: str = ""):
        self.field = field
        self.basis = tuple(basis)
        self.mult = {k: dict(v) for k, v in mult.items() if v}
        self.unit = list(unit)
        self.name = name
        if len(self.unit) != len(self.basis):
            raise MalformedInput("unit vector has the wrong length")

    @property
    def dim(self) -> int:
        return len(self.basis)

    def mul(self, a, b) -> list:
        out = [self.field.zero] * self.dim
        for (i, j), col in self.mult.items():
            x = a[i]
            if not x:
                continue
            y = b[j]
            if not y:
                continue
            xy = x * y
            for k, c in col.items():
                out[k] = out[k] + xy * c
        return out

    def basis_vector(self, i) -> list:
        v = [self.field.zero] * self.dim
        v[i] = self.field.one
        return v

    def left_matrix(self, a) -> list[list]:
        cols = [self.mul(a, self.basis_vector(j)) for j in range(self.dim)]
        return [[cols[j][k] for j in range(self.dim)] for k in range(self.dim)]

    def right_matrix(self, a) -> list[list]:
        cols = [self.mul(self.basis_vector(j), a) for j in range(self.dim)]
        return [[cols[j][k] for j in range(self.dim)] for k in range(self.dim)]

    def structure_equal(self, other: AssocAlgebra) -> bool:
        return (
            self.field == other.field
            and self.dim == other.dim
            and self.unit == other.unit
            and _nonzero_comp({0: self.mult}) == _nonzero_comp({0: other.mult})
        )

    def __repr__(self):
        return f"<AssocAlgebra {self.name} dim {self.dim} over {self.field}>"


# -- validation -----------------------------------------------------------


def validate_category(C: KCategory) -> Report:
    """Check unit laws per hom space and associativity per object quadruple.

    Each check records the first violating basis element or triple.
    """
    rep = Report(f"category {C.name}".strip())
    objs = C.objects
    for x in objs:
        for y in objs:
            bad = None
            for j in range(C.dim(x, y)):
                f = C.basis_vector(x, y, j)
                if C.compose(x, y, y, C.identity(y), f) != f:
                    bad = C.hom(x, y)[j]
                    break
            rep.add(f"left unit {x}->{y}", bad is None, bad)
            bad = None
            for j in range(C.dim(x, y)):
                f = C.basis_vector(x, y, j)
                if C.compose(x, x, y, f, C.identity(x)) != f:
                    bad = C.hom(x, y)[j]
                    break
            rep.add(f"right unit {x}->{y}", bad is None, bad)
    for w in objs:
        for x in objs:
            nf = C.dim(w, x)
            if not nf:
                for y in objs:
                    for z in objs:
                        rep.add(f"associativity {w}->{x}->{y}->{z}", True)
                continue
            for y in objs:
                ng = C.dim(x, y)
                gf = {}
                if ng:
                    for i in range(ng):
                        for j in range(nf):
                            gf[(i, j)] = C.compose_basis(w, x, y, i, j)
                for z in objs:
                    nh = C.dim(y, z)
                    witness = None
                    if ng and nh:
                        for a in range(nh):
                            hvec = C.basis_vector(y, z, a)
                            for i in range(ng):
                                hg = C.compose_basis(x, y, z, a, i)
                                for j in range(nf):
                                    lhs = C.compose(w, y, z, hvec, gf[(i, j)])
                                    rhs = C.compose(w, x, z, hg, C.basis_vector(w, x, j))
                                    if lhs != rhs:
                                        witness = (C.hom(y, z)[a], C.hom(x, y)[i], C.hom(w, x)[j])
                                        break
                                if witness:
                                    break
                            if witness:
                                break
                    rep.add(f"associativity {w}->{x}->{y}->{z}", witness is None, witness)
    return rep


def require_valid(C: KCategory) -> KCategory:
    validate_category(C).raise_if_failed(AxiomViolation)
    return C


def validate_algebra(A: AssocAlgebra) -> Report:
    rep = validate_category(category_of_algebra(A))
    rep.title = f"algebra {A.name}".strip()
    return rep


# -- algebra <-> category ------------------------------------------------


def assemble_algebra(C: KCategory) -> AssocAlgebra:
    """The matrix algebra a(C): all hom spaces summed, product by composition.

    Basis labels are ``(y, x, f)`` for ``f`` in ``hom(x, y)``, ordered by
    source ``x``, then target ``y``, then the declared basis order.
    """
    offsets = {}
    basis = []
    for x in C.objects:
        for y in C.objects:
            offsets[(x, y)] = len(basis)
            basis.extend((y, x, lab) for lab in C.hom(x, y))
    mult = {}
    for (x, y, z), table in C.comp.items():
        og, of, oh = offsets[(y, z)], offsets[(x, y)], offsets[(x, z)]
        for (i, j), col in table.items():
            out = {oh + k: c for k, c in col.items() if c}
            if out:
                mult[(og + i, of + j)] = out
    unit = [C.field.zero] * len(basis)
    for x in C.objects:
        o = offsets[(x, x)]
        for k, c in enumerate(C.identity(x)):
            unit[o + k] = c
    return AssocAlgebra(C.field, basis, mult, unit, name=f"a({C.name})" if C.name else "")


def algebra_offsets(C: KCategory) -> dict:
    """Offset of each hom block inside :func:`assemble_algebra`'s basis."""
    offsets, n = {}, 0
    for x in C.objects:
        for y in C.objects:
            offsets[(x, y)] = n
            n += C.dim(x, y)
    return offsets


def category_of_algebra(A: AssocAlgebra, obj="*") -> KCategory:
    """The one-object category whose endomorphism algebra is ``A``."""
    comp = {(obj, obj, obj): {ij: dict(col) for ij, col in A.mult.items()}} if A.mult else {}
    return KCategory(A.field, [obj], {(obj, obj): A.basis}, comp, {obj: A.unit}, name=A.name)


def endomorphism_algebra(C: KCategory, x) -> AssocAlgebra:
    table = C.comp.get((x, x, x), {})
    return AssocAlgebra(C.field, C.hom(x, x), table, C.identity(x), name=f"End({x})")


def full_subcategory(C: KCategory, objects, name="") -> KCategory:
    objects = list(objects)
    keep = set(objects)
    homs = {(x, y): C.hom(x, y) for x in objects for y in objects}
    comp = {k: t for k, t in C.comp.items() if set(k) <= keep}
    ids = {x: C.identity(x) for x in objects}
    return KCategory(C.field, objects, homs, comp, ids, name=name)


def isomorphism_obstruction(C: KCategory, D: KCategory) -> str | None:
    """A cheap invariant that rules out an isomorphism, or ``None``.

    Compares object counts, then the sorted multisets of endomorphism
    dimensions and of all hom dimensions.
    """
    if len(C.objects) != len(D.objects):
        return f"object counts differ ({len(C.objects)} vs {len(D.objects)})"
    ec = sorted(C.dim(x, x) for x in C.objects)
    ed = sorted(D.dim(x, x) for x in D.objects)
    if ec != ed:
        return f"endomorphism dimensions differ ({ec} vs {ed})"
    hc = sorted(C.hom_dims().values())
    hd = sorted(D.hom_dims().values())
    if hc != hd:
        return f"hom dimensions differ ({hc} vs {hd})"
    return None
