"""JSON readers and writers.

Structure files may refer to the category, group or Hopf algebra they sit on
either inline or by a path relative to the referring file.  Objects and labels
that are tuples are written as ``"(a,b)"``.  Scalars are strings: ``"a/b"`` or
integers, canonical ``0..p-1`` over a prime field.
"""

from __future__ import annotations

import functools
import json
from pathlib import Path

from .category import AssocAlgebra, KCategory
from .errors import ParseError
from .field import Field
from .functor import LinearFunctor
from .hopf import FiniteGroup, HopfAlgebra, function_algebra, group_algebra
from .modules import CatModule
from .morita import Bimodule, ObjectContext, identity_context, matrix_context
from .report import jsonable_key
from .structures import Grading, GroupAction, HModuleStructure


def name(x) -> str:
    """Canonical string form of an object or label."""
    return str(jsonable_key(x))


def hom_key(x, y) -> str:
    return f"{name(x)}->{name(y)}"


class Doc:
    """A parsed JSON document with its directory and a path for error messages."""

    def __init__(self, data, base: Path | None = None, path: str = "$"):
        self.data = data
        self.base = base or Path(".")
        self.path = path

    @classmethod
    def load(cls, file) -> Doc:
        p = Path(file)
        try:
            data = json.loads(p.read_text(encoding="utf-8"))
        except json.JSONDecodeError as exc:
            raise ParseError(f"{p}: invalid JSON ({exc.msg})", f"$:{exc.lineno}:{exc.colno}") from None
        return cls(data, p.parent, "$")

    def get(self, key, default=...):
        if not isinstance(self.data, dict):
            raise ParseError("expected an object", self.path)
        if key not in self.data:
            if default is ...:
                raise ParseError(f"missing key {key!r}", f"{self.path}.{key}")
            return default
        return self.data[key]

    def child(self, key) -> Doc:
        return Doc(self.get(key), self.base, f"{self.path}.{key}")

    def ref(self, key) -> Doc:
        """Follow ``key``: a relative path to another file, or an inline object."""
        v = self.get(key)
        if isinstance(v, str):
            try:
                return Doc.load(self.base / v)
            except OSError as exc:
                raise ParseError(f"cannot read {v!r}: {exc.strerror}",
                                 f"{self.path}.{key}") from None
        return Doc(v, self.base, f"{self.path}.{key}")

    def fail(self, msg, key=None):
        where = self.path if key is None else f"{self.path}.{key}"
        raise ParseError(msg, where)


def _guarded(fn):
    """Turn shape errors inside a loader into :class:`ParseError` at the document."""

    @functools.wraps(fn)
    def wrapper(doc, *args, **kwargs):
        try:
            return fn(doc, *args, **kwargs)
        except (AttributeError, TypeError, KeyError, ValueError, IndexError) as exc:
            raise ParseError(f"unexpected structure ({type(exc).__name__}: {exc})", doc.path) from None

    return wrapper


def _field(doc: Doc, override: Field | None) -> Field:
    if override is not None:
        return override
    spec = doc.get("field", "q")
    try:
        return Field.parse(spec)
    except ParseError:
        doc.fail(f"unrecognised field {spec!r}", "field")


def _scalar(F: Field, v, doc: Doc, where: str):
    try:
        return F.scalar(v)
    except (ParseError, ValueError, ZeroDivisionError, TypeError):
        raise ParseError(f"bad scalar {v!r}", f"{doc.path}.{where}") from None


def _matrix(F: Field, rows, doc: Doc, where: str) -> list[list]:
    if not isinstance(rows, list) or any(not isinstance(r, list) for r in rows):
        doc.fail("expected a matrix (list of rows)", where)
    return [[_scalar(F, v, doc, f"{where}[{i}][{j}]") for j, v in enumerate(r)] for i, r in enumerate(rows)]


def _split_hom(key: str, doc: Doc, where: str):
    if "->" not in key:
        doc.fail(f"hom key {key!r} is not of the form 'x->y'", where)
    x, y = key.rsplit("->", 1)
    return x, y


def _sparse(F: Field, pairs, index: dict, n: int, doc: Doc, where: str) -> list:
    """``[[label, scalar], ...]`` (or a bare label) to a dense vector."""
    out = [F.zero] * n
    if isinstance(pairs, str):
        pairs = [[pairs, "1"]]
    for t, item in enumerate(pairs):
        if not isinstance(item, list) or len(item) != 2:
            doc.fail("expected [label, scalar]", f"{where}[{t}]")
        lab, c = item
        if lab not in index:
            doc.fail(f"unknown basis label {lab!r}", f"{where}[{t}]")
        out[index[lab]] = out[index[lab]] + _scalar(F, c, doc, f"{where}[{t}][1]")
    return out


# -- categories ----------------------------------------------------------------


@_guarded
def category_from_doc(doc: Doc, field: Field | None = None) -> KCategory:
    F = _field(doc, field)
    raw = doc.get("objects")
    if not isinstance(raw, list):
        doc.fail("expected a list of objects", "objects")
    objects = [str(o) for o in raw]
    if len(set(objects)) != len(objects):
        doc.fail("duplicate objects", "objects")
    homs = {(x, y): [] for x in objects for y in objects}
    for key, labs in doc.get("homs").items():
        x, y = _split_hom(key, doc, f"homs.{key}")
        if (x, y) not in homs:
            doc.fail(f"unknown object in {key!r}", f"homs.{key}")
        if len(set(map(str, labs))) != len(labs):
            doc.fail("duplicate basis labels", f"homs.{key}")
        homs[(x, y)] = [str(v) for v in labs]
    index = {k: {lab: i for i, lab in enumerate(v)} for k, v in homs.items()}
    owners = {}
    for (x, y), labs in homs.items():
        for lab in labs:
            owners.setdefault(lab, []).append((x, y))

    comp = {}
    for t, entry in enumerate(doc.get("compose", [])):
        where = f"compose[{t}]"
        if not isinstance(entry, dict) or "g" not in entry or "f" not in entry:
            doc.fail("expected {g, f, out}", where)
        g, f = str(entry["g"]), str(entry["f"])
        if all(k in entry for k in ("x", "y", "z")):
            x, y, z = str(entry["x"]), str(entry["y"]), str(entry["z"])
        else:
            cands = [(fx, fy, gz) for (fx, fy) in owners.get(f, []) for (gy, gz) in owners.get(g, []) if fy == gy]
            if len(cands) != 1:
                doc.fail(f"cannot place {g!r} o {f!r}: give x, y, z explicitly", where)
            x, y, z = cands[0]
        for k, lab in (((y, z), g), ((x, y), f)):
            if k not in homs or lab not in index[k]:
                doc.fail(f"label {lab!r} is not in hom {k[0]}->{k[1]}", where)
        vec = _sparse(F, entry.get("out", []), index[(x, z)], len(homs[(x, z)]), doc, f"{where}.out")
        sparse = {i: c for i, c in enumerate(vec) if c}
        if sparse:
            comp.setdefault((x, y, z), {})[(index[(y, z)][g], index[(x, y)][f])] = sparse
    ids = {}
    idd = doc.get("identities")
    for x in objects:
        if x not in idd:
            doc.fail(f"no identity for {x!r}", "identities")
        ids[x] = _sparse(F, idd[x], index[(x, x)], len(homs[(x, x)]), doc, f"identities.{x}")
    return KCategory(F, objects, homs, comp, ids, name=doc.get("name", ""))


def category_to_dict(C: KCategory) -> dict:
    F = C.field
    homs = {hom_key(x, y): [name(v) for v in C.hom(x, y)] for x in C.objects for y in C.objects}
    compose = []
    for (x, y, z), table in sorted(C.comp.items(), key=lambda kv: tuple(C.index(o) for o in kv[0])):
        for (i, j) in sorted(table):
            out = [[name(C.hom(x, z)[k]), F.format(c)] for k, c in sorted(table[(i, j)].items())]
            compose.append({"x": name(x), "y": name(y), "z": name(z),
                            "g": name(C.hom(y, z)[i]), "f": name(C.hom(x, y)[j]), "out": out})
    ids = {name(x): [[name(C.hom(x, x)[k]), F.format(c)] for k, c in enumerate(C.identity(x)) if c] for x in C.objects}
    return {"field": F.spec(), "name": C.name, "objects": [name(x) for x in C.objects],
            "homs": homs, "compose": compose, "identities": ids}


def load_category(path, field: Field | None = None) -> KCategory:
    return category_from_doc(Doc.load(path), field)


def _compact(x, indent: int = 0) -> str:
    """JSON with lists of scalars (and short nested lists) kept on one line."""
    flat = json.dumps(x, ensure_ascii=False)
    if not isinstance(x, (dict, list)) or len(flat) + indent <= 88:
        return flat
    pad = " " * (indent + 2)
    if isinstance(x, dict):
        items = [f"{pad}{json.dumps(k, ensure_ascii=False)}: {_compact(v, indent + 2)}" for k, v in x.items()]
        return "{\n" + ",\n".join(items) + "\n" + " " * indent + "}"
    items = [pad + _compact(v, indent + 2) for v in x]
    return "[\n" + ",\n".join(items) + "\n" + " " * indent + "]"


def dump(obj: dict, path=None) -> str:
    text = _compact(obj) + "\n"
    if path is not None:
        Path(path).write_text(text, encoding="utf-8")
    return text


def stringify(C: KCategory) -> KCategory:
    """Re-tag objects and labels with their string names (as a file roundtrip would)."""
    return category_from_doc(Doc(category_to_dict(C)), C.field)


# -- groups and Hopf algebras ----------------------------------------------------


@_guarded
def group_from_doc(doc: Doc) -> FiniteGroup:
    elements = [str(e) for e in doc.get("elements")]
    table = doc.get("table")
    if not isinstance(table, list) or len(table) != len(elements) or any(len(r) != len(elements) for r in table):
        doc.fail("table must be a square list of rows", "table")
    for i, row in enumerate(table):
        for j, v in enumerate(row):
            if str(v) not in elements:
                doc.fail(f"unknown element {v!r}", f"table[{i}][{j}]")
    return FiniteGroup(elements, [[str(v) for v in r] for r in table], name=doc.get("name", "G"))


def group_to_dict(G: FiniteGroup) -> dict:
    return {"name": G.name, "elements": list(G.elements),
            "table": [[G.mul(a, b) for b in G.elements] for a in G.elements]}


def _algebra_parts(doc: Doc, F: Field):
    basis = [str(b) for b in doc.get("basis")]
    index = {b: i for i, b in enumerate(basis)}
    n = len(basis)
    mult = {}
    for t, e in enumerate(doc.get("mult")):
        where = f"mult[{t}]"
        a, b = str(e.get("a")), str(e.get("b"))
        if a not in index or b not in index:
            doc.fail("unknown basis label", where)
        vec = _sparse(F, e.get("out", []), index, n, doc, f"{where}.out")
        sparse = {i: c for i, c in enumerate(vec) if c}
        if sparse:
            mult[(index[a], index[b])] = sparse
    unit = _sparse(F, doc.get("unit"), index, n, doc, "unit")
    return basis, index, mult, unit


@_guarded
def algebra_from_doc(doc: Doc, F: Field) -> AssocAlgebra:
    basis, _, mult, unit = _algebra_parts(doc, F)
    return AssocAlgebra(F, basis, mult, unit, name=doc.get("name", ""))


@_guarded
def hopf_from_doc(doc: Doc, field: Field | None = None) -> HopfAlgebra:
    F = _field(doc, field)
    if "group_algebra" in doc.data:
        return group_algebra(group_from_doc(doc.ref("group_algebra")), F)
    if "function_algebra" in doc.data:
        return function_algebra(group_from_doc(doc.ref("function_algebra")), F)
    basis, index, mult, unit = _algebra_parts(doc, F)
    n = len(basis)
    comult = {i: {} for i in range(n)}
    for t, e in enumerate(doc.get("comult")):
        where = f"comult[{t}]"
        h = str(e.get("h"))
        if h not in index:
            doc.fail("unknown basis label", where)
        for s, item in enumerate(e.get("out", [])):
            if len(item) != 3 or str(item[0]) not in index or str(item[1]) not in index:
                doc.fail("expected [label, label, scalar]", f"{where}.out[{s}]")
            c = _scalar(F, item[2], doc, f"{where}.out[{s}][2]")
            key = (index[str(item[0])], index[str(item[1])])
            comult[index[h]][key] = comult[index[h]].get(key, F.zero) + c
    cd = doc.get("counit")
    counit = [_scalar(F, cd.get(b, "0"), doc, f"counit.{b}") for b in basis]
    antipode = [[F.zero] * n for _ in range(n)]
    for t, e in enumerate(doc.get("antipode")):
        h = str(e.get("h"))
        if h not in index:
            doc.fail("unknown basis label", f"antipode[{t}]")
        col = _sparse(F, e.get("out", []), index, n, doc, f"antipode[{t}].out")
        for r, c in enumerate(col):
            antipode[r][index[h]] = c
    return HopfAlgebra(F, basis, mult, unit, comult, counit, antipode, name=doc.get("name", "H"))


def hopf_to_dict(H: HopfAlgebra) -> dict:
    F = H.field
    b = [name(v) for v in H.basis]

    def vec(v):
        return [[b[k], F.format(c)] for k, c in enumerate(v) if c]

    mult = [{"a": b[i], "b": b[j], "out": [[b[k], F.format(c)] for k, c in sorted(out.items())]}
            for (i, j), out in sorted(H.mult.items())]
    comult = [{"h": b[i], "out": [[b[p], b[q], F.format(c)] for (p, q), c in sorted(d.items()) if c]}
              for i, d in sorted(H.comult.items())]
    antipode = [{"h": b[i], "out": vec([row[i] for row in H.antipode])} for i in range(H.dim)]
    return {"field": F.spec(), "name": H.name, "basis": b, "mult": mult, "unit": vec(H.unit),
            "comult": comult, "counit": {b[i]: F.format(c) for i, c in enumerate(H.counit)},
            "antipode": antipode}


# -- structures --------------------------------------------------------------------


@_guarded
def grading_from_doc(doc: Doc, field: Field | None = None):
    """Returns ``(C, G, grading)``."""
    C = category_from_doc(doc.ref("category"), field)
    G = group_from_doc(doc.ref("group"))
    degrees = doc.get("degrees")
    nested = all(isinstance(v, dict) for v in degrees.values()) and any("->" in k for k in degrees)
    if nested:
        deg = {}
        for (x, y), labs in C.homs.items():
            inner = degrees.get(hom_key(x, y), {})
            try:
                deg[(x, y)] = [str(inner[lab]) for lab in labs]
            except KeyError as exc:
                doc.fail(f"no degree for label {exc.args[0]!r}", f"degrees.{hom_key(x, y)}")
        return C, G, Grading(C, G, deg)
    return C, G, Grading.from_labels(C, G, {str(k): str(v) for k, v in degrees.items()})


@_guarded
def action_from_doc(doc: Doc, field: Field | None = None):
    """Returns ``(C, G, action)``."""
    C = category_from_doc(doc.ref("category"), field)
    G = group_from_doc(doc.ref("group"))
    F = C.field
    perm = doc.get("object_perm")
    mats = doc.get("hom_matrices")
    obj, maps = {}, {}
    for g in G.elements:
        if g not in perm or g not in mats:
            doc.fail(f"no data for group element {g!r}", "object_perm")
        obj[g] = {x: str(perm[g].get(x, x)) for x in C.objects}
        maps[g] = {}
        for key, M in mats[g].items():
            x, y = _split_hom(key, doc, f"hom_matrices.{g}.{key}")
            maps[g][(x, y)] = _matrix(F, M, doc, f"hom_matrices.{g}.{key}")
        for x in C.objects:
            for y in C.objects:
                if (x, y) not in maps[g] and C.dim(x, y) == 0:
                    maps[g][(x, y)] = []
    return C, G, GroupAction(C, G, obj, maps)


@_guarded
def hmodule_from_doc(doc: Doc, field: Field | None = None):
    """Returns ``(C, H, rho, G)``; ``G`` is set when the file names a group (``H = kG``)."""
    C = category_from_doc(doc.ref("category"), field)
    F = C.field
    G = None
    if "group" in doc.data:
        G = group_from_doc(doc.ref("group"))
        H = group_algebra(G, F)
    else:
        H = hopf_from_doc(doc.ref("hopf"), F)
    md = doc.get("matrices")
    act = []
    for b in H.basis:
        if name(b) not in md:
            doc.fail(f"no matrices for Hopf basis element {name(b)!r}", "matrices")
        fam = {}
        for key, M in md[name(b)].items():
            x, y = _split_hom(key, doc, f"matrices.{name(b)}.{key}")
            fam[(x, y)] = _matrix(F, M, doc, f"matrices.{name(b)}.{key}")
        for x in C.objects:
            for y in C.objects:
                if (x, y) not in fam and C.dim(x, y) == 0:
                    fam[(x, y)] = []
        act.append(fam)
    return C, H, HModuleStructure(C, H, act), G


def hmodule_to_dict(rho: HModuleStructure) -> dict:
    F = rho.category.field
    return {"matrices": {name(b): {hom_key(x, y): [[F.format(c) for c in r] for r in M]
                                   for (x, y), M in rho.act[i].items()}
                         for i, b in enumerate(rho.hopf.basis)}}


@_guarded
def functor_from_doc(doc: Doc, field: Field | None = None) -> LinearFunctor:
    S = category_from_doc(doc.ref("source"), field)
    T = category_from_doc(doc.ref("target"), S.field)
    om = {x: str(v) for x, v in doc.get("object_map").items()}
    mats = {}
    for key, M in doc.get("hom_matrices").items():
        x, y = _split_hom(key, doc, f"hom_matrices.{key}")
        mats[(x, y)] = _matrix(S.field, M, doc, f"hom_matrices.{key}")
    for x in S.objects:
        for y in S.objects:
            if (x, y) not in mats and x in om and y in om:
                rows = T.dim(om[x], om[y]) if om[x] in T._index and om[y] in T._index else 0
                if S.dim(x, y) == 0:
                    mats[(x, y)] = [[] for _ in range(rows)]
                elif rows == 0:
                    mats[(x, y)] = []
    return LinearFunctor(S, T, om, mats, name=doc.get("name", "F"))


def functor_to_dict(Fn: LinearFunctor) -> dict:
    F = Fn.source.field
    return {"name": Fn.name,
            "source": category_to_dict(Fn.source),
            "target": category_to_dict(Fn.target),
            "object_map": {name(x): name(y) for x, y in Fn.object_map.items()},
            "hom_matrices": {hom_key(x, y): [[F.format(c) for c in r] for r in M]
                             for (x, y), M in Fn.hom_matrices.items()}}


@_guarded
def module_from_doc(doc: Doc, field: Field | None = None, C: KCategory | None = None) -> CatModule:
    C = C or category_from_doc(doc.ref("category"), field)
    F = C.field
    dims = {x: int(doc.get("dims").get(x, 0)) for x in C.objects}
    ad = doc.get("action")
    action = {}
    for x in C.objects:
        for y in C.objects:
            entry = ad.get(hom_key(x, y), {})
            where = f"action.{hom_key(x, y)}"
            if isinstance(entry, dict):
                mats = []
                for lab in C.hom(x, y):
                    if name(lab) not in entry:
                        doc.fail(f"no matrix for basis label {name(lab)!r}", where)
                    mats.append(_matrix(F, entry[name(lab)], doc, f"{where}.{name(lab)}"))
            else:
                mats = [_matrix(F, M, doc, f"{where}[{i}]") for i, M in enumerate(entry)]
            action[(x, y)] = mats
    return CatModule(C, dims, action, name=doc.get("name", "M"))


def module_to_dict(M: CatModule) -> dict:
    C, F = M.category, M.category.field
    return {"name": M.name, "dims": {name(x): d for x, d in M.dims.items()},
            "action": {hom_key(x, y): {name(C.hom(x, y)[i]): [[F.format(c) for c in r] for r in A]
                                       for i, A in enumerate(mats)}
                       for (x, y), mats in M.action.items()}}


@_guarded
def partition_from_doc(doc: Doc, C: KCategory):
    from .constructions import Partition

    if doc.data in ("whole", "trivial"):
        return Partition.whole(C)
    if doc.data == "singletons":
        return Partition.singletons(C)
    blocks = [[str(x) for x in b] for b in doc.get("blocks")]
    names = doc.get("names", None)
    return Partition(blocks, [str(n) for n in names] if names else ["+".join(b) for b in blocks])


@_guarded
def idempotents_from_doc(doc: Doc, C: KCategory) -> dict:
    """``{"idempotents": {x: [[label, scalar]...] or [scalar...] per idempotent}}``."""
    F = C.field
    out = {}
    for x, vecs in doc.get("idempotents").items():
        if x not in C._index:
            doc.fail(f"unknown object {x!r}", f"idempotents.{x}")
        index = {name(lab): i for i, lab in enumerate(C.hom(x, x))}
        rows = []
        for t, v in enumerate(vecs):
            where = f"idempotents.{x}[{t}]"
            if v and isinstance(v[0], list):
                rows.append(_sparse(F, v, index, C.dim(x, x), doc, where))
            else:
                rows.append([_scalar(F, c, doc, f"{where}[{k}]") for k, c in enumerate(v)])
        out[x] = rows
    return out


@_guarded
def inflation_from_doc(doc: Doc, C: KCategory) -> dict:
    sets = doc.get("index_sets")
    return {x: [str(i) for i in sets.get(x, [])] for x in C.objects}


def _bimodule(doc: Doc, F: Field) -> Bimodule:
    d = int(doc.get("dim"))
    left = [_matrix(F, M, doc, f"left[{i}]") for i, M in enumerate(doc.get("left"))]
    right = [_matrix(F, M, doc, f"right[{i}]") for i, M in enumerate(doc.get("right"))]
    return Bimodule(d, left, right, [str(v) for v in doc.get("labels", [])] or list(range(d)))


@_guarded
def context_from_doc(doc: Doc, C: KCategory) -> dict:
    """``{"kind": "identity"}``, ``{"kind": "matrix", "n": 2}`` or explicit per-object data."""
    kind = doc.get("kind", "explicit")
    if kind == "identity":
        return identity_context(C)
    if kind == "matrix":
        return matrix_context(C, int(doc.get("n")))
    F = C.field
    ctx = {}
    objs = doc.child("objects")
    for x in C.objects:
        od = objs.child(x)
        B = algebra_from_doc(od.child("B"), F)
        P = _bimodule(od.child("P"), F)
        Q = _bimodule(od.child("Q"), F)
        phi = {(int(e["q"]), int(e["p"])): [_scalar(F, c, od, "phi") for c in e["out"]] for e in od.get("phi")}
        psi = {(int(e["p"]), int(e["q"])): [_scalar(F, c, od, "psi") for c in e["out"]] for e in od.get("psi")}
        ctx[x] = ObjectContext(B, P, Q, phi, psi)
    return ctx
