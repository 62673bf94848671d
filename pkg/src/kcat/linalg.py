"""Exact dense linear algebra over a :class:`~kcat.field.Field`.

Matrices are lists of rows; vectors are lists.  A matrix ``M`` with shape
``(m, n)`` represents a linear map ``k^n -> k^m`` acting on column vectors,
so column ``j`` is the image of the ``j``-th basis vector.

All echelon reductions pick the first available pivot (leftmost column,
topmost row), which makes every derived basis deterministic.
"""

from __future__ import annotations

from .field import Field


def zeros(field: Field, m: int, n: int) -> list[list]:
    z = field.zero
    return [[z] * n for _ in range(m)]


def identity(field: Field, n: int) -> list[list]:
    out = zeros(field, n, n)
    for i in range(n):
        out[i][i] = field.one
    return out


def unit_vector(field: Field, n: int, i: int) -> list:
    v = [field.zero] * n
    v[i] = field.one
    return v


def shape(M) -> tuple[int, int]:
    return len(M), (len(M[0]) if M else 0)


def transpose(M, ncols: int | None = None) -> list[list]:
    if not M:
        return [[] for _ in range(ncols or 0)]
    return [list(col) for col in zip(*M)]


def matmul(field: Field, A, B, inner: int | None = None) -> list[list]:
    """``A @ B``. ``inner`` disambiguates the shape when ``A`` has no rows."""
    m = len(A)
    k = len(A[0]) if A else (inner if inner is not None else len(B))
    n = len(B[0]) if B else 0
    if B and len(B) != k:
        raise ValueError(f"shape mismatch {m}x{k} @ {len(B)}x{n}")
    z = field.zero
    out = []
    for row in A:
        acc = [z] * n
        for t, a in enumerate(row):
            if a:
                brow = B[t]
                for j in range(n):
                    b = brow[j]
                    if b:
                        acc[j] = acc[j] + a * b
        out.append(acc)
    return out


def matvec(field: Field, M, v) -> list:
    z = field.zero
    out = []
    for row in M:
        acc = z
        for a, b in zip(row, v):
            if a and b:
                acc = acc + a * b
        out.append(acc)
    return out


def add(u, v) -> list:
    return [a + b for a, b in zip(u, v)]


def sub(u, v) -> list:
    return [a - b for a, b in zip(u, v)]


def scale(c, v) -> list:
    return [c * a for a in v]


def is_zero(v) -> bool:
    return not any(v)


def mat_eq(A, B) -> bool:
    if len(A) != len(B):
        return False
    return all(len(r) == len(s) and all(a == b for a, b in zip(r, s)) for r, s in zip(A, B))


def rref(field: Field, rows, ncols: int | None = None):
    """Reduced row echelon form.

    Returns ``(R, pivots)`` where ``R`` holds only the nonzero rows and
    ``pivots[i]`` is the pivot column of ``R[i]``.
    """
    R = [list(r) for r in rows]
    n = len(R[0]) if R else (ncols or 0)
    pivots = []
    r = 0
    for c in range(n):
        piv = None
        for i in range(r, len(R)):
            if R[i][c]:
                piv = i
                break
        if piv is None:
            continue
        R[r], R[piv] = R[piv], R[r]
        inv = field.one / R[r][c]
        if inv != field.one:
            R[r] = [inv * a for a in R[r]]
        prow = R[r]
        for i in range(len(R)):
            if i != r:
                f = R[i][c]
                if f:
                    R[i] = [a - f * b for a, b in zip(R[i], prow)]
        pivots.append(c)
        r += 1
        if r == len(R):
            break
    return R[:r], pivots


def rank(field: Field, M) -> int:
    return len(rref(field, M)[1])


def nullspace(field: Field, M, ncols: int | None = None) -> list[list]:
    """Basis of ``{v : M v = 0}``, one vector per free column."""
    n = len(M[0]) if M else (ncols or 0)
    R, pivots = rref(field, M, n)
    pivset = set(pivots)
    basis = []
    for free in range(n):
        if free in pivset:
            continue
        v = [field.zero] * n
        v[free] = field.one
        for row, pc in zip(R, pivots):
            v[pc] = -row[free]
        basis.append(v)
    return basis


def solve(field: Field, M, b, ncols: int | None = None):
    """One solution of ``M x = b`` (free variables set to 0), or ``None``."""
    n = len(M[0]) if M else (ncols or 0)
    aug = [list(row) + [bi] for row, bi in zip(M, b)]
    R, pivots = rref(field, aug, n + 1)
    if pivots and pivots[-1] == n:
        return None
    x = [field.zero] * n
    for row, pc in zip(R, pivots):
        x[pc] = row[n]
    return x


def inverse(field: Field, M):
    """Inverse of a square matrix, or ``None`` if singular."""
    n = len(M)
    aug = [list(row) + unit_vector(field, n, i) for i, row in enumerate(M)]
    R, pivots = rref(field, aug, 2 * n)
    if pivots[:n] != list(range(n)) or len(pivots) < n:
        return None
    return [row[n:] for row in R[:n]]


def is_invertible(field: Field, M) -> bool:
    return len(M) == (len(M[0]) if M else 0) and rank(field, M) == len(M)


class Subspace:
    """Span of some vectors in ``k^n`` with the canonical RREF basis.

    ``coords(v)`` expresses a member of the span in that basis (the
    coordinates are just the entries of ``v`` at the pivot columns).
    """

    def __init__(self, field: Field, n: int, vectors):
        self.field = field
        self.n = n
        self.basis, self.pivots = rref(field, [list(v) for v in vectors], n)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def coords(self, v, check: bool = True) -> list:
        c = [v[p] for p in self.pivots]
        if check:
            back = self.vector(c)
            if any(a != b for a, b in zip(back, v)):
                raise ValueError("vector is not in the subspace")
        return c

    def contains(self, v) -> bool:
        back = self.vector([v[p] for p in self.pivots])
        return all(a == b for a, b in zip(back, v))

    def vector(self, coords) -> list:
        out = [self.field.zero] * self.n
        for c, row in zip(coords, self.basis):
            if c:
                for j, a in enumerate(row):
                    if a:
                        out[j] = out[j] + c * a
        return out


class Cokernel:
    """The quotient ``k^n / span(relations)`` with an echelon-canonical basis.

    The relations are row reduced; the non-pivot columns index the basis of
    the quotient, and the class of the ``j``-th standard vector (``j`` kept)
    is the ``j``-th canonical basis element.  ``project`` reduces any vector
    modulo the relations and reads off the kept coordinates.
    """

    def __init__(self, field: Field, n: int, relations):
        self.field = field
        self.n = n
        self.rows, self.pivots = rref(field, [list(r) for r in relations], n)
        pivset = set(self.pivots)
        self.kept = [j for j in range(n) if j not in pivset]
        self._pos = {j: i for i, j in enumerate(self.kept)}

    @property
    def dim(self) -> int:
        return len(self.kept)

    def project(self, v) -> list:
        w = list(v)
        for row, pc in zip(self.rows, self.pivots):
            f = w[pc]
            if f:
                for j, a in enumerate(row):
                    if a:
                        w[j] = w[j] - f * a
        return [w[j] for j in self.kept]

    def projection_matrix(self) -> list[list]:
        """Matrix of the projection ``k^n -> quotient``."""
        cols = [self.project(unit_vector(self.field, self.n, j)) for j in range(self.n)]
        return transpose(cols, self.dim) if cols else [[] for _ in range(self.dim)]

    def lift(self, i: int) -> list:
        """Representative of the ``i``-th basis element: a standard vector."""
        return unit_vector(self.field, self.n, self.kept[i])

    def lift_vector(self, coords) -> list:
        out = [self.field.zero] * self.n
        for c, j in zip(coords, self.kept):
            out[j] = c
        return out
