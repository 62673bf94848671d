"""Exact ground fields: the rationals and prime fields.

Rationals are plain :class:`fractions.Fraction`; prime field elements are
:class:`Residue` instances.  Both support the usual arithmetic operators, so
the linear algebra layer is written once against operators only.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

from .errors import MalformedInput, ParseError


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    i = 2
    while i * i <= p:
        if p % i == 0:
            return False
        i += 1
    return True


class Residue:
    """An element of Z/p for a prime p."""

    __slots__ = ("v", "p")

    def __init__(self, v: int, p: int):
        self.v = v % p
        self.p = p

    def _lift(self, other):
        if isinstance(other, Residue):
            if other.p != self.p:
                raise ValueError(f"mixing F_{self.p} and F_{other.p}")
            return other.v
        if isinstance(other, int):
            return other
        if isinstance(other, Fraction):
            return other.numerator * pow(other.denominator, -1, self.p)
        return NotImplemented

    def __add__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return Residue(self.v + o, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return Residue(self.v - o, self.p)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return Residue(o - self.v, self.p)

    def __mul__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return Residue(self.v * o, self.p)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        if o % self.p == 0:
            raise ZeroDivisionError("division by zero in F_%d" % self.p)
        return Residue(self.v * pow(o, -1, self.p), self.p)

    def __rtruediv__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        if self.v == 0:
            raise ZeroDivisionError("division by zero in F_%d" % self.p)
        return Residue(o * pow(self.v, -1, self.p), self.p)

    def __neg__(self):
        return Residue(-self.v, self.p)

    def __pos__(self):
        return self

    def __pow__(self, n: int):
        if n < 0:
            return Residue(pow(self.v, -1, self.p), self.p) ** (-n)
        return Residue(pow(self.v, n, self.p), self.p)

    def __eq__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return (self.v - o) % self.p == 0

    def __hash__(self):
        return hash(self.v)

    def __bool__(self):
        return self.v != 0

    def __int__(self):
        return self.v

    def __repr__(self):
        return f"{self.v} (mod {self.p})"

    def __str__(self):
        return str(self.v)


class Field:
    """The ground field: ``Field.rationals()`` or ``Field.prime(p)``."""

    def __init__(self, kind: str, p: int | None = None):
        if kind not in ("Q", "Fp"):
            raise MalformedInput(f"unknown field kind {kind!r}")
        if kind == "Fp":
            if p is None or not _is_prime(p):
                raise MalformedInput(f"characteristic {p!r} is not prime")
        else:
            p = None
        self.kind = kind
        self.p = p

    @classmethod
    def rationals(cls) -> Field:
        return cls("Q")

    @classmethod
    def prime(cls, p: int) -> Field:
        return cls("Fp", p)

    @classmethod
    def parse(cls, spec: str) -> Field:
        """Parse ``q`` / ``Q`` or ``fp:P`` (also ``F_P``, ``GF(P)``)."""
        s = str(spec).strip()
        if s.lower() in ("q", "qq", "rationals"):
            return cls.rationals()
        low = s.lower()
        for prefix in ("fp:", "f_", "gf(", "f"):
            if low.startswith(prefix):
                digits = low[len(prefix):].rstrip(")")
                if digits.isdigit():
                    return cls.prime(int(digits))
        raise ParseError(f"unrecognised field {spec!r}", "field")

    @property
    def characteristic(self) -> int:
        return self.p or 0

    @property
    def is_finite(self) -> bool:
        return self.kind == "Fp"

    @property
    def order(self) -> int | None:
        return self.p

    @property
    def zero(self):
        return self(0)

    @property
    def one(self):
        return self(1)

    def __call__(self, x):
        """Coerce an int, Fraction or field element into this field."""
        if self.kind == "Q":
            if isinstance(x, Residue):
                raise ValueError("cannot coerce a residue into Q")
            return Fraction(x)
        if isinstance(x, Residue):
            if x.p != self.p:
                raise ValueError(f"cannot coerce F_{x.p} element into F_{self.p}")
            return x
        if isinstance(x, Fraction):
            if x.denominator % self.p == 0:
                raise ValueError(f"{x} has no image in F_{self.p}")
            return Residue(x.numerator * pow(x.denominator, -1, self.p), self.p)
        return Residue(int(x), self.p)

    def scalar(self, text) -> object:
        """Parse a serialized scalar (``"a/b"`` or an integer string)."""
        if isinstance(text, (int, Fraction)) and not isinstance(text, bool):
            return self(text)
        try:
            return self(Fraction(str(text).strip()))
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(f"bad scalar {text!r}: {exc}") from None

    def format(self, x) -> str:
        x = self(x)
        if self.kind == "Fp":
            return str(x.v)
        if x.denominator == 1:
            return str(x.numerator)
        return f"{x.numerator}/{x.denominator}"

    def elements(self):
        if not self.is_finite:
            raise ValueError("Q is not enumerable")
        return [self(i) for i in range(self.p)]

    def vectors(self, dim: int):
        """All vectors of length ``dim`` over a finite field, in lexicographic order."""
        for tup in itertools.product(self.elements(), repeat=dim):
            yield list(tup)

    def spec(self) -> str:
        return "q" if self.kind == "Q" else f"fp:{self.p}"

    def __eq__(self, other):
        return isinstance(other, Field) and (self.kind, self.p) == (other.kind, other.p)

    def __hash__(self):
        return hash((self.kind, self.p))

    def __repr__(self):
        return "Field.rationals()" if self.kind == "Q" else f"Field.prime({self.p})"

    def __str__(self):
        return "Q" if self.kind == "Q" else f"F_{self.p}"


QQ = Field.rationals()
