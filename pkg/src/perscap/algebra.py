"""Exact field arithmetic, extended reals and sparse columns.

Elements of a prime field F_q are plain ints in ``0..q-1``; rational elements
are :class:`fractions.Fraction`.  A sparse column is a tuple of
``(row, coefficient)`` pairs with strictly increasing rows and no zero
coefficients.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Union

from .errors import DivisionByZero, ParseError

INF = math.inf
NEG_INF = -math.inf

ExtReal = Union[Fraction, float]
SparseColumn = tuple


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


@dataclass(frozen=True)
class FieldSpec:
    """Coefficient field: ``FieldSpec.prime(q)`` or ``FieldSpec.rational()``."""

    kind: str
    q: int | None = None

    def __post_init__(self):
        if self.kind == "prime":
            if not isinstance(self.q, int) or not _is_prime(self.q):
                raise ValueError(f"field order {self.q!r} is not prime")
        elif self.kind == "rational":
            if self.q is not None:
                raise ValueError("rational field takes no order")
        else:
            raise ValueError(f"unknown field kind {self.kind!r}")

    @classmethod
    def prime(cls, q: int) -> "FieldSpec":
        return cls("prime", q)

    @classmethod
    def rational(cls) -> "FieldSpec":
        return cls("rational")

    @classmethod
    def from_flag(cls, text: str) -> "FieldSpec":
        """Parse the CLI spelling: a prime such as ``"2"`` or ``"rational"``."""
        text = text.strip().lower()
        if text in ("rational", "q", "rationals"):
            return cls.rational()
        try:
            return cls.prime(int(text))
        except ValueError as exc:
            raise ParseError(f"bad field {text!r}: {exc}") from None

    @property
    def characteristic(self) -> int:
        return self.q if self.kind == "prime" else 0

    @property
    def zero(self):
        return 0 if self.kind == "prime" else Fraction(0)

    @property
    def one(self):
        return 1 if self.kind == "prime" else Fraction(1)

    def elem(self, x):
        """Coerce an int or Fraction into this field."""
        if self.kind == "rational":
            return Fraction(x)
        if isinstance(x, Fraction):
            if x.denominator % self.q == 0:
                raise DivisionByZero(f"{x} has no image in F_{self.q}")
            return x.numerator * pow(x.denominator, -1, self.q) % self.q
        return int(x) % self.q

    def add(self, a, b):
        return (a + b) % self.q if self.kind == "prime" else a + b

    def sub(self, a, b):
        return (a - b) % self.q if self.kind == "prime" else a - b

    def neg(self, a):
        return (-a) % self.q if self.kind == "prime" else -a

    def mul(self, a, b):
        return (a * b) % self.q if self.kind == "prime" else a * b

    def inv(self, a):
        if a == 0:
            raise DivisionByZero("inverse of zero")
        if self.kind == "prime":
            return pow(a, -1, self.q)
        return 1 / a

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def parse(self, text: str):
        try:
            value = Fraction(str(text).strip())
        except (ValueError, ZeroDivisionError):
            raise ParseError(f"bad coefficient {text!r}") from None
        return self.elem(value)

    def format(self, a) -> str:
        return str(a)

    def __str__(self):
        return f"F_{self.q}" if self.kind == "prime" else "Q"


def field_arith(field: FieldSpec, a, b=None, op: str = "add"):
    """Apply ``op`` in ``{add, mul, inv, neg}``; unary ops ignore ``b``."""
    if op == "add":
        return field.add(a, b)
    if op == "mul":
        return field.mul(a, b)
    if op == "inv":
        return field.inv(a)
    if op == "neg":
        return field.neg(a)
    raise ValueError(f"unknown op {op!r}")


# -- sparse columns ---------------------------------------------------------

def column(entries: Iterable, field: FieldSpec) -> SparseColumn:
    """Canonical column from arbitrary ``(row, coeff)`` pairs; duplicates summed."""
    acc: dict[int, object] = {}
    for row, c in entries:
        acc[row] = field.add(acc.get(row, field.zero), c)
    return tuple((r, acc[r]) for r in sorted(acc) if acc[r] != 0)


def add_scaled(u: SparseColumn, v: SparseColumn, c, field: FieldSpec) -> SparseColumn:
    """Return ``u + c*v`` in canonical form."""
    if c == 0 or not v:
        return u
    out = []
    i = j = 0
    nu, nv = len(u), len(v)
    prime = field.kind == "prime"
    q = field.q
    while i < nu and j < nv:
        ru, cu = u[i]
        rv, cv = v[j]
        if ru < rv:
            out.append(u[i])
            i += 1
        elif rv < ru:
            out.append((rv, (c * cv) % q if prime else c * cv))
            j += 1
        else:
            s = (cu + c * cv) % q if prime else cu + c * cv
            if s != 0:
                out.append((ru, s))
            i += 1
            j += 1
    if i < nu:
        out.extend(u[i:])
    while j < nv:
        rv, cv = v[j]
        out.append((rv, (c * cv) % q if prime else c * cv))
        j += 1
    return tuple(out)


def scale(v: SparseColumn, c, field: FieldSpec) -> SparseColumn:
    if c == 0:
        return ()
    return tuple((r, field.mul(c, x)) for r, x in v)


def low(v: SparseColumn):
    """Largest row index with a nonzero entry, or ``None`` for the zero column."""
    return v[-1][0] if v else None


def coeff_at(v: SparseColumn, row: int, field: FieldSpec):
    for r, c in v:
        if r == row:
            return c
    return field.zero


def format_column(v: SparseColumn, field: FieldSpec) -> list:
    return [[r, field.format(c)] for r, c in v]


def parse_column(data: list, field: FieldSpec) -> SparseColumn:
    rows = [int(r) for r, _ in data]
    if rows != sorted(set(rows)):
        raise ParseError("column rows must be strictly increasing")
    col = tuple((int(r), field.parse(c)) for r, c in data)
    if any(c == 0 for _, c in col):
        raise ParseError("column stores a zero coefficient")
    return col


# -- extended reals ---------------------------------------------------------

_POS = {"inf", "+inf", "infinity", "+infinity"}
_NEG = {"-inf", "-infinity"}


def parse_extended(text) -> ExtReal:
    """Exact parse of a decimal/rational string, or ``inf``/``-inf``."""
    if isinstance(text, (Fraction, int)):
        return Fraction(text)
    if isinstance(text, float):
        if math.isinf(text):
            return text
        raise ParseError("finite values must be given as exact strings")
    s = str(text).strip().lower()
    if s in _POS:
        return INF
    if s in _NEG:
        return NEG_INF
    try:
        return Fraction(s)
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"bad number {text!r}") from None


def format_extended(x: ExtReal) -> str:
    """Exact string: integer, terminating decimal, ``p/q``, or ``inf``/``-inf``."""
    if isinstance(x, float):
        if x == INF:
            return "inf"
        if x == NEG_INF:
            return "-inf"
        x = Fraction(x)
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    d = x.denominator
    twos = fives = 0
    while d % 2 == 0:
        d //= 2
        twos += 1
    while d % 5 == 0:
        d //= 5
        fives += 1
    if d != 1:
        return f"{x.numerator}/{x.denominator}"
    places = max(twos, fives)
    scaled = abs(x.numerator) * (10 ** places // x.denominator)
    digits = str(scaled).rjust(places + 1, "0")
    sign = "-" if x < 0 else ""
    return f"{sign}{digits[:-places]}.{digits[-places:]}"


def is_finite(x: ExtReal) -> bool:
    return not (isinstance(x, float) and math.isinf(x))
