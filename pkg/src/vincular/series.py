"""Truncated power series with exact rational coefficients.

A ``TruncatedSeries`` stores c_0..c_N and never claims anything beyond x^N;
binary operations truncate to the smaller order.  ``kind`` records whether the
coefficients are read as counts directly (OGF) or as counts / n! (EGF); the
arithmetic itself is ordinary power-series arithmetic in both cases.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial
from numbers import Rational
from typing import Iterable, Sequence

from .errors import AlgebraDomainError, NonIntegralError

OGF = "OGF"
EGF = "EGF"


class TruncatedSeries:
    __slots__ = ("coeffs", "kind")

    def __init__(self, coeffs: Iterable, order: int | None = None, kind: str = OGF):
        cs = [Fraction(c) for c in coeffs]
        if order is None:
            order = len(cs) - 1
        if order < 0:
            raise AlgebraDomainError("series order must be >= 0")
        cs = cs[:order + 1] + [Fraction(0)] * (order + 1 - len(cs))
        if kind not in (OGF, EGF):
            raise AlgebraDomainError(f"unknown series kind {kind!r}")
        self.coeffs = tuple(cs)
        self.kind = kind

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    # constructors

    @classmethod
    def constant(cls, c, order: int, kind: str = OGF) -> "TruncatedSeries":
        return cls([c], order, kind)

    @classmethod
    def variable(cls, order: int, kind: str = OGF) -> "TruncatedSeries":
        return cls([0, 1], order, kind)

    @classmethod
    def monomial(cls, k: int, order: int, c=1, kind: str = OGF) -> "TruncatedSeries":
        return cls([0] * k + [c], order, kind)

    # plumbing

    def __getitem__(self, n):
        return self.coeffs[n]

    def __len__(self):
        return len(self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.kind == other.kind and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.kind, self.coeffs))

    def __repr__(self):
        return f"TruncatedSeries({format_series(self)!r})"

    def _coerce(self, other, op: str) -> "TruncatedSeries":
        if isinstance(other, TruncatedSeries):
            if other.kind != self.kind:
                raise AlgebraDomainError(f"cannot {op} {self.kind} and {other.kind} series")
            return other
        if isinstance(other, (int, Fraction, Rational)):
            return TruncatedSeries.constant(other, self.order, self.kind)
        return NotImplemented

    def with_order(self, order: int) -> "TruncatedSeries":
        return TruncatedSeries(self.coeffs, order, self.kind)

    def as_kind(self, kind: str) -> "TruncatedSeries":
        return TruncatedSeries(self.coeffs, self.order, kind)

    # arithmetic

    def __add__(self, other):
        other = self._coerce(other, "add")
        if other is NotImplemented:
            return other
        n = min(self.order, other.order)
        return TruncatedSeries([a + b for a, b in zip(self.coeffs[:n + 1], other.coeffs)], n, self.kind)

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries([-c for c in self.coeffs], self.order, self.kind)

    def __sub__(self, other):
        other = self._coerce(other, "subtract")
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return TruncatedSeries([c * other for c in self.coeffs], self.order, self.kind)
        other = self._coerce(other, "multiply")
        if other is NotImplemented:
            return other
        n = min(self.order, other.order)
        a, b = self.coeffs, other.coeffs
        out = [Fraction(0)] * (n + 1)
        for i in range(n + 1):
            ai = a[i]
            if ai:
                for j in range(n + 1 - i):
                    out[i + j] += ai * b[j]
        return TruncatedSeries(out, n, self.kind)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise AlgebraDomainError("division by zero")
            return self * (Fraction(1) / Fraction(other))
        other = self._coerce(other, "divide")
        if other is NotImplemented:
            return other
        return self * other.reciprocal()

    def __rtruediv__(self, other):
        return self._coerce(other, "divide") * self.reciprocal()

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.reciprocal() ** (-k)
        result = TruncatedSeries.constant(1, self.order, self.kind)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def reciprocal(self) -> "TruncatedSeries":
        a = self.coeffs
        if a[0] == 0:
            raise AlgebraDomainError("reciprocal needs a nonzero constant term")
        inv0 = 1 / a[0]
        out = [inv0]
        for n in range(1, self.order + 1):
            s = sum(a[k] * out[n - k] for k in range(1, n + 1))
            out.append(-s * inv0)
        return TruncatedSeries(out, self.order, self.kind)

    def shift(self, k: int) -> "TruncatedSeries":
        """Multiply by x^k, keeping the order."""
        return TruncatedSeries([0] * k + list(self.coeffs), self.order, self.kind)

    def compose(self, inner: "TruncatedSeries") -> "TruncatedSeries":
        """self(inner(x)); ``inner`` must have zero constant term."""
        if inner.coeffs[0] != 0:
            raise AlgebraDomainError("composition needs an inner series with zero constant term")
        n = min(self.order, inner.order)
        inner = TruncatedSeries(inner.coeffs, n, self.kind)
        result = TruncatedSeries.constant(self.coeffs[n], n, self.kind)
        for c in reversed(self.coeffs[:n]):
            result = result * inner + c
        return result

    def integrate(self) -> "TruncatedSeries":
        """Antiderivative with zero constant term."""
        out = [Fraction(0)] + [c / (i + 1) for i, c in enumerate(self.coeffs[:-1])]
        return TruncatedSeries(out, self.order, self.kind)

    def derivative(self) -> "TruncatedSeries":
        out = [i * c for i, c in enumerate(self.coeffs)][1:]
        return TruncatedSeries(out, self.order, self.kind)

    def exp(self) -> "TruncatedSeries":
        a = self.coeffs
        if a[0] != 0:
            raise AlgebraDomainError("exp needs a zero constant term")
        out = [Fraction(1)]
        for n in range(1, self.order + 1):
            out.append(sum(k * a[k] * out[n - k] for k in range(1, n + 1)) / n)
        return TruncatedSeries(out, self.order, self.kind)


def series_algebra(opkind: str, a: TruncatedSeries, b: TruncatedSeries | None = None) -> TruncatedSeries:
    binary = {"add": a.__add__, "mul": a.__mul__, "div": a.__truediv__, "compose": a.compose}
    unary = {"integrate": a.integrate, "exponentiate": a.exp}
    if opkind in binary:
        if b is None:
            raise AlgebraDomainError(f"{opkind} needs a second operand")
        if opkind in ("add", "mul", "div") and a.kind != b.kind:
            raise AlgebraDomainError(f"cannot {opkind} {a.kind} and {b.kind} series")
        return binary[opkind](b)
    if opkind in unary:
        return unary[opkind]()
    raise AlgebraDomainError(f"unknown operation {opkind!r}")


def coeff_counts(s: TruncatedSeries) -> list[int]:
    """Integer counts carried by the series; raises at the first non-integer."""
    out = []
    for n, c in enumerate(s.coeffs):
        v = c * factorial(n) if s.kind == EGF else c
        if v.denominator != 1:
            raise NonIntegralError(n, v)
        out.append(int(v))
    return out


def _fmt(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def format_series(s: TruncatedSeries) -> str:
    return f"{s.kind};{s.order};" + ",".join(_fmt(c) for c in s.coeffs)


def parse_series(text: str) -> TruncatedSeries:
    kind, order, body = text.strip().split(";")
    coeffs = [Fraction(c) for c in body.split(",")] if body else []
    return TruncatedSeries(coeffs, int(order), kind)


def from_counts(counts: Sequence[int], kind: str = OGF) -> TruncatedSeries:
    if kind == EGF:
        return TruncatedSeries([Fraction(c, factorial(n)) for n, c in enumerate(counts)], kind=EGF)
    return TruncatedSeries(counts, kind=kind)
