"""Truncated power series with exact K coefficients.

Used for the X-bracket realization, the W-polynomial oracle, and other
small fixed-order expansions where every compared coefficient must be
exact."""

from __future__ import annotations

from .fields import FieldDesc, PolyA, RatK


class KSeries:
    """A power series over K truncated at a fixed order."""

    __slots__ = ("field", "coeffs", "order")

    def __init__(self, field: FieldDesc, coeffs, order: int):
        coeffs = list(coeffs)[:order]
        coeffs += [RatK.zero(field)] * (order - len(coeffs))
        self.field = field
        self.coeffs = tuple(coeffs)
        self.order = order

    @classmethod
    def zero(cls, field, order):
        return cls(field, (), order)

    @classmethod
    def one(cls, field, order):
        return cls(field, (RatK.one(field),), order)

    @classmethod
    def const(cls, field, c: RatK, order):
        return cls(field, (c,), order)

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        n = min(self.order, other.order)
        return KSeries(self.field,
                       [self.coeffs[i] + other.coeffs[i] for i in range(n)], n)

    __radd__ = __add__

    def __neg__(self):
        return KSeries(self.field, [-c for c in self.coeffs], self.order)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        n = min(self.order, other.order)
        out = [RatK.zero(self.field) for _ in range(n)]
        for i, a in enumerate(self.coeffs[:n]):
            if a.is_zero():
                continue
            for j, b in enumerate(other.coeffs[: n - i]):
                if not b.is_zero():
                    out[i + j] = out[i + j] + a * b
        return KSeries(self.field, out, n)

    def __rmul__(self, other):
        if isinstance(other, (int, RatK, PolyA)):
            return self * other
        return NotImplemented

    def inverse(self) -> "KSeries":
        if self.coeffs[0].is_zero():
            raise ZeroDivisionError("series has no inverse: zero constant term")
        inv0 = self.coeffs[0].inverse()
        out = [inv0]
        for k in range(1, self.order):
            acc = RatK.zero(self.field)
            for j in range(1, k + 1):
                if not self.coeffs[j].is_zero():
                    acc = acc + self.coeffs[j] * out[k - j]
            out.append(-(inv0 * acc))
        return KSeries(self.field, out, self.order)

    def __pow__(self, n: int):
        base = self if n >= 0 else self.inverse()
        n = abs(n)
        out = KSeries.one(self.field, self.order)
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return False
        n = min(self.order, other.order)
        return all(self.coeffs[i] == other.coeffs[i] for i in range(n))

    def _coerce(self, other):
        if isinstance(other, KSeries):
            if other.field is not self.field:
                raise ValueError("field mismatch")
            return other
        if isinstance(other, RatK):
            return KSeries.const(self.field, other, self.order)
        if isinstance(other, PolyA):
            return KSeries.const(self.field, RatK(other), self.order)
        if isinstance(other, int):
            return KSeries.const(self.field, RatK.from_int(self.field, other),
                                 self.order)
        return NotImplemented

    def __repr__(self):
        return f"KSeries({list(self.coeffs)!r})"
