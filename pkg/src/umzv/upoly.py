"""Dense polynomials in the formal variable u with coefficients in A.

Stored as numpy arrays of F_p digit components, shape (e, deg_u + 1,
deg_theta + 1), so multiplication is a handful of exact 2-D convolutions
even for the large products appearing in the u-factorial and shuffle
checks.
"""

from __future__ import annotations

import numpy as np

from .dense import conv2d_modp
from .fields import FieldDesc, PolyA


def _encode_rows(field: FieldDesc, polys) -> np.ndarray:
    e = field.e
    nt = max((p_.deg for p_ in polys), default=-1) + 1
    arr = np.zeros((e, len(polys), max(nt, 0)), dtype=np.int8)
    for i, p_ in enumerate(polys):
        for j, c in enumerate(p_.coeffs):
            for k, d in enumerate(field.digits(c)):
                arr[k, i, j] = d
    return arr


class UPoly:
    """Polynomial in u over A = F_r[theta]."""

    __slots__ = ("field", "arr")

    def __init__(self, field: FieldDesc, arr: np.ndarray):
        # normalize: trim trailing zero u-rows / theta-columns
        if arr.size:
            flat = arr.any(axis=0)
            rows = np.nonzero(flat.any(axis=1))[0]
            cols = np.nonzero(flat.any(axis=0))[0]
            if len(rows):
                arr = np.ascontiguousarray(
                    arr[:, : rows.max() + 1, : cols.max() + 1])
            else:
                arr = arr[:, :0, :0]
        else:
            arr = arr.reshape(field.e, 0, 0)
        self.field = field
        self.arr = arr.astype(np.int8, copy=False)

    # constructors -------------------------------------------------------------
    @classmethod
    def from_coeffs(cls, field: FieldDesc, polys) -> "UPoly":
        return cls(field, _encode_rows(field, list(polys)))

    @classmethod
    def zero(cls, field):
        return cls(field, np.zeros((field.e, 0, 0), dtype=np.int8))

    @classmethod
    def one(cls, field):
        return cls.from_coeffs(field, [PolyA.one(field)])

    @classmethod
    def u(cls, field):
        return cls.from_coeffs(field, [PolyA.zero(field), PolyA.one(field)])

    @classmethod
    def const(cls, field, a: PolyA):
        return cls.from_coeffs(field, [a])

    # queries ------------------------------------------------------------------
    @property
    def udeg(self) -> int:
        return self.arr.shape[1] - 1

    def is_zero(self) -> bool:
        return self.arr.shape[1] == 0

    def coefficient(self, k: int) -> PolyA:
        f = self.field
        if k < 0 or k > self.udeg:
            return PolyA.zero(f)
        row = self.arr[:, k, :]
        return PolyA(f, [f.from_digits(row[:, j].tolist())
                         for j in range(row.shape[1])])

    def coeff_list(self) -> list[PolyA]:
        return [self.coefficient(k) for k in range(self.udeg + 1)]

    def support(self) -> list[int]:
        return np.nonzero(self.arr.any(axis=(0, 2)))[0].tolist()

    # arithmetic -----------------------------------------------------------------
    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.arr, other.arr
        e = self.field.e
        nu = max(a.shape[1], b.shape[1])
        nt = max(a.shape[2], b.shape[2])
        out = np.zeros((e, nu, nt), dtype=np.int64)
        out[:, : a.shape[1], : a.shape[2]] += a
        out[:, : b.shape[1], : b.shape[2]] += b
        return UPoly(self.field, out % self.field.p)

    __radd__ = __add__

    def __neg__(self):
        return UPoly(self.field, (-self.arr.astype(np.int64)) % self.field.p)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        f = self.field
        if self.is_zero() or other.is_zero():
            return UPoly.zero(f)
        p, e = f.p, f.e
        a, b = self.arr, other.arr
        nu = a.shape[1] + b.shape[1] - 1
        nt = a.shape[2] + b.shape[2] - 1
        comps = [np.zeros((nu, nt), dtype=np.int64) for _ in range(2 * e - 1)]
        for i in range(e):
            if not a[i].any():
                continue
            for j in range(e):
                if b[j].any():
                    comps[i + j] += conv2d_modp(a[i], b[j], p)
        out = np.zeros((e, nu, nt), dtype=np.int64)
        for m in range(e):
            out[m] = comps[m]
        for m in range(e, 2 * e - 1):
            row = f._xred[m - e]
            for i in range(e):
                if row[i]:
                    out[i] += row[i] * comps[m]
        return UPoly(f, out % p)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of UPoly")
        out = UPoly.one(self.field)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def shift_u(self, k: int) -> "UPoly":
        if self.is_zero():
            return self
        e, nu, nt = self.arr.shape
        out = np.zeros((e, nu + k, nt), dtype=np.int8)
        out[:, k:, :] = self.arr
        return UPoly(self.field, out)

    def divmod_u(self, other: "UPoly"):
        """Division along u; the divisor's leading u-coefficient must be a
        unit of A (a nonzero constant)."""
        f = self.field
        if other.is_zero():
            raise ZeroDivisionError("division by zero UPoly")
        lead = other.coefficient(other.udeg)
        if lead.deg != 0:
            raise ValueError("leading u-coefficient must be a unit of A")
        inv_lead = f.inv(lead.constant())
        rem = self.coeff_list()
        db = other.udeg
        bpolys = other.coeff_list()
        q = [PolyA.zero(f)] * max(0, len(rem) - db)
        for top in range(len(rem) - 1, db - 1, -1):
            c = rem[top]
            if not c.is_zero():
                c = c.scale(inv_lead)
                q[top - db] = c
                off = top - db
                for j in range(db + 1):
                    if not bpolys[j].is_zero():
                        rem[off + j] = rem[off + j] - c * bpolys[j]
        return (UPoly.from_coeffs(f, q),
                UPoly.from_coeffs(f, rem[:db] if db else []))

    def exact_div(self, other: "UPoly") -> "UPoly":
        q, rem = self.divmod_u(other)
        if not rem.is_zero():
            raise ValueError("u-polynomial division is not exact")
        return q

    def evaluate(self, x, one):
        """Horner-free evaluation at a ring element: sum of coeff * x^k over
        the (typically sparse) support.  `one` is the ring's unit."""
        total = None
        cur_pow = one
        cur_exp = 0
        for k in self.support():
            if k != cur_exp:
                cur_pow = cur_pow * (x ** (k - cur_exp)) if cur_exp else x ** k
                cur_exp = k
            term = cur_pow * self.coefficient(k)
            total = term if total is None else total + term
        if total is None:
            return one - one
        return total

    def eval_ratk(self, x):
        from .fields import RatK
        return self.evaluate(x, RatK.one(self.field))

    def _coerce(self, other):
        if isinstance(other, UPoly):
            if other.field is not self.field:
                raise ValueError("field mismatch")
            return other
        if isinstance(other, PolyA):
            return UPoly.const(self.field, other)
        if isinstance(other, int):
            return UPoly.const(self.field,
                               PolyA.const(self.field, self.field.from_int(other)))
        return NotImplemented

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return False
        return (self.arr.shape == other.arr.shape
                and bool(np.array_equal(self.arr, other.arr)))

    def __hash__(self):
        return hash((id(self.field), self.arr.shape, self.arr.tobytes()))

    def __repr__(self):
        if self.is_zero():
            return "UPoly(0)"
        terms = []
        for k in reversed(self.support()):
            c = self.coefficient(k)
            cs = repr(c)
            if c.deg > 0:
                cs = f"({cs})"
            terms.append(cs if k == 0 else (f"{cs}*u^{k}" if k > 1 else f"{cs}*u"))
        return " + ".join(terms)
