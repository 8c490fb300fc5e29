"""Exact arithmetic in F_{p^e}, A = F_r[theta], K = F_r(theta), and the
residue fields F_v = A/(v).

Field elements are stored as integer encodings in [0, r): the base-p
digits of the encoding are the coefficients of the representative
polynomial over F_p, so for prime r the encoding is the residue itself.
Polynomials in theta are coefficient tuples of encodings, lowest degree
first, with no trailing zeros.
"""

from __future__ import annotations

import functools
from fractions import Fraction
from typing import Iterable, Iterator

import numpy as np

from .dense import conv1d_mod
from .errors import DenominatorNotCoprime, NotInvertible

_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59,
           61, 67, 71, 73, 79, 83, 89, 97)

_TABLE_LIMIT = 1024  # build full op tables for fields up to this size


def _factor_prime_power(r: int) -> tuple[int, int]:
    for p in _PRIMES:
        if r % p == 0:
            e = 0
            n = r
            while n % p == 0:
                n //= p
                e += 1
            if n != 1:
                raise ValueError(f"{r} is not a prime power")
            return p, e
    raise ValueError(f"{r} is not a prime power (or its prime exceeds 97)")


# ---------------------------------------------------------------------------
# polynomials over F_p (plain tuples of ints), used only to build field tables


def _fp_trim(c: list[int]) -> tuple[int, ...]:
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def _fp_mul(a, b, p):
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return _fp_trim(out)


def _fp_mod(a, m, p):
    a = list(a)
    inv_lead = pow(m[-1], p - 2, p)
    while len(a) >= len(m):
        c = a[-1] * inv_lead % p
        if c:
            off = len(a) - len(m)
            for j, y in enumerate(m):
                a[off + j] = (a[off + j] - c * y) % p
        a.pop()
    return _fp_trim(a)


def _fp_is_irreducible(m, p) -> bool:
    # trial division by all monic polynomials of degree <= deg(m)/2
    d = len(m) - 1
    if d <= 0:
        return False
    for k in range(1, d // 2 + 1):
        for idx in range(p ** k):
            div = _digits(idx, p, k) + (1,)
            if len(_fp_divmod_rem(m, div, p)) == 0:
                return False
    return True


def _fp_divmod_rem(a, b, p):
    return _fp_mod(a, b, p) if len(a) >= len(b) else _fp_trim(list(a))


def _digits(n: int, p: int, width: int) -> tuple[int, ...]:
    out = []
    for _ in range(width):
        n, d = divmod(n, p)
        out.append(d)
    return tuple(out)


def _lex_smallest_irreducible(p: int, e: int) -> tuple[int, ...]:
    if e == 1:
        return (0, 1)
    for idx in range(p ** e):
        cand = _digits(idx, p, e) + (1,)
        if _fp_is_irreducible(cand, p):
            return cand
    raise AssertionError("no irreducible polynomial found")


# ---------------------------------------------------------------------------


class FieldDesc:
    """Description of F_{p^e} with table-backed arithmetic on encodings."""

    def __init__(self, p: int, e: int, _token=None):
        if _token is not _FIELD_TOKEN:
            raise TypeError("use GF(r) to construct fields")
        self.p = p
        self.e = e
        self.r = p ** e
        self.modulus = _lex_smallest_irreducible(p, e)
        self._build_ops()

    def _build_ops(self):
        p, e, r = self.p, self.e, self.r
        # reduction rows for x^m, e <= m <= 2e-2, as digit vectors
        red = []
        cur = list(self.modulus[:-1])
        cur = [(-c) % p for c in cur]  # x^e = -(lower part)
        red.append(tuple(cur))
        for _ in range(e - 2):
            nxt = [0] * e
            carry = cur[-1]
            for i in range(e - 1):
                nxt[i + 1] = cur[i]
            if carry:
                for i in range(e):
                    nxt[i] = (nxt[i] + carry * red[0][i]) % p
            red.append(tuple(nxt))
            cur = nxt
        self._xred = red

        if r <= _TABLE_LIMIT:
            add = [[0] * r for _ in range(r)]
            mul = [[0] * r for _ in range(r)]
            for a in range(r):
                da = _digits(a, p, e)
                for b in range(a, r):
                    db = _digits(b, p, e)
                    s = sum(((da[i] + db[i]) % p) * p ** i for i in range(e))
                    add[a][b] = add[b][a] = s
                    m = self._mul_slow(da, db)
                    mul[a][b] = mul[b][a] = m
            self._add_t = add
            self._mul_t = mul
            self._neg_t = [self.from_digits(tuple((-d) % p for d in _digits(a, p, e)))
                           for a in range(r)]
            inv = [0] * r
            for a in range(1, r):
                inv[a] = pow_enc(self, a, r - 2)
            self._inv_t = inv
        else:
            self._add_t = self._mul_t = self._neg_t = self._inv_t = None

    def _mul_slow(self, da, db):
        p, e = self.p, self.e
        prod = [0] * (2 * e - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    prod[i + j] = (prod[i + j] + x * y) % p
        out = list(prod[:e])
        for m in range(e, 2 * e - 1):
            c = prod[m]
            if c:
                row = self._xred[m - e]
                for i in range(e):
                    out[i] = (out[i] + c * row[i]) % p
        return sum(out[i] * p ** i for i in range(e))

    # encoding helpers -----------------------------------------------------
    def digits(self, a: int) -> tuple[int, ...]:
        return _digits(a, self.p, self.e)

    def from_digits(self, ds: Iterable[int]) -> int:
        return sum((d % self.p) * self.p ** i for i, d in enumerate(ds))

    def from_int(self, n: int) -> int:
        """Prime-field lift: n mod p as a constant."""
        return n % self.p

    # arithmetic on encodings ----------------------------------------------
    def add(self, a: int, b: int) -> int:
        if self._add_t is not None:
            return self._add_t[a][b]
        p = self.p
        return self.from_digits((x + y) % p
                                for x, y in zip(self.digits(a), self.digits(b)))

    def neg(self, a: int) -> int:
        if self._neg_t is not None:
            return self._neg_t[a]
        return self.from_digits((-d) % self.p for d in self.digits(a))

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if self._mul_t is not None:
            return self._mul_t[a][b]
        return self._mul_slow(self.digits(a), self.digits(b))

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero field element")
        if self._inv_t is not None:
            return self._inv_t[a]
        return pow_enc(self, a, self.r - 2)

    def one(self) -> int:
        return 1

    def elements(self) -> range:
        return range(self.r)

    def minus_one(self) -> int:
        return self.neg(1)

    @functools.lru_cache(maxsize=None)
    def embedding_into(self, other: "FieldDesc") -> tuple[int, ...]:
        """Encoding map for the smallest-root embedding F_{p^e} -> F_{p^e'}."""
        if other.p != self.p or other.e % self.e:
            raise ValueError("no subfield embedding")
        if other is self:
            return tuple(range(self.r))
        root = None
        for x in range(other.r):
            acc = 0
            for c in reversed(self.modulus):
                acc = other.add(other.mul(acc, x), other.from_int(c))
            if acc == 0:
                root = x
                break
        assert root is not None
        table = []
        for a in range(self.r):
            acc = 0
            for c in reversed(self.digits(a)):
                acc = other.add(other.mul(acc, root), other.from_int(c))
            table.append(acc)
        return tuple(table)

    def __repr__(self):
        return f"GF({self.r})"

    def __hash__(self):
        return id(self)

    def __eq__(self, other):
        return self is other


_FIELD_TOKEN = object()


@functools.lru_cache(maxsize=None)
def GF(r: int) -> FieldDesc:
    """The finite field with r = p^e elements (cached per r)."""
    p, e = _factor_prime_power(r)
    return FieldDesc(p, e, _token=_FIELD_TOKEN)


def pow_enc(field: FieldDesc, a: int, n: int) -> int:
    out = 1
    base = a
    while n:
        if n & 1:
            out = field.mul(out, base)
        base = field.mul(base, base)
        n >>= 1
    return out


class FFElem:
    """An element of F_{p^e}, wrapping an integer encoding."""

    __slots__ = ("field", "val")

    def __init__(self, field: FieldDesc, val: int):
        self.field = field
        self.val = val

    def __add__(self, other):
        other = self._coerce(other)
        return FFElem(self.field, self.field.add(self.val, other.val))

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        return FFElem(self.field, self.field.sub(self.val, other.val))

    def __neg__(self):
        return FFElem(self.field, self.field.neg(self.val))

    def __mul__(self, other):
        other = self._coerce(other)
        return FFElem(self.field, self.field.mul(self.val, other.val))

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        return FFElem(self.field, self.field.mul(self.val, self.field.inv(other.val)))

    def __pow__(self, n):
        if n < 0:
            return FFElem(self.field, pow_enc(self.field, self.field.inv(self.val), -n))
        return FFElem(self.field, pow_enc(self.field, self.val, n))

    def inverse(self):
        return FFElem(self.field, self.field.inv(self.val))

    def _coerce(self, other):
        if isinstance(other, FFElem):
            if other.field is not self.field:
                raise ValueError("field mismatch")
            return other
        if isinstance(other, int):
            return FFElem(self.field, self.field.from_int(other))
        return NotImplemented

    def __eq__(self, other):
        if isinstance(other, int):
            return self.val == self.field.from_int(other)
        return (isinstance(other, FFElem) and other.field is self.field
                and other.val == self.val)

    def __hash__(self):
        return hash((id(self.field), self.val))

    def __bool__(self):
        return self.val != 0

    def digits(self):
        return self.field.digits(self.val)

    def __repr__(self):
        return f"FF({self.field.r}; {self.val})"


# ---------------------------------------------------------------------------
# A = F_r[theta]


def _mul_coeffs(field: FieldDesc, ca: tuple, cb: tuple) -> tuple:
    if not ca or not cb:
        return ()
    p, e = field.p, field.e
    if e == 1:
        if len(ca) * len(cb) <= 256:
            out = [0] * (len(ca) + len(cb) - 1)
            for i, x in enumerate(ca):
                if x:
                    for j, y in enumerate(cb):
                        out[i + j] = (out[i + j] + x * y) % p
            return tuple(out)
        arr = conv1d_mod(np.asarray(ca, dtype=np.int64),
                         np.asarray(cb, dtype=np.int64), p)
        return tuple(int(v) for v in arr)
    # component form: coefficient k of x^m picks up modulus reduction
    da = np.array([field.digits(c) for c in ca], dtype=np.int64)
    db = np.array([field.digits(c) for c in cb], dtype=np.int64)
    n = len(ca) + len(cb) - 1
    comps = np.zeros((2 * e - 1, n), dtype=np.int64)
    for i in range(e):
        ai = da[:, i]
        if not ai.any():
            continue
        for j in range(e):
            bj = db[:, j]
            if bj.any():
                comps[i + j] += np.convolve(ai, bj)
    comps %= p
    out = comps[:e].copy()
    for m in range(e, 2 * e - 1):
        row = field._xred[m - e]
        for i in range(e):
            if row[i]:
                out[i] += row[i] * comps[m]
    out %= p
    pows = np.array([p ** i for i in range(e)], dtype=np.int64)
    return tuple(int(v) for v in (out.T @ pows))


class PolyA:
    """A polynomial in theta over F_r; the integers of the theory."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: FieldDesc, coeffs: Iterable[int] = ()):
        c = list(coeffs)
        while c and c[-1] == 0:
            c.pop()
        self.field = field
        self.coeffs = tuple(c)

    # constructors ---------------------------------------------------------
    @classmethod
    def zero(cls, field):
        return cls(field, ())

    @classmethod
    def one(cls, field):
        return cls(field, (1,))

    @classmethod
    def const(cls, field, enc: int):
        return cls(field, (enc,))

    @classmethod
    def gen(cls, field):
        """theta"""
        return cls(field, (0, 1))

    @classmethod
    def monic_from_index(cls, field, d: int, k: int):
        """k-th monic polynomial of degree d in the lexicographic order on
        coefficient tuples (constant coefficient varies fastest)."""
        return cls(field, _digits(k, field.r, d) + (1,))

    # basic queries ----------------------------------------------------------
    @property
    def deg(self) -> int:
        return len(self.coeffs) - 1  # -1 for the zero polynomial

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def is_one(self) -> bool:
        return self.coeffs == (1,)

    def lc(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def constant(self) -> int:
        return self.coeffs[0] if self.coeffs else 0

    def index_key(self):
        return (self.deg, tuple(reversed(self.coeffs)))

    # arithmetic -------------------------------------------------------------
    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        f = self.field
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = f.add(out[i], c)
        return PolyA(f, out)

    __radd__ = __add__

    def __neg__(self):
        f = self.field
        return PolyA(f, [f.neg(c) for c in self.coeffs])

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return PolyA(self.field, _mul_coeffs(self.field, self.coeffs, other.coeffs))

    __rmul__ = __mul__

    def scale(self, enc: int):
        f = self.field
        return PolyA(f, [f.mul(c, enc) for c in self.coeffs])

    def shift(self, k: int):
        """Multiply by theta^k."""
        if self.is_zero():
            return self
        return PolyA(self.field, (0,) * k + self.coeffs)

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of PolyA; use RatK")
        out = PolyA.one(self.field)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def divmod(self, other: "PolyA"):
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        f = self.field
        rem = list(self.coeffs)
        db = other.deg
        inv_lead = f.inv(other.lc())
        q = [0] * max(0, len(rem) - db)
        bc = other.coeffs
        for top in range(len(rem) - 1, db - 1, -1):
            c = rem[top]
            if c:
                c = f.mul(c, inv_lead)
                q[top - db] = c
                off = top - db
                for j in range(db + 1):
                    if bc[j]:
                        rem[off + j] = f.sub(rem[off + j], f.mul(c, bc[j]))
        return PolyA(f, q), PolyA(f, rem[:db])

    def __floordiv__(self, other):
        return self.divmod(self._coerce(other))[0]

    def __mod__(self, other):
        return self.divmod(self._coerce(other))[1]

    def exact_div(self, other: "PolyA") -> "PolyA":
        q, rem = self.divmod(other)
        if not rem.is_zero():
            raise ValueError("division is not exact")
        return q

    def monic(self) -> "PolyA":
        if self.is_zero():
            return self
        return self.scale(self.field.inv(self.lc()))

    def gcd(self, other: "PolyA") -> "PolyA":
        a, b = self, other
        while not b.is_zero():
            a, b = b, a % b
        return a.monic()

    def xgcd(self, other: "PolyA"):
        """Returns (g, s, t) with g = s*self + t*other, g monic (or zero)."""
        f = self.field
        r0, r1 = self, other
        s0, s1 = PolyA.one(f), PolyA.zero(f)
        t0, t1 = PolyA.zero(f), PolyA.one(f)
        while not r1.is_zero():
            q, rem = r0.divmod(r1)
            r0, r1 = r1, rem
            s0, s1 = s1, s0 - q * s1
            t0, t1 = t1, t0 - q * t1
        if r0.is_zero():
            return r0, s0, t0
        c = f.inv(r0.lc())
        return r0.scale(c), s0.scale(c), t0.scale(c)

    def evaluate(self, x, one=None):
        """Horner evaluation in any ring containing the prime field; the
        ring's elements must support + and * with PolyA coefficients lifted
        via `lift` below (x's ring)."""
        raise NotImplementedError("use ring-specific evaluation helpers")

    def eval_ff(self, x: int, target: FieldDesc | None = None,
                embed: tuple | None = None) -> int:
        """Evaluate at a field element encoding, optionally in an extension
        via an embedding table for the coefficients."""
        fld = target or self.field
        acc = 0
        for c in reversed(self.coeffs):
            ce = embed[c] if embed is not None else c
            acc = fld.add(fld.mul(acc, x), ce)
        return acc

    # factorization at desk scale ---------------------------------------------
    def is_irreducible(self) -> bool:
        d = self.deg
        if d <= 0:
            return False
        for v in irreducibles_up_to(self.field, d // 2):
            if (self % v).is_zero():
                return False
        return True

    def factor(self) -> dict:
        """Factor into monic irreducibles by trial division (desk scale)."""
        if self.is_zero():
            raise ValueError("cannot factor zero")
        out = {}
        rem = self.monic()
        d = rem.deg
        for v in irreducibles_up_to(self.field, max(d, 1)):
            while rem.deg >= v.deg:
                q, r = rem.divmod(v)
                if r.is_zero():
                    out[v] = out.get(v, 0) + 1
                    rem = q
                else:
                    break
            if rem.deg == 0:
                break
        assert rem.is_one(), "trial division left a non-unit"
        return out

    def _coerce(self, other):
        if isinstance(other, PolyA):
            if other.field is not self.field:
                raise ValueError("field mismatch")
            return other
        if isinstance(other, int):
            return PolyA.const(self.field, self.field.from_int(other))
        if isinstance(other, FFElem):
            return PolyA.const(self.field, other.val)
        return NotImplemented

    def __eq__(self, other):
        if isinstance(other, int):
            other = PolyA.const(self.field, self.field.from_int(other))
        return (isinstance(other, PolyA) and other.field is self.field
                and other.coeffs == self.coeffs)

    def __hash__(self):
        return hash((id(self.field), self.coeffs))

    def __bool__(self):
        return bool(self.coeffs)

    def __repr__(self):
        if self.is_zero():
            return "0"
        parts = []
        for i in range(self.deg, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            if i == 0:
                parts.append(str(c))
            else:
                t = "theta" if i == 1 else f"theta^{i}"
                parts.append(t if c == 1 else f"{c}*{t}")
        return " + ".join(parts)


def enumerate_monic(field: FieldDesc, d: int) -> list[PolyA]:
    """All r^d monic polynomials of degree d, lexicographic on coefficients."""
    if d < 0:
        raise ValueError("degree must be nonnegative")
    return [PolyA.monic_from_index(field, d, k) for k in range(field.r ** d)]


def enumerate_below(field: FieldDesc, d: int) -> list[PolyA]:
    """All r^d polynomials of degree < d (including 0)."""
    return [PolyA(field, _digits(k, field.r, d)) for k in range(field.r ** d)]


@functools.lru_cache(maxsize=None)
def irreducibles_up_to(field: FieldDesc, D: int) -> tuple[PolyA, ...]:
    """Monic irreducibles of degree <= D, verified by trial division."""
    out: list[PolyA] = []
    for d in range(1, D + 1):
        for cand in enumerate_monic(field, d):
            if all(not (cand % v).is_zero() for v in out if v.deg <= d // 2):
                out.append(cand)
    return tuple(out)


class RatK:
    """An element of K = F_r(theta) as a reduced fraction with monic
    denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num: PolyA, den: PolyA | None = None, _reduced=False):
        if den is None:
            den = PolyA.one(num.field)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator in K")
        if not _reduced:
            if num.is_zero():
                den = PolyA.one(num.field)
            else:
                g = num.gcd(den)
                if g.deg > 0:
                    num = num.exact_div(g)
                    den = den.exact_div(g)
                c = den.lc()
                if c != 1:
                    ci = num.field.inv(c)
                    num = num.scale(ci)
                    den = den.scale(ci)
        self.num = num
        self.den = den

    @property
    def field(self):
        return self.num.field

    @classmethod
    def zero(cls, field):
        return cls(PolyA.zero(field), PolyA.one(field), _reduced=True)

    @classmethod
    def one(cls, field):
        return cls(PolyA.one(field), PolyA.one(field), _reduced=True)

    @classmethod
    def from_int(cls, field, n: int):
        return cls(PolyA.const(field, field.from_int(n)), _reduced=True)

    def is_zero(self):
        return self.num.is_zero()

    def is_integral(self):
        return self.den.is_one()

    def valuation_inf(self) -> int:
        """v_inf in 1/theta units; raises on zero."""
        if self.is_zero():
            raise ZeroDivisionError("valuation of zero")
        return self.den.deg - self.num.deg

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return RatK(self.num * other.den + other.num * self.den,
                    self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RatK(-self.num, self.den, _reduced=True)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return RatK(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def inverse(self):
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in K")
        return RatK(self.den, self.num)

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        out = RatK.one(self.field)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def _coerce(self, other):
        if isinstance(other, RatK):
            if other.field is not self.field:
                raise ValueError("field mismatch")
            return other
        if isinstance(other, PolyA):
            return RatK(other)
        if isinstance(other, int):
            return RatK.from_int(self.field, other)
        return NotImplemented

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return False
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __bool__(self):
        return not self.is_zero()

    def __repr__(self):
        if self.den.is_one():
            return repr(self.num)
        return f"({self.num!r})/({self.den!r})"


class FvElem:
    """An element of F_v = A/(v)."""

    __slots__ = ("ring", "rep")

    def __init__(self, ring: "ResidueField", rep: PolyA):
        self.ring = ring
        self.rep = rep % ring.v if rep.deg >= ring.v.deg else rep

    def __add__(self, other):
        return FvElem(self.ring, self.rep + other.rep)

    def __mul__(self, other):
        if isinstance(other, FvElem):
            return FvElem(self.ring, self.rep * other.rep)
        return NotImplemented

    def __neg__(self):
        return FvElem(self.ring, -self.rep)

    def __sub__(self, other):
        return FvElem(self.ring, self.rep - other.rep)

    def inverse(self):
        g, s, _ = self.rep.xgcd(self.ring.v)
        if not g.is_one():
            raise NotInvertible("element shares a factor with v")
        return FvElem(self.ring, s)

    def is_zero(self):
        return self.rep.is_zero()

    def __eq__(self, other):
        return (isinstance(other, FvElem) and other.ring is self.ring
                and other.rep == self.rep)

    def __hash__(self):
        return hash((id(self.ring), self.rep))

    def __repr__(self):
        return f"({self.rep!r} mod {self.ring.v!r})"


class ResidueField:
    """F_v = A/(v) for a monic irreducible v; cardinality r^deg(v)."""

    _cache: dict = {}

    def __new__(cls, v: PolyA):
        key = (id(v.field), v.coeffs)
        inst = cls._cache.get(key)
        if inst is None:
            if not v.is_monic() or not v.is_irreducible():
                raise ValueError("v must be monic irreducible")
            inst = super().__new__(cls)
            inst.v = v
            cls._cache[key] = inst
        return inst

    def reduce_poly(self, a: PolyA) -> FvElem:
        return FvElem(self, a % self.v)

    def reduce(self, x: RatK) -> FvElem:
        """Image of x under A_(v) -> F_v; requires v coprime to den(x)."""
        if (x.den % self.v).is_zero():
            raise DenominatorNotCoprime(f"{self.v!r} divides the denominator")
        return self.reduce_poly(x.num) * self.reduce_poly(x.den).inverse()

    def zero(self):
        return FvElem(self, PolyA.zero(self.v.field))

    def one(self):
        return FvElem(self, PolyA.one(self.v.field))


def reduce_mod_v(x: RatK, v: PolyA) -> FvElem:
    """Reduction of a v-integral rational function mod v."""
    return ResidueField(v).reduce(x)


# ---------------------------------------------------------------------------
# small number-theoretic helpers shared by several modules


def lucas_binom(m: int, k: int, p: int) -> int:
    """C(m, k) mod p for m, k >= 0 via Lucas' theorem."""
    if k < 0 or k > m:
        return 0
    out = 1
    while k:
        m, md = divmod(m, p)
        k, kd = divmod(k, p)
        if kd > md:
            return 0
        num = den = 1
        for i in range(kd):
            num = num * (md - i) % p
            den = den * (i + 1) % p
        out = out * num * pow(den, p - 2, p) % p
    return out


def binom_mod(m: int, k: int, p: int) -> int:
    """C(m, k) mod p for any integer m and k >= 0.

    For m < 0 this is (-1)^k C(-m+k-1, k), matching the generalized
    binomial series coefficients.
    """
    if k < 0:
        return 0
    if m >= 0:
        return lucas_binom(m, k, p)
    val = lucas_binom(-m + k - 1, k, p)
    return (-val) % p if k % 2 else val


def unit_power_sum(field: FieldDesc, m: int) -> int:
    """Sum of c^m over all c in F_r, as an F_p scalar (encoding).

    Equals 0 for m = 0 (the count r vanishes mod p), -1 when
    (r-1) | m with m > 0, and 0 otherwise.
    """
    if m == 0:
        return 0
    return (-1) % field.p if m % (field.r - 1) == 0 else 0


def frac_ceil(x: Fraction) -> int:
    return -((-x.numerator) // x.denominator)
