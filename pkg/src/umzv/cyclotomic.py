"""Exact arithmetic in K(Lambda_n), modeled as K[X]/(Phi_n^C(X)) with
lambda_n the class of X.

Elements are stored as (N, D) with N a polynomial in lambda over A and
D in A, representing N/D; products reduce mod Phi_n^C and denominators
are only touched by gcd stripping when they grow.  Inversion runs a
fraction-free primitive polynomial remainder sequence, so every
intermediate stays in A[X]; the quotient is treated as a ring, never
assumed to be a field.
"""

from __future__ import annotations

from .carlitz import Carlitz
from .errors import (DenominatorNotCoprime, NotInvertible, NotMonic,
                     WrongModulus)
from .fields import FvElem, PolyA, RatK, ResidueField
from .upoly import UPoly

_DEN_DEG_LIMIT = 128  # strip gcd content once denominators grow past this


class CycloRing:
    """K[X]/(Phi_n^C(X)) for a monic nonconstant n."""

    _cache: dict = {}

    def __new__(cls, n: PolyA):
        key = (id(n.field), n.coeffs)
        inst = cls._cache.get(key)
        if inst is not None:
            return inst
        if not n.is_monic() or n.deg < 1:
            raise NotMonic("the conductor must be monic and nonconstant")
        inst = super().__new__(cls)
        inst.field = n.field
        inst.n = n
        inst.carlitz = Carlitz.get(n.field)
        inst.phi = inst.carlitz.cyclotomic(n)
        inst.degree = inst.phi.udeg
        cls._cache[key] = inst
        return inst

    # constructors -------------------------------------------------------------
    def zero(self) -> "CycloElem":
        return CycloElem(self, UPoly.zero(self.field), PolyA.one(self.field))

    def one(self) -> "CycloElem":
        return CycloElem(self, UPoly.one(self.field), PolyA.one(self.field))

    def from_upoly(self, num: UPoly, den: PolyA | None = None) -> "CycloElem":
        if num.udeg >= self.degree:
            num = num.divmod_u(self.phi)[1]
        return CycloElem(self, num, den or PolyA.one(self.field))

    def lam(self) -> "CycloElem":
        """The class of X, i.e. lambda_n."""
        return self.from_upoly(UPoly.u(self.field))

    def from_ratk(self, x: RatK) -> "CycloElem":
        return CycloElem(self, UPoly.const(self.field, x.num), x.den)

    def bracket(self, a: PolyA) -> "CycloElem":
        """[a]_lambda: the u-bracket evaluated at the class of X."""
        return self.from_upoly(self.carlitz.u_bracket(a))

    def batch_inverse(self, elems) -> list:
        """Montgomery batch inversion: one PRS inversion for the whole list."""
        elems = list(elems)
        if not elems:
            return []
        prefix = [elems[0]]
        for x in elems[1:]:
            prefix.append(prefix[-1] * x)
        invall = prefix[-1].inverse()
        out = [None] * len(elems)
        acc = invall
        for i in range(len(elems) - 1, 0, -1):
            out[i] = acc * prefix[i - 1]
            acc = acc * elems[i]
        out[0] = acc
        return out

    def __repr__(self):
        return f"CycloRing({self.n!r}; degree {self.degree})"


def _content(num: UPoly) -> PolyA:
    g = PolyA.zero(num.field)
    for c in num.coeff_list():
        if not c.is_zero():
            g = g.gcd(c)
            if g.deg == 0:
                break
    return g


def _scale_num(num: UPoly, c: PolyA) -> UPoly:
    return num * c


def _divide_num(num: UPoly, c: PolyA) -> UPoly:
    return UPoly.from_coeffs(num.field, [q.exact_div(c) for q in num.coeff_list()])


class CycloElem:
    """An element of K[X]/(Phi_n^C), stored as N(lambda)/D with N over A."""

    __slots__ = ("ring", "num", "den")

    def __init__(self, ring: CycloRing, num: UPoly, den: PolyA):
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if num.is_zero():
            den = PolyA.one(ring.field)
        elif den.deg > _DEN_DEG_LIMIT:
            g = _content(num).gcd(den)
            if g.deg > 0:
                num = _divide_num(num, g)
                den = den.exact_div(g)
        if not den.is_monic() and not num.is_zero():
            c = ring.field.inv(den.lc())
            num = num * PolyA.const(ring.field, c)
            den = den.scale(c)
        elif not den.is_monic():
            den = PolyA.one(ring.field)
        self.ring = ring
        self.num = num
        self.den = den

    # ring operations ------------------------------------------------------------
    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.den == other.den:
            return CycloElem(self.ring, self.num + other.num, self.den)
        return CycloElem(self.ring,
                         self.num * other.den + other.num * self.den,
                         self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return CycloElem(self.ring, -self.num, self.den)

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
        num = self.num * other.num
        if num.udeg >= self.ring.degree:
            num = num.divmod_u(self.ring.phi)[1]
        return CycloElem(self.ring, num, self.den * other.den)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        out = self.ring.one()
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def inverse(self) -> "CycloElem":
        """Inverse via a fraction-free extended PRS against Phi_n^C."""
        if self.num.is_zero():
            raise NotInvertible("zero is not invertible")
        f = self.ring.field
        r0, u0 = self.ring.phi, UPoly.zero(f)
        r1, u1 = self.num, UPoly.one(f)
        while r1.udeg > 0:
            r2, q, alpha = _pseudo_divmod(r0, r1)
            u2 = u0 * alpha - q * u1
            g = _content(r2).gcd(_content(u2)) if not r2.is_zero() else _content(u2)
            if not g.is_zero() and g.deg > 0:
                r2 = _divide_num(r2, g) if not r2.is_zero() else r2
                u2 = _divide_num(u2, g)
            r0, u0, r1, u1 = r1, u1, r2, u2
            if r1.is_zero():
                raise NotInvertible("element shares a factor with the modulus")
        res = r1.coefficient(0)  # nonzero constant in lambda, element of A
        # u1 * N = res * den_of_N ... account for our denominator:
        num = u1 * self.den
        return CycloElem(self.ring, num, res)

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def rep(self) -> tuple:
        """Canonical representative: tuple of RatK coefficients of lambda^i."""
        cs = self.num.coeff_list()
        cs += [PolyA.zero(self.ring.field)] * (self.ring.degree - len(cs))
        return tuple(RatK(c, self.den) for c in cs)

    def constant_coefficient(self) -> RatK:
        return RatK(self.num.coefficient(0), self.den)

    def _coerce(self, other):
        if isinstance(other, CycloElem):
            if other.ring is not self.ring:
                raise ValueError("ring mismatch")
            return other
        if isinstance(other, (PolyA, int)):
            f = self.ring.field
            if isinstance(other, int):
                other = PolyA.const(f, f.from_int(other))
            return CycloElem(self.ring, UPoly.const(f, other), PolyA.one(f))
        if isinstance(other, RatK):
            return self.ring.from_ratk(other)
        return NotImplemented

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return False
        return self.num * other.den == other.num * self.den

    def __repr__(self):
        return f"Cyclo({self.num!r}) / ({self.den!r})"


def _pseudo_divmod(a: UPoly, b: UPoly):
    """Pseudo-division along u: returns (rem, q, alpha) with
    alpha * a = q * b + rem and everything over A."""
    f = a.field
    lc = b.coefficient(b.udeg)
    delta = a.udeg - b.udeg
    alpha = PolyA.one(f)
    rem = a
    qc = [PolyA.zero(f)] * (delta + 1)
    for k in range(delta, -1, -1):
        top = rem.coefficient(b.udeg + k)
        rem = rem * lc
        alpha = alpha * lc
        for i in range(delta + 1):
            qc[i] = qc[i] * lc
        if not top.is_zero():
            qc[k] = qc[k] + top
            rem = rem - (b * top).shift_u(k)
    q = UPoly.from_coeffs(f, qc)
    return rem, q, alpha


def bracket_at_lambda(a: PolyA, ring: CycloRing) -> CycloElem:
    """[a]_{lambda_n} inside the cyclotomic ring; constant-in-lambda
    coefficient equals a."""
    if a.is_zero():
        from .errors import ZeroInput
        raise ZeroInput("bracket of zero")
    return ring.bracket(a)


def reduce_at_zero(x: CycloElem, v: PolyA) -> FvElem:
    """Image of x under lambda -> 0, theta -> theta mod v.

    Only defined when the ring's conductor is the irreducible v itself
    (the totally ramified case F_v = A[lambda_v]/(lambda_v))."""
    if x.ring.n != v:
        raise WrongModulus("x lives in a different cyclotomic ring")
    if not v.is_irreducible():
        raise WrongModulus("reduction at lambda = 0 needs an irreducible conductor")
    c0 = x.constant_coefficient()
    if (c0.den % v).is_zero():
        raise DenominatorNotCoprime(f"{v!r} divides a denominator")
    return ResidueField(v).reduce(c0)
