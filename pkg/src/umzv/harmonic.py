"""Power sums, Thakur multiple zeta values, and the generic finite
multiple harmonic series over pluggable brackets.

Exact power sums use the annihilator-polynomial identity: with
e_d(z) = prod_{b in A_{<d}} (z - b) one has

  sum_{s>=1} S_d(s) z^{s-1} = (1/L_d) * sum_{k>=0} (e_d(z)/D_d)^k,
  e_d(z)/D_d = sum_i z^{r^i} / (D_i L_{d-i}^{r^i}),

which also certifies v_inf(S_d(s)) >= deg L_d for d >= 1: the tail
cutoffs below rely on that geometric growth rather than the linear
bound s*d alone.  For s <= 0 the character-sum factorization gives the
closed form (every slot must carry a positive multiple of r-1), hence
the exact vanishing S_d(s) = 0 once d(r-1) > |s|.

Convention note: S_{<d}(empty) follows the literal summation convention
(1 for d >= 1, 0 for d <= 0) while the abstract harmonic series uses
H_{<d}(empty) = 1 for all d >= 0; the two disagree at d <= 0 and this
module follows each definition where it is used.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass
from fractions import Fraction

from .carlitz import Carlitz, _balanced_product, _frobenius_r
from .cyclotomic import CycloRing, reduce_at_zero
from .errors import (BracketNotInvertible, NotInvertible, PrecisionNotCertified,
                     ZeroToPrecision)
from .fields import (FieldDesc, FvElem, PolyA, RatK, enumerate_monic,
                     frac_ceil, irreducibles_up_to)
from .laurent import LaurentElem, LaurentField
from .series import KSeries
from .upoly import UPoly

_MAX_CUTOFF = 64


# ---------------------------------------------------------------------------
# exact power sums


def deg_L(field: FieldDesc, d: int) -> int:
    r = field.r
    return (r ** (d + 1) - r) // (r - 1)


def _nonpos_compositions(k: int, slots: int, step: int):
    """Yield (k_top, parts) with parts of length `slots`, each a positive
    multiple of `step`, and k_top + sum(parts) = k."""
    def rec(remaining, left, acc):
        if left == 0:
            yield remaining, tuple(acc)
            return
        m = step
        while m <= remaining - step * (left - 1):
            acc.append(m)
            yield from rec(remaining - m, left - 1, acc)
            acc.pop()
            m += step
    if k >= slots * step:
        yield from rec(k, slots, [])


def _multinomial_mod(k: int, parts, p: int) -> int:
    num = math.factorial(k)
    for m in parts:
        num //= math.factorial(m)
    return num % p


@functools.lru_cache(maxsize=None)
def power_sum(field: FieldDesc, d: int, s: int) -> RatK:
    """Thakur's power sum S_d(s) = sum over monic a of degree d of a^{-s}."""
    if d < 0:
        return RatK.zero(field)
    if d == 0:
        return RatK.one(field)
    r, p = field.r, field.p
    if s == 0:
        return RatK.zero(field)  # r^d = 0 mod p for d >= 1
    if s < 0:
        k = -s
        if d * (r - 1) > k:
            return RatK.zero(field)
        total = PolyA.zero(field)
        for k_top, parts in _nonpos_compositions(k, d, r - 1):
            coef = _multinomial_mod(k, (k_top,) + parts, p)
            if coef:
                exp = k_top * d + sum(i * m for i, m in enumerate(parts))
                total = total + PolyA(field, (0,) * exp + (coef,))
        if d % 2:
            total = -total
        return RatK(total)
    # s >= 1: coefficient extraction from the geometric series
    C = Carlitz.get(field)
    j = s - 1
    ebar = {}
    i = 0
    while r ** i <= j and i <= d:
        li = C.L(d - i)
        for _ in range(i):
            li = _frobenius_r(li)
        ebar[r ** i] = RatK(PolyA.one(field), C.D(i) * li)
        i += 1
    # G = sum_k ebar^k truncated at degree j, as dict {exp: RatK}
    total = {0: RatK.one(field)}
    cur = {0: RatK.one(field)}
    for _ in range(j):
        nxt: dict = {}
        for e1, c1 in cur.items():
            for e2, c2 in ebar.items():
                e = e1 + e2
                if e <= j:
                    nxt[e] = nxt.get(e, RatK.zero(field)) + c1 * c2
        if not nxt:
            break
        for e, c in nxt.items():
            total[e] = total.get(e, RatK.zero(field)) + c
        cur = nxt
    coeff = total.get(j, RatK.zero(field))
    return coeff * RatK(PolyA.one(field), C.L(d))


def power_sum_enumerated(field: FieldDesc, d: int, s: int) -> RatK:
    """Brute-force S_d(s) by summation over enumerate_monic(d); the
    independent oracle for power_sum."""
    if d < 0:
        return RatK.zero(field)
    total = RatK.zero(field)
    for a in enumerate_monic(field, d):
        total = total + (RatK(PolyA.one(field), a ** s) if s >= 0
                         else RatK(a ** (-s)))
    return total


def chain_sum_lt(d: int, index, hd, zero, one):
    """Sum over d > d_1 > ... > d_m >= 0 of prod_j hd(d_j, s_j); returns
    `one` for the empty index (any d)."""
    index = tuple(index)
    if not index:
        return one
    if d <= 0 or len(index) > d:
        return zero
    m = len(index)
    cur = [hd(e, index[m - 1]) for e in range(d)]
    for j in range(m - 2, -1, -1):
        pref = zero
        nxt = []
        for e in range(d):
            nxt.append(hd(e, index[j]) * pref if e > 0 else zero)
            pref = pref + cur[e]
        cur = nxt
    total = zero
    for v in cur:
        total = total + v
    return total


def chain_sum_at(d: int, index, hd, zero, one):
    """Sum over d = d_1 > ... > d_m >= 0; Kronecker delta for the empty
    index."""
    index = tuple(index)
    if not index:
        return one if d == 0 else zero
    if d < 0 or len(index) > d + 1:
        return zero
    head = hd(d, index[0])
    return head * chain_sum_lt(d, index[1:], hd, zero, one)


@functools.lru_cache(maxsize=None)
def multi_power_sum(field: FieldDesc, d: int, index: tuple) -> RatK:
    """S_d(s1, ..., sm); S_d(empty) = delta_{d,0}."""
    z, o = RatK.zero(field), RatK.one(field)
    return chain_sum_at(d, index, lambda e, s: power_sum(field, e, s), z, o)


@functools.lru_cache(maxsize=None)
def truncated_sum(field: FieldDesc, d: int, index: tuple) -> RatK:
    """S_{<d}(s1, ..., sm); the empty index follows the literal summation
    convention (1 for d >= 1, 0 for d <= 0)."""
    index = tuple(index)
    if not index:
        return RatK.one(field) if d >= 1 else RatK.zero(field)
    z, o = RatK.zero(field), RatK.one(field)
    return chain_sum_lt(d, index, lambda e, s: power_sum(field, e, s), z, o)


# ---------------------------------------------------------------------------
# certified truncation for zeta values


def nonpos_vanish_bound(field: FieldDesc, s: int) -> int:
    """Smallest D0 with S_d(s) = 0 for all d >= D0 (s <= 0), from the
    character-sum factorization (each of the d slots needs >= r-1)."""
    if s > 0:
        raise ValueError("only for non-positive s")
    return (-s) // (field.r - 1) + 1


def power_sum_val_lower(field: FieldDesc, d: int, s: int):
    """Certified lower bound for v_inf(S_d(s)) in 1/theta units; None means
    the sum is exactly zero."""
    if d == 0:
        return 0
    if s >= 1:
        return max(s * d, deg_L(field, d))
    if d >= nonpos_vanish_bound(field, s):
        return None
    return s * d  # = -d|s|


def zeta_cutoff(field: FieldDesc, index, prec_theta: int) -> int:
    """Smallest D such that every omitted chain (d_1 >= D) of S(index) is
    certified below 1/theta-precision prec_theta (or exactly zero)."""
    index = tuple(index)
    if not index:
        return 1
    s1 = index[0]
    if s1 <= 0:
        return nonpos_vanish_bound(field, s1)
    neg = 0
    for s in index[1:]:
        if s <= 0:
            neg += (nonpos_vanish_bound(field, s) - 1) * (-s)
    for D in range(1, _MAX_CUTOFF):
        lb = power_sum_val_lower(field, D, s1)
        if lb is not None and lb - neg >= prec_theta:
            return D
    raise PrecisionNotCertified(
        f"no certified cutoff below {_MAX_CUTOFF} for {index} at {prec_theta}")


def zeta_thakur(field: FieldDesc, index, prec: int,
                lfield: LaurentField | None = None) -> LaurentElem:
    """zeta_A(index) as a Laurent element accurate through exponent
    prec - 1 (in the target field's uniformizer units)."""
    lfield = lfield or LaurentField.k_infinity(field)
    prec_theta = frac_ceil(Fraction(prec, lfield.e_ram))
    D = zeta_cutoff(field, index, prec_theta)
    value = truncated_sum(field, max(D, 1), tuple(index))
    return lfield.from_ratk(value, prec)


# ---------------------------------------------------------------------------
# bracket providers


class _ProviderBase:
    """Chain-sum engine over a pluggable bracket.  Subclasses supply ring
    constants and the degree-e power sums of inverse brackets."""

    #: providers whose bracket sends 1 to the ring unit may shortcut e = 0
    unit_bracket_one = True

    def __init__(self, field: FieldDesc, d: int):
        self.field = field
        self.d = d
        self._hd_cache: dict = {}
        self._word_cache: dict = {}

    @property
    def r(self) -> int:
        return self.field.r

    def hd(self, e: int, s: int):
        key = (e, s)
        got = self._hd_cache.get(key)
        if got is None:
            if s == 0:
                # sum of [a]^0 over the r^e monic a, as a prime-field count
                got = self.one() if e == 0 else self.zero()
            elif e == 0 and self.unit_bracket_one:
                got = self.one()  # the single bracket [1] = 1
            else:
                got = self._hd_impl(e, s)
            self._hd_cache[key] = got
        return got

    def H_lt(self, d: int, index) -> object:
        key = (d, tuple(index))
        got = self._word_cache.get(key)
        if got is None:
            got = chain_sum_lt(d, index, self.hd, self.zero(), self.one())
            self._word_cache[key] = got
        return got

    def H_at(self, d: int, index) -> object:
        return chain_sum_at(d, index, self.hd, self.zero(), self.one())

    def word(self, w):
        return self.H_lt(self.d, tuple(w))

    def eq(self, a, b) -> bool:
        return a == b

    def zero(self):
        raise NotImplementedError

    def one(self):
        raise NotImplementedError

    def _hd_impl(self, e, s):
        raise NotImplementedError


class IdentityBracket(_ProviderBase):
    """a -> a in K; realizes Thakur's power sums."""

    def zero(self):
        return RatK.zero(self.field)

    def one(self):
        return RatK.one(self.field)

    def _hd_impl(self, e, s):
        return power_sum(self.field, e, s)


class FormalUContext:
    """Shared tables for formal-u values N / Q^k with Q the product of all
    brackets of monics of degree < d."""

    _cache: dict = {}

    @classmethod
    def get(cls, field: FieldDesc, d: int) -> "FormalUContext":
        key = (id(field), d)
        inst = cls._cache.get(key)
        if inst is None:
            inst = cls._cache[key] = cls(field, d)
        return inst

    def __init__(self, field: FieldDesc, d: int):
        self.field = field
        self.d = d
        C = Carlitz.get(field)
        self.monics = [a for e in range(d) for a in enumerate_monic(field, e)]
        self.brackets = {a: C.u_bracket(a) for a in self.monics}
        self.Q = _balanced_product(list(self.brackets.values()), UPoly.one(field))
        self._qpow = {0: UPoly.one(field), 1: self.Q}
        self._cof = {a: self.Q.exact_div(b) for a, b in self.brackets.items()}
        self._pow_cache: dict = {}

    def qpow(self, k: int) -> UPoly:
        got = self._qpow.get(k)
        if got is None:
            got = self._qpow[k] = self.qpow(k - 1) * self.Q
        return got

    def bracket_power_sum(self, e: int, s: int) -> "ULocalValue":
        """sum over monic a of degree e of [a]_u^{-s}, localized."""
        total = None
        for a in enumerate_monic(self.field, e):
            base = self._cof[a] if s >= 1 else self.brackets[a]
            k = abs(s)
            key = (a, s)
            powed = self._pow_cache.get(key)
            if powed is None:
                powed = self._pow_cache[key] = base ** k
            total = powed if total is None else total + powed
        return ULocalValue(self, total, s if s >= 1 else 0)


class ULocalValue:
    """A value N / Q^k in K(u), with N a u-polynomial over A."""

    __slots__ = ("ctx", "num", "k")

    def __init__(self, ctx: FormalUContext, num: UPoly, k: int):
        if num.is_zero():
            k = 0
        self.ctx = ctx
        self.num = num
        self.k = k

    def _align(self, k: int) -> UPoly:
        if k == self.k:
            return self.num
        return self.num * self.ctx.qpow(k - self.k)

    def __add__(self, other):
        if isinstance(other, ULocalValue):
            k = max(self.k, other.k)
            return ULocalValue(self.ctx, self._align(k) + other._align(k), k)
        return NotImplemented

    __radd__ = __add__

    def __neg__(self):
        return ULocalValue(self.ctx, -self.num, self.k)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, ULocalValue):
            return ULocalValue(self.ctx, self.num * other.num, self.k + other.k)
        if isinstance(other, int):
            return ULocalValue(self.ctx, self.num * other, self.k)
        return NotImplemented

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, ULocalValue):
            return NotImplemented
        k = max(self.k, other.k)
        return self._align(k) == other._align(k)

    def is_zero(self):
        return self.num.is_zero()

    def __repr__(self):
        return f"({self.num!r}) / Q^{self.k}"


class FormalUBracket(_ProviderBase):
    """a -> [a]_u in K[u]; values are exact rational functions localized at
    the product of all brackets in range."""

    def __init__(self, field: FieldDesc, d: int):
        super().__init__(field, d)
        self.ctx = FormalUContext.get(field, d)

    def zero(self):
        return ULocalValue(self.ctx, UPoly.zero(self.field), 0)

    def one(self):
        return ULocalValue(self.ctx, UPoly.one(self.field), 0)

    def _hd_impl(self, e, s):
        return self.ctx.bracket_power_sum(e, s)


class CycloUBracket(_ProviderBase):
    """a -> [a]_{lambda_n} in the cyclotomic ring."""

    def __init__(self, ring: CycloRing, d: int):
        super().__init__(ring.field, d)
        self.ring = ring
        monics = [a for e in range(d) for a in enumerate_monic(ring.field, e)]
        self.brackets = {a: ring.bracket(a) for a in monics}
        try:
            invs = ring.batch_inverse([self.brackets[a] for a in monics])
        except NotInvertible as exc:
            raise BracketNotInvertible(str(exc)) from exc
        self.inverses = dict(zip(monics, invs))

    def zero(self):
        return self.ring.zero()

    def one(self):
        return self.ring.one()

    def _hd_impl(self, e, s):
        total = self.zero()
        for a in enumerate_monic(self.field, e):
            base = self.inverses[a] if s >= 1 else self.brackets[a]
            total = total + base ** abs(s)
        return total


class LaurentUBracket(_ProviderBase):
    """a -> [a]_u evaluated at a Laurent point (e.g. a torsion generator)."""

    def __init__(self, field: FieldDesc, u: LaurentElem, d: int, prec: int):
        super().__init__(field, d)
        self.u = u
        self.prec = prec
        self.carlitz = Carlitz.get(field)
        self.lfield = u.field
        self._vals: dict = {}
        self._invs: dict = {}
        for e in range(d):
            for a in enumerate_monic(field, e):
                val = self.carlitz.eval_bracket(a, u)
                if val.is_zero_to_prec():
                    raise BracketNotInvertible(f"[{a!r}]_u vanishes to precision")
                self._vals[a] = val
                self._invs[a] = val.inverse(prec - val.valuation())

    def zero(self):
        return self.lfield.zero(self.prec)

    def one(self):
        return self.lfield.one()

    def eq(self, a, b):
        finite = [x.prec for x in (a, b) if x.prec is not None]
        if not finite:
            return (a - b).is_zero_to_prec()
        return a.eq_to_prec(b, min(finite))

    def _hd_impl(self, e, s):
        total = self.zero()
        for a in enumerate_monic(self.field, e):
            base = self._invs[a] if s >= 1 else self._vals[a]
            total = total + base ** abs(s)
        return total


class XBracket(_ProviderBase):
    """a -> a + a^r X in truncated power series over K (the Hasse-Schmidt
    derivation bracket).  Note [1]_X = 1 + X, not 1."""

    unit_bracket_one = False

    def __init__(self, field: FieldDesc, d: int, order: int):
        super().__init__(field, d)
        self.order = order

    def zero(self):
        return KSeries.zero(self.field, self.order)

    def one(self):
        return KSeries.one(self.field, self.order)

    def bracket(self, a: PolyA) -> KSeries:
        return KSeries(self.field, [RatK(a), RatK(a ** self.field.r)], self.order)

    def _hd_impl(self, e, s):
        total = self.zero()
        for a in enumerate_monic(self.field, e):
            total = total + self.bracket(a) ** (-s)
        return total


def harmonic_H(d: int, index, bracket: _ProviderBase):
    """H_d(index) under the given bracket provider."""
    return bracket.H_at(d, tuple(index))


def harmonic_H_lt(d: int, index, bracket: _ProviderBase):
    """H_{<d}(index) under the given bracket provider."""
    return bracket.H_lt(d, tuple(index))


# ---------------------------------------------------------------------------
# the finite Euler-Carlitz formula and the two limit theorems


def finite_euler_carlitz_check(n: PolyA, s: int) -> bool:
    """Exact check of H_{<deg n}(s; lambda_n) / (n lambda_n)^s =
    dBC_s(n) / Gamma_{s+1} inside the cyclotomic ring."""
    field = n.field
    r = field.r
    if s < 1 or s % (r - 1):
        raise ValueError("s must be a positive multiple of r - 1")
    ring = CycloRing(n)
    d = n.deg
    ev = CycloUBracket(ring, d)
    H = ev.H_lt(d, (s,))
    C = Carlitz.get(field)
    lam = ring.lam()
    lhs = H * RatK(C.gamma(s))
    rhs = ((lam * n) ** s) * C.degenerate_bernoulli_carlitz(s, n)
    return lhs == rhs


def analytic_limit_bound(field: FieldDesc, d: int) -> Fraction:
    """log_r of the convergence bound r^{r(-1 + 1/(r-1)) - d + 1 - 1/(r-1)}."""
    r = field.r
    return r * (Fraction(1, r - 1) - 1) - d + 1 - Fraction(1, r - 1)


def analytic_limit_check(n: PolyA, index, prec: int):
    """Compare H_{<deg n}(index; lambda_n) against zeta_A(index) in L.

    Returns (defect, bound, ok): the defect is the exact log_r of the
    difference (None when the difference vanishes to working precision),
    the bound is log_r of the proof's estimate, and ok reports
    defect <= bound, certified at w-precision prec."""
    field = n.field
    index = tuple(index)
    if any(s < 1 for s in index):
        raise ValueError("the analytic-limit check takes positive indices")
    d = n.deg
    C = Carlitz.get(field)
    work = prec + 8
    lam = C.torsion_generator(n, work)
    ev = LaurentUBracket(field, lam, d, work)
    H = ev.H_lt(d, index)
    z = zeta_thakur(field, index, work, lfield=C.period_field)
    diff = H - z
    bound = analytic_limit_bound(field, d)
    r1 = field.r - 1
    if diff.is_zero_to_prec():
        avail = diff.prec
        if avail is None or Fraction(-avail, r1) <= bound:
            return None, bound, True
        raise PrecisionNotCertified(
            f"difference vanishes to w-precision {avail}, above the bound")
    if diff.prec is not None and diff.valuation() >= diff.prec:
        raise PrecisionNotCertified("difference not resolved at this precision")
    defect = diff.abs_exponent()
    return defect, bound, defect <= bound


@dataclass(frozen=True)
class FiniteMZVVector:
    """Components (v, S_{<deg v}(index) mod v) over monic irreducibles of
    degree <= D_max."""
    index: tuple
    entries: tuple  # of (PolyA, FvElem)

    def values(self):
        return [val for _, val in self.entries]

    def all_zero(self) -> bool:
        return all(val.is_zero() for _, val in self.entries)

    def __eq__(self, other):
        return (isinstance(other, FiniteMZVVector)
                and [v.coeffs for v, _ in self.entries]
                == [v.coeffs for v, _ in other.entries]
                and self.values() == other.values())


def finite_mzv(field: FieldDesc, index, D_max: int) -> FiniteMZVVector:
    """Direct route: S_{<deg v}(index) mod v componentwise."""
    from .fields import ResidueField
    index = tuple(index)
    entries = []
    for v in irreducibles_up_to(field, D_max):
        val = truncated_sum(field, v.deg, index)
        entries.append((v, ResidueField(v).reduce(val)))
    return FiniteMZVVector(index, tuple(entries))


def finite_mzv_via_torsion(field: FieldDesc, index, D_max: int) -> FiniteMZVVector:
    """Torsion route: H_{<deg v}(index; lambda_v) mod lambda_v."""
    index = tuple(index)
    entries = []
    for v in irreducibles_up_to(field, D_max):
        ring = CycloRing(v)
        ev = CycloUBracket(ring, v.deg)
        H = ev.H_lt(v.deg, index)
        entries.append((v, reduce_at_zero(H, v)))
    return FiniteMZVVector(index, tuple(entries))


# ---------------------------------------------------------------------------
# t-expansion of zeta_u at the infinite cusp


class _TSeries:
    """Power series in t over A, truncated at a fixed order."""

    __slots__ = ("poly", "order")

    def __init__(self, poly: UPoly, order: int):
        if poly.udeg >= order:
            poly = UPoly(poly.field, poly.arr[:, :order, :])
        self.poly = poly
        self.order = order

    def __add__(self, other):
        return _TSeries(self.poly + other.poly, min(self.order, other.order))

    def __mul__(self, other):
        return _TSeries(self.poly * other.poly, min(self.order, other.order))


def _tseries_inverse(poly: UPoly, order: int) -> UPoly:
    """Inverse of a unit of A[[t]] with constant term 1, to given order,
    by Newton iteration x <- x(2 - ax)."""
    f = poly.field
    out = UPoly.one(f)
    two = UPoly.one(f) + UPoly.one(f)
    known = 1
    while known < order:
        known = min(order, 2 * known)
        cur = UPoly(f, poly.arr[:, :known, :])
        err = UPoly(f, (cur * out).arr[:, :known, :])
        out = UPoly(f, (out * (two - err)).arr[:, :known, :])
    return out


def t_expansion(field: FieldDesc, index, terms: int) -> list[PolyA]:
    """Coefficients c_0, ..., c_{terms-1} of the t-expansion of
    zeta_u(index; z) at t = 1/u; all coefficients lie in A by
    construction, the omitted chains start at t-order >= terms."""
    index = tuple(index)
    if not index or any(s < 1 for s in index):
        raise ValueError("the t-expansion needs a non-empty positive index")
    r = field.r
    s1 = index[0]
    D = 1
    while s1 * (r ** D - 1) < terms:
        D += 1
    C = Carlitz.get(field)
    zero = _TSeries(UPoly.zero(field), terms)
    one = _TSeries(UPoly.one(field), terms)

    inv_units: dict = {}
    for e in range(D):
        for a in enumerate_monic(field, e):
            cs = C.coeffs(a)
            rows = [PolyA.zero(field)] * (r ** e - r ** 0 + 1)
            for i, c in enumerate(cs):
                rows[r ** e - r ** i] = c  # unit part: 1 + sum [a,i] t^{r^e - r^i}
            unit = UPoly.from_coeffs(field, rows)
            inv_units[a] = _tseries_inverse(unit, terms)

    hd_cache: dict = {}

    def hd(e, s):
        key = (e, s)
        got = hd_cache.get(key)
        if got is None:
            shift = s * (r ** e - 1)
            if shift >= terms:
                got = zero
            else:
                acc = UPoly.zero(field)
                for a in enumerate_monic(field, e):
                    powed = inv_units[a]
                    total = UPoly.one(field)
                    k = s
                    while k:
                        if k & 1:
                            total = UPoly(field, (total * powed).arr[:, :terms - shift, :])
                        powed = UPoly(field, (powed * powed).arr[:, :terms - shift, :])
                        k >>= 1
                    acc = acc + total
                got = _TSeries(acc.shift_u(shift), terms)
            hd_cache[key] = got
        return got

    total = chain_sum_lt(D, index, hd, zero, one)
    out = [total.poly.coefficient(k) for k in range(terms)]
    return out
