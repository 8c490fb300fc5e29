"""The Carlitz module and its attendant constants.

One `Carlitz` toolkit instance per base field caches the coefficient
tables [a,i], the factorials D_i / L_i / Gamma_{n+1}, their u-analogs,
and the Carlitz cyclotomic polynomials.  Caches are filled on demand and
never mutated afterwards, so sharing a toolkit between workers is safe.
"""

from __future__ import annotations

import functools

from .errors import NotMonic, PrecisionTooLow, ZeroInput
from .fields import FieldDesc, PolyA, RatK
from .laurent import LaurentElem, LaurentField
from .upoly import UPoly


def _frobenius_r(a: PolyA) -> PolyA:
    """a^r computed via the r-power Frobenius (coefficientwise c^r,
    exponents scaled by r)."""
    f = a.field
    if a.is_zero():
        return a
    out = [0] * (a.deg * f.r + 1)
    from .fields import pow_enc
    for i, c in enumerate(a.coeffs):
        if c:
            out[i * f.r] = pow_enc(f, c, f.r)
    return PolyA(f, out)


class Carlitz:
    """Per-field Carlitz module toolkit with immutable-after-fill caches."""

    _instances: dict = {}

    @classmethod
    def get(cls, field: FieldDesc) -> "Carlitz":
        inst = cls._instances.get(id(field))
        if inst is None:
            inst = cls._instances[id(field)] = cls(field)
        return inst

    def __init__(self, field: FieldDesc):
        self.field = field
        self._D = [PolyA.one(field)]
        self._L = [PolyA.one(field)]
        self._coeffs: dict = {}
        self._cyclo: dict = {}
        self._Du: dict = {}
        self._period_cache: dict = {}

    # --- factorial tables ----------------------------------------------------
    def D(self, i: int) -> PolyA:
        """D_i = prod_{j<i} (theta^{r^i} - theta^{r^j})."""
        f = self.field
        th = PolyA.gen(f)
        while len(self._D) <= i:
            k = len(self._D)
            frob = _frobenius_r(self._D[k - 1])
            theta_rk = PolyA(f, (0,) * (f.r ** k) + (1,))
            self._D.append((theta_rk - th) * frob)
        return self._D[i]

    def L(self, i: int) -> PolyA:
        """L_i = prod_{j=1..i} (theta - theta^{r^j})."""
        f = self.field
        th = PolyA.gen(f)
        while len(self._L) <= i:
            k = len(self._L)
            theta_rk = PolyA(f, (0,) * (f.r ** k) + (1,))
            self._L.append(self._L[k - 1] * (th - theta_rk))
        return self._L[i]

    def gamma(self, n: int) -> PolyA:
        """Gamma_{n+1} = prod_d D_d^{n_d} over the base-r digits of n."""
        f = self.field
        out = PolyA.one(f)
        d = 0
        while n:
            n, nd = divmod(n, f.r)
            if nd:
                out = out * self.D(d) ** nd
            d += 1
        return out

    # --- Carlitz coefficients and brackets ------------------------------------
    def coeffs(self, a: PolyA) -> tuple[PolyA, ...]:
        """([a,0], ..., [a,deg a]) with C_a(X) = sum [a,i] X^{r^i}."""
        key = a.coeffs
        got = self._coeffs.get(key)
        if got is not None:
            return got
        f = self.field
        if a.is_zero():
            out: tuple[PolyA, ...] = ()
        else:
            # Horner over theta: [theta*b + c, i] = theta[b,i] + [b,i-1]^r + c*d_{i0}
            th = PolyA.gen(f)
            cur = [PolyA.const(f, a.lc())]
            for k in range(a.deg - 1, -1, -1):
                c = a.coeffs[k]
                nxt = [th * cur[0] + PolyA.const(f, c)]
                for i in range(1, len(cur) + 1):
                    t = th * cur[i] if i < len(cur) else PolyA.zero(f)
                    nxt.append(t + _frobenius_r(cur[i - 1]))
                while len(nxt) > 1 and nxt[-1].is_zero():
                    nxt.pop()
                cur = nxt
            out = tuple(cur)
        self._coeffs[key] = out
        return out

    def carlitz_poly(self, a: PolyA) -> UPoly:
        """C_a(X) as a u-polynomial (X = u)."""
        f = self.field
        cs = self.coeffs(a)
        if not cs:
            return UPoly.zero(f)
        rows = [PolyA.zero(f)] * (f.r ** (len(cs) - 1) + 1)
        for i, c in enumerate(cs):
            rows[f.r ** i] = c
        return UPoly.from_coeffs(f, rows)

    def u_bracket(self, a: PolyA) -> UPoly:
        """[a]_u = C_a(u)/u; rejects a = 0 to surface index errors."""
        if a.is_zero():
            raise ZeroInput("the u-bracket of 0 is not used; got a = 0")
        f = self.field
        cs = self.coeffs(a)
        rows = [PolyA.zero(f)] * (f.r ** (len(cs) - 1) - 1 + 1)
        for i, c in enumerate(cs):
            rows[f.r ** i - 1] = c
        return UPoly.from_coeffs(f, rows)

    # --- u-factorials -----------------------------------------------------------
    def D_u(self, d: int) -> UPoly:
        """D_{u,d} = prod over monic a of degree d of [a]_u."""
        got = self._Du.get(d)
        if got is not None:
            return got
        from .fields import enumerate_monic
        factors = [self.u_bracket(a) for a in enumerate_monic(self.field, d)]
        out = _balanced_product(factors, UPoly.one(self.field))
        self._Du[d] = out
        return out

    def gamma_u(self, n: int) -> UPoly:
        f = self.field
        out = UPoly.one(f)
        d = 0
        while n:
            n, nd = divmod(n, f.r)
            if nd:
                out = out * self.D_u(d) ** nd
            d += 1
        return out

    # --- divisors, Moebius, cyclotomics -------------------------------------------
    def mobius(self, a: PolyA) -> int:
        fac = a.monic().factor()
        if any(e > 1 for e in fac.values()):
            return 0
        return -1 if len(fac) % 2 else 1

    def monic_divisors(self, a: PolyA) -> list[PolyA]:
        fac = a.monic().factor()
        divs = [PolyA.one(self.field)]
        for v, e in fac.items():
            divs = [d * v ** k for d in divs for k in range(e + 1)]
        return sorted(divs, key=lambda d: d.index_key())

    def cyclotomic(self, a: PolyA) -> UPoly:
        """a-th Carlitz cyclotomic polynomial, by Moebius inversion of
        C_a(X) = prod_{b | a} Phi_b(X)."""
        if not a.is_monic():
            raise NotMonic("cyclotomic polynomials are indexed by monic a")
        key = a.coeffs
        got = self._cyclo.get(key)
        if got is not None:
            return got
        f = self.field
        num = UPoly.one(f)
        den = UPoly.one(f)
        for b in self.monic_divisors(a):
            mu = self.mobius(a.exact_div(b))
            if mu == 1:
                num = num * self.carlitz_poly(b)
            elif mu == -1:
                den = den * self.carlitz_poly(b)
        out = num.exact_div(den)
        self._cyclo[key] = out
        return out

    # --- the infinite place --------------------------------------------------------
    @property
    def kinf(self) -> LaurentField:
        return LaurentField.k_infinity(self.field)

    @property
    def period_field(self) -> LaurentField:
        return LaurentField.period_field(self.field)

    def period(self, prec: int) -> LaurentElem:
        """The Carlitz period in L, known through w-exponent prec - 1.

        pi~ = ((-theta)^{1/(r-1)})^r * prod_{i>=1} (1 - theta^{1-r^i})^{-1},
        with the fixed branch (-theta)^{1/(r-1)} = c * w^{-1}.
        """
        r = self.field.r
        if prec <= -r:
            raise ValueError("precision must exceed the leading exponent -r")
        got = self._period_cache.get(prec)
        if got is not None:
            return got
        Lf = self.period_field
        head = Lf.root_of_minus_theta() ** r  # lead exponent -r
        rel = prec + r  # unit-part terms needed
        prod = Lf.one().truncate(rel)
        i = 1
        while (r - 1) * (r ** i - 1) < rel:
            # 1 - theta^{1-r^i} = 1 - w^{(r-1)(r^i-1)}
            fac = Lf.one() + Lf.monomial(Lf.coeff.neg(1), (r - 1) * (r ** i - 1))
            prod = (prod * fac).truncate(rel)
            i += 1
        out = head * prod.inverse(rel)
        self._period_cache[prec] = out
        return out

    def carlitz_exp(self, x: LaurentElem, prec: int) -> LaurentElem:
        """Truncation of exp_C at a Laurent argument, certified so the first
        omitted term lies at or above the target precision."""
        Lf = x.field
        v = x.valuation()
        e_ram = Lf.e_ram
        out = Lf.zero(prec)
        i = 0
        while True:
            term_val = (self.field.r ** i) * (v + e_ram * i)
            # once positive, term valuations are strictly increasing in i
            if term_val >= max(prec, 1):
                break
            di = Lf.from_poly(self.D(i))
            out = out + (x ** (self.field.r ** i)) * di.inverse(prec - term_val - di.lead + 1)
            i += 1
        return out.truncate(prec)

    def torsion_generator(self, n: PolyA, prec: int) -> LaurentElem:
        """lambda_n = exp_C(pi~ / n) in L, with defining checks certified."""
        if not n.is_monic() or n.deg < 1:
            raise NotMonic("n must be monic and nonconstant")
        r = self.field.r
        d = n.deg
        Lf = self.period_field
        # working precision with headroom for the C_n(lambda) = 0 check
        work = prec + (r ** d) + 8
        pi = self.period(work)
        arg = pi * Lf.from_poly(n).inverse(work + r)
        lam = self.carlitz_exp(arg, work)
        expected_v = (r - 1) * (d - 1) - 1
        if lam.is_zero_to_prec() or lam.valuation() != expected_v:
            raise PrecisionTooLow("torsion generator valuation check failed")
        chk = self.eval_carlitz(n, lam)
        if not chk.is_zero_to_prec():
            raise PrecisionTooLow("C_n(lambda) = 0 not certified at this precision")
        return lam.truncate(prec)

    def eval_carlitz(self, a: PolyA, x):
        """C_a evaluated at an element of any ring with +, *, ** (int)."""
        if isinstance(x, LaurentElem):
            one = x.field.one()
        else:
            one = RatK.one(self.field)
        return self.carlitz_poly(a).evaluate(x, one)

    def eval_bracket(self, a: PolyA, x):
        """[a]_u evaluated at a ring element (the bracket polynomial, so the
        value at x = 0 is a itself)."""
        if isinstance(x, LaurentElem):
            one = x.field.one()
        else:
            one = RatK.one(self.field)
        return self.u_bracket(a).evaluate(x, one)

    # --- Bernoulli-Carlitz numbers ----------------------------------------------
    @functools.lru_cache(maxsize=None)
    def _bc_inv_series(self, nmax: int) -> tuple:
        """Coefficients of (exp_C(X)/X)^{-1} through X^nmax."""
        f = self.field
        coeffs = [RatK.zero(f) for _ in range(nmax + 1)]
        i = 0
        while f.r ** i - 1 <= nmax:
            coeffs[f.r ** i - 1] = RatK(PolyA.one(f), self.D(i))
            i += 1
        return tuple(_series_inverse_ratk(coeffs, nmax + 1))

    def bernoulli_carlitz(self, nn: int) -> RatK:
        """BC_n from X / exp_C(X) = sum BC_n / Gamma_{n+1} X^n."""
        inv = self._bc_inv_series(nn)
        return RatK(self.gamma(nn)) * inv[nn]

    def degenerate_bernoulli_carlitz(self, nn: int, n: PolyA) -> RatK:
        """dBC_n(a) from X / C_a(X/a) = sum dBC_n(a) / Gamma_{n+1} X^n."""
        if n.is_zero():
            raise ZeroInput("degenerate Bernoulli-Carlitz numbers need a != 0")
        f = self.field
        cs = self.coeffs(n)
        coeffs = [RatK.zero(f) for _ in range(nn + 1)]
        for i, c in enumerate(cs):
            k = f.r ** i - 1
            if k <= nn:
                coeffs[k] = RatK(c, n ** (f.r ** i))
        inv = _series_inverse_ratk(coeffs, nn + 1)
        return RatK(self.gamma(nn)) * inv[nn]


def _balanced_product(factors, one):
    if not factors:
        return one
    work = list(factors)
    while len(work) > 1:
        nxt = [work[i] * work[i + 1] for i in range(0, len(work) - 1, 2)]
        if len(work) % 2:
            nxt.append(work[-1])
        work = nxt
    return work[0]


def _series_inverse_ratk(coeffs, n: int):
    """Inverse of a power series over K with unit constant term; n terms."""
    f = coeffs[0].field
    inv0 = coeffs[0].inverse()
    out = [inv0]
    for k in range(1, n):
        acc = RatK.zero(f)
        for j in range(1, min(k, len(coeffs) - 1) + 1):
            if not coeffs[j].is_zero():
                acc = acc + coeffs[j] * out[k - j]
        out.append(-(inv0 * acc))
    return out
