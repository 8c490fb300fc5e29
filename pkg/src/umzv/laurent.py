"""Precision-tracked Laurent series fields.

Two concrete fields are used: K_inf = F_r((1/theta)) with uniformizer
1/theta, and the ramified extension L with uniformizer w satisfying
w^(r-1) = 1/theta, which contains the Carlitz period.  For odd
characteristic L carries coefficients in F_{r^2} so that an (r-1)-st
root of -theta exists; the chosen root is c*w^(-1) where c is the
smallest encoded solution of c^(r-1) = -1.

Precision semantics: a LaurentElem with prec = P has known coefficients
exactly for exponents < P; prec = None means the element is exact.
Comparisons "to precision T" require both operands known through T.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import ZeroToPrecision
from .fields import FieldDesc, GF, PolyA, RatK, _mul_coeffs, frac_ceil, pow_enc


class LaurentField:
    """A Laurent series field over a finite coefficient field, with a named
    uniformizer w such that w^e_ram = 1/theta."""

    _cache: dict = {}

    def __init__(self, base: FieldDesc, coeff: FieldDesc, name: str,
                 e_ram: int, root_constant: int | None):
        self.base = base
        self.coeff = coeff
        self.uniformizer_name = name
        self.e_ram = e_ram
        self.root_constant = root_constant
        self.embed_table = base.embedding_into(coeff)

    @classmethod
    def k_infinity(cls, field: FieldDesc) -> "LaurentField":
        key = ("kinf", id(field))
        if key not in cls._cache:
            cls._cache[key] = cls(field, field, "1/theta", 1, None)
        return cls._cache[key]

    @classmethod
    def period_field(cls, field: FieldDesc) -> "LaurentField":
        """The ramified field L containing the Carlitz period (for r = 2 it
        is K_inf itself, but kept as a separate descriptor carrying the
        root constant)."""
        key = ("period", id(field))
        if key not in cls._cache:
            r, p = field.r, field.p
            if p == 2:
                coeff = field
            else:
                coeff = GF(r * r)
            minus_one = coeff.neg(1)
            c = next(x for x in range(1, coeff.r)
                     if pow_enc(coeff, x, r - 1) == minus_one)
            cls._cache[key] = cls(field, coeff, "w", r - 1, c)
        return cls._cache[key]

    # element constructors ---------------------------------------------------
    def zero(self, prec: int | None = None) -> "LaurentElem":
        return LaurentElem(self, 0, (), prec)

    def one(self) -> "LaurentElem":
        return LaurentElem(self, 0, (1,), None)

    def monomial(self, c_enc: int, exp: int, prec: int | None = None):
        return LaurentElem(self, exp, (c_enc,), prec)

    def theta(self) -> "LaurentElem":
        return LaurentElem(self, -self.e_ram, (1,), None)

    def from_poly(self, a: PolyA) -> "LaurentElem":
        """Exact image of a polynomial in theta."""
        if a.field is not self.base:
            raise ValueError("field mismatch")
        if a.is_zero():
            return self.zero(None)
        e = self.e_ram
        n = a.deg
        coeffs = [0] * (n * e + 1)
        for i, c in enumerate(a.coeffs):
            coeffs[(n - i) * e] = self.embed_table[c]
        return LaurentElem(self, -n * e, tuple(coeffs), None)

    def from_ratk(self, x: RatK, prec: int) -> "LaurentElem":
        """Laurent expansion of x accurate through exponent prec - 1."""
        if x.is_zero():
            return self.zero(prec)
        num = self.from_poly(x.num)
        den = self.from_poly(x.den)
        inv = den.inverse(prec - num.lead)
        return (num * inv).truncate(prec)

    def from_kinf(self, x: "LaurentElem", other: "LaurentField") -> "LaurentElem":
        """Reinterpret an element of K_inf inside this (ramified) field."""
        if other.e_ram != 1 or other.base is not self.base:
            raise ValueError("source must be K_inf over the same base")
        e = self.e_ram
        coeffs = [0] * (e * (len(x.coeffs) - 1) + 1) if x.coeffs else []
        for i, c in enumerate(x.coeffs):
            coeffs[i * e] = self.embed_table[c]
        prec = None if x.prec is None else x.prec * e
        return LaurentElem(self, x.lead * e, tuple(coeffs), prec)

    def root_of_minus_theta(self) -> "LaurentElem":
        """(-theta)^(1/(r-1)) := c * w^(-1); requires the ramified model."""
        if self.root_constant is None:
            raise ValueError("only defined on the period field L")
        return self.monomial(self.root_constant, -1)

    def __repr__(self):
        return f"Laurent({self.coeff!r}, w={self.uniformizer_name}, e_ram={self.e_ram})"


def _min_prec(a, b):
    if a is None:
        return b
    if b is None:
        return a
    return min(a, b)


class LaurentElem:
    """A precision-tracked Laurent series in the field's uniformizer."""

    __slots__ = ("field", "lead", "coeffs", "prec")

    def __init__(self, field: LaurentField, lead: int, coeffs, prec):
        coeffs = list(coeffs)
        # strip known-zero head and tail
        while coeffs and coeffs[0] == 0:
            coeffs.pop(0)
            lead += 1
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        if prec is not None:
            if coeffs and lead >= prec:
                coeffs = []
            elif coeffs and lead + len(coeffs) > prec:
                coeffs = coeffs[:prec - lead]
                while coeffs and coeffs[-1] == 0:
                    coeffs.pop()
        if not coeffs:
            lead = 0
        self.field = field
        self.lead = lead
        self.coeffs = tuple(coeffs)
        self.prec = prec

    # queries ----------------------------------------------------------------
    def is_zero_to_prec(self) -> bool:
        return not self.coeffs

    def valuation(self) -> int:
        """Valuation in uniformizer units; raises if zero to precision."""
        if not self.coeffs:
            raise ZeroToPrecision("all known coefficients vanish")
        return self.lead

    def abs_exponent(self) -> Fraction:
        """Exact eta with |x| = r^eta (eta = -v_w / e_ram)."""
        return Fraction(-self.valuation(), self.field.e_ram)

    def abs_inf(self) -> float:
        return float(self.field.base.r) ** float(self.abs_exponent())

    def coefficient(self, exp: int) -> int:
        if self.prec is not None and exp >= self.prec:
            raise ZeroToPrecision(f"coefficient at {exp} is beyond precision")
        i = exp - self.lead
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def truncate(self, prec: int) -> "LaurentElem":
        return LaurentElem(self.field, self.lead, self.coeffs,
                           _min_prec(self.prec, prec))

    # arithmetic ---------------------------------------------------------------
    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        f = self.field
        prec = _min_prec(self.prec, other.prec)
        if not self.coeffs:
            return other.truncate(prec) if prec is not None else other
        if not other.coeffs:
            return self.truncate(prec) if prec is not None else self
        lead = min(self.lead, other.lead)
        top = max(self.lead + len(self.coeffs), other.lead + len(other.coeffs))
        out = [0] * (top - lead)
        for i, c in enumerate(self.coeffs):
            out[self.lead - lead + i] = c
        fld = f.coeff
        for i, c in enumerate(other.coeffs):
            j = other.lead - lead + i
            out[j] = fld.add(out[j], c)
        return LaurentElem(f, lead, out, prec)

    __radd__ = __add__

    def __neg__(self):
        fld = self.field.coeff
        return LaurentElem(self.field, self.lead,
                           [fld.neg(c) for c in self.coeffs], self.prec)

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
        f = self.field
        # precision of the product: each factor's unknown tail enters at
        # (its prec) + (other's lead); zero-to-prec factors use prec as lead
        la = self.lead if self.coeffs else self.prec
        lb = other.lead if other.coeffs else other.prec
        pa = None if self.prec is None else (self.prec + lb if lb is not None else None)
        pb = None if other.prec is None else (other.prec + la if la is not None else None)
        prec = _min_prec(pa, pb)
        if not self.coeffs or not other.coeffs:
            return LaurentElem(f, 0, (), prec)
        prod = _mul_coeffs(f.coeff, self.coeffs, other.coeffs)
        return LaurentElem(f, self.lead + other.lead, prod, prec)

    __rmul__ = __mul__

    def scale(self, enc: int) -> "LaurentElem":
        fld = self.field.coeff
        if enc == 0:
            return LaurentElem(self.field, 0, (), self.prec)
        return LaurentElem(self.field, self.lead,
                           [fld.mul(c, enc) for c in self.coeffs], self.prec)

    def shift(self, k: int) -> "LaurentElem":
        """Multiply by w^k."""
        return LaurentElem(self.field, self.lead + k, self.coeffs,
                           None if self.prec is None else self.prec + k)

    def inverse(self, prec: int | None = None) -> "LaurentElem":
        """Multiplicative inverse known through exponent prec - 1."""
        if not self.coeffs:
            raise ZeroToPrecision("cannot invert zero to precision")
        v = self.lead
        if prec is None:
            if self.prec is None:
                raise ValueError("inverse of an exact element needs a target precision")
            prec = self.prec - 2 * v
        if self.prec is not None:
            prec = min(prec, self.prec - 2 * v)
        nterms = prec + v  # inverse has lead -v; need nterms unit coefficients
        if nterms <= 0:
            return LaurentElem(self.field, 0, (), prec)
        unit = tuple(self.coeffs[:nterms]) + (0,) * max(0, nterms - len(self.coeffs))
        inv_unit = _series_inverse(self.field.coeff, unit, nterms)
        return LaurentElem(self.field, -v, inv_unit, prec)

    def __pow__(self, n: int):
        if n < 0:
            if self.prec is None:
                raise ValueError("negative power of an exact element needs inverse(prec)")
            return self.inverse() ** (-n)
        out = self.field.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def eq_to_prec(self, other: "LaurentElem", T: int) -> bool:
        """Equality of all coefficients below exponent T; both operands must
        be known through T."""
        for x in (self, other):
            if x.prec is not None and x.prec < T:
                raise ZeroToPrecision(f"operand known only to {x.prec} < {T}")
        d = self - other
        return d.is_zero_to_prec() or d.lead >= T

    def _coerce(self, other):
        if isinstance(other, LaurentElem):
            if other.field is not self.field:
                raise ValueError("field mismatch")
            return other
        if isinstance(other, int):
            enc = self.field.coeff.from_int(other)
            return LaurentElem(self.field, 0, (enc,), None)
        if isinstance(other, PolyA):
            return self.field.from_poly(other)
        return NotImplemented

    def __eq__(self, other):
        if isinstance(other, LaurentElem):
            return (self.field is other.field and self.lead == other.lead
                    and self.coeffs == other.coeffs and self.prec == other.prec)
        return NotImplemented

    def __repr__(self):
        w = self.field.uniformizer_name
        parts = [f"{c}*{w}^{self.lead + i}" if self.lead + i else str(c)
                 for i, c in enumerate(self.coeffs) if c]
        body = " + ".join(parts) if parts else "0"
        tail = f" + O({w}^{self.prec})" if self.prec is not None else ""
        return body + tail


def _series_inverse(fld: FieldDesc, unit, n: int):
    """Inverse of a unit power series (constant term nonzero), n terms,
    by Newton iteration x <- x(2 - ax)."""
    out = [fld.inv(unit[0])]
    two = fld.add(1, 1)
    known = 1
    while known < n:
        new = min(n, 2 * known)
        x = tuple(out) + (0,) * (new - len(out))
        ax = _mul_coeffs(fld, tuple(unit[:new]), x)[:new]
        t = [fld.neg(c) for c in ax] + [0] * (new - len(ax))
        t[0] = fld.add(t[0], two)
        xt = _mul_coeffs(fld, x, tuple(t))[:new]
        out = list(xt) + [0] * (new - len(xt))
        known = new
    return tuple(out[:n])


def embed_K(x: RatK, prec: int, lfield: LaurentField | None = None) -> LaurentElem:
    """Laurent expansion of x in K_inf (or a supplied field), accurate
    through exponent prec - 1."""
    f = lfield or LaurentField.k_infinity(x.field)
    return f.from_ratk(x, prec)


# ---------------------------------------------------------------------------
# dominance analysis for bracket terms


@dataclass(frozen=True)
class ValuationReport:
    """Argmax data for the exponents r^i (d - i + eta) over 0 <= i <= d."""
    d: int
    eta: Fraction
    i0: int
    unique: bool
    kappa: int


def in_domain_D(r: int, eta: Fraction) -> bool:
    """Whether |u| = r^eta avoids the excluded circles r^(k + 1/(r-1)),
    k <= 0 (the torsion-point radii)."""
    eta = Fraction(eta)
    k = eta - Fraction(1, r - 1)
    return not (k.denominator == 1 and k.numerator <= 0)


def dominance_profile(r: int, eta: Fraction, d: int) -> ValuationReport:
    """Exact argmax of R_d(i) = r^i (d - i + eta), plus the eventual value
    kappa of d - i0(d)."""
    if d < 0:
        raise ValueError("d must be nonnegative")
    eta = Fraction(eta)
    vals = [Fraction(r) ** i * (d - i + eta) for i in range(d + 1)]
    best = max(vals)
    arg = [i for i, v in enumerate(vals) if v == best]
    # R is increasing at i exactly while d - i + eta >= r/(r-1); the eventual
    # gap d - i0 is therefore the least k >= 0 with k < r/(r-1) - eta
    kappa = max(0, frac_ceil(Fraction(r, r - 1) - eta) - 1)
    return ValuationReport(d=d, eta=eta, i0=arg[0], unique=len(arg) == 1,
                           kappa=kappa)
