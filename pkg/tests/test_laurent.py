import random
from fractions import Fraction

import pytest

from umzv.errors import ZeroToPrecision
from umzv.fields import GF, PolyA, RatK
from umzv.laurent import (LaurentField, dominance_profile, embed_K,
                          in_domain_D)

rng = random.Random(99)


def rand_ratk(F, maxdeg=4):
    num = PolyA(F, [rng.randrange(F.r) for _ in range(rng.randint(0, maxdeg))])
    den = PolyA(F, [rng.randrange(F.r) for _ in range(rng.randint(0, maxdeg))] + [1])
    return RatK(num, den)


def test_embed_examples():
    F3 = GF(3)
    th = PolyA.gen(F3)
    t = LaurentField.k_infinity(F3).theta()
    assert t.lead == -1 and t.coeffs == (1,) and t.prec is None
    e = embed_K(RatK(PolyA.one(F3), th - 1), 4)
    assert (e.lead, e.coeffs, e.prec) == (1, (1, 1, 1), 4)
    z = embed_K(RatK.zero(F3), 3)
    assert z.is_zero_to_prec() and z.prec == 3


def test_abs_examples():
    F3 = GF(3)
    kinf = LaurentField.k_infinity(F3)
    assert kinf.theta().abs_exponent() == 1
    assert kinf.theta().abs_inf() == 3.0
    with pytest.raises(ZeroToPrecision):
        kinf.zero(5).abs_exponent()


def test_embed_respects_arithmetic():
    for r in (2, 3):
        F = GF(r)
        for _ in range(25):
            a, b = rand_ratk(F), rand_ratk(F)
            pa, pb = embed_K(a, 20), embed_K(b, 20)
            assert (pa * pb).eq_to_prec(embed_K(a * b, 14), 12)
            assert (pa + pb).eq_to_prec(embed_K(a + b, 14), 12)


def test_abs_multiplicative_and_ultrametric():
    F = GF(3)
    for _ in range(40):
        a, b = rand_ratk(F), rand_ratk(F)
        if a.is_zero() or b.is_zero():
            continue
        xa, xb = embed_K(a, 25), embed_K(b, 25)
        assert (xa * xb).abs_exponent() == xa.abs_exponent() + xb.abs_exponent()
        s = xa + xb
        if not s.is_zero_to_prec():
            assert s.abs_exponent() <= max(xa.abs_exponent(), xb.abs_exponent())
        if xa.abs_exponent() != xb.abs_exponent():
            assert s.abs_exponent() == max(xa.abs_exponent(), xb.abs_exponent())


def test_inverse_roundtrip():
    F = GF(2)
    kinf = LaurentField.k_infinity(F)
    for _ in range(20):
        a = rand_ratk(F)
        if a.is_zero():
            continue
        x = embed_K(a, 24)
        assert (x * x.inverse(18)).eq_to_prec(kinf.one(), 12)


def test_period_field_model():
    for r in (2, 3, 4):
        F = GF(r)
        L = LaurentField.period_field(F)
        assert L.e_ram == r - 1
        # c^(r-1) = -1 exactly
        from umzv.fields import pow_enc
        assert pow_enc(L.coeff, L.root_constant, r - 1) == L.coeff.neg(1)
        rt = L.root_of_minus_theta()
        assert (rt ** (r - 1) - L.from_poly(-PolyA.gen(F))).is_zero_to_prec()
        # coefficient field is F_{r^2} exactly when -1 is not an (r-1)-st power
        assert (L.coeff is F) == (F.p == 2)


def test_from_kinf():
    F = GF(3)
    kinf = LaurentField.k_infinity(F)
    L = LaurentField.period_field(F)
    x = embed_K(rand_ratk(F), 15)
    y = L.from_kinf(x, kinf)
    assert y.lead == 2 * x.lead and y.prec == 2 * x.prec


def test_in_domain_examples():
    assert not in_domain_D(3, Fraction(1, 2))
    assert in_domain_D(3, Fraction(2))
    assert not in_domain_D(3, Fraction(-5) + Fraction(1, 2))
    # r = 2: excluded circles at all integer radii <= 1
    assert not in_domain_D(2, Fraction(1))
    assert not in_domain_D(2, Fraction(-3))
    assert in_domain_D(2, Fraction(2))
    assert in_domain_D(2, Fraction(1, 2))


def test_dominance_examples():
    rep = dominance_profile(3, Fraction(0), 5)
    assert (rep.i0, rep.unique, rep.kappa) == (4, True, 1)
    # eta > 1/(r-1): i0 = d
    for d in range(1, 8):
        rep = dominance_profile(3, Fraction(2), d)
        assert rep.i0 == d and rep.unique and rep.kappa == 0
    # excluded eta = -1 + 1/(r-1) produces ties for d >= 2
    assert any(not dominance_profile(3, Fraction(-1, 2), d).unique
               for d in range(2, 8))


@pytest.mark.parametrize("r", [2, 3])
def test_dominance_uniqueness_and_stabilization(r):
    etas = [Fraction(n, 3) for n in range(-12, 13)] \
        + [Fraction(n, 5) for n in range(-10, 11)] \
        + [Fraction(n) for n in range(-4, 5)]
    etas = sorted({e for e in etas if in_domain_D(r, e)})
    assert len(etas) >= 20
    for eta in etas:
        reports = [dominance_profile(r, eta, d) for d in range(1, 13)]
        assert all(rep.unique for rep in reports), eta
        kappa = reports[-1].kappa
        for rep in reports:
            if rep.d >= kappa + 2:
                assert rep.d - rep.i0 == kappa, (eta, rep)


def test_precision_truncation_and_eq():
    F = GF(3)
    a = embed_K(rand_ratk(F), 30)
    b = a.truncate(10)
    assert b.prec == 10
    with pytest.raises(ZeroToPrecision):
        a.eq_to_prec(b, 20)  # b only known to 10
