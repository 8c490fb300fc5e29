import random
from fractions import Fraction

import pytest

from umzv.carlitz import Carlitz
from umzv.errors import NotMonic, ZeroInput
from umzv.fields import GF, PolyA, RatK, enumerate_monic, irreducibles_up_to
from umzv.upoly import UPoly

rng = random.Random(7)


def test_coeffs_examples():
    F3 = GF(3)
    C = Carlitz.get(F3)
    th = PolyA.gen(F3)
    assert C.coeffs(th) == (th, PolyA.one(F3))
    assert C.coeffs(th ** 2) == (th ** 2, PolyA(F3, (0, 1, 0, 1)), PolyA.one(F3))
    assert C.coeffs(PolyA.one(F3)) == (PolyA.one(F3),)


def test_coeffs_linearity():
    for r in (2, 3):
        F = GF(r)
        C = Carlitz.get(F)
        polys = [a for d in range(4) for a in enumerate_monic(F, d)]
        for _ in range(25):
            a, b = rng.choice(polys), rng.choice(polys)
            eps = rng.randrange(1, r)
            if not (a + b).is_zero():
                assert C.u_bracket(a + b) == C.u_bracket(a) + C.u_bracket(b)
            assert C.u_bracket(a.scale(eps)) == C.u_bracket(a) * PolyA.const(F, eps)


def test_bracket_examples_and_zero_input():
    F3, F2 = GF(3), GF(2)
    th3, th2 = PolyA.gen(F3), PolyA.gen(F2)
    assert Carlitz.get(F3).u_bracket(th3).coeff_list() == \
        [th3, PolyA.zero(F3), PolyA.one(F3)]
    assert Carlitz.get(F2).u_bracket(th2 ** 2).coeff_list() == \
        [th2 ** 2, th2 ** 2 + th2, PolyA.zero(F2), PolyA.one(F2)]
    # evaluation at u = 0 returns a
    assert Carlitz.get(F3).u_bracket(th3).coefficient(0) == th3
    with pytest.raises(ZeroInput):
        Carlitz.get(F3).u_bracket(PolyA.zero(F3))


def test_composition_law():
    for r in (2, 3):
        F = GF(r)
        C = Carlitz.get(F)
        one_u = UPoly.one(F)
        monics = [a for d in range(3) for a in enumerate_monic(F, d)]
        for a in monics:
            for b in monics:
                comp = C.u_bracket(b).evaluate(C.carlitz_poly(a), one_u)
                assert C.u_bracket(a) * comp == C.u_bracket(a * b)


def test_factorial_tables():
    for r in (2, 3):
        F = GF(r)
        C = Carlitz.get(F)
        th = PolyA.gen(F)
        for i in range(1, 4):
            # D_i = prod_{j<i}(theta^{r^i} - theta^{r^j}), against the recursion
            prod = PolyA.one(F)
            for j in range(i):
                prod = prod * (PolyA(F, (0,) * r ** i + (1,))
                               - PolyA(F, (0,) * r ** j + (1,)))
            assert C.D(i) == prod
            assert C.D(i).deg == i * r ** i
            # L_i = prod_{j=1..i}(theta - theta^{r^j})
            prod = PolyA.one(F)
            for j in range(1, i + 1):
                prod = prod * (th - PolyA(F, (0,) * r ** j + (1,)))
            assert C.L(i) == prod
            assert C.L(i).deg == (r ** (i + 1) - r) // (r - 1)
        assert C.gamma(0).is_one()
        assert C.gamma(r) == C.D(1)


def test_d_u_example_and_gamma_u():
    F2 = GF(2)
    C = Carlitz.get(F2)
    th = PolyA.gen(F2)
    assert C.D_u(1).coeff_list() == [th ** 2 + th, PolyA.one(F2), PolyA.one(F2)]
    for n in (0, 1, 2, 5, 7):
        assert C.gamma_u(n).coefficient(0) == C.gamma(n)
    assert C.gamma_u(0) == UPoly.one(F2)


def test_cyclotomic_examples():
    F3 = GF(3)
    C = Carlitz.get(F3)
    th = PolyA.gen(F3)
    assert C.cyclotomic(PolyA.one(F3)) == UPoly.u(F3)
    assert C.cyclotomic(th).coeff_list() == [th, PolyA.zero(F3), PolyA.one(F3)]
    with pytest.raises(NotMonic):
        C.cyclotomic(th.scale(2))


@pytest.mark.parametrize("r", [2, 3])
def test_cyclotomic_specialization_deg4(r):
    F = GF(r)
    C = Carlitz.get(F)
    for d in range(1, 5):
        for a in enumerate_monic(F, d):
            fac = a.factor()
            val = C.cyclotomic(a).coefficient(0)
            if len(fac) == 1:
                assert val == next(iter(fac))
            else:
                assert val.is_one()


@pytest.mark.parametrize("r", [2, 3])
def test_cyclotomic_product_relation(r):
    F = GF(r)
    C = Carlitz.get(F)
    for d in range(1, 4):
        for a in enumerate_monic(F, d):
            prod = UPoly.one(F)
            for b in C.monic_divisors(a):
                prod = prod * C.cyclotomic(b)
            assert prod == C.carlitz_poly(a)


@pytest.mark.parametrize("r", [2, 3])
def test_u_sinnott_small(r):
    F = GF(r)
    C = Carlitz.get(F)
    for n in range(r ** 2 + 2):
        rhs = UPoly.one(F)
        d = 1
        while r ** d <= n:
            for a in enumerate_monic(F, d):
                rhs = rhs * C.cyclotomic(a) ** (n // r ** d)
            d += 1
        assert C.gamma_u(n) == rhs, n


@pytest.mark.parametrize("r", [2, 3])
def test_sinnott_at_zero(r):
    # Gamma_{n+1} = prod_v v^{sum_e floor(n / |v|^e)}
    F = GF(r)
    C = Carlitz.get(F)
    for n in range(r ** 3 + 1):
        rhs = PolyA.one(F)
        for v in irreducibles_up_to(F, 4):
            e = 1
            while r ** (v.deg * e) <= n:
                rhs = rhs * v ** (n // r ** (v.deg * e))
                e += 1
        assert C.gamma(n) == rhs, n


def test_period_properties():
    for r in (2, 3):
        F = GF(r)
        C = Carlitz.get(F)
        pi = C.period(40)
        assert pi.abs_exponent() == Fraction(r, r - 1)
        q = pi ** (r - 1)
        for i, c in enumerate(q.coeffs):
            if c:
                assert (q.lead + i) % (r - 1) == 0
        assert pi.eq_to_prec(C.period(55).truncate(40), 39)


def test_torsion_generators():
    for r in (2, 3):
        F = GF(r)
        C = Carlitz.get(F)
        th = PolyA.gen(F)
        for n in (th, th + 1, th ** 2, th ** 3):
            lam = C.torsion_generator(n, 25)
            assert lam.abs_exponent() == Fraction(-n.deg + 1) + Fraction(1, r - 1)
            chk = C.eval_carlitz(n, lam)
            assert chk.is_zero_to_prec()


def test_torsion_tends_to_period():
    for r in (2, 3):
        F = GF(r)
        C = Carlitz.get(F)
        pi = C.period(30)
        prev = None
        for d in (1, 2, 3):
            n = PolyA(F, (0,) * d + (1,))
            lam = C.torsion_generator(n, 35)
            exp = (pi - lam * n).abs_exponent()
            if prev is not None:
                assert exp < prev
            prev = exp


def test_carlitz_functional_equation():
    # C_a(exp_C(x)) = exp_C(a x) to precision, deg a <= 2
    for r in (2, 3):
        F = GF(r)
        C = Carlitz.get(F)
        L = C.period_field
        x = C.period(40) * L.from_poly(PolyA.gen(F) ** 2).inverse(50)
        for a in [a for d in (1, 2) for a in enumerate_monic(F, d)][:4]:
            lhs = C.eval_carlitz(a, C.carlitz_exp(x, 30))
            rhs = C.carlitz_exp(L.from_poly(a) * x, 30)
            T = min(lhs.prec, rhs.prec)
            assert lhs.eq_to_prec(rhs, T)


def test_bernoulli_carlitz():
    for r in (2, 3):
        F = GF(r)
        C = Carlitz.get(F)
        th = PolyA.gen(F)
        assert C.bernoulli_carlitz(0) == RatK.one(F)
        assert C.degenerate_bernoulli_carlitz(0, th) == RatK.one(F)
        for nn in range(1, r * r + 1):
            if nn % (r - 1):
                assert C.bernoulli_carlitz(nn).is_zero()
        # dBC_n -> BC_n as deg grows
        for nn in (r - 1, 2 * (r - 1)):
            prev = None
            for k in (1, 2, 3):
                npoly = PolyA(F, (0,) * k + (1,))
                dv = C.degenerate_bernoulli_carlitz(nn, npoly) - C.bernoulli_carlitz(nn)
                val = 10 ** 9 if dv.is_zero() else dv.valuation_inf()
                if prev is not None:
                    assert val > prev
                prev = val
