import random

import pytest

from umzv.carlitz import Carlitz
from umzv.cyclotomic import (CycloRing, _pseudo_divmod, bracket_at_lambda,
                             reduce_at_zero)
from umzv.errors import NotInvertible, NotMonic, WrongModulus
from umzv.fields import (GF, PolyA, RatK, ResidueField, enumerate_below,
                         enumerate_monic, irreducibles_up_to)
from umzv.upoly import UPoly

rng = random.Random(31)


def test_ring_construction_and_modulus():
    F3 = GF(3)
    th = PolyA.gen(F3)
    R = CycloRing(th)
    assert R.degree == 2  # phi = X^2 + theta
    assert R.phi.coeff_list() == [th, PolyA.zero(F3), PolyA.one(F3)]
    with pytest.raises(NotMonic):
        CycloRing(th.scale(2))
    with pytest.raises(NotMonic):
        CycloRing(PolyA.one(F3))


def test_defining_relations():
    for r in (2, 3):
        F = GF(r)
        th = PolyA.gen(F)
        for n in (th, th ** 2, th ** 2 + th + 1):
            R = CycloRing(n)
            lam = R.lam()
            # phi(lambda) = 0 and C_n(lambda) = 0
            assert R.from_upoly(R.phi).is_zero() or R.phi.evaluate(lam, R.one()).is_zero()
            assert R.carlitz.carlitz_poly(n).evaluate(lam, R.one()).is_zero()


def test_inverse_examples():
    F3 = GF(3)
    th = PolyA.gen(F3)
    R = CycloRing(th ** 2 + 1)
    assert R.one().inverse() == R.one()
    x = bracket_at_lambda(th, R)
    assert (x * x.inverse()) == R.one()
    with pytest.raises(NotInvertible):
        R.zero().inverse()


def test_noninvertible_bracket_at_own_conductor():
    F3 = GF(3)
    th = PolyA.gen(F3)
    R = CycloRing(th)
    b = bracket_at_lambda(th, R)
    assert b.is_zero()  # theta + lambda^2 = 0 mod X^2 + theta
    with pytest.raises(NotInvertible):
        b.inverse()
    assert not bracket_at_lambda(th + 1, R).is_zero()
    assert (bracket_at_lambda(th + 1, R)
            * bracket_at_lambda(th + 1, R).inverse()) == R.one()


def test_pseudo_divmod_identity():
    F3 = GF(3)
    for _ in range(10):
        ca = [PolyA(F3, [rng.randrange(3) for _ in range(3)]) for _ in range(6)]
        cb = [PolyA(F3, [rng.randrange(3) for _ in range(2)]) for _ in range(3)]
        A_, B_ = UPoly.from_coeffs(F3, ca), UPoly.from_coeffs(F3, cb)
        if B_.is_zero() or A_.udeg < B_.udeg:
            continue
        rem, q, alpha = _pseudo_divmod(A_, B_)
        assert A_ * alpha == q * B_ + rem
        assert rem.is_zero() or rem.udeg < B_.udeg


@pytest.mark.parametrize("r", [2, 3])
def test_batch_inverse_all_brackets(r):
    F = GF(r)
    v = [w for w in irreducibles_up_to(F, 3) if w.deg == 3][0]
    R = CycloRing(v)
    monics = [a for d in range(3) for a in enumerate_monic(F, d)]
    brs = [R.bracket(a) for a in monics]
    invs = R.batch_inverse(brs)
    for x, y in zip(brs, invs):
        assert (x * y) == R.one()


def test_ring_ops_randomized():
    F3 = GF(3)
    th = PolyA.gen(F3)
    R = CycloRing(th ** 2 + 1)
    def rand_elem():
        num = UPoly.from_coeffs(
            F3, [PolyA(F3, [rng.randrange(3) for _ in range(3)])
                 for _ in range(R.degree)])
        den = PolyA(F3, [rng.randrange(3), 1])
        return R.from_upoly(num, den)
    for _ in range(15):
        a, b, c = rand_elem(), rand_elem(), rand_elem()
        assert a * (b + c) == a * b + a * c
        assert (a - a).is_zero()


def test_bracket_constant_coefficient_is_a():
    for r in (2, 3):
        F = GF(r)
        for v in irreducibles_up_to(F, 2):
            R = CycloRing(v)
            for a in [x for d in range(v.deg) for x in enumerate_monic(F, d)]:
                b = bracket_at_lambda(a, R)
                assert b.constant_coefficient() == RatK(a)


def test_reduce_at_zero():
    for r in (2, 3):
        F = GF(r)
        for v in irreducibles_up_to(F, 3):
            if v.deg < 2:
                continue
            R = CycloRing(v)
            Fv = ResidueField(v)
            # brackets reduce to a mod v; lambda reduces to 0
            for a in [x for d in range(v.deg) for x in enumerate_monic(F, d)][:6]:
                assert reduce_at_zero(R.bracket(a), v) == Fv.reduce_poly(a)
            assert reduce_at_zero(R.lam(), v).is_zero()
            # inverse brackets reduce to the inverse residue (Thm 3.12 pointwise)
            for a in [x for d in range(1, v.deg) for x in enumerate_monic(F, d)][:4]:
                inv = R.bracket(a).inverse()
                assert reduce_at_zero(inv, v) == Fv.reduce_poly(a).inverse()


def test_reduce_at_zero_is_homomorphism():
    F3 = GF(3)
    v = [w for w in irreducibles_up_to(F3, 2) if w.deg == 2][0]
    R = CycloRing(v)
    Fv = ResidueField(v)
    elems = [R.bracket(a) for a in enumerate_monic(F3, 1)] + [R.lam(), R.one()]
    for _ in range(15):
        a, b = rng.choice(elems), rng.choice(elems)
        assert reduce_at_zero(a * b, v) == reduce_at_zero(a, v) * reduce_at_zero(b, v)
        assert reduce_at_zero(a + b, v) == reduce_at_zero(a, v) + reduce_at_zero(b, v)


def test_reduce_wrong_modulus():
    F3 = GF(3)
    th = PolyA.gen(F3)
    R = CycloRing(th ** 2)  # not irreducible
    with pytest.raises(WrongModulus):
        reduce_at_zero(R.one(), th ** 2)
    R2 = CycloRing(th)
    with pytest.raises(WrongModulus):
        reduce_at_zero(R2.one(), th + 1)


def test_reduce_denominator_not_coprime():
    from umzv.errors import DenominatorNotCoprime
    F3 = GF(3)
    th = PolyA.gen(F3)
    R = CycloRing(th)
    bad = R.from_ratk(RatK(PolyA.one(F3), th))  # constant 1/theta
    with pytest.raises(DenominatorNotCoprime):
        reduce_at_zero(bad, th)


@pytest.mark.parametrize("r", [2, 3])
def test_phi_degree_bookkeeping(r):
    F = GF(r)
    C = Carlitz.get(F)
    for d in range(1, 5):
        for n in enumerate_monic(F, d):
            cnt = sum(1 for b in enumerate_below(F, d) if b.gcd(n).is_one())
            assert C.cyclotomic(n).udeg == cnt
