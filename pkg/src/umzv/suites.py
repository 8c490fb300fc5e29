"""Named verification suites.

Each suite mechanically checks one of the library's headline identities
at a configurable scale and reports one case per instance checked.  The
default scales are the ones the acceptance tests run at; the CLI can
shrink or stretch them.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field as dc_field
from fractions import Fraction

from .carlitz import Carlitz
from .errors import UnknownSuite
from .fields import GF, PolyA, RatK, enumerate_monic, irreducibles_up_to
from .harmonic import (CycloUBracket, FormalUBracket, IdentityBracket,
                       analytic_limit_check, finite_euler_carlitz_check,
                       finite_mzv, finite_mzv_via_torsion, t_expansion)
from .laurent import LaurentField, dominance_profile, in_domain_D
from .series import KSeries
from .shuffle import homomorphism_check
from .upoly import UPoly
from .useries import (gamma_direct, gamma_mzv, hasse_schmidt_check,
                      identity_check_explicit, w_poly)


@dataclass
class SuiteReport:
    suite: str
    cases: list = dc_field(default_factory=list)

    def add(self, case_id: str, inputs: dict, ok: bool, detail: str = "",
            elapsed: float = 0.0):
        self.cases.append({"id": case_id, "inputs": inputs, "pass": bool(ok),
                           "detail": detail, "elapsed": round(elapsed, 3)})

    @property
    def ok(self) -> bool:
        return all(c["pass"] for c in self.cases)

    def to_json(self) -> dict:
        return {"suite": self.suite, "pass": self.ok, "cases": self.cases}


def _timed(report, case_id, inputs, fn, detail_fn=None):
    t0 = time.perf_counter()
    try:
        result = fn()
        ok = bool(result) if not isinstance(result, tuple) else bool(result[-1])
        detail = detail_fn(result) if detail_fn else ""
    except Exception as exc:  # a suite failure must name its case
        ok, detail = False, f"{type(exc).__name__}: {exc}"
    report.add(case_id, inputs, ok, detail, time.perf_counter() - t0)


# ---------------------------------------------------------------------------
# index inventories shared by several suites


def positive_indices(wt_max: int, dep_max: int) -> list[tuple]:
    """Non-empty positive indices with weight <= wt_max, depth <= dep_max,
    in a fixed deterministic order."""
    out = []
    def rec(prefix, remaining, depth):
        if prefix:
            out.append(tuple(prefix))
        if depth == 0:
            return
        for s in range(1, remaining + 1):
            rec(prefix + [s], remaining - s, depth - 1)
    rec([], wt_max, dep_max)
    return sorted(set(out), key=lambda w: (len(w), w))


def extended_indices(wt_max: int, dep_max: int) -> list[tuple]:
    """Index sample for the algebraic-limit suite: the positive indices
    plus representatives with a non-positive entry."""
    out = list(positive_indices(wt_max, dep_max))
    out += [(0,), (-1,), (1, 0), (2, -1), (-1, 1), (3, -2)]
    return [w for w in dict.fromkeys(out) if len(w) <= dep_max or not w]


# ---------------------------------------------------------------------------


def suite_u_sinnott(cfg) -> SuiteReport:
    """Gamma_{u,n+1} = prod over monic a != 1 of Phi_a(u)^{floor(n/|a|)}."""
    rep = SuiteReport("u-sinnott")
    r = cfg.r
    F = GF(r)
    C = Carlitz.get(F)
    n_max = cfg.n_max if cfg.n_max is not None else r ** 3
    pow_cache: dict = {}

    def rhs(n):
        out = UPoly.one(F)
        d = 1
        while r ** d <= n:
            for a in enumerate_monic(F, d):
                e = n // r ** d
                key = (a, e)
                if key not in pow_cache:
                    pow_cache[key] = C.cyclotomic(a) ** e
                out = out * pow_cache[key]
            d += 1
        return out

    for n in range(n_max + 1):
        _timed(rep, f"n={n}", {"r": r, "n": n},
               lambda n=n: C.gamma_u(n) == rhs(n))
    return rep


def suite_cyclotomic_zero(cfg) -> SuiteReport:
    """Phi_a(0) = v if a = v^e, else 1, over all monic a of bounded degree."""
    rep = SuiteReport("cyclotomic-zero")
    F = GF(cfg.r)
    C = Carlitz.get(F)
    deg_max = cfg.deg_max or 4
    for d in range(1, deg_max + 1):
        for a in enumerate_monic(F, d):
            def check(a=a):
                fac = a.factor()
                val = C.cyclotomic(a).coefficient(0)
                if len(fac) == 1:
                    return val == next(iter(fac))
                return val.is_one()
            _timed(rep, f"a={a!r}", {"r": cfg.r, "deg": d}, check)
    return rep


def _divergence_points(r: int):
    """Three admissible Laurent sample points per base field."""
    F = GF(r)
    kinf = LaurentField.k_infinity(F)
    if r == 2:
        return [("theta^2", kinf.monomial(1, -2)),
                ("theta^3", kinf.monomial(1, -3)),
                ("theta^4", kinf.monomial(1, -4))]
    L = LaurentField.period_field(F)
    return [("theta", kinf.theta()),
            ("1/theta", kinf.monomial(1, 1)),
            ("c*w^-3", L.monomial(L.root_constant, -3))]


def suite_dominance(cfg) -> SuiteReport:
    """Uniqueness and stabilization of the dominant bracket term, and the
    divergence of min |[a]_u| over monic a of growing degree."""
    rep = SuiteReport("dominance")
    r = cfg.r
    d_max = cfg.d_max or 12
    etas = []
    k = 0
    while len(etas) < 20:
        for cand in (Fraction(k), Fraction(-k), Fraction(k) + Fraction(1, r - 1),
                     Fraction(-k) - Fraction(1, 2 * (r - 1))):
            if in_domain_D(r, cand) and cand not in etas:
                etas.append(cand)
            if len(etas) == 20:
                break
        k += 1
    for eta in etas:
        def check(eta=eta):
            reports = [dominance_profile(r, eta, d) for d in range(1, d_max + 1)]
            if not all(rp.unique for rp in reports):
                return False
            kappa = reports[-1].kappa
            tail = [rp for rp in reports if rp.d >= kappa + 2]
            return all(rp.d - rp.i0 == kappa for rp in tail)
        _timed(rep, f"eta={eta}", {"r": r, "eta": str(eta), "d_max": d_max}, check)

    C = Carlitz.get(GF(r))
    for name, u in _divergence_points(r):
        def check(u=u):
            mins = []
            for d in range(1, 7):
                vals = [_bracket_abs_at_monomial(C, a, u)
                        for a in enumerate_monic(GF(r), d)]
                mins.append(min(vals))
            return all(mins[i] < mins[i + 1] for i in range(len(mins) - 1))
        _timed(rep, f"divergence u={name}", {"r": r, "point": name}, check)
    return rep


def _bracket_abs_at_monomial(C: Carlitz, a: PolyA, u) -> Fraction:
    """|[a]_u| for a monomial Laurent point u = c w^m, by exact evaluation
    of sum_i [a,i] u^{r^i - 1} into an exponent-indexed accumulator."""
    from .fields import pow_enc
    lf = u.field
    fld = lf.coeff
    c_enc, m = u.coeffs[0], u.lead
    r, e_ram = C.field.r, lf.e_ram
    acc: dict = {}
    for i, coef in enumerate(C.coeffs(a)):
        scale = pow_enc(fld, c_enc, r ** i - 1)
        base = m * (r ** i - 1)
        for j, cj in enumerate(coef.coeffs):
            if cj:
                exp = base - j * e_ram
                val = fld.mul(lf.embed_table[cj], scale)
                prev = acc.get(exp, 0)
                newv = fld.add(prev, val)
                if newv:
                    acc[exp] = newv
                else:
                    acc.pop(exp, None)
    assert acc, "bracket vanished at an admissible point"
    return Fraction(-min(acc), e_ram)


def suite_shuffle_hom(cfg) -> SuiteReport:
    """The r-shuffle homomorphism for the S_{<d} evaluator (exact in K) and
    the formal-u evaluator (exact in K(u))."""
    rep = SuiteReport("shuffle-hom")
    r = cfg.r
    F = GF(r)
    wt = cfg.weight_max or 5
    words = positive_indices(wt, 2)
    for d in range(1, (cfg.d_max or 4) + 1):
        ev = IdentityBracket(F, d)
        def check(d=d, ev=ev):
            for i, w1 in enumerate(words):
                for w2 in words[i:]:
                    if not homomorphism_check(w1, w2, ev):
                        return False
            return True
        _timed(rep, f"S-evaluator d={d}", {"r": r, "d": d, "wt_max": wt,
                                           "pairs": len(words) ** 2}, check)
    wt_u = min(wt, cfg.weight_max_formal or 4)
    words_u = positive_indices(wt_u, 2)
    for d in range(1, (cfg.d_max_formal or 3) + 1):
        ev = FormalUBracket(F, d)
        def check(d=d, ev=ev):
            for i, w1 in enumerate(words_u):
                for w2 in words_u[i:]:
                    if not homomorphism_check(w1, w2, ev):
                        return False
            return True
        _timed(rep, f"formal-u d={d}", {"r": r, "d": d, "wt_max": wt_u}, check)
    return rep


def suite_finite_euler_carlitz(cfg) -> SuiteReport:
    """H_{<deg n}(s; lambda_n)/(n lambda_n)^s = dBC_s(n)/Gamma_{s+1},
    exactly in the cyclotomic ring."""
    rep = SuiteReport("finite-euler-carlitz")
    r = cfg.r
    F = GF(r)
    deg_max = cfg.deg_max or 3
    k_max = cfg.k_max or 3
    for d in range(1, deg_max + 1):
        for n in enumerate_monic(F, d):
            for k in range(1, k_max + 1):
                s = k * (r - 1)
                _timed(rep, f"n={n!r} s={s}", {"r": r, "deg": d, "s": s},
                       lambda n=n, s=s: finite_euler_carlitz_check(n, s))
    return rep


def suite_analytic_limit(cfg) -> SuiteReport:
    """Defect of H_{<deg n}(s; lambda_n) against zeta_A(s), compared with
    the convergence bound, monotone in deg n."""
    rep = SuiteReport("analytic-limit")
    r = cfg.r
    F = GF(r)
    prec = max(cfg.prec or 60, 60)
    degs = list(range(1, (cfg.deg_max or 4) + 1))
    for idx in [(1,), (2,), (1, 1), (2, 1)]:
        defects = []
        for d in degs:
            n = PolyA(F, (0,) * d + (1,))
            def check(n=n, idx=idx, defects=defects):
                defect, bound, ok = analytic_limit_check(n, idx, prec)
                defects.append(defect if defect is not None
                               else Fraction(-prec, r - 1))
                return defect, bound, ok
            _timed(rep, f"index={idx} deg={d}",
                   {"r": r, "index": list(idx), "deg": d, "prec": prec}, check,
                   detail_fn=lambda res: f"defect={res[0]} bound={res[1]}")
        _timed(rep, f"index={idx} defect decreasing",
               {"r": r, "index": list(idx), "degs": degs},
               lambda defects=defects: all(defects[i] > defects[i + 1]
                                           for i in range(len(defects) - 1)))
    return rep


def suite_algebraic_limit(cfg) -> SuiteReport:
    """finite_mzv == finite_mzv_via_torsion componentwise."""
    rep = SuiteReport("algebraic-limit")
    F = GF(cfg.r)
    D_max = cfg.D_max or 3
    for idx in extended_indices(cfg.weight_max or 4, 2):
        _timed(rep, f"index={idx}", {"r": cfg.r, "index": list(idx), "D_max": D_max},
               lambda idx=idx: finite_mzv(F, idx, D_max)
               == finite_mzv_via_torsion(F, idx, D_max))
    return rep


def suite_vanishing_reven(cfg) -> SuiteReport:
    """Vanishing of zeta_{A_K}(s) for r-even s: equality with 0 in the
    quotient ring A_K, visible as vanishing at every place v with
    |v| >= s + 2 (the finitely many smaller places are quotiented away)."""
    rep = SuiteReport("vanishing-reven")
    r = cfg.r
    F = GF(r)
    D_max = cfg.D_max or 4
    for s in (r - 1, 2 * (r - 1)):
        def check(s=s):
            vec = finite_mzv(F, (s,), D_max)
            return all(val.is_zero() for v, val in vec.entries
                       if r ** v.deg >= s + 2)
        _timed(rep, f"s={s}", {"r": r, "s": s, "D_max": D_max}, check)
    return rep


def suite_t_expansion(cfg) -> SuiteReport:
    """Integrality and the constant/leading-order shape of the t-expansion."""
    rep = SuiteReport("t-expansion")
    F = GF(cfg.r)
    terms = cfg.terms or 30
    for idx in [(1,), (2,), (1, 1), (2, 1)]:
        def check(idx=idx):
            cs = t_expansion(F, idx, terms)
            if len(cs) != terms:
                return False
            if len(idx) == 1:
                if not cs[0].is_one():
                    return False
            else:
                if not cs[0].is_zero():
                    return False
                first = next((k for k in range(1, terms) if not cs[k].is_zero()),
                             terms)
                if first < idx[0] * (cfg.r - 1):
                    return False
            return True
        _timed(rep, f"index={idx}", {"r": cfg.r, "index": list(idx),
                                     "terms": terms}, check)
    return rep


def suite_w_oracle(cfg) -> SuiteReport:
    """[a]_u^{-s} via W-polynomials against direct series inversion."""
    rep = SuiteReport("w-oracle")
    r = cfg.r
    F = GF(r)
    C = Carlitz.get(F)
    order = 3 * (r - 1) + 1
    for d in range(0, (cfg.deg_max or 2) + 1):
        for a in enumerate_monic(F, d):
            def check(a=a):
                br = KSeries(F, [RatK(c) for c in C.u_bracket(a).coeff_list()],
                             order)
                for s in range(-2, 5):
                    direct = br ** (-s)
                    coeffs = [RatK.zero(F)] * order
                    n = 0
                    while n * (r - 1) < order:
                        wval = RatK.zero(F)
                        xpow = RatK.one(F)
                        for ci in w_poly(F, n, s):
                            wval = wval + ci * xpow
                            xpow = xpow * RatK(a)
                        coeffs[n * (r - 1)] = wval * RatK(a) ** (-s)
                        n += 1
                    if KSeries(F, coeffs, order) != direct:
                        return False
                return True
            _timed(rep, f"a={a!r}", {"r": r, "deg": d}, check)
    return rep


def suite_gamma_routes(cfg) -> SuiteReport:
    """gamma_direct == gamma_mzv to precision, plus the instantiated
    depth-1 and depth-2 closed forms for gamma_1."""
    rep = SuiteReport("gamma-routes")
    r = cfg.r
    F = GF(r)
    C = Carlitz.get(F)
    prec = cfg.prec or 25
    idxs = [(s,) for s in range(1, 5)] + \
           [(s1, s2) for s1 in range(1, 5) for s2 in range(1, 5)]
    for N in range(0, (cfg.N_max or 2) + 1):
        for idx in idxs:
            _timed(rep, f"N={N} index={idx}",
                   {"r": r, "N": N, "index": list(idx), "prec": prec},
                   lambda N=N, idx=idx: gamma_direct(F, N, idx, prec)
                   .eq_to_prec(gamma_mzv(F, N, idx, prec), prec))

    from .harmonic import zeta_thakur
    from .laurent import embed_K
    work = prec + 40
    l1 = embed_K(RatK(PolyA.one(F), C.L(1)), work)
    d1 = embed_K(RatK(PolyA.one(F), C.D(1)), work)
    for s in range(1, 5):
        def check(s=s):
            g1 = gamma_mzv(F, 1, (s,), prec)
            ref = ((-s) % F.p) * (l1 * zeta_thakur(F, (s,), work)
                                  + d1 * zeta_thakur(F, (s - r + 1,), work))
            return g1.eq_to_prec(ref.truncate(prec), prec)
        _timed(rep, f"gamma1 closed form s={s}", {"r": r, "s": s}, check)
    for (s1, s2) in [(1, 1), (2, 1), (1, 2), (3, 1)]:
        def check(s1=s1, s2=s2):
            g1 = gamma_mzv(F, 1, (s1, s2), prec)
            ref = ((-(s1 + s2)) % F.p) * l1 * zeta_thakur(F, (s1, s2), work) \
                + ((-s1) % F.p) * d1 * zeta_thakur(F, (s1 - r + 1, s2), work) \
                + ((-s2) % F.p) * d1 * zeta_thakur(F, (s1, s2 - r + 1), work)
            return g1.eq_to_prec(ref.truncate(prec), prec)
        _timed(rep, f"gamma1 closed form ({s1},{s2})", {"r": r}, check)
    return rep


def suite_hasse_schmidt(cfg) -> SuiteReport:
    """The higher Leibniz rule for the D_N family over the zeta realization."""
    rep = SuiteReport("hasse-schmidt")
    F = GF(cfg.r)
    prec = max(cfg.prec or 25, 25)
    words = positive_indices(cfg.weight_max or 4, 2)
    for N in range(0, (cfg.N_max or 2) + 1):
        for i, w1 in enumerate(words):
            for w2 in words[i:]:
                _timed(rep, f"N={N} {w1}*{w2}",
                       {"r": cfg.r, "N": N, "r_idx": list(w1), "s_idx": list(w2)},
                       lambda N=N, w1=w1, w2=w2:
                       hasse_schmidt_check(F, N, w1, w2, prec))
    return rep


def suite_explicit_identities(cfg) -> SuiteReport:
    """The two printed depth-1 relations (levels N = 1 and N = 2)."""
    rep = SuiteReport("explicit-identities")
    F = GF(cfg.r)
    prec = max(cfg.prec or 25, 25)
    for level in (1, 2):
        for r1 in (1, 2, 3):
            for s1 in (1, 2, 3):
                _timed(rep, f"level={level} ({r1},{s1})",
                       {"r": cfg.r, "level": level, "r1": r1, "s1": s1},
                       lambda level=level, r1=r1, s1=s1:
                       identity_check_explicit(F, level, r1, s1, prec))
    return rep


SUITES = {
    "u-sinnott": suite_u_sinnott,
    "cyclotomic-zero": suite_cyclotomic_zero,
    "dominance": suite_dominance,
    "shuffle-hom": suite_shuffle_hom,
    "finite-euler-carlitz": suite_finite_euler_carlitz,
    "analytic-limit": suite_analytic_limit,
    "algebraic-limit": suite_algebraic_limit,
    "vanishing-reven": suite_vanishing_reven,
    "t-expansion": suite_t_expansion,
    "w-oracle": suite_w_oracle,
    "gamma-routes": suite_gamma_routes,
    "hasse-schmidt": suite_hasse_schmidt,
    "explicit-identities": suite_explicit_identities,
}


def run_suite(name: str, cfg) -> SuiteReport:
    fn = SUITES.get(name)
    if fn is None:
        raise UnknownSuite(f"unknown suite {name!r}; known: {sorted(SUITES)}")
    return fn(cfg)
