"""The r-shuffle algebra: words, Delta coefficients, the recursive
product, and realization maps.

Words are tuples of positive integers; elements are F_p-linear
combinations stored as {word: nonzero scalar} maps.  The product
follows the depth recursion

  x_r * x_s = x_{r1}(x_{r-} * x_s) + x_{s1}(x_r * x_{s-})
            + x_{r1+s1}(x_{r-} * x_{s-})
            + sum_{i+j=r1+s1} Delta^{i,j}_{r1,s1} x_i((x_{r-} * x_{s-}) * x_j),

with i, j ranging over positive integers (Delta vanishes unless j > 0
and (r-1) | j).  Products are memoized per (r, word, word).
"""

from __future__ import annotations

from .errors import IndexMismatch
from .fields import GF, lucas_binom

Word = tuple

_product_cache: dict = {}


def weight(w: Word) -> int:
    return sum(w)


def depth(w: Word) -> int:
    return len(w)


def delta(r: int, r1: int, s1: int, i: int, j: int) -> int:
    """Delta^{i,j}_{r1,s1} as an F_p scalar (p the characteristic of F_r)."""
    if i + j != r1 + s1:
        raise IndexMismatch(f"i + j = {i + j} != {r1 + s1} = r1 + s1")
    if min(r1, s1, i, j) < 1:
        raise IndexMismatch("all of r1, s1, i, j must be positive")
    p = GF(r).p
    if j % (r - 1):
        return 0
    a = lucas_binom(j - 1, r1 - 1, p)
    if r1 % 2 == 0:
        a = (-a) % p
    b = lucas_binom(j - 1, s1 - 1, p)
    if s1 % 2 == 0:
        b = (-b) % p
    return (a + b) % p


class ShuffleElem:
    """A finite F_p-linear combination of words over x_1, x_2, ..."""

    __slots__ = ("r", "terms")

    def __init__(self, r: int, terms: dict | None = None):
        self.r = r
        cleaned = {}
        if terms:
            p = GF(r).p
            for w, c in terms.items():
                c %= p
                if c:
                    cleaned[tuple(w)] = c
        self.terms = cleaned

    @classmethod
    def zero(cls, r: int):
        return cls(r, {})

    @classmethod
    def word(cls, r: int, w) -> "ShuffleElem":
        w = tuple(w)
        if any(k < 1 for k in w):
            raise ValueError("word letters must be positive integers")
        return cls(r, {w: 1})

    @classmethod
    def one(cls, r: int):
        return cls(r, {(): 1})

    def __add__(self, other):
        if isinstance(other, ShuffleElem):
            if other.r != self.r:
                raise ValueError("mixed r")
            out = dict(self.terms)
            for w, c in other.terms.items():
                out[w] = out.get(w, 0) + c
            return ShuffleElem(self.r, out)
        return NotImplemented

    def __neg__(self):
        return ShuffleElem(self.r, {w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c: int) -> "ShuffleElem":
        return ShuffleElem(self.r, {w: c * x for w, x in self.terms.items()})

    __rmul__ = None  # defined below to disambiguate int vs ShuffleElem

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        if isinstance(other, ShuffleElem):
            if other.r != self.r:
                raise ValueError("mixed r")
            out: dict = {}
            for w1, c1 in self.terms.items():
                for w2, c2 in other.terms.items():
                    for w, c in shuffle_words(self.r, w1, w2).items():
                        out[w] = out.get(w, 0) + c1 * c2 * c
            return ShuffleElem(self.r, out)
        return NotImplemented

    def __eq__(self, other):
        return (isinstance(other, ShuffleElem) and other.r == self.r
                and other.terms == self.terms)

    def __hash__(self):
        return hash((self.r, tuple(sorted(self.terms.items()))))

    def is_zero(self):
        return not self.terms

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for w, c in sorted(self.terms.items()):
            ws = "1" if not w else "".join(f"x{k}" for k in w)
            parts.append(ws if c == 1 else f"{c}*{ws}")
        return " + ".join(parts)


def _rmul(self, other):
    if isinstance(other, int):
        return self.scale(other)
    return NotImplemented


ShuffleElem.__rmul__ = _rmul


def _prefix(k: int, terms: dict) -> dict:
    return {(k,) + w: c for w, c in terms.items()}


def shuffle_words(r: int, w1: Word, w2: Word) -> dict:
    """Term map of x_{w1} * x_{w2}."""
    w1, w2 = tuple(w1), tuple(w2)
    if not w1:
        return {w2: 1}
    if not w2:
        return {w1: 1}
    key = (r, w1, w2)
    got = _product_cache.get(key)
    if got is not None:
        return got
    p = GF(r).p
    r1, s1 = w1[0], w2[0]
    out: dict = {}

    def acc(terms, scalar=1):
        for w, c in terms.items():
            v = (out.get(w, 0) + scalar * c) % p
            if v:
                out[w] = v
            else:
                out.pop(w, None)

    acc(_prefix(r1, shuffle_words(r, w1[1:], w2)))
    acc(_prefix(s1, shuffle_words(r, w1, w2[1:])))
    inner = shuffle_words(r, w1[1:], w2[1:])
    acc(_prefix(r1 + s1, inner))
    for i in range(1, r1 + s1):
        j = r1 + s1 - i
        dcoef = delta(r, r1, s1, i, j)
        if dcoef:
            # (x_{w1-} * x_{w2-}) * x_j, then prefix x_i
            for w, c in inner.items():
                for ww, cc in shuffle_words(r, w, (j,)).items():
                    acc(_prefix(i, {ww: cc}), dcoef * c)
    _product_cache[key] = out
    return out


def shuffle_product(x: ShuffleElem, y: ShuffleElem) -> ShuffleElem:
    return x * y


def realize(x: ShuffleElem, evaluator):
    """Sum of coefficients times evaluator.word(w), with F_p scalars lifted
    through integer multiplication on the target."""
    total = evaluator.zero()
    for w, c in sorted(x.terms.items()):
        total = total + c * evaluator.word(w)
    return total


def homomorphism_check(r_idx, s_idx, evaluator) -> bool:
    """Whether realize(x_r * x_s) equals realize(x_r) * realize(x_s) under
    the evaluator's equality (exact, or to precision for Laurent targets)."""
    r = evaluator.r
    xr = ShuffleElem.word(r, r_idx)
    xs = ShuffleElem.word(r, s_idx)
    lhs = realize(xr * xs, evaluator)
    rhs = evaluator.word(tuple(r_idx)) * evaluator.word(tuple(s_idx))
    return evaluator.eq(lhs, rhs)
