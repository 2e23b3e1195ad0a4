"""The Iwahori-Hecke algebra H_n(q) in its natural basis.

Elements are sparse dictionaries Permutation -> LaurentPoly.  Products
expand the RIGHT factor through a reduced word, one generator at a time;
the quadratic relation T_i^2 = (q-1) T_i + q drives mul_gen.
"""

from __future__ import annotations

import os
from functools import lru_cache

from .errors import IndexOutOfRange, RankGuardExceeded, SizeMismatch
from .permcore import Permutation, identity, long_cycle, transposition
from .qalgebra import ONE, ZERO, LaurentPoly

# Desk-scale rank guardrail; bypass with allow_large=True or the env var.
MAX_RANK = 9
_ENV_OVERRIDE = "HECKEFACT_ALLOW_LARGE_RANK"


def _check_rank(n: int, allow_large: bool = False):
    if n > MAX_RANK and not allow_large and not os.environ.get(_ENV_OVERRIDE):
        raise RankGuardExceeded(
            f"rank {n} exceeds the guardrail {MAX_RANK}; pass allow_large=True "
            f"or set {_ENV_OVERRIDE}=1 to override")


class HeckeElement:
    """A sparse element of H_n(q) in the natural basis (immutable)."""

    __slots__ = ("n", "terms")

    def __init__(self, n, terms=None):
        clean = {}
        if terms:
            for w, c in terms.items():
                if not isinstance(c, LaurentPoly):
                    c = LaurentPoly.const(c)
                if c.is_zero():
                    continue
                if w.n != n:
                    raise SizeMismatch(f"term rank {w.n} in H_{n}")
                clean[w] = c
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("HeckeElement is immutable")

    def coeff(self, w: Permutation) -> LaurentPoly:
        if w.n != self.n:
            raise SizeMismatch(f"rank {w.n} vs {self.n}")
        return self.terms.get(w, ZERO)

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        if not isinstance(other, HeckeElement):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def __hash__(self):
        return hash((self.n, frozenset(self.terms.items())))

    def __add__(self, other):
        if isinstance(other, HeckeElement):
            if other.n != self.n:
                raise SizeMismatch(f"ranks {self.n} and {other.n}")
            out = dict(self.terms)
            for w, c in other.terms.items():
                s = out.get(w, ZERO) + c
                if s.is_zero():
                    out.pop(w, None)
                else:
                    out[w] = s
            return _mk(self.n, out)
        return NotImplemented

    def __sub__(self, other):
        return self + other.scale(LaurentPoly.const(-1))

    def scale(self, c) -> "HeckeElement":
        if not isinstance(c, LaurentPoly):
            c = LaurentPoly.const(c)
        if c.is_zero():
            return _mk(self.n, {})
        return _mk(self.n, {w: k * c for w, k in self.terms.items()})

    def specialize_q1(self):
        """Coefficients at q=1, as a dict Permutation -> int."""
        return {w: c.at_one() for w, c in self.terms.items() if c.at_one()}

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "terms": [{"w": w.text(), "coeff": c.to_json()}
                      for w, c in sorted(self.terms.items(),
                                         key=lambda t: t[0].images)],
        }

    def __repr__(self):
        items = ", ".join(f"({w.text()}): {c.text()}"
                          for w, c in sorted(self.terms.items(),
                                             key=lambda t: t[0].images))
        return f"HeckeElement(n={self.n}, {{{items}}})"


def _mk(n, terms) -> HeckeElement:
    e = HeckeElement.__new__(HeckeElement)
    object.__setattr__(e, "n", n)
    object.__setattr__(e, "terms", terms)
    return e


def zero(n: int) -> HeckeElement:
    return _mk(n, {})


def unit(n: int) -> HeckeElement:
    return _mk(n, {identity(n): ONE})


def t_basis(w: Permutation) -> HeckeElement:
    return _mk(w.n, {w: ONE})


_QM1 = LaurentPoly({1: 1, 0: -1})  # q - 1
_Q = LaurentPoly({1: 1})


def mul_gen(a: HeckeElement, i: int) -> HeckeElement:
    """Right-multiply by T_i using the quadratic relation."""
    n = a.n
    if not 1 <= i <= n - 1:
        raise IndexOutOfRange(f"generator {i} not in H_{n}")
    out = {}

    def bump(w, c):
        s = out.get(w)
        s = c if s is None else s + c
        if s.is_zero():
            out.pop(w, None)
        else:
            out[w] = s

    for w, c in a.terms.items():
        ws = w.right_mul_s(i)
        if w.has_right_ascent(i):
            bump(ws, c)
        else:
            bump(w, c * _QM1)
            bump(ws, c * _Q)
    return _mk(n, out)


def mul_gen_left(a: HeckeElement, i: int) -> HeckeElement:
    """Left-multiply by T_i (mirror of mul_gen)."""
    n = a.n
    if not 1 <= i <= n - 1:
        raise IndexOutOfRange(f"generator {i} not in H_{n}")
    out = {}

    def bump(w, c):
        s = out.get(w)
        s = c if s is None else s + c
        if s.is_zero():
            out.pop(w, None)
        else:
            out[w] = s

    for w, c in a.terms.items():
        sw = w.left_mul_s(i)
        if w.has_left_ascent(i):
            bump(sw, c)
        else:
            bump(w, c * _QM1)
            bump(sw, c * _Q)
    return _mk(n, out)


def mul_basis_word(a: HeckeElement, word) -> HeckeElement:
    """Right-multiply by T_{i1} ... T_{il} for a generator word."""
    for i in word:
        a = mul_gen(a, i)
    return a


def mul(a: HeckeElement, b: HeckeElement) -> HeckeElement:
    """Bilinear product a * b, expanding each basis term of b."""
    if a.n != b.n:
        raise SizeMismatch(f"ranks {a.n} and {b.n}")
    _check_rank(a.n)
    total = {}
    for w, c in b.terms.items():
        piece = mul_basis_word(a.scale(c), w.reduced_word())
        for v, k in piece.terms.items():
            s = total.get(v, ZERO) + k
            if s.is_zero():
                total.pop(v, None)
            else:
                total[v] = s
    return _mk(a.n, total)


def jucys_murphy(n: int, k: int) -> HeckeElement:
    """J_k(q) = sum_{i<k} q^{i-k} T_{(i k)}; J_1(q) = 0."""
    if not 1 <= k <= n:
        raise IndexOutOfRange(f"J_{k} not defined in H_{n}")
    terms = {transposition(n, i, k): LaurentPoly.monomial(1, i - k)
             for i in range(1, k)}
    return _mk(n, terms)


@lru_cache(maxsize=None)
def _jm_elementary_all(n: int):
    """All t-degree coefficients of prod_i (1 + J_i(q) t): the tuple
    (e_0(Xi_n), ..., e_n(Xi_n))."""
    _check_rank(n)
    # degs[k] holds the coefficient of t^k in the running partial product
    degs = [unit(n)] + [zero(n)] * n
    for i in range(1, n + 1):
        ji = jucys_murphy(n, i)
        if ji.is_zero():
            continue
        for k in range(min(i - 1, n - 1), 0, -1):
            degs[k] = degs[k] + mul(degs[k - 1], ji)
    return tuple(degs)


def jm_elementary(n: int, k: int) -> HeckeElement:
    """e_k(Xi_n(q)) as a Hecke element; e_0 is the unit."""
    if not 0 <= k <= n:
        raise IndexOutOfRange(f"e_{k} of {n} JM elements")
    return _jm_elementary_all(n)[k]


def coeff_longcycle_e_product(n: int, p) -> LaurentPoly:
    """[T_c] of e_{p_1}(Xi_n) ... e_{p_m}(Xi_n) for a composition p."""
    from .symeval import central_product

    p = tuple(int(x) for x in p)
    for x in p:
        if not 0 <= x <= n - 1:
            raise IndexOutOfRange(f"e_{x} exceeds the JM alphabet for n={n}")
    return central_product(n, tuple(sorted(p))).coeff(long_cycle(n))


def is_central(a: HeckeElement) -> bool:
    """True iff a commutes with every generator T_i."""
    for i in range(1, a.n):
        if mul_gen(a, i) != mul_gen_left(a, i):
            return False
    return True
