"""Symmetric-function machinery: evaluation at scalar lists and at the
q-Jucys-Murphy elements, the hook-content coefficient formula, and the
principal-specialization reciprocity for the long-cycle coefficient.

All reductions to elementary values (Wronski for h, Newton for p,
Jacobi-Trudi for s) have integer coefficients, so evaluating at Laurent
polynomial scalars stays inside LaurentPoly; only the final division by
[n]!_q or [n]_q produces a RatFunc.
"""

from __future__ import annotations

import re
from functools import lru_cache

from .errors import DegreeMismatch, IndexOutOfRange, ParseError
from .permcore import Partition, long_cycle
from .qalgebra import (ONE, ZERO, LaurentPoly, RatFunc, binom2, q_binomial,
                       q_factorial, q_int)

FAMILIES = ("e", "h", "p", "s")


class SymFunc:
    """A symmetric function: family in {e, h, p, s} with a partition index."""

    __slots__ = ("family", "index")

    def __init__(self, family, index):
        if family not in FAMILIES:
            raise ValueError(f"unknown family {family!r}")
        if not isinstance(index, Partition):
            index = Partition(index)
        object.__setattr__(self, "family", family)
        object.__setattr__(self, "index", index)

    def __setattr__(self, name, value):
        raise AttributeError("SymFunc is immutable")

    @property
    def degree(self) -> int:
        return self.index.size

    def __eq__(self, other):
        if not isinstance(other, SymFunc):
            return NotImplemented
        return self.family == other.family and self.index == other.index

    def __hash__(self):
        return hash((self.family, self.index))

    def text(self) -> str:
        return f"{self.family}[{self.index.text()}]"

    def __repr__(self):
        return f"SymFunc({self.text()!r})"


_SYM_RE = re.compile(r"^([ehps])\[([0-9, ]*)\]$")


def parse_symfunc(text: str) -> SymFunc:
    """Parse the CLI grammar 'e[2,1]', 'h[3]', 'p[2,2]', 's[3,1]'."""
    m = _SYM_RE.match(text.strip())
    if not m:
        raise ParseError(f"bad symmetric function: {text!r}")
    family, body = m.group(1), m.group(2).strip()
    parts = [int(x) for x in body.split(",") if x.strip()] if body else []
    # zero parts index the constant factor e_0 = h_0 = 1; drop them
    parts = [p for p in parts if p != 0]
    try:
        index = Partition(sorted(parts, reverse=True))
    except ValueError as exc:
        raise ParseError(str(exc)) from exc
    return SymFunc(family, index)


# ---------------------------------------------------------------------------
# scalar evaluation
# ---------------------------------------------------------------------------

def hook_qcontents(n: int, k: int):
    """The q-content multiset of the hook (n-k, 1^k): [j]_q for -k <= j <= n-k-1."""
    if not 0 <= k <= n - 1:
        raise IndexOutOfRange(f"hook leg {k} for n={n}")
    return [q_int(j) for j in range(-k, n - k)]


def elementary_values(xs):
    """e_0..e_N of the scalar list xs, by the iterative one-variable DP."""
    e = [ONE] + [ZERO] * len(xs)
    for t, x in enumerate(xs, start=1):
        for k in range(t, 0, -1):
            e[k] = e[k] + e[k - 1] * x
    return e


def _homogeneous_values(e, top):
    """h_0..h_top from e-values via the Wronski recursion."""
    N = len(e) - 1
    h = [ONE]
    for j in range(1, top + 1):
        acc = ZERO
        for i in range(1, min(j, N) + 1):
            term = e[i] * h[j - i]
            acc = acc + (term if i % 2 == 1 else -term)
        h.append(acc)
    return h


def _powersum_values(e, top):
    """p_1..p_top from e-values via Newton's identities."""
    N = len(e) - 1
    p = [None]
    for k in range(1, top + 1):
        acc = ZERO
        for i in range(1, min(k - 1, N) + 1):
            term = e[i] * p[k - i]
            acc = acc + (term if i % 2 == 1 else -term)
        if k <= N:
            ek = e[k] * k
            acc = acc + (ek if k % 2 == 1 else -ek)
        p.append(acc)
    return p


def _jacobi_trudi(lam: Partition, h):
    """det(h_{lam_i - i + j}) by Leibniz expansion; h[j] indexed by degree,
    out-of-range low indices mean h_{<0} = 0."""
    from itertools import permutations as iperm

    ell = len(lam)
    if ell == 0:
        return ONE
    total = ZERO
    for sigma in iperm(range(ell)):
        inv = sum(1 for a in range(ell) for b in range(a + 1, ell)
                  if sigma[a] > sigma[b])
        prod = ONE
        ok = True
        for i in range(ell):
            d = lam[i] - (i + 1) + (sigma[i] + 1)
            if d < 0:
                ok = False
                break
            prod = prod * h[d]
        if not ok:
            continue
        total = total + (prod if inv % 2 == 0 else -prod)
    return total


def eval_scalars(f: SymFunc, xs):
    """Evaluate f at the scalar list xs (LaurentPoly entries)."""
    lam = f.index
    if f.family == "e":
        e = elementary_values(xs)
        out = ONE
        for part in lam:
            out = out * (e[part] if part < len(e) else ZERO)
        return out
    if f.family == "h":
        e = elementary_values(xs)
        top = lam[0] if len(lam) else 0
        h = _homogeneous_values(e, top)
        out = ONE
        for part in lam:
            out = out * h[part]
        return out
    if f.family == "p":
        e = elementary_values(xs)
        top = lam[0] if len(lam) else 0
        p = _powersum_values(e, top)
        out = ONE
        for part in lam:
            out = out * p[part]
        return out
    # schur
    e = elementary_values(xs)
    top = (lam[0] + len(lam)) if len(lam) else 0
    h = _homogeneous_values(e, top)
    return _jacobi_trudi(lam, h)


# direct monomial-sum evaluators (test oracles; exponential, keep inputs tiny)

def eval_scalars_direct(f: SymFunc, xs):
    """Evaluate f at xs by literally summing monomials."""
    from itertools import combinations, combinations_with_replacement

    lam = f.index
    N = len(xs)

    def e_direct(k):
        acc = ZERO
        for sub in combinations(range(N), k):
            prod = ONE
            for i in sub:
                prod = prod * xs[i]
            acc = acc + prod
        return acc

    def h_direct(k):
        acc = ZERO
        for sub in combinations_with_replacement(range(N), k):
            prod = ONE
            for i in sub:
                prod = prod * xs[i]
            acc = acc + prod
        return acc

    def p_direct(k):
        acc = ZERO
        for x in xs:
            acc = acc + x ** k
        return acc

    if f.family == "e":
        out = ONE
        for part in lam:
            out = out * e_direct(part)
        return out
    if f.family == "h":
        out = ONE
        for part in lam:
            out = out * h_direct(part)
        return out
    if f.family == "p":
        out = ONE
        for part in lam:
            out = out * p_direct(part)
        return out
    # schur: sum over semistandard tableaux with entries in [N]
    acc = ZERO
    for content in _ssyt_contents(lam, N):
        prod = ONE
        for i in content:
            prod = prod * xs[i]
        acc = acc + prod
    return acc


def _ssyt_contents(lam: Partition, N: int):
    """Yield entry lists (0-based values) of semistandard tableaux of shape
    lam with entries in [N], rows weakly increasing, columns strict."""
    rows = lam.parts

    def fill(r, prev_row):
        if r == len(rows):
            yield []
            return
        width = rows[r]

        def fill_row(c, last):
            if c == width:
                yield []
                return
            lo = last
            if prev_row is not None and c < len(prev_row):
                lo = max(lo, prev_row[c] + 1)
            for v in range(lo, N):
                for rest in fill_row(c + 1, v):
                    yield [v] + rest

        for row in fill_row(0, 0):
            for rest in fill(r + 1, row):
                yield row + rest

    yield from fill(0, None)


# ---------------------------------------------------------------------------
# evaluation at the q-Jucys-Murphy elements
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def central_product(n: int, parts: tuple):
    """Product of jm_elementary(n, p) over the sorted tuple parts, memoized
    on sorted prefixes so e_lambda products share work."""
    from . import heckecore

    if not parts:
        return heckecore.unit(n)
    head = central_product(n, parts[:-1])
    return heckecore.mul(head, heckecore.jm_elementary(n, parts[-1]))


@lru_cache(maxsize=None)
def _jm_h(n: int, j: int):
    """h_j(Xi_n(q)) by the Wronski recursion inside Z(H_n(q))."""
    from . import heckecore

    if j == 0:
        return heckecore.unit(n)
    acc = heckecore.zero(n)
    for i in range(1, min(j, n) + 1):
        term = heckecore.mul(heckecore.jm_elementary(n, i), _jm_h(n, j - i))
        acc = acc + (term if i % 2 == 1 else term.scale(-1))
    return acc


@lru_cache(maxsize=None)
def _jm_p(n: int, k: int):
    """p_k(Xi_n(q)) by Newton's identities inside Z(H_n(q))."""
    from . import heckecore

    acc = heckecore.zero(n)
    for i in range(1, min(k - 1, n) + 1):
        term = heckecore.mul(heckecore.jm_elementary(n, i), _jm_p(n, k - i))
        acc = acc + (term if i % 2 == 1 else term.scale(-1))
    if k <= n:
        ek = heckecore.jm_elementary(n, k).scale(k)
        acc = acc + (ek if k % 2 == 1 else ek.scale(-1))
    return acc


@lru_cache(maxsize=None)
def _jm_h_product(n: int, parts: tuple):
    """Product of h_{p}(Xi_n) over a sorted tuple, memoized on prefixes."""
    from . import heckecore

    if not parts:
        return heckecore.unit(n)
    head = _jm_h_product(n, parts[:-1])
    return heckecore.mul(head, _jm_h(n, parts[-1]))


def jm_eval(f: SymFunc, n: int):
    """f(Xi_n(q)) as a HeckeElement."""
    from . import heckecore

    lam = f.index
    if f.family == "e":
        if any(part > n for part in lam):
            return heckecore.zero(n)
        return central_product(n, tuple(sorted(lam.parts)))
    if f.family == "h":
        return _jm_h_product(n, tuple(sorted(lam.parts)))
    if f.family == "p":
        out = heckecore.unit(n)
        for part in lam:
            out = heckecore.mul(out, _jm_p(n, part))
        return out
    # schur: Leibniz-expand Jacobi-Trudi into h-index multisets first, then
    # evaluate each distinct multiset once through the h-product memo
    from itertools import permutations as iperm

    ell = len(lam)
    if ell == 0:
        return heckecore.unit(n)
    acc = heckecore.zero(n)
    buckets = {}
    for sigma in iperm(range(ell)):
        inv = sum(1 for a in range(ell) for b in range(a + 1, ell)
                  if sigma[a] > sigma[b])
        degs = []
        ok = True
        for i in range(ell):
            d = lam[i] - (i + 1) + (sigma[i] + 1)
            if d < 0:
                ok = False
                break
            if d > 0:
                degs.append(d)
        if not ok:
            continue
        key = tuple(sorted(degs))
        buckets[key] = buckets.get(key, 0) + (1 if inv % 2 == 0 else -1)
    for key, sign in buckets.items():
        if sign:
            acc = acc + _jm_h_product(n, key).scale(sign)
    return acc


def jm_eval_direct(f: SymFunc, n: int):
    """f(Xi_n(q)) by literal monomial sums in the commuting JM elements.

    Exponential-size oracle for cross-checking the reductions; keep n small.
    """
    from itertools import combinations, combinations_with_replacement

    from . import heckecore

    jms = [heckecore.jucys_murphy(n, k) for k in range(1, n + 1)]

    def prod_of(indices):
        out = heckecore.unit(n)
        for i in indices:
            out = heckecore.mul(out, jms[i])
        return out

    lam = f.index

    def e_direct(k):
        acc = heckecore.zero(n)
        for sub in combinations(range(n), k):
            acc = acc + prod_of(sub)
        return acc

    def h_direct(k):
        acc = heckecore.zero(n)
        for sub in combinations_with_replacement(range(n), k):
            acc = acc + prod_of(sub)
        return acc

    def p_direct(k):
        acc = heckecore.zero(n)
        for i in range(n):
            acc = acc + prod_of([i] * k)
        return acc

    if f.family == "e":
        out = heckecore.unit(n)
        for part in lam:
            out = heckecore.mul(out, e_direct(part))
        return out
    if f.family == "h":
        out = heckecore.unit(n)
        for part in lam:
            out = heckecore.mul(out, h_direct(part))
        return out
    if f.family == "p":
        out = heckecore.unit(n)
        for part in lam:
            out = heckecore.mul(out, p_direct(part))
        return out
    acc = heckecore.zero(n)
    for content in _ssyt_contents(lam, n):
        acc = acc + prod_of(content)
    return acc


# ---------------------------------------------------------------------------
# the long-cycle coefficient: hook-content formula and reciprocity
# ---------------------------------------------------------------------------

def coeff_Tc_hook_formula(f: SymFunc, n: int) -> RatFunc:
    """[T_c] f(Xi_n(q)) via the alternating sum over hook shapes."""
    total = ZERO
    for k in range(n):
        weight = q_binomial(n - 1, k).shift(binom2(k))
        val = eval_scalars(f, hook_qcontents(n, k))
        term = weight * val
        total = total + (term if k % 2 == 0 else -term)
    return RatFunc.from_laurent(total) / RatFunc.from_laurent(q_factorial(n))


def coeff_Tc_jm(f: SymFunc, n: int) -> LaurentPoly:
    """[T_c] f(Xi_n(q)) by direct expansion in the Hecke algebra."""
    return jm_eval(f, n).coeff(long_cycle(n))


def principal_specialization(f: SymFunc, n: int) -> LaurentPoly:
    """ps_f(n; q) = f(1, q, ..., q^{n-1})."""
    xs = [LaurentPoly.monomial(1, i) for i in range(n)]
    return eval_scalars(f, xs)


def ps_e_closed(lam: Partition, n: int) -> LaurentPoly:
    """Closed form: prod_i q^{binom(lam_i,2)} [n choose lam_i]_q."""
    out = ONE
    for part in lam:
        out = out * q_binomial(n, part).shift(binom2(part))
    return out


def ps_h_closed(k: int, n: int) -> LaurentPoly:
    """Closed form for a one-part h: [n+k-1 choose k]_q."""
    return q_binomial(n + k - 1, k)


def ps_p_closed(k: int, n: int) -> LaurentPoly:
    """Closed form for a one-part p: (1 - q^{nk})/(1 - q^k)."""
    return LaurentPoly({i * k: 1 for i in range(n)})


def ps_s_closed(lam: Partition, n: int) -> LaurentPoly:
    """Closed form: q^{b(lam)} prod_cells (1 - q^{n+j-i})/(1 - q^{h(i,j)})."""
    hooks = lam.hook_lengths()
    num = LaurentPoly.const(1)
    for (i, j) in lam.cells():
        e = n + j - i
        num = num * (ONE - LaurentPoly.monomial(1, e) if e != 0 else ZERO)
    if num.is_zero():
        return ZERO
    den = ONE
    for h in hooks:
        den = den * (ONE - LaurentPoly.monomial(1, h))
    return num.divexact(den).shift(lam.nlam())


def ps_closed(f: SymFunc, n: int) -> LaurentPoly:
    """The applicable closed form for ps_f(n; q)."""
    if f.family == "e":
        return ps_e_closed(f.index, n)
    if f.family == "h":
        out = ONE
        for part in f.index:
            out = out * ps_h_closed(part, n)
        return out
    if f.family == "p":
        out = ONE
        for part in f.index:
            out = out * ps_p_closed(part, n)
        return out
    return ps_s_closed(f.index, n)


def coeff_Tc_reciprocity(f: SymFunc, n: int) -> RatFunc:
    """[T_c] f(Xi_n(q)) = q^{-binom(n,2)}/[n]_q * ps_f(n; q), valid for f
    homogeneous of degree n-1."""
    if f.degree != n - 1:
        raise DegreeMismatch(
            f"{f.text()} has degree {f.degree}, reciprocity needs {n - 1}")
    ps = RatFunc.from_laurent(principal_specialization(f, n))
    shift = RatFunc.from_laurent(LaurentPoly.monomial(1, -binom2(n)))
    return shift * ps / RatFunc.from_laurent(q_int(n))
