"""Classical q=1 brute-force counters for factorizations of the long cycle,
plus the classical generating-function identities they satisfy.

These are the independent ground truth that every q=1 specialization of the
Hecke computations must reproduce.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product
from math import comb, factorial

from .errors import GuardrailExceeded
from .permcore import (identity, long_cycle, permutations_by_cycle_count,
                       transposition)

MAX_N = 5
MAX_J = 7
MAX_M = 3


def _check(cond, msg):
    if not cond:
        raise GuardrailExceeded(msg)


def _transpositions(n):
    return [transposition(n, a, b)
            for b in range(2, n + 1) for a in range(1, b)]


def count_a(n: int, j: int) -> int:
    """Number of j-tuples of transpositions composing to the long cycle."""
    _check(n <= MAX_N and j <= MAX_J, f"count_a guardrail: n<={MAX_N}, j<={MAX_J}")
    target = long_cycle(n)
    if n == 1:
        return 1 if j == 0 else 0
    trans = _transpositions(n)
    # group-algebra vector: apply the all-transpositions operator j times
    dist = {identity(n): 1}
    for _ in range(j):
        nxt = {}
        for w, c in dist.items():
            for t in trans:
                v = w.compose(t)
                nxt[v] = nxt.get(v, 0) + c
        dist = nxt
    return dist.get(target, 0)


def count_b(n: int, j: int) -> int:
    """Monotone factorizations: tuples ((a_1 b_1), ..., (a_j b_j)) with
    a_i < b_i and b_1 <= ... <= b_j composing to the long cycle."""
    _check(n <= MAX_N and j <= MAX_J, f"count_b guardrail: n<={MAX_N}, j<={MAX_J}")
    target = long_cycle(n)
    if n == 1:
        return 1 if j == 0 else 0
    # state: (partial product, last max entry used)
    dist = {(identity(n), 2): 1}
    for _ in range(j):
        nxt = {}
        for (w, last_b), c in dist.items():
            for b in range(last_b, n + 1):
                for a in range(1, b):
                    key = (w.compose(transposition(n, a, b)), b)
                    nxt[key] = nxt.get(key, 0) + c
        dist = nxt
    return sum(c for (w, _), c in dist.items() if w == target)


def count_c(n: int, p) -> int:
    """Tuples (pi_1, ..., pi_m) composing to the long cycle, where pi_i has
    n - p_i cycles."""
    p = tuple(int(x) for x in p)
    m = len(p)
    _check(n <= MAX_N and m <= MAX_M, f"count_c guardrail: n<={MAX_N}, m<={MAX_M}")
    if any(x < 0 or x > n - 1 for x in p):
        return 0
    target = long_cycle(n)
    if m == 0:
        return 1 if target == identity(n) else 0
    # enumerate the first m-1 factors; the last is forced by division
    count = 0
    streams = [list(permutations_by_cycle_count(n, n - x)) for x in p[:-1]]
    for combo in product(*streams):
        acc = identity(n)
        for w in combo:
            acc = acc.compose(w)
        last = acc.inverse().compose(target)
        if last.num_cycles() == n - p[-1]:
            count += 1
    return count


def jucys_class_sum_check(n: int, k: int) -> bool:
    """e_k of the JM elements at q=1 is the sum of all permutations with
    exactly n-k cycles, each with coefficient 1."""
    _check(n <= MAX_N, f"guardrail: n<={MAX_N}")
    from .heckecore import jm_elementary
    from .permcore import all_permutations

    coeffs = jm_elementary(n, k).specialize_q1()
    for w in all_permutations(n):
        want = 1 if n - w.num_cycles() == k else 0
        if coeffs.get(w, 0) != want:
            return False
    return True


# ---------------------------------------------------------------------------
# classical generating-function identities
# ---------------------------------------------------------------------------

def _series_product(factors, order):
    """Product of rational power series given as coefficient lists."""
    out = [Fraction(0)] * (order + 1)
    out[0] = Fraction(1)
    for f in factors:
        nxt = [Fraction(0)] * (order + 1)
        for i, a in enumerate(out):
            if a:
                for j, b in enumerate(f):
                    if i + j > order:
                        break
                    nxt[i + j] += a * b
        out = nxt
    return out


def _geometric(alpha, order):
    """1/(1 - alpha t) up to the given order."""
    out = [Fraction(1)]
    for _ in range(order):
        out.append(out[-1] * alpha)
    return out


def check_jackson_gf(n: int, jmax: int) -> bool:
    """The closed rational generating function for the transposition counts:
    sum_j a(n;j) t^j = n^{n-2} t^{n-1} / prod_{k=0}^{n-1} (1 - n((n-1)/2 - k) t)."""
    alphas = [Fraction(n) * (Fraction(n - 1, 2) - k) for k in range(n)]
    series = _series_product([_geometric(a, jmax) for a in alphas], jmax)
    lead = n ** (n - 2) if n >= 2 else 1
    for j in range(jmax + 1):
        rhs = lead * series[j - (n - 1)] if j >= n - 1 else Fraction(0)
        if Fraction(count_a(n, j)) != rhs:
            return False
    return True


def check_matsumoto_novak_gf(n: int, jmax: int) -> bool:
    """The monotone analogue:
    sum_j b(n;j) t^j = C_{n-1} t^{n-1} / prod_{k=0}^{n-1} (1 - k^2 t^2)."""
    factors = []
    for k in range(n):
        f = [Fraction(0)] * (jmax + 1)
        power = Fraction(1)
        for i in range(0, jmax + 1, 2):
            f[i] = power
            power *= k * k
        factors.append(f)
    series = _series_product(factors, jmax)
    cat = comb(2 * n - 2, n - 1) // n
    for j in range(jmax + 1):
        rhs = cat * series[j - (n - 1)] if j >= n - 1 else Fraction(0)
        if Fraction(count_b(n, j)) != rhs:
            return False
    return True


def _binom_poly(k: int):
    """Coefficients of the classical binomial-basis polynomial binom(t, k)."""
    coeffs = [Fraction(1)]
    for i in range(k):
        # multiply by (t - i)
        nxt = [Fraction(0)] * (len(coeffs) + 1)
        for d, c in enumerate(coeffs):
            nxt[d + 1] += c
            nxt[d] -= c * i
        coeffs = nxt
    inv = Fraction(1, factorial(k))
    return [c * inv for c in coeffs]


def check_jackson_sn(n: int, m: int) -> bool:
    """The multivariate binomial-basis identity: the generating polynomial of
    c(n; p) in t^{n-p} equals n!^{m-1} sum_r M^{n-1}_r prod binom(t_i, n-r_i)."""
    from .mqpoly import m_classic

    _check(n <= MAX_N and m <= MAX_M, f"guardrail: n<={MAX_N}, m<={MAX_M}")
    lhs = {}
    for p in product(range(n), repeat=m):
        c = count_c(n, p)
        if c:
            lhs[tuple(n - x for x in p)] = Fraction(c)

    rhs = {}
    scale = Fraction(factorial(n) ** (m - 1))
    binoms = {k: _binom_poly(k) for k in range(1, n + 1)}
    for r in product(range(n), repeat=m):
        mc = m_classic(n - 1, r)
        if not mc:
            continue
        # expand the product of univariate binomial polynomials
        expo_terms = [((), Fraction(1))]
        for i in range(m):
            poly = binoms[n - r[i]]
            expo_terms = [(prefix + (d,), coef * c)
                          for prefix, coef in expo_terms
                          for d, c in enumerate(poly) if c]
        for exps, coef in expo_terms:
            val = rhs.get(exps, Fraction(0)) + scale * mc * coef
            if val:
                rhs[exps] = val
            else:
                rhs.pop(exps, None)
    return lhs == rhs
