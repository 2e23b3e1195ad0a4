"""The subspace-coverage polynomial family M^n_r(q) by four independent
algorithms, its classical q=1 counterpart, and its structural checks.

The four routes (alternating-sum formula, positive recurrence, subset
statistic, literal subspace count over a small finite field) share no code,
so their agreement is a strong correctness signal.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations, product

from .errors import (FieldNotSupported, NotASubset, RankGuardExceeded,
                     UnionNotFull)
from .qalgebra import (ONE, ZERO, LaurentPoly, binom2, q_binomial,
                       q_multinomial)


# ---------------------------------------------------------------------------
# the subset statistic
# ---------------------------------------------------------------------------

def inv_su(S, U) -> int:
    """inv(S; U): pairs (i, j) in U x U with i < j, i in S, j not in S."""
    S, U = frozenset(S), sorted(U)
    if not S <= set(U):
        raise NotASubset(f"{sorted(S)} not contained in {U}")
    count = 0
    inside = 0
    for j in U:
        if j in S:
            inside += 1
        else:
            count += inside
    return count


def stat(sets, r=None) -> int:
    """The statistic on a tuple of subsets covering its ground set [n].

    T_i are the running unions; each step i >= 2 contributes
    (#T_i - #T_{i-1}) (#T_i - r_i) + inv(T_{i-1}; T_i) + inv(S_i cap T_{i-1}; T_{i-1}).
    """
    sets = [frozenset(s) for s in sets]
    if r is None:
        r = [len(s) for s in sets]
    ground = frozenset().union(*sets) if sets else frozenset()
    n = max(ground) if ground else 0
    if ground != frozenset(range(1, n + 1)):
        raise UnionNotFull(f"union {sorted(ground)} is not an interval [n]")
    total = 0
    T_prev = sets[0]
    for i in range(1, len(sets)):
        T_cur = T_prev | sets[i]
        total += (len(T_cur) - len(T_prev)) * (len(T_cur) - r[i])
        total += inv_su(T_prev, T_cur)
        total += inv_su(sets[i] & T_prev, T_prev)
        T_prev = T_cur
    return total


# ---------------------------------------------------------------------------
# the four algorithms
# ---------------------------------------------------------------------------

def mq_alt(n: int, r) -> LaurentPoly:
    """Alternating-sum formula:
    sum_{k=0}^{n - max r_i} (-1)^k q^{binom(k,2)} [n,k]_q prod_i [n-k, r_i]_q."""
    r = tuple(int(x) for x in r)
    if not r:
        return ONE if n == 0 else ZERO
    top = n - max(r)
    total = ZERO
    for k in range(top + 1):
        term = q_binomial(n, k).shift(binom2(k))
        for ri in r:
            term = term * q_binomial(n - k, ri)
        total = total + (term if k % 2 == 0 else -term)
    return total


@lru_cache(maxsize=None)
def _mq_bolan_cached(n: int, r: tuple) -> LaurentPoly:
    # memo key is (n, r) verbatim: the recurrence peels the LAST coordinate
    if len(r) == 1:
        return ONE if n == r[0] else ZERO
    rm = r[-1]
    total = ZERO
    for i in range(n + 1):
        w1 = q_binomial(n, i)
        w2 = q_binomial(i, rm - n + i)
        if w1.is_zero() or w2.is_zero():
            continue
        head = _mq_bolan_cached(i, r[:-1])
        if head.is_zero():
            continue
        total = total + (w1 * w2 * head).shift((n - i) * (n - rm))
    return total


def mq_bolan(n: int, r) -> LaurentPoly:
    """Positive recurrence with base case M^n_(r)(q) = delta_{n,r}."""
    r = tuple(int(x) for x in r)
    if not r:
        return ONE if n == 0 else ZERO
    return _mq_bolan_cached(n, r)


def _covering_tuples(n: int, r):
    """All tuples (S_1..S_m) with #S_i = r_i and union [n], pruned by the
    remaining-capacity bound."""
    ground = frozenset(range(1, n + 1))
    m = len(r)
    suffix = [0] * (m + 1)
    for i in range(m - 1, -1, -1):
        suffix[i] = suffix[i + 1] + r[i]

    def rec(i, chosen, union):
        if i == m:
            if union == ground:
                yield tuple(chosen)
            return
        if len(ground) - len(union) > suffix[i]:
            return
        for sub in combinations(range(1, n + 1), r[i]):
            chosen.append(frozenset(sub))
            yield from rec(i + 1, chosen, union | chosen[-1])
            chosen.pop()

    yield from rec(0, [], frozenset())


def mq_stat(n: int, r) -> LaurentPoly:
    """Generating-function route: sum of q^stat over covering set tuples."""
    r = tuple(int(x) for x in r)
    if not r:
        return ONE if n == 0 else ZERO
    terms = {}
    for tup in _covering_tuples(n, r):
        s = stat(tup, r)
        terms[s] = terms.get(s, 0) + 1
    return LaurentPoly(terms)


def m_classic(n: int, r) -> int:
    """Classical count of covering set tuples with the given sizes."""
    r = tuple(int(x) for x in r)
    if not r:
        return 1 if n == 0 else 0
    return sum(1 for _ in _covering_tuples(n, r))


# -- subspace counting over small finite fields -----------------------------

# F_4 = {0, 1, w, w+1} encoded 0..3; addition is xor, multiplication tabled.
_F4_MUL = [
    [0, 0, 0, 0],
    [0, 1, 2, 3],
    [0, 2, 3, 1],
    [0, 3, 1, 2],
]


class _Field:
    """Arithmetic for F_2, F_3 (prime, modular) and F_4 (tabled)."""

    def __init__(self, qval):
        if qval not in (2, 3, 4):
            raise FieldNotSupported(f"field size {qval} not supported")
        self.q = qval

    def add(self, a, b):
        if self.q == 4:
            return a ^ b
        return (a + b) % self.q

    def neg(self, a):
        if self.q == 4:
            return a
        return (-a) % self.q

    def mul(self, a, b):
        if self.q == 4:
            return _F4_MUL[a][b]
        return (a * b) % self.q

    def inv(self, a):
        for b in range(1, self.q):
            if self.mul(a, b) == 1:
                return b
        raise ZeroDivisionError("no inverse of 0")


def _rref(rows, field, n):
    """Reduced row-echelon form; returns the tuple of nonzero rows."""
    rows = [list(r) for r in rows]
    pivot_row = 0
    for col in range(n):
        sel = None
        for i in range(pivot_row, len(rows)):
            if rows[i][col]:
                sel = i
                break
        if sel is None:
            continue
        rows[pivot_row], rows[sel] = rows[sel], rows[pivot_row]
        scale = field.inv(rows[pivot_row][col])
        rows[pivot_row] = [field.mul(scale, x) for x in rows[pivot_row]]
        for i in range(len(rows)):
            if i != pivot_row and rows[i][col]:
                factor = rows[i][col]
                rows[i] = [field.add(x, field.neg(field.mul(factor, y)))
                           for x, y in zip(rows[i], rows[pivot_row])]
        pivot_row += 1
        if pivot_row == len(rows):
            break
    return tuple(tuple(r) for r in rows[:pivot_row] if any(r))


def _subspaces_by_dim(n, field):
    """Canonical RREF bases of all subspaces of F_q^n, grouped by dimension."""
    vectors = list(product(range(field.q), repeat=n))
    seen = {}
    # every subspace is the row space of some tuple of <= n vectors; collect
    # canonical forms by closing under single-vector extension
    by_dim = {0: {()}}
    frontier = {()}
    while frontier:
        nxt = set()
        for base in frontier:
            for v in vectors:
                if not any(v):
                    continue
                rr = _rref(list(base) + [list(v)], field, n)
                if len(rr) == len(base) + 1 and rr not in seen:
                    seen[rr] = True
                    by_dim.setdefault(len(rr), set()).add(rr)
                    nxt.add(rr)
        frontier = nxt
    return {d: sorted(s) for d, s in by_dim.items()}


def mq_subspaces(n: int, r, qval: int) -> int:
    """Literal count of subspace tuples (V_1..V_m) of F_qval^n with
    dim V_i = r_i and V_1 + ... + V_m the full space."""
    if n > 4:
        raise RankGuardExceeded(f"subspace enumeration guardrail is n <= 4, got {n}")
    field = _Field(qval)
    r = tuple(int(x) for x in r)
    if any(ri < 0 or ri > n for ri in r):
        return 0
    by_dim = _subspaces_by_dim(n, field)
    pools = [by_dim.get(ri, []) for ri in r]
    count = 0
    for combo in product(*pools):
        stacked = [row for base in combo for row in base]
        if len(_rref(stacked, field, n)) == n:
            count += 1
    return count


# ---------------------------------------------------------------------------
# recurrences and structural checks
# ---------------------------------------------------------------------------

def check_recursion_q(n: int, r) -> bool:
    """The q-recurrence:
    M^n_r(q) = (q^{sum r} - q^{n-1}) M^{n-1}_r(q)
             + sum_{nonempty T subseteq [m]} q^{sum_{i not in T} r_i} M^{n-1}_{r-e_T}(q)."""
    r = tuple(int(x) for x in r)
    m = len(r)
    if n < 1 or m == 0:
        return True
    lhs = mq_alt(n, r)
    rhs = mq_alt(n - 1, r) * (LaurentPoly.monomial(1, sum(r))
                              - LaurentPoly.monomial(1, n - 1))
    for mask in range(1, 1 << m):
        rT = tuple(r[i] - ((mask >> i) & 1) for i in range(m))
        if any(x < 0 for x in rT):
            continue
        shift = sum(r[i] for i in range(m) if not (mask >> i) & 1)
        rhs = rhs + mq_alt(n - 1, rT).shift(shift)
    return lhs == rhs


def check_recursions_classic(n: int, r) -> bool:
    """The classical subset recurrence and the classical peel-last recurrence."""
    from math import comb

    r = tuple(int(x) for x in r)
    m = len(r)
    if n < 1 or m == 0:
        return True
    lhs = m_classic(n, r)
    # key recurrence: condition on which sets contain the letter n
    rhs = 0
    for mask in range(1, 1 << m):
        rT = tuple(r[i] - ((mask >> i) & 1) for i in range(m))
        if any(x < 0 for x in rT):
            continue
        rhs = rhs + m_classic(n - 1, rT)
    if lhs != rhs:
        return False
    # peel-last recurrence: condition on the size i of the union of S_1..S_{m-1}
    if m >= 2:
        rm = r[-1]
        rhs2 = 0
        for i in range(n + 1):
            k = rm - n + i  # letters of S_m drawn inside the partial union
            if k < 0 or k > i:
                continue
            rhs2 += comb(n, i) * comb(i, k) * m_classic(i, r[:-1])
        if lhs != rhs2:
            return False
    return True


def check_gf_classic(n: int, m: int) -> bool:
    """((1+x_1)...(1+x_m) - x_1...x_m)^n expands with the coefficient of
    x_1^{n-r_1} ... x_m^{n-r_m} equal to the classical count for every r."""
    # multivariate polynomial as dict: exponent tuple -> integer
    base = {}
    for mask in range(1 << m):
        exps = tuple((mask >> i) & 1 for i in range(m))
        base[exps] = base.get(exps, 0) + 1
    base[(1,) * m] = base.get((1,) * m, 0) - 1
    base = {e: c for e, c in base.items() if c}

    poly = {(0,) * m: 1}
    for _ in range(n):
        nxt = {}
        for e1, c1 in poly.items():
            for e2, c2 in base.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                nxt[e] = nxt.get(e, 0) + c1 * c2
        poly = {e: c for e, c in nxt.items() if c}

    for r in product(range(n + 1), repeat=m):
        exps = tuple(n - ri for ri in r)
        if poly.get(exps, 0) != m_classic(n, r):
            return False
    return True


def is_unimodal(p: LaurentPoly) -> bool:
    """Coefficients rise then fall along ascending exponents."""
    if p.is_zero():
        return True
    lo, hi = p.valuation(), p.degree()
    coeffs = [p.coeff(e) for e in range(lo, hi + 1)]
    peak = coeffs.index(max(coeffs))
    return (all(coeffs[i] <= coeffs[i + 1] for i in range(peak)) and
            all(coeffs[i] >= coeffs[i + 1] for i in range(peak, len(coeffs) - 1)))


def unimodality_report(n_max: int, m_max: int):
    """Scan M^n_r(q) for n <= n_max, m <= m_max; list non-unimodal cases.

    A conjecture scanner, not an assertion: returns (checked, violations).
    """
    checked = 0
    violations = []
    for n in range(1, n_max + 1):
        for m in range(1, m_max + 1):
            for r in product(range(n + 1), repeat=m):
                p = mq_alt(n, r)
                if p.is_zero():
                    continue
                checked += 1
                if not is_unimodal(p):
                    violations.append((n, r, p))
    return checked, violations
