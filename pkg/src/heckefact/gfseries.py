"""Truncated power series in t and multivariate polynomials in t_1..t_m over
exact rational functions of q; used to state and verify the generating-function
identities for the long-cycle coefficients.

Series denominators are never divided out: each factor 1/(1 - alpha t) is
expanded as a geometric series up to the truncation order and convolved in.
"""

from __future__ import annotations

from itertools import product

from .errors import GuardrailExceeded, IndexOutOfRange
from .qalgebra import (RF_ONE, RF_ZERO, LaurentPoly, RatFunc, TPoly, binom2,
                       q_binom_t, q_binomial, q_catalan, q_factorial, q_int)


class TSeries:
    """A power series in t truncated at order N, with RatFunc coefficients."""

    __slots__ = ("order", "coeffs")

    def __init__(self, order, coeffs=()):
        cs = list(coeffs)[:order + 1]
        cs += [RF_ZERO] * (order + 1 - len(cs))
        cs = [c if isinstance(c, RatFunc) else RatFunc.from_laurent(c)
              if isinstance(c, LaurentPoly) else RatFunc.const(c) for c in cs]
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("TSeries is immutable")

    def coeff(self, j) -> RatFunc:
        return self.coeffs[j] if 0 <= j <= self.order else RF_ZERO

    def __eq__(self, other):
        if not isinstance(other, TSeries):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __mul__(self, other):
        if not isinstance(other, TSeries):
            return NotImplemented
        N = min(self.order, other.order)
        out = [RF_ZERO] * (N + 1)
        for i, a in enumerate(self.coeffs[:N + 1]):
            if a.is_zero():
                continue
            for j, b in enumerate(other.coeffs[:N + 1 - i]):
                if not b.is_zero():
                    out[i + j] = out[i + j] + a * b
        return TSeries(N, out)

    def __repr__(self):
        return f"TSeries(order={self.order}, {[c.text() for c in self.coeffs]})"


def geometric(alpha, N: int) -> TSeries:
    """1/(1 - alpha t) truncated at order N."""
    if not isinstance(alpha, RatFunc):
        alpha = RatFunc.from_laurent(alpha) if isinstance(alpha, LaurentPoly) \
            else RatFunc.const(alpha)
    coeffs = [RF_ONE]
    for _ in range(N):
        coeffs.append(coeffs[-1] * alpha)
    return TSeries(N, coeffs)


def monomial_series(c, d: int, N: int) -> TSeries:
    """c * t^d truncated at order N."""
    coeffs = [RF_ZERO] * (N + 1)
    if d <= N:
        coeffs[d] = c if isinstance(c, RatFunc) else RatFunc.from_laurent(c)
    return TSeries(N, coeffs)


def tree_alpha(n: int, j: int) -> LaurentPoly:
    """The pole location (n - q^{-j}[n]_q)/(1-q), expanded exactly as the
    Laurent polynomial sum_{i=-j}^{n-j-1} [i]_q."""
    total = LaurentPoly()
    for i in range(-j, n - j):
        total = total + q_int(i)
    return total


def rhs_tree(n: int, N: int) -> TSeries:
    """Closed generating function for the all-transpositions coefficients:
    q^{-binom(n,2)} [n]^{n-2} t^{n-1} / prod_{j=0}^{n-1} (1 - alpha_j t)."""
    lead = (q_int(n) ** (n - 2) if n >= 2 else q_factorial(0))
    series = monomial_series(lead.shift(-binom2(n)), n - 1, N)
    for j in range(n):
        series = series * geometric(tree_alpha(n, j), N)
    return series


def rhs_cat(n: int, N: int) -> TSeries:
    """Closed generating function for the monotone coefficients:
    q^{-binom(n,2)} C_{n-1}(q) t^{n-1} / prod_{j=-(n-1)}^{n-1} (1 - [j]_q t)."""
    series = monomial_series(q_catalan(n - 1).shift(-binom2(n)), n - 1, N)
    for j in range(-(n - 1), n):
        if j != 0:
            series = series * geometric(q_int(j), N)
    return series


def etilde_nk(n: int, k: int) -> TPoly:
    """The rising-factorial analogue prod_{j=-k}^{n-k-1} (t + [j]_q)."""
    if not (n > 0 and 0 <= k < n):
        raise IndexOutOfRange(f"etilde needs 0 <= k < n, got n={n}, k={k}")
    prod_poly = TPoly.const(RF_ONE)
    t = TPoly.t()
    for j in range(-k, n - k):
        prod_poly = prod_poly * (t + TPoly.const(q_int(j)))
    return prod_poly


def check_etilde_basis(n: int, k: int) -> bool:
    """The binomial-basis expansion:
    etilde_nk = [n]!_q sum_{j=k+1}^n q^{-(n-j)j} [n-1-k choose n-j]_q binom(t,j)_q."""
    lhs = etilde_nk(n, k)
    fact = RatFunc.from_laurent(q_factorial(n))
    rhs = TPoly()
    for j in range(k + 1, n + 1):
        w = q_binomial(n - 1 - k, n - j).shift(-(n - j) * j)
        if w.is_zero():
            continue
        rhs = rhs + q_binom_t(j).scale(fact * RatFunc.from_laurent(w))
    return lhs == rhs


# ---------------------------------------------------------------------------
# the multivariate generating function F_n(q; t_1..t_m)
# ---------------------------------------------------------------------------

MAX_N = 5
MAX_M = 3


def _check_guard(n, m):
    if n > MAX_N or m > MAX_M:
        raise GuardrailExceeded(
            f"F_n guardrail: n<={MAX_N}, m<={MAX_M}, got n={n}, m={m}")


class MPolyT:
    """A polynomial in t_1..t_m: exponent tuples -> RatFunc, no zeros."""

    __slots__ = ("m", "terms")

    def __init__(self, m, terms=None):
        clean = {}
        if terms:
            for e, c in terms.items():
                if not isinstance(c, RatFunc):
                    c = RatFunc.from_laurent(c) if isinstance(c, LaurentPoly) \
                        else RatFunc.const(c)
                if not c.is_zero():
                    clean[tuple(e)] = c
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("MPolyT is immutable")

    def coeff(self, exps) -> RatFunc:
        return self.terms.get(tuple(exps), RF_ZERO)

    def __eq__(self, other):
        if not isinstance(other, MPolyT):
            return NotImplemented
        return self.m == other.m and self.terms == other.terms

    def __add__(self, other):
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e, RF_ZERO) + c
            if s.is_zero():
                out.pop(e, None)
            else:
                out[e] = s
        return MPolyT(self.m, out)

    def __repr__(self):
        items = ", ".join(f"{e}: {c.text()}" for e, c in sorted(self.terms.items()))
        return f"MPolyT(m={self.m}, {{{items}}})"


def lhs_F(n: int, m: int) -> MPolyT:
    """F_n(q;t) assembled from Hecke expansions:
    sum over p of [T_c](e_{p_1} ... e_{p_m})(Xi_n) * t_1^{n-p_1} ... t_m^{n-p_m}."""
    from .heckecore import coeff_longcycle_e_product

    _check_guard(n, m)
    terms = {}
    for p in product(range(n), repeat=m):
        c = coeff_longcycle_e_product(n, p)
        if not c.is_zero():
            terms[tuple(n - x for x in p)] = RatFunc.from_laurent(c)
    return MPolyT(m, terms)


def rhs_F(n: int, m: int) -> MPolyT:
    """F_n(q;t) assembled from the subspace-count family:
    [n]!^{m-1} sum over r of q^{-sum (n-r_i) r_i} M^{n-1}_r(q)
    binom(t_1, n-r_1)_q ... binom(t_m, n-r_m)_q."""
    from .mqpoly import mq_alt

    _check_guard(n, m)
    fact = RatFunc.from_laurent(q_factorial(n)) ** (m - 1)
    binoms = {k: q_binom_t(k) for k in range(1, n + 1)}
    total = MPolyT(m)
    for r in product(range(n), repeat=m):
        mpoly = mq_alt(n - 1, r)
        if mpoly.is_zero():
            continue
        shift = -sum((n - ri) * ri for ri in r)
        scale = fact * RatFunc.from_laurent(mpoly.shift(shift))
        # expand the product of univariate q-binomial basis polynomials
        expo_terms = [((), scale)]
        for i in range(m):
            poly = binoms[n - r[i]]
            expo_terms = [(prefix + (d,), coef * c)
                          for prefix, coef in expo_terms
                          for d, c in enumerate(poly.coeffs) if not c.is_zero()]
        total = total + MPolyT(m, dict(expo_terms))
    return total
