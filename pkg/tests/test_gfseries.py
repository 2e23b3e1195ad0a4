"""Generating-function identities: series, change of basis, multivariate F."""

from fractions import Fraction

import pytest

from heckefact.errors import GuardrailExceeded, IndexOutOfRange
from heckefact.gfseries import (MPolyT, TSeries, check_etilde_basis,
                                etilde_nk, geometric, lhs_F, rhs_F, rhs_cat,
                                rhs_tree, tree_alpha)
from heckefact.permcore import Partition
from heckefact.qalgebra import (RF_ONE, RatFunc, TPoly, binom2, q_catalan,
                                q_int)
from heckefact.symeval import SymFunc, coeff_Tc_jm


class TestTSeries:
    def test_truncation(self):
        g = geometric(RatFunc.const(2), 4)
        assert [c.eval_at(1) for c in g.coeffs] == [1, 2, 4, 8, 16]
        prod = g * g
        assert prod.order == 4
        assert prod.coeff(4).eval_at(1) == 5 * 16

    def test_alpha_closed_form(self):
        # (n - q^{-j}[n]_q)/(1-q) as an exact Laurent polynomial
        for n in range(2, 6):
            for j in range(n):
                lhs = RatFunc.from_laurent(tree_alpha(n, j)) * \
                    (RatFunc.const(1) - RatFunc((0, 1)))
                rhs = RatFunc.const(n) - RatFunc.from_laurent(q_int(n).shift(-j))
                assert lhs == rhs


class TestTreeAndCat:
    def test_low_coefficients_vanish(self):
        s = rhs_tree(4, 6)
        for j in range(3):
            assert s.coeff(j).is_zero()
        s = rhs_cat(4, 6)
        for j in range(3):
            assert s.coeff(j).is_zero()

    def test_leading_terms(self):
        for n in (2, 3, 4, 5):
            s = rhs_tree(n, n)
            want = (q_int(n) ** (n - 2)).shift(-binom2(n))
            assert s.coeff(n - 1) == RatFunc.from_laurent(want)
            s = rhs_cat(n, n)
            want = q_catalan(n - 1).shift(-binom2(n))
            assert s.coeff(n - 1) == RatFunc.from_laurent(want)

    def test_against_hecke_small(self):
        n, N = 3, 6
        st_, sc = rhs_tree(n, N), rhs_cat(n, N)
        for j in range(N + 1):
            aq = coeff_Tc_jm(SymFunc("e", Partition([1] * j)), n)
            assert st_.coeff(j) == RatFunc.from_laurent(aq), j
            bq = coeff_Tc_jm(SymFunc("h", Partition([j] if j else [])), n)
            assert sc.coeff(j) == RatFunc.from_laurent(bq), j


class TestEtilde:
    def test_degenerate(self):
        assert etilde_nk(1, 0) == TPoly.t()
        with pytest.raises(IndexOutOfRange):
            etilde_nk(3, 3)

    def test_basis_expansion(self):
        for n in range(1, 7):
            for k in range(n):
                assert check_etilde_basis(n, k), (n, k)

    def test_q1_rising_factorial(self):
        # at q=1 the product becomes (t-k)(t-k+1)...(t+n-k-1)
        for n in range(1, 6):
            for k in range(n):
                coeffs = etilde_nk(n, k).specialize_q(1)
                want = [Fraction(1)]
                for j in range(-k, n - k):
                    nxt = [Fraction(0)] * (len(want) + 1)
                    for d, c in enumerate(want):
                        nxt[d + 1] += c
                        nxt[d] += c * j
                    want = nxt
                assert coeffs == want, (n, k)


class TestMultivariateF:
    def test_identity_small(self):
        assert lhs_F(2, 2) == rhs_F(2, 2)
        assert lhs_F(3, 2) == rhs_F(3, 2)
        assert lhs_F(3, 3) == rhs_F(3, 3)

    def test_m1_coefficient(self):
        # coefficient of t^1 in the single-variable case is c_q(n;(n-1)) = q^{1-n}
        for n in (2, 3, 4):
            f = lhs_F(n, 1)
            got = f.coeff((1,))
            assert got.as_laurent() is not None
            assert got.as_laurent().terms == {1 - n: 1}

    def test_guardrail(self):
        with pytest.raises(GuardrailExceeded):
            lhs_F(6, 2)
        with pytest.raises(GuardrailExceeded):
            rhs_F(3, 4)

    def test_mpoly_equality(self):
        a = MPolyT(2, {(1, 0): RF_ONE})
        b = MPolyT(2, {(1, 0): RF_ONE})
        assert a == b
        assert (a + b).coeff((1, 0)) == RatFunc.const(2)
