"""Symmetric-function evaluation, the hook-content formula, reciprocity."""

import pytest

from heckefact.errors import DegreeMismatch, IndexOutOfRange, ParseError
from heckefact.permcore import Partition, long_cycle, partitions_of
from heckefact.qalgebra import (ONE, LaurentPoly, RatFunc, binom2, q_binomial,
                                q_catalan, q_int)
from heckefact.symeval import (SymFunc, coeff_Tc_hook_formula, coeff_Tc_jm,
                               coeff_Tc_reciprocity, eval_scalars,
                               eval_scalars_direct, hook_qcontents, jm_eval,
                               jm_eval_direct, parse_symfunc, ps_closed,
                               principal_specialization)


class TestParsing:
    def test_grammar(self):
        f = parse_symfunc("e[2,1]")
        assert f.family == "e" and f.index == Partition([2, 1])
        assert parse_symfunc("h[3]").family == "h"
        assert parse_symfunc("p[2,2]").index == Partition([2, 2])
        assert parse_symfunc("s[3,1]").family == "s"
        assert parse_symfunc("e[0]").index == Partition([])

    def test_bad_input(self):
        for bad in ("x[2]", "e[2,", "e(2)", "e[-1]"):
            with pytest.raises(ParseError):
                parse_symfunc(bad)


class TestHookContents:
    def test_values(self):
        assert hook_qcontents(3, 0) == [q_int(0), q_int(1), q_int(2)]
        assert hook_qcontents(3, 1) == [q_int(-1), q_int(0), q_int(1)]
        with pytest.raises(IndexOutOfRange):
            hook_qcontents(3, 3)

    def test_e1_closed_form(self):
        # e_1 of the hook contents is (n - q^{-k}[n]_q)/(1-q)
        for n in range(2, 7):
            for k in range(n):
                e1 = eval_scalars(SymFunc("e", [1]), hook_qcontents(n, k))
                lhs = RatFunc.from_laurent(e1) * \
                    (RatFunc.const(1) - RatFunc((0, 1)))
                rhs = RatFunc.const(n) - \
                    RatFunc.from_laurent(q_int(n).shift(-k))
                assert lhs == rhs


class TestScalarEvaluation:
    def test_simple_values(self):
        xs = [ONE, LaurentPoly({1: 1}), LaurentPoly({2: 1})]
        assert eval_scalars(SymFunc("e", [1]), xs) == q_int(3)
        assert eval_scalars(SymFunc("h", [2]), [LaurentPoly({1: 1})]) == \
            LaurentPoly({2: 1})
        a, b = LaurentPoly({0: 2}), LaurentPoly({0: 3})
        assert eval_scalars(SymFunc("s", [1, 1]), [a, b]) == \
            eval_scalars(SymFunc("e", [2]), [a, b])

    def test_reductions_match_direct(self):
        xs = [q_int(j) for j in range(-2, 3)]
        for family in ("e", "h", "p", "s"):
            for d in range(1, 5):
                for lam in partitions_of(d):
                    f = SymFunc(family, lam)
                    assert eval_scalars(f, xs) == eval_scalars_direct(f, xs), \
                        f.text()


class TestJmEval:
    def test_reductions_match_direct(self):
        for n in (2, 3, 4):
            for family in ("e", "h", "p", "s"):
                for d in range(1, 4):
                    for lam in partitions_of(d):
                        f = SymFunc(family, lam)
                        assert jm_eval(f, n) == jm_eval_direct(f, n), \
                            (n, f.text())

    def test_paper_examples(self):
        assert coeff_Tc_jm(SymFunc("e", [1, 1]), 3) == \
            LaurentPoly({-3: 1, -2: 1, -1: 1})
        assert coeff_Tc_jm(SymFunc("h", [2]), 3) == LaurentPoly({-3: 1, -1: 1})

    def test_centrality(self):
        from heckefact.heckecore import is_central

        for family in ("e", "h", "p", "s"):
            for lam in ([2], [1, 1]):
                assert is_central(jm_eval(SymFunc(family, lam), 3))


class TestHookFormula:
    def test_paper_examples(self):
        got = coeff_Tc_hook_formula(SymFunc("e", [1, 1]), 3)
        assert got.as_laurent() == LaurentPoly({-3: 1, -2: 1, -1: 1})
        assert coeff_Tc_hook_formula(SymFunc("e", []), 3).is_zero()
        got = coeff_Tc_hook_formula(SymFunc("e", [2, 1]), 4)
        assert got.as_laurent() == \
            LaurentPoly({-5: 1, -4: 1, -3: 2, -2: 1, -1: 1})

    def test_matches_direct_expansion(self):
        for n in (2, 3, 4):
            for family in ("e", "h", "p", "s"):
                for lam in partitions_of(n - 1):
                    f = SymFunc(family, lam)
                    assert coeff_Tc_hook_formula(f, n) == \
                        RatFunc.from_laurent(coeff_Tc_jm(f, n)), (n, f.text())


class TestPrincipalSpecialization:
    def test_simple(self):
        assert principal_specialization(SymFunc("e", [1]), 3) == q_int(3)
        assert principal_specialization(SymFunc("h", [2]), 2) == q_binomial(3, 2)

    def test_closed_forms(self):
        for n in (2, 3, 4, 5):
            for family in ("e", "h", "p", "s"):
                for d in range(1, n + 1):
                    for lam in partitions_of(d):
                        f = SymFunc(family, lam)
                        assert principal_specialization(f, n) == \
                            ps_closed(f, n), (n, f.text())

    def test_schur_example(self):
        f = SymFunc("s", [2, 1])
        xs = [ONE, LaurentPoly({1: 1}), LaurentPoly({2: 1})]
        assert principal_specialization(f, 3) == \
            eval_scalars_direct(f, xs)


class TestReciprocity:
    def test_degree_mismatch(self):
        with pytest.raises(DegreeMismatch):
            coeff_Tc_reciprocity(SymFunc("h", [2]), 4)

    def test_closed_leading_values(self):
        # h_{n-1} gives the q-Catalan and e_{1^{n-1}} the tree count
        for n in range(2, 6):
            cat = coeff_Tc_reciprocity(SymFunc("h", [n - 1]), n)
            assert cat.as_laurent() == q_catalan(n - 1).shift(-binom2(n))
            tree = coeff_Tc_reciprocity(SymFunc("e", [1] * (n - 1)), n)
            assert tree.as_laurent() == \
                (q_int(n) ** (n - 2)).shift(-binom2(n))

    def test_three_way_agreement(self):
        for n in (2, 3, 4):
            for family in ("e", "h", "p", "s"):
                for lam in partitions_of(n - 1):
                    f = SymFunc(family, lam)
                    direct = RatFunc.from_laurent(coeff_Tc_jm(f, n))
                    assert direct == coeff_Tc_hook_formula(f, n)
                    assert direct == coeff_Tc_reciprocity(f, n)
