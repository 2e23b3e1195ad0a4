"""The M^n_r(q) family: four algorithms, recurrences, special cases."""

from itertools import permutations, product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from heckefact.errors import (FieldNotSupported, NotASubset,
                              RankGuardExceeded, UnionNotFull)
from heckefact.mqpoly import (check_gf_classic, check_recursion_q,
                              check_recursions_classic, inv_su, is_unimodal,
                              m_classic, mq_alt, mq_bolan, mq_stat,
                              mq_subspaces, stat, unimodality_report)
from heckefact.qalgebra import LaurentPoly, binom2, q_multinomial


class TestStatistic:
    def test_inv(self):
        assert inv_su({1, 3}, {1, 2, 3}) == 1
        assert inv_su(set(), {1, 2}) == 0
        with pytest.raises(NotASubset):
            inv_su({4}, {1, 2})

    def test_worked_example(self):
        assert stat([{1, 2, 3, 5}, {1, 3, 5}, {2, 4, 6}]) == 16

    def test_single_set(self):
        assert stat([{1, 2, 3}]) == 0

    def test_union_not_full(self):
        with pytest.raises(UnionNotFull):
            stat([{1, 3}])


class TestPaperValues:
    def test_fixed_polynomials(self):
        assert mq_alt(3, (2, 2)) == LaurentPoly({1: 1, 2: 2, 3: 2, 4: 1})
        assert mq_alt(4, (2, 2)) == LaurentPoly({4: 1, 5: 1, 6: 2, 7: 1, 8: 1})
        assert mq_alt(3, (2, 2, 1)) == \
            LaurentPoly({1: 1, 2: 4, 3: 6, 4: 6, 5: 3, 6: 1})
        assert mq_bolan(2, (1, 1)) == LaurentPoly({1: 1, 2: 1})

    def test_base_cases(self):
        assert mq_bolan(4, (4,)) == LaurentPoly({0: 1})
        assert mq_alt(4, (3,)).is_zero()
        assert m_classic(3, (2, 2)) == 6
        assert m_classic(3, (3, 3)) == 1
        assert m_classic(3, (1, 1)) == 0
        assert mq_stat(1, (1, 1)) == LaurentPoly({0: 1})


class TestCrossChecks:
    def test_four_way_small(self):
        for n in range(5):
            for m in (1, 2, 3):
                for r in product(range(n + 1), repeat=m):
                    a = mq_alt(n, r)
                    assert a == mq_bolan(n, r), (n, r)
                    assert a == mq_stat(n, r), (n, r)
                    assert a.at_one() == m_classic(n, r), (n, r)

    def test_subspace_counts(self):
        assert mq_subspaces(2, (1, 1), 2) == 6
        assert mq_subspaces(3, (3,), 3) == 1
        assert mq_subspaces(3, (2, 2), 2) == 42
        for qval in (2, 3):
            for r in product(range(4), repeat=2):
                assert mq_subspaces(3, r, qval) == \
                    mq_alt(3, r).eval_at(qval), (r, qval)

    def test_subspace_f4(self):
        assert mq_subspaces(2, (1, 1), 4) == mq_alt(2, (1, 1)).eval_at(4)
        assert mq_subspaces(2, (2, 1), 4) == mq_alt(2, (2, 1)).eval_at(4)

    def test_subspace_guardrails(self):
        with pytest.raises(FieldNotSupported):
            mq_subspaces(2, (1, 1), 5)
        with pytest.raises(RankGuardExceeded):
            mq_subspaces(5, (1, 1), 2)

    @given(st.integers(min_value=0, max_value=4), st.data())
    @settings(max_examples=30, deadline=None)
    def test_symmetry_under_permuting_r(self, n, data):
        m = data.draw(st.integers(min_value=1, max_value=3))
        r = tuple(data.draw(st.integers(min_value=0, max_value=n))
                  for _ in range(m))
        base = mq_alt(n, r)
        for perm in permutations(r):
            assert mq_alt(n, perm) == base
            assert mq_bolan(n, perm) == base


class TestSpecialCases:
    def test_composition_case(self):
        # sum r_i = n gives a shifted q-multinomial
        for n in range(1, 6):
            for m in (2, 3):
                for r in product(range(n + 1), repeat=m):
                    if sum(r) != n:
                        continue
                    want = q_multinomial(n, r).shift(
                        binom2(n) - sum(binom2(x) for x in r))
                    assert mq_alt(n, r) == want, (n, r)

    def test_two_factor_case(self):
        for n in range(1, 7):
            for r1 in range(n + 1):
                for r2 in range(n + 1):
                    if r1 + r2 > n:
                        continue
                    want = q_multinomial(n, (r1, r2, n - r1 - r2)).shift(r1 * r2)
                    assert mq_alt(n, (n - r1, n - r2)) == want, (n, r1, r2)

    def test_nonnegativity(self):
        for n in range(5):
            for r in product(range(n + 1), repeat=2):
                p = mq_bolan(n, r)
                assert all(c >= 0 for c in p.terms.values()), (n, r)


class TestRecurrences:
    def test_q_recurrence(self):
        for n in range(1, 5):
            for m in (1, 2, 3):
                for r in product(range(n + 1), repeat=m):
                    assert check_recursion_q(n, r), (n, r)

    def test_classical_recurrences(self):
        for n in range(1, 5):
            for m in (1, 2, 3):
                for r in product(range(n + 1), repeat=m):
                    assert check_recursions_classic(n, r), (n, r)

    def test_classical_gf(self):
        for n in range(4):
            for m in (1, 2, 3):
                assert check_gf_classic(n, m), (n, m)


class TestUnimodality:
    def test_is_unimodal(self):
        assert is_unimodal(LaurentPoly({0: 1, 1: 2, 2: 1}))
        assert is_unimodal(LaurentPoly({4: 1, 5: 1, 6: 2, 7: 1, 8: 1}))
        assert not is_unimodal(LaurentPoly({0: 2, 1: 1, 2: 2}))
        assert is_unimodal(LaurentPoly({}))

    def test_scan_clean(self):
        checked, violations = unimodality_report(4, 3)
        assert checked > 0
        assert violations == []
