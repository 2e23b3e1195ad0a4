"""Classical q=1 brute-force counters and their generating functions."""

import pytest

from heckefact.errors import GuardrailExceeded
from heckefact.oracle import (check_jackson_gf, check_jackson_sn,
                              check_matsumoto_novak_gf, count_a, count_b,
                              count_c, jucys_class_sum_check)


class TestCounts:
    def test_count_a(self):
        assert count_a(3, 2) == 3
        assert count_a(4, 3) == 16  # n^{n-2}
        assert count_a(5, 4) == 125
        assert count_a(4, 2) == 0   # parity/connectivity
        assert count_a(4, 4) == 0

    def test_count_b(self):
        assert count_b(2, 1) == 1
        assert count_b(3, 2) == 2
        assert count_b(4, 3) == 5   # Catalan
        assert count_b(5, 4) == 14

    def test_count_c(self):
        assert count_c(4, (2, 1)) == 6   # Narayana N_{4,3}
        assert count_c(4, (3,)) == 1
        assert count_c(3, (1, 1)) == count_a(3, 2) == 3
        assert count_c(4, (0, 0)) == 0

    def test_guardrails(self):
        with pytest.raises(GuardrailExceeded):
            count_a(6, 5)
        with pytest.raises(GuardrailExceeded):
            count_b(3, 8)
        with pytest.raises(GuardrailExceeded):
            count_c(4, (1, 1, 1, 1))


class TestClassSum:
    def test_examples(self):
        assert jucys_class_sum_check(4, 1)
        assert jucys_class_sum_check(4, 0)
        assert jucys_class_sum_check(5, 3)


class TestGeneratingFunctions:
    def test_jackson(self):
        for n in (2, 3, 4):
            assert check_jackson_gf(n, 7)
        assert check_jackson_gf(5, 6)

    def test_matsumoto_novak(self):
        for n in (2, 3, 4):
            assert check_matsumoto_novak_gf(n, 7)
        assert check_matsumoto_novak_gf(5, 6)

    def test_jackson_sn(self):
        for n in (2, 3, 4):
            assert check_jackson_sn(n, 2)
        assert check_jackson_sn(3, 3)


class TestQ1Agreement:
    def test_against_hecke(self):
        from heckefact.heckecore import coeff_longcycle_e_product
        from heckefact.permcore import Partition
        from heckefact.symeval import SymFunc, coeff_Tc_jm

        for n in (2, 3, 4):
            for j in range(n + 2):
                aq = coeff_Tc_jm(SymFunc("e", Partition([1] * j)), n)
                assert aq.at_one() == count_a(n, j), (n, j)
                bq = coeff_Tc_jm(SymFunc("h", Partition([j] if j else [])), n)
                assert bq.at_one() == count_b(n, j), (n, j)
            for p1 in range(n):
                for p2 in range(n):
                    cq = coeff_longcycle_e_product(n, (p1, p2))
                    assert cq.at_one() == count_c(n, (p1, p2)), (n, p1, p2)
