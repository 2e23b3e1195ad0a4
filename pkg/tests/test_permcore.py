"""Permutations, partitions, reduced words, conjugacy-class minimality."""

import pytest
from hypothesis import given
from hypothesis import strategies as st

from heckefact.errors import IndexOutOfRange, ParseError, SizeMismatch
from heckefact.permcore import (Partition, Permutation, all_permutations,
                                from_cycles, identity, long_cycle,
                                parse_permutation, partitions_of,
                                permutations_by_cycle_count, simple,
                                transposition)

perms = st.integers(min_value=1, max_value=6).flatmap(
    lambda n: st.permutations(list(range(1, n + 1)))).map(Permutation)


class TestGroupStructure:
    @given(perms)
    def test_inverse(self, w):
        assert w.compose(w.inverse()) == identity(w.n)
        assert w.inverse().compose(w) == identity(w.n)

    def test_compose_convention(self):
        # (u o w)(i) = u(w(i))
        u = Permutation([2, 1, 3])
        w = Permutation([1, 3, 2])
        assert u.compose(w).images == (2, 3, 1)

    def test_size_mismatch(self):
        with pytest.raises(SizeMismatch):
            identity(3).compose(identity(4))

    def test_mul_s_conventions(self):
        w = Permutation([3, 1, 2])
        assert w.right_mul_s(1).images == (1, 3, 2)   # swap positions 1,2
        assert w.left_mul_s(1).images == (3, 2, 1)    # swap values 1,2


class TestLengthAndWords:
    def test_long_cycle(self):
        assert long_cycle(1) == identity(1)
        c3 = long_cycle(3)
        assert c3.images == (2, 3, 1) and c3.length() == 2
        c5 = long_cycle(5)
        assert c5.length() == 4 and c5.cycle_type() == Partition([5])

    def test_identity_and_simple(self):
        assert identity(4).length() == 0
        assert identity(4).reduced_word() == ()
        assert simple(4, 2).reduced_word() == (2,)

    def test_reduced_word_folds_back(self):
        for n in range(1, 6):
            for w in all_permutations(n):
                word = w.reduced_word()
                assert len(word) == w.length()
                acc = identity(n)
                for i in word:
                    acc = acc.compose(simple(n, i))
                assert acc == w

    def test_length_additivity(self):
        for w in all_permutations(4):
            for i in range(1, 4):
                assert abs(w.right_mul_s(i).length() - w.length()) == 1


class TestCycles:
    def test_cycle_type_and_minimality(self):
        assert identity(4).cycle_type() == Partition([1, 1, 1, 1])
        assert identity(4).is_min_length_in_class()
        assert long_cycle(5).is_min_length_in_class()
        w13 = Permutation([3, 2, 1])
        assert w13.cycle_type() == Partition([2, 1])
        assert not w13.is_min_length_in_class()

    def test_minimality_matches_exhaustive(self):
        for n in range(1, 6):
            best = {}
            perms_n = list(all_permutations(n))
            for w in perms_n:
                t = w.cycle_type()
                best[t] = min(best.get(t, n * n), w.length())
            for w in perms_n:
                assert w.is_min_length_in_class() == \
                    (w.length() == best[w.cycle_type()])

    def test_permutations_by_cycle_count(self):
        assert list(permutations_by_cycle_count(3, 3)) == [identity(3)]
        three_cycles = list(permutations_by_cycle_count(3, 1))
        assert sorted(w.images for w in three_cycles) == [(2, 3, 1), (3, 1, 2)]
        assert len(list(permutations_by_cycle_count(4, 2))) == 11
        with pytest.raises(IndexOutOfRange):
            list(permutations_by_cycle_count(3, 0))

    def test_from_cycles(self):
        assert from_cycles(4, [(1, 2, 3)]).images == (2, 3, 1, 4)
        assert transposition(4, 1, 3).images == (3, 2, 1, 4)


class TestPartition:
    def test_validation(self):
        with pytest.raises(ValueError):
            Partition([1, 2])
        with pytest.raises(ValueError):
            Partition([2, 0])

    def test_conjugate_involution(self):
        for n in range(0, 8):
            for lam in partitions_of(n):
                assert lam.conjugate().conjugate() == lam

    def test_hooks_and_nlam(self):
        lam = Partition([3, 1])
        assert sorted(lam.hook_lengths()) == [1, 1, 2, 4]
        assert lam.nlam() == 1
        assert Partition([1, 1, 1]).nlam() == 3

    def test_partitions_of_count(self):
        assert len(list(partitions_of(6))) == 11
        assert list(partitions_of(0)) == [Partition([])]


class TestParsing:
    def test_one_line(self):
        assert parse_permutation("2,3,1") == Permutation([2, 3, 1])

    def test_cycle_notation(self):
        assert parse_permutation("(1 2 3)") == Permutation([2, 3, 1])
        assert parse_permutation("(1 2)(3 4)") == Permutation([2, 1, 4, 3])
        assert parse_permutation("(1 3)", n=4) == Permutation([3, 2, 1, 4])

    def test_parse_errors(self):
        for bad in ("2,2,1", "(1 2", "a,b", "(1 2)(2 3)"):
            with pytest.raises(ParseError):
                parse_permutation(bad)
