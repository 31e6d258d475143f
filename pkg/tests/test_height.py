from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tentsym.height import (
    AtLhe,
    HeightBracket,
    c_word,
    decompose_at_height,
    height,
    height_bracket,
    k_seq,
    lhe_rhe,
    w_words,
)
from tentsym.sequences import GT, LT, SeqEP, is_shift_maximal, parity, unimodal_cmp

words = st.text(alphabet="01", min_size=0, max_size=8)
periods = st.text(alphabet="01", min_size=1, max_size=8)
seqs = st.builds(SeqEP, words, periods)


def rationals_in_range(max_den):
    out = []
    for n in range(3, max_den + 1):
        for m in range(1, n):
            q = F(m, n)
            if q.denominator == n and 0 < q < F(1, 2):
                out.append(q)
    return sorted(set(out))


class TestKSeq:
    def test_paper_figure_value(self):
        assert k_seq(F(5, 17)) == [2, 1, 2, 1, 2]

    def test_one_over_n(self):
        for n in range(2, 12):
            assert k_seq(F(1, n)) == [n - 1]

    def test_two_fifths(self):
        assert k_seq(F(2, 5)) == [1, 1]

    def test_out_of_range(self):
        with pytest.raises(ValueError):
            k_seq(F(3, 5))
        with pytest.raises(ValueError):
            k_seq(F(0, 1))


class TestCWord:
    def test_examples(self):
        assert c_word(F(5, 17)) == "100110110011011001"
        assert c_word(F(1, 3)) == "1001"
        assert c_word(F(2, 5)) == "101101"

    def test_length_parity_palindrome(self):
        for q in rationals_in_range(25):
            c = c_word(q)
            assert len(c) == q.denominator + 1
            assert parity(c) == 0
            assert c == c[::-1]


class TestWWords:
    def test_examples(self):
        assert w_words(F(1, 3)) == ("10", "01")
        assert w_words(F(2, 5)) == ("1011", "1101")
        assert w_words(F(1, 2)) == ("1", "1")

    def test_structure(self):
        for q in rationals_in_range(25):
            w, hw = w_words(q)
            assert hw == w[::-1]
            assert len(w) == q.denominator - 1
            assert c_word(q) == w + "01"
            assert parity(w) == 1 and parity(hw) == 1


class TestLheRhe:
    def test_one_third(self):
        left, right = lhe_rhe(F(1, 3))
        assert left == SeqEP("", "101")
        assert right == SeqEP("10", "011")

    def test_two_fifths(self):
        left, right = lhe_rhe(F(2, 5))
        assert left == SeqEP("", "10111")
        assert right == SeqEP("101101", "11101")

    def test_one_quarter(self):
        left, right = lhe_rhe(F(1, 4))
        assert left == SeqEP("", "1001")
        assert right == SeqEP("10001", "1001")

    def test_shift_maximal_and_ordered(self):
        for q in rationals_in_range(20):
            left, right = lhe_rhe(q)
            assert unimodal_cmp(left, right) is LT
            assert is_shift_maximal(left)
            assert is_shift_maximal(right)

    def test_half_rejected(self):
        with pytest.raises(ValueError):
            lhe_rhe(F(1, 2))


class TestHeight:
    def test_boundaries(self):
        assert height(SeqEP("1", "0")) == 0
        assert height(SeqEP("10", "1")) == F(1, 2)
        assert height(SeqEP("", "1")) == F(1, 2)

    def test_one_third_family(self):
        assert height(SeqEP("", "101")) == F(1, 3)
        assert height(SeqEP("10", "011")) == F(1, 3)
        assert height(SeqEP("", "10010")) == F(1, 3)

    def test_endpoint_roundtrip(self):
        for q in rationals_in_range(15):
            left, right = lhe_rhe(q)
            assert height(left) == q
            assert height(right) == q

    @given(seqs)
    @settings(max_examples=300)
    def test_characterization(self, s):
        q = height(s)
        if 0 < q < F(1, 2):
            left, right = lhe_rhe(q)
            assert unimodal_cmp(s, left) is not LT
            assert unimodal_cmp(s, right) is not GT

    @given(seqs)
    def test_decreasing_in_order(self, s):
        # the height of any strictly larger comparable value is not larger
        t = s.tail(1)
        c = unimodal_cmp(s, t)
        if c is LT:
            assert height(s) >= height(t)
        elif c is GT:
            assert height(s) <= height(t)

    def test_prefix_cq_bounds_height(self):
        for q in rationals_in_range(12):
            c = c_word(q)
            s = SeqEP(c, "0110")
            assert height(s) <= q


class TestHeightBracket:
    def test_no_information(self):
        hb = height_bracket("10")
        assert (hb.lo, hb.hi) == (F(0), F(1, 2))

    def test_cq_prefix(self):
        hb = height_bracket("1001")
        assert hb.hi <= F(1, 3)

    def test_strict_interior_prefix(self):
        hb = height_bracket("1011110")
        assert F(1, 3) <= hb.lo and hb.hi < F(1, 2)

    def test_rejects_bad_prefix(self):
        with pytest.raises(ValueError):
            height_bracket("")
        with pytest.raises(ValueError):
            height_bracket("01")

    @given(seqs, st.integers(4, 40))
    @settings(max_examples=200)
    def test_sound_for_extensions(self, s, depth):
        prefix = s.prefix(depth)
        if not prefix.startswith("1"):
            return
        hb = height_bracket(prefix)
        assert hb.lo <= height(s) <= hb.hi

    def test_bracket_invariants(self):
        with pytest.raises(ValueError):
            HeightBracket(F(1, 3), F(1, 4), exact=False)
        with pytest.raises(ValueError):
            HeightBracket(F(1, 4), F(1, 3), exact=True)


class TestDecompose:
    def test_at_lhe(self):
        assert decompose_at_height(SeqEP("", "101"), F(1, 3)) == AtLhe(F(1, 3))

    def test_two_blocks(self):
        s = SeqEP("101101", "10010")
        k, t = decompose_at_height(s, F(1, 3))
        assert (k, t) == (2, SeqEP("", "10010"))

    def test_rhe_zero_blocks(self):
        s = SeqEP("10", "011")
        k, t = decompose_at_height(s, F(1, 3))
        assert k == 0 and t == s

    def test_height_mismatch_rejected(self):
        with pytest.raises(ValueError):
            decompose_at_height(SeqEP("", "101"), F(1, 4))

    @given(seqs)
    @settings(max_examples=300)
    def test_roundtrip_and_remainder(self, s):
        q = height(s)
        if not (0 < q < F(1, 2)):
            return
        out = decompose_at_height(s, q)
        if isinstance(out, AtLhe):
            assert s == lhe_rhe(q)[0]
            return
        k, t = out
        w, _ = w_words(q)
        block = w + "1"
        assert t.prepend(block * k) == s
        assert t.prefix(len(block)) != block
        assert t.prefix(len(c_word(q))) == c_word(q) or height(t) < q


class TestMonotonicity:
    def test_small_denominators(self):
        qs = rationals_in_range(15)
        pairs = [(SeqEP("", c_word(q) + "0"), q) for q in qs]
        for (s1, q1) in pairs:
            for (s2, q2) in pairs:
                if q1 < q2:
                    assert unimodal_cmp(s2, s1) is LT
