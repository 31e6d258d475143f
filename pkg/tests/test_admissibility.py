from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tentsym.admissibility import (
    KappaInvalid,
    PrefixVerdict,
    TypeKind,
    TypeMismatch,
    backward_admissible,
    backward_admissible_prefix,
    classify,
    classify_prefix,
    forward_admissible,
    forward_admissible_prefix,
    forward_point_admissible,
    max_backward_itinerary,
    validate_kappa,
)
from tentsym.height import lhe_rhe
from tentsym.sequences import (
    GT,
    BiSeqEP,
    SeqEP,
    bd_shift,
    fd_shift,
    rho,
    unimodal_cmp,
)

words = st.text(alphabet="01", min_size=0, max_size=6)
periods = st.text(alphabet="01", min_size=1, max_size=6)
seqs = st.builds(SeqEP, words, periods)
biseqs = st.builds(BiSeqEP, back=seqs, fwd=seqs)

KAPPA_INTERIOR = validate_kappa(SeqEP("", "10010"))
KAPPA_LEFT = validate_kappa(SeqEP("", "101"))
KAPPA_RIGHT = validate_kappa(SeqEP("10", "011"))


class TestValidateKappa:
    def test_interior_eps(self):
        assert KAPPA_INTERIOR.eps == "0"

    def test_left_endpoint_eps(self):
        assert KAPPA_LEFT.eps == "1"

    def test_nonperiodic_has_no_eps(self):
        assert validate_kappa(SeqEP("1001", "10")).eps is None

    def test_10100_rejected(self):
        # rejected because sigma^2 of it beats it, not for parity: the
        # period word has two 1s and is even
        with pytest.raises(KappaInvalid):
            validate_kappa(SeqEP("", "10100"))

    def test_bounds(self):
        with pytest.raises(KappaInvalid):
            validate_kappa(SeqEP("1", "0"))  # 10^inf itself
        with pytest.raises(KappaInvalid):
            validate_kappa(SeqEP("10", "1"))  # 101^inf itself
        with pytest.raises(KappaInvalid):
            validate_kappa(SeqEP("", "1"))  # below 101^inf

    def test_odd_periodic_rejected(self):
        # shift-maximal with an odd period word: rejected on parity
        with pytest.raises(KappaInvalid) as e:
            validate_kappa(SeqEP("", "100"))
        assert "odd" in str(e.value)


class TestClassify:
    def test_examples(self):
        assert classify(KAPPA_LEFT).kind is TypeKind.LEFT_ENDPOINT
        assert classify(KAPPA_RIGHT).kind is TypeKind.RIGHT_ENDPOINT
        t = classify(KAPPA_INTERIOR)
        assert t.kind is TypeKind.INTERIOR and t.q == F(1, 3)

    def test_classify_prefix_short(self):
        assert classify_prefix("10") is None

    def test_classify_prefix_lhe_prefix_undecided(self):
        assert classify_prefix(SeqEP("", "101").prefix(6)) is None

    def test_classify_prefix_interior(self):
        # a long prefix of an interior kneading sequence certifies the type
        prefix = SeqEP("", "10010").prefix(40)
        out = classify_prefix(prefix)
        assert out is not None
        assert out.kind is TypeKind.INTERIOR and out.q == F(1, 3)


class TestForwardPoint:
    def test_kappa_itself(self):
        assert forward_point_admissible(KAPPA_INTERIOR.seq, KAPPA_INTERIOR).admissible

    def test_sigma_kappa(self):
        s = KAPPA_INTERIOR.seq.tail(1)
        assert forward_point_admissible(s, KAPPA_INTERIOR).admissible

    def test_10inf_fails_a(self):
        v = forward_point_admissible(SeqEP("1", "0"), KAPPA_INTERIOR)
        assert not v.admissible and v.condition == "a" and v.shift_index == 0

    def test_below_sigma_kappa_fails_b(self):
        v = forward_point_admissible(SeqEP("", "0"), KAPPA_INTERIOR)
        assert not v.admissible and v.condition == "b"

    def test_eps_violation_fails_c(self):
        # prefix 1 then kappa: the tail at r=1 equals kappa with s_0 = 1 != 0
        s = KAPPA_INTERIOR.seq.prepend("1")
        v = forward_point_admissible(s, KAPPA_INTERIOR)
        assert not v.admissible
        assert v.condition in ("a", "c")


DOUBLY_PERIODIC = BiSeqEP(back=SeqEP("", "01001"), fwd=SeqEP("", "10010"))


class TestForwardBiInfinite:
    def test_doubly_periodic_aligned(self):
        assert DOUBLY_PERIODIC.symbol(-1) == "0" == KAPPA_INTERIOR.eps
        assert forward_admissible(DOUBLY_PERIODIC, KAPPA_INTERIOR).admissible

    def test_all_zero_start_fails_B(self):
        S = BiSeqEP(back=SeqEP("", "0"), fwd=SeqEP("", "0"))
        v = forward_admissible(S, KAPPA_INTERIOR)
        assert not v.admissible and v.condition == "B"

    def test_fd_10inf_fails_A(self):
        S = BiSeqEP(back=SeqEP("", "01"), fwd=SeqEP("1", "0"))
        v = forward_admissible(S, KAPPA_INTERIOR)
        assert not v.admissible and v.condition == "A" and v.shift_index == 0

    def test_eps_flip_fails_C(self):
        bad = BiSeqEP(back=SeqEP("1", "10010"), fwd=SeqEP("", "10010"))
        v = forward_admissible(bad, KAPPA_INTERIOR)
        assert not v.admissible and v.condition == "C" and v.shift_index == 0


class TestBackward:
    def test_symmetric_admissible(self):
        S = BiSeqEP(back=SeqEP("", "101"), fwd=SeqEP("", "1"))
        assert backward_admissible(S, KAPPA_LEFT).admissible

    def test_symmetric_eps_pair_fails_c(self):
        S = BiSeqEP(back=SeqEP("0", "1"), fwd=SeqEP("", "101"))
        v = backward_admissible(S, KAPPA_LEFT)
        assert not v.admissible and v.condition == "c" and v.shift_index == 0

    def test_interior_witness_admissible(self):
        S = BiSeqEP(back=SeqEP("", "101"), fwd=SeqEP("", "100"))
        assert backward_admissible(S, KAPPA_INTERIOR).admissible
        # bd at shift 4 attains rhe(1/3); condition (b) is vacuous there
        assert bd_shift(S, 4) == lhe_rhe(F(1, 3))[1]
        assert unimodal_cmp(fd_shift(S, 4), KAPPA_INTERIOR.seq.tail(4)) is not GT

    def test_interior_eps_flip_fails_d(self):
        bad = BiSeqEP(back=SeqEP("1", "10010"), fwd=SeqEP("", "10010"))
        v = backward_admissible(bad, KAPPA_INTERIOR)
        assert not v.admissible and v.condition == "d"

    def test_ends_zero_fails(self):
        S = BiSeqEP(back=SeqEP("", "101"), fwd=SeqEP("1", "0"))
        assert not backward_admissible(S, KAPPA_LEFT).admissible
        assert not backward_admissible(S, KAPPA_INTERIOR).admissible


class TestMaxBackward:
    def test_interior_one_third(self):
        top, wit = max_backward_itinerary(KAPPA_INTERIOR)
        assert top == SeqEP("10", "011")
        assert wit == BiSeqEP(back=SeqEP("", "101"), fwd=SeqEP("", "100"))

    def test_mode_lock_other_kappa(self):
        kap = validate_kappa(SeqEP("1001", "10"))
        assert classify(kap).kind is TypeKind.INTERIOR
        top, _ = max_backward_itinerary(kap)
        assert top == SeqEP("10", "011")

    def test_two_fifths(self):
        kap = validate_kappa(SeqEP("", "1011010"))
        top, _ = max_backward_itinerary(kap)
        assert top == lhe_rhe(F(2, 5))[1]
        assert top == SeqEP("101101", "11101")

    def test_endpoint_rejected(self):
        with pytest.raises(TypeMismatch):
            max_backward_itinerary(KAPPA_LEFT)


def replay(verdict, S, kappa):
    """Re-check a failure witness in isolation."""
    r = verdict.shift_index
    cond = verdict.condition
    if cond in ("A",):
        return unimodal_cmp(fd_shift(S, r), kappa.seq) is GT
    if cond in ("a",):
        ktype = classify(kappa)
        bound = (
            lhe_rhe(ktype.q)[1] if ktype.kind is TypeKind.INTERIOR else kappa.seq
        )
        return unimodal_cmp(bd_shift(S, r), bound) is GT
    if cond == "b" and classify(kappa).kind is TypeKind.INTERIOR:
        q = classify(kappa).q
        left = lhe_rhe(q)[0]
        n = q.denominator
        return (
            unimodal_cmp(bd_shift(S, r), left) is GT
            and unimodal_cmp(fd_shift(S, r), kappa.seq.tail(n + 1)) is GT
        )
    if cond in ("B",):
        return "1" not in S.back.per
    if cond in ("b", "c") and r is None:
        return "1" not in S.fwd.per
    if cond == "C" or cond == "d":
        return fd_shift(S, r) == kappa.seq and S.symbol(r - 1) != kappa.eps
    if cond == "c":
        return fd_shift(S, r) == kappa.seq and S.symbol(r - 1) != "1"
    raise AssertionError(f"unknown condition {cond}")


KAPPAS = [KAPPA_INTERIOR, KAPPA_LEFT, KAPPA_RIGHT, validate_kappa(SeqEP("", "1011010"))]


class TestInvariants:
    @given(biseqs, st.integers(0, len(KAPPAS) - 1))
    @settings(max_examples=400)
    def test_main_equivalence(self, S, i):
        kap = KAPPAS[i]
        assert (
            forward_admissible(S, kap).admissible
            == backward_admissible(S, kap).admissible
        )

    @given(biseqs, st.integers(0, len(KAPPAS) - 1), st.integers(-10, 10))
    @settings(max_examples=300)
    def test_shift_invariance(self, S, i, r):
        kap = KAPPAS[i]
        shifted = S.shift(r)
        assert (
            forward_admissible(S, kap).admissible
            == forward_admissible(shifted, kap).admissible
        )
        assert (
            backward_admissible(S, kap).admissible
            == backward_admissible(shifted, kap).admissible
        )

    @given(biseqs, st.integers(0, len(KAPPAS) - 1))
    @settings(max_examples=300)
    def test_witness_replay(self, S, i):
        kap = KAPPAS[i]
        for verdict in (forward_admissible(S, kap), backward_admissible(S, kap)):
            if not verdict.admissible:
                assert replay(verdict, S, kap)

    @given(biseqs)
    @settings(max_examples=300)
    def test_upper_bound_consequences(self, S):
        if forward_admissible(S, KAPPA_INTERIOR).admissible:
            assert unimodal_cmp(S.back, lhe_rhe(F(1, 3))[1]) is not GT
        if forward_admissible(S, KAPPA_LEFT).admissible:
            assert unimodal_cmp(S.back, KAPPA_LEFT.seq) is not GT

    @given(biseqs)
    @settings(max_examples=300)
    def test_rho_symmetry_right_endpoint(self, S):
        assert (
            forward_admissible(S, KAPPA_RIGHT).admissible
            == forward_admissible(rho(S), KAPPA_RIGHT).admissible
        )


class TestPrefixMode:
    def test_certified_matches_exact(self):
        prefix = KAPPA_INTERIOR.seq.prefix(200)
        S = BiSeqEP(back=SeqEP("", "101"), fwd=SeqEP("", "100"))
        assert forward_admissible_prefix(S, prefix) is PrefixVerdict.CERTIFIED

    def test_refuted(self):
        prefix = KAPPA_INTERIOR.seq.prefix(200)
        S = BiSeqEP(back=SeqEP("", "01"), fwd=SeqEP("1", "0"))
        assert forward_admissible_prefix(S, prefix) is PrefixVerdict.REFUTED

    def test_equality_is_undecided(self):
        prefix = KAPPA_INTERIOR.seq.prefix(200)
        assert (
            forward_admissible_prefix(DOUBLY_PERIODIC, prefix)
            is PrefixVerdict.UNDECIDED
        )

    def test_backward_prefix_smoke(self):
        prefix = KAPPA_RIGHT.seq.prefix(200)
        S = BiSeqEP(back=SeqEP("", "1"), fwd=SeqEP("", "101"))
        assert backward_admissible_prefix(S, prefix) in (
            PrefixVerdict.CERTIFIED,
            PrefixVerdict.UNDECIDED,
        )
        bad = BiSeqEP(back=SeqEP("", "101"), fwd=SeqEP("1", "0"))
        assert backward_admissible_prefix(bad, prefix) is PrefixVerdict.REFUTED
