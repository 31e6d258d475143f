"""Admissibility checkers for itineraries of tent maps and their inverse limits.

Four decision procedures: forward admissibility of one-sided sequences,
forward and backward admissibility of bi-infinite sequences, and the
mode-locked maximum backward itinerary.  All universal quantifiers over
shift indices are discharged exactly: an explicit window of shifts plus,
for each residue class of the escaping period, a parity-aware analysis of
the asymptotic families repeat^k . base.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Optional

from .height import HeightBracket, _prefix_descent, height, lhe_rhe, w_words
from .sequences import (
    EQ,
    GT,
    LT,
    BiSeqEP,
    SeqEP,
    backward_classes,
    bd_shift,
    cmp_power_family,
    cmp_seq_vs_word,
    fd_shift,
    forward_classes,
    is_shift_maximal,
    parity,
    unimodal_cmp,
    unimodal_cmp_index,
)

SEQ_10_INF = SeqEP("1", "0")
SEQ_101_INF = SeqEP("10", "1")


class KappaInvalid(ValueError):
    """The sequence cannot be the kneading sequence of a tent map here."""


@dataclass(frozen=True)
class Kappa:
    """A validated kneading sequence.  eps is the parity code of a periodic
    critical point and is present exactly when the sequence is purely
    periodic."""

    seq: SeqEP
    eps: Optional[str]


def validate_kappa(s: SeqEP) -> Kappa:
    """Check the necessary kneading-sequence conditions and extract eps.

    Requires shift-maximality, 101^inf < s < 10^inf strictly, and an even
    (primitive) period word when s is purely periodic."""
    if not is_shift_maximal(s):
        r = next(
            r
            for r in range(1, len(s.pre) + len(s.per) + 1)
            if unimodal_cmp(s.tail(r), s) is GT
        )
        raise KappaInvalid(f"not shift-maximal: tail at {r} is greater")
    if unimodal_cmp(s, SEQ_101_INF) is not GT:
        raise KappaInvalid("at or below 101^inf (renormalizable range)")
    if unimodal_cmp(s, SEQ_10_INF) is not LT:
        raise KappaInvalid("at or above 10^inf (slope 2 excluded)")
    if s.is_periodic:
        if parity(s.per) != 0:
            raise KappaInvalid("periodic kneading sequence with odd period word")
        return Kappa(seq=s, eps=s.per[-1])
    return Kappa(seq=s, eps=None)


class TypeKind(Enum):
    IRRATIONAL = "irrational"
    LEFT_ENDPOINT = "left-endpoint"
    RIGHT_ENDPOINT = "right-endpoint"
    INTERIOR = "interior"


@dataclass(frozen=True)
class KneadingType:
    kind: TypeKind
    q: Optional[Fraction] = None
    bracket: Optional[HeightBracket] = None


def classify(kappa: Kappa) -> KneadingType:
    """Endpoint or interior classification by exact height computation.

    Exact eventually periodic input always has rational height, so the
    irrational kind never arises here."""
    q = height(kappa.seq)
    left, right = lhe_rhe(q)
    if kappa.seq == left:
        return KneadingType(TypeKind.LEFT_ENDPOINT, q=q)
    if kappa.seq == right:
        return KneadingType(TypeKind.RIGHT_ENDPOINT, q=q)
    return KneadingType(TypeKind.INTERIOR, q=q)


def classify_prefix(prefix: str) -> Optional[KneadingType]:
    """Classification certified from a finite kneading prefix, or None.

    Interior type is certifiable: strict comparisons against lhe(q) and
    rhe(q) decided within the prefix pin every extension strictly inside
    the height-q interval.  Endpoint types never are.  A bracket with both
    bounds strict is reported as the irrational kind with that bracket: the
    height is pinned inside it but the exact type is unresolved."""
    lo, hi, exact_q, strict_lo, strict_hi = _prefix_descent(prefix)
    if exact_q is not None:
        return KneadingType(TypeKind.INTERIOR, q=exact_q)
    if strict_lo and strict_hi:
        return KneadingType(
            TypeKind.IRRATIONAL, bracket=HeightBracket(lo, hi, exact=False)
        )
    return None


@dataclass(frozen=True)
class Verdict:
    """Outcome of an admissibility check with a re-checkable witness."""

    admissible: bool
    condition: Optional[str] = None
    shift_index: Optional[int] = None
    detail: Optional[str] = None

    def to_json(self) -> str:
        return json.dumps(
            {
                "admissible": self.admissible,
                "condition": self.condition,
                "shift_index": self.shift_index,
                "detail": self.detail,
            }
        )


ADMISSIBLE = Verdict(True)


def forward_point_admissible(s: SeqEP, kappa: Kappa) -> Verdict:
    """One-sided admissibility: every tail at most kappa, sigma(kappa) at
    most s, and the parity code before any tail equal to kappa."""
    k = kappa.seq
    for r in range(len(s.pre) + len(s.per) + 1):
        if unimodal_cmp(s.tail(r), k) is GT:
            return Verdict(False, "a", r, f"sigma^{r}(s) > kappa")
    if unimodal_cmp(k.tail(1), s) is GT:
        return Verdict(False, "b", 0, "s < sigma(kappa)")
    if kappa.eps is not None:
        for r in range(1, len(s.pre) + 2 * len(s.per) + 1):
            if s.tail(r) == k and s.symbol(r - 1) != kappa.eps:
                return Verdict(False, "c", r, f"s_{r - 1} != eps at equality")
    return ADMISSIBLE


def _neg_window(S: BiSeqEP) -> list[int]:
    """Explicit shift indices, nearest to 0 first so that reported
    witnesses are minimal; anything outside is covered by the k >= 1
    members of the asymptotic classes."""
    lo = len(S.back.pre) + 2 * len(S.back.per)
    hi = len(S.fwd.pre) + 2 * len(S.fwd.per)
    return sorted(range(-lo, hi + 1), key=lambda r: (abs(r), r))


def forward_admissible(S: BiSeqEP, kappa: Kappa) -> Verdict:
    """Bi-infinite forward admissibility: fd of every shift at most kappa,
    no all-zero backward tail, and the parity-code rule at equalities."""
    k = kappa.seq
    if "1" not in S.back.per:
        return Verdict(False, "B", None, "S starts 0^inf")
    for r in _neg_window(S):
        c, i = unimodal_cmp_index(fd_shift(S, r), k)
        if c is GT:
            return Verdict(False, "A", r, f"fd sigma^{r}(S) > kappa at {i}")
        if c is EQ and kappa.eps is not None and S.symbol(r - 1) != kappa.eps:
            return Verdict(False, "C", r, f"S_{r - 1} != eps at fd equality")
    for cls in backward_classes(S):
        for outcome, kk, _ in cmp_power_family(cls.repeat, cls.base, k):
            r = cls.r_at(kk)
            if outcome is GT:
                return Verdict(False, "A", r, f"fd sigma^{r}(S) > kappa")
            if outcome is EQ and kappa.eps is not None and cls.prev != kappa.eps:
                return Verdict(False, "C", r, f"S_{r - 1} != eps at fd equality")
    return ADMISSIBLE


def _fd_equality_violation(
    S: BiSeqEP, target: SeqEP, required_prev: str, label: str
) -> Optional[Verdict]:
    """Find r with fd(sigma^r(S)) == target but S_{r-1} != required_prev."""
    for r in _neg_window(S):
        if S.symbol(r - 1) != required_prev and fd_shift(S, r) == target:
            return Verdict(False, label, r, f"S_{r - 1} != {required_prev}")
    for cls in backward_classes(S):
        if cls.prev == required_prev:
            continue
        for outcome, kk, _ in cmp_power_family(cls.repeat, cls.base, target):
            if outcome is EQ:
                r = cls.r_at(kk)
                return Verdict(False, label, r, f"S_{r - 1} != {required_prev}")
    return None


def _backward_symmetric(S: BiSeqEP, kappa: Kappa, left_endpoint: bool) -> Verdict:
    k = kappa.seq
    if "1" not in S.fwd.per:
        return Verdict(False, "b", None, "S ends 0^inf")
    for r in _neg_window(S):
        c, i = unimodal_cmp_index(bd_shift(S, r), k)
        if c is GT:
            return Verdict(False, "a", r, f"bd sigma^{r}(S) > kappa at {i}")
    for cls in forward_classes(S):
        for outcome, kk, _ in cmp_power_family(cls.repeat, cls.base, k):
            if outcome is GT:
                r = cls.r_at(kk)
                return Verdict(False, "a", r, f"bd sigma^{r}(S) > kappa")
    if left_endpoint:
        bad = _fd_equality_violation(S, k, "1", "c")
        if bad is not None:
            return bad
    return ADMISSIBLE


def _backward_interior(S: BiSeqEP, kappa: Kappa, q: Fraction) -> Verdict:
    left, right = lhe_rhe(q)
    n = q.denominator
    after = kappa.seq.tail(n + 1)  # sigma^{n+1}(kappa), with kappa = c_q ...
    if "1" not in S.fwd.per:
        return Verdict(False, "c", None, "S ends 0^inf")
    if kappa.eps is not None:
        bad = _fd_equality_violation(S, kappa.seq, kappa.eps, "d")
        if bad is not None:
            return bad
    for r in _neg_window(S):
        bd_r = bd_shift(S, r)
        c, i = unimodal_cmp_index(bd_r, right)
        if c is GT:
            return Verdict(False, "a", r, f"bd sigma^{r}(S) > rhe(q) at {i}")
        if (
            unimodal_cmp(fd_shift(S, r), after) is GT
            and unimodal_cmp(bd_r, left) is GT
        ):
            return Verdict(
                False, "b", r, f"bd sigma^{r}(S) > lhe(q) with fd > sigma^{n + 1}(kappa)"
            )
    for cls in backward_classes(S):
        # bd is constant on the class; the fd family triggers condition (b).
        if unimodal_cmp(cls.stable, left) is GT:
            for outcome, kk, _ in cmp_power_family(cls.repeat, cls.base, after):
                if outcome is GT:
                    r = cls.r_at(kk)
                    return Verdict(
                        False,
                        "b",
                        r,
                        f"bd sigma^{r}(S) > lhe(q) with fd > sigma^{n + 1}(kappa)",
                    )
    for cls in forward_classes(S):
        # fd is constant on the class; the bd family drives (a) and (b).
        for outcome, kk, _ in cmp_power_family(cls.repeat, cls.base, right):
            if outcome is GT:
                r = cls.r_at(kk)
                return Verdict(False, "a", r, f"bd sigma^{r}(S) > rhe(q)")
        if unimodal_cmp(cls.stable, after) is GT:
            for outcome, kk, _ in cmp_power_family(cls.repeat, cls.base, left):
                if outcome is GT:
                    r = cls.r_at(kk)
                    return Verdict(
                        False,
                        "b",
                        r,
                        f"bd sigma^{r}(S) > lhe(q) with fd > sigma^{n + 1}(kappa)",
                    )
    return ADMISSIBLE


def backward_admissible(S: BiSeqEP, kappa: Kappa) -> Verdict:
    """Backward admissibility, dispatching on the kneading type: the
    symmetric conditions for endpoint types, the stepped two-bound
    conditions for interior type."""
    ktype = classify(kappa)
    if ktype.kind in (TypeKind.LEFT_ENDPOINT, TypeKind.RIGHT_ENDPOINT):
        return _backward_symmetric(
            S, kappa, left_endpoint=ktype.kind is TypeKind.LEFT_ENDPOINT
        )
    return _backward_interior(S, kappa, ktype.q)


class TypeMismatch(ValueError):
    """The operation needs a different kneading type."""


def max_backward_itinerary(kappa: Kappa) -> tuple[SeqEP, BiSeqEP]:
    """The greatest backward itinerary realizable under an interior-type
    kneading sequence: rhe(q), independent of kappa (mode-locking), with a
    realizing bi-infinite witness."""
    ktype = classify(kappa)
    if ktype.kind is not TypeKind.INTERIOR:
        raise TypeMismatch(f"kneading type is {ktype.kind.value}, not interior")
    q = ktype.q
    w, hw = w_words(q)
    witness = BiSeqEP(back=SeqEP("", "1" + hw), fwd=SeqEP("", w + "0"))
    _, right = lhe_rhe(q)
    n = q.denominator
    if bd_shift(witness, n + 1) != right:
        raise AssertionError("witness does not attain rhe(q)")
    if not forward_admissible(witness, kappa).admissible:
        raise AssertionError("witness is not admissible")
    return right, witness


# ---------------------------------------------------------------------------
# Prefix-mode checking against a finite kneading prefix


class PrefixVerdict(Enum):
    CERTIFIED = "certified"
    REFUTED = "refuted"
    UNDECIDED = "undecided"


def _family_vs_word(x: str, base: SeqEP, word: str):
    """Outcomes of comparing x^k . base against extensions of a finite word,
    for all k >= 1; None entries mean undecided within the word."""
    limit = SeqEP("", x)
    c_inf, d = cmp_seq_vs_word(limit, word)
    if c_inf is None:
        k_stab = len(word) // len(x) + 1
        tail_outcomes = [None]
    else:
        k_stab = d // len(x) + 1
        tail_outcomes = [c_inf]
    out = []
    for k in range(1, k_stab + 1):
        out.append(cmp_seq_vs_word(base.prepend(x * k), word)[0])
    return out + tail_outcomes


def forward_admissible_prefix(S: BiSeqEP, kappa_prefix: str) -> PrefixVerdict:
    """Forward admissibility decided strictly against a kneading prefix.

    Certification requires every comparison to be strictly decided within
    the prefix; any strict violation refutes.  Equality with the kneading
    sequence is never decidable from a prefix, so such cases come back
    undecided."""
    if "1" not in S.back.per:
        return PrefixVerdict.REFUTED
    undecided = False
    for r in _neg_window(S):
        c, _ = cmp_seq_vs_word(fd_shift(S, r), kappa_prefix)
        if c is GT:
            return PrefixVerdict.REFUTED
        if c is None:
            undecided = True
    for cls in backward_classes(S):
        for c in _family_vs_word(cls.repeat, cls.base, kappa_prefix):
            if c is GT:
                return PrefixVerdict.REFUTED
            if c is None:
                undecided = True
    return PrefixVerdict.UNDECIDED if undecided else PrefixVerdict.CERTIFIED


def backward_admissible_prefix(S: BiSeqEP, kappa_prefix: str) -> PrefixVerdict:
    """Backward admissibility under the irrational-type hypothesis, decided
    strictly against a kneading prefix."""
    if "1" not in S.fwd.per:
        return PrefixVerdict.REFUTED
    undecided = False
    for r in _neg_window(S):
        c, _ = cmp_seq_vs_word(bd_shift(S, r), kappa_prefix)
        if c is GT:
            return PrefixVerdict.REFUTED
        if c is None:
            undecided = True
    for cls in forward_classes(S):
        for c in _family_vs_word(cls.repeat, cls.base, kappa_prefix):
            if c is GT:
                return PrefixVerdict.REFUTED
            if c is None:
                undecided = True
    return PrefixVerdict.UNDECIDED if undecided else PrefixVerdict.CERTIFIED
