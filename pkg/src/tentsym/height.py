"""The height function on binary sequences and its cutting-word family.

Heights live in [0, 1/2]; the rational height q = m/n carries the cutting
word c_q (an even palindrome of length n+1), its prefix w_q, the reversed
prefix, and the extreme sequences lhe(q) = (w_q 1)^inf and
rhe(q) = c_q (1 w-hat_q)^inf bounding the interval of sequences of height q.
All arithmetic is exact; rationals are `fractions.Fraction` in lowest terms.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Optional, Union

from .sequences import (
    EQ,
    GT,
    LT,
    Ordering,
    SeqEP,
    cmp_seq_vs_word,
    parity,
    unimodal_cmp,
)

HALF = Fraction(1, 2)
ZERO = Fraction(0)

# Boundary sequences of the height range.
SEQ_10_INF = SeqEP("1", "0")  # height 0
SEQ_101_INF = SeqEP("10", "1")  # top of the height-1/2 class


class HeightGuardExceeded(RuntimeError):
    """The mediant descent exceeded its denominator budget.

    Heights of eventually periodic sequences are rational with denominator
    bounded by the sequence's combinatorial data, so hitting the guard
    signals a non-canonical input or an internal bug."""


def _check_range(q: Fraction, closed_top: bool) -> None:
    if not isinstance(q, Fraction):
        raise TypeError("height arguments must be Fraction")
    top_ok = q <= HALF if closed_top else q < HALF
    if not (ZERO < q and top_ok):
        bound = "(0, 1/2]" if closed_top else "(0, 1/2)"
        raise ValueError(f"height {q} outside {bound}")


def k_seq(q: Fraction) -> list[int]:
    """The integer counts [k_1 .. k_m]: k_i is two less than the number of
    vertical integer lines the line y = qx crosses for y in [i-1, i]."""
    _check_range(q, closed_top=True)
    m, n = q.numerator, q.denominator
    out = []
    for i in range(1, m + 1):
        lo = -(-((i - 1) * n) // m)  # ceil((i-1)*n/m)
        hi = (i * n) // m
        out.append(hi - lo + 1 - 2)
    return out


@lru_cache(maxsize=None)
def c_word(q: Fraction) -> str:
    """The cutting word c_q = 1 0^{k_1} 11 0^{k_2} 11 ... 11 0^{k_m} 1."""
    ks = k_seq(q)
    parts = ["1"]
    for i, k in enumerate(ks):
        parts.append("0" * k)
        parts.append("1" if i == len(ks) - 1 else "11")
    return "".join(parts)


def w_words(q: Fraction) -> tuple[str, str]:
    """(w_q, w-hat_q): the first n-1 symbols of c_q and their reverse."""
    c = c_word(q)
    w = c[:-2]
    return w, w[::-1]


@lru_cache(maxsize=None)
def lhe_rhe(q: Fraction) -> tuple[SeqEP, SeqEP]:
    """The extreme sequences (w_q 1)^inf and c_q (1 w-hat_q)^inf of height q."""
    _check_range(q, closed_top=False)
    w, hw = w_words(q)
    return SeqEP("", w + "1"), SeqEP(c_word(q), "1" + hw)


def lhe(q: Fraction) -> SeqEP:
    return lhe_rhe(q)[0]


def rhe(q: Fraction) -> SeqEP:
    return lhe_rhe(q)[1]


def _mediant(a: Fraction, b: Fraction) -> Fraction:
    return Fraction(a.numerator + b.numerator, a.denominator + b.denominator)


@lru_cache(maxsize=1 << 16)
def height(s: SeqEP) -> Fraction:
    """The exact height of an eventually periodic sequence.

    After the boundary cases, a Stern-Brocot mediant descent on (0, 1/2)
    finds the unique rational q with lhe(q) <= s <= rhe(q); the descent
    terminates because eventually periodic sequences always have rational
    height, with denominator bounded by their combinatorial size.
    """
    if s == SEQ_10_INF:
        return ZERO
    if unimodal_cmp(s, SEQ_101_INF) is not GT:
        return HALF
    guard = 4 * (len(s.pre) + len(s.per)) ** 2
    lo, hi = ZERO, HALF
    while True:
        q = _mediant(lo, hi)
        if q.denominator > guard:
            raise HeightGuardExceeded(
                f"mediant denominator exceeded {guard} while locating height"
            )
        left, right = lhe_rhe(q)
        if unimodal_cmp(s, right) is GT:
            hi = q
        elif unimodal_cmp(s, left) is LT:
            lo = q
        else:
            return q


@dataclass(frozen=True)
class HeightBracket:
    """Rational bounds on the heights of every extension of a finite prefix."""

    lo: Fraction
    hi: Fraction
    exact: bool

    def __post_init__(self):
        if self.lo > self.hi:
            raise ValueError("bracket endpoints out of order")
        if self.exact and self.lo != self.hi:
            raise ValueError("exact bracket must be degenerate")


def _prefix_descent(prefix: str):
    """Shared mediant descent on a finite prefix.

    Yields the final (lo, hi, exact_q, strict_lo, strict_hi): every infinite
    extension of the prefix has height in [lo, hi]; strict flags record
    whether the corresponding bound was established strictly.
    """
    lo, hi = ZERO, HALF
    strict_lo = strict_hi = False
    exact_q: Optional[Fraction] = None
    if not prefix or prefix[0] != "1":
        raise ValueError("prefix must be nonempty and start with 1")
    node_lo, node_hi = ZERO, HALF
    guard = 2 * len(prefix) + 4
    while True:
        q = _mediant(node_lo, node_hi)
        if q.denominator > guard:
            break
        left, right = lhe_rhe(q)
        dl, _ = cmp_seq_vs_word(left, prefix)
        dr, _ = cmp_seq_vs_word(right, prefix)
        # dl/dr compare the bound against the prefix, so flip the view:
        # prefix > lhe(q) is dl == LT, etc.
        if dr is LT:  # extensions exceed rhe(q): heights strictly below q
            hi, strict_hi, node_hi = q, True, q
        elif dl is GT:  # extensions below lhe(q): heights strictly above q
            lo, strict_lo, node_lo = q, True, q
        elif dl is LT and dr is GT:
            # strictly inside the height-q interval: every extension has
            # height exactly q
            exact_q = q
            lo = hi = q
            strict_lo = strict_hi = False
            break
        elif dl is LT:  # extensions above lhe(q): heights at most q
            hi, strict_hi, node_hi = q, False, q
        elif dr is GT:  # extensions below rhe(q): heights at least q
            lo, strict_lo, node_lo = q, False, q
        elif prefix.startswith(c_word(q)):
            # starting with c_q bounds the height by q
            hi, strict_hi, node_hi = q, False, q
        else:
            break
    return lo, hi, exact_q, strict_lo, strict_hi


def height_bracket(prefix: str) -> HeightBracket:
    """Rational lo <= hi such that every sequence extending the prefix has
    height in [lo, hi]; exact when the prefix pins the height."""
    lo, hi, exact_q, _, _ = _prefix_descent(prefix)
    if exact_q is not None:
        return HeightBracket(exact_q, exact_q, exact=True)
    return HeightBracket(lo, hi, exact=False)


@dataclass(frozen=True)
class AtLhe:
    """Marker: the sequence is exactly lhe of its height."""

    q: Fraction


def decompose_at_height(s: SeqEP, q: Fraction) -> Union[AtLhe, tuple[int, SeqEP]]:
    """Split s = (w_q 1)^k t with k greatest, or report s = lhe(q).

    Requires height(s) == q with q strictly inside (0, 1/2).  The remainder
    t either starts with c_q or has height strictly below q.
    """
    _check_range(q, closed_top=False)
    if height(s) != q:
        raise ValueError(f"sequence has height {height(s)}, not {q}")
    left, _ = lhe_rhe(q)
    if s == left:
        return AtLhe(q)
    w, _ = w_words(q)
    block = w + "1"
    k = 0
    t = s
    while t.prefix(len(block)) == block:
        t = t.tail(len(block))
        k += 1
    return k, t
