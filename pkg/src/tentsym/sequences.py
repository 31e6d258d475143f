"""Eventually periodic binary sequences and the parity-lexicographic order.

One-sided sequences are stored as a preperiod word plus a nonempty period
word, both plain ``str`` over the alphabet ``{'0', '1'}``, and are kept in a
canonical form (primitive period, shortest possible preperiod).  Bi-infinite
sequences pair a backward and a forward one-sided sequence about index 0.
Everything here is immutable and purely functional.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from itertools import compress, count
from math import gcd
from operator import ne
from typing import Iterator, Optional


class Ordering(Enum):
    LT = -1
    EQ = 0
    GT = 1

    def flip(self) -> "Ordering":
        if self is Ordering.LT:
            return Ordering.GT
        if self is Ordering.GT:
            return Ordering.LT
        return self


LT, EQ, GT = Ordering.LT, Ordering.EQ, Ordering.GT


class ParseError(ValueError):
    """Syntax error in a sequence literal, with the offending position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


def check_word(word: str) -> str:
    for i, ch in enumerate(word):
        if ch not in "01":
            raise ValueError(f"invalid symbol {ch!r} at index {i}")
    return word


def parity(word: str) -> int:
    """0 if the word contains an even number of 1s, 1 otherwise."""
    return word.count("1") & 1


def is_even(word: str) -> bool:
    return parity(word) == 0


def _lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)


def _primitive(word: str) -> str:
    n = len(word)
    for d in range(1, n + 1):
        if n % d == 0 and word == word[:d] * (n // d):
            return word[:d]
    return word


class SeqEP:
    """A one-sided eventually periodic binary sequence, in canonical form.

    The canonical form has a primitive period and the shortest preperiod:
    whenever the last preperiod symbol matches the last period symbol the
    period is rolled back over it.  Two values denote the same sequence
    iff their canonical fields coincide, so ``==`` is sequence equality.
    """

    __slots__ = ("pre", "per", "_hash")

    def __init__(self, pre: str, per: str):
        if not per:
            raise ValueError("period must be nonempty")
        check_word(pre)
        check_word(per)
        per = _primitive(per)
        while pre and pre[-1] == per[-1]:
            per = per[-1] + per[:-1]
            pre = pre[:-1]
        object.__setattr__(self, "pre", pre)
        object.__setattr__(self, "per", per)
        object.__setattr__(self, "_hash", hash((pre, per)))

    def __setattr__(self, name, value):
        raise AttributeError("SeqEP is immutable")

    def __eq__(self, other):
        if not isinstance(other, SeqEP):
            return NotImplemented
        return self.pre == other.pre and self.per == other.per

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"SeqEP({self.pre!r}, {self.per!r})"

    def __str__(self):
        return format_seq(self)

    @property
    def is_periodic(self) -> bool:
        return not self.pre

    def symbol(self, i: int) -> str:
        if i < 0:
            raise IndexError("one-sided sequence has no negative indices")
        if i < len(self.pre):
            return self.pre[i]
        return self.per[(i - len(self.pre)) % len(self.per)]

    def prefix(self, n: int) -> str:
        if n <= len(self.pre):
            return self.pre[:n]
        reps = -(-(n - len(self.pre)) // len(self.per))
        return (self.pre + self.per * reps)[:n]

    def tail(self, r: int) -> "SeqEP":
        """The shifted sequence sigma^r, r >= 0."""
        if r < 0:
            raise ValueError("tail index must be nonnegative")
        if r <= len(self.pre):
            return SeqEP(self.pre[r:], self.per)
        j = (r - len(self.pre)) % len(self.per)
        return SeqEP("", self.per[j:] + self.per[:j])

    def prepend(self, word: str) -> "SeqEP":
        return SeqEP(word + self.pre, self.per)


def canonicalize(pre: str, per: str) -> SeqEP:
    """Canonical form of the sequence pre . per per per ..."""
    return SeqEP(pre, per)


def unimodal_cmp_index(s: SeqEP, t: SeqEP) -> tuple[Ordering, Optional[int]]:
    """Compare under the parity-lexicographic order, with the index of the
    first disagreement (None on equality).

    Two eventually periodic sequences that agree on the first
    ``|pre_s| + |pre_t| + lcm(|per_s|, |per_t|)`` symbols agree everywhere:
    past the preperiods both are periodic, and agreement over a full common
    period forces the periodic parts to coincide.
    """
    if s.pre == t.pre and s.per == t.per:
        return EQ, None
    n = len(s.pre) + len(t.pre) + _lcm(len(s.per), len(t.per))
    a = s.prefix(n)
    b = t.prefix(n)
    if a == b:
        return EQ, None
    i = next(compress(count(), map(ne, a, b)))
    return (LT if parity(a[: i + 1]) == 0 else GT), i


def unimodal_cmp(s: SeqEP, t: SeqEP) -> Ordering:
    return unimodal_cmp_index(s, t)[0]


def cmp_words(a: str, b: str) -> Optional[Ordering]:
    """Parity-lexicographic comparison of finite words; None when neither
    word disagrees with the other within the shorter length."""
    n = min(len(a), len(b))
    for i in range(n):
        if a[i] != b[i]:
            return LT if parity(a[: i + 1]) == 0 else GT
    return None


def cmp_seq_vs_word(s: SeqEP, w: str) -> tuple[Optional[Ordering], Optional[int]]:
    """Compare s against any infinite extension of the word w.  Decided only
    if the disagreement occurs within ``len(w)`` symbols."""
    a = s.prefix(len(w))
    if a == w:
        return None, None
    i = next(compress(count(), map(ne, a, w)))
    return (LT if parity(a[: i + 1]) == 0 else GT), i


def is_shift_maximal(s: SeqEP) -> bool:
    """True iff every tail sigma^r(s) satisfies sigma^r(s) <= s.

    Only the finitely many distinct tails need checking."""
    for r in range(1, len(s.pre) + len(s.per) + 1):
        if unimodal_cmp(s.tail(r), s) is GT:
            return False
    return True


# ---------------------------------------------------------------------------
# Bi-infinite sequences


class BiSeqEP:
    """A bi-infinite binary sequence with both tails eventually periodic.

    ``back`` encodes S_{-1} S_{-2} S_{-3} ... and ``fwd`` encodes
    S_0 S_1 S_2 ..., both canonical SeqEP values.
    """

    __slots__ = ("back", "fwd", "_hash")

    def __init__(self, back: SeqEP, fwd: SeqEP):
        object.__setattr__(self, "back", back)
        object.__setattr__(self, "fwd", fwd)
        object.__setattr__(self, "_hash", hash((back, fwd)))

    def __setattr__(self, name, value):
        raise AttributeError("BiSeqEP is immutable")

    def __eq__(self, other):
        if not isinstance(other, BiSeqEP):
            return NotImplemented
        return self.back == other.back and self.fwd == other.fwd

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"BiSeqEP({self.back!r}, {self.fwd!r})"

    def __str__(self):
        return format_seq(self)

    def symbol(self, i: int) -> str:
        return self.fwd.symbol(i) if i >= 0 else self.back.symbol(-1 - i)

    def segment(self, lo: int, hi: int) -> str:
        """Symbols S_lo ... S_{hi-1} in natural index order."""
        return "".join(self.symbol(i) for i in range(lo, hi))

    def shift(self, r: int) -> "BiSeqEP":
        """sigma^r; satisfies fd(shift(S, r)) = S_r S_{r+1} ..."""
        if r == 0:
            return self
        if r > 0:
            return BiSeqEP(
                back=self.back.prepend(self.fwd.prefix(r)[::-1]),
                fwd=self.fwd.tail(r),
            )
        j = -r
        return BiSeqEP(
            back=self.back.tail(j),
            fwd=self.fwd.prepend(self.back.prefix(j)[::-1]),
        )


def fd(S: BiSeqEP) -> SeqEP:
    return S.fwd


def bd(S: BiSeqEP) -> SeqEP:
    return S.back


def fd_shift(S: BiSeqEP, r: int) -> SeqEP:
    """fd(sigma^r(S)) = S_r S_{r+1} ... without building the shifted value."""
    if r >= 0:
        return S.fwd.tail(r)
    return S.fwd.prepend(S.back.prefix(-r)[::-1])


def bd_shift(S: BiSeqEP, r: int) -> SeqEP:
    """bd(sigma^r(S)) = S_{r-1} S_{r-2} ..."""
    if r <= 0:
        return S.back.tail(-r)
    return S.back.prepend(S.fwd.prefix(r)[::-1])


def rho(S: BiSeqEP) -> BiSeqEP:
    """The reversing involution, rho(S)_r = S_{-r}."""
    return BiSeqEP(back=S.fwd.tail(1), fwd=S.back.prepend(S.fwd.prefix(1)))


# ---------------------------------------------------------------------------
# Shift classes: finite window plus asymptotic residue families


@dataclass(frozen=True)
class AsymptoticClass:
    """One residue class of shifts escaping the explicit window.

    For ``direction == -1`` (r -> -infinity) the forward sequences of the
    class are ``repeat^k . base`` for k >= 1, while the backward sequence
    ``stable`` and the preceding symbol ``prev`` do not depend on k.  For
    ``direction == +1`` the roles of forward and backward are exchanged.
    ``repeat`` is a rotation of the reversed period word of the escaping
    side.
    """

    direction: int
    residue: int
    repeat: str
    base: SeqEP
    stable: SeqEP
    prev: str
    _offset: int

    def r_at(self, k: int) -> int:
        """Concrete shift index realizing the family member with exponent k."""
        r = self._offset + k * len(self.repeat)
        return -r if self.direction < 0 else r

    @property
    def limit(self) -> SeqEP:
        """The purely periodic limit repeat^infinity of the family."""
        return SeqEP("", self.repeat)


def backward_classes(S: BiSeqEP) -> list[AsymptoticClass]:
    """Residue families describing fd(sigma^r(S)) as r -> -infinity."""
    u, v = S.back.pre, S.back.per
    out = []
    for c in range(len(v)):
        x = (v[:c][::-1] + v[::-1])[: len(v)]
        out.append(
            AsymptoticClass(
                direction=-1,
                residue=c,
                repeat=x,
                base=S.fwd.prepend((u + v[:c])[::-1]),
                stable=S.back.tail(len(u) + c),
                prev=v[c],
                _offset=len(u) + c,
            )
        )
    return out


def forward_classes(S: BiSeqEP) -> list[AsymptoticClass]:
    """Residue families describing bd(sigma^r(S)) as r -> +infinity."""
    u, v = S.fwd.pre, S.fwd.per
    out = []
    for c in range(len(v)):
        x = (v[:c][::-1] + v[::-1])[: len(v)]
        out.append(
            AsymptoticClass(
                direction=1,
                residue=c,
                repeat=x,
                base=S.back.prepend((u + v[:c])[::-1]),
                stable=S.fwd.tail(len(u) + c),
                prev=v[(c - 1) % len(v)],
                _offset=len(u) + c,
            )
        )
    return out


def cmp_power_family(
    x: str, base: SeqEP, bound: SeqEP
) -> list[tuple[Ordering, int, bool]]:
    """All outcomes of unimodal_cmp(x^k . base, bound) over k >= 1.

    Returns (outcome, witness k, covers_all_larger) triples.  Once
    k*len(x) passes the first disagreement of x^infinity with the bound,
    the outcome is that of the limit; if the limit equals the bound, the
    outcome is cmp(base, bound) flipped by the parity of x^k.
    """
    limit = SeqEP("", x)
    c_inf, d = unimodal_cmp_index(limit, bound)
    if c_inf is EQ:
        base_cmp = unimodal_cmp(base, bound)
        if base_cmp is EQ or parity(x) == 0:
            return [(base_cmp, 1, True)]
        return [(base_cmp.flip(), 1, False), (base_cmp, 2, True)]
    k_stab = d // len(x) + 1
    out = []
    for k in range(1, k_stab + 1):
        out.append((unimodal_cmp(base.prepend(x * k), bound), k, False))
    out.append((c_inf, k_stab + 1, True))
    return out


def family_member(cls: AsymptoticClass, k: int) -> SeqEP:
    """The concrete escaping-side sequence of the class at exponent k."""
    return cls.base.prepend(cls.repeat * k)


@dataclass(frozen=True)
class ShiftClasses:
    """Distinct shifts of a bi-infinite sequence: explicit window plus
    asymptotic residue descriptors for each escaping direction."""

    window: list[tuple[int, BiSeqEP]]
    backward: list[AsymptoticClass]
    forward: list[AsymptoticClass]


def distinct_shifts(S: BiSeqEP, extra: int = 0) -> ShiftClasses:
    """Shifts for r in the window [-Wb, Wf], deduplicated, plus one
    asymptotic family per residue class of each period.

    The default window spans one full period past each preperiod; ``extra``
    widens it by that many additional periods on both sides.
    """
    wb = len(S.back.pre) + (1 + extra) * len(S.back.per)
    wf = len(S.fwd.pre) + (1 + extra) * len(S.fwd.per)
    window: list[tuple[int, BiSeqEP]] = []
    seen = set()
    for r in range(-wb, wf + 1):
        shifted = S.shift(r)
        if shifted not in seen:
            seen.add(shifted)
            window.append((r, shifted))
    return ShiftClasses(window, backward_classes(S), forward_classes(S))


# ---------------------------------------------------------------------------
# Text format


def format_seq(value) -> str:
    """Render a SeqEP as PRE(PER) or a BiSeqEP as (PB)QB.QF(PF)."""
    if isinstance(value, SeqEP):
        return f"{value.pre}({value.per})"
    if isinstance(value, BiSeqEP):
        left = f"({value.back.per[::-1]}){value.back.pre[::-1]}"
        right = f"{value.fwd.pre}({value.fwd.per})"
        return f"{left}.{right}"
    raise TypeError(f"cannot format {type(value).__name__}")


class _Scanner:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def peek(self) -> str:
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch: str) -> None:
        if self.peek() != ch:
            raise ParseError(f"expected {ch!r}", self.pos)
        self.pos += 1

    def bits(self) -> str:
        start = self.pos
        while self.peek() in ("0", "1"):
            self.pos += 1
        return self.text[start : self.pos]

    def done(self) -> None:
        if self.pos != len(self.text):
            raise ParseError("trailing input", self.pos)


def parse_seq(text: str):
    """Parse a sequence literal; returns SeqEP or BiSeqEP (canonical).

    One-sided:  PRE(PER), e.g. ``10(010)``.
    Bi-infinite: (PB)QB.QF(PF), the segment left of the dot read in natural
    index order (so it denotes ... S_-2 S_-1), e.g. ``(101).1(1)``.
    """
    sc = _Scanner(text)
    if "." in text:
        sc.expect("(")
        pb = sc.bits()
        if not pb:
            raise ParseError("empty period", sc.pos)
        sc.expect(")")
        qb = sc.bits()
        sc.expect(".")
        qf = sc.bits()
        sc.expect("(")
        pf = sc.bits()
        if not pf:
            raise ParseError("empty period", sc.pos)
        sc.expect(")")
        sc.done()
        return BiSeqEP(back=SeqEP(qb[::-1], pb[::-1]), fwd=SeqEP(qf, pf))
    pre = sc.bits()
    sc.expect("(")
    per = sc.bits()
    if not per:
        raise ParseError("empty period", sc.pos)
    sc.expect(")")
    sc.done()
    return SeqEP(pre, per)
