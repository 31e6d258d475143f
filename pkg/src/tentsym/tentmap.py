"""Exact-arithmetic tent-map dynamics.

The map is normalized to [0, 1] with critical point c = 1/2: x maps to
lambda*x on the left branch and lambda*(1-x) on the right.  Its core is
[a, b] with b = lambda/2 and a = f(b).  Slopes are rational, so orbits,
kneading sequences, and realizations of symbolic itineraries are computed
exactly with `fractions.Fraction`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .sequences import BiSeqEP, SeqEP, parity

HALF = Fraction(1, 2)


class SlopeOutOfRange(ValueError):
    """Slope outside (sqrt(2), 2): the map is renormalizable or degenerate."""


class NotRealizable(ValueError):
    """The symbolic sequence is not the itinerary of any orbit of this map."""

    def __init__(self, message: str, index: int):
        super().__init__(f"{message} (at index {index})")
        self.index = index


class DenominatorBudgetExceeded(RuntimeError):
    """Orbit denominators outgrew the configured bit budget."""


@dataclass(frozen=True)
class TentMap:
    """A tent map of rational slope in (sqrt(2), 2), restricted to its core."""

    slope: Fraction
    a: Fraction = field(init=False)
    b: Fraction = field(init=False)
    c: Fraction = field(init=False)

    def __post_init__(self):
        s = self.slope
        if not isinstance(s, Fraction):
            raise TypeError("slope must be a Fraction")
        if s * s <= 2 or s >= 2:
            raise SlopeOutOfRange(f"slope {s} outside (sqrt(2), 2)")
        object.__setattr__(self, "b", s / 2)
        object.__setattr__(self, "a", s - s * s / 2)
        object.__setattr__(self, "c", HALF)

    def apply(self, x: Fraction) -> Fraction:
        return self.slope * x if x <= HALF else self.slope * (1 - x)

    def inverse_branch(self, symbol: str, y: Fraction) -> Fraction:
        """The preimage of y on the branch selected by the symbol."""
        return y / self.slope if symbol == "0" else 1 - y / self.slope

    def in_core(self, x: Fraction) -> bool:
        return self.a <= x <= self.b

    def in_half(self, symbol: str, x: Fraction) -> bool:
        """Closed-half membership: [a, c] for 0 and [c, b] for 1."""
        if symbol == "0":
            return self.a <= x <= self.c
        return self.c <= x <= self.b


def make_tent(slope: Fraction) -> TentMap:
    return TentMap(slope)


DEFAULT_BIT_BUDGET = 4096


def _check_budget(x: Fraction, bit_budget: int) -> None:
    if x.denominator.bit_length() > bit_budget:
        raise DenominatorBudgetExceeded(
            f"denominator exceeds {bit_budget} bits"
        )


@dataclass(frozen=True)
class KneadingResult:
    """Either the first `depth` symbols of the kneading sequence, or the
    exact eventually periodic kneading sequence when the critical point is
    detected periodic within the depth."""

    prefix: Optional[str]
    exact: Optional[SeqEP]
    eps: Optional[str]

    @property
    def is_exact(self) -> bool:
        return self.exact is not None


def kneading(f: TentMap, depth: int, bit_budget: int = DEFAULT_BIT_BUDGET) -> KneadingResult:
    """Iterate the critical value exactly to read off the kneading sequence.

    A hit f^r(b) = c means the critical point is periodic of period r + 1;
    the symbol at the hit is the parity code of the critical orbit and the
    kneading sequence is returned exactly.
    """
    if depth < 1:
        raise ValueError("depth must be positive")
    x = f.b
    symbols: list[str] = []
    for _ in range(depth):
        if x == f.c:
            hits_right = sum(1 for y in _orbit_prefix(f, symbols) if y > f.c)
            eps = "0" if hits_right % 2 == 0 else "1"
            word = "".join(symbols) + eps
            return KneadingResult(prefix=None, exact=SeqEP("", word), eps=eps)
        symbols.append("1" if x > f.c else "0")
        x = f.apply(x)
        _check_budget(x, bit_budget)
    return KneadingResult(prefix="".join(symbols), exact=None, eps=None)


def _orbit_prefix(f: TentMap, symbols: list[str]) -> list[Fraction]:
    x = f.b
    out = [x]
    for _ in range(len(symbols) - 1):
        x = f.apply(x)
        out.append(x)
    return out


def critical_period(f: TentMap, depth: int) -> Optional[tuple[int, str]]:
    """(period, eps) if the critical point is periodic within depth, else None."""
    result = kneading(f, depth)
    if result.is_exact:
        return len(result.exact.per), result.eps
    return None


@dataclass(frozen=True)
class Itinerary:
    """Coding of a finite orbit segment.  `hit_index` is set when the orbit
    of a non-periodic critical point lands on it, in which case both
    extensions prefix + {0,1} + kneading are itineraries."""

    word: str
    hit_index: Optional[int]

    @property
    def unique(self) -> bool:
        return self.hit_index is None


def itinerary(
    f: TentMap, x: Fraction, depth: int, bit_budget: int = DEFAULT_BIT_BUDGET
) -> Itinerary:
    """Code the orbit of x by sides of the critical point.

    If the critical point is periodic (within depth), hits are coded with
    its parity symbol and the itinerary is unique; otherwise the first hit
    is reported and the coding stops there.
    """
    if not f.in_core(x):
        raise ValueError(f"{x} outside the core [{f.a}, {f.b}]")
    periodic = critical_period(f, depth)
    symbols: list[str] = []
    for r in range(depth):
        if x == f.c:
            if periodic is None:
                return Itinerary(word="".join(symbols), hit_index=r)
            symbols.append(periodic[1])
        else:
            symbols.append("1" if x > f.c else "0")
        x = f.apply(x)
        _check_budget(x, bit_budget)
    return Itinerary(word="".join(symbols), hit_index=None)


def point_from_forward(f: TentMap, s: SeqEP) -> Fraction:
    """The unique core point whose itinerary is s, exactly.

    The periodic tail solves the affine fixed-point equation of the
    composed branch maps (slope magnitude > 1, so the solution is unique);
    the preperiod is pulled back through inverse branches.  Every step
    verifies core and closed-half membership.
    """
    lam = f.slope
    # Compose x -> A x + B along the period word.
    acc_a, acc_b = Fraction(1), Fraction(0)
    for sym in s.per:
        if sym == "0":
            acc_a, acc_b = lam * acc_a, lam * acc_b
        else:
            acc_a, acc_b = -lam * acc_a, lam - lam * acc_b
    x = acc_b / (1 - acc_a)
    # Verify the periodic cycle.
    y = x
    for i, sym in enumerate(s.per):
        if not (f.in_core(y) and f.in_half(sym, y)):
            raise NotRealizable("periodic tail escapes its branch", len(s.pre) + i)
        y = lam * y if sym == "0" else lam * (1 - y)
    # Pull the preperiod back through inverse branches.
    for i in range(len(s.pre) - 1, -1, -1):
        x = f.inverse_branch(s.pre[i], x)
        if not f.in_core(x):
            raise NotRealizable("pull-back leaves the core", i)
    return x


@dataclass(frozen=True)
class Realization:
    """An exact orbit window certifying a bi-infinite itinerary."""

    points: dict[int, Fraction]
    cycle_anchor: Fraction

    def point(self, r: int) -> Fraction:
        return self.points[r]


def realize_backward(
    f: TentMap, S: BiSeqEP, depth: int, bit_budget: int = DEFAULT_BIT_BUDGET
) -> Realization:
    """Realize a bi-infinite itinerary as a genuine orbit (x_r), f(x_r) = x_{r+1}.

    The forward side is realized through point_from_forward; backward steps
    apply the inverse branch selected by each symbol and verify core
    membership.  The finite window is extended past the backward preperiod
    by two full periods, and the fixed point of the composed inverse map
    over one backward period (a contraction) is verified as well: backward
    iterates approach it monotonically in distance, so the window plus the
    fixed point certify every backward index.
    """
    back = S.back
    min_depth = len(back.pre) + 2 * len(back.per)
    eff = max(depth, min_depth)

    x0 = point_from_forward(f, S.fwd)
    points = {0: x0}
    x = x0
    for r in range(1, eff + 1):
        x = f.apply(x)
        _check_budget(x, bit_budget)
        points[r] = x
    x = x0
    for r in range(-1, -eff - 1, -1):
        x = f.inverse_branch(S.symbol(r), x)
        _check_budget(x, bit_budget)
        if not f.in_core(x):
            raise NotRealizable("backward orbit leaves the core", r)
        points[r] = x

    # Cycle condition for the periodic backward tail: the composed inverse
    # map over one period is an affine contraction; its fixed point must
    # satisfy the same constraints.
    lam = f.slope
    acc_a, acc_b = Fraction(1), Fraction(0)
    anchor = -len(back.pre)
    for j in range(len(back.per)):
        sym = S.symbol(anchor - 1 - j)
        if sym == "0":
            acc_a, acc_b = acc_a / lam, acc_b / lam
        else:
            acc_a, acc_b = -acc_a / lam, 1 - acc_b / lam
    p = acc_b / (1 - acc_a)
    y = p
    for j in range(len(back.per)):
        sym = S.symbol(anchor - 1 - j)
        y = f.inverse_branch(sym, y)
        if not f.in_core(y):
            raise NotRealizable(
                "backward cycle fixed point escapes the core", anchor - 1 - j
            )
    window = {r: points[r] for r in range(-depth, depth + 1)}
    return Realization(points=window, cycle_anchor=p)
