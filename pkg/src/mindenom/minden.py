"""Minimal denominators of rational intervals.

For a nonempty interval E of real numbers, min_denominator returns the least
q >= 1 such that E contains a fraction p/q.  Two algorithms are provided:

* "fast": a Stern-Brocot descent on the interval endpoints.  At each level the
  smallest admissible integer is tried; if none fits, the integer part is
  stripped and the interval is inverted, swapping the open/closed flags of the
  two ends.  The composed Moebius map then sends the innermost integer hit to
  the answer.  The fraction of minimal denominator in an interval is unique
  as soon as its denominator exceeds 1, and among denominator-1 hits the
  descent picks the leftmost, so the walk is deterministic.  Cost is one
  Euclidean algorithm on the endpoints, O(log max denominator) arithmetic ops.

* "oracle": scan q = 1, 2, 3, ... and count reduced fractions with
  denominator q inside E via ceil_count.  Termination is guaranteed because
  q(E) <= ceil(1/length(E)) + 1 for any nonempty interval, but the scan is
  only suitable for testing.

All four boundary variants (each end open or closed) are supported; single
points {a/b} are allowed when both ends are closed and give b.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Literal, Union

Rational = Union[int, Fraction]
Variant = Literal["half-open-right", "half-open-left", "closed", "open"]

#: Boundary flags (lo_closed, hi_closed) for each named variant.  The default
#: grid geometry is half-open-right, i.e. windows of the form ]a, b].
VARIANT_FLAGS: dict[str, tuple[bool, bool]] = {
    "half-open-right": (False, True),
    "half-open-left": (True, False),
    "closed": (True, True),
    "open": (False, False),
}


@dataclass(frozen=True)
class Interval:
    """A nonempty interval with rational endpoints and per-end closedness flags."""

    lo: Fraction
    hi: Fraction
    lo_closed: bool = False
    hi_closed: bool = True

    def __post_init__(self) -> None:
        object.__setattr__(self, "lo", Fraction(self.lo))
        object.__setattr__(self, "hi", Fraction(self.hi))
        if self.lo > self.hi or (
            self.lo == self.hi and not (self.lo_closed and self.hi_closed)
        ):
            raise ValueError(f"interval is empty: {self}")

    def contains(self, x: Rational) -> bool:
        x = Fraction(x)
        above = self.lo < x or (self.lo == x and self.lo_closed)
        below = x < self.hi or (x == self.hi and self.hi_closed)
        return above and below

    def length(self) -> Fraction:
        return self.hi - self.lo

    def __str__(self) -> str:
        left = "[" if self.lo_closed else "]"
        right = "]" if self.hi_closed else "["
        return f"{left}{self.lo}, {self.hi}{right}"


def _simplest_in(
    an: int, ad: int, a_open: bool, bn: int, bd: int, b_open: bool
) -> tuple[int, int]:
    """Reduced fraction of minimal denominator in the interval an/ad .. bn/bd.

    bd == 0 encodes an upper endpoint of +infinity.  The interval must be
    nonempty and non-degenerate.  Among minimal-denominator witnesses (there
    can be several only for denominator 1) the leftmost is returned, which
    also minimizes the numerator for intervals inside [0, +inf).
    """
    p1, p0, q1, q0 = 1, 0, 0, 1
    while True:
        if an % ad:
            n = -((-an) // ad)  # ceil(lo)
        else:
            n = an // ad + (1 if a_open else 0)
        if bd == 0 or n * bd < bn or (n * bd == bn and not b_open):
            return p1 * n + p0, q1 * n + q0
        # No integer fits: strip the integer part m = floor(lo) and invert.
        # x = m + 1/z maps the variable z over 1/(hi-m) .. 1/(lo-m), so the
        # endpoint roles and their openness flags swap.
        m = an // ad
        an, ad, bn, bd = bd, bn - m * bd, ad, an - m * ad
        a_open, b_open = b_open, a_open
        p1, p0, q1, q0 = p1 * m + p0, p1, q1 * m + q0, q1


def _min_denominator_scan(interval: Interval) -> int:
    """Scanning oracle: try q = 1, 2, ... until some reduced p/q lies in the interval."""
    lo, hi = interval.lo, interval.hi
    if lo == hi:
        return lo.denominator
    # q(E) <= ceil(1/length) + 1, so the scan below always terminates.
    q_stop = math.ceil(1 / (hi - lo)) + 1
    for q in range(1, q_stop + 1):
        a, b = lo * q, hi * q
        if ceil_count_hits(a, b, interval.lo_closed, interval.hi_closed, q):
            return q
    raise AssertionError(f"no denominator <= {q_stop} found in {interval}")


def ceil_count_hits(
    a: Fraction, b: Fraction, lo_closed: bool, hi_closed: bool, q: int
) -> bool:
    """True if some integer p with gcd(p, q) = 1 lies in the scaled interval a..b."""
    p = math.ceil(a)
    if p == a and not lo_closed:
        p += 1
    while p < b or (p == b and hi_closed):
        if math.gcd(p, q) == 1:
            return True
        p += 1
    return False


def min_denominator(interval: Interval, algo: str = "fast") -> int:
    """Least q >= 1 such that the interval contains a fraction p/q.

    algo is "fast" (Stern-Brocot descent) or "oracle" (denominator scan).
    """
    if algo == "oracle":
        return _min_denominator_scan(interval)
    if algo != "fast":
        raise ValueError(f"unknown algorithm {algo!r}")
    lo, hi = interval.lo, interval.hi
    if lo == hi:
        return lo.denominator
    _, q = _simplest_in(
        lo.numerator,
        lo.denominator,
        not interval.lo_closed,
        hi.numerator,
        hi.denominator,
        not interval.hi_closed,
    )
    return q


def min_fraction(interval: Interval) -> Fraction:
    """The fraction of minimal denominator in the interval (leftmost if denominator 1)."""
    lo, hi = interval.lo, interval.hi
    if lo == hi:
        return lo
    p, q = _simplest_in(
        lo.numerator,
        lo.denominator,
        not interval.lo_closed,
        hi.numerator,
        hi.denominator,
        not interval.hi_closed,
    )
    return Fraction(p, q)


def min_denominator_window(t: Rational, delta: Rational, algo: str = "fast") -> int:
    """Minimal denominator of the window ]t - delta, t] of width delta > 0."""
    t, delta = Fraction(t), Fraction(delta)
    if delta <= 0:
        raise ValueError(f"window width must be positive, got {delta}")
    return min_denominator(Interval(t - delta, t, False, True), algo)


def min_denominator_grid(
    n: int, j: int, variant: Variant = "half-open-right", algo: str = "fast"
) -> int:
    """Minimal denominator of the j-th of n equal windows covering ]0, 1].

    The window is ](j-1)/n, j/n] for the default variant; the other variants
    reuse the same endpoints with the flags from VARIANT_FLAGS.
    """
    if n < 1:
        raise ValueError(f"grid size must be >= 1, got {n}")
    if not 1 <= j <= n:
        raise ValueError(f"window index must be in 1..{n}, got {j}")
    lo_closed, hi_closed = VARIANT_FLAGS[variant]
    if algo == "fast":
        _, q = _simplest_in(j - 1, n, not lo_closed, j, n, not hi_closed)
        return q
    return min_denominator(
        Interval(Fraction(j - 1, n), Fraction(j, n), lo_closed, hi_closed), algo
    )


def grid_denominators(n: int, variant: Variant = "half-open-right") -> list[int]:
    """Minimal denominators of all n grid windows, fast path, as a list indexed by j - 1."""
    if n < 1:
        raise ValueError(f"grid size must be >= 1, got {n}")
    lo_closed, hi_closed = VARIANT_FLAGS[variant]
    lo_open, hi_open = not lo_closed, not hi_closed
    simplest = _simplest_in
    return [simplest(j - 1, n, lo_open, j, n, hi_open)[1] for j in range(1, n + 1)]
