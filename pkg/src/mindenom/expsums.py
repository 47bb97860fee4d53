"""Exponential sums modulo q and the sawtooth transform toolbox.

Conventions: e(x) = exp(2*pi*i*x), and a function of period q is stored by its
values at the residues 1..q.  The discrete Fourier transform used throughout is

    f_hat(x) = sum_{n=1}^{q} f(n) e(-n x / q),

inverted by f(n) = (1/q) sum_{x=1}^{q} f_hat(x) e(n x / q).  All exponentials
are taken from a precomputed table of q-th roots of unity indexed by exact
integer residues, so float error stays near machine precision even for long
sums.

The sawtooth b1(x) is 0 at integers and frac(x) - 1/2 elsewhere; its transform
has the closed form (1 + e(x/q)) / (2 (1 - e(x/q))).  Kloosterman sums
K(a, b; q) are real, obey the Weil bound gcd(a,b,q)^(1/2) tau(q) sqrt(q), and
specialize to Ramanujan sums at b = 0.  The twisted and weighted sawtooth sums
at inverted arguments n -> b1(N * inv(n, q) / q) are evaluated exactly in
integer arithmetic; their analytic bounds involve beta(q) =
sum_{d | q} log(q/d) / sqrt(d).
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Sequence, Union

import numpy as np

from .farey import inv_mod

Rational = Union[int, Fraction]

#: Kloosterman-type sums are real; imaginary residue above this is a bug.
IMAG_TOL = 1e-9


@lru_cache(maxsize=None)
def _roots(q: int) -> tuple[complex, ...]:
    """e(k/q) for k = 0..q-1."""
    return tuple(cmath.exp(2j * math.pi * k / q) for k in range(q))


@dataclass(frozen=True)
class PeriodicFunction:
    """A q-periodic function given by its values at the residues 1..q."""

    period: int
    values: tuple[complex, ...]

    def __post_init__(self) -> None:
        if self.period < 1:
            raise ValueError(f"period must be >= 1, got {self.period}")
        if len(self.values) != self.period:
            raise ValueError(
                f"expected {self.period} values, got {len(self.values)}"
            )
        object.__setattr__(self, "values", tuple(complex(v) for v in self.values))

    @classmethod
    def from_callable(cls, q: int, fn: Callable[[int], complex]) -> "PeriodicFunction":
        return cls(q, tuple(fn(n) for n in range(1, q + 1)))

    def __call__(self, n: int) -> complex:
        return self.values[(n - 1) % self.period]

    def is_even(self, tol: float = IMAG_TOL) -> bool:
        """True if f(-n) == f(n) for all n, within tol per entry."""
        return all(
            abs(self(-n) - self(n)) <= tol for n in range(1, self.period + 1)
        )

    def is_odd(self, tol: float = IMAG_TOL) -> bool:
        """True if f(-n) == -f(n) for all n, within tol per entry."""
        return all(
            abs(self(-n) + self(n)) <= tol for n in range(1, self.period + 1)
        )


def _transform(values: Sequence[complex], q: int, sign: int) -> np.ndarray:
    """Direct O(q^2) sum  out[k] = sum_n values[n-1] e(sign * n * (k+1) / q)."""
    v = np.asarray(values, dtype=complex)
    roots = np.array(_roots(q))
    idx = np.outer(np.arange(1, q + 1), np.arange(1, q + 1)) * sign % q
    return roots[idx] @ v


def dft(f: PeriodicFunction) -> PeriodicFunction:
    """Transform f_hat(x) = sum_{n=1}^{q} f(n) e(-n x / q) as a q-periodic function of x."""
    out = _transform(f.values, f.period, -1)
    return PeriodicFunction(f.period, tuple(out))


def idft(f_hat: PeriodicFunction) -> PeriodicFunction:
    """Inverse transform; idft(dft(f)) recovers f up to float roundoff."""
    q = f_hat.period
    out = _transform(f_hat.values, q, +1) / q
    return PeriodicFunction(q, tuple(out))


def _real_part(z: complex, what: str) -> float:
    if abs(z.imag) >= IMAG_TOL:
        raise ArithmeticError(f"{what} should be real, got imaginary part {z.imag}")
    return z.real


def kloosterman(a: int, b: int, q: int) -> float:
    """K(a, b; q) = sum over units n mod q of e((a n + b inv(n)) / q); always real."""
    if q < 1:
        raise ValueError(f"modulus must be positive, got {q}")
    roots = _roots(q)
    acc = 0j
    for n in range(1, q + 1):
        if math.gcd(n, q) == 1:
            nbar = pow(n, -1, q)
            acc += roots[(a * n + b * nbar) % q]
    return _real_part(acc, f"K({a}, {b}; {q})")


def kloosterman_table(q: int) -> np.ndarray:
    """Matrix of K(a, b; q) for a, b = 0..q-1, computed in one pass over the units."""
    if q < 1:
        raise ValueError(f"modulus must be positive, got {q}")
    units = np.array([n for n in range(1, q + 1) if math.gcd(n, q) == 1])
    invs = np.array([pow(int(n), -1, q) for n in units])
    roots = np.array(_roots(q))
    left = roots[np.outer(np.arange(q), units) % q]  # e(a n / q)
    right = roots[np.outer(invs, np.arange(q)) % q]  # e(inv(n) b / q)
    table = left @ right
    worst = float(np.abs(table.imag).max())
    if worst >= IMAG_TOL:
        raise ArithmeticError(f"Kloosterman table mod {q} has imaginary part {worst}")
    return table.real


def ramanujan(a: int, q: int) -> float:
    """Ramanujan sum c_q(a) = K(a, 0; q); an even function of a with c_q(0) = phi(q)."""
    return kloosterman(a, 0, q)


def divisor_count(q: int) -> int:
    """tau(q), the number of divisors of q >= 1."""
    if q < 1:
        raise ValueError(f"argument must be >= 1, got {q}")
    count = 0
    d = 1
    while d * d <= q:
        if q % d == 0:
            count += 1 if d * d == q else 2
        d += 1
    return count


def beta(q: int) -> float:
    """beta(q) = sum over divisors d of q of log(q/d) / sqrt(d)."""
    if q < 1:
        raise ValueError(f"argument must be >= 1, got {q}")
    total = 0.0
    d = 1
    while d * d <= q:
        if q % d == 0:
            total += math.log(q // d) / math.sqrt(d)
            if d * d != q:
                total += math.log(d) / math.sqrt(q // d)
        d += 1
    return total


def weil_bound(a: int, b: int, q: int) -> float:
    """gcd(a, b, q)^(1/2) * tau(q) * sqrt(q), an upper bound for |K(a, b; q)|."""
    if q < 1:
        raise ValueError(f"modulus must be positive, got {q}")
    return math.sqrt(math.gcd(a, b, q)) * divisor_count(q) * math.sqrt(q)


def b1(x: Rational) -> Fraction:
    """Sawtooth: 0 at integers, frac(x) - 1/2 elsewhere.  Odd and 1-periodic."""
    x = Fraction(x)
    if x.denominator == 1:
        return Fraction(0)
    return x - math.floor(x) - Fraction(1, 2)


def b1_residue(num: int, den: int) -> Fraction:
    """b1(num/den) given den >= 1, in one mod: (2 (num mod den) - den) / (2 den)."""
    e = num % den
    return Fraction(2 * e - den, 2 * den) if e else Fraction(0)


def b1_table(q: int) -> PeriodicFunction:
    """The sawtooth sampled at n/q for n = 1..q, as a periodic function mod q."""
    if q < 1:
        raise ValueError(f"period must be >= 1, got {q}")
    return PeriodicFunction(
        q, tuple(float(b1_residue(n, q)) for n in range(1, q + 1))
    )


def b1_hat_closed(x: int, q: int) -> complex:
    """Closed form of the sawtooth transform: 0 if q | x, else (1 + e(x/q)) / (2 (1 - e(x/q)))."""
    if q < 1:
        raise ValueError(f"modulus must be positive, got {q}")
    if x % q == 0:
        return 0j
    w = _roots(q)[x % q]
    return (1 + w) / (2 * (1 - w))


def twisted_b1_sum(lo: int, hi: int, q: int, n: int) -> Fraction:
    """Exact sum of b1(n * inv(m, q) / q) over integers m in [lo, hi] coprime to q."""
    if q < 1:
        raise ValueError(f"modulus must be positive, got {q}")
    total = Fraction(0)
    for m in range(lo, hi + 1):
        if math.gcd(m, q) == 1:
            total += b1_residue(n * pow(m, -1, q), q)
    return total


def twisted_b1_bound(q: int) -> float:
    """Bound (1/2) sqrt(q) tau(q) beta(q) log(q) for the twisted sawtooth sum over any interval."""
    return 0.5 * math.sqrt(q) * divisor_count(q) * beta(q) * math.log(q)


def weighted_b1_sum(s: int, a: Rational, b: Rational, n: int) -> Fraction:
    """Exact sum of (r - a) * b1(n * inv(r, s) / s) over integers r in ]a, b] coprime to s."""
    if s < 1:
        raise ValueError(f"modulus must be positive, got {s}")
    a, b = Fraction(a), Fraction(b)
    total = Fraction(0)
    for r in range(math.floor(a) + 1, math.floor(b) + 1):
        if math.gcd(r, s) == 1:
            total += (r - a) * b1_residue(n * inv_mod(r, s), s)
    return total


def weighted_b1_bound(s: int, a: Rational, b: Rational) -> float:
    """Bound (b - a) sqrt(s) tau(s) beta(s) log(s) for the weighted sawtooth sum."""
    return (
        float(Fraction(b) - Fraction(a))
        * math.sqrt(s)
        * divisor_count(s)
        * beta(s)
        * math.log(s)
    )


#: Slack absorbing float evaluation of sqrt/log/sin on the bound side.
BOUND_SLACK = 1e-12


def exact_within_bound(lhs: Rational, bound: float) -> bool:
    """|lhs| <= bound with the exact side rounded outward, so float noise never hides a violation."""
    return math.nextafter(abs(float(lhs)), math.inf) <= bound + BOUND_SLACK


def twisted_b1_bound_check(lo: int, hi: int, q: int, n: int) -> bool:
    """Whether the exact twisted sawtooth sum over [lo, hi] respects its analytic bound."""
    return exact_within_bound(twisted_b1_sum(lo, hi, q, n), twisted_b1_bound(q))


def weighted_b1_bound_check(s: int, a: Rational, b: Rational, n: int) -> bool:
    """Whether the exact weighted sawtooth sum over ]a, b] respects its analytic bound."""
    return exact_within_bound(weighted_b1_sum(s, a, b, n), weighted_b1_bound(s, a, b))


def geometric_sum_bound_check(lo: int, hi: int, alpha: Fraction) -> bool:
    """Check |sum_{n=lo}^{hi} e(n alpha)| <= 1 / sin(pi alpha) for non-integer rational alpha."""
    alpha = Fraction(alpha)
    if alpha.denominator == 1:
        raise ValueError("alpha must not be an integer")
    q = alpha.denominator
    roots = _roots(q)
    acc = 0j
    for n in range(lo, hi + 1):
        acc += roots[n * alpha.numerator % q]
    rhs = 1 / math.sin(math.pi * float(alpha - math.floor(alpha)))
    return abs(acc) <= rhs + BOUND_SLACK


@dataclass(frozen=True)
class ArithmeticTables:
    """Sieved tables of tau, phi and beta for 1..limit (index 0 unused)."""

    limit: int
    tau: np.ndarray
    phi: np.ndarray
    beta: np.ndarray

    @classmethod
    def build(cls, limit: int) -> "ArithmeticTables":
        if limit < 1:
            raise ValueError(f"limit must be >= 1, got {limit}")
        tau = np.zeros(limit + 1, dtype=np.int64)
        bet = np.zeros(limit + 1, dtype=np.float64)
        for d in range(1, limit + 1):
            tau[d::d] += 1
            bet[d::d] += np.log(np.arange(1, limit // d + 1)) / math.sqrt(d)
        phi = np.arange(limit + 1, dtype=np.int64)
        for p in range(2, limit + 1):
            if phi[p] == p:  # p prime
                phi[p::p] -= phi[p::p] // p
        return cls(limit, tau, phi, bet)


def tau_beta_summatory(x: int) -> float:
    """Sum of tau(n) * beta(n) for n <= x; grows like a constant times x log^2 x."""
    if x < 1:
        raise ValueError(f"argument must be >= 1, got {x}")
    tables = ArithmeticTables.build(x)
    return float(np.dot(tables.tau[1:].astype(np.float64), tables.beta[1:]))
