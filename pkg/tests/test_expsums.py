import cmath
import math
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mindenom import expsums

import oracles


def test_periodic_function_basics():
    f = expsums.PeriodicFunction(3, (1.0, 2.0, 3.0))
    assert f(1) == 1 and f(2) == 2 and f(3) == 3
    assert f(4) == 1 and f(0) == 3 and f(-1) == 2  # period-3 extension
    g = expsums.PeriodicFunction.from_callable(4, lambda n: n * n)
    assert g.values == (1, 4, 9, 16)
    with pytest.raises(ValueError):
        expsums.PeriodicFunction(2, (1.0,))
    with pytest.raises(ValueError):
        expsums.PeriodicFunction(0, ())


def test_parity_classification():
    q = 8
    even = expsums.PeriodicFunction.from_callable(q, lambda n: math.cos(2 * math.pi * n / q))
    odd = expsums.PeriodicFunction.from_callable(q, lambda n: math.sin(2 * math.pi * n / q))
    assert even.is_even() and not even.is_odd()
    assert odd.is_odd() and not odd.is_even()
    assert expsums.b1_table(12).is_odd()


def test_dft_of_constant():
    f = expsums.PeriodicFunction(6, (1, 1, 1, 1, 1, 1))
    f_hat = expsums.dft(f)
    for x in range(1, 7):
        want = 6 if x % 6 == 0 else 0
        assert abs(f_hat(x) - want) < 1e-9


def test_dft_of_unit_indicator_is_ramanujan():
    q = 6
    ind = expsums.PeriodicFunction.from_callable(
        q, lambda n: 1 if math.gcd(n, q) == 1 else 0
    )
    ind_hat = expsums.dft(ind)
    for x in range(1, q + 1):
        assert abs(ind_hat(x) - expsums.ramanujan(x, q)) < 1e-9


def test_dft_matches_literal_sum():
    rng = random.Random(5)
    for q in (1, 2, 3, 7, 12, 25):
        values = [complex(rng.uniform(-1, 1), rng.uniform(-1, 1)) for _ in range(q)]
        f_hat = expsums.dft(expsums.PeriodicFunction(q, tuple(values)))
        for x in range(1, q + 1):
            assert abs(f_hat(x) - oracles.dft_brute(values, x)) < 1e-9


def test_idft_zero_and_delta():
    zero = expsums.PeriodicFunction(5, (0, 0, 0, 0, 0))
    assert all(abs(v) == 0 for v in expsums.idft(zero).values)
    delta = expsums.PeriodicFunction(7, (1, 0, 0, 0, 0, 0, 0))
    back = expsums.idft(expsums.dft(delta))
    for n in range(1, 8):
        assert abs(back(n) - delta(n)) < 1e-9


def test_roundtrip_b1_table_q100():
    f = expsums.b1_table(100)
    back = expsums.idft(expsums.dft(f))
    assert max(abs(back(n) - f(n)) for n in range(1, 101)) < 1e-9


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 256), st.randoms(use_true_random=False))
def test_roundtrip_random(q, rng):
    values = tuple(complex(rng.uniform(-1, 1), rng.uniform(-1, 1)) for _ in range(q))
    f = expsums.PeriodicFunction(q, values)
    back = expsums.idft(expsums.dft(f))
    assert max(abs(back(n) - f(n)) for n in range(1, q + 1)) < 1e-9


def test_kloosterman_examples():
    assert expsums.kloosterman(0, 0, 12) == pytest.approx(4)
    v = expsums.kloosterman(1, 1, 5)
    assert v == pytest.approx(2 + 2 * math.cos(4 * math.pi / 5), abs=1e-12)
    assert v == pytest.approx(0.381966, abs=1e-6)


def test_kloosterman_matches_ramanujan():
    for q in range(1, 51):
        for a in range(q):
            assert expsums.kloosterman(a, 0, q) == pytest.approx(
                expsums.ramanujan(a, q), abs=1e-9
            )


def test_kloosterman_matches_brute():
    for q in (1, 2, 5, 8, 13, 24):
        for a in range(q):
            for b in range(q):
                want = oracles.kloosterman_brute(a, b, q)
                assert abs(want.imag) < 1e-9
                assert expsums.kloosterman(a, b, q) == pytest.approx(
                    want.real, abs=1e-9
                )


def test_kloosterman_table_matches_scalar():
    for q in (1, 2, 6, 11, 20):
        table = expsums.kloosterman_table(q)
        assert table.shape == (q, q)
        for a in range(q):
            for b in range(q):
                assert table[a, b] == pytest.approx(
                    expsums.kloosterman(a, b, q), abs=1e-9
                )


def test_ramanujan_examples():
    assert expsums.ramanujan(0, 10) == pytest.approx(4)
    assert expsums.ramanujan(1, 6) == pytest.approx(1, abs=1e-12)
    assert expsums.ramanujan(2, 4) == pytest.approx(-2, abs=1e-12)


def test_ramanujan_even():
    for q in range(1, 60):
        for a in range(q):
            assert expsums.ramanujan(a, q) == pytest.approx(
                expsums.ramanujan(-a, q), abs=1e-9
            )


def test_weil_bound_examples():
    assert expsums.weil_bound(1, 1, 5) == pytest.approx(2 * math.sqrt(5))
    assert expsums.weil_bound(0, 0, 12) >= expsums.kloosterman(0, 0, 12)


def test_weil_bound_holds_small():
    for q in range(1, 41):
        for a in range(q):
            for b in range(q):
                k = expsums.kloosterman(a, b, q)
                assert abs(k) <= expsums.weil_bound(a, b, q) + 1e-9


def test_divisor_count_and_beta():
    assert [expsums.divisor_count(n) for n in range(1, 13)] == [
        1, 2, 2, 3, 2, 4, 2, 4, 3, 4, 2, 6,
    ]
    assert expsums.beta(1) == 0
    assert expsums.beta(2) == pytest.approx(math.log(2))
    # beta(6) = ln6 + ln3/sqrt(2) + ln2/sqrt(3) + 0
    want = math.log(6) + math.log(3) / math.sqrt(2) + math.log(2) / math.sqrt(3)
    assert expsums.beta(6) == pytest.approx(want, rel=1e-12)


def test_b1_examples():
    assert expsums.b1(0) == 0
    assert expsums.b1(Fraction(1, 4)) == Fraction(-1, 4)
    assert expsums.b1(Fraction(7, 3)) == Fraction(-1, 6)


@given(st.fractions(min_value=-20, max_value=20, max_denominator=100))
def test_b1_odd_and_periodic(x):
    assert expsums.b1(x) == -expsums.b1(-x)
    assert expsums.b1(x + 1) == expsums.b1(x)
    assert abs(expsums.b1(x)) < Fraction(1, 2)


def test_b1_residue_matches_b1():
    for den in range(1, 40):
        for num in range(-2 * den, 2 * den + 1):
            assert expsums.b1_residue(num, den) == expsums.b1(Fraction(num, den))


def test_b1_hat_closed_examples():
    assert expsums.b1_hat_closed(4, 4) == 0  # exact on the divisible branch
    assert abs(expsums.b1_hat_closed(1, 2)) < 1e-12
    assert expsums.b1_hat_closed(1, 4) == pytest.approx(0.5j, abs=1e-12)


def test_b1_hat_closed_matches_dft():
    for q in range(1, 61):
        f_hat = expsums.dft(expsums.b1_table(q))
        for x in range(1, q + 1):
            assert abs(f_hat(x) - expsums.b1_hat_closed(x, q)) < 1e-9


def test_b1_transform_sum_bound():
    for q in range(2, 101):
        f_hat = expsums.dft(expsums.b1_table(q))
        total = sum(abs(f_hat(y)) for y in range(1, q))
        assert total <= q * math.log(q) / 2 + 1e-9


def test_twisted_b1_sum_examples():
    rng = random.Random(9)
    for q in range(1, 61):
        assert expsums.twisted_b1_sum(1, q, q, rng.randint(1, q)) == 0
    assert expsums.twisted_b1_sum(1, 2, 5, 1) == Fraction(-1, 5)


def test_twisted_b1_bound_spot():
    rng = random.Random(11)
    for _ in range(300):
        q = rng.randint(2, 60)
        n = rng.randint(1, q)
        lo = rng.randint(1, q)
        hi = rng.randint(lo, q)
        assert expsums.twisted_b1_bound_check(lo, hi, q, n)


def test_weighted_b1_sum_examples():
    assert expsums.weighted_b1_sum(1, 0, 5, 3) == 0
    assert expsums.weighted_b1_sum(5, 0, 2, 1) == Fraction(-1, 10)


def test_weighted_b1_bound_spot():
    rng = random.Random(13)
    for _ in range(300):
        s = rng.randint(2, 40)
        n = rng.randint(1, 40)
        a = Fraction(rng.randint(0, 2 * s), 2)
        b = a + rng.randint(1, s)
        assert expsums.weighted_b1_bound_check(s, a, b, n)


def test_geometric_sum_bound_examples():
    assert expsums.geometric_sum_bound_check(0, 1, Fraction(1, 2))
    assert expsums.geometric_sum_bound_check(0, 9, Fraction(1, 3))
    with pytest.raises(ValueError):
        expsums.geometric_sum_bound_check(0, 5, Fraction(2))


@settings(max_examples=300, deadline=None)
@given(
    st.integers(-500, 500),
    st.integers(0, 200),
    st.fractions(min_value=Fraction(1, 400), max_value=Fraction(399, 400), max_denominator=400),
)
def test_geometric_sum_bound_random(lo, width, alpha):
    assert expsums.geometric_sum_bound_check(lo, lo + width, alpha)


def test_exact_within_bound_edges():
    assert expsums.exact_within_bound(Fraction(1, 2), 0.5)
    assert expsums.exact_within_bound(Fraction(-1, 2), 0.5)
    assert not expsums.exact_within_bound(Fraction(1, 2) + Fraction(1, 10**6), 0.5)
    assert expsums.exact_within_bound(Fraction(0), 0.0)


def test_arithmetic_tables_match_scalars():
    tables = expsums.ArithmeticTables.build(300)
    assert tables.tau[1] == 1 and tables.phi[1] == 1 and tables.beta[1] == 0
    for n in range(1, 301):
        assert tables.tau[n] == expsums.divisor_count(n)
        assert tables.beta[n] == pytest.approx(expsums.beta(n), rel=1e-12)
    phis = [0, 1]
    for n in range(2, 301):
        phis.append(sum(1 for a in range(1, n + 1) if math.gcd(a, n) == 1))
    assert list(tables.phi[1:]) == phis[1:]


def test_tau_beta_summatory():
    assert expsums.tau_beta_summatory(1) == 0
    assert expsums.tau_beta_summatory(2) == 2 * math.log(2)
    x = 1000
    ratio = expsums.tau_beta_summatory(x) / (x * math.log(x) ** 2)
    assert ratio < 3.5


def test_kloosterman_realness_guard():
    # realness is checked internally; all values up to q = 60 stay real
    for q in range(1, 61):
        table = expsums.kloosterman_table(q)
        assert table.dtype.kind == "f"
