from fractions import Fraction
import math

import pytest
from hypothesis import given, settings, strategies as st

from brieskorn.arith import divisors, evaluate_ncf, fibonacci, gcd, neg_cont_frac, NegContFrac
from brieskorn.errors import InvalidInput


def test_gcd_values():
    assert gcd(12, 18) == 6
    assert gcd(1, 977) == 1
    assert gcd(89, 144) == 1
    assert gcd(0, 7) == 7


@pytest.mark.parametrize("a,b", [(-1, 3), (0, 0)])
def test_gcd_rejects(a, b):
    with pytest.raises(InvalidInput):
        gcd(a, b)


def test_ncf_examples():
    assert neg_cont_frac(7, 1).coefficients == (-7,)
    assert neg_cont_frac(5, 4).coefficients == (-2, -2, -2, -2)
    assert neg_cont_frac(3, 2).coefficients == (-2, -2)
    assert evaluate_ncf([-2, -2]) == Fraction(-3, 2)
    # -11/10 is ten copies of -2
    assert neg_cont_frac(11, 10).coefficients == (-2,) * 10


@pytest.mark.parametrize("num,den", [(4, 4), (4, 2), (3, 0), (2, 5)])
def test_ncf_rejects(num, den):
    with pytest.raises(InvalidInput):
        neg_cont_frac(num, den)


def test_ncf_empty():
    with pytest.raises(InvalidInput):
        NegContFrac(())


@settings(deadline=None)
@given(st.integers(2, 5000), st.data())
def test_ncf_roundtrip(num, data):
    den = data.draw(st.integers(1, num - 1))
    if math.gcd(num, den) != 1:
        with pytest.raises(InvalidInput):
            neg_cont_frac(num, den)
        return
    cf = neg_cont_frac(num, den)
    assert cf.is_canonical
    assert cf.value() == Fraction(-num, den)


def test_fibonacci():
    assert fibonacci(1) == fibonacci(2) == 1
    assert fibonacci(3) == 2
    assert fibonacci(6) == 8
    assert (fibonacci(11), fibonacci(12), fibonacci(13)) == (89, 144, 233)
    with pytest.raises(InvalidInput):
        fibonacci(0)


@given(st.integers(1, 300))
def test_fibonacci_recurrence(m):
    assert fibonacci(m + 2) == fibonacci(m + 1) + fibonacci(m)


@given(st.integers(1, 20000))
def test_divisors(n):
    assert divisors(n) == [d for d in range(1, n + 1) if n % d == 0]
