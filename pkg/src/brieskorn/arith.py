"""Exact integer helpers: gcd, Hirzebruch-Jung expansions, Fibonacci numbers."""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import InvalidInput

__all__ = ["gcd", "NegContFrac", "neg_cont_frac", "evaluate_ncf", "fibonacci", "divisors"]


def gcd(a: int, b: int) -> int:
    if a < 0 or b < 0:
        raise InvalidInput(f"gcd expects nonnegative integers, got ({a}, {b})")
    if a == 0 and b == 0:
        raise InvalidInput("gcd(0, 0) is undefined")
    return math.gcd(a, b)


@dataclass(frozen=True)
class NegContFrac:
    """Negative continued fraction t_1 - 1/(t_2 - 1/(... - 1/t_m)).

    Canonical expansions have every coefficient <= -2.
    """

    coefficients: tuple[int, ...]

    def __post_init__(self):
        if not self.coefficients:
            raise InvalidInput("a continued fraction needs at least one coefficient")

    def __len__(self):
        return len(self.coefficients)

    def __iter__(self):
        return iter(self.coefficients)

    def value(self) -> Fraction:
        return evaluate_ncf(self.coefficients)

    @property
    def is_canonical(self) -> bool:
        return all(c <= -2 for c in self.coefficients)


def evaluate_ncf(coefficients) -> Fraction:
    """Evaluate a negative continued fraction exactly, innermost term first."""
    coefficients = list(coefficients)
    if not coefficients:
        raise InvalidInput("empty continued fraction")
    x = Fraction(coefficients[-1])
    for c in reversed(coefficients[:-1]):
        if x == 0:
            raise InvalidInput("continued fraction has a zero tail")
        x = c - 1 / x
    return x


def neg_cont_frac(num: int, den: int) -> NegContFrac:
    """Hirzebruch-Jung expansion of -num/den for coprime 0 < den < num."""
    if not 0 < den < num:
        raise InvalidInput(f"need 0 < den < num, got num={num}, den={den}")
    if math.gcd(num, den) != 1:
        raise InvalidInput(f"num={num} and den={den} are not coprime")
    coeffs = []
    while den:
        a = -(-num // den)  # ceil(num / den)
        coeffs.append(-a)
        num, den = den, a * den - num
    return NegContFrac(tuple(coeffs))


def fibonacci(m: int) -> int:
    """F_m with F_1 = F_2 = 1."""
    if m < 1:
        raise InvalidInput(f"Fibonacci index must be >= 1, got {m}")
    a, b = 1, 1
    for _ in range(m - 1):
        a, b = b, a + b
    return a


def divisors(n: int) -> list[int]:
    """Sorted positive divisors of n > 0 by trial division."""
    if n <= 0:
        raise InvalidInput(f"divisors expects a positive integer, got {n}")
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]
