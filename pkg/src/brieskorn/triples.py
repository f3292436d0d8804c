"""Brieskorn triples (p, q, r) with pq + pr - qr = 1 and their division data."""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Optional

from .arith import divisors
from .errors import EvenP, InvalidInput, NonIntegralR, NotCoprime, OutOfRange

__all__ = [
    "Triple",
    "Decomposition",
    "make_triple",
    "seifert_triple",
    "enumerate_triples",
    "naive_triples",
    "decompose",
]


@dataclass(frozen=True, order=True)
class Triple:
    p: int
    q: int
    r: int

    def __iter__(self):
        return iter((self.p, self.q, self.r))

    def __str__(self):
        return f"({self.p},{self.q},{self.r})"

    @property
    def is_almost_simple(self) -> bool:
        return self.p * self.q + self.p * self.r - self.q * self.r == 1

    @property
    def l(self) -> int:
        return self.q - self.p

    @property
    def is_odd(self) -> bool:
        return self.p % 2 == 1


@dataclass(frozen=True)
class Decomposition:
    """n_p = (p-1)/2 split as t*l + alpha with l = q - p; s = l / n_p."""

    n_p: int
    l: int
    t: int
    alpha: int
    s: Fraction


def _check_coprime(p, q, r):
    for a, b in ((p, q), (q, r), (r, p)):
        if math.gcd(a, b) != 1:
            raise NotCoprime(f"gcd({a}, {b}) = {math.gcd(a, b)} for ({p},{q},{r})")


def make_triple(p: int, q: int) -> Triple:
    """Build the almost simple triple determined by (p, q); r = (pq - 1)/(q - p)."""
    if p < 2:
        raise OutOfRange(f"p must be >= 2, got {p}")
    if not p + 1 <= q <= 2 * p - 1:
        raise OutOfRange(f"q must lie in [{p + 1}, {2 * p - 1}] for p={p}, got {q}")
    if math.gcd(p, q) != 1:
        raise NotCoprime(f"gcd({p}, {q}) = {math.gcd(p, q)}")
    num, l = p * q - 1, q - p
    if num % l:
        raise NonIntegralR(f"q - p = {l} does not divide p^2 - 1 = {p * p - 1}")
    r = num // l
    _check_coprime(p, q, r)
    return Triple(p, q, r)


def seifert_triple(p: int, q: int, r: int) -> Triple:
    """Relaxed constructor: pairwise coprime 1 < p < q < r, any Seifert invariant.

    Only the plumbing module accepts these when pq + pr - qr != 1.
    """
    if not 1 < p < q < r:
        raise OutOfRange(f"need 1 < p < q < r, got ({p},{q},{r})")
    _check_coprime(p, q, r)
    return Triple(p, q, r)


def enumerate_triples(p_max: int, l_range: Optional[tuple[int, int]] = None,
                      p_min: int = 2) -> Iterator[Triple]:
    """All almost simple triples with p_min <= p <= p_max, ordered by (p, q).

    q - p runs over the divisors of p^2 - 1 in [1, p - 1]; ``l_range`` is an
    inclusive (lo, hi) filter on q - p.
    """
    if p_max < 2:
        raise InvalidInput(f"p_max must be >= 2, got {p_max}")
    lo, hi = l_range if l_range is not None else (1, None)
    for p in range(max(p_min, 2), p_max + 1):
        for l in divisors(p * p - 1):
            if l > p - 1:
                break
            if l < lo or (hi is not None and l > hi):
                continue
            # gcds are automatic: a common factor would divide pq + pr - qr = 1
            yield Triple(p, p + l, p + (p * p - 1) // l)


def naive_triples(p_max: int) -> list[Triple]:
    """Brute-force double loop over (p, q); reference for enumerate_triples."""
    out = []
    for p in range(2, p_max + 1):
        for q in range(p + 1, 2 * p + 2):
            if (p * q - 1) % (q - p):
                continue
            r = (p * q - 1) // (q - p)
            if r > q and math.gcd(p, q) == math.gcd(q, r) == math.gcd(p, r) == 1 \
                    and p * q + p * r - q * r == 1:
                out.append(Triple(p, q, r))
    return out


def decompose(t: Triple) -> Decomposition:
    if t.p % 2 == 0:
        raise EvenP(f"p = {t.p} is even; use the even closed form")
    n_p = (t.p - 1) // 2
    l = t.q - t.p
    quo, rem = divmod(n_p, l)
    return Decomposition(n_p=n_p, l=l, t=quo, alpha=rem, s=Fraction(l, n_p))
