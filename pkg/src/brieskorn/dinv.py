"""d-invariants of Brieskorn spheres with pq + pr - qr = 1.

Values of the quadratic form are handled as ``4 * F`` (an exact integer) in
the hot paths and as :class:`fractions.Fraction` at the public surface.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

import numpy as np

from .errors import (BudgetExceeded, DomainError, EvenP, IntegrityError, InvalidInput,
                     NotAlmostSimple, NotCoprime, OddP)
from .triples import Decomposition, Triple, decompose

__all__ = [
    "ORACLE_MAX_P",
    "DResult",
    "Prop48Data",
    "SemigroupData",
    "ClosedForm",
    "ClassificationReport",
    "f_eval",
    "F4",
    "F_eval",
    "F_factored",
    "in_lattice",
    "lattice_R_member",
    "lattice_max",
    "d_full",
    "set_M",
    "d_refined",
    "d_even",
    "even_identities",
    "D_invariant",
    "chi",
    "semigroup",
    "d_semigroup_minus",
    "d_semigroup_plus",
    "prop48_conditions",
    "closed_forms",
    "s_regime",
    "classify",
    "d",
]

ORACLE_MAX_P = 2000

EVEN = "even-closed-form"
REFINED = "refined"
FULL = "full-oracle"
FAMILY = "family-closed-form:"


@dataclass(frozen=True)
class DResult:
    value: int
    witness: Optional[tuple[int, int]]
    method: str

    def __post_init__(self):
        if self.value < 0 or self.value % 2:
            raise IntegrityError(f"d = {self.value} is not a nonnegative even integer "
                                 f"(method {self.method})")


def _require_almost_simple(t: Triple):
    if not t.is_almost_simple:
        raise NotAlmostSimple(f"{t} does not satisfy pq + pr - qr = 1")


# -- the quadratic form ------------------------------------------------------

def f_eval(t: Triple, x: int, y: int) -> int:
    p, q, r = t
    return -(q + r) * x * x + 4 * q * x * y - 4 * (q - p) * y * y - 4 * y


def F4(t: Triple, a: int, m: int) -> int:
    """4 * F(a, m); always an integer."""
    return f_eval(t, a, m) + t.q + t.r


def F_eval(t: Triple, a: int, m: int) -> Fraction:
    return Fraction(F4(t, a, m), 4)


def F_factored(t: Triple, a: int, m: int) -> Fraction:
    """Completed-square form -((2lm - aq + 1)^2 - (q - a)^2) / (4l)."""
    l = t.q - t.p
    return Fraction(-((2 * l * m - a * t.q + 1) ** 2 - (t.q - a) ** 2), 4 * l)


def in_lattice(t: Triple, a: int, m: int) -> bool:
    """Odd a with |a| <= p and 0 <= m <= (p-1)/2."""
    return a % 2 == 1 and -t.p <= a <= t.p and 0 <= m <= (t.p - 1) // 2


def lattice_R_member(t: Triple, a: int, m: int) -> bool:
    if t.p % 2 == 0:
        raise EvenP(f"p = {t.p} is even")
    if not in_lattice(t, a, m):
        raise DomainError(f"({a}, {m}) is outside the lattice for {t}")
    return F4(t, a, m) >= 4 * (t.p - 1)


# -- brute-force oracle ------------------------------------------------------

def _grid4(t: Triple, a_vals, m_vals) -> np.ndarray:
    """4F on the grid a_vals x m_vals (rows indexed by a)."""
    p, q, r = t
    amax = max(abs(int(a_vals[0])), abs(int(a_vals[-1])))
    mmax = int(m_vals[-1])
    bound = (q + r) * amax * amax + 4 * q * amax * mmax + 4 * (q - p) * mmax * mmax \
        + 4 * mmax + q + r
    dtype = np.int64 if bound < 2 ** 62 else object
    a = np.asarray(a_vals, dtype=dtype)[:, None]
    m = np.asarray(m_vals, dtype=dtype)[None, :]
    return -(q + r) * a * a + 4 * q * a * m - 4 * (q - p) * m * m - 4 * m + (q + r)


def lattice_max(t: Triple, region: str = "restricted",
                max_p: int = ORACLE_MAX_P) -> tuple[int, tuple[int, int]]:
    """Maximum of 4F over a lattice region and its lexicographically first witness.

    ``region="full"`` sweeps odd a in [-p, p] and m in [0, n_p];
    ``region="restricted"`` sweeps odd a in [1, p] and m in [1, n_p].
    """
    _require_almost_simple(t)
    if t.p % 2 == 0:
        raise EvenP(f"p = {t.p} is even")
    if t.p > max_p:
        raise BudgetExceeded(f"p = {t.p} exceeds the oracle budget {max_p}")
    n_p = (t.p - 1) // 2
    if region == "full":
        a_vals, m_vals = np.arange(-t.p, t.p + 1, 2), np.arange(0, n_p + 1)
    elif region == "restricted":
        a_vals, m_vals = np.arange(1, t.p + 1, 2), np.arange(1, n_p + 1)
    else:
        raise InvalidInput(f"unknown region {region!r}")
    grid = _grid4(t, a_vals, m_vals)
    # argmax returns the first maximum in row-major order: smallest a, then smallest m
    i, j = np.unravel_index(int(np.argmax(grid)), grid.shape)
    return int(grid[i, j]), (int(a_vals[i]), int(m_vals[j]))


def d_full(t: Triple, max_p: int = ORACLE_MAX_P) -> DResult:
    """Maximum of F over the restricted lattice intersected with R."""
    v4, w = lattice_max(t, "restricted", max_p)
    # (1, 1) lies in R, so the unconstrained maximum is automatically in R
    if v4 < 4 * (t.p - 1) or v4 % 4:
        raise IntegrityError(f"oracle maximum 4F = {v4} is inconsistent for {t}")
    return DResult(v4 // 4, w, FULL)


# -- refined maximization ----------------------------------------------------

def set_M(t: Triple) -> list[tuple[int, int]]:
    """The seed (1, t+1) plus odd a >= 3 with a < m <= n_p and F(a, m) >= F(1, 1)."""
    _require_almost_simple(t)
    dec = decompose(t)
    out = [(1, dec.t + 1)]
    if dec.n_p >= 4:
        a_vals = np.arange(3, dec.n_p, 2)
        m_vals = np.arange(1, dec.n_p + 1)
        grid = _grid4(t, a_vals, m_vals)
        keep = (grid >= 4 * (t.p - 1)) & (m_vals[None, :] > a_vals[:, None])
        out.extend((int(a_vals[i]), int(m_vals[j])) for i, j in zip(*np.nonzero(keep)))
    return out


def d_refined(t: Triple) -> DResult:
    """Maximum of F over the refined set.

    For fixed a the form is a concave parabola in m with vertex (aq - 1)/(2l),
    so only the two integers around the vertex (clamped to a < m <= n_p) are
    examined. Linear in p.
    """
    _require_almost_simple(t)
    dec = decompose(t)
    n_p, l = dec.n_p, dec.l
    seed = F4(t, 1, dec.t + 1)
    if seed != 4 * (dec.t + 1) * (n_p + dec.alpha):
        raise IntegrityError(f"F(1, t+1) disagrees with (t+1)(n_p+alpha) for {t}")
    best, witness = seed, (1, dec.t + 1)
    floor4 = 4 * (t.p - 1)
    for a in range(3, n_p, 2):
        lo = a + 1
        m0 = (a * t.q - 1) // (2 * l)
        for m in sorted({min(max(m0, lo), n_p), min(max(m0 + 1, lo), n_p)}):
            v = F4(t, a, m)
            if v >= floor4 and v > best:
                best, witness = v, (a, m)
    if best % 4:
        raise IntegrityError(f"refined maximum 4F = {best} not divisible by 4 for {t}")
    return DResult(best // 4, witness, REFINED)


# -- even p and the lower bound D ----------------------------------------------

def even_identities(t: Triple) -> tuple[Fraction, Fraction, Fraction]:
    p, q, r = t
    return Fraction(q + r, 4), Fraction(r * r - 1, 4 * (r - p)), Fraction(q * q - 1, 4 * (q - p))


def d_even(t: Triple) -> DResult:
    _require_almost_simple(t)
    if t.p % 2:
        raise OddP(f"p = {t.p} is odd")
    forms = even_identities(t)
    if (t.q + t.r) % 4 or len(set(forms)) != 1:
        raise IntegrityError(f"even-p closed forms disagree or are non-integral for {t}: {forms}")
    return DResult((t.q + t.r) // 4, None, EVEN)


def D_invariant(t: Triple) -> int:
    _require_almost_simple(t)
    if t.p % 2 == 0:
        return d_even(t).value
    dec = decompose(t)
    return (dec.t + 1) * (dec.n_p + dec.alpha)


def chi(l: int, alpha: int) -> Fraction:
    if l < 1 or not 0 <= alpha < l:
        raise InvalidInput(f"chi needs l >= 1 and 0 <= alpha < l, got ({l}, {alpha})")
    return Fraction(l * l, 4) - (alpha + 1) * l + alpha * alpha + 2


# -- torus knot surgeries ----------------------------------------------------

@dataclass(frozen=True)
class SemigroupData:
    """Membership of S(p, q) = {ap + bq : a, b >= 0} on [0, 2g]."""

    p: int
    q: int
    g: int
    members: np.ndarray = field(repr=False, compare=False)

    def __contains__(self, s: int) -> bool:
        if s < 0:
            return False
        return s >= 2 * self.g or bool(self.members[s])

    def gaps(self) -> list[int]:
        return [s for s in range(2 * self.g) if not self.members[s]]


def semigroup(p: int, q: int) -> SemigroupData:
    if not 1 < p < q:
        raise InvalidInput(f"need 1 < p < q, got ({p}, {q})")
    if math.gcd(p, q) != 1:
        raise NotCoprime(f"gcd({p}, {q}) = {math.gcd(p, q)}")
    g = (p - 1) * (q - 1) // 2
    members = np.zeros(2 * g + 1, dtype=bool)
    members[0] = True
    for s in range(1, 2 * g + 1):
        members[s] = (s >= p and members[s - p]) or (s >= q and members[s - q])
    return SemigroupData(p, q, g, members)


def d_semigroup_minus(p: int, q: int, n: int) -> int:
    """d of the (p, q, pqn - 1) Brieskorn sphere: twice the gaps of S(p, q) at or above g."""
    if n < 1:
        raise InvalidInput(f"n must be >= 1, got {n}")
    sg = semigroup(p, q)
    return 2 * sum(1 for s in sg.gaps() if s >= sg.g)


def d_semigroup_plus(p: int, q: int, n: int) -> int:
    """d of the (p, q, pqn + 1) Brieskorn sphere, which is always 0."""
    if n < 1:
        raise InvalidInput(f"n must be >= 1, got {n}")
    semigroup(p, q)
    return 0


# -- membership diagnostics --------------------------------------------------

@dataclass(frozen=True)
class Prop48Data:
    Delta: int
    c: Fraction
    d_frak: Fraction
    t_frak: Optional[float]


@dataclass(frozen=True)
class MembershipDiagnostic:
    a: int
    m: int
    data: Prop48Data
    is_one_one: bool
    m_at_least_2: bool
    delta_nonnegative: bool
    # evaluated as d_frak <= t_frak; the radius is assumed, not given
    radius_condition: Optional[bool]
    nearest_odd: bool
    in_R: bool

    @property
    def predicted(self) -> bool:
        return self.is_one_one or (self.m_at_least_2 and self.delta_nonnegative
                                   and bool(self.radius_condition) and self.nearest_odd)

    @property
    def agrees(self) -> bool:
        return self.predicted == self.in_R


def _nearest_odd_distance(c: Fraction) -> Fraction:
    k = math.floor(c)
    lo = k if k % 2 else k - 1
    return min(abs(c - lo), abs(c - (lo + 2)))


def prop48_conditions(t: Triple, a: int, m: int) -> MembershipDiagnostic:
    _require_almost_simple(t)
    if t.p % 2 == 0:
        raise EvenP(f"p = {t.p} is even")
    if not in_lattice(t, a, m):
        raise DomainError(f"({a}, {m}) is outside the lattice for {t}")
    p, q, r = t
    s = q + r
    delta = 4 * (2 * m - s) ** 2 - 16 * s * (p - 1)
    c = Fraction(2 * q * m, s)
    dd = _nearest_odd_distance(c)
    t_frak = math.sqrt(delta) / (2 * s) if delta >= 0 else None
    radius = (2 * s * dd) ** 2 <= delta if delta >= 0 else None
    return MembershipDiagnostic(
        a=a, m=m,
        data=Prop48Data(delta, c, dd, t_frak),
        is_one_one=(a, m) == (1, 1),
        m_at_least_2=m >= 2,
        delta_nonnegative=delta >= 0,
        radius_condition=radius,
        nearest_odd=abs(c - a) == dd,
        in_R=F4(t, a, m) >= 4 * (p - 1),
    )


# -- closed forms and classification ----------------------------------------

@dataclass(frozen=True)
class ClosedForm:
    name: str
    predicted: int
    description: str


def _su_parameter(dec: Decomposition) -> Optional[int]:
    """u with l / n_p = 2u / (u + 1), if one exists."""
    den = 2 * dec.n_p - dec.l
    if den <= 0 or dec.l % den:
        return None
    return dec.l // den


def _within_quadratic_window(p: int, l: int) -> bool:
    # p <= l + 3 + 2 sqrt(2(l + 2)), decided in integers
    x = p - l - 3
    return x <= 0 or x * x <= 8 * (l + 2)


def closed_forms(t: Triple) -> list[ClosedForm]:
    """Every closed-form evaluation whose hypothesis holds for ``t``."""
    _require_almost_simple(t)
    p = t.p
    if p % 2 == 0:
        return [ClosedForm("even", d_even(t).value, "p even: (q + r)/4")]
    dec = decompose(t)
    n_p, l, tt, al = dec.n_p, dec.l, dec.t, dec.alpha
    D = (tt + 1) * (n_p + al)
    out = []

    def add(name, value, text):
        out.append(ClosedForm(name, value, text))

    if 1 <= l <= 19:
        add("thm-1-19", D, "1 <= q - p <= 19 gives d = D")
    if al == 0:
        add("alpha0", (tt + 1) * n_p, "n_p divisible by q - p gives d = (t + 1) n_p")
    if l == 2 * n_p:
        add("ks20-1", p - 1, "q = 2p - 1")
    if l == n_p + 1:
        add("ks20-2", p - 1, "q - p = n_p + 1")
    if l == n_p:
        add("ks20-3", p - 1, "q - p = n_p")
    if p % 4 == 3 and 2 * l == n_p + 1:
        add("ks20-4", 6 * ((p - 3) // 4) + 2, "p = 4n + 3, q = 5n + 4")
    if l == 1:
        add("ks20-5", n_p * n_p + n_p, "q = p + 1")
    u = _su_parameter(dec)
    if u is not None:
        add("su", p - 1, f"l / n_p = 2u/(u + 1) with u = {u}")
    if p <= 23 and l >= n_p:
        add("p-le-23", p - 1, "p <= 23 and q - p >= n_p")
    if (tt, al) == (1, 1):
        add("t1-alpha1", p + 1, "(t, alpha) = (1, 1) gives d = p + 1")
    if p >= chi(l, al):
        add("chi-suff", D, "p >= chi(l, alpha)")
    if l > n_p and p <= 2 * l + 1 and _within_quadratic_window(p, l):
        add("chi-suff-2", D, "l > n_p and p <= l + 3 + 2 sqrt(2(l + 2))")
    if p % 4 == 1 and (p - 1) // 4 >= 3:
        k = (p - 1) // 4
        if l in {1, 2, 4, 8, k, 2 * k, 2 * k + 1, 4 * k}:
            add("p4k1", D, f"p = 4k + 1 with k = {k} and q - p in the listed set")
    if p % 4 == 3 and (p + 1) // 4 >= 3:
        k = (p + 1) // 4
        if l in {1, 2, 4, 8, k, 2 * k - 1, 2 * k, 4 * k - 2}:
            add("p4k3", D, f"p = 4k - 1 with k = {k} and q - p in the listed set")
    return out


def s_regime(t: Triple) -> str:
    if t.p % 2 == 0:
        return "even"
    dec = decompose(t)
    if dec.s < 1:
        return "s<1"
    if dec.s == 1:
        return "s=1"
    if dec.s == 2:
        return "s=2"
    if _su_parameter(dec) is not None:
        return "s=2u/(u+1)"
    return "irregular"


@dataclass
class ClassificationReport:
    triple: Triple
    decomposition: Optional[Decomposition]
    D: int
    regime: str
    applicable: list[ClosedForm]

    @property
    def predicted_d(self) -> Optional[int]:
        return self.applicable[0].predicted if self.applicable else None

    @property
    def d_equals_D_guaranteed(self) -> bool:
        return any(cf.predicted == self.D for cf in self.applicable)

    def as_dict(self) -> dict:
        dec = self.decomposition
        return {
            "p": self.triple.p, "q": self.triple.q, "r": self.triple.r,
            "decomposition": None if dec is None else {
                "n_p": dec.n_p, "l": dec.l, "t": dec.t, "alpha": dec.alpha,
                "s_num": dec.s.numerator, "s_den": dec.s.denominator,
            },
            "D": self.D,
            "regime": self.regime,
            "applicable": [{"name": c.name, "predicted_d": c.predicted,
                            "description": c.description} for c in self.applicable],
            "predicted_d": self.predicted_d,
            "d_equals_D_guaranteed": self.d_equals_D_guaranteed,
        }


def classify(t: Triple) -> ClassificationReport:
    dec = decompose(t) if t.p % 2 else None
    return ClassificationReport(t, dec, D_invariant(t), s_regime(t), closed_forms(t))


def d(t: Triple, method: str = "auto", max_p: int = ORACLE_MAX_P) -> DResult:
    """Dispatch: even closed form, then an odd closed form, then refined search."""
    _require_almost_simple(t)
    if method not in ("auto", "full", "refined", "closed-form"):
        raise InvalidInput(f"unknown method {method!r}")
    if t.p % 2 == 0:
        return d_even(t)
    if method == "full":
        return d_full(t, max_p)
    if method == "refined":
        return d_refined(t)
    forms = closed_forms(t)
    if forms:
        cf = forms[0]
        dec = decompose(t)
        seed = (1, dec.t + 1)
        witness = seed if F4(t, *seed) == 4 * cf.predicted else None
        return DResult(cf.predicted, witness, FAMILY + cf.name)
    if method == "closed-form":
        raise DomainError(f"no closed form applies to {t}")
    return d_refined(t)
