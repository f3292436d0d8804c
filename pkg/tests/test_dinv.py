from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from brieskorn import dinv
from brieskorn.arith import divisors
from brieskorn.dinv import (D_invariant, DResult, F4, F_eval, F_factored, chi, classify, closed_forms,
                            d, d_even, d_full, d_refined, d_semigroup_minus, d_semigroup_plus,
                            even_identities, f_eval, lattice_R_member, prop48_conditions, s_regime,
                            semigroup, set_M)
from brieskorn.errors import (BudgetExceeded, DomainError, EvenP, IntegrityError, InvalidInput,
                              NotAlmostSimple, OddP)
from brieskorn.triples import Triple, decompose, enumerate_triples, make_triple, seifert_triple

from oracle import F_ref, d_ref

FIB = make_triple(89, 144)


@st.composite
def triples(draw, p_max=400, odd=None):
    p = draw(st.integers(2, p_max))
    if odd is True and p % 2 == 0:
        p += 1
    if odd is False and p % 2:
        p += 1
    ls = [l for l in divisors(p * p - 1) if l <= p - 1]
    return make_triple(p, p + draw(st.sampled_from(ls)))


# -- the form --------------------------------------------------------------

def test_f_eval_examples():
    t = make_triple(2, 3)
    assert f_eval(t, 1, 1) == -4
    assert f_eval(t, 0, 0) == 0
    assert (f_eval(FIB, 3, 4) + 377) / 4 == 90


def test_F_eval_examples():
    assert F_eval(make_triple(5, 8), 1, 1) == 4
    assert F_eval(FIB, 3, 4) == 90
    assert F_eval(make_triple(3, 4), 1, 2) == 2


@given(triples(), st.integers(-50, 50), st.integers(-50, 50))
def test_form_identities(t, a, m):
    assert F_eval(t, 1, 1) == t.p - 1
    assert F_eval(t, a, m) == F_ref(*t, a, m)
    assert F_factored(t, a, m) == F_eval(t, a, m)
    assert F4(t, a, m) == 4 * F_eval(t, a, m)


def test_lattice_R_member():
    assert lattice_R_member(make_triple(3, 4), 1, 1)
    assert lattice_R_member(FIB, 3, 4)
    assert not lattice_R_member(make_triple(3, 4), -1, 1)
    with pytest.raises(DomainError):
        lattice_R_member(FIB, 2, 4)
    with pytest.raises(DomainError):
        lattice_R_member(FIB, 3, 45)
    with pytest.raises(EvenP):
        lattice_R_member(make_triple(2, 3), 1, 1)


# -- oracle and refined search ---------------------------------------------

def test_d_full_examples():
    assert d_full(make_triple(3, 4)).value == 2
    assert d_full(make_triple(5, 8)).value == 4
    r = d_full(FIB)
    assert (r.value, r.witness, r.method) == (90, (3, 4), "full-oracle")


def test_d_full_matches_reference_oracle():
    # the reference sweeps negative a and m = 0 as well
    for t in enumerate_triples(45):
        if t.p % 2:
            assert d_full(t).value == d_ref(*t), t


def test_d_full_budget():
    with pytest.raises(BudgetExceeded):
        d_full(FIB, max_p=50)
    with pytest.raises(EvenP):
        d_full(make_triple(4, 5))
    with pytest.raises(InvalidInput):
        dinv.lattice_max(FIB, region="nowhere")


def test_grid_object_dtype_for_huge_entries():
    p = 10 ** 10 + 1
    t = make_triple(p, p + 1)
    g = dinv._grid4(t, np.array([1, 3]), np.array([1, 2]))
    assert g.dtype == object
    assert g[1, 1] == F4(t, 3, 2)


def test_set_M_examples():
    assert set_M(make_triple(3, 4)) == [(1, 2)]
    assert set_M(make_triple(5, 8)) == [(1, 1)]
    assert (3, 4) in set_M(FIB)


def test_set_M_members_in_R():
    for t in enumerate_triples(151):
        if t.p % 2:
            seed, *rest = set_M(t)
            # the seed (1, t+1) can sit one step past n_p when q - p = 1
            assert F_eval(t, *seed) >= t.p - 1
            for a, m in rest:
                assert a >= 3 and a < m and lattice_R_member(t, a, m)


def test_d_refined_examples():
    r = d_refined(FIB)
    assert (r.value, r.witness, r.method) == (90, (3, 4), "refined")
    assert d_refined(make_triple(49, 79)).value == 48
    assert d_refined(make_triple(13, 21)).value == 12


def test_refined_equals_full_and_max_over_M():
    for t in enumerate_triples(201):
        if t.p % 2 == 0:
            continue
        full, ref = d_full(t), d_refined(t)
        assert full.value == ref.value, t
        assert F_eval(t, *ref.witness) == ref.value
        assert F_eval(t, *full.witness) == full.value
        assert max(F_eval(t, a, m) for a, m in set_M(t)) == ref.value


@settings(max_examples=40, deadline=None)
@given(triples(p_max=1999, odd=True))
def test_refined_equals_full_property(t):
    assert d_refined(t).value == d_full(t).value


def test_dresult_validation():
    with pytest.raises(IntegrityError):
        DResult(3, None, "x")
    with pytest.raises(IntegrityError):
        DResult(-2, None, "x")


# -- even p and D ------------------------------------------------------------

def test_d_even_examples():
    assert d_even(make_triple(2, 3)).value == 2
    assert d_even(make_triple(4, 5)).value == 6
    assert even_identities(make_triple(2, 3))[1] == 2
    with pytest.raises(OddP):
        d_even(make_triple(3, 4))


def test_even_identities_agree():
    for t in enumerate_triples(500):
        if t.p % 2 == 0:
            forms = even_identities(t)
            assert len(set(forms)) == 1 and forms[0].denominator == 1


def test_D_invariant():
    assert D_invariant(FIB) == 88
    assert D_invariant(make_triple(2, 3)) == 2
    for p in range(3, 200, 2):
        assert D_invariant(make_triple(p, 2 * p - 1)) == p - 1


def test_D_is_lower_bound():
    for t in enumerate_triples(250):
        v = d(t, "refined").value
        assert v >= D_invariant(t) and v % 2 == 0 and D_invariant(t) % 2 == 0


def test_chi():
    assert chi(1, 0) == Fraction(5, 4)
    for l in range(2, 60):
        for a in range(1, l):
            assert chi(l, a) == chi(l, l - a)
            assert chi(l, 1) >= chi(l, a)
    with pytest.raises(InvalidInput):
        chi(3, 3)


# -- semigroups -----------------------------------------------------------------

def test_semigroup_examples():
    for n in range(1, 11):
        assert d_semigroup_minus(2, 3, n) == 2
    assert d_semigroup_minus(3, 4, 1) == 2 == d_full(make_triple(3, 4)).value
    assert d_semigroup_plus(2, 3, 1) == d_semigroup_plus(3, 5, 2) == d_semigroup_plus(2, 5, 1) == 0
    assert semigroup(3, 4).gaps() == [1, 2, 5]
    with pytest.raises(InvalidInput):
        d_semigroup_minus(2, 3, 0)


@given(st.integers(2, 12), st.integers(3, 25))
def test_semigroup_membership(p, q):
    if q <= p or np.gcd(p, q) != 1:
        return
    sg = semigroup(p, q)
    brute = {a * p + b * q for a in range(q + 1) for b in range(p + 1)}
    for s in range(0, 2 * sg.g + 5):
        assert (s in sg) == (s in brute)
    # symmetry of the semigroup: exactly one of s and 2g - 1 - s is a member
    for s in range(0, 2 * sg.g):
        assert (s in sg) != ((2 * sg.g - 1 - s) in sg)


def test_semigroup_formula_matches_search_when_almost_simple():
    # (p, p+1, p(p+1) - 1) is almost simple
    for p in range(3, 40, 2):
        t = Triple(p, p + 1, p * (p + 1) - 1)
        assert t.is_almost_simple
        assert d_semigroup_minus(p, p + 1, 1) == d_full(t).value


# -- diagnostics, classification, dispatch ----------------------------------

def test_prop48_examples():
    diag = prop48_conditions(make_triple(3, 4), 1, 1)
    assert diag.is_one_one and diag.predicted
    diag = prop48_conditions(FIB, 3, 4)
    assert diag.m_at_least_2 and diag.delta_nonnegative and diag.nearest_odd and diag.in_R
    s = 144 + 233
    assert diag.data.Delta == 4 * (8 - s) ** 2 - 16 * s * 88
    assert diag.data.c == Fraction(2 * 144 * 4, s)
    assert not prop48_conditions(make_triple(3, 4), 3, 1).m_at_least_2
    assert not prop48_conditions(make_triple(7, 8), 3, 1).m_at_least_2


def test_classify_examples():
    rep = classify(make_triple(3, 4))
    names = {c.name for c in rep.applicable}
    assert {"thm-1-19", "alpha0", "ks20-5"} <= names
    assert rep.predicted_d == 2
    rep = classify(FIB)
    assert rep.applicable == [] and rep.regime == "irregular" and rep.D == 88
    rep = classify(make_triple(2, 3))
    assert rep.regime == "even" and rep.decomposition is None and rep.D == 2
    assert rep.as_dict()["D"] == 2


def test_s_regimes():
    assert s_regime(make_triple(7, 13)) == "s=2"
    assert s_regime(make_triple(3, 4)) == "s=1"
    assert s_regime(make_triple(5, 8)) == "s=2u/(u+1)"
    assert s_regime(make_triple(7, 8)) == "s<1"


def test_dispatch_examples():
    r = d(make_triple(2, 3))
    assert (r.value, r.method) == (2, "even-closed-form")
    r = d(make_triple(5, 8))
    assert (r.value, r.method) == (4, "family-closed-form:thm-1-19")
    r = d(FIB)
    assert (r.value, r.method) == (90, "refined")
    with pytest.raises(DomainError):
        d(FIB, "closed-form")
    with pytest.raises(InvalidInput):
        d(FIB, "guess")
    with pytest.raises(NotAlmostSimple):
        d(seifert_triple(2, 3, 7))


def test_closed_forms_agree_with_search():
    for t in enumerate_triples(301):
        if t.p % 2 == 0:
            continue
        truth = d_refined(t).value
        for cf in closed_forms(t):
            assert cf.predicted == truth, (t, cf.name)


def test_closed_form_witness_realizes_value():
    for t in enumerate_triples(151):
        r = d(t)
        if r.witness is not None:
            assert F_eval(t, *r.witness) == r.value
