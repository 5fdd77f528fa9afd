from __future__ import annotations

import itertools

import pytest
from hypothesis import given, settings, strategies as st

from fwscodes import poly, tower_for
from fwscodes.constructions import (
    Family1Spec,
    Family2Spec,
    RationalRep,
    beta_from_rep,
    family1,
    family2,
    family2_mu_case,
    fws_condition_family1,
    fws_condition_family2,
    poly_basis,
    polynomial_basis_dual,
    predict_family1_mu_dim,
    predicted_weights_family1,
    rational_representation,
    shift_trichotomy,
    zero_weight_predictions,
)
from fwscodes.orbit_code import is_fws_distribution, orbit, weight_distribution
from fwscodes.subspace import (
    dual,
    intersect,
    shift,
    shift_intersection_dim,
    span_of,
    subfield_subspace,
    sum_subspaces,
)


def test_family1_basic():
    T = tower_for(2, 1, 6)
    S = family1(Family1Spec(T, 2, 3))
    assert S == span_of(T, [1, 2, 4])
    assert family1(Family1Spec(T, 2, 3, b=5)) == shift(5, S)
    with pytest.raises(ValueError):
        family1(Family1Spec(T, 1, 2))
    with pytest.raises(ValueError):
        family1(Family1Spec(T, 2, 0))
    # lam in F_4: <1, lam, lam^2> collapses
    g = T.subfield(2).gamma
    with pytest.raises(ValueError):
        family1(Family1Spec(T, g, 3))


def test_family2_basic():
    T = tower_for(2, 1, 6)
    S = family2(Family2Spec(T, 2, 1))
    g = T.subfield(2).gamma
    assert S == span_of(T, [1, g, 2])
    assert family2(Family2Spec(T, 2, 1, b=9)) == shift(9, S)
    with pytest.raises(ValueError):
        family2(Family2Spec(tower_for(2, 1, 5), 2, 1))
    with pytest.raises(ValueError):
        family2(Family2Spec(T, g, 1))
    with pytest.raises(ValueError):
        family2(Family2Spec(T, 2, 3))
    with pytest.raises(ValueError):
        family2(Family2Spec(T, 2, 1, b=0))


def test_closed_form_spot_values():
    assert predicted_weights_family1(2, 4, 4, 2).omega == (6, 8)
    assert predicted_weights_family1(2, 5, 5, 3).omega == (6, 24, 0)
    assert predicted_weights_family1(2, 6, 6, 3).omega == (6, 24, 32)
    assert predicted_weights_family1(2, 6, 3, 2).omega == (6, 56)
    with pytest.raises(ValueError):
        predicted_weights_family1(2, 6, 4, 2)
    with pytest.raises(ValueError):
        predicted_weights_family1(2, 6, 6, 6)


@pytest.mark.parametrize("q,n", [(2, 4), (2, 6), (3, 4), (4, 4), (2, 12), (5, 6)])
def test_closed_form_sums_to_orbit_size(q, n):
    from fwscodes.ntheory import divisors

    for t in divisors(n):
        for k in range(2, t):
            wd = predicted_weights_family1(q, n, t, k)
            assert wd.total() == wd.orbit_size - 1
            assert is_fws_distribution(wd) == fws_condition_family1(q, n, t, k)


def test_fws_conditions():
    assert fws_condition_family2(2, 8, 4, 1)
    assert not fws_condition_family2(2, 8, 2, 1)
    assert fws_condition_family1(2, 6, 3, 2)
    assert not fws_condition_family1(2, 6, 6, 4)


@pytest.mark.parametrize("key", [(2, 1, 8), (3, 1, 6), (2, 2, 6)])
def test_family2_is_fws_with_omega2_equal_q(key):
    T = tower_for(*key)
    seen = 0
    for lam in T.nonzero():
        if T.in_subfield(lam, 2):
            continue
        t2 = T.degree_over(lam, 2)
        for l in range(1, t2):
            if not fws_condition_family2(T.q, T.n, t2, l) or seen > 6:
                continue
            wd = weight_distribution(orbit(family2(Family2Spec(T, lam, l))))
            assert is_fws_distribution(wd)
            assert wd.omega[0] == T.q
            seen += 1
    assert seen


def test_family2_beyond_the_bound_is_not_fws():
    T = tower_for(2, 1, 8)
    lam = next(a for a in T.nonzero() if T.degree_over(a, 2) == 2)
    wd = weight_distribution(orbit(family2(Family2Spec(T, lam, 1))))
    assert wd.omega == (14, 0, 240)


def test_family2_cannot_be_extended_by_a_line():
    # S = F_16 + lam F_4 + b F_2 in F_{2^12}: the F_4-part is an FWS family-2 code but omega_4(S) = 0
    T = tower_for(2, 1, 12)
    lam = next(a for a in T.nonzero() if T.degree_over(a, 4) == 3)
    F4 = subfield_subspace(T, 2)
    Sbar = sum_subspaces(subfield_subspace(T, 4), shift(lam, F4))
    b = next(b for b in T.nonzero() if not intersect(Sbar, shift(b, F4)).k)
    S = sum_subspaces(Sbar, span_of(T, [b]))
    assert S.k == 7
    wd = weight_distribution(orbit(S))
    assert wd.omega[0] > 0 and wd.omega[1] == 0
    # the same Sbar read over F_4
    T4 = tower_for(2, 2, 6)
    lam4 = next(a for a in T4.nonzero() if T4.degree_over(a, 2) == 3)
    assert is_fws_distribution(weight_distribution(orbit(family2(Family2Spec(T4, lam4, 1)))))


@pytest.mark.parametrize("key", [(2, 1, 4), (2, 1, 5), (3, 1, 4), (2, 1, 6)])
def test_polynomial_basis_dual(key):
    T = tower_for(*key)
    lam = next(a for a in T.nonzero() if T.degree_over(a) == T.n)
    for l in range(1, T.n):
        W = span_of(T, poly_basis(T, lam, l))
        assert dual(W) == polynomial_basis_dual(T, lam, l)
    with pytest.raises(ValueError):
        polynomial_basis_dual(T, 1, 1)


def _check_rep(T, rep, mu, lam, base_t):
    p, qq = list(rep.p_coeffs), list(rep.q_coeffs)
    assert all(T.in_subfield(c, base_t) for c in p + qq)
    assert T.mul(mu, poly.evaluate(T, qq, lam)) == poly.evaluate(T, p, lam)
    assert rep.max_deg == max(poly.deg(p), poly.deg(qq))
    lead = p if poly.deg(p) >= poly.deg(qq) else qq
    assert lead[-1] == 1


def test_rational_representation_is_minimal():
    T = tower_for(2, 1, 6)
    lam = 2
    for mu in T.nonzero():
        rep = rational_representation(T, mu, lam, 3)
        # oracle: least d with some nonzero pair over F_2 of degree <= d
        best = None
        for d in range(3):
            for cs in itertools.product(range(2), repeat=2 * (d + 1)):
                p, qq = list(cs[: d + 1]), list(cs[d + 1:])
                if not any(qq):
                    continue
                if T.mul(mu, poly.evaluate(T, qq, lam)) == poly.evaluate(T, p, lam):
                    best = d
                    break
            if best is not None:
                break
        if best is None:
            assert rep is None
        else:
            assert rep is not None and rep.max_deg == best
            _check_rep(T, rep, mu, lam, 1)


def test_rational_representation_over_quadratic_subfield():
    T = tower_for(2, 1, 8)
    lam = next(a for a in T.nonzero() if T.degree_over(a, 2) == 4)
    hits = 0
    for mu in T.nonzero():
        rep = rational_representation(T, mu, lam, 2, base_t=2)
        if rep is not None:
            _check_rep(T, rep, mu, lam, 2)
            hits += 1
    assert hits
    with pytest.raises(ValueError):
        rational_representation(T, 0, lam, 2)


def test_beta_from_rep():
    assert beta_from_rep(RationalRep((1, 1), (3, 1), 1)) == 1
    assert beta_from_rep(RationalRep((1, 1), (3,), 1)) == 0


def test_family1_mu_prediction_small():
    T = tower_for(2, 1, 6)
    for lam in (2, 3, 7):
        t = T.degree_over(lam)
        for k in range(2, t):
            S = family1(Family1Spec(T, lam, k))
            for mu in T.nonzero():
                assert predict_family1_mu_dim(T, lam, k, mu) == shift_intersection_dim(S, mu)


def test_family2_mu_cases_cover_every_label():
    T = tower_for(2, 1, 8)
    lam = next(a for a in T.nonzero() if T.degree_over(a, 2) == 4)
    spec = Family2Spec(T, lam, 1)
    S = family2(spec)
    labels = set()
    for mu in T.nonzero():
        case = family2_mu_case(spec, mu)
        labels.add(case.case)
        assert case.predicted_dim == shift_intersection_dim(S, mu)
    assert {"fixed", "i", "boundary"} <= labels
    with pytest.raises(ValueError):
        family2_mu_case(Family2Spec(T, next(a for a in T.nonzero() if T.degree_over(a, 2) == 2), 1), 3)


def test_shift_trichotomy_always_classifies():
    T = tower_for(2, 1, 8)
    lam = next(a for a in T.nonzero() if T.degree_over(a, 2) == 4)
    g = T.subfield(2).gamma
    Sbar = span_of(T, [1, g])
    b = lam
    seen = set()
    for mu in T.nonzero():
        tri = shift_trichotomy(Sbar, b, mu)
        seen.add(tri.case)
        assert tri.dim_sbar <= tri.dim_s <= tri.dim_y
    assert seen >= {"I", "II"}
    with pytest.raises(ValueError):
        shift_trichotomy(span_of(T, [1]), b, 3)
    with pytest.raises(ValueError):
        shift_trichotomy(Sbar, g, 3)


def test_zero_weight_predictions():
    assert zero_weight_predictions(3, 1, 1, 3) == {2}
    assert 2 in zero_weight_predictions(3, 2, 1, 3)
    assert zero_weight_predictions(4, 3, 1, 4) >= {6}
    assert zero_weight_predictions(2, 1, 1, 4) >= {2}
    with pytest.raises(ValueError):
        zero_weight_predictions(3, 3, 1, 3)
    with pytest.raises(ValueError):
        zero_weight_predictions(3, 1, 1, 2)


@settings(max_examples=40, deadline=None)
@given(lam=st.integers(2, 255), mu=st.integers(1, 255), k=st.integers(2, 7))
def test_family1_prediction_property(lam, mu, k):
    T = tower_for(2, 1, 8)
    if T.in_subfield(lam, 1) or k >= T.degree_over(lam):
        return
    S = family1(Family1Spec(T, lam, k))
    assert predict_family1_mu_dim(T, lam, k, mu) == shift_intersection_dim(S, mu)
