"""Series ring, Pochhammer products, hypergeometric sums, theta jets."""

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from qfock.qseries import (
    DegenerateParameter,
    HalfInt,
    IllegalPower,
    NotInvertible,
    Param,
    Series,
    beta_scalar,
    c_term,
    first_difference,
    pochhammer_inf,
    pochhammer_n,
    power,
    qhyper,
    series_equal,
    series_from_json,
    series_to_json,
    theta,
    theta_jet,
)

F = Fraction


def q(exp, N, c=1):
    return Series.monomial(c, F(exp), N)


def test_halfint_basics():
    assert HalfInt(F(3, 2)).twice == 3
    assert HalfInt(2) + HalfInt(F(1, 2)) == F(5, 2)
    assert HalfInt(F(1, 2)) * 4 == 2
    assert str(HalfInt(F(-1, 2))) == "-1/2"
    assert HalfInt(1).is_integer() and not HalfInt(F(1, 2)).is_integer()


def test_add_mul_polynomials():
    N = 5
    one = Series.one(N)
    a = one + q(1, N)      # 1 + q
    b = one - q(1, N)      # 1 - q
    assert series_equal(a * b, one - q(2, N))
    assert (a - a).is_zero()
    h = one + q(F(1, 2), N)
    assert series_equal(h * h, one + q(F(1, 2), N, 2) + q(1, N))


def test_invert_geometric():
    N = 6
    s = (Series.one(N) - q(1, N)).invert()
    expect = Series.one(N)
    for k in range(1, 7):
        expect = expect + q(k, N)
    assert series_equal(s, expect)


def test_invert_monomial_and_roundtrip():
    N = 4
    m = q(F(1, 2), N)
    assert series_equal(m.invert(), Series.monomial(1, F(-1, 2), m.invert().truncation))
    a = Series.const(2, N) - q(1, N, 2)
    assert series_equal(a * a.invert(), Series.one(N))
    with pytest.raises(NotInvertible):
        Series.zero(N).invert()
    with pytest.raises(NotInvertible):
        (Series.one(N) + Series.monomial(1, 0, N, {1: 1})).invert()


def test_coeff_z():
    N = 3
    s = Series.monomial(1, 0, N, {1: 1}) + Series.monomial(3, 1, N, {1: 2})
    assert series_equal(s.coeff_z(1, 2), q(1, N, 3))
    assert series_equal(s.coeff_z(1, 0), Series.zero(N))
    plain = Series.one(N) + q(1, N)
    assert series_equal(plain.coeff_z(1, 0), plain)
    assert plain.coeff_z(1, 1).is_zero()


def test_param_power():
    t = Param(F(2, 3))
    assert power(t, F(1, 2), 4).constant() == F(2, 3)
    t = Param(F(2, 3), 1)
    s = power(t, F(3, 2), 4)
    assert s.terms == {(3, ()): F(8, 27)}
    x = Param(1, F(1, 2), e=-1)
    s = power(x, 2, 4)
    assert s.terms == {(2, ((1, -4),)): F(1)}
    with pytest.raises(IllegalPower):
        power(Param(1, F(1, 2)), F(1, 2), 4)


def test_c_term():
    t = Param(F(2, 3))
    assert c_term(t, 4).constant() == F(6, 5)
    assert beta_scalar(t) == F(6, 5)
    # t = q: q^(1/2)(1 + q + q^2 + ...)
    s = c_term(Param(1, 1), F(7, 2))
    assert s.terms == {(1, ()): F(1), (3, ()): F(1), (5, ()): F(1), (7, ()): F(1)}
    s = c_term(Param(F(2, 3), 1), F(3, 2))
    assert s.terms == {(1, ()): F(2, 3), (3, ()): F(8, 27)}
    with pytest.raises(DegenerateParameter):
        c_term(Param(1), 4)


def test_pochhammer_n():
    N = 6
    assert series_equal(pochhammer_n(Param(F(2, 3)), 0, N), Series.one(N))
    qq = pochhammer_n(Param(1, 1), 2, N)
    assert series_equal(qq, Series.one(N) - q(1, N) - q(2, N) + q(3, N))
    s = pochhammer_n(Param(F(2, 3), 1), 1, N)
    assert series_equal(s, Series.one(N) - q(1, N, F(4, 9)))


def test_pochhammer_inf_euler():
    # pentagonal-number expansion of (q)_inf
    s = pochhammer_inf(Param(1, 1), 12)
    expect = {0: 1, 1: -1, 2: -1, 5: 1, 7: 1, 12: -1}
    for k in range(13):
        assert s.qcoeff_scalar(k) == expect.get(k, 0)


def test_pochhammer_inf_scalar_leading_factor():
    # d = 0 argument: scalar factor (1 - s^2) at i = 0, then truncatable
    a = Param(F(3, 5))  # value 9/25
    s = pochhammer_inf(a, 3)
    byhand = Series.one(3)
    for i in range(4):
        byhand = byhand * (Series.one(3) - q(i, 3, F(9, 25)))
    assert series_equal(s, byhand)


def test_qhyper_phi21_00():
    # 2Phi1(0,0;q;q) = sum q^n/((q)_n)^2 = 1 + q + 3q^2 + ...
    zero = Param(0)
    s = qhyper([zero, zero], [Param(1, 1)], Param(1, 1), 8)
    byhand = Series.zero(8)
    for n in range(9):
        term = Series.monomial(1, n, 8)
        pn = pochhammer_n(Param(1, 1), n, 8)
        term = term * (pn * pn).invert()
        byhand = byhand + term.truncate(8)
    assert series_equal(s, byhand)
    assert s.qcoeff_scalar(0) == 1
    assert s.qcoeff_scalar(1) == 1
    assert s.qcoeff_scalar(2) == 3


def test_qhyper_n0_layer():
    t = Param(F(2, 3))
    s = qhyper([Param(0), Param(0), Param(1, 1)],
               [t.qshift(1), Param(1, 1)], Param(1, 1), 0)
    assert s.constant() == 1


def test_exponential_identity_left():
    # sum_m (-z)^m q^(m(m-1)/2)/(q)_m = (z)_inf
    for zp in (Param(1, 1), Param(F(2, 3), 1)):
        N = 20
        lhs = Series.zero(N)
        m = 0
        while m * zp.qval2() // 2 + m * (m - 1) <= 2 * N:
            c, q2, zk = zp.pow_monomial(m)
            term = Series(2 * N, {(q2 + m * (m - 1), zk): c * (-1) ** m})
            term = term * pochhammer_n(Param(1, 1), m, N).invert()
            lhs = lhs + term.truncate(N)
            m += 1
        assert series_equal(lhs, pochhammer_inf(zp, N))


def test_exponential_identity_right():
    # sum_l (a)_l z^l/(q)_l = (az)_inf/(z)_inf
    N = 20
    a = Param(F(2, 3))
    zp = Param(1, 1)
    lhs = Series.zero(N)
    for l in range(2 * N + 1):
        c, q2, zk = zp.pow_monomial(l)
        if q2 > 2 * N:
            break
        term = Series(2 * N, {(q2, zk): c})
        term = term * pochhammer_n(a, l, N)
        term = term * pochhammer_n(Param(1, 1), l, N).invert()
        lhs = lhs + term.truncate(N)
    rhs = pochhammer_inf(a * zp, N) * pochhammer_inf(zp, N).invert()
    assert series_equal(lhs, rhs)


def test_theta_constant_layer():
    t = Param(F(2, 3))
    s = theta(t, 5)
    assert s.qcoeff_scalar(0) == F(2, 3) - F(3, 2)
    assert theta(Param(1), 10).is_zero()


def test_theta_jet_triple_product():
    # Theta'(1) * (q)_inf^3 = sum (-1)^m (2m+1) q^(m(m+1)/2)
    N = 20
    jet = theta_jet(Param(1), 1, N)
    qinf = pochhammer_inf(Param(1, 1), N)
    lhs = jet.coeffs[1] * qinf * qinf * qinf
    rhs = Series.zero(N)
    m = 0
    while m * (m + 1) // 2 <= N:
        rhs = rhs + Series.monomial((-1) ** m * (2 * m + 1), m * (m + 1) // 2, N)
        m += 1
    assert series_equal(lhs, rhs)


def test_theta_jet_chain_rule():
    # lower-order jet coefficients are stable as the jet order grows
    t = Param(F(2, 3))
    j2 = theta_jet(t, 2, 8)
    j3 = theta_jet(t, 3, 8)
    for k in range(3):
        assert series_equal(j2.coeffs[k], j3.coeffs[k])


def test_serialization_roundtrip():
    s = (Series.one(5) - q(1, 5, F(2, 3))).invert() + Series.monomial(
        F(-7, 3), F(3, 2), 4, {1: -2, 2: F(1, 2)})
    obj = series_to_json(s)
    back = series_from_json(obj)
    assert back.trunc2 == s.trunc2 and back.terms == s.terms


# -- property tests ---------------------------------------------------------

coeffs = st.fractions(max_denominator=9)
keys = st.tuples(st.integers(min_value=-4, max_value=8),
                 st.sampled_from([(), ((1, 2),), ((1, -1),), ((2, 1),)]))
series_strategy = st.dictionaries(keys, coeffs, max_size=5).map(
    lambda d: Series(8, d))


@settings(max_examples=60, deadline=None)
@given(series_strategy, series_strategy, series_strategy)
def test_ring_axioms(a, b, c):
    assert series_equal((a + b) * c, a * c + b * c)
    assert series_equal(a * b, b * a)
    assert series_equal((a * b) * c, a * (b * c))


@settings(max_examples=40, deadline=None)
@given(series_strategy, series_strategy)
def test_truncation_coherence(a, b):
    full = a * b
    assert series_equal(full.truncate(3), a.truncate(3) * b.truncate(3))
    assert series_equal((a + b).truncate(3), a.truncate(3) + b.truncate(3))


@settings(max_examples=40, deadline=None)
@given(series_strategy)
def test_invert_round_trip(a):
    mins = [k for k in a.terms if k[0] == a.min2()]
    if len(mins) != 1:
        return
    assert series_equal(a * a.invert(), Series.one(HalfInt(twice=a.trunc2)))


def test_first_difference_reports_lowest():
    a = Series.one(5) + q(2, 5)
    b = Series.one(5) + q(2, 5, 2) + q(3, 5)
    d = first_difference(a, b)
    assert d[0] == 4 and d[2] == 1 and d[3] == 2
