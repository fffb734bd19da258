"""Closed-form evaluations of correlation traces and graded dimensions.

This module implements the explicit formulas that the enumeration oracles in
:mod:`qfock.fock` and :mod:`qfock.modesum` are checked against:

* the level ``-1`` one-point function and its generalized (charge-weighted)
  one- and two-point companions, built from basic hypergeometric series;
* the level ``+1`` charged-sector function expressed through theta-jet
  determinants (``f_bo``);
* the neutral half-level one-point function;
* graded-dimension formulas for all nine module families;
* the Weyl-group reduction of negative/fractional-level n-point functions to
  level ``+-1`` building blocks, in both the product ("literal") and the
  point-distribution ("assignment") reading;
* the residual of the first-point q-shift difference equations.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, permutations, product as iter_product
from typing import Callable, Dict, Optional, Sequence, Tuple

from . import combinat, fock, modesum
from .qseries import (
    CapExceeded,
    DegenerateParameter,
    HalfInt,
    IllegalPower,
    Param,
    QSeriesError,
    Series,
    beta_scalar,
    c_term,
    pochhammer_inf,
    pochhammer_n,
    power,
    qhyper,
    theta,
    theta_jet,
    to2,
)

F = Fraction

_ZERO = Param(F(0))


def _q(d=1) -> Param:
    """The parameter q^d."""
    return Param(F(1), d)


_QH = _q(F(1, 2))


def _one_minus(p: Param, N) -> Series:
    return Series.one(N) - power(p, 1, N)


def _scalar_key(p: Param):
    return (p.s, p.d2, p.e2, p.zvar, p.sign)


def _points_key(points: Sequence[Param]):
    return tuple(_scalar_key(p) for p in points)


def pair_vacuum(x: Param, y: Param, N) -> Series:
    """1/((x q^(1/2))_inf (y q^(1/2))_inf): the plain charged-pair trace."""
    return (pochhammer_inf(x * _QH, N) * pochhammer_inf(y * _QH, N)).invert()


# -- level -1 one-point function --------------------------------------------


def one_point_minus1(t: Param, N) -> Series:
    """Closed form of the charge-0, level -1 one-point function.

    central * beta(t) plus, for each of t and 1/t with opposite signs, a sum
    over i >= 1 of q^(i-1)/(q)_{i-1}^2 * (3Phi2(0,0,q; tq^i, q^i; q) - 1),
    weighted by t^(1/2).
    """
    if t.is_zero:
        raise DegenerateParameter("one-point function at the zero parameter")
    out = qhyper([_ZERO, _ZERO], [_q()], _q(), N) * c_term(t, N)
    n2 = to2(N)
    for tt, sgn in ((t, 1), (t.inverse(), -1)):
        acc = Series.zero(N)
        i = 1
        while i - 1 <= n2 // 2:
            poch = pochhammer_n(_q(), i - 1, N)
            pref = (poch * poch).invert().shift(i - 1)
            phi = qhyper([_ZERO, _ZERO, _q()], [tt * _q(i), _q(i)], _q(), N)
            acc = acc + pref * (phi - Series.one(N))
            i += 1
        out = out + (power(tt, F(1, 2), N) * acc).scale(sgn)
    return out


# -- generalized one-point function ------------------------------------------


def partition_ladder_sum(x: Param, t: Param, N) -> Series:
    """Sum over nonempty partitions la of x^len(la) q^(|la|-len/2)
    sum_i t^(la_i - 1/2), by direct enumeration."""
    n2 = to2(N)
    acc: Dict[Tuple[int, tuple], F] = {}
    for w in range(1, n2 + 1):
        for la in combinat.partitions_of(w):
            l = len(la)
            q2 = 2 * w - l
            xc, xq2, xzk = x.pow_monomial(l)
            q2 += xq2
            if q2 > n2 or not xc:
                continue
            s = F(0)
            for part in la:
                s += t.scalar_pow(F(2 * part - 1, 2))
            c = xc * s
            if c:
                key = (q2, xzk)
                acc[key] = acc.get(key, F(0)) + c
    return Series(n2, acc)


def partition_ladder_closed(x: Param, t: Param, N) -> Series:
    """The same partition sum in closed form:
    x (tq)^(1/2) (xtq^(3/2))_inf / ((1-xq^(1/2)) (tq)_inf (xq^(1/2))_inf)
    * 2Phi2(xq^(1/2), xq^(1/2); xq^(3/2), xtq^(3/2); tq^2)."""
    q32 = _q(F(3, 2))
    num = power(x, 1, N) * power(t * _q(), F(1, 2), N) \
        * pochhammer_inf(x * t * q32, N)
    den = _one_minus(x * _QH, N) * pochhammer_inf(t * _q(), N) \
        * pochhammer_inf(x * _QH, N)
    phi = qhyper([x * _QH, x * _QH], [x * q32, x * t * q32], t * _q(2), N)
    return num * den.invert() * phi


def omega(x: Param, y: Param, t: Param, N) -> Series:
    """The closed ladder sum divided by the extra (y q^(1/2))_inf factor."""
    return partition_ladder_closed(x, t, N) * pochhammer_inf(y * _QH, N).invert()


def generalized_one_point(x: Param, y: Param, t: Param, N) -> Series:
    """Closed form of the charge-weighted level -1 one-point trace:
    beta(t)/((xq^(1/2))_inf (yq^(1/2))_inf) + omega(x,y,t) - omega(y,x,1/t)."""
    central = c_term(t, N) * pair_vacuum(x, y, N)
    return central + omega(x, y, t, N) - omega(y, x, t.inverse(), N)


# -- generalized two-point function ------------------------------------------


def gamma_bar(x: Param, t1: Param, t2: Param, N) -> Series:
    """The double-ladder closed sum:
    x^2 q t1 t2 (xq^(3/2)t1)_inf / ((1-xq^(1/2))^2 (xq^(1/2))_inf (qt1)_inf)
    * sum_s (xq^(1/2))_s^3 (-q^3 t1 t2)^s q^(s(s-1)/2)
            / ((xq^(3/2)t1)_s (q)_s (xq^(3/2))_s^2)
      * 3Phi2(1/t2, xq^(s+1/2), xq^(s+1/2);
              xq^(s+3/2), xq^(s+3/2)t1; q^2 t1 t2)."""
    n2 = to2(N)
    q32 = _q(F(3, 2))
    pref_scalar = x.scalar_pow(2) * t1.scalar_pow(1) * t2.scalar_pow(1)
    pref = Series.monomial(pref_scalar, 1, N) * pochhammer_inf(x * t1 * q32, N)
    den = _one_minus(x * _QH, N) ** 2 * pochhammer_inf(x * _QH, N) \
        * pochhammer_inf(t1 * _q(), N)
    t2i = t2.inverse()
    arg = t1 * t2 * _q(2)
    acc = Series.zero(N)
    s = 0
    while 6 * s + s * (s - 1) <= n2:
        up = pochhammer_n(x * _QH, s, N)
        low = pochhammer_n(x * t1 * q32, s, N) * pochhammer_n(_q(), s, N) \
            * pochhammer_n(x * q32, s, N) ** 2
        a = x * _q(s + F(1, 2))
        d = x * _q(s + F(3, 2))
        e = x * t1 * _q(s + F(3, 2))
        # structural type-II property: d*e/(a*b*c) equals the argument
        _assert_same_monomial(d * e, t2i * a * a * arg)
        phi = qhyper([t2i, a, a], [d, e], arg, N)
        coeff = ((-1) ** s) * (t1.scalar_pow(s) * t2.scalar_pow(s))
        term = (up ** 3 * low.invert() * phi).scale(coeff)
        term = term.shift(HalfInt(twice=6 * s + s * (s - 1)))
        acc = acc + term.truncate(N)
        s += 1
    return pref * den.invert() * acc


def _assert_same_monomial(p: Param, r: Param) -> None:
    if (p.s, p.d2, p.e2, p.sign) != (r.s, r.d2, r.e2, r.sign):
        raise QSeriesError("inner 3Phi2 is not balanced as expected")


def gamma_sym(x: Param, y: Param, t1: Param, t2: Param, N) -> Series:
    """(t1 t2)^(-1/2)/(yq^(1/2))_inf * (gamma_bar(x,t1,t2)+gamma_bar(x,t2,t1))."""
    pref = power(t1 * t2, F(-1, 2), N) * pochhammer_inf(y * _QH, N).invert()
    return pref * (gamma_bar(x, t1, t2, N) + gamma_bar(x, t2, t1, N))


def generalized_two_point(x: Param, y: Param, t1: Param, t2: Param, N) -> Series:
    """Closed form of the charge-weighted level -1 two-point trace
    (eight terms in gamma_sym and omega)."""
    prod = t1 * t2
    if prod.d2 == 0 and prod.e2 == 0 and prod.sign == 1 and prod.value_coeff == 1:
        raise DegenerateParameter("two-point closed form needs t1*t2 != 1")
    t1i, t2i = t1.inverse(), t2.inverse()
    px = pochhammer_inf(x * _QH, N)
    py = pochhammer_inf(y * _QH, N)
    out = gamma_sym(x, y, t1, t2, N) + gamma_sym(y, x, t1i, t2i, N)
    out = out + omega(x, y, t1 * t2, N) + omega(y, x, t1i * t2i, N)
    out = out + (omega(x, y, t2, N) - omega(y, x, t2i, N)) * c_term(t1, N)
    out = out + (omega(x, y, t1, N) - omega(y, x, t1i, N)) * c_term(t2, N)
    # cross products pair an x-side ladder at t_j with a y-side ladder at the
    # other inverted point: L(t1)M(t2) + L(t2)M(t1)
    cross = omega(x, y, t1, N) * omega(y, x, t2i, N) \
        + omega(x, y, t2, N) * omega(y, x, t1i, N)
    out = out - px * py * cross
    out = out + c_term(t1, N) * c_term(t2, N) * (px * py).invert()
    return out


# -- level +1 sector functions via theta-jet determinants --------------------


def f_bo(points: Sequence[Param], N, cap: int = 4) -> Series:
    """Permutation sum of theta-jet determinants over partial products:

    1/(q)_inf * sum_{sigma in S_n}
        det( Theta^(j-i+1)(P_(n-j)) / (j-i+1)! )_{i,j=1..n}
        / (Theta(P_1) ... Theta(P_n)),

    where P_m is the product of the first m sigma-ordered points (P_0 = 1)
    and entries with j - i + 1 < 0 vanish.
    """
    n = len(points)
    if n > cap:
        raise CapExceeded("f_bo limited to %d points" % cap)
    qinf_inv = pochhammer_inf(_q(), N).invert()
    if n == 0:
        return qinf_inv
    jet_cache: Dict[tuple, object] = {}
    theta_inv_cache: Dict[tuple, Series] = {}

    def jet_of(p: Param):
        key = _scalar_key(p)
        if key not in jet_cache:
            jet_cache[key] = theta_jet(p, n, N)
        return jet_cache[key]

    def theta_inv(p: Param) -> Series:
        key = _scalar_key(p)
        if key not in theta_inv_cache:
            if p.d2 == 0 and p.e2 == 0 and p.sign == 1 and p.value_coeff == 1:
                raise DegenerateParameter(
                    "theta vanishes at a partial product equal to 1")
            theta_inv_cache[key] = theta(p, N).invert()
        return theta_inv_cache[key]

    total = Series.zero(N)
    for sigma in permutations(range(n)):
        prefix = []
        p = Param(F(1))
        for idx in sigma:
            p = p * points[idx]
            prefix.append(p)
        # matrix entry (i, j), 1-based: (d/d log t)^(j-i+1) of theta at P_(n-j)
        det = Series.zero(N)
        for tau in permutations(range(n)):
            sign = combinat._perm_sign(tau)
            term = Series.one(N)
            ok = True
            for i0 in range(n):
                j0 = tau[i0]
                k = j0 - i0 + 1
                if k < 0:
                    ok = False
                    break
                arg = prefix[n - j0 - 2] if n - j0 - 2 >= 0 else Param(F(1))
                term = term * jet_of(arg).coeffs[k]
            if ok:
                det = det + term.scale(sign)
        den = Series.one(N)
        for p in prefix:
            den = den * theta_inv(p)
        total = total + det * den
    return qinf_inv * total


def level1_sector(k: int, points: Sequence[Param], N) -> Series:
    """q^(k^2/2) (t1...tn)^k * f_bo(points): the charge-k level +1 trace."""
    prod = Param(F(1))
    for p in points:
        prod = prod * p
    scalar = prod.scalar_pow(k)
    return f_bo(points, N).scale(scalar).shift(HalfInt(twice=k * k))


# -- neutral half-level one-point function -----------------------------------


def c_one_point_half(t: Param, N) -> Series:
    """Closed form of the neutral level -1/2 one-point function:
    beta(t)/(q^(1/2))_inf plus, for t and 1/t with signs -/+,
    1/((q^(1/2))_inf (1-q^(-1/2))) * t^(1/2)(tq^(3/2))_inf/(tq)_inf
    * 2Phi2(q^(1/2), q^(1/2); q^(3/2), tq^(3/2); q^2 t),
    using 1/(1-q^(-1/2)) = -q^(1/2)/(1-q^(1/2))."""
    if t.is_zero:
        raise DegenerateParameter("one-point function at the zero parameter")
    pre = pochhammer_inf(_QH, N).invert()
    out = pre * c_term(t, N)
    fac = _one_minus(_QH, N).invert().shift(F(1, 2)).scale(-1)
    q32 = _q(F(3, 2))
    for tt, sgn in ((t, -1), (t.inverse(), 1)):
        blk = power(tt, F(1, 2), N) * pochhammer_inf(tt * q32, N) \
            * pochhammer_inf(tt * _q(), N).invert() \
            * qhyper([_QH, _QH], [q32, tt * q32], tt * _q(2), N)
        out = out + (pre * fac * blk).scale(sgn)
    return out


# -- level -1 sector functions for the difference-operator algebras ----------


def _eps_signed_points(points: Sequence[Param]):
    for eps in iter_product((1, -1), repeat=len(points)):
        sgn = 1
        pts = []
        for p, e in zip(points, eps):
            pts.append(p if e == 1 else p.inverse())
            sgn *= e
        yield sgn, pts


def c_sector_minus1(m: int, points: Sequence[Param], N) -> Series:
    """Charge-|m| slice of the signed difference expansion: sum over
    eps in {+-1}^n of eps_1...eps_n times the charge-|m| trace at the
    eps-inverted points."""
    m = abs(m)
    out = Series.zero(N)
    for sgn, pts in _eps_signed_points(points):
        out = out + fock.a_sector_trace(m, pts, N).scale(sgn)
    return out


def d_sector_minus1(m: int, points: Sequence[Param], N) -> Series:
    """Difference of the signed slices at |m| and |m+2| (the level -1
    building block of the type-D reductions).  The slice generating
    function is even in the charge, so negative m extends by
    d(-1) = 0 and d(-k-2) = -d(k)."""
    return c_sector_minus1(abs(m), points, N) \
        - c_sector_minus1(abs(m + 2), points, N)


# -- graded dimensions -------------------------------------------------------


def _qinf_inv_sq(N) -> Series:
    g = pochhammer_inf(_q(), N).invert()
    return g * g


def _alt_theta_sum(exps2, N) -> Series:
    """sum_m (-1)^m q^(e_m/2) for a generator of doubled exponents."""
    n2 = to2(N)
    acc: Dict[Tuple[int, tuple], F] = {}
    for m, e2 in exps2:
        if e2 > n2:
            break
        key = (e2, ())
        acc[key] = acc.get(key, F(0)) + F((-1) ** m)
    return Series(n2, acc)


def charged_qdim_base(k: int, N) -> Series:
    """1/(q)_inf^2 * sum_{m>=0} (-1)^m q^(m(m+1)/2 + |k|(m+1/2))."""
    k = abs(k)

    def gen():
        m = 0
        while True:
            yield m, m * (m + 1) + k * (2 * m + 1)
            m += 1

    return _alt_theta_sum(gen(), N) * _qinf_inv_sq(N)


def d_qdim_base(k: int, N) -> Series:
    """1/(q)_inf^2 * sum_{m>=0} (-1)^m q^(m(m+1)/2)
    (q^(|k|(m+1/2)) - q^(|k+2|(m+1/2))), extended evenly in the charge."""
    a, b = abs(k), abs(k + 2)

    def gen(j):
        m = 0
        while True:
            yield m, m * (m + 1) + j * (2 * m + 1)
            m += 1

    return (_alt_theta_sum(gen(a), N) - _alt_theta_sum(gen(b), N)) \
        * _qinf_inv_sq(N)


def _norm2_doubled(ks) -> int:
    return sum(k * k for k in ks)


def _parse_level(level) -> F:
    if isinstance(level, str):
        return F(level)
    return F(level)


def _normalize_label(lam, l: int, allow_negative: bool):
    lam = tuple(int(v) for v in lam)
    if len(lam) > l:
        raise IllegalPower("label longer than the rank %d" % l)
    if not allow_negative and any(v < 0 for v in lam):
        raise IllegalPower("label entries must be nonnegative here")
    if allow_negative and len(lam) != l:
        raise IllegalPower("depth-%d labels must list all %d entries" % (l, l))
    lam = lam + (0,) * (l - len(lam))
    if any(lam[i] < lam[i + 1] for i in range(l - 1)):
        raise IllegalPower("label entries must be non-increasing")
    return lam


def _weyl_signed_product(wtype: str, l: int, rho, lam, block, N) -> Series:
    out = Series.zero(N)
    for elem, sgn in combinat.weyl_group(wtype, l):
        ks = combinat.k_vector(lam, elem, rho)
        out = out + block(ks).scale(sgn)
    return out


def qdim_closed(algebra: str, level, label, N, form: str = "weyl") -> Series:
    """Graded dimension of the module with the given algebra ('a', 'c', 'd'),
    level (integer or half-integer, as Fraction or string) and highest-weight
    label, from the displayed Weyl-sum formulas.

    For algebra 'c' at positive half-integer level, ``form`` selects the
    Weyl-sum ("weyl") or hook-style product ("product") expression.
    """
    lev = _parse_level(level)
    if algebra == "a":
        if lev >= 0 or lev.denominator != 1:
            raise IllegalPower("type-a levels here are -1, -2, ...")
        l = int(-lev)
        lam = _normalize_label(label, l, allow_negative=True)
        rho = combinat.rho_vector("A", l)

        def block(ks):
            out = Series.one(N)
            for k in ks:
                out = out * charged_qdim_base(k, N)
            return out

        return _weyl_signed_product("A", l, rho, lam, block, N)

    if algebra == "c":
        if lev.denominator == 2 and lev > 0:
            return _c_positive_half_qdim(int(lev + F(1, 2)), label, N, form)
        if lev.denominator == 1 and lev < 0:
            l = int(-lev)
            lam = _normalize_label(label, l, allow_negative=False)
            rho = combinat.rho_vector("A", l)

            def block(ks):
                out = Series.one(N)
                for k in ks:
                    out = out * charged_qdim_base(k, N)
                return out

            return _weyl_signed_product("D", l, rho, lam, block, N)
        if lev.denominator == 2 and lev < 0:
            l = int(-lev - F(1, 2))
            if l < 1:
                raise IllegalPower("type-c negative half levels start at -3/2")
            lam = _normalize_label(label, l, allow_negative=False)
            rho = combinat.rho_vector("B", l)

            def block(ks):
                out = Series.one(N)
                for k in ks:
                    out = out * charged_qdim_base(k, N)
                return out

            wsum = _weyl_signed_product("BC", l, rho, lam, block, N)
            return pochhammer_inf(_QH, N).invert() * wsum
        raise IllegalPower("unsupported type-c level %s" % lev)

    if algebra == "d":
        if lev.denominator == 1 and lev < 0:
            l = int(-lev)
            lam = _normalize_label(label, l, allow_negative=False)
            rho = combinat.rho_vector("C", l)
            wtype = "BC"
        elif lev.denominator == 2 and lev < 0 or lev == F(-1, 2):
            l = int(F(1, 2) - lev)
            lam = _normalize_label(label, l, allow_negative=False)
            rho = combinat.rho_vector("B", l)
            wtype = "BC"
        else:
            raise IllegalPower("unsupported type-d level %s" % lev)

        # The signed hyperoctahedral sum acts on the symmetric charge-slice
        # series; the sign flips themselves generate the slice differences
        # that define the rank-one type-d function (at l=1 the sum equals
        # d_qdim_base(k) exactly).
        def block(ks):
            out = Series.one(N)
            for k in ks:
                out = out * charged_qdim_base(k, N)
            return out

        wsum = _weyl_signed_product(wtype, l, rho, lam, block, N)
        if lev.denominator == 2:
            neg_qh = Param(F(1), F(1, 2), sign=-1)
            wsum = pochhammer_inf(neg_qh, N) * wsum
        return wsum

    raise IllegalPower("unknown algebra %r" % algebra)


def _c_positive_half_qdim(l: int, label, N, form: str) -> Series:
    lam = _normalize_label(label, l, allow_negative=False)
    pre = pochhammer_inf(_QH, N).invert() \
        * pochhammer_inf(_q(), N).invert() ** l
    if form == "weyl":
        rho = combinat.rho_vector("B", l)

        def block(ks):
            return Series.monomial(1, HalfInt(twice=_norm2_doubled(ks)), N)

        return pre * _weyl_signed_product("BC", l, rho, lam, block, N)
    if form == "product":
        out = Series.monomial(1, HalfInt(twice=_norm2_doubled(lam)), N)
        for i in range(l):
            out = out * (Series.one(N)
                         - Series.monomial(1, HalfInt(
                             twice=2 * (lam[i] + l - i - 1) + 1), N))
        for i in range(l):
            for j in range(i + 1, l):
                out = out * (Series.one(N) - Series.monomial(
                    1, lam[i] - lam[j] + j - i, N))
                out = out * (Series.one(N) - Series.monomial(
                    1, lam[i] + lam[j] + 2 * l - i - j - 1, N))
        return pre * out
    raise IllegalPower("unknown form %r" % form)


# -- duality reduction -------------------------------------------------------


@dataclass(frozen=True)
class DualityInstance:
    """One commuting-pair setup: a tensor product of Fock factors carrying a
    finite-dimensional group action, with the Weyl data used to reduce its
    labeled traces to level +-1 blocks."""

    name: str
    algebra: str            # 'a', 'c' or 'd'
    level: F                # total central charge of the factors
    l: int                  # rank of the finite-dimensional side
    factors: Tuple[str, ...]
    op_tag: str
    weyl: str               # 'A', 'BC' or 'D'
    rho_kind: str           # 'A', 'B' or 'C'
    character_kind: str     # 'gl', 'sp', 'osp_b' or 'o_even'

    def __post_init__(self):
        total = sum((fock.CENTRAL_CHARGE[k].value for k in self.factors), F(0))
        if total != self.level:
            raise QSeriesError("factor charges sum to %s, not %s"
                               % (total, self.level))

    @property
    def charged_factors(self) -> Tuple[int, ...]:
        return tuple(i for i, k in enumerate(self.factors)
                     if k in fock.CHARGED)

    @property
    def neutral_factor(self) -> Optional[int]:
        for i, k in enumerate(self.factors):
            if k not in fock.CHARGED:
                return i
        return None

    @property
    def rho(self):
        return combinat.rho_vector(self.rho_kind, self.l)

    @property
    def allow_negative_label(self) -> bool:
        return self.algebra == "a"


_FAMILIES = {
    ("a", "-l"): ("boson_pair", "A", "A", "A", "gl"),
    ("c", "l-1/2"): ("fermion_pair", "C", "BC", "B", "osp_b"),
    ("c", "-l"): ("boson_pair", "C", "D", "A", "o_even"),
    ("c", "-l-1/2"): ("boson_pair", "C", "BC", "B", "osp_b"),
    ("d", "-l"): ("boson_pair", "D", "BC", "C", "sp"),
    ("d", "-l+1/2"): ("boson_pair", "D", "BC", "B", "osp_b"),
}

_NEUTRAL_OF = {
    ("c", "l-1/2"): "boson_neutral",
    ("c", "-l-1/2"): "boson_neutral",
    ("d", "-l+1/2"): "fermion_neutral",
}


def duality_instance(algebra: str, family: str, l: int) -> DualityInstance:
    """Build one of the six supported commuting-pair instances.  ``family``
    names the level pattern: '-l', 'l-1/2', '-l-1/2' or '-l+1/2'."""
    key = (algebra, family)
    if key not in _FAMILIES:
        raise IllegalPower("unknown duality family %r" % (key,))
    if l < 1:
        raise IllegalPower("rank must be at least 1")
    kind, op_tag, weyl, rho_kind, char = _FAMILIES[key]
    factors = (kind,) * l
    neutral = _NEUTRAL_OF.get(key)
    if neutral:
        factors = factors + (neutral,)
    level = sum((fock.CENTRAL_CHARGE[k].value for k in factors), F(0))
    name = "%s:%s:l=%d" % (algebra, family, l)
    return DualityInstance(name=name, algebra=algebra, level=F(level), l=l,
                           factors=factors, op_tag=op_tag, weyl=weyl,
                           rho_kind=rho_kind, character_kind=char)


def _charged_block(inst: DualityInstance, k: int,
                   points: Sequence[Param], N) -> Series:
    """Level +-1 n-point block of one charged factor at shifted weight k."""
    kind = inst.factors[0]
    if kind == "fermion_pair":
        out = Series.zero(N)
        for sgn, pts in _eps_signed_points(points):
            out = out + level1_sector(k, pts, N).scale(sgn)
        return out
    if inst.op_tag == "A":
        return fock.a_sector_trace(k, points, N)
    # Both type-c and type-d instances reduce over the symmetric charge
    # slices; for type d the hyperoctahedral sign sum regenerates the
    # slice differences of the rank-one function (see qdim_closed).
    return c_sector_minus1(abs(k), points, N)


def _neutral_block(inst: DualityInstance, points: Sequence[Param], N) -> Series:
    kind = inst.factors[-1]
    return fock.neutral_trace(kind, inst.op_tag, points, N)


def duality_reduce(inst: DualityInstance, label, points: Sequence[Param],
                   N, mode: str = "assignment") -> Series:
    """Weyl-group reduction of the labeled trace to level +-1 blocks.

    ``mode='literal'`` renders the printed product formula: each factor's
    block is evaluated at the full point list (with the neutral prefactor,
    where present, also at the full list).  ``mode='assignment'`` distributes
    the n commuting operators over the factors (sum over all maps from points
    to factors; a factor receiving no point contributes its graded
    dimension/plain trace).
    """
    n = len(points)
    if n > 3:
        raise CapExceeded("duality reduction limited to 3 points")
    if inst.l > 4:
        raise CapExceeded("duality reduction limited to rank 4")
    if mode not in ("literal", "assignment"):
        raise IllegalPower("unknown mode %r" % mode)
    lam = _normalize_label(label, inst.l, inst.allow_negative_label)
    cache: Dict[tuple, Series] = {}

    def block(k: int, pts: Tuple[Param, ...]) -> Series:
        key = (k, _points_key(pts))
        if key not in cache:
            cache[key] = _charged_block(inst, k, pts, N)
        return cache[key]

    ncache: Dict[tuple, Series] = {}

    def nblock(pts: Tuple[Param, ...]) -> Series:
        key = _points_key(pts)
        if key not in ncache:
            ncache[key] = _neutral_block(inst, pts, N)
        return ncache[key]

    all_pts = tuple(points)
    has_neutral = inst.neutral_factor is not None
    out = Series.zero(N)
    if mode == "literal":
        pre = nblock(all_pts) if has_neutral else Series.one(N)
        for elem, sgn in combinat.weyl_group(inst.weyl, inst.l):
            ks = combinat.k_vector(lam, elem, inst.rho)
            term = Series.one(N)
            for k in ks:
                term = term * block(k, all_pts)
            out = out + term.scale(sgn)
        return pre * out
    nfac = len(inst.factors)
    assignments = list(iter_product(range(nfac), repeat=n))
    for elem, sgn in combinat.weyl_group(inst.weyl, inst.l):
        ks = combinat.k_vector(lam, elem, inst.rho)
        inner = Series.zero(N)
        for phi in assignments:
            term = Series.one(N)
            for i in range(nfac):
                pts = tuple(points[j] for j in range(n) if phi[j] == i)
                if has_neutral and i == inst.neutral_factor:
                    term = term * nblock(pts)
                else:
                    term = term * block(ks[i], pts)
            inner = inner + term
        out = out + inner.scale(sgn)
    return out


def extract_dominant(inst: DualityInstance, label,
                     points: Sequence[Param], N,
                     oracle: Optional[Series] = None) -> Series:
    """Read the labeled trace out of the multi-factor oracle: multiply the
    charge-resolved trace by the alternating Weyl z-sum over rho and take the
    coefficient of prod_i z_i^((label+rho)_i)."""
    lam = _normalize_label(label, inst.l, inst.allow_negative_label)
    if oracle is None:
        oracle = fock.duality_trace(inst.factors, inst.op_tag, points, N)
    rho = inst.rho
    zsum = combinat.weyl_zsum(inst.weyl, rho)
    out = oracle * Series(to2(N), zsum.terms)
    for i in range(inst.l):
        out = out.coeff_z(i + 1, HalfInt(twice=2 * lam[i] + to2(rho[i])))
    return out


# -- first-point q-shift difference equations --------------------------------


def qdiff_residual(algebra: str, points: Sequence[Param], N) -> Series:
    """Residual (left minus right side) of the q-shift difference equation
    for the first point.

    For the charged algebra ('a') the left side is the charge +1 slice of the
    mode-resummed generalized trace at the shifted first point, and the right
    side is sum_{s>=0} (-1)^s over merges of the first point with s of the
    others, of the charge-0 function at the merged point list.

    For the neutral algebra ('c') the left side is the half-level trace at
    the shifted first point and the right side carries an extra sign-vector
    sum: (-1)^(s + #negative) over merges by t_1 * prod t_i^(+-1).
    """
    n = len(points)
    if n < 1:
        raise IllegalPower("the difference equation needs at least one point")
    shifted = [points[0].qshift(1)] + list(points[1:])
    rhs = Series.zero(N)
    if algebra == "a":
        x = Param(F(1), 0, -1, zvar=1)
        y = Param(F(1), 0, 1, zvar=1)
        lhs = modesum.a_generalized_trace(x, y, shifted, N).coeff_z(1, 1)
        for s in range(n):
            for comb in combinations(range(1, n), s):
                merged = points[0]
                for i in comb:
                    merged = merged * points[i]
                rest = [points[i] for i in range(1, n) if i not in comb]
                rhs = rhs + fock.a_sector_trace(
                    0, [merged] + rest, N).scale((-1) ** s)
        return lhs - rhs
    if algebra == "c":
        lhs = modesum.neutral_c_trace(shifted, N)
        for s in range(n):
            for comb in combinations(range(1, n), s):
                rest = [points[i] for i in range(1, n) if i not in comb]
                for eps in iter_product((1, -1), repeat=s):
                    merged = points[0]
                    for i, e in zip(comb, eps):
                        merged = merged * (points[i] if e == 1
                                           else points[i].inverse())
                    neg = sum(1 for e in eps if e == -1)
                    rhs = rhs + fock.neutral_trace(
                        "boson_neutral", "C", [merged] + rest,
                        N).scale((-1) ** (s + neg))
        return lhs - rhs
    raise IllegalPower("unknown algebra %r" % algebra)
