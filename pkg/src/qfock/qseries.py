"""Exact truncated Laurent series in q^(1/2) with charge variables.

Coefficients are arbitrary-precision rationals (fractions.Fraction).  All
exponents -- both of q and of the charge variables z_i -- are stored as
*doubled* integers so half-integer powers never leave exact arithmetic.

A Series knows its truncation order: terms with q-exponent <= truncation are
exact, everything above is unknown.  Evaluation points are Param objects of
the form sign * s^2 * q^d * z^e, so t^r is an exact rational monomial for any
r in (1/2)Z.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Optional, Sequence, Tuple, Union


class QSeriesError(Exception):
    pass


class NotInvertible(QSeriesError):
    pass


class IllegalPower(QSeriesError):
    pass


class DegenerateParameter(QSeriesError):
    pass


class NonTruncatable(QSeriesError):
    pass


class CapExceeded(QSeriesError):
    pass


HalfLike = Union[int, Fraction, "HalfInt"]

ZERO = Fraction(0)
ONE = Fraction(1)


def to2(x: HalfLike) -> int:
    """Doubled-integer value of an element of (1/2)Z."""
    if isinstance(x, HalfInt):
        return x.twice
    if isinstance(x, int):
        return 2 * x
    f = Fraction(x)
    if f.denominator == 1:
        return 2 * f.numerator
    if f.denominator == 2:
        return f.numerator
    raise IllegalPower("not a half-integer: %r" % (x,))


def half_str(n2: int) -> str:
    return str(n2 // 2) if n2 % 2 == 0 else "%d/2" % n2


def parse_half(s) -> int:
    """Parse a half-integer given as int, "k", "a/2" or "p/q" with q|2."""
    if isinstance(s, int):
        return 2 * s
    f = Fraction(str(s))
    return to2(f)


class HalfInt:
    """An element of (1/2)Z, stored as twice its value."""

    __slots__ = ("twice",)

    def __init__(self, value: HalfLike = 0, *, twice: Optional[int] = None):
        if twice is not None:
            self.twice = twice
        else:
            self.twice = to2(value)

    @property
    def value(self) -> Fraction:
        return Fraction(self.twice, 2)

    def is_integer(self) -> bool:
        return self.twice % 2 == 0

    def __add__(self, other):
        return HalfInt(twice=self.twice + to2(other))

    __radd__ = __add__

    def __sub__(self, other):
        return HalfInt(twice=self.twice - to2(other))

    def __neg__(self):
        return HalfInt(twice=-self.twice)

    def __mul__(self, other):
        if isinstance(other, int):
            return HalfInt(twice=self.twice * other)
        n2 = self.twice * to2(other)
        if n2 % 2:
            raise IllegalPower("product %s*%s leaves (1/2)Z" % (self, other))
        return HalfInt(twice=n2 // 2)

    __rmul__ = __mul__

    def __eq__(self, other):
        try:
            return self.twice == to2(other)
        except (IllegalPower, TypeError, ValueError):
            return NotImplemented

    def __lt__(self, other):
        return self.twice < to2(other)

    def __le__(self, other):
        return self.twice <= to2(other)

    def __gt__(self, other):
        return self.twice > to2(other)

    def __ge__(self, other):
        return self.twice >= to2(other)

    def __hash__(self):
        return hash(Fraction(self.twice, 2))

    def __repr__(self):
        return "HalfInt(%s)" % half_str(self.twice)

    def __str__(self):
        return half_str(self.twice)


# z-exponent keys: sorted tuple of (variable index, doubled exponent != 0)
ZKey = Tuple[Tuple[int, int], ...]


def zkey(mapping: Mapping[int, HalfLike] = ()) -> ZKey:
    items = []
    for v, e in dict(mapping).items():
        e2 = to2(e)
        if e2:
            items.append((v, e2))
    return tuple(sorted(items))


def _zmul(a: ZKey, b: ZKey) -> ZKey:
    if not a:
        return b
    if not b:
        return a
    acc = dict(a)
    for v, e2 in b:
        n = acc.get(v, 0) + e2
        if n:
            acc[v] = n
        else:
            del acc[v]
    return tuple(sorted(acc.items()))


Key = Tuple[int, ZKey]  # (doubled q-exponent, z-exponent key)


class Series:
    """Sparse truncated Laurent series in q^(1/2) and charge variables z_i.

    terms: {(q2, zkey): Fraction}; every stored q2 <= trunc2 and no stored
    coefficient is zero.  trunc2 is the doubled inclusive truncation order.
    """

    __slots__ = ("trunc2", "terms")

    def __init__(self, trunc2: int, terms: Optional[dict] = None, clean: bool = True):
        self.trunc2 = trunc2
        if terms is None:
            self.terms = {}
        elif clean:
            self.terms = {k: c for k, c in terms.items() if c and k[0] <= trunc2}
        else:
            self.terms = terms

    # -- constructors -------------------------------------------------------

    @staticmethod
    def zero(N: HalfLike) -> "Series":
        return Series(to2(N), {}, clean=False)

    @staticmethod
    def const(c, N: HalfLike) -> "Series":
        c = Fraction(c)
        t2 = to2(N)
        return Series(t2, {(0, ()): c} if c and t2 >= 0 else {}, clean=False)

    @staticmethod
    def one(N: HalfLike) -> "Series":
        return Series.const(1, N)

    @staticmethod
    def monomial(c, qexp: HalfLike, N: HalfLike, z: Mapping[int, HalfLike] = ()) -> "Series":
        c = Fraction(c)
        q2 = to2(qexp)
        t2 = to2(N)
        if not c or q2 > t2:
            return Series(t2, {}, clean=False)
        return Series(t2, {(q2, zkey(z)): c}, clean=False)

    # -- basic observers ----------------------------------------------------

    @property
    def truncation(self) -> HalfInt:
        return HalfInt(twice=self.trunc2)

    def min2(self) -> Optional[int]:
        return min((k[0] for k in self.terms), default=None)

    def is_zero(self) -> bool:
        return not self.terms

    def variables(self) -> set:
        vs = set()
        for _, zk in self.terms:
            vs.update(v for v, _ in zk)
        return vs

    def qcoeff(self, qexp: HalfLike) -> dict:
        """Mapping zkey -> coefficient of q^qexp."""
        q2 = to2(qexp)
        if q2 > self.trunc2:
            raise QSeriesError("q-order %s beyond truncation %s"
                               % (half_str(q2), half_str(self.trunc2)))
        return {zk: c for (a2, zk), c in self.terms.items() if a2 == q2}

    def qcoeff_scalar(self, qexp: HalfLike) -> Fraction:
        m = self.qcoeff(qexp)
        if not m:
            return ZERO
        if set(m) != {()}:
            raise QSeriesError("coefficient carries charge variables")
        return m[()]

    def constant(self) -> Fraction:
        """The q^0 z^0 coefficient."""
        return self.terms.get((0, ()), ZERO)

    def coeff_z(self, var: int, m: HalfLike) -> "Series":
        """The z_var^m slice; q-series free of z_var."""
        m2 = to2(m)
        out = {}
        for (q2, zk), c in self.terms.items():
            d = dict(zk)
            if d.pop(var, 0) == m2:
                out[(q2, tuple(sorted(d.items())))] = c
        return Series(self.trunc2, out, clean=False)

    # -- ring operations ----------------------------------------------------

    def _coerced(self, other) -> Optional["Series"]:
        if isinstance(other, Series):
            return other
        if isinstance(other, (int, Fraction)):
            return Series.const(other, HalfInt(twice=self.trunc2))
        return None

    def __add__(self, other):
        o = self._coerced(other)
        if o is None:
            return NotImplemented
        t2 = min(self.trunc2, o.trunc2)
        out = dict(self.terms)
        for k, c in o.terms.items():
            n = out.get(k, ZERO) + c
            if n:
                out[k] = n
            else:
                out.pop(k, None)
        return Series(t2, out)

    __radd__ = __add__

    def __neg__(self):
        return Series(self.trunc2, {k: -c for k, c in self.terms.items()}, clean=False)

    def __sub__(self, other):
        o = self._coerced(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> "Series":
        c = Fraction(c)
        if not c:
            return Series(self.trunc2, {}, clean=False)
        return Series(self.trunc2, {k: c * v for k, v in self.terms.items()}, clean=False)

    def shift(self, qexp: HalfLike, z: Mapping[int, HalfLike] = ()) -> "Series":
        """Multiply by the monomial q^qexp * z^..., adjusting the truncation."""
        q2 = to2(qexp)
        zk = zkey(z)
        out = {(a2 + q2, _zmul(k, zk)): c for (a2, k), c in self.terms.items()}
        return Series(self.trunc2 + q2, out, clean=False)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, Series):
            return NotImplemented
        amin, bmin = self.min2(), other.min2()
        if amin is None or bmin is None:
            # zero operand: its O(q^(trunc+)) tail still meets the other factor
            if amin is None and bmin is None:
                t2 = min(self.trunc2, other.trunc2)
            elif amin is None:
                t2 = self.trunc2 + bmin
            else:
                t2 = other.trunc2 + amin
            return Series(t2, {}, clean=False)
        t2 = min(self.trunc2 + bmin, other.trunc2 + amin)
        out = {}
        for (a2, az), ac in self.terms.items():
            for (b2, bz), bc in other.terms.items():
                q2 = a2 + b2
                if q2 > t2:
                    continue
                k = (q2, _zmul(az, bz))
                n = out.get(k, ZERO) + ac * bc
                if n:
                    out[k] = n
                else:
                    del out[k]
        return Series(t2, out, clean=False)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Series":
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.invert() ** (-n)
        result = Series.one(HalfInt(twice=self.trunc2))
        base = self
        while n:
            if n & 1:
                result = result * base
            base_needed = n >> 1
            if base_needed:
                base = base * base
            n >>= 1
        return result

    def invert(self) -> "Series":
        """Multiplicative inverse; the lowest q-layer must be one monomial."""
        v2 = self.min2()
        if v2 is None:
            raise NotInvertible("cannot invert the zero series")
        lead = [(k, c) for k, c in self.terms.items() if k[0] == v2]
        if len(lead) != 1:
            raise NotInvertible("lowest q-layer has %d monomials" % len(lead))
        (lv2, lzk), lc = lead[0]
        t2 = self.trunc2 - 2 * v2
        # self = lead * (1 + u) with val(u) > 0; invert the unit part.
        inv_zk = tuple((v, -e2) for v, e2 in lzk)
        u_terms = {}
        for (a2, az), c in self.terms.items():
            if (a2, az) == (lv2, lzk):
                continue
            u_terms[(a2 - v2, _zmul(az, inv_zk))] = c / lc
        u = Series(self.trunc2 - v2, u_terms, clean=False)
        geom = Series.one(HalfInt(twice=u.trunc2))
        power = Series.one(HalfInt(twice=u.trunc2))
        umin = u.min2()
        if umin is not None:
            k = 1
            while k * umin <= u.trunc2:
                power = power * u
                geom = geom + (power if k % 2 == 0 else -power)
                if power.is_zero():
                    break
                k += 1
        out = {(a2 - v2, _zmul(az, inv_zk)): c / lc
               for (a2, az), c in geom.terms.items()}
        return Series(t2, out)

    def truncate(self, N: HalfLike) -> "Series":
        t2 = to2(N)
        if t2 >= self.trunc2:
            return Series(t2 if t2 < self.trunc2 else self.trunc2, dict(self.terms), clean=False)
        return Series(t2, {k: c for k, c in self.terms.items() if k[0] <= t2}, clean=False)

    # -- comparison ---------------------------------------------------------

    def __eq__(self, other):
        o = self._coerced(other)
        if o is None:
            return NotImplemented
        return self.trunc2 == o.trunc2 and self.terms == o.terms

    def __hash__(self):
        return hash((self.trunc2, frozenset(self.terms.items())))

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: (kv[0][0], kv[0][1]))

    def __repr__(self):
        bits = []
        for (q2, zk), c in self.sorted_terms()[:8]:
            mono = []
            if q2:
                mono.append("q^%s" % half_str(q2))
            for v, e2 in zk:
                mono.append("z%d^%s" % (v, half_str(e2)))
            bits.append("%s%s" % (c, ("*" + "*".join(mono)) if mono else ""))
        if len(self.terms) > 8:
            bits.append("...")
        return "Series[%s; O(q^%s)]" % (" + ".join(bits) or "0", half_str(self.trunc2))


def first_difference(a: Series, b: Series):
    """First differing monomial up to the common truncation, or None.

    Returns (q2, zkey, coeff_a, coeff_b) ordered by (q-exponent, z-key).
    """
    t2 = min(a.trunc2, b.trunc2)
    keys = set(k for k in a.terms if k[0] <= t2) | set(k for k in b.terms if k[0] <= t2)
    for k in sorted(keys):
        ca = a.terms.get(k, ZERO)
        cb = b.terms.get(k, ZERO)
        if ca != cb:
            return (k[0], k[1], ca, cb)
    return None


def series_equal(a: Series, b: Series) -> bool:
    return first_difference(a, b) is None


class Param:
    """Evaluation point sign * s^2 * q^d * z_var^e.

    s is a Fraction; the carried prefactor is s^2 so that every half-integer
    power of the point stays rational (t^(1/2) = s q^(d/2) ...).  s = 0 marks
    the zero parameter (legal only where a vanishing hypergeometric parameter
    makes sense).  sign = -1 supports points like -q^(1/2); such a point only
    admits integer powers.
    """

    __slots__ = ("s", "d2", "e2", "zvar", "sign", "label")

    def __init__(self, s, d: HalfLike = 0, e: HalfLike = 0, zvar: int = 1,
                 sign: int = 1, label: str = ""):
        self.s = Fraction(s)
        self.d2 = to2(d)
        self.e2 = to2(e)
        self.zvar = zvar
        if sign not in (1, -1):
            raise QSeriesError("sign must be +1 or -1")
        self.sign = sign
        self.label = label
        if self.s == 0 and (self.d2 or self.e2):
            raise QSeriesError("zero parameter cannot carry q or z exponents")

    @property
    def is_zero(self) -> bool:
        return self.s == 0

    @property
    def value_coeff(self) -> Fraction:
        return self.sign * self.s * self.s

    def qval2(self) -> int:
        """Doubled q-valuation (ignoring z); zero param is +infinity-like."""
        if self.is_zero:
            raise QSeriesError("zero parameter has no q-valuation")
        return self.d2

    def pow_monomial(self, r: HalfLike) -> Tuple[Fraction, int, ZKey]:
        """(coefficient, doubled q-exponent, zkey) of self**r, r in (1/2)Z."""
        r2 = to2(r)
        if self.is_zero:
            if r2 < 0:
                raise IllegalPower("zero parameter to a negative power")
            return (ONE if r2 == 0 else ZERO, 0, ())
        if (self.d2 * r2) % 2 or (self.e2 * r2) % 2:
            raise IllegalPower("power %s of %r leaves the exact monomial ring"
                               % (half_str(r2), self))
        if self.sign == -1 and r2 % 2:
            raise IllegalPower("half-integer power of a negative parameter")
        c = self.s ** r2  # s^(2r)
        if self.sign == -1 and (r2 // 2) % 2:
            c = -c
        ze2 = (self.e2 * r2) // 2
        return (c, (self.d2 * r2) // 2, ((self.zvar, ze2),) if ze2 else ())

    def scalar_pow(self, r: HalfLike) -> Fraction:
        """self**r as a plain rational; requires d = 0 and e = 0."""
        if self.d2 or self.e2:
            raise IllegalPower("parameter is not a scalar")
        c, _, _ = self.pow_monomial(r)
        return c

    def inverse(self) -> "Param":
        if self.is_zero:
            raise IllegalPower("zero parameter has no inverse")
        if self.d2:
            raise IllegalPower("inverse of a q-shifted parameter is not a Param")
        return Param(1 / self.s, 0, HalfInt(twice=-self.e2), self.zvar,
                     self.sign, _inv_label(self.label))

    def __mul__(self, other: "Param") -> "Param":
        if not isinstance(other, Param):
            return NotImplemented
        if self.is_zero or other.is_zero:
            return Param(0, label="0")
        if self.e2 and other.e2 and self.zvar != other.zvar:
            raise QSeriesError("product would carry two charge variables")
        zv = self.zvar if self.e2 else other.zvar
        # s^2 composes multiplicatively; |s| choice is irrelevant since only
        # even powers of s are ever exposed.
        return Param(self.s * other.s, HalfInt(twice=self.d2 + other.d2),
                     HalfInt(twice=self.e2 + other.e2), zv,
                     self.sign * other.sign,
                     (self.label + "*" + other.label) if self.label and other.label else "")

    def qshift(self, d: HalfLike = 1) -> "Param":
        """The point q^d * self."""
        n2 = self.d2 + to2(d)
        if n2 < 0:
            raise IllegalPower("negative q-shift")
        return Param(self.s, HalfInt(twice=n2), HalfInt(twice=self.e2),
                     self.zvar, self.sign, self.label)

    def __repr__(self):
        bits = ["%s" % self.value_coeff]
        if self.d2:
            bits.append("q^%s" % half_str(self.d2))
        if self.e2:
            bits.append("z%d^%s" % (self.zvar, half_str(self.e2)))
        body = "*".join(bits)
        return "Param(%s)" % (("%s=" % self.label) + body if self.label else body)


def _inv_label(label: str) -> str:
    return (label + "^-1") if label else ""


def power(p: Param, r: HalfLike, N: HalfLike) -> Series:
    """The single-monomial series p**r at truncation N."""
    c, q2, zk = p.pow_monomial(r)
    if not c:
        return Series.zero(N)
    return Series(to2(N), {(q2, zk): c})


def c_term(t: Param, N: HalfLike) -> Series:
    """beta(t) = 1/(t^(-1/2) - t^(1/2)) = t^(1/2)/(1 - t)."""
    if t.is_zero:
        raise DegenerateParameter("beta at the zero parameter")
    if t.d2 == 0 and t.e2 == 0 and t.value_coeff == 1:
        raise DegenerateParameter("beta has a pole at t = 1")
    num = power(t, Fraction(1, 2), N)
    den = Series.one(N) - _param_series(t, N)
    return num * den.invert()


def beta_scalar(t: Param) -> Fraction:
    """beta(t) as a rational, for a scalar point (d = 0, e = 0)."""
    if t.d2 or t.e2:
        raise IllegalPower("beta_scalar needs a scalar point")
    if t.sign == -1:
        raise IllegalPower("beta of a negative parameter")
    v = t.value_coeff
    if v == 1:
        raise DegenerateParameter("beta has a pole at t = 1")
    return t.s / (1 - v)


def _param_series(p: Param, N: HalfLike) -> Series:
    c, q2, zk = p.pow_monomial(1)
    if not c:
        return Series.zero(N)
    return Series(to2(N), {(q2, zk): c})


def pochhammer_n(a: Param, n: int, N: HalfLike) -> Series:
    """(a)_n = (1-a)(1-aq)...(1-aq^(n-1))."""
    out = Series.one(N)
    if a.is_zero or n == 0:
        return out
    t2 = to2(N)
    for i in range(n):
        c, q2, zk = a.qshift(i).pow_monomial(1)
        if q2 > t2:
            break  # remaining factors are 1 + O(q^(>N))
        out = out * (Series.one(N) - Series(t2, {(q2, zk): c}))
    return out


def pochhammer_inf(a: Param, N: HalfLike) -> Series:
    """(a)_inf = prod_{i>=0} (1 - a q^i), truncated at q^N.

    Requires q-valuation of a to be >= 0 (guaranteed by Param).  A d = 0
    argument contributes a scalar factor (1 - s^2) at i = 0 and truncatable
    factors afterwards; s^2 = 1 there gives the exact value 0.
    """
    if a.is_zero:
        return Series.one(N)
    if a.e2 and a.d2 == 0:
        raise NonTruncatable("(a)_inf with a pure charge monomial never truncates")
    t2 = to2(N)
    out = Series.one(N)
    i = 0
    while True:
        c, q2, zk = a.qshift(i).pow_monomial(1)
        if q2 > t2 and i > 0:
            break
        out = out * (Series.one(N) - Series(t2, {(q2, zk): c}))
        if out.is_zero():
            break
        i += 1
    return out


def qhyper(upper: Sequence[Param], lower: Sequence[Param], arg: Param,
           N: HalfLike) -> Series:
    """Basic hypergeometric series rPhis(upper; lower; q, arg).

    Term n: prod (a)_n / (prod (b)_n (q)_n) * ((-1)^n q^(n(n-1)/2))^(1+s-r)
    * arg^n.  Truncation relies on the guaranteed valuation
    n*val(arg) + max(0, 1+s-r)*n(n-1)/2 growing past N.
    """
    r, s = len(upper), len(lower)
    extra = 1 + s - r
    t2 = to2(N)
    if arg.is_zero:
        return Series.one(N)
    v2 = arg.qval2()
    if extra < 0 or (extra == 0 and v2 <= 0):
        raise NonTruncatable("term valuations of this rPhis do not diverge")
    out = Series.one(N)   # n = 0 term
    term = Series.one(N)  # running term, updated incrementally
    n = 1
    while n * v2 + extra * n * (n - 1) <= t2:
        for a in upper:
            if a.is_zero:
                continue
            c, q2, zk = a.qshift(n - 1).pow_monomial(1)
            term = term * (Series.one(N) - Series(t2, {(q2, zk): c}))
        for b in lower:
            if b.is_zero:
                raise DegenerateParameter("zero lower parameter")
            c, q2, zk = b.qshift(n - 1).pow_monomial(1)
            if q2 == 0 and c == 1:
                raise DegenerateParameter("lower Pochhammer vanishes at the leading layer")
            term = term * (Series.one(N) - Series(t2, {(q2, zk): c})).invert()
        term = term * (Series.one(N) - Series.monomial(1, n, N)).invert()
        term = term * _param_series(arg, N)
        if extra:
            # ((-1)^n q^(n(n-1)/2))^extra, incremental: exponent step n-1
            term = term.shift(HalfInt(twice=2 * extra * (n - 1)))
            if extra % 2:
                term = -term
        if term.is_zero():
            break
        out = out + term.truncate(N)
        n += 1
    return Series(t2, out.terms)


# -- theta function and jets ------------------------------------------------


class Jet:
    """Taylor coefficients of f(t e^eps) in eps: coeffs[k] = (t d/dt)^k f / k!."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence[Series]):
        self.coeffs = list(coeffs)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    @staticmethod
    def const(series: Series, order: int) -> "Jet":
        zero = Series.zero(HalfInt(twice=series.trunc2))
        return Jet([series] + [zero] * order)

    def __add__(self, other: "Jet") -> "Jet":
        assert self.order == other.order
        return Jet([a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other: "Jet") -> "Jet":
        assert self.order == other.order
        return Jet([a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __mul__(self, other: "Jet") -> "Jet":
        assert self.order == other.order
        n = self.order
        out = []
        for k in range(n + 1):
            acc = None
            for i in range(k + 1):
                term = self.coeffs[i] * other.coeffs[k - i]
                acc = term if acc is None else acc + term
            out.append(acc)
        return Jet(out)

    def scale(self, c) -> "Jet":
        return Jet([s.scale(c) for s in self.coeffs])


def _jet_one_minus(c: Fraction, q2: int, zk: ZKey, sign2: int, order: int,
                   N: HalfLike) -> Jet:
    """Jet of (1 - u e^(sign2*eps/... )) for the monomial u = c q^q2 z^zk.

    sign2 = +1 for a factor depending on t (u ~ t), -1 for t^(-1).
    """
    t2 = to2(N)
    u = Series(t2, {(q2, zk): c})
    coeffs = [Series.one(N) - u]
    fact = 1
    for k in range(1, order + 1):
        fact *= k
        coeffs.append(u.scale(Fraction(-(sign2 ** k), fact)))
    return Jet(coeffs)


def theta_jet(t: Param, k: int, N: HalfLike) -> Jet:
    """Jet of Theta(t) = (t^(1/2)-t^(-1/2)) (q)_inf^(-2) (qt)_inf (qt^(-1))_inf
    under t -> t e^eps, to eps-order k."""
    t2 = to2(N)
    if t.e2:
        raise IllegalPower("theta of a charge-carrying point")
    if t.sign == -1:
        raise IllegalPower("theta of a negative point")
    # prefactor t^(1/2) e^(eps/2) - t^(-1/2) e^(-eps/2)
    cp, qp2, _ = t.pow_monomial(Fraction(1, 2))
    if t.d2:
        cm, qm2 = 1 / cp, -qp2
    else:
        cm, qm2 = 1 / cp, 0
    pre = []
    fact = 1
    for j in range(k + 1):
        if j:
            fact *= j
        half = Fraction(1, 2) ** j
        term = Series(t2, {(qp2, ()): cp * half / fact}) - \
            Series(t2, {(qm2, ()): cm * ((-half) if j % 2 else half) / fact})
        pre.append(term)
    jet = Jet(pre)
    # (qt)_inf and (q t^(-1))_inf factors
    i = 0
    while True:
        q2 = t.d2 + 2 * (i + 1)
        if q2 > t2:
            break
        jet = jet * _jet_one_minus(t.value_coeff, q2, (), +1, k, N)
        i += 1
    i = 0
    while True:
        q2 = -t.d2 + 2 * (i + 1)
        if q2 > t2:
            break
        if q2 < 0:
            raise IllegalPower("theta needs qval(q/t) >= 0")
        jet = jet * _jet_one_minus(1 / t.value_coeff, q2, (), -1, k, N)
        i += 1
    qq = pochhammer_inf(Param(1, 1, label="q"), N)
    etainv2 = (qq * qq).invert()
    return Jet([c * etainv2 for c in jet.coeffs])


def theta(t: Param, N: HalfLike) -> Series:
    return theta_jet(t, 0, N).coeffs[0]


# -- serialization ----------------------------------------------------------


def series_to_json(s: Series) -> dict:
    terms = []
    for (q2, zk), c in s.sorted_terms():
        entry = {"q": half_str(q2), "z": {str(v): _zjson(e2) for v, e2 in zk},
                 "c": str(c)}
        if not entry["z"]:
            del entry["z"]
        terms.append(entry)
    return {"truncation": half_str(s.trunc2), "terms": terms}


def _zjson(e2: int):
    return e2 // 2 if e2 % 2 == 0 else "%d/2" % e2


def series_from_json(obj: dict) -> Series:
    t2 = parse_half(obj["truncation"])
    terms = {}
    for entry in obj["terms"]:
        q2 = parse_half(entry["q"])
        zk = tuple(sorted((int(v), parse_half(e))
                          for v, e in entry.get("z", {}).items()))
        terms[(q2, zk)] = Fraction(entry["c"])
    return Series(t2, terms)
