"""Named, reproducible verification suite.

Every identity implemented by the package is registered here as an
executable check: a named pair of independently computed series (closed
form vs enumeration oracle, or two printed expressions) compared exactly,
coefficient by coefficient, up to a stated truncation order.

Checks come in two modes.  ``gate`` checks assert identities the package
stands behind; any failure is a bug.  ``report`` checks are informational
comparisons (the naive product-form reductions evaluated at the full point
list) whose outcome is recorded but never gates the suite.
"""

from dataclasses import dataclass
from fnmatch import fnmatchcase
from fractions import Fraction as F
import json
import time
from typing import Callable, Dict, List, Mapping, Optional, Sequence, Tuple

from . import closedform as cf
from . import combinat, fock
from .qseries import (
    HalfInt,
    Param,
    Series,
    first_difference,
    half_str,
    pochhammer_inf,
    pochhammer_n,
    theta_jet,
    to2,
)


S_VALUES = (F(2, 3), F(3, 5), F(5, 7))


@dataclass(frozen=True)
class CheckSpec:
    """One named identity check: a deterministic pair of series builders."""
    name: str
    params: Mapping[str, str]
    N: object
    mode: str  # "gate" or "report"
    pair: Callable[[], Tuple[Series, Series]]

    def __post_init__(self):
        if self.mode not in ("gate", "report"):
            raise ValueError("mode must be 'gate' or 'report'")


@dataclass(frozen=True)
class CheckResult:
    name: str
    status: str  # "pass", "fail", or "error"
    first_discrepancy: Optional[Tuple[str, F, F]]
    ms: int
    mode: str = "gate"
    detail: str = ""

    def to_dict(self) -> dict:
        fd = None
        if self.first_discrepancy is not None:
            mono, lhs, rhs = self.first_discrepancy
            fd = {"monomial": mono, "lhs": str(lhs), "rhs": str(rhs)}
        return {"name": self.name, "status": self.status,
                "first_discrepancy": fd, "ms": self.ms}


def _monomial_str(q2: int, zkey: tuple) -> str:
    parts = ["q^%s" % half_str(q2)]
    for var, e in zkey:
        parts.append("z%d^%d" % (var, e))
    return " ".join(parts)


def run_check(spec: CheckSpec) -> CheckResult:
    """Compute both sides of a registered check and compare them exactly."""
    t0 = time.monotonic()
    try:
        lhs, rhs = spec.pair()
        diff = first_difference(lhs, rhs)
    except Exception as exc:  # surfaced, never swallowed silently
        ms = int(1000 * (time.monotonic() - t0))
        return CheckResult(spec.name, "error", None, ms, spec.mode,
                           "%s: %s" % (type(exc).__name__, exc))
    ms = int(1000 * (time.monotonic() - t0))
    if diff is None:
        return CheckResult(spec.name, "pass", None, ms, spec.mode)
    q2, zkey, ca, cb = diff
    return CheckResult(spec.name, "fail",
                       (_monomial_str(q2, zkey), ca, cb), ms, spec.mode)


def run_suite(pattern: str = "") -> List[CheckResult]:
    """Run every registered check whose name matches the glob pattern
    (empty pattern = all), in deterministic name order."""
    specs = [s for s in registry()
             if not pattern or fnmatchcase(s.name, pattern)]
    return [run_check(s) for s in sorted(specs, key=lambda s: s.name)]


def suite_exit_status(results: Sequence[CheckResult]) -> int:
    """0 if every gating check passed; 1 otherwise.  Report-mode checks
    never influence the status."""
    for r in results:
        if r.mode == "gate" and r.status != "pass":
            return 1
    return 0


def report_json(results: Sequence[CheckResult]) -> str:
    return json.dumps({"checks": [r.to_dict() for r in results]},
                      indent=2, sort_keys=True)


def report_table(results: Sequence[CheckResult]) -> str:
    width = max([len(r.name) for r in results] + [4])
    lines = []
    for r in results:
        extra = ""
        if r.first_discrepancy is not None:
            mono, lhs, rhs = r.first_discrepancy
            extra = "  at %s: %s vs %s" % (mono, lhs, rhs)
        elif r.detail:
            extra = "  " + r.detail
        tag = r.status if r.mode == "gate" else "%s (report)" % r.status
        lines.append("%-*s  %-14s %6d ms%s" % (width, r.name, tag, r.ms, extra))
    return "\n".join(lines)


# -- shared series builders --------------------------------------------------


def _qp(d=1) -> Param:
    return Param(F(1), d)


def _series_sum(terms, N) -> Series:
    out = Series.zero(N)
    for t in terms:
        out = out + t
    return out


def _mono_of(p: Param, r, N) -> Series:
    c, q2, zkey = p.pow_monomial(r)
    return Series(to2(N), {(q2, zkey): c}) if q2 <= to2(N) else Series.zero(N)


def ff_product_side(u: Param, N) -> Series:
    """1 / ((u)_inf (u^{-1}q)_inf)."""
    uinvq = Param(1 / u.s, F(1) - F(u.qval2(), 2))
    return (pochhammer_inf(u, N) * pochhammer_inf(uinvq, N)).invert()


def _geometric(r_scalar: F, rq2: int, start: int, N) -> Series:
    """sum_{k>=start} r^k for the monomial r = r_scalar * q^(rq2/2).

    A ratio with positive q-valuation expands termwise; a scalar ratio
    (q-valuation zero) resums to the exact rational 1/(1-r) — the reading
    that makes the formal bilateral sum converge coefficientwise."""
    n2 = to2(N)
    if rq2 < 0:
        raise ValueError("geometric ratio with negative q-valuation")
    if rq2 == 0:
        if r_scalar == 1:
            raise ZeroDivisionError("geometric ratio equal to 1")
        total = 1 / (1 - r_scalar) - sum(r_scalar ** k for k in range(start))
        return Series.const(total, N)
    tail = Series.one(n2) - Series(n2, {(rq2, ()): r_scalar})
    out = tail.invert()
    if start:
        out = out * Series(n2, {(start * rq2, ()): r_scalar ** start})
    return out


def ff_sum_side(u: Param, N) -> Series:
    """(1/(q)_inf^2) sum_{m>=0} (-1)^m q^(m(m+1)/2)
    (sum_{k>=0} q^(km) u^k + sum_{k>0} q^(k(m+1)) u^{-k}),
    inner geometric sums taken in resummed form."""
    n2 = to2(N)
    d2 = u.qval2()
    if d2 <= 0:
        raise ValueError("u must carry a positive q-power")
    us = u.s * u.s
    out = Series.zero(N)
    m = 0
    while m * (m + 1) <= n2:
        asc = _geometric(us, d2 + 2 * m, 0, N)
        desc = _geometric(1 / us, 2 * (m + 1) - d2, 1, N)
        blk = (asc + desc).shift(HalfInt(twice=m * (m + 1)))
        out = out + blk.scale((-1) ** m)
        m += 1
    pref = pochhammer_inf(_qp(), N).invert()
    return out * pref * pref


def sum_over_m_lhs(k: int, t: Param, N) -> Series:
    """sum_{l>=0} q^l / ((q)_l (tq)_{l+k})."""
    tq = t * _qp()
    out = Series.zero(N)
    l = 0
    while l <= to2(N) // 2:
        den = pochhammer_n(_qp(), l, N) * pochhammer_n(tq, l + k, N)
        out = out + den.invert().shift(l)
        l += 1
    return out


def sum_over_m_rhs(k: int, t: Param, N) -> Series:
    """(1/((q)_inf (tq)_inf)) sum_{m>=0} (-1)^m q^(m(m+1)/2 + km) t^m."""
    tq = t * _qp()
    n2 = to2(N)
    acc: Dict[tuple, F] = {}
    m = 0
    while m * (m + 1) + 2 * k * m <= n2:
        q2 = m * (m + 1) + 2 * k * m
        acc[(q2, ())] = acc.get((q2, ()), F(0)) \
            + F((-1) ** m) * t.scalar_pow(m)
        m += 1
    pref = (pochhammer_inf(_qp(), N) * pochhammer_inf(tq, N)).invert()
    return Series(n2, acc) * pref


def exp_left_sum(z: Param, N) -> Series:
    """sum_m (-z)^m q^(m(m-1)/2) / (q)_m."""
    out = Series.zero(N)
    m = 0
    while m * (m - 1) + m * z.qval2() <= to2(N):
        num = _mono_of(z, m, N).shift(HalfInt(twice=m * (m - 1)))
        out = out + (num * pochhammer_n(_qp(), m, N).invert()).scale((-1) ** m)
        m += 1
    return out


def exp_right_sum(a: Param, z: Param, N) -> Series:
    """sum_l (a)_l z^l / (q)_l."""
    out = Series.zero(N)
    l = 0
    while l * z.qval2() <= to2(N):
        num = _mono_of(z, l, N) * pochhammer_n(a, l, N)
        out = out + num * pochhammer_n(_qp(), l, N).invert()
        l += 1
    return out


def _partitions_exact_length(l: int, max_weight: int):
    for lam in combinat.partitions(max_weight):
        if len(lam) == l:
            yield lam


def fixed_length_sum_enum(l: int, N) -> Series:
    """sum over partitions of length exactly l of q^|lambda|, enumerated."""
    n = int(to2(N)) // 2
    acc: Dict[tuple, F] = {}
    for lam in _partitions_exact_length(l, n):
        w = sum(lam)
        acc[(2 * w, ())] = acc.get((2 * w, ()), F(0)) + 1
    return Series(to2(N), acc)


def fixed_length_sum_closed(l: int, N) -> Series:
    """q^l / (q)_l."""
    return pochhammer_n(_qp(), l, N).invert().shift(l)


def marked_part_sum_enum(l: int, i: int, t: Param, N) -> Series:
    """sum over partitions of length exactly l of q^|lambda| t^(lambda_i)."""
    n = int(to2(N)) // 2
    acc: Dict[tuple, F] = {}
    for lam in _partitions_exact_length(l, n):
        w = sum(lam)
        key = (2 * w, ())
        acc[key] = acc.get(key, F(0)) + t.scalar_pow(lam[i - 1])
    return Series(to2(N), acc)


def marked_part_sum_closed(l: int, i: int, t: Param, N) -> Series:
    """t q^l / ((1-q)...(1-q^{i-1}) (1-q^i t)...(1-q^l t))."""
    out = Series.monomial(t.scalar_pow(1), l, N)
    for j in range(1, i):
        out = out * _one_minus_mono(F(1), j, N).invert()
    for j in range(i, l + 1):
        out = out * _one_minus_mono(t.scalar_pow(1), j, N).invert()
    return out


def _one_minus_mono(c: F, qexp: int, N) -> Series:
    return Series.one(N) - Series.monomial(c, qexp, N)


def charge_resolved_pair_vacuum(l: int, N) -> Series:
    """prod_i 1/((z_i q^(1/2))_inf (z_i^(-1) q^(1/2))_inf) with formal z_i."""
    out = Series.one(N)
    for i in range(1, l + 1):
        zp = Param(F(1), F(1, 2), e=1, zvar=i)
        zm = Param(F(1), F(1, 2), e=-1, zvar=i)
        out = out * (pochhammer_inf(zp, N) * pochhammer_inf(zm, N)).invert()
    return out


def charge_resolved_qdim_extract(l: int, lam: Tuple[int, ...], N) -> Series:
    """Dominant-monomial coefficient of the charge-resolved vacuum
    character, the closed-form side of the rank-l graded-dimension sum."""
    rho = combinat.rho_vector("A", l)
    zsum = combinat.weyl_zsum("A", rho)
    out = charge_resolved_pair_vacuum(l, N) * Series(to2(N), zsum.terms)
    for i in range(l):
        out = out.coeff_z(i + 1, HalfInt(twice=2 * lam[i] + to2(rho[i])))
    return out


def odd_triple_product(N) -> Series:
    """sum_{m>=0} (-1)^m (2m+1) q^(m(m+1)/2)."""
    acc: Dict[tuple, F] = {}
    m = 0
    while m * (m + 1) <= to2(N):
        acc[(m * (m + 1), ())] = F((-1) ** m * (2 * m + 1))
        m += 1
    return Series(to2(N), acc)


# -- the registry ------------------------------------------------------------


_INSTANCE_SLUGS = (
    ("a", "-l", "a-negl"),
    ("c", "l-1/2", "c-lminushalf"),
    ("c", "-l", "c-negl"),
    ("c", "-l-1/2", "c-neglminushalf"),
    ("d", "-l", "d-negl"),
    ("d", "-l+1/2", "d-neglplushalf"),
)

_LEVEL_AT_RANK2 = {
    "a-negl": "-2", "c-lminushalf": "3/2", "c-negl": "-2",
    "c-neglminushalf": "-5/2", "d-negl": "-2", "d-neglplushalf": "-3/2",
}


def _slug_s(s: F) -> str:
    return "%d.%d" % (s.numerator, s.denominator)


def _slug_lam(lam) -> str:
    return "_".join(str(x) for x in lam)


_EXT_CACHE: Dict[tuple, Series] = {}


def _ext_oracle(alg: str, fam: str, l: int, lam, points, N) -> Series:
    key = (alg, fam, l, tuple(lam),
           tuple((p.s, p.qval2(), p.zvar) for p in points), to2(N))
    if key not in _EXT_CACHE:
        inst = cf.duality_instance(alg, fam, l)
        _EXT_CACHE[key] = cf.extract_dominant(inst, tuple(lam),
                                              list(points), N)
    return _EXT_CACHE[key]


def _pts(n: int) -> List[Param]:
    return [Param(s) for s in S_VALUES[:n]]


def _registry_identity(reg: List[CheckSpec]) -> None:
    for i, (s, d) in enumerate([(F(2, 3), F(1, 2)), (F(3, 5), F(1))], 1):
        u = Param(s, d)
        reg.append(CheckSpec(
            "identity-ff-u%d" % i,
            {"s": str(s), "d": half_str(to2(d)), "N": "20"}, 20, "gate",
            lambda u=u: (ff_product_side(u, 20), ff_sum_side(u, 20))))
    for k in (0, 1, 3):
        for s in (F(2, 3), F(5, 7)):
            t = Param(s)
            reg.append(CheckSpec(
                "prop-111-k%d-t%s" % (k, _slug_s(s)),
                {"k": str(k), "s": str(s), "N": "20"}, 20, "gate",
                lambda k=k, t=t: (sum_over_m_lhs(k, t, 20),
                                  sum_over_m_rhs(k, t, 20))))
    for i, s in enumerate([F(1), F(2, 3)], 1):
        z = Param(s, 1)
        reg.append(CheckSpec(
            "exponential-left-%d" % i, {"s": str(s), "d": "1", "N": "20"},
            20, "gate",
            lambda z=z: (exp_left_sum(z, 20), pochhammer_inf(z, 20))))
    a, z = Param(F(2, 3)), Param(F(1), 1)
    reg.append(CheckSpec(
        "exponential-right", {"a": "2/3", "z": "q", "N": "20"}, 20, "gate",
        lambda: (exp_right_sum(a, z, 20),
                 pochhammer_inf(a * z, 20) * pochhammer_inf(z, 20).invert())))
    for l in range(1, 6):
        reg.append(CheckSpec(
            "lemma-222-i-l%d" % l, {"l": str(l), "N": "15"}, 15, "gate",
            lambda l=l: (fixed_length_sum_enum(l, 15),
                         fixed_length_sum_closed(l, 15))))
    for l, i in ((3, 1), (3, 2), (5, 4)):
        t = Param(F(2, 3))
        reg.append(CheckSpec(
            "lemma-222-ii-l%d-i%d" % (l, i),
            {"l": str(l), "i": str(i), "s": "2/3", "N": "15"}, 15, "gate",
            lambda l=l, i=i, t=t: (marked_part_sum_enum(l, i, t, 15),
                                   marked_part_sum_closed(l, i, t, 15))))
    def _ff_specialized():
        # z = 1 in the charge-resolved vacuum character: the zero-charge
        # slice plus twice each positive-charge slice (slices are even).
        vac = charge_resolved_pair_vacuum(1, 16)
        rhs = vac.coeff_z(1, 0) + _series_sum(
            (vac.coeff_z(1, k) for k in range(1, 33)), 16).scale(2)
        return ff_product_side(Param(F(1), F(1, 2)), 16), rhs

    reg.append(CheckSpec(
        "identity-ff-specializes-qdim", {"s": "1", "d": "1/2", "N": "16"},
        16, "gate", _ff_specialized))


def _registry_correlation(reg: List[CheckSpec]) -> None:
    x, y = Param(F(2, 5)), Param(F(3, 7))
    for s in S_VALUES:
        reg.append(CheckSpec(
            "one-point-s%s" % _slug_s(s), {"s": str(s), "N": "12"},
            12, "gate",
            lambda s=s: (cf.one_point_minus1(Param(s), 12),
                         fock.a_sector_trace(0, [Param(s)], 12))))
    for s in (F(2, 3), F(3, 5)):
        reg.append(CheckSpec(
            "gl-general-1pt-t%s" % _slug_s(s),
            {"x": "2/5", "y": "3/7", "t": str(s), "N": "10"}, 10, "gate",
            lambda s=s: (cf.generalized_one_point(x, y, Param(s), 10),
                         fock.a_generalized_trace(x, y, [Param(s)], 10))))
        reg.append(CheckSpec(
            "eq-555-t%s" % _slug_s(s),
            {"x": "2/5", "t": str(s), "N": "10"}, 10, "gate",
            lambda s=s: (cf.partition_ladder_sum(x, Param(s), 10),
                         cf.partition_ladder_closed(x, Param(s), 10))))
    reg.append(CheckSpec(
        "gl-general-2pt",
        {"x": "2/5", "y": "3/7", "t1": "2/3", "t2": "3/5", "N": "8"},
        8, "gate",
        lambda: (cf.generalized_two_point(x, y, Param(F(2, 3)),
                                          Param(F(3, 5)), 8),
                 fock.a_generalized_trace(
                     x, y, [Param(F(2, 3)), Param(F(3, 5))], 8))))
    for s in S_VALUES:
        reg.append(CheckSpec(
            "c-1pt-half-s%s" % _slug_s(s), {"s": str(s), "N": "10"},
            10, "gate",
            lambda s=s: (cf.c_one_point_half(Param(s), 10),
                         fock.neutral_trace("boson_neutral", "C",
                                            [Param(s)], 10))))
    zvar = Param(F(1), 0, 1, zvar=1)
    for k in (-1, 0, 2):
        for n in (1, 2):
            reg.append(CheckSpec(
                "zzz-k%d-n%d" % (k, n), {"k": str(k), "n": str(n), "N": "8"},
                8, "gate",
                lambda k=k, n=n: (
                    cf.level1_sector(k, _pts(n), 8),
                    fock.f1_charged_trace(zvar, _pts(n), 8).coeff_z(1, k))))
    reg.append(CheckSpec(
        "theta-triple-product", {"N": "20"}, 20, "gate",
        lambda: (theta_jet(Param(F(1)), 1, 20).coeffs[1]
                 * pochhammer_inf(_qp(), 20) ** 3,
                 odd_triple_product(20))))
    for m in (0, 1, 2):
        reg.append(CheckSpec(
            "sector-c-m%d" % m, {"m": str(m), "n": "1", "N": "8"}, 8, "gate",
            lambda m=m: (cf.c_sector_minus1(m, _pts(1), 8),
                         fock.duality_trace(("boson_pair",), "C",
                                            _pts(1), 8).coeff_z(1, m))))
        def _d_sector_pair(m=m):
            # The rank-one type-d function is the difference of the z^m
            # and z^(m+2) slices of the sign-inverted trace.
            orc = fock.duality_trace(("boson_pair",), "D", _pts(1), 8)
            return (cf.d_sector_minus1(m, _pts(1), 8),
                    orc.coeff_z(1, m) - orc.coeff_z(1, m + 2))

        reg.append(CheckSpec(
            "sector-d-m%d" % m, {"m": str(m), "n": "1", "N": "8"}, 8, "gate",
            _d_sector_pair))


def _registry_qdiff(reg: List[CheckSpec]) -> None:
    for alg in ("a", "c"):
        for n in (1, 2, 3):
            reg.append(CheckSpec(
                "qdiff-%s-n%d" % (alg, n),
                {"algebra": alg, "n": str(n), "N": "10"}, 10, "gate",
                lambda alg=alg, n=n: (cf.qdiff_residual(alg, _pts(n), 10),
                                      Series.zero(10))))


def _registry_qdim(reg: List[CheckSpec]) -> None:
    reg.append(CheckSpec(
        "qdim-a-r1", {"k": "0..2", "N": "20"}, 20, "gate",
        lambda: (_series_sum((cf.charged_qdim_base(k, 20).shift(0)
                              for k in (0, 1, 2)), 20),
                 _series_sum((fock.a_sector_trace(k, [], 20)
                              for k in (0, 1, 2)), 20))))
    for l, lam in ((2, (0, 0)), (2, (1, 0)), (2, (1, -1)), (3, (2, 1, 0)),
                   (3, (1, 0, -1))):
        reg.append(CheckSpec(
            "qdim-a-r%d-lam%s" % (l, _slug_lam(lam)),
            {"lambda": str(lam), "N": "10"}, 10, "gate",
            lambda l=l, lam=lam: (cf.qdim_closed("a", str(-l), lam, 10),
                                  _ext_oracle("a", "-l", l, lam, [], 10))))
    for lam in ((0, 0), (1, 0), (2, 1)):
        reg.append(CheckSpec(
            "qdim-c-poshalf-forms-lam%s" % _slug_lam(lam),
            {"lambda": str(lam), "N": "20"}, 20, "gate",
            lambda lam=lam: (cf.qdim_closed("c", "3/2", lam, 20, "weyl"),
                             cf.qdim_closed("c", "3/2", lam, 20, "product"))))
    rank1 = [("c", "-l", "-1"), ("d", "-l", "-1")]
    for alg, fam, lev in rank1:
        for k in (0, 1, 2):
            reg.append(CheckSpec(
                "qdim-%s-r1-k%d" % (alg, k),
                {"level": lev, "k": str(k), "N": "10"}, 10, "gate",
                lambda alg=alg, fam=fam, lev=lev, k=k: (
                    cf.qdim_closed(alg, lev, (k,), 10),
                    _ext_oracle(alg, fam, 1, (k,), [], 10))))
    for alg, fam, slug in _INSTANCE_SLUGS:
        if slug in ("a-negl", "c-lminushalf"):
            continue
        lev = _LEVEL_AT_RANK2[slug]
        for lam in ((0, 0), (1, 0), (2, 1)):
            reg.append(CheckSpec(
                "qdim-%s-r2-lam%s" % (slug, _slug_lam(lam)),
                {"level": lev, "lambda": str(lam), "N": "10"}, 10, "gate",
                lambda alg=alg, fam=fam, lev=lev, lam=lam: (
                    cf.qdim_closed(alg, lev, lam, 10),
                    _ext_oracle(alg, fam, 2, lam, [], 10))))
    for lev, fam in (("3/2", "l-1/2"),):
        for lam in ((0, 0), (1, 0)):
            reg.append(CheckSpec(
                "qdim-c-poshalf-oracle-lam%s" % _slug_lam(lam),
                {"level": lev, "lambda": str(lam), "N": "10"}, 10, "gate",
                lambda lev=lev, fam=fam, lam=lam: (
                    cf.qdim_closed("c", lev, lam, 10),
                    _ext_oracle("c", fam, 2, lam, [], 10))))
    for l in (1, 2):
        for lam in ([(0,), (1,)] if l == 1 else [(0, 0), (1, 0)]):
            reg.append(CheckSpec(
                "qdim-charge-resolved-r%d-lam%s" % (l, _slug_lam(lam)),
                {"lambda": str(lam), "N": "10"}, 10, "gate",
                lambda l=l, lam=lam: (
                    charge_resolved_qdim_extract(l, lam, 10),
                    cf.qdim_closed("a", str(-l), lam, 10))))


def _registry_duality(reg: List[CheckSpec]) -> None:
    for alg, fam, slug in _INSTANCE_SLUGS:
        for n in (0, 1, 2):
            for lam in ((0, 0), (1, 0)):
                name_tail = "%s-n%d-lam%s" % (slug, n, _slug_lam(lam))
                params = {"instance": slug, "l": "2", "n": str(n),
                          "lambda": str(lam), "N": "8"}
                reg.append(CheckSpec(
                    "duality-assignment-" + name_tail, params, 8, "gate",
                    lambda alg=alg, fam=fam, lam=lam, n=n: (
                        cf.duality_reduce(cf.duality_instance(alg, fam, 2),
                                          lam, _pts(n), 8, "assignment"),
                        _ext_oracle(alg, fam, 2, lam, _pts(n), 8))))
                reg.append(CheckSpec(
                    "duality-literal-" + name_tail, params, 8, "report",
                    lambda alg=alg, fam=fam, lam=lam, n=n: (
                        cf.duality_reduce(cf.duality_instance(alg, fam, 2),
                                          lam, _pts(n), 8, "literal"),
                        _ext_oracle(alg, fam, 2, lam, _pts(n), 8))))


_REGISTRY: Optional[List[CheckSpec]] = None


def registry() -> List[CheckSpec]:
    """The full default check registry, built once, ordered by name."""
    global _REGISTRY
    if _REGISTRY is None:
        reg: List[CheckSpec] = []
        _registry_identity(reg)
        _registry_correlation(reg)
        _registry_qdiff(reg)
        _registry_qdim(reg)
        _registry_duality(reg)
        reg.sort(key=lambda s: s.name)
        names = [s.name for s in reg]
        if len(set(names)) != len(names):
            raise RuntimeError("duplicate check names in registry")
        _REGISTRY = reg
    return list(_REGISTRY)


# Every identity family the package implements must appear in the registry.
# coverage_missing() enforces this; the test suite asserts it is empty.
REQUIRED_CHECK_PREFIXES = (
    "identity-ff-",
    "prop-111-",
    "exponential-left-",
    "exponential-right",
    "lemma-222-i-",
    "lemma-222-ii-",
    "one-point-",
    "gl-general-1pt-",
    "gl-general-2pt",
    "eq-555-",
    "c-1pt-half-",
    "zzz-",
    "theta-triple-product",
    "sector-c-",
    "sector-d-",
    "qdiff-a-",
    "qdiff-c-",
    "qdim-a-",
    "qdim-c-poshalf-",
    "qdim-c-r1-",
    "qdim-c-negl-r2-",
    "qdim-c-neglminushalf-r2-",
    "qdim-d-r1-",
    "qdim-d-negl-r2-",
    "qdim-d-neglplushalf-r2-",
    "qdim-charge-resolved-",
    "duality-assignment-a-negl-",
    "duality-assignment-c-lminushalf-",
    "duality-assignment-c-negl-",
    "duality-assignment-c-neglminushalf-",
    "duality-assignment-d-negl-",
    "duality-assignment-d-neglplushalf-",
    "duality-literal-",
)


def coverage_missing() -> List[str]:
    """Required check-name prefixes with no registered check."""
    names = [s.name for s in registry()]
    missing = []
    for pref in REQUIRED_CHECK_PREFIXES:
        if not any(n == pref or n.startswith(pref) for n in names):
            missing.append(pref)
    return missing
