"""Brute-force graded-trace oracles over Fock spaces.

Four factor kinds, each with its basis family and diagonal eigenvalue rule:

  boson_pair     pairs of partitions (lam, mu), central charge -1
  boson_neutral  single partitions, central charge -1/2
  fermion_pair   pairs of strict partitions, central charge +1
  fermion_neutral single strict partitions, central charge +1/2

A state's energy is sum over parts p of (p - 1/2); the diagonal operator at a
point t has eigenvalue sum(t^(p-1/2)) - sum(t^(-p+1/2)) plus a central term
+-beta(t).  Operators 'C' and 'D' act as A(t) - A(t^(-1)) on charged factors.

These oracles enumerate states; they require evaluation points with d = 0
(plain rational scalars).  Shifted points (d > 0) are handled by the
resummed evaluator in modesum.py.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Tuple

from .qseries import (
    CapExceeded,
    HalfInt,
    NonTruncatable,
    Param,
    QSeriesError,
    Series,
    beta_scalar,
    c_term,
    to2,
)

F = Fraction

CENTRAL_SIGN = {
    "boson_pair": +1,
    "boson_neutral": +1,
    "fermion_pair": -1,
    "fermion_neutral": -1,
}
CENTRAL_CHARGE = {
    "boson_pair": HalfInt(-1),
    "boson_neutral": HalfInt(F(-1, 2)),
    "fermion_pair": HalfInt(1),
    "fermion_neutral": HalfInt(F(1, 2)),
}
CHARGED = {"boson_pair", "fermion_pair"}
LEGAL_OPS = {
    "boson_pair": {"A", "C", "D"},
    "fermion_pair": {"A", "C", "D"},
    "boson_neutral": {"C"},
    "fermion_neutral": {"D"},
}


@lru_cache(maxsize=None)
def mod_partitions(budget2: int, strict: bool = False) -> Tuple[Tuple[int, Tuple[int, ...]], ...]:
    """All partitions with doubled modified weight 2|lam| - len <= budget2,
    as (w2, parts) pairs."""
    out: List[Tuple[int, Tuple[int, ...]]] = []

    def rec(rem2: int, top: int, prefix: Tuple[int, ...]):
        out.append((budget2 - rem2, prefix))
        hi = min(top, (rem2 + 1) // 2)
        for part in range(hi, 0, -1):
            cost = 2 * part - 1
            if cost <= rem2:
                rec(rem2 - cost, part - 1 if strict else part, prefix + (part,))

    if budget2 >= 0:
        rec(budget2, (budget2 + 1) // 2, ())
    return tuple(out)


def _require_scalar_points(points: Sequence[Param]):
    for p in points:
        if p.is_zero or p.d2 != 0 or p.e2 != 0 or p.sign != 1:
            raise NonTruncatable(
                "state enumeration needs plain scalar points; "
                "use modesum for q-shifted points")


def _mode_sums(points: Sequence[Param], budget2: int, strict: bool
               ) -> Tuple[Tuple[Tuple[int, int, Tuple[F, ...], Tuple[F, ...]], ...], ...]:
    """Per partition: (w2, length, S_plus per point, S_minus per point) with
    S_plus = sum t^(p-1/2), S_minus = sum t^(-p+1/2)."""
    roots = [p.scalar_pow(F(1, 2)) for p in points]
    parts_list = mod_partitions(budget2, strict)
    powcache: List[Dict[int, F]] = [dict() for _ in points]

    def tpow(j: int, k2: int) -> F:
        # roots[j] ** k2 == t_j^(k2/2)
        c = powcache[j].get(k2)
        if c is None:
            c = roots[j] ** k2
            powcache[j][k2] = c
        return c

    out = []
    for w2, parts in parts_list:
        sp = []
        sm = []
        for j in range(len(points)):
            sp.append(sum(tpow(j, 2 * p - 1) for p in parts))
            sm.append(sum(tpow(j, 1 - 2 * p) for p in parts))
        out.append((w2, len(parts), tuple(sp), tuple(sm)))
    return tuple(out)


# -- public eigenvalue (Series-valued, spec-level) --------------------------


def eigenvalue(kind: str, state, op_tag: str, point: Param, N) -> Series:
    """Diagonal eigenvalue of the operator at `point` on a basis state.

    state: (lam, mu) for charged kinds, (lam,) or lam for neutral kinds.
    """
    if op_tag not in LEGAL_OPS[kind]:
        raise QSeriesError("operator %s not defined on %s" % (op_tag, kind))
    if kind in CHARGED:
        lam, mu = state
        if op_tag == "A":
            return _eig_charged_A(kind, lam, mu, point, N)
        return _eig_charged_A(kind, lam, mu, point, N) - \
            _eig_charged_A(kind, lam, mu, _point_inverse(point), N)
    lam = state[0] if (state and isinstance(state[0], tuple)) else state
    acc = c_term(point, N).scale(CENTRAL_SIGN[kind])
    for p in lam:
        acc = acc + _pmono(point, 2 * p - 1, N) - _pmono(point, 1 - 2 * p, N)
    return acc


def _eig_charged_A(kind: str, lam, mu, point: Param, N) -> Series:
    acc = c_term(point, N).scale(CENTRAL_SIGN[kind])
    for p in lam:
        acc = acc + _pmono(point, 2 * p - 1, N)
    for p in mu:
        acc = acc - _pmono(point, 1 - 2 * p, N)
    return acc


def _pmono(point: Param, k2: int, N) -> Series:
    c, q2, zk = point.pow_monomial(HalfInt(twice=k2))
    return Series(to2(N), {(q2, zk): c})


def _point_inverse(point: Param) -> Param:
    return point.inverse()


# -- single-factor oracles --------------------------------------------------


def a_sector_trace(m: int, points: Sequence[Param], N) -> Series:
    """Charge-m trace over the level -1 bosonic pair: sum over (lam, mu) with
    len(mu)-len(lam) = m of q^E prod_j (A-eigenvalue at t_j)."""
    _require_scalar_points(points)
    N2 = to2(N)
    data = _mode_sums(points, N2, strict=False)
    betas = [beta_scalar(p) for p in points]
    n = len(points)
    acc: Dict[int, F] = {}
    for wl2, ll, spl, _ in data:
        for wm2, lm, _, smm in data:
            if lm - ll != m or wl2 + wm2 > N2:
                continue
            coeff = F(1)
            for j in range(n):
                coeff *= spl[j] - smm[j] + betas[j]
                if not coeff:
                    break
            if coeff:
                k = wl2 + wm2
                acc[k] = acc.get(k, F(0)) + coeff
    return Series(N2, {(k, ()): c for k, c in acc.items()})


def a_sector_dims(m: int, N) -> Series:
    """Graded dimension of the charge-m sector (n = 0 trace), via count
    tables convolved by length."""
    N2 = to2(N)
    counts: Dict[Tuple[int, int], int] = {}
    for w2, parts in mod_partitions(N2):
        key = (w2, len(parts))
        counts[key] = counts.get(key, 0) + 1
    acc: Dict[int, int] = {}
    for (w2a, la), ca in counts.items():
        for (w2b, lb), cb in counts.items():
            if lb - la == m and w2a + w2b <= N2:
                k = w2a + w2b
                acc[k] = acc.get(k, 0) + ca * cb
    return Series(N2, {(k, ()): F(c) for k, c in acc.items()})


def a_generalized_trace(x: Param, y: Param, points: Sequence[Param], N) -> Series:
    """tr over the full bosonic pair of x^(len lam) y^(len mu) q^E
    prod A-eigenvalues.  x, y may carry charge-variable exponents."""
    _require_scalar_points(points)
    N2 = to2(N)
    data = _mode_sums(points, N2, strict=False)
    betas = [beta_scalar(p) for p in points]
    n = len(points)
    xpows = {}
    ypows = {}
    acc: Dict[Tuple[int, tuple], F] = {}
    for wl2, ll, spl, _ in data:
        xc = xpows.get(ll)
        if xc is None:
            xc = xpows[ll] = x.pow_monomial(ll)
        if not xc[0]:
            continue
        for wm2, lm, _, smm in data:
            yc = ypows.get(lm)
            if yc is None:
                yc = ypows[lm] = y.pow_monomial(lm)
            q2 = wl2 + wm2 + xc[1] + yc[1]
            if q2 > N2 or not yc[0]:
                continue
            coeff = xc[0] * yc[0]
            for j in range(n):
                coeff *= spl[j] - smm[j] + betas[j]
                if not coeff:
                    break
            if coeff:
                zk = _zmerge(xc[2], yc[2])
                k = (q2, zk)
                acc[k] = acc.get(k, F(0)) + coeff
    return Series(N2, acc)


def _zmerge(a, b):
    if not a:
        return b
    if not b:
        return a
    d = dict(a)
    for v, e2 in b:
        n = d.get(v, 0) + e2
        if n:
            d[v] = n
        else:
            del d[v]
    return tuple(sorted(d.items()))


def neutral_trace(kind: str, op_tag: str, points: Sequence[Param], N) -> Series:
    """Trace over a neutral factor (single/strict partitions); eigenvalue
    sum (t^(p-1/2) - t^(-p+1/2)) +- beta per point."""
    if kind not in ("boson_neutral", "fermion_neutral"):
        raise QSeriesError("neutral_trace needs a neutral kind")
    if op_tag not in LEGAL_OPS[kind]:
        raise QSeriesError("operator %s not defined on %s" % (op_tag, kind))
    _require_scalar_points(points)
    N2 = to2(N)
    strict = kind == "fermion_neutral"
    csign = CENTRAL_SIGN[kind]
    data = _mode_sums(points, N2, strict)
    betas = [csign * beta_scalar(p) for p in points]
    n = len(points)
    acc: Dict[int, F] = {}
    for w2, _, sp, sm in data:
        coeff = F(1)
        for j in range(n):
            coeff *= sp[j] - sm[j] + betas[j]
            if not coeff:
                break
        if coeff:
            acc[w2] = acc.get(w2, F(0)) + coeff
    return Series(N2, {(k, ()): c for k, c in acc.items()})


def f1_charged_trace(z: Param, points: Sequence[Param], N) -> Series:
    """Level +1 fermionic pair trace tr z^charge q^E prod A-eigenvalues;
    charge = len(lam) - len(mu), central term -beta per point."""
    _require_scalar_points(points)
    N2 = to2(N)
    data = _mode_sums(points, N2, strict=True)
    betas = [-beta_scalar(p) for p in points]
    n = len(points)
    zpows = {}
    acc: Dict[Tuple[int, tuple], F] = {}
    for wl2, ll, spl, _ in data:
        for wm2, lm, _, smm in data:
            if wl2 + wm2 > N2:
                continue
            coeff = F(1)
            for j in range(n):
                coeff *= spl[j] - smm[j] + betas[j]
                if not coeff:
                    break
            if not coeff:
                continue
            ch = ll - lm
            zc = zpows.get(ch)
            if zc is None:
                zc = zpows[ch] = z.pow_monomial(ch)
            q2 = wl2 + wm2 + zc[1]
            if q2 > N2 or not zc[0]:
                continue
            k = (q2, zc[2])
            acc[k] = acc.get(k, F(0)) + coeff * zc[0]
    return Series(N2, acc)


# -- multi-factor duality traces -------------------------------------------


def factor_states(kind: str, N2: int):
    """All states of one factor with energy (doubled) <= N2, as
    (energy2, charge, state) triples."""
    strict = kind in ("fermion_pair", "fermion_neutral")
    singles = mod_partitions(N2, strict)
    out = []
    if kind in CHARGED:
        chsign = -1 if kind == "boson_pair" else +1  # charge of (lam, mu)
        for wl2, lam in singles:
            for wm2, mu in singles:
                if wl2 + wm2 <= N2:
                    out.append((wl2 + wm2, chsign * (len(lam) - len(mu)),
                                (lam, mu)))
    else:
        for w2, lam in singles:
            out.append((w2, 0, (lam,)))
    return out


def _subset_trace(kind: str, op_tag: str, zvar: Optional[int],
                  points: Sequence[Param], subset: Tuple[int, ...], N2: int) -> Series:
    """Single-factor trace with charge tracked in z_zvar and only the
    operators indexed by `subset` applied."""
    strict = kind in ("fermion_pair", "fermion_neutral")
    csign = CENTRAL_SIGN[kind]
    pts = [points[j] for j in subset]
    data = _mode_sums(pts, N2, strict)
    if kind in CHARGED and op_tag in ("C", "D"):
        inv = [p.inverse() for p in pts]
        datainv = _mode_sums(inv, N2, strict)
    betas = [beta_scalar(p) for p in pts]
    acc: Dict[Tuple[int, tuple], F] = {}
    if kind in CHARGED:
        chsign = -1 if kind == "boson_pair" else +1
        for il, (wl2, ll, spl, sml) in enumerate(data):
            for im, (wm2, lm, spm, smm) in enumerate(data):
                if wl2 + wm2 > N2:
                    continue
                coeff = F(1)
                for j in range(len(pts)):
                    ev = spl[j] - smm[j] + csign * betas[j]
                    if op_tag in ("C", "D"):
                        wli, _, spli, smli = datainv[il]
                        wmi, _, spmi, smmi = datainv[im]
                        evinv = spli[j] - smmi[j] + \
                            csign * beta_scalar(pts[j].inverse())
                        ev = ev - evinv
                    coeff *= ev
                    if not coeff:
                        break
                if not coeff:
                    continue
                ch = chsign * (ll - lm)
                key = (wl2 + wm2, ((zvar, 2 * ch),) if (zvar and ch) else ())
                acc[key] = acc.get(key, F(0)) + coeff
    else:
        for w2, _, sp, sm in data:
            coeff = F(1)
            for j in range(len(pts)):
                coeff *= sp[j] - sm[j] + csign * betas[j]
                if not coeff:
                    break
            if coeff:
                acc[(w2, ())] = acc.get((w2, ()), F(0)) + coeff
    return Series(N2, acc)


def duality_trace(factors: Sequence[str], op_tag: str,
                  points: Sequence[Param], N, cap: int = 4) -> Series:
    """Trace of q^L0 * prod_i z_i^(charge_i) * prod_j Op(t_j) over the tensor
    product of factors, where Op acts as the sum of per-factor actions.

    Computed by subset-decorated convolution: for each factor, its trace with
    every subset of the operators applied; then summed over assignments of
    points to factors.  Charged factor i carries charge variable z_(i+1).
    """
    if len(factors) > cap or len(points) > cap:
        raise CapExceeded("duality trace limited to %d factors/points" % cap)
    _require_scalar_points(points)
    N2 = to2(N)
    n = len(points)
    tables = []
    for i, kind in enumerate(factors):
        zvar = (i + 1) if kind in CHARGED else None
        tbl = {}
        for size in range(n + 1):
            for subset in itertools.combinations(range(n), size):
                tbl[subset] = _subset_trace(kind, op_tag, zvar, points, subset, N2)
        tables.append(tbl)
    total = Series.zero(HalfInt(twice=N2))
    for phi in itertools.product(range(len(factors)), repeat=n):
        prod = None
        for i in range(len(factors)):
            subset = tuple(j for j in range(n) if phi[j] == i)
            t = tables[i][subset]
            prod = t if prod is None else prod * t
        total = total + prod
    return total.truncate(HalfInt(twice=N2))


def duality_trace_direct(factors: Sequence[str], op_tag: str,
                         points: Sequence[Param], N) -> Series:
    """Tensor-product enumeration cross-check (tiny truncations only)."""
    _require_scalar_points(points)
    N2 = to2(N)
    per_factor = [factor_states(kind, N2) for kind in factors]
    acc: Dict[Tuple[int, tuple], F] = {}
    for combo in itertools.product(*per_factor):
        e2 = sum(st[0] for st in combo)
        if e2 > N2:
            continue
        coeff = F(1)
        for j, p in enumerate(points):
            ev = F(0)
            for kind, (_, _, state) in zip(factors, combo):
                ev += _scalar_eig(kind, state, op_tag, p)
            coeff *= ev
            if not coeff:
                break
        if not coeff:
            continue
        zs = {}
        for i, (kind, (_, ch, _)) in enumerate(zip(factors, combo)):
            if kind in CHARGED and ch:
                zs[i + 1] = zs.get(i + 1, 0) + 2 * ch
        key = (e2, tuple(sorted((v, e) for v, e in zs.items() if e)))
        acc[key] = acc.get(key, F(0)) + coeff
    return Series(N2, acc)


def _scalar_eig(kind: str, state, op_tag: str, point: Param) -> F:
    root = point.scalar_pow(F(1, 2))
    csign = CENTRAL_SIGN[kind]

    def eig_a(lam, mu, t_root, beta):
        v = csign * beta
        for p in lam:
            v += t_root ** (2 * p - 1)
        for p in mu:
            v -= t_root ** (1 - 2 * p)
        return v

    if kind in CHARGED:
        lam, mu = state
        v = eig_a(lam, mu, root, beta_scalar(point))
        if op_tag in ("C", "D"):
            inv = point.inverse()
            v -= eig_a(lam, mu, 1 / root, beta_scalar(inv))
        return v
    lam = state[0]
    v = csign * beta_scalar(point)
    for p in lam:
        v += root ** (2 * p - 1) - root ** (1 - 2 * p)
    return v
