"""Partitions, signed-permutation Weyl groups, rho-vectors, characters.

Weyl elements act on weight vectors by (sigma v)_i = signs[i] * v[perm[i]];
the sign of an element is the determinant of its signed permutation matrix.
Character numerators are returned as z-Laurent polynomials (Series with no
q-dependence) -- denominators are never divided out, every identity downstream
is stated in numerator form.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, List, Optional, Sequence, Tuple

from .qseries import CapExceeded, HalfInt, QSeriesError, Series, to2

WEYL_CAP = 6


# -- partitions -------------------------------------------------------------


def partitions(max_weight: int, max_length: Optional[int] = None,
               strict: bool = False) -> Iterator[Tuple[int, ...]]:
    """All partitions (as weakly/strictly decreasing tuples) of weight
    0..max_weight, with at most max_length parts."""
    for w in range(max_weight + 1):
        yield from partitions_of(w, max_length, strict=strict)


def partitions_of(weight: int, max_length: Optional[int] = None,
                  strict: bool = False) -> Iterator[Tuple[int, ...]]:
    """Partitions of exactly the given weight."""

    def rec(remaining: int, largest: int, room: Optional[int]):
        if remaining == 0:
            yield ()
            return
        if room is not None and room == 0:
            return
        top = min(largest, remaining)
        for first in range(top, 0, -1):
            nxt = first - 1 if strict else first
            for rest in rec(remaining - first, nxt,
                            None if room is None else room - 1):
                yield (first,) + rest

    yield from rec(weight, weight, max_length)


def gen_partitions(depth: int, bound: int) -> Iterator[Tuple[int, ...]]:
    """Weakly decreasing integer depth-tuples with entries in [-bound, bound]."""
    def rec(k: int, top: int):
        if k == 0:
            yield ()
            return
        for first in range(top, -bound - 1, -1):
            for rest in rec(k - 1, first):
                yield (first,) + rest

    yield from rec(depth, bound)


def set_partitions(items: Sequence) -> Iterator[List[tuple]]:
    """All partitions of the item sequence into nonempty unordered blocks."""
    items = list(items)
    if not items:
        yield []
        return
    head, rest = items[0], items[1:]
    for part in set_partitions(rest):
        for i in range(len(part)):
            yield part[:i] + [(head,) + part[i]] + part[i + 1:]
        yield [(head,)] + part


# -- Weyl groups ------------------------------------------------------------


@dataclass(frozen=True)
class WeylElement:
    perm: Tuple[int, ...]          # 0-based permutation of range(l)
    signs: Tuple[int, ...]         # entries +-1; type A: all +1
    wtype: str                     # 'A', 'BC' or 'D'

    @property
    def l(self) -> int:
        return len(self.perm)

    @property
    def sign(self) -> int:
        s = _perm_sign(self.perm)
        for e in self.signs:
            s *= e
        return s

    def act(self, v: Sequence[Fraction]) -> List[Fraction]:
        """(sigma v)_i = signs[i] * v[perm[i]]."""
        return [self.signs[i] * v[self.perm[i]] for i in range(self.l)]

    def compose(self, other: "WeylElement") -> "WeylElement":
        perm = tuple(other.perm[self.perm[i]] for i in range(self.l))
        signs = tuple(self.signs[i] * other.signs[self.perm[i]]
                      for i in range(self.l))
        return WeylElement(perm, signs, self.wtype)


def _perm_sign(perm: Sequence[int]) -> int:
    seen = [False] * len(perm)
    sign = 1
    for i in range(len(perm)):
        if seen[i]:
            continue
        j, clen = i, 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            clen += 1
        if clen % 2 == 0:
            sign = -sign
    return sign


def weyl_group(wtype: str, l: int, cap: int = WEYL_CAP) -> Iterator[Tuple[WeylElement, int]]:
    """Yield (element, sign) over W(A_{l-1})=S_l, W(B_l)=W(C_l), or W(D_l)."""
    if l < 1:
        raise QSeriesError("rank must be >= 1")
    if l > cap:
        raise CapExceeded("Weyl rank %d exceeds cap %d" % (l, cap))
    if wtype not in ("A", "BC", "D"):
        raise QSeriesError("unknown Weyl type %r" % wtype)
    for perm in itertools.permutations(range(l)):
        if wtype == "A":
            w = WeylElement(perm, (1,) * l, wtype)
            yield w, w.sign
            continue
        for signs in itertools.product((1, -1), repeat=l):
            if wtype == "D" and signs.count(-1) % 2:
                continue
            w = WeylElement(perm, signs, wtype)
            yield w, w.sign


def rho_vector(kind: str, l: int) -> List[Fraction]:
    """rho (type A/D engine): l-i; rho_B: l-i+1/2; rho_C: l-i+1 (i=1..l)."""
    off = {"A": Fraction(0), "B": Fraction(1, 2), "C": Fraction(1)}[kind]
    return [Fraction(l - i) + off for i in range(1, l + 1)]


def k_vector(lam: Sequence[int], sigma: WeylElement,
             rho: Sequence[Fraction]) -> List[int]:
    """k_i = lambda_i + rho_i - (sigma rho)_i; always integral."""
    if not (len(lam) == sigma.l == len(rho)):
        raise QSeriesError("dimension mismatch")
    srho = sigma.act([Fraction(r) for r in rho])
    out = []
    for i in range(sigma.l):
        k = Fraction(lam[i]) + Fraction(rho[i]) - srho[i]
        if k.denominator != 1:
            raise QSeriesError("non-integral k-vector entry %s" % k)
        out.append(int(k))
    return out


def weyl_zsum(wtype: str, rho: Sequence[Fraction], cap: int = WEYL_CAP) -> Series:
    """sum_sigma sign(sigma) * prod_i z_i^((sigma rho)_i) as a z-polynomial."""
    l = len(rho)
    acc = Series.zero(0)
    for w, sgn in weyl_group(wtype, l, cap):
        srho = w.act([Fraction(r) for r in rho])
        acc = acc + Series.monomial(sgn, 0, 0,
                                    {i + 1: srho[i] for i in range(l)})
    return acc


# -- character numerators ---------------------------------------------------


def char_numerator(kind: str, lam: Sequence[int], l: int) -> Series:
    """Determinant numerator of a classical character as a z-polynomial.

    kind 'gl':    |z_j^(lam_i+l-i)|
    kind 'sp':    |z_j^(a_i) - z_j^(-a_i)|, a_i = lam_i+l-i+1
    kind 'osp_b': |z_j^(a_i) - z_j^(-a_i)|, a_i = lam_i+l-i+1/2
    kind 'o_even':|z_j^(a_i) + z_j^(-a_i)|, a_i = lam_i+l-i
    (raw determinant; the dominant-monomial coefficient carries the 2/c_lambda
    normalization for 'o_even').
    """
    lam = tuple(lam) + (0,) * (l - len(lam))
    if kind == "gl":
        exps = [Fraction(lam[i] + l - 1 - i) for i in range(l)]
        plus_sign = None
    elif kind == "sp":
        exps = [Fraction(lam[i] + l - i) for i in range(l)]
        plus_sign = -1
    elif kind == "osp_b":
        exps = [Fraction(lam[i] + l - 1 - i) + Fraction(1, 2) for i in range(l)]
        plus_sign = -1
    elif kind == "o_even":
        exps = [Fraction(lam[i] + l - 1 - i) for i in range(l)]
        plus_sign = +1
    else:
        raise QSeriesError("unknown character kind %r" % kind)

    acc = Series.zero(0)
    for perm in itertools.permutations(range(l)):
        sgn = _perm_sign(perm)
        # product over columns j of entry(i=perm[j], j)
        term = Series.const(sgn, 0)
        for j in range(l):
            a = exps[perm[j]]
            if plus_sign is None:
                entry = Series.monomial(1, 0, 0, {j + 1: a})
            else:
                entry = Series.monomial(1, 0, 0, {j + 1: a}) + \
                    Series.monomial(plus_sign, 0, 0, {j + 1: -a})
            term = term * entry
        acc = acc + term
    return acc


# -- highest-weight labels (display-only metadata) --------------------------


def _fmt(terms: List[Tuple[Fraction, str]]) -> str:
    bits = []
    for c, sym in terms:
        if c == 0:
            continue
        cs = str(c)
        bits.append("%s*%s" % (cs, sym) if sym else cs)
    return " + ".join(bits) if bits else "0"


def highest_weight_label(algebra: str, level: Fraction, lam: Sequence[int],
                         det_twist: bool = False) -> str:
    """The displayed highest weight Lambda(lambda) over fundamental weights.

    Display-only metadata.  The c-type negative-integer-level label repeats
    the 0 subscript where the surrounding pattern suggests a running index;
    it is reproduced verbatim, with a warning suffix.
    """
    level = Fraction(level)
    lam = list(lam)

    if algebra == "a":
        l = len(lam)
        if level != -l:
            raise QSeriesError("a-type labels exist at level -l only")
        pos = [i for i, v in enumerate(lam) if v > 0]  # 0-based
        terms = [(Fraction(lam[-1] - lam[0] - l), "L0^a")]
        if pos:
            i = pos[-1] + 1  # 1-based index of last positive entry
            for k in range(1, i):
                terms.append((Fraction(lam[k - 1] - lam[k]), "L%d^a" % l))
            terms.append((Fraction(lam[i - 1]), "L%d^a" % i))
        return _fmt(terms)

    if algebra == "c":
        j = len([v for v in lam if v > 0])
        if level > 0:  # level l - 1/2
            l = level + Fraction(1, 2)
            terms = [(l - Fraction(1, 2) - j, "L0^c")]
            terms += [(Fraction(1), "L%d^c" % lam[k]) for k in range(j)]
            return _fmt(terms)
        if level.denominator == 1:  # level -l
            l = -level
            la1 = lam[0] if lam else 0
            if not det_twist:
                terms = [(Fraction(-l - la1), "L0^c")]
                ext = lam + [0]
                for k in range(1, j + 1):
                    terms.append((Fraction(ext[k - 1] - ext[k]), "L0^c"))
            else:
                terms = [(Fraction(-l - la1), "L0^c")]
                for k in range(1, j):
                    terms.append((Fraction(lam[k - 1] - lam[k]), "L0^c"))
                terms.append((Fraction(lam[j - 1] - 1), "L%d^c" % j))
                terms.append((Fraction(1), "L%d^c" % (2 * int(l) - j)))
            return _fmt(terms) + "  [verbatim; the repeated 0 subscript likely means a running index]"
        # level -l - 1/2: leading coefficient -l - lambda_1 - 1/2 = level - lambda_1
        l = int(-level - Fraction(1, 2))
        la1 = lam[0] if lam else 0
        if not det_twist:
            body = [(level - la1, "L0^c")]
            ext = lam + [0]
            for k in range(1, j + 1):
                body.append((Fraction(ext[k - 1] - ext[k]), "L%d^c" % k))
            return _fmt(body)
        body = [(level - la1, "L0^c")]
        for k in range(1, j):
            body.append((Fraction(lam[k - 1] - lam[k]), "L%d^c" % k))
        body.append((Fraction(lam[j - 1] - 1), "L%d^c" % j))
        body.append((Fraction(1), "L%d^c" % (2 * l - j + 1)))
        return _fmt(body)

    if algebra == "d":
        l = len(lam)
        ext = lam + [0]
        la1 = lam[0] if lam else 0
        la2 = lam[1] if len(lam) > 1 else 0
        if level.denominator == 1:  # level -l
            terms = [(Fraction(-2 * l - la1 - la2), "L0^d")]
        else:  # level -l + 1/2
            terms = [(Fraction(-2 * l + 1 - la1 - la2), "L0^d")]
        for k in range(1, l + 1):
            terms.append((Fraction(ext[k - 1] - ext[k]), "L%d^d" % k))
        return _fmt(terms)

    raise QSeriesError("unknown algebra %r" % algebra)
