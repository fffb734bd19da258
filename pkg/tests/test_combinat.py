"""Partitions, Weyl groups, character numerators, labels."""

import random
from fractions import Fraction

import pytest

from qfock.combinat import (
    WeylElement,
    char_numerator,
    gen_partitions,
    highest_weight_label,
    k_vector,
    partitions,
    partitions_of,
    rho_vector,
    weyl_group,
    weyl_zsum,
)
from qfock.qseries import CapExceeded, Series, pochhammer_n, Param, series_equal

F = Fraction


def test_partition_counts():
    assert len(list(partitions_of(4))) == 5
    assert set(partitions_of(4, max_length=2)) == {(4,), (3, 1), (2, 2)}
    assert len([p for p in partitions_of(4) if len(p) == 2]) == 2
    assert set(partitions_of(5, strict=True)) == {(5,), (4, 1), (3, 2)}
    assert list(partitions_of(0)) == [()]
    assert len(list(partitions(6))) == sum(
        len(list(partitions_of(w))) for w in range(7))


def test_length_generating_function():
    # Lemma-style check: sum over length-l partitions of q^|lambda| = q^l/(q)_l
    N = 15
    for l in range(1, 6):
        lhs = Series.zero(N)
        for lam in partitions(N, max_length=l):
            if len(lam) == l:
                lhs = lhs + Series.monomial(1, sum(lam), N)
        rhs = Series.monomial(1, l, N) * pochhammer_n(Param(1, 1), l, N).invert()
        assert series_equal(lhs, rhs)


def test_gen_partitions():
    got = set(gen_partitions(2, 1))
    assert got == {(1, 1), (1, 0), (1, -1), (0, 0), (0, -1), (-1, -1)}


def test_weyl_cardinalities_and_signs():
    a = list(weyl_group("A", 3))
    assert len(a) == 6 and sum(s for _, s in a) == 0
    assert len(list(weyl_group("BC", 2))) == 8
    assert len(list(weyl_group("D", 3))) == 24
    for l in (1, 2, 3):
        assert len(list(weyl_group("BC", l))) == 2 ** l * _fact(l)
        assert len(list(weyl_group("D", l))) == 2 ** max(l - 1, 0) * _fact(l)
    with pytest.raises(CapExceeded):
        list(weyl_group("BC", 7))


def _fact(n):
    out = 1
    for k in range(2, n + 1):
        out *= k
    return out


def test_weyl_d_even_flips_and_closure():
    els = [w for w, _ in weyl_group("D", 3)]
    assert all(w.signs.count(-1) % 2 == 0 for w in els)
    rng = random.Random(7)
    keyed = {(w.perm, w.signs) for w in els}
    for _ in range(20):
        u, v = rng.choice(els), rng.choice(els)
        c = u.compose(v)
        assert (c.perm, c.signs) in keyed
        assert c.sign == u.sign * v.sign


def test_k_vector():
    rho = rho_vector("A", 2)  # (1, 0)
    ident = WeylElement((0, 1), (1, 1), "A")
    swap = WeylElement((1, 0), (1, 1), "A")
    assert k_vector([0, 0], ident, rho) == [0, 0]
    assert k_vector([0, 0], swap, rho) == [1, -1]
    flip = WeylElement((0,), (-1,), "BC")
    assert k_vector([2], flip, rho_vector("B", 1)) == [3]
    assert k_vector([5, -2], ident, rho) == [5, -2]


def test_weyl_denominator_type_d():
    # (1/2)|z_j^(l-i)+z_j^(-(l-i))| = sum over W(D_l) of sign * z^(sigma rho)
    for l in (2, 3):
        det = char_numerator("o_even", [0] * l, l)
        lhs = det.scale(F(1, 2))
        rhs = weyl_zsum("D", rho_vector("A", l))
        assert series_equal(lhs, rhs)


def test_weyl_denominator_types_b_c():
    for l in (1, 2, 3):
        det_b = char_numerator("osp_b", [0] * l, l)
        assert series_equal(det_b, weyl_zsum("BC", rho_vector("B", l)))
        det_c = char_numerator("sp", [0] * l, l)
        assert series_equal(det_c, weyl_zsum("BC", rho_vector("C", l)))


def test_char_numerator_examples():
    assert char_numerator("gl", [3], 1).terms == {(0, ((1, 6),)): F(1)}
    s = char_numerator("sp", [2], 1)
    assert s.terms == {(0, ((1, 6),)): F(1), (0, ((1, -6),)): F(-1)}
    s = char_numerator("o_even", [0], 1)
    assert s.terms == {(0, ()): F(2)}
    s = char_numerator("o_even", [2], 1)
    assert s.terms == {(0, ((1, 4),)): F(1), (0, ((1, -4),)): F(1)}


def test_char_numerator_alternating():
    s = char_numerator("gl", [2, 1, 0], 3)
    swapped = Series(0, {(q2, tuple(sorted(
        ((2 if v == 1 else 1 if v == 2 else v), e) for v, e in zk))): c
        for (q2, zk), c in s.terms.items()})
    assert series_equal(swapped, -s)


def test_dominant_coefficient_o_even():
    # coefficient of prod z_i^(lam_i+l-i) is 2/c_lambda
    l = 2
    for lam, expect in (((0, 0), 2), ((1, 0), 2), ((2, 1), 1)):
        s = char_numerator("o_even", lam, l)
        key = (0, tuple(sorted((i + 1, 2 * (lam[i] + l - 1 - i))
                               for i in range(l) if lam[i] + l - 1 - i)))
        assert s.terms.get(key, 0) == expect


def test_labels():
    assert highest_weight_label("a", -1, [0]) == "-1*L0^a"
    assert highest_weight_label("c", F(3, 2), []) == "3/2*L0^c"
    assert highest_weight_label("d", -2, [0, 0]) == "-4*L0^d"
    assert highest_weight_label("d", F(-3, 2), [1, 0]) == "-4*L0^d + 1*L1^d"
    lbl = highest_weight_label("c", -2, [1, 0])
    assert "verbatim" in lbl and lbl.startswith("-3*L0^c + 1*L0^c")
    assert highest_weight_label("c", F(-5, 2), [2, 1]) == \
        "-9/2*L0^c + 1*L1^c + 1*L2^c"
