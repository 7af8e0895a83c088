import random
from fractions import Fraction
from itertools import combinations

import pytest

from bdsweyl.rootsys import ROOT_COUNTS, build, cartan_matrix, format_root

ALL_TYPES = [("A", range(1, 9)), ("B", range(2, 9)), ("C", range(2, 9)),
             ("D", range(3, 9)), ("E", range(6, 9)), ("F", [4]), ("G", [2])]


def all_systems(max_rank=8):
    for letter, ranks in ALL_TYPES:
        for n in ranks:
            if n <= max_rank:
                yield build(letter, n)


def test_root_counts_match_closed_forms():
    for rs in all_systems():
        assert len(rs.roots) == ROOT_COUNTS[rs.type_letter](rs.rank)
        assert len(rs.positive_roots) * 2 == len(rs.roots)


def test_b3_example():
    rs = build("B", 3)
    assert len(rs.roots) == 18
    assert rs.theta == (1, 2, 2)
    assert rs.marks == (1, 2, 2)


def test_a1_trivial():
    rs = build("A", 1)
    assert set(rs.roots) == {(1,), (-1,)}
    assert rs.theta == (1,)


def test_g2_count_and_marks():
    rs = build("G", 2)
    assert len(rs.roots) == 12
    assert rs.theta == (3, 2)


def test_invalid_types_rejected():
    for letter, rank in [("D", 2), ("B", 1), ("E", 5), ("E", 9), ("F", 3), ("G", 3), ("X", 4), ("A", 0)]:
        with pytest.raises(ValueError):
            build(letter, rank)


def test_inner_products():
    b3 = build("B", 3)
    a3 = b3.simple_root(3)
    assert b3.inner(a3, a3) == 1  # short root
    a2 = build("A", 2)
    assert a2.inner(a2.simple_root(1), a2.simple_root(2)) == -1
    for rs in all_systems(max_rank=6):
        assert rs.inner(rs.theta, rs.theta) == 2


def test_root_lengths_and_dalpha():
    for rs in all_systems(max_rank=6):
        for a in rs.roots:
            sq = rs.inner(a, a)
            assert sq in (Fraction(2), Fraction(1), Fraction(2, 3))
            assert rs.d_alpha(a) * sq == 2


def test_comark_examples():
    b3 = build("B", 3)
    a0 = (0, 1, 2)  # alpha_2 + 2 alpha_3
    assert b3.is_root(a0)
    assert b3.comark(3, a0) == 1
    assert b3.comark(2, a0) == 1
    assert b3.comark(3, b3.theta) == 1
    for rs in all_systems(max_rank=5):
        for i in rs.nodes:
            cor = rs.coroot_coordinates(rs.simple_root(i))
            assert cor == tuple(1 if k == i else 0 for k in rs.nodes)


def test_comark_rejects_non_root():
    b3 = build("B", 3)
    with pytest.raises(ValueError):
        b3.comark(1, (1, 0, 1))


def test_comark_additive_on_equal_length_triples():
    for rs in [build("B", 3), build("C", 3), build("G", 2), build("F", 4)]:
        pos = rs.positive_roots
        for a, b in combinations(pos, 2):
            c = tuple(x + y for x, y in zip(a, b))
            if not rs.is_root(c):
                continue
            if rs.inner(a, a) == rs.inner(b, b) == rs.inner(c, c):
                for i in rs.nodes:
                    assert rs.comark(i, c) == rs.comark(i, a) + rs.comark(i, b)


def test_reflections():
    b3 = build("B", 3)
    assert b3.reflect(3, b3.simple_root(3)) == (0, 0, -1)
    assert b3.reflect(3, b3.simple_root(2)) == (0, 1, 2)  # <a2, a3^vee> = -2
    assert b3.apply_word((), (1, 1, 1)) == (1, 1, 1)
    for rs in all_systems(max_rank=5):
        rng = random.Random(11)
        for _ in range(20):
            a = rng.choice(rs.roots)
            i = rng.randrange(1, rs.rank + 1)
            assert rs.reflect(i, rs.reflect(i, a)) == a


def test_longest_parabolic_word():
    b3 = build("B", 3)
    assert b3.longest_parabolic_word(()) == ()
    a2 = build("A", 2)
    assert a2.longest_parabolic_word([1]) == (1,)
    w = b3.longest_parabolic_word([1, 2])
    img = b3.apply_word(w, b3.simple_root(1))
    assert img in {(-1, 0, 0), (0, -1, 0)}
    for rs in all_systems(max_rank=6):
        nodes = list(rs.nodes)
        for J in ([nodes[0]], nodes[:-1], nodes):
            w = rs.longest_parabolic_word(J)
            images = {rs.apply_word(w, rs.simple_root(i)) for i in J}
            assert images == {tuple(-x for x in rs.simple_root(i)) for i in J}


def test_weyl_dim_examples():
    for n in range(2, 7):
        assert build("B", n).weyl_dim({n: 1}) == 2 ** n
    assert build("B", 3).weyl_dim({}) == 1
    for n in range(4, 7):
        for i in range(1, n - 1):
            from math import comb
            assert build("D", n).weyl_dim({i: 1}) == comb(2 * n, i)
    # adjoint of A2 has dimension 8, natural has 3
    a2 = build("A", 2)
    assert a2.weyl_dim({1: 1, 2: 1}) == 8
    assert a2.weyl_dim({1: 1}) == 3
    assert build("G", 2).weyl_dim({1: 1}) == 7
    with pytest.raises(ValueError):
        a2.weyl_dim({1: -1})


def test_weyl_dim_monotone_on_samples():
    rng = random.Random(5)
    for rs in [build("A", 3), build("B", 3), build("C", 4), build("D", 4)]:
        for _ in range(10):
            lam = {i: rng.randrange(0, 3) for i in rs.nodes}
            mu = {i: rng.randrange(0, 2) for i in rs.nodes}
            if all(v == 0 for v in mu.values()):
                mu[rng.randrange(1, rs.rank + 1)] = 1
            both = {i: lam.get(i, 0) + mu.get(i, 0) for i in rs.nodes}
            assert rs.weyl_dim(both) > rs.weyl_dim(lam)


def test_cartan_matrix_shapes():
    c = cartan_matrix("G", 2)
    assert c == ((2, -3), (-1, 2))
    c = cartan_matrix("B", 3)
    assert c[2][1] == -2 and c[1][2] == -1
    c = cartan_matrix("C", 3)
    assert c[2][1] == -1 and c[1][2] == -2


def test_format_root():
    assert format_root((0, 1, 2)) == "a2+2a3"
    assert format_root((0, 0, 0)) == "0"
    assert format_root((-1, 1, 0)) == "-a1+a2"
