from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from weylcohom.errors import InvalidRank
from weylcohom.rootsys import RootSystemSpec, root_system

ALL_TYPES = [("A", 1), ("A", 2), ("A", 3), ("A", 5), ("B", 2), ("B", 3), ("C", 2), ("C", 3), ("C", 4),
             ("D", 3), ("D", 4), ("D", 5), ("G", 2), ("F", 4)]

POSITIVE_COUNT = {"A": lambda n: n * (n + 1) // 2, "B": lambda n: n * n, "C": lambda n: n * n,
                  "D": lambda n: n * (n - 1), "G": lambda n: 6, "F": lambda n: 24}
COXETER = {"A": lambda n: n + 1, "B": lambda n: 2 * n, "C": lambda n: 2 * n, "D": lambda n: 2 * n - 2,
           "G": lambda n: 6, "F": lambda n: 12}


@pytest.mark.parametrize("family,rank", [("A", 0), ("B", 1), ("C", 1), ("D", 2), ("G", 3), ("F", 3), ("E", 6)])
def test_invalid_rank(family, rank):
    with pytest.raises(InvalidRank):
        RootSystemSpec(family, rank)


@pytest.mark.parametrize("family,rank", ALL_TYPES)
def test_standard_tables(family, rank):
    rs = root_system(family, rank)
    assert len(rs.positive_roots) == POSITIVE_COUNT[family](rank)
    assert rs.coxeter_number == COXETER[family](rank)
    assert rs.rho.fund == (1,) * rank
    assert [b.root for b in rs.positive_roots[:rank]] == [a.root for a in rs.simple_roots]
    heights = [rs.height(b) for b in rs.positive_roots]
    assert heights == sorted(heights)


@pytest.mark.parametrize("family,rank", ALL_TYPES)
def test_positive_roots_sum_to_two_rho(family, rank):
    rs = root_system(family, rank)
    total = rs.zero()
    for b in rs.positive_roots:
        total = total + b
    assert total == 2 * rs.rho
    assert total.fund == (2,) * rank


@pytest.mark.parametrize("family,rank", ALL_TYPES)
def test_highest_root_pairings(family, rank):
    rs = root_system(family, rank)
    top = rs.highest_root_index
    for k, b in enumerate(rs.positive_roots):
        val = rs.pairing(b, top)
        if k == top:
            assert val == 2
        else:
            assert val in (0, 1)


@pytest.mark.parametrize("family,rank", ALL_TYPES)
def test_root_denominators_divide_det(family, rank):
    rs = root_system(family, rank)
    for i in range(1, rank + 1):
        for c in rs.omega(i).root:
            assert rs.det % c.denominator == 0


def test_build_examples():
    a2 = root_system("A", 2)
    assert len(a2.positive_roots) == 3 and a2.coxeter_number == 3
    assert a2.highest_root.fund == (1, 1)
    c2 = root_system("C", 2)
    assert len(c2.positive_roots) == 4 and c2.coxeter_number == 4
    assert c2.highest_root.fund == (2, 0)
    a3 = root_system("A", 3)
    assert a3.omega(2).root == (Fraction(1, 2), 1, Fraction(1, 2))


def test_highest_short_root():
    assert root_system("C", 3).highest_short_root.fund == (0, 1, 0)
    assert root_system("B", 3).highest_short_root.fund == (1, 0, 0)
    assert root_system("A", 3).highest_short_root == root_system("A", 3).highest_root


def test_pairing_examples():
    a2 = root_system("A", 2)
    assert a2.pairing(a2.rho, a2.highest_root_index) == 2
    c2 = root_system("C", 2)
    assert c2.pairing(c2.omega(1), c2.highest_root_index) == 1
    a3 = root_system("A", 3)
    assert a3.pairing(2 * a3.rho, 1) == 2


def test_dual_weight_examples():
    a3 = root_system("A", 3)
    assert a3.dual_weight(a3.omega(1)) == a3.omega(3)
    c2 = root_system("C", 2)
    for f in [(1, 0), (0, 1), (3, 2), (-1, 4)]:
        assert c2.dual_weight(c2.weight(f)) == c2.weight(f)
    a2 = root_system("A", 2)
    assert a2.dual_weight(a2.zero()) == a2.zero()


@pytest.mark.parametrize("family,rank", ALL_TYPES)
def test_dual_is_involution_fixing_rho(family, rank):
    rs = root_system(family, rank)
    assert rs.dual_weight(rs.rho) == rs.rho
    for i in range(1, rank + 1):
        d = rs.dual_weight(rs.omega(i))
        assert rs.is_dominant(d)
        assert rs.dual_weight(d) == rs.omega(i)


def test_coeff_stats():
    a3 = root_system("A", 3)
    coeffs, top, m = a3.coeff_stats(2 * a3.rho)
    assert coeffs == (3, 4, 3) and top == 4 and m == 2
    coeffs, top, m = a3.coeff_stats(a3.omega(2))
    assert m == 2 and top == 1
    a2 = root_system("A", 2)
    assert a2.coeff_stats(a2.zero()) == ((0, 0), 0, 2)


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_coeff_stats_fundamental_weights_type_a(n):
    rs = root_system("A", n)
    for j in range(1, n + 1):
        n_j = j * (n + 1 - j)
        containing = [b for b in rs.positive_roots if b.root[j - 1] > 0]
        assert len(containing) == n_j
        total = rs.zero()
        for b in containing:
            total = total + b
        assert total == (n + 1) * rs.omega(j)
        _, top, m = rs.coeff_stats(rs.omega(j))
        assert m == j and top == Fraction(n_j, n + 1)
        assert rs.coeff_stats(2 * rs.rho)[0][j - 1] == n_j


def test_dominance_height_lattice():
    a2 = root_system("A", 2)
    a1 = a2.alpha(1)
    assert not a2.is_dominant(a1) and a2.height(a1) == 1 and a2.in_root_lattice(a1)
    a3 = root_system("A", 3)
    lam = (7 - 4) * a3.omega(2)
    assert a3.is_dominant(lam)
    assert lam.root == (Fraction(3, 2), 3, Fraction(3, 2))
    assert not a3.in_root_lattice(lam)
    assert root_system("C", 2).is_dominant(root_system("C", 2).omega(1))


@pytest.mark.parametrize("family,rank", [("A", 3), ("B", 3), ("C", 4), ("D", 4), ("G", 2), ("F", 4)])
@settings(max_examples=60, deadline=None)
@given(data=st.data())
def test_coordinate_round_trip(family, rank, data):
    rs = root_system(family, rank)
    fund = data.draw(st.lists(st.integers(-20, 20), min_size=rank, max_size=rank))
    w = rs.weight(fund)
    assert rs.from_root(w.root) == w
    rs.check(w)
