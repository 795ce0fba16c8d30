from fractions import Fraction

import pytest

from fsdual.constructions import gaussian_example, lattice_example, paley_self_dual, tito
from fsdual.duality import SetInGroup, is_formally_self_dual
from fsdual.errors import DomainError
from fsdual.evenset import (GroupAlgebraElement, SubgroupCombination, SubgroupTables,
                            canonical_fsd_coefficients, canonical_symmetry_holds,
                            dual_side_combination, even_decomposition, group_algebra_product,
                            solve_rational, ss_inverse, zero_sum_check)
from fsdual.fields import OddField
from fsdual.groups import Group, Subgroup
from fsdual.pairing import standard_pairing


def test_group_algebra_basics():
    G = Group((4,))
    a = GroupAlgebraElement.indicator(G, [(0,), (1,)])
    prod = group_algebra_product(a, a.reversed())
    assert prod.dense() == [2, 1, 0, 1]
    assert (prod - prod).is_zero()
    assert group_algebra_product(a, GroupAlgebraElement.one(G)) == a


def test_ss_inverse_tito():
    P, S = tito()
    assert ss_inverse(S).dense() == [2, 1, 0, 1]


def test_tito_decomposition():
    P, S = tito()
    mu = even_decomposition(S)
    G = P.group
    # 2 {0} - {0,2} + Z4
    assert mu.coefficient(Subgroup.trivial(G)) == 2
    assert mu.coefficient(Subgroup.from_indices(G, [0, 2])) == -1
    assert mu.coefficient(Subgroup.whole(G)) == 1
    lam = canonical_fsd_coefficients(P, S, mu)
    assert lam.as_map() == mu.as_map()
    assert canonical_symmetry_holds(P, S, lam) == (True, True)
    assert zero_sum_check(P, S, mu)


def test_not_even():
    G = Group((9,))
    S = SetInGroup.of(G, [(0,), (1,), (3,)])
    assert even_decomposition(S) is None


def test_zero_sum_false_for_non_self_dual():
    G = Group((2, 2, 2, 2))
    P = standard_pairing(G)
    S = SetInGroup.from_indices(G, [0, 1, 2, 4])
    mu = even_decomposition(S)
    assert mu is not None
    assert is_formally_self_dual(P, S).verdict is False
    assert zero_sum_check(P, S, mu) is False


def test_size_required():
    G = Group((4,))
    S = SetInGroup.of(G, [(0,)])
    with pytest.raises(DomainError):
        canonical_fsd_coefficients(standard_pairing(G), S, even_decomposition(S))


@pytest.mark.parametrize("make", [tito, lambda: lattice_example(3),
                                  lambda: gaussian_example(5, 2),
                                  lambda: paley_self_dual(OddField(3, 1), 1, 2)[:2]])
def test_canonical_symmetric(make):
    P, S = make()
    tab = SubgroupTables(P)
    mu = even_decomposition(S, tab.subgroups)
    lam = canonical_fsd_coefficients(P, S, mu, tab)
    assert canonical_symmetry_holds(P, S, lam, tab) == (True, True)
    # independent of which decomposition we start from: lam expands to S S^(-1)
    assert lam.expand(P.group) == ss_inverse(S)
    # dual side for T = S
    assert dual_side_combination(P, S, lam).expand(P.group) == ss_inverse(S)


def test_paley_has_nontrivial_sigma():
    Pc, S, _, _ = paley_self_dual(OddField(3, 1), 1, 2)
    assert SubgroupTables(Pc).sigma_order > 1


def test_solve_rational():
    assert solve_rational([[2, 1], [1, 1]], [3, 2]) == [Fraction(1), Fraction(1)]
    assert solve_rational([[1, 1], [1, 1]], [1, 2]) is None
    assert solve_rational([[1, 2], [2, 4]], [1, 2]) == [Fraction(1), Fraction(0)]


def test_combination_distinct():
    G = Group((2,))
    H = Subgroup.trivial(G)
    with pytest.raises(DomainError):
        SubgroupCombination.of([(H, 1), (H, 2)])
