import numpy as np
import pytest

from fsdual.constructions import (dual_set_Dstar, gauss_sum_signs, gaussian_example, i_sqrt_q,
                                  is_relative_difference_set, is_skew_hadamard, lattice_example,
                                  paley_self_dual, paley_set, pi_matrix, shds_pair,
                                  sporadic_order64, tito, trace_pairing)
from fsdual.cyclotomic import CyclotomicInt
from fsdual.duality import SetInGroup, is_formally_self_dual, is_primitive
from fsdual.errors import DomainError
from fsdual.fields import OddField
from fsdual.groups import Group, Subgroup


def test_tito_lattice():
    P, S = tito()
    assert S.members == ((0,), (1,))
    P, S = lattice_example(3)
    assert [m[0] for m in S.members] == [0, 3, 6]
    with pytest.raises(DomainError):
        lattice_example(0)


def test_quadratic_graph_is_rds():
    # {(x, x^2)} in Z_5^2 relative to {(0, y)}: a (5, 5, 5, 1) relative difference set
    G = Group((5, 5))
    S = SetInGroup.of(G, [(x, x * x % 5) for x in range(5)])
    N = Subgroup.generated_by(G, [(0, 1)])
    assert is_relative_difference_set(S, N) == (True, 1)
    # the Gaussian example is a subgroup, so it is not one
    _, S2 = gaussian_example(5, 2)
    assert is_relative_difference_set(S2, N) == (False, None)


@pytest.mark.parametrize("p,m", [(3, 1), (7, 1), (11, 1), (19, 1), (3, 3)])
def test_paley_skew_hadamard(p, m):
    F = OddField(p, m)
    D = paley_set(F)
    assert len(D) == (F.q - 1) // 2
    assert is_skew_hadamard(D)
    g = i_sqrt_q(F)
    assert g * g == CyclotomicInt.from_int(p, -F.q)
    assert g.to_complex().imag > 0


def test_paley_wrong_q():
    with pytest.raises(DomainError):
        paley_set(OddField(5))


def test_dstar_cases():
    for p, m, neg in [(3, 1, False), (7, 1, False), (11, 1, False), (3, 3, True)]:
        F = OddField(p, m)
        D = paley_set(F)
        Ds = dual_set_Dstar(trace_pairing(F), D, F)
        assert Ds == (D.map(D.group.neg) if neg else D)


def test_gauss_signs_uniform():
    for p, m in [(3, 1), (7, 1), (3, 3)]:
        signs = set(gauss_sum_signs(OddField(p, m)).values())
        assert len(signs) == 1


@pytest.mark.parametrize("p,m,alpha,beta", [(3, 1, 1, 2), (7, 1, 1, 2), (7, 1, 3, 6),
                                            (11, 1, 3, 5), (19, 1, 2, 7), (3, 3, 1, 2)])
def test_paley_pipeline(p, m, alpha, beta):
    Pc, S, T, rep = paley_self_dual(OddField(p, m), alpha, beta)
    assert len(S) == len(T) == p ** m
    assert is_formally_self_dual(Pc, S).verdict


def test_shds_p3_listing():
    F = OddField(3)
    _, S, T, _ = paley_self_dual(F, 1, 2)
    assert S.members == ((0, 0), (1, 1), (2, 1))


def test_shds_errors():
    F = OddField(3)
    D = paley_set(F)
    with pytest.raises(DomainError):
        shds_pair(D, D, 1, 1)
    with pytest.raises(DomainError):
        shds_pair(D, D, 0, 1)


def test_pi_matrix_shapes():
    M = pi_matrix(7, 1, 1, 2, True)
    assert np.array_equal(M, np.array([[0, 6], [1, 0]]))
    M2 = pi_matrix(3, 3, 1, 2, False)
    assert M2.shape == (6, 6)


def test_sporadic():
    out = sporadic_order64()
    assert len(out) == 2
    for P, S in out:
        assert P.group.order == 64 and len(S) == 8
        assert is_primitive(S)[0]


def test_rds_negative():
    G = Group((4,))
    assert is_relative_difference_set(SetInGroup.of(G, [(0,), (1,), (2,)]),
                                      Subgroup.trivial(G)) == (True, 2)
    S = SetInGroup.of(G, [(0,), (1,)])
    assert is_relative_difference_set(S, Subgroup.trivial(G)) == (False, None)
