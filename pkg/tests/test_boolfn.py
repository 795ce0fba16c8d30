import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from fsdual.boolfn import (BlockAutomorphism, LinearizedPolynomial, VectorialFunction,
                           ab_exponents, ab_fsd_criterion, ab_scan, classify, differential_table,
                           example_linear_map, fwht, gold_scan, gold_zero_predicates,
                           graph_fsd_check, kasami_exponent, linpoly_adjoint, linpoly_inverse,
                           matrix_adjoint_mod2, niho_exponent, parse_function, polynomial_str,
                           selfdual_condition, selfdual_semantic, trace_pairing_binary,
                           transform_graph, walsh_divisibility_check, walsh_naive, walsh_table,
                           welch_exponent)
from fsdual.duality import is_formally_self_dual
from fsdual.errors import DomainError
from fsdual.fields import BinaryField

F8 = BinaryField(3, 0b1011)


def test_fwht_small():
    assert fwht(np.array([1, 0, 0, 0])).tolist() == [1, 1, 1, 1]
    assert fwht(np.array([1, -1, 1, -1])).tolist() == [0, 4, 0, 0]


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6])
def test_walsh_fast_equals_naive(n):
    Fq = BinaryField(n)
    rng = np.random.default_rng(n)
    for F in [VectorialFunction.power(Fq, 3), VectorialFunction.power(Fq, Fq.size - 2),
              VectorialFunction.from_table(Fq, rng.integers(0, Fq.size, Fq.size))]:
        assert np.array_equal(walsh_table(F), walsh_naive(F))


def test_x3_on_f8():
    F = VectorialFunction.power(F8, 3)
    W = walsh_table(F)
    assert sorted(set(W.ravel().tolist())) == [-4, 0, 4, 8]
    d = differential_table(F)
    assert d[0, 0] == 8 and d[1:, :].max() == 2
    c = classify(F)
    assert (c.bijective, c.apn, c.ab) == (True, True, True)
    assert graph_fsd_check(F, cross_check=True).verdict
    assert walsh_divisibility_check(F)
    assert ab_fsd_criterion(F)


def test_differential_rows_sum():
    Fq = BinaryField(4)
    F = VectorialFunction.power(Fq, 7)
    d = differential_table(F)
    assert np.all(d.sum(axis=1) == Fq.size)


@settings(max_examples=30, deadline=None)
@given(st.integers(1, 5), st.data())
def test_parseval_and_delta_identity(n, data):
    Fq = BinaryField(n)
    vals = data.draw(st.lists(st.integers(0, Fq.size - 1), min_size=Fq.size, max_size=Fq.size))
    F = VectorialFunction.from_table(Fq, vals)
    W = walsh_table(F).astype(np.int64)
    assert np.all((W ** 2).sum(axis=0) == Fq.size ** 2)
    # every derivative direction a partitions the 2^n inputs
    d = differential_table(F)
    assert np.all(d.sum(axis=1) == Fq.size)
    # the a = 0 row of delta is concentrated at b = 0
    assert d[0, 0] == Fq.size


def test_graph_check_agrees_with_generic_random():
    rng = np.random.default_rng(3)
    for n in (2, 3):
        Fq = BinaryField(n)
        P = trace_pairing_binary(Fq)
        for _ in range(10):
            F = VectorialFunction.from_table(Fq, rng.permutation(Fq.size))
            assert graph_fsd_check(F, cross_check=False).verdict == \
                is_formally_self_dual(P, F.graph()).verdict


def test_gold_scan():
    rows = {(r.n, r.i): r.verdict for r in gold_scan([3, 5, 7])}
    assert rows[(3, 1)] and rows[(3, 2)]
    assert not any(v for (n, _), v in rows.items() if n > 3)


@pytest.mark.parametrize("n,i", [(3, 1), (3, 2), (5, 1), (5, 2), (7, 3)])
def test_gold_predicates_exhaustive(n, i):
    Fq = BinaryField(n)
    F = VectorialFunction.power(Fq, 2 ** i + 1)
    W = walsh_table(F)
    d = differential_table(F)
    for a in range(1, Fq.size):
        for b in range(1, Fq.size):
            g = gold_zero_predicates(Fq, i, a, b)
            assert g.walsh_zero == (W[a, b] == 0)
            assert g.delta_zero == (d[a, b] == 0)


def test_gold_params():
    with pytest.raises(DomainError):
        gold_zero_predicates(BinaryField(4), 1, 1, 1)
    with pytest.raises(DomainError):
        gold_scan([9], [3])


def test_ab_exponents():
    assert welch_exponent(5) == 7
    assert kasami_exponent(5, 2) == 13
    # plus-sign Niho form: coincides with a Gold exponent at n = 5
    assert niho_exponent(5) == 5
    assert niho_exponent(7) == 39
    for n in (5, 7):
        for row in ab_scan([n]):
            assert row["bijective"] and row["ab"] and not row["verdict"]
        assert all(math.gcd(d, 2 ** n - 1) == 1 for _, _, d in ab_exponents(n))


def test_linearized_example():
    L = example_linear_map()
    assert polynomial_str(F8, {1: 3, 2: 7, 4: 5}) == "(a^2+1)x^4+(a^2+a+1)x^2+(a+1)x"
    assert linpoly_adjoint(L).coeffs == L.coeffs
    assert linpoly_inverse(L).coeffs == L.coeffs
    assert selfdual_condition(L) and selfdual_semantic(L)
    assert L.is_additive()


def test_linearized_inverse_cases():
    assert linpoly_inverse(LinearizedPolynomial(F8, (1, 1, 0))) is None   # x^2 + x
    sq = LinearizedPolynomial.frobenius(F8, 1)
    assert linpoly_inverse(sq).coeffs == (0, 0, 1)
    assert LinearizedPolynomial.identity(F8).is_identity()


@settings(max_examples=40, deadline=None)
@given(st.lists(st.integers(0, 7), min_size=3, max_size=3), st.integers(0, 7), st.integers(0, 7))
def test_adjoint_trace_identity(coeffs, x, y):
    L = LinearizedPolynomial(F8, tuple(coeffs))
    A = linpoly_adjoint(L)
    assert F8.trace(F8.mul(L(x), y)) == F8.trace(F8.mul(x, A(y)))
    assert L(x ^ y) == L(x) ^ L(y)


def test_from_map_roundtrip():
    L = example_linear_map()
    L2 = LinearizedPolynomial.from_table(F8, L.table)
    assert L2.coeffs == L.coeffs


def test_transforms_match_examples():
    F = VectorialFunction.power(F8, 3)
    L = example_linear_map()
    I = LinearizedPolynomial.identity(F8)
    want = {
        (I, L): {6: 0b111, 5: 0b101, 3: 0b011},
        (L, I): {6: 0b101, 5: 0b011, 4: 0b110, 3: 0b111, 2: 0b010, 1: 0b100},
        (L, L): {5: 1, 4: 1, 1: 1},
    }
    for (L1, L2), poly in want.items():
        G = transform_graph(F, L1, L2)
        assert G.polynomial() == poly
        assert graph_fsd_check(G).verdict
    # x^3 on F_8: inverse is x^5 and its graph is self dual too
    inv = F.inverse()
    assert inv.polynomial() == {5: 1}
    assert graph_fsd_check(inv).verdict


def test_transform_rejects_bad_map():
    F = VectorialFunction.power(F8, 3)
    bad = LinearizedPolynomial(F8, (1, 1, 0))
    with pytest.raises(DomainError):
        transform_graph(F, bad, LinearizedPolynomial.identity(F8))


def test_block_automorphism():
    L = example_linear_map()
    Z = LinearizedPolynomial(F8, (0, 0, 0))
    phi = BlockAutomorphism(L, Z, Z, L)
    assert phi.is_adjoint_inverse()
    P = trace_pairing_binary(F8)
    M = phi.matrix()
    adj = matrix_adjoint_mod2(P, M)
    assert np.array_equal((adj @ M) % 2, np.eye(6, dtype=int))


def test_parse_function():
    assert parse_function(F8, "x^3").values == VectorialFunction.power(F8, 3).values
    assert parse_function(F8, "x").values == tuple(range(8))
    lin = parse_function(F8, "poly:1:3,2:7,4:5")
    assert lin.values == tuple(int(v) for v in example_linear_map().table)
    with pytest.raises(DomainError):
        parse_function(F8, "1,2,3")


def test_polynomial_interpolation():
    rng = np.random.default_rng(0)
    for _ in range(5):
        F = VectorialFunction.from_table(F8, rng.integers(0, 8, 8))
        G = VectorialFunction.from_polynomial(F8, F.polynomial())
        assert G.values == F.values
