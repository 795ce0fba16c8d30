import os
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from fsdual.codes import (GRAY, Z4_DUAL_GENERATORS, Z4_GENERATORS, Alphabet, CodeSet,
                          EnumeratorPoly, canonical_pairing, char_sum_distance_identity_check,
                          count_zero_charsums_and_zero_nu, delta_map, distance_enumerator_poly,
                          f3_example, f3_example_is_dual_pair, formal_dual_codes_check,
                          gray_image, gray_map, lee_weight, macwilliams_transform,
                          no_pairing_certificate, quadratic_code, read_code,
                          weight_enumerator_poly, write_code, z4_dual, z4_span)
from fsdual.duality import is_formally_dual_pair, is_formally_self_dual
from fsdual.errors import DomainError
from fsdual.pairing import Pairing


def test_alphabet_parse():
    assert Alphabet.parse("F3") == Alphabet("prime", 3)
    assert Alphabet.parse("Z4") == Alphabet("z4", 4)
    assert Alphabet.parse("F8") == Alphabet.parse("F2^3")
    assert Alphabet.parse("F8").k == 3
    with pytest.raises(DomainError):
        Alphabet.parse("F6")


def test_enumerator_str():
    assert str(EnumeratorPoly(2, (1, 0, 0))) == "X^2"
    assert str(EnumeratorPoly(2, (0, 0, Fraction(-1, 2)))) == "-(1/2)Y^2"
    assert EnumeratorPoly(1, (1, 3)).coeff_line() == "1 3"


def test_f3_example():
    C, Cp = f3_example()
    assert str(weight_enumerator_poly(C)) == "X^4 + 4X^2Y^2 + 4XY^3"
    M = macwilliams_transform(weight_enumerator_poly(C), 3, 9)
    assert str(M) == "X^4 + (4/3)X^3Y + 4XY^3 + (8/3)Y^4"
    chk = formal_dual_codes_check(C, Cp)
    assert (chk.weight_dual, chk.distance_dual, chk.formal_dual) == (False, True, False)
    assert f3_example_is_dual_pair()
    assert char_sum_distance_identity_check(C)
    assert delta_map((1, 2, 3, 4)) == (3, -4, 1, -2)


def test_f3_data_file(data_dir):
    C, Cp = f3_example()
    assert sorted(read_code(os.path.join(data_dir, "f3_example.code")).words) == sorted(C.words)
    assert sorted(read_code(os.path.join(data_dir, "f3_example_dual.code")).words) == \
        sorted(Cp.words)


def test_gray():
    assert GRAY == {0: (0, 0), 1: (0, 1), 2: (1, 1), 3: (1, 0)}
    assert gray_map((2, 1, 3, 1)) == (1, 0, 1, 0, 1, 1, 0, 1)
    for w in [(0, 1, 2, 3), (3, 3, 1, 0)]:
        assert sum(gray_map(w)) == lee_weight(w)


def test_z4_counterexample(data_dir):
    C = z4_span(Z4_GENERATORS)
    Cd = z4_span(Z4_DUAL_GENERATORS)
    assert len(C) == len(Cd) == 16
    assert sorted(z4_dual(C).words) == sorted(Cd.words)
    pC, pCd = gray_image(C), gray_image(Cd)
    assert sorted(pC.words) == sorted(read_code(os.path.join(data_dir, "phi_C.code")).words)
    chk = formal_dual_codes_check(pC, pCd)
    assert chk.formal_dual
    assert count_zero_charsums_and_zero_nu(pC, pCd) == (216, 228)
    cert = no_pairing_certificate(pC, pCd)
    assert cert["zero_char_sums"] == 216 and cert["zero_nu"] == 228
    assert char_sum_distance_identity_check(pC) and char_sum_distance_identity_check(pCd)
    with pytest.raises(DomainError):
        char_sum_distance_identity_check(C)


def test_linear_code_self_dual_pair():
    # a linear code and its dual form a dual pair under the canonical pairing
    C = CodeSet.of("F2", [(0, 0, 0, 0), (1, 1, 0, 0), (0, 0, 1, 1), (1, 1, 1, 1)])
    P = canonical_pairing(C.alphabet, 4)
    assert is_formally_self_dual(P, C.as_set()).verdict
    chk = formal_dual_codes_check(C, C)
    assert chk.formal_dual
    assert no_pairing_certificate(C, C) is None


@pytest.mark.parametrize("p", [3, 5, 7])
def test_quadratic_code(p):
    C = quadratic_code(p)
    assert len(C) == p
    # self dual under the swapped pairing <(a,b),(x,y)> = zeta^(ay + bx), not the canonical one
    G = C.as_set().group
    assert is_formally_self_dual(Pairing(G, ((0, 1), (1, 0))), C.as_set()).verdict
    assert not is_formally_dual_pair(canonical_pairing(C.alphabet, 2), C.as_set(),
                                     C.as_set()).verdict
    assert char_sum_distance_identity_check(C)


def test_f4_identity():
    C = CodeSet.of("F4", [(0, 0), (1, 2), (2, 3), (3, 1)])
    assert char_sum_distance_identity_check(C)


@settings(max_examples=50, deadline=None)
@given(st.integers(1, 5), st.sampled_from([2, 3, 4, 5, 7]), st.data())
def test_macwilliams_involution(n, q, data):
    coeffs = data.draw(st.lists(st.integers(0, 10), min_size=n + 1, max_size=n + 1))
    coeffs[0] = 1
    E = EnumeratorPoly(n, coeffs)
    M = macwilliams_transform(E, q, E.total())
    assert macwilliams_transform(M, q, M.total()) == E


def test_distance_enumerator():
    C = CodeSet.of("F2", [(0, 0), (1, 1)])
    assert distance_enumerator_poly(C) == EnumeratorPoly(2, (1, 0, 1))


def test_read_write(tmp_path):
    C, _ = f3_example()
    p = tmp_path / "c.code"
    write_code(p, C)
    assert read_code(p).words == C.words
    (tmp_path / "bad.code").write_text("0 1\n")
    with pytest.raises(DomainError):
        read_code(tmp_path / "bad.code")
