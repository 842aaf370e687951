import math

import pytest

from genusfield import construct
from genusfield.arith import factor_squarefree
from genusfield.classify import make_signature
from genusfield.errors import Degenerate, NotCoveredError
from genusfield.genus import (
    GeneratorElement,
    build_generators,
    expected_rank,
    field_description,
    lift_to_level,
    parse_generator_display,
)


def displays(gf):
    return [g.display() for g in gf.generators]


def test_case14_trivial():
    gf = construct(5)
    assert gf.case_id == 14
    assert gf.generators == () and gf.expected_rank == 0


def test_case1_d65():
    gf = construct(65)
    assert gf.case_id == 1
    assert displays(gf) == ["5", "1+8*sqrt(-1)"]
    assert gf.expected_rank == 2


def test_case2_d33():
    gf = construct(33)
    assert gf.case_id == 2
    assert displays(gf) == ["3", "5+2*sqrt(-2)"]


def test_case15_d41():
    gf = construct(41)
    assert gf.case_id == 15
    assert displays(gf) == ["5+4*sqrt(-1)", "13+8*sqrt(2)"]
    assert gf.expected_rank == 2


def test_case10_d615():
    gf = construct(615)
    assert gf.case_id == 10
    assert displays(gf) == [
        "41",
        "5+4*sqrt(-1)",
        "13+8*sqrt(2)",
        "-3+4*sqrt(-2)",
        "5",
    ]
    assert gf.expected_rank == 5


def test_case13_d15():
    gf = construct(15)
    assert gf.case_id == 13
    assert displays(gf) == ["5"]
    assert any("sqrt(3)" in note and "15" in note for note in gf.notes)
    # the squarefree part of p1 * q1 is |d|
    p1, q1 = gf.signature.ps[0], gf.signature.qs[0]
    assert p1 * q1 == abs(gf.d)


def test_not_covered_raises():
    with pytest.raises(NotCoveredError):
        construct(165)
    with pytest.raises(NotCoveredError):
        construct(195)


def test_degenerate_inputs():
    for d in (0, 1, -1, 2, -2):
        with pytest.raises((Degenerate, ValueError)):
            construct(d)


def test_expected_rank_examples():
    sig = make_signature(factor_squarefree(65))
    assert expected_rank(sig) == 2  # case 1, n = 2
    sig = make_signature(factor_squarefree(5))
    assert expected_rank(sig) == 0  # case 14
    sig = make_signature(factor_squarefree(615))
    assert expected_rank(sig) == 5  # case 10, r = 1


def test_rank_formula_matches_count_small_sweep():
    from genusfield.errors import NotSquareFree, UnsupportedPrime

    checked = 0
    for d in range(2, 3000):
        try:
            gf = construct(d)
        except (Degenerate, NotSquareFree, UnsupportedPrime, NotCoveredError):
            continue
        assert len(gf.generators) == gf.expected_rank == expected_rank(gf.signature), d
        assert len(set(gf.generators)) == len(gf.generators), d
        checked += 1
    assert checked > 400


def test_norm_identities_at_build_time():
    gf = construct(615)
    f = factor_squarefree(615)
    for g in gf.generators:
        n = g.norm()
        for p in f.primes:
            while n % p == 0:
                n //= p
        assert n == 1


def test_branch_constructions():
    # case 11 branch B (d = 5 * 41, sign -1): keeps the l prime; rank 4r
    gf = construct(205)
    assert gf.case_id == 11 and gf.signature.sub_branch == "B"
    assert gf.expected_rank == 4
    assert displays(gf)[0] == "41"
    # case 11 branch A (d = 5 * 73, sign +1): drops the l prime; rank 4r - 1
    gf = construct(365)
    assert gf.case_id == 11 and gf.signature.sub_branch == "A"
    assert gf.expected_rank == 3
    assert all(g.kind != "RationalPrime" for g in gf.generators)


def test_case7_branches():
    # 41 * 73: signs (-1, +1) differ -> branch A, rank 4r - 3 = 5
    gf = construct(41 * 73)
    assert gf.case_id == 7 and gf.signature.sub_branch == "A"
    assert gf.expected_rank == 5
    assert displays(gf)[:2] == ["41", "73"]
    # 73 * 89: both +1 -> branch B, rank 4r - 2 = 6
    gf = construct(73 * 89)
    assert gf.case_id == 7 and gf.signature.sub_branch == "B"
    assert gf.expected_rank == 6
    # pairs (l_i, pi1_i) for all i, then (pi2, pi3) for i < r
    kinds = [g.kind for g in gf.generators]
    assert kinds == ["RationalPrime", "Gaussian", "RationalPrime", "Gaussian", "Sqrt2", "SqrtMinus2"]


def test_lift_to_level():
    gf = construct(65, m=3)
    lifted = lift_to_level(gf, 7)
    assert lifted.m == 7 and lifted.generators == gf.generators
    assert lift_to_level(gf, 3) == gf
    with pytest.raises(ValueError):
        lift_to_level(gf, 2)


def test_m_invariance_of_construction():
    for d in (65, 33, 41, 615, 205):
        g3 = construct(d, m=3)
        g8 = construct(d, m=8)
        assert g3.generators == g8.generators
        assert g3.notes == g8.notes
        assert g8.m == 8


def test_negative_d_normalizes():
    neg, pos = construct(-65), construct(65)
    assert neg.generators == pos.generators
    assert any("normalized" in n for n in neg.notes)


def test_construct_with_supplied_primes():
    gf = construct(615, primes=[3, 5, 41])
    assert gf.generators == construct(615).generators
    with pytest.raises(ValueError):
        construct(615, primes=[3, 5, 43])


def test_field_description():
    gf = construct(65)
    assert (
        field_description(3, 65, gf.generators)
        == "Q(zeta_8, sqrt(65), sqrt(5), sqrt(1+8*sqrt(-1)))"
    )
    assert field_description(4, 5, ()) == "Q(zeta_16, sqrt(5))"


def test_display_roundtrip():
    for d in (65, 33, 41, 615, 205, 365, 2665, 1353):
        try:
            gf = construct(d)
        except NotCoveredError:
            continue
        for g in gf.generators:
            assert parse_generator_display(g.display()) == g


def test_generator_norms():
    assert GeneratorElement.gaussian(1, 8).norm() == 65
    assert GeneratorElement.sqrt2(13, 8).norm() == 41
    assert GeneratorElement.sqrt_minus2(-3, 4).norm() == 41
    assert GeneratorElement.rational(5).norm() == 5
