from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from liecensus.census import (
    c_n,
    c_n_k,
    c_n_k_value,
    c_nu_k,
    center_qrank,
    count_regular_semisimple,
    count_semisimple,
    count_srs0,
    enumerate_class_labels,
    fixed_label_count,
    irr_r_count,
    regular_semisimple_gf,
    sl_irr_prediction,
    squarefree_divisors,
    theorem_ratios,
    type_counts,
)
from liecensus.intpoly import IntPoly, Q
from liecensus.partitions import Partition, enum_partitions
from liecensus.polyspace import CapExceeded, InadmissibleError, signed_q

GL, GU = 1, -1


def divisors(m):
    return [d for d in range(1, m + 1) if m % d == 0]


def test_c_nu_k_examples():
    assert c_nu_k(Partition([1, 1]), 1, GL) == Q**2 - Q
    assert c_nu_k(Partition([1]), 1, GL) == Q - 1
    assert c_nu_k(Partition([1, 1]), 2, GL) == Q - 1
    assert c_nu_k(Partition([2, 1]), 2, GL) == IntPoly()
    assert c_nu_k(Partition([1, 1]), 1, GU) == Q**2 + Q


def test_class_count_polynomials():
    assert c_n(1, GL) == Q - 1
    assert c_n(2, GL) == Q**2 - 1
    assert c_n(3, GL) == Q**3 - Q
    assert c_n(1, GU) == Q + 1
    assert c_n(2, GU) == (Q + 1) ** 2


def test_c_n_k_rejects_bad_k():
    with pytest.raises(ValueError):
        c_nu_k(Partition([1]), 0, GL)


LABEL_CASES = [(1, 2, GL), (2, 2, GL), (2, 3, GL), (2, 4, GL), (2, 5, GL), (3, 2, GL), (3, 3, GL),
               (4, 2, GL), (2, 2, GU), (2, 3, GU), (3, 2, GU), (2, 4, GU), (3, 3, GU)]


@pytest.mark.parametrize("n,q,eps", LABEL_CASES)
def test_label_count_matches_polynomial(n, q, eps):
    sq = signed_q(q, eps)
    labels = enumerate_class_labels(n, sq)
    assert len(set(labels)) == len(labels) == c_n(n, eps)(q)
    for nu, count in type_counts(labels).items():
        assert count == c_nu_k(nu, 1, eps)(q)


@pytest.mark.parametrize("n,q,eps", LABEL_CASES)
def test_fixed_labels_match_c_n_k(n, q, eps):
    sq = signed_q(q, eps)
    for k in divisors(sq.center_order):
        assert fixed_label_count(n, k, sq) == c_n_k(n, k, eps)(q) == c_n_k_value(n, k, sq)


@pytest.mark.parametrize(
    "family,n,q",
    [("GL", 2, 2), ("GL", 2, 3), ("GL", 2, 5), ("GL", 3, 2), ("GU", 2, 2), ("GU", 2, 3), ("GU", 3, 2)],
)
def test_counts_match_oracle(class_table, family, n, q):
    table = class_table(family, n, q)
    sq = signed_q(q, 1 if family == "GL" else -1)
    assert len(table) == c_n(n, sq.eps)(q)
    ss, poly = count_semisimple(n, sq)
    assert ss == table.count("semisimple") == poly(q)
    rs = count_regular_semisimple(n, sq)
    assert rs == table.count("regular_semisimple") == regular_semisimple_gf(n, sq)
    assert count_srs0(n, sq) == table.count("srs0")


def test_small_examples():
    assert count_regular_semisimple(2, signed_q(2, GL)) == 1
    assert count_regular_semisimple(2, signed_q(3, GL)) == 4
    assert count_srs0(2, signed_q(3, GL)) == 2
    assert count_semisimple(2, signed_q(3, GU))[0] == 12
    assert center_qrank(3, GL) == Q**3 - Q**2


@pytest.mark.parametrize("n,q,eps", LABEL_CASES)
def test_count_chain(n, q, eps):
    sq = signed_q(q, eps)
    srs0, rs = count_srs0(n, sq), count_regular_semisimple(n, sq)
    ss = count_semisimple(n, sq)[0]
    assert srs0 <= rs <= ss <= c_n(n, eps)(q)


def test_squarefree_divisors():
    assert squarefree_divisors(1) == [1]
    assert squarefree_divisors(12) == [1, 2, 3, 6]
    assert squarefree_divisors(30) == [1, 2, 3, 5, 6, 10, 15, 30]


@pytest.mark.parametrize(
    "n,q,eps,want", [(2, 3, GL, 2), (2, 3, GU, 4), (3, 3, GL, 0), (2, 2, GL, 0), (1, 5, GL, 0)]
)
def test_irr_r_examples(n, q, eps, want):
    assert irr_r_count(n, signed_q(q, eps)) == want


def test_irr_r_inclusion_exclusion_by_hand():
    # GL_6(7): gcd(6, 6) = 6, so Irr_2 + Irr_3 - Irr_6
    sq = signed_q(7, GL)
    want = sum(c_n_k(6, k, GL)(7) * s for k, s in ((2, 1), (3, 1), (6, -1)))
    assert irr_r_count(6, sq) == want


def test_ratio_examples():
    r = theorem_ratios(2, signed_q(3, GL))
    assert (r.classes, r.irr_r, r.semisimple, r.regular_semisimple, r.srs0) == (8, 2, 6, 4, 2)
    assert r.rA == Fraction(3, 4)
    assert r.rC == Fraction(3, 4)
    assert r.rB_ss == 1
    assert r.rB_rs == Fraction(6, 4)
    assert r.r_srs0 == 3
    d = r.as_dict()
    assert d["rA"] == "3/4" and d["irr_ird"] == 6 and d["strongly_regular"] == 4


@pytest.mark.parametrize("q,eps", [(2, GL), (3, GL), (2, GU), (3, GU)])
def test_rank_one_ratios_are_one(q, eps):
    r = theorem_ratios(1, signed_q(q, eps))
    assert r.rA == r.rB_ss == r.rB_rs == r.r_srs0 == r.rC == 1


@pytest.mark.parametrize("eps", [GL, GU])
@pytest.mark.parametrize("n", range(1, 8))
def test_leading_term_law(n, eps):
    for k in divisors(n):
        f = c_n_k(n, k, eps)
        assert f.degree == n // k and f.leading == 1


@pytest.mark.parametrize("n", [2, 3])
def test_ratio_trends_over_admissible_q(n):
    qs = [3, 4, 5, 7, 8, 9]
    reports = [theorem_ratios(n, signed_q(q, GL)) for q in qs]
    rc = [r.rC for r in reports]
    assert rc == sorted(rc)
    # |Z|q^l over the regular semisimple count approaches 1 from above
    rb = [r.rB_rs for r in reports]
    assert rb == sorted(rb, reverse=True) and all(x >= 1 for x in rb)
    for q, r in zip(qs, reports):
        assert r.rB_ss == 1
        assert r.rC >= 1 - Fraction(1, q)


def test_gl2_rs_ratio_closed_form():
    for q in (2, 3, 4, 5, 7, 8, 9):
        assert theorem_ratios(2, signed_q(q, GL)).rB_rs == Fraction(q, q - 1)


def test_zero_denominator_gives_none():
    r = theorem_ratios(3, signed_q(2, GU))
    assert r.srs0 == 0
    assert r.r_srs0 is None and r.as_dict()["r_srs0"] is None


def test_sl_prediction_examples():
    assert sl_irr_prediction(2, signed_q(3, GL)) == 7
    assert sl_irr_prediction(2, signed_q(5, GL)) == 9
    assert sl_irr_prediction(2, signed_q(3, GU)) == 7
    assert sl_irr_prediction(3, signed_q(2, GU)) == 16  # SU_3(2) has 16 classes by brute force


def test_sl_prediction_errors():
    with pytest.raises(ValueError):
        sl_irr_prediction(4, signed_q(5, GL))
    with pytest.raises(InadmissibleError):
        sl_irr_prediction(2, signed_q(2, GL))
    with pytest.raises(InadmissibleError):
        c_n_k_value(2, 3, signed_q(3, GL))


def test_label_cap():
    with pytest.raises(CapExceeded):
        enumerate_class_labels(3, signed_q(3, GL), cap=5)


def test_label_twist_preserves_flags():
    sq = signed_q(5, GL)
    for lab in enumerate_class_labels(2, sq):
        for z in sq.center():
            t = lab.twist(z)
            assert t.is_semisimple == lab.is_semisimple
            assert t.is_regular_semisimple == lab.is_regular_semisimple
            assert t.n == lab.n


small_polys = st.lists(st.integers(-5, 5), max_size=5).map(IntPoly)


@given(small_polys, small_polys, small_polys, st.integers(-4, 4))
def test_intpoly_ring_laws(a, b, c, x):
    assert (a + b) * c == a * c + b * c
    assert (a * b)(x) == a(x) * b(x)
    assert (a - a).is_zero()
    assert (a * b) * c == a * (b * c)


@given(small_polys, st.integers(1, 3), st.integers(-3, 3))
def test_intpoly_substitute_power(a, k, x):
    assert a.substitute_power(k)(x) == a(x**k)


def test_intpoly_str():
    assert str(Q**2 + 2 * Q + 1) == "q^2 + 2*q + 1"
    assert str(Q - 1) == "q - 1"
    assert str(IntPoly()) == "0"


@pytest.mark.parametrize("n", range(1, 7))
def test_type_polynomials_sum_to_class_count(n):
    for eps in (GL, GU):
        total = sum((c_nu_k(nu, 1, eps) for nu in enum_partitions(n)), IntPoly())
        assert total == c_n(n, eps)
