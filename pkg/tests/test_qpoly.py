"""Exact q-arithmetic against independent oracles and frozen values."""

import doctest
import math
from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

import ncfsieve.qpoly as qp
from ncfsieve.qpoly import (
    CyclotomicResidue,
    ExactDivisionError,
    QPoly,
    cyclotomic,
    eval_at_root,
    forest_count,
    forest_count_poly,
    is_symmetric,
    is_unimodal,
    q_binomial,
    q_factorial,
    q_int,
    q_int_root_check,
    q_lucas,
)


def test_doctests():
    failures, _ = doctest.testmod(qp)
    assert failures == 0


# ---------------------------------------------------------------- QPoly core


def test_zero_and_trim():
    assert QPoly(()).is_zero()
    assert QPoly((0, 0, 0)).is_zero()
    assert QPoly((1, 2, 0, 0)).coeffs == (1, 2)
    assert QPoly((1,)).degree == 0
    assert QPoly(()).degree == -1


def test_arithmetic_small():
    p = QPoly((1, 1))
    assert (p * p).coeffs == (1, 2, 1)
    assert (p - p).is_zero()
    assert (3 * p).coeffs == (3, 3)
    assert (p * 0).is_zero()
    assert p(5) == 6


coeff_lists = st.lists(st.integers(-30, 30), min_size=0, max_size=12)


@given(coeff_lists, coeff_lists)
def test_divmod_reconstructs(a, b):
    pa, pb = QPoly(tuple(a)), QPoly(tuple(b))
    if pb.is_zero():
        with pytest.raises(ZeroDivisionError):
            divmod(pa, pb)
        return
    try:
        quot, rem = divmod(pa, pb)
    except ExactDivisionError:
        return
    assert quot * pb + rem == pa
    assert rem.degree < pb.degree or rem.is_zero()


@given(coeff_lists, coeff_lists)
def test_product_then_exact_div(a, b):
    pa, pb = QPoly(tuple(a)), QPoly(tuple(b))
    if pb.is_zero():
        return
    assert (pa * pb).exact_div(pb) == pa


def test_exact_div_rejects_remainder():
    with pytest.raises(ExactDivisionError):
        QPoly((1, 1, 1)).exact_div(QPoly((1, 1)))


@given(coeff_lists, st.integers(-9, 9))
def test_call_matches_naive_evaluation(a, x):
    p = QPoly(tuple(a))
    assert p(x) == sum(c * x**i for i, c in enumerate(p.coeffs))


# ------------------------------------------------------- q-integer ladder


def test_q_int_values():
    assert q_int(0).is_zero()
    assert q_int(1).coeffs == (1,)
    assert q_int(4).coeffs == (1, 1, 1, 1)
    assert (q_int(3) * q_int(2)).coeffs == (1, 2, 2, 1)


def test_q_int_telescopes():
    # (q - 1) [a]_q == q^a - 1
    for a in range(1, 15):
        lhs = q_int(a) * QPoly((-1, 1))
        rhs = QPoly(tuple([-1] + [0] * (a - 1) + [1]))
        assert lhs == rhs


def test_q_factorial_degree_and_value():
    for a in range(8):
        p = q_factorial(a)
        assert p.degree == a * (a - 1) // 2
        assert p(1) == math.factorial(a)


def _partitions_in_box(rows: int, cols: int) -> list[int]:
    """Coefficient list of the generating function of partitions with at
    most `rows` parts, each part at most `cols`. Independent oracle for
    q_binomial(rows + cols, rows)."""
    counts = [0] * (rows * cols + 1)
    stack = [(0, cols, 0)]  # (parts used, bound on next part, running sum)
    while stack:
        used, bound, total = stack.pop()
        counts[total] += 1
        if used == rows:
            continue
        for part in range(1, bound + 1):
            stack.append((used + 1, part, total + part))
    return counts


@pytest.mark.parametrize("a", range(0, 13))
def test_q_binomial_counts_partitions_in_box(a):
    for b in range(0, a + 1):
        expect = _partitions_in_box(b, a - b)
        got = list(q_binomial(a, b).coeffs)
        got += [0] * (len(expect) - len(got))
        assert got == expect, (a, b)


def test_q_binomial_edge_cases():
    assert q_binomial(5, -1).is_zero()
    assert q_binomial(5, 6).is_zero()
    assert q_binomial(0, 0).coeffs == (1,)
    assert q_binomial(4, 2).coeffs == (1, 1, 2, 1, 1)


def test_q_binomial_specializes_to_binomial():
    for a in range(13):
        for b in range(a + 1):
            assert q_binomial(a, b)(1) == comb(a, b)


def test_q_binomial_symmetric_unimodal():
    for a in range(12):
        for b in range(a + 1):
            p = q_binomial(a, b)
            assert is_symmetric(p)
            assert is_unimodal(p)


# ------------------------------------------------------------- cyclotomics


def test_cyclotomic_frozen():
    assert cyclotomic(1).coeffs == (-1, 1)
    assert cyclotomic(2).coeffs == (1, 1)
    assert cyclotomic(4).coeffs == (1, 0, 1)
    assert cyclotomic(6).coeffs == (1, -1, 1)
    assert cyclotomic(12).coeffs == (1, 0, -1, 0, 1)


@pytest.mark.parametrize("m", range(1, 61))
def test_cyclotomic_product_identity(m):
    prod = QPoly((1,))
    for e in range(1, m + 1):
        if m % e == 0:
            prod = prod * cyclotomic(e)
    expect = QPoly(tuple([-1] + [0] * (m - 1) + [1]))
    assert prod == expect


def test_cyclotomic_degree_is_totient():
    def totient(m):
        return sum(1 for i in range(1, m + 1) if math.gcd(i, m) == 1)

    for m in range(1, 40):
        assert cyclotomic(m).degree == totient(m)


# ------------------------------------------------------ residue arithmetic


def test_residue_reduces():
    r = CyclotomicResidue(4, QPoly((0, 0, 1)))  # q^2 == -1 mod q^2+1
    assert r.residue.coeffs == (-1,)
    assert r.as_integer() == -1


def test_residue_as_integer_rejects_nonconstant():
    r = CyclotomicResidue(4, QPoly((0, 1)))
    with pytest.raises(ValueError):
        r.as_integer()


def test_eval_at_root_frozen():
    assert eval_at_root(forest_count_poly(3, 1), 3).as_integer() == 0
    assert eval_at_root(q_binomial(4, 2), 2).as_integer() == 2
    # d = 1 means q = 1, i.e. plain counting
    assert eval_at_root(forest_count_poly(4, 2), 1).as_integer() == 14


# ----------------------------------------------------------------- q-Lucas


def test_q_lucas_frozen():
    assert q_lucas(4, 2, 2).as_integer() == 2
    assert q_lucas(5, 3, 3).as_integer() == 1
    assert q_lucas(7, 3, 3).as_integer() == 2


def test_q_lucas_requires_d_at_least_2():
    with pytest.raises(ValueError):
        q_lucas(4, 2, 1)
    with pytest.raises(ValueError):
        q_lucas(-1, 0, 2)


def test_q_lucas_matches_direct_evaluation_small():
    for a in range(0, 16):
        for b in range(0, a + 1):
            for d in range(2, 9):
                direct = eval_at_root(q_binomial(a, b), d)
                assert direct.residue == q_lucas(a, b, d).residue, (a, b, d)


# ------------------------------------------------- root facts for q-integers


def test_q_int_root_multiplicity():
    # [a]_q has a simple zero at a primitive d-th root exactly when d >= 2
    # divides a
    for a in range(1, 25):
        for d in range(1, 13):
            chk = q_int_root_check(a, a, d)
            expected = 1 if d != 1 and a % d == 0 else 0
            assert chk.mult_a == expected, (a, d)
            assert chk.ok, (a, d, chk)


def test_q_int_unit_value():
    # [a]_q at a primitive d-th root equals 1 when a % d == 1, d >= 2
    for d in range(2, 12):
        for a in range(1, 40):
            if a % d == 1:
                r = eval_at_root(q_int(a), d)
                assert r.residue == QPoly((1,)), (a, d)


def test_q_int_ratio_rule_sweep():
    for d in range(1, 11):
        for a in range(1, 30):
            for b in range(1, 30):
                chk = q_int_root_check(a, b, d)
                assert chk.ok, (a, b, d, chk)


# ------------------------------------------------------------ forest counts


def test_forest_count_frozen():
    assert forest_count(1, 1) == 1
    assert forest_count(2, 1) == 1
    assert forest_count(3, 2) == 3
    assert forest_count(4, 1) == 12
    assert forest_count(4, 2) == 14
    assert forest_count(5, 1) == 55
    assert [forest_count(6, k) for k in range(1, 7)] == [273, 429, 275, 90, 15, 1]
    assert forest_count(12, 7) == 1106028


def test_forest_count_poly_frozen():
    assert forest_count_poly(2, 1).coeffs == (1,)
    assert forest_count_poly(3, 1).coeffs == (1, 0, 1, 0, 1)
    for n in range(1, 9):
        assert forest_count_poly(n, n).coeffs == (1,)


def test_forest_count_poly_specializes():
    for n in range(1, 13):
        for k in range(1, n + 1):
            assert forest_count_poly(n, k)(1) == forest_count(n, k)


def test_forest_count_poly_nonnegative_and_divides():
    # the division by the q-integer [2n-k] must come out exact with
    # nonnegative coefficients; the constructor raises otherwise
    for n in range(1, 15):
        for k in range(1, n + 1):
            p = forest_count_poly(n, k)
            assert all(c >= 0 for c in p.coeffs)
            assert q_int(2 * n - k) * p == q_binomial(n, k - 1) * q_binomial(
                3 * n - 2 * k - 1, n - k
            )


def test_forest_count_rejects_bad_args():
    for bad in ((0, 1), (3, 0), (3, 4), (-1, 1)):
        with pytest.raises(ValueError):
            forest_count(*bad)
        with pytest.raises(ValueError):
            forest_count_poly(*bad)


@pytest.mark.parametrize("n", range(1, 19))
def test_forest_count_poly_symmetric(n):
    # coefficient sequences of the count polynomials read the same backwards
    for k in range(1, n + 1):
        assert is_symmetric(forest_count_poly(n, k))
