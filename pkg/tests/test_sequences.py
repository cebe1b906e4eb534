from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from helpers import recurrence_table
from ladderforms.sequences import IdentityId, QuadExt, SeqKind, binet_value, check_identity, seq_value

A, S = SeqKind.A, SeqKind.S


def test_initial_values():
    assert (seq_value(A, 0), seq_value(A, 1)) == (1, 1)
    assert (seq_value(S, 0), seq_value(S, 1)) == (0, 1)


def test_fourth_terms():
    # by hand: a = 1, 1, 3, 11, 41; s = 0, 1, 4, 15, 56
    assert seq_value(A, 4) == 41
    assert seq_value(S, 4) == 56


def test_prefixes():
    assert [seq_value(A, i) for i in range(6)] == [1, 1, 3, 11, 41, 153]
    assert [seq_value(S, i) for i in range(6)] == [0, 1, 4, 15, 56, 209]


def test_matches_independent_recurrence_table():
    assert [seq_value(A, i) for i in range(301)] == recurrence_table(1, 1, 300)
    assert [seq_value(S, i) for i in range(301)] == recurrence_table(0, 1, 300)


def test_negative_index_rejected():
    with pytest.raises(ValueError):
        seq_value(A, -1)
    with pytest.raises(ValueError):
        binet_value(S, -2)


@pytest.mark.parametrize("kind", [A, S])
def test_strictly_increasing_from_one(kind):
    vals = [seq_value(kind, i) for i in range(1, 150)]
    assert all(x < y for x, y in zip(vals, vals[1:]))


# -- Q(sqrt 3) -------------------------------------------------------------

quad = st.builds(QuadExt, st.fractions(max_denominator=50), st.fractions(max_denominator=50))


@given(quad, quad, quad)
def test_quadext_ring_axioms(x, y, z):
    assert x * (y + z) == x * y + x * z
    assert (x * y) * z == x * (y * z)
    assert x * y == y * x


@given(st.fractions(), st.fractions(), st.fractions(), st.fractions())
def test_quadext_product_rule(p, q, r, t):
    prod = QuadExt(p, q) * QuadExt(r, t)
    assert prod == QuadExt(p * r + 3 * q * t, p * t + q * r)


def test_quadext_normalises():
    x = QuadExt(Fraction(2, 4), Fraction(-3, -6))
    assert x.rational == Fraction(1, 2) and x.rational.denominator == 2
    assert x == QuadExt(Fraction(1, 2), Fraction(1, 2))


def test_integrality():
    assert QuadExt(Fraction(3)).is_integral()
    assert not QuadExt(Fraction(3, 2)).is_integral()
    assert not QuadExt(Fraction(3), Fraction(1)).is_integral()


def test_lambda_inverse():
    lam = QuadExt(Fraction(2), Fraction(1))
    assert lam * lam ** -1 == QuadExt(Fraction(1))
    assert lam ** -1 == QuadExt(Fraction(2), Fraction(-1))


def test_binet_examples():
    assert binet_value(A, 0) == QuadExt(Fraction(1))
    # (3-r)/6 (7+4r) + (3+r)/6 (7-4r) = (42 - 24)/6 = 3 with r = sqrt 3
    assert binet_value(A, 2) == QuadExt(Fraction(3))
    assert binet_value(S, 3) == QuadExt(Fraction(15))


@pytest.mark.parametrize("kind", [A, S])
def test_binet_matches_recurrence_to_200(kind):
    for n in range(201):
        val = binet_value(kind, n)
        assert val.root3 == 0
        assert val.rational.denominator == 1
        assert val.rational == seq_value(kind, n)


# -- identities ------------------------------------------------------------


def test_identity_examples():
    assert check_identity(IdentityId.DOUBLE_S, 3)  # 2*15 = 41 - 11
    assert check_identity(IdentityId.SUM, 0)
    assert check_identity(IdentityId.SQUARE, 2)  # 14^2 = 3*8^2 + 4


@pytest.mark.parametrize("identity", [IdentityId.SUM, IdentityId.DOUBLE_S, IdentityId.SQUARE,
                                      IdentityId.WEIGHTED_SUM])
def test_single_index_identities_to_200(identity):
    assert all(check_identity(identity, n) for n in range(201))


@pytest.mark.parametrize("identity", [IdentityId.CONVOLUTION, IdentityId.SPLIT])
def test_two_index_identities_to_100(identity):
    assert all(check_identity(identity, n, k) for n in range(101) for k in range(n + 1))


def test_factorisations():
    assert all(check_identity(IdentityId.FACTOR_ODD, n) for n in range(1, 200, 2))
    assert all(check_identity(IdentityId.FACTOR_EVEN, n) for n in range(2, 201, 2))


def test_weighted_sum_both_printed_forms_agree_with_convolution():
    for n in range(60):
        conv = sum(seq_value(A, i) * seq_value(A, n + 1 - i) for i in range(1, n + 1))
        a1, a0, sn = seq_value(A, n + 1), seq_value(A, n), seq_value(S, n)
        assert 6 * conv == n * (a1 + a0) + (a1 - a0)
        assert 3 * conv == (n + 1) * sn + n * a0


def test_factor_even_denominator_reading():
    # the variant with s_{k+1} - s_k in the denominator is wrong already at n = 4
    k = 2
    s = [seq_value(S, i) for i in range(4)]
    lhs = Fraction(seq_value(A, 5) + seq_value(A, 4) - 2, seq_value(A, 5) - seq_value(A, 4))
    assert lhs == Fraction(s[3] + 2 * s[2] + s[1], s[3] - s[1])
    assert lhs != Fraction(s[3] + 2 * s[2] + s[1], s[3] - s[2])
    assert check_identity(IdentityId.FACTOR_EVEN, 2 * k)


@pytest.mark.parametrize(
    "identity, n, k, message",
    [
        (IdentityId.CONVOLUTION, 3, None, "needs k"),
        (IdentityId.SPLIT, 3, 4, "k must be <= n"),
        (IdentityId.SPLIT, 3, -1, "k must be >= 0"),
        (IdentityId.FACTOR_ODD, 4, None, "odd"),
        (IdentityId.FACTOR_ODD, 5, 1, "2k\\+1"),
        (IdentityId.FACTOR_EVEN, 0, None, "k >= 1"),
        (IdentityId.FACTOR_EVEN, 3, None, "even"),
        (IdentityId.SUM, -1, None, "n must be >= 0"),
    ],
)
def test_identity_preconditions(identity, n, k, message):
    with pytest.raises(ValueError, match=message):
        check_identity(identity, n, k)
