"""Exact linear algebra: integer ranks, Smith form, number fields."""

import random
from fractions import Fraction

import pytest

from oscoh.exactla import (
    NotPrimeError,
    NumberField,
    bareiss_rank,
    field_rank,
    is_prime,
    rank_mod_p,
    rank_over_Q,
    smith_normal_form,
)


def fraction_rank(rows):
    """Independent oracle: plain Gaussian elimination over Fraction."""
    m = [[Fraction(x) for x in r] for r in rows]
    if not m:
        return 0
    rank = 0
    for c in range(len(m[0])):
        piv = next((i for i in range(rank, len(m)) if m[i][c]), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        inv = 1 / m[rank][c]
        m[rank] = [e * inv for e in m[rank]]
        for i in range(len(m)):
            if i != rank and m[i][c]:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[rank])]
        rank += 1
    return rank


def planted_rank_matrix(rng, n_rows, n_cols, r):
    """Integer matrix of rank exactly r (identity blocks force a full factor)."""
    u = [[rng.randint(-4, 4) for _ in range(r)] for _ in range(n_rows)]
    v = [[rng.randint(-4, 4) for _ in range(n_cols)] for _ in range(r)]
    for i in range(r):
        for j in range(r):
            u[i][j] = int(i == j)
            v[i][j] = int(i == j)
    return [
        [sum(u[i][k] * v[k][j] for k in range(r)) for j in range(n_cols)]
        for i in range(n_rows)
    ]


# ---------------------------------------------------------------------------
# primality


def test_is_prime_small_values():
    primes = [n for n in range(60) if is_prime(n)]
    assert primes == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59]


def test_is_prime_large_values():
    assert is_prime(2**31 - 1)  # Mersenne prime
    assert not is_prime(2**31)
    assert not is_prime(1_000_003 * 1_000_033)


def test_not_prime_error_is_value_error():
    assert issubclass(NotPrimeError, ValueError)


# ---------------------------------------------------------------------------
# integer ranks


def test_rank_of_empty_and_zero_matrices():
    assert bareiss_rank([]) == 0
    assert rank_over_Q([]) == 0
    assert bareiss_rank([[0, 0], [0, 0]]) == 0
    assert rank_over_Q([[0, 0], [0, 0]]) == 0
    assert rank_mod_p([[0, 0]], 5) == 0


def test_rank_known_small_matrices():
    m = [[1, 2, 3], [4, 5, 6], [7, 8, 9]]  # rank 2: rows in arithmetic progression
    assert bareiss_rank(m) == 2
    assert rank_over_Q(m) == 2
    assert fraction_rank(m) == 2
    ident = [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
    assert bareiss_rank(ident) == rank_over_Q(ident) == 3


def test_rank_methods_agree_on_random_matrices():
    rng = random.Random(20253)
    for trial in range(30):
        n_rows = rng.randint(1, 7)
        n_cols = rng.randint(1, 7)
        m = [[rng.randint(-9, 9) for _ in range(n_cols)] for _ in range(n_rows)]
        expected = fraction_rank(m)
        assert bareiss_rank(m) == expected
        assert rank_over_Q(m) == expected


def test_rank_on_planted_rank_matrices():
    rng = random.Random(7)
    for trial in range(20):
        r = rng.randint(0, 5)
        n_rows = rng.randint(r, r + 4)
        n_cols = rng.randint(r, r + 4)
        if n_rows == 0 or n_cols == 0:
            continue
        m = planted_rank_matrix(rng, n_rows, n_cols, r)
        assert bareiss_rank(m) == r
        assert rank_over_Q(m) == r


def test_rank_survives_huge_entries():
    big = 10**40
    m = [[big, big + 1], [big + 2, big + 3]]
    assert rank_over_Q(m) == 2
    assert bareiss_rank(m) == 2


def test_rank_mod_p_drops_on_divisible_pivots():
    m = [[1, 0], [0, 5]]
    assert rank_mod_p(m, 5) == 1
    assert rank_mod_p(m, 3) == 2
    assert rank_over_Q(m) == 2


def test_rank_mod_p_rejects_composite_modulus():
    with pytest.raises(NotPrimeError):
        rank_mod_p([[1]], 6)


def test_rank_mod_p_matches_oracle_elimination():
    rng = random.Random(99)

    def gf_rank(rows, p):
        m = [[x % p for x in r] for r in rows]
        rank = 0
        for c in range(len(m[0])):
            piv = next((i for i in range(rank, len(m)) if m[i][c]), None)
            if piv is None:
                continue
            m[rank], m[piv] = m[piv], m[rank]
            inv = pow(m[rank][c], -1, p)
            m[rank] = [e * inv % p for e in m[rank]]
            for i in range(len(m)):
                if i != rank and m[i][c]:
                    f = m[i][c]
                    m[i] = [(a - f * b) % p for a, b in zip(m[i], m[rank])]
            rank += 1
        return rank

    for trial in range(25):
        p = rng.choice([2, 3, 5, 7, 13])
        n_rows = rng.randint(1, 6)
        n_cols = rng.randint(1, 6)
        m = [[rng.randint(-20, 20) for _ in range(n_cols)] for _ in range(n_rows)]
        assert rank_mod_p(m, p) == gf_rank(m, p)


# ---------------------------------------------------------------------------
# field_rank over Fraction and number-field entries


def test_field_rank_fraction_entries():
    m = [
        [Fraction(1, 2), Fraction(1, 3)],
        [Fraction(3, 2), Fraction(2, 1)],
        [Fraction(2, 1), Fraction(7, 3)],
    ]
    # row3 = row1 + row2 and rows 1, 2 are independent, so the rank is 2
    assert field_rank(m) == 2


def test_field_rank_matches_integer_rank_after_clearing_denominators():
    rng = random.Random(5)
    for trial in range(15):
        n_rows = rng.randint(1, 5)
        n_cols = rng.randint(1, 5)
        m = [
            [Fraction(rng.randint(-6, 6), rng.randint(1, 4)) for _ in range(n_cols)]
            for _ in range(n_rows)
        ]
        assert field_rank(m) == fraction_rank(m)


def test_field_rank_number_field_entries():
    nf = NumberField([1, 1, 1], "w")
    w = nf.gen
    rows = [
        [nf(1), -nf(1), nf(0)],
        [nf(1), -w, nf(0)],
        [nf(1), -w * w, nf(0)],
    ]
    # all three rows annihilate (0, 0, 1); any two are independent
    assert field_rank(rows) == 2
    rows.append([nf(0), nf(0), nf(1)])
    assert field_rank(rows) == 3


# ---------------------------------------------------------------------------
# Smith normal form


def test_smith_normal_form_known_values():
    assert smith_normal_form([[2, 4], [6, 8]]) == [2, 4]
    assert smith_normal_form([[1, 0], [0, 0]]) == [1]
    assert smith_normal_form([[0, 0], [0, 0]]) == []
    assert smith_normal_form([]) == []
    assert smith_normal_form([[6]]) == [6]
    assert smith_normal_form([[2, 0], [0, 3]]) == [1, 6]


def test_smith_normal_form_properties_on_random_matrices():
    rng = random.Random(11)
    for trial in range(25):
        n_rows = rng.randint(1, 5)
        n_cols = rng.randint(1, 5)
        m = [[rng.randint(-8, 8) for _ in range(n_cols)] for _ in range(n_rows)]
        d = smith_normal_form(m)
        assert all(x > 0 for x in d)
        assert all(d[i + 1] % d[i] == 0 for i in range(len(d) - 1))
        assert len(d) == fraction_rank(m)
        for p in (2, 3, 5, 7):
            assert rank_mod_p(m, p) == sum(1 for x in d if x % p)


def test_smith_normal_form_determinant_product():
    rng = random.Random(13)

    def det(rows):
        m = [[Fraction(x) for x in r] for r in rows]
        sign = 1
        n = len(m)
        for c in range(n):
            piv = next((i for i in range(c, n) if m[i][c]), None)
            if piv is None:
                return Fraction(0)
            if piv != c:
                m[c], m[piv] = m[piv], m[c]
                sign = -sign
            for i in range(c + 1, n):
                f = m[i][c] / m[c][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[c])]
        out = Fraction(sign)
        for c in range(n):
            out *= m[c][c]
        return out

    found_nonsingular = 0
    for trial in range(40):
        n = rng.randint(1, 4)
        m = [[rng.randint(-5, 5) for _ in range(n)] for _ in range(n)]
        dval = det(m)
        if not dval:
            continue
        found_nonsingular += 1
        d = smith_normal_form(m)
        prod = 1
        for x in d:
            prod *= x
        assert prod == abs(dval)
    assert found_nonsingular > 10


# ---------------------------------------------------------------------------
# number field arithmetic (cyclotomic field of cube roots of unity)


def test_omega_relations():
    nf = NumberField([1, 1, 1], "w")
    w = nf.gen
    one = nf.one
    assert w * w + w + one == nf.zero
    assert w * w * w == one
    assert (one + w) * w == -one  # 1 + w = -w^2


def test_number_field_division():
    nf = NumberField([1, 1, 1], "w")
    w = nf.gen
    assert nf.one / w == w * w
    x = 2 * w - 3
    assert x * x.inverse() == nf.one
    assert (x / x) == nf.one
    with pytest.raises(ZeroDivisionError):
        nf.one / nf.zero


def test_number_field_coercion_and_equality():
    nf = NumberField([1, 1, 1], "w")
    assert nf(2) == nf.coerce(2)
    assert nf(Fraction(1, 2)) + nf(Fraction(1, 2)) == nf.one
    assert nf([0, 1]) == nf.gen
    assert not nf.zero
    assert nf.one
    assert nf(5) == 5 + nf.zero


def test_number_field_random_ring_axioms():
    nf = NumberField([1, 1, 1], "w")
    rng = random.Random(17)

    def rand_elt():
        return nf([Fraction(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(2)])

    for trial in range(30):
        a, b, c = rand_elt(), rand_elt(), rand_elt()
        assert (a + b) * c == a * c + b * c
        assert a * (b * c) == (a * b) * c
        assert a + b == b + a
        if b:
            assert (a / b) * b == a


def test_number_field_rejects_bad_min_poly():
    with pytest.raises(ValueError):
        NumberField([1])  # degree < 1 relation
    with pytest.raises(ValueError):
        NumberField([2, 0, 2])  # not monic
