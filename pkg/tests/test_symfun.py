import math
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction

import pytest

from hornlr.symfun import (
    class_size,
    centralizer_order,
    gl_dim,
    partitions,
    schur_poly,
    schur_poly_exact,
    sym_character,
    sym_dim,
)


def brute_force_syt_count(shape: tuple[int, ...]) -> int:
    """Independent dimension oracle: count standard Young tableaux by
    placing 1..n in all corner-growth orders."""
    n = sum(shape)
    if n == 0:
        return 1

    def grow(rows: tuple[int, ...], placed: int) -> int:
        if placed == n:
            return 1
        total = 0
        for i in range(len(shape)):
            row = rows[i]
            if row < shape[i] and (i == 0 or rows[i - 1] > row):
                total += grow(rows[:i] + (row + 1,) + rows[i + 1 :], placed + 1)
        return total

    return grow((0,) * len(shape), 0)


# classical S_4 table; classes ordered (1^4), (2,1,1), (2,2), (3,1), (4)
S4_CLASSES = [(1, 1, 1, 1), (2, 1, 1), (2, 2), (3, 1), (4,)]
S4_TABLE = {
    (4,): [1, 1, 1, 1, 1],
    (3, 1): [3, 1, -1, 0, -1],
    (2, 2): [2, 0, 2, -1, 0],
    (2, 1, 1): [3, -1, -1, 0, 1],
    (1, 1, 1, 1): [1, -1, 1, 1, -1],
}


def test_partitions_enumeration():
    assert partitions(0) == ((),)
    assert partitions(4) == ((4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1))
    assert len(partitions(8)) == 22


def test_class_sizes_sum_to_group_order():
    for k in range(1, 9):
        assert sum(class_size(r) for r in partitions(k)) == math.factorial(k)
    assert centralizer_order((1, 1, 1)) == 6
    assert class_size((2, 1)) == 3
    assert class_size((3,)) == 2


def test_character_table_s3():
    classes = [(1, 1, 1), (2, 1), (3,)]
    assert [sym_character((3,), r) for r in classes] == [1, 1, 1]
    assert [sym_character((2, 1), r) for r in classes] == [2, 0, -1]
    assert [sym_character((1, 1, 1), r) for r in classes] == [1, -1, 1]


def test_character_table_s4():
    for lam, row in S4_TABLE.items():
        assert [sym_character(lam, r) for r in S4_CLASSES] == row


def test_character_spec_examples():
    for k in range(1, 7):
        for rho in partitions(k):
            assert sym_character((k,), rho) == 1
    assert sym_character((1, 1), (2,)) == -1
    assert sym_character((2, 1), (1, 1, 1)) == 2


def test_character_size_mismatch():
    with pytest.raises(ValueError):
        sym_character((2, 1), (2, 2))


def test_character_column_orthogonality():
    for k in range(1, 7):
        for r1 in partitions(k):
            for r2 in partitions(k):
                total = sum(
                    sym_character(l, r1) * sym_character(l, r2) for l in partitions(k)
                )
                expected = math.factorial(k) // class_size(r1) if r1 == r2 else 0
                assert total == expected


def test_sym_dim_against_syt_oracle():
    for k in range(0, 7):
        for lam in partitions(k):
            expected = brute_force_syt_count(lam)
            assert sym_dim(lam) == expected
            if k:
                assert sym_character(lam, (1,) * k) == expected


def test_sym_dim_examples():
    for k in (1, 4, 9):
        assert sym_dim((k,)) == 1
    assert sym_dim((2, 1)) == 2
    assert sym_dim((2, 2)) == 2


def test_sum_of_squared_dims_is_factorial():
    for k in range(0, 9):
        assert sum(sym_dim(l) ** 2 for l in partitions(k)) == math.factorial(k)


def test_gl_dim_examples():
    assert gl_dim((1, 0), 2) == 2
    assert gl_dim((1, 1), 2) == 1
    assert gl_dim((2, 0), 2) == 3
    assert gl_dim((2, 1, 0), 3) == 8
    # negative dominant weights are fine
    assert gl_dim((0, -1), 2) == 2
    # too many rows for GL(d)
    assert gl_dim((1, 1, 1), 2) == 0


def test_schur_poly_examples():
    a, b = 0.3, 1.7
    assert schur_poly((1,), (a, b)) == pytest.approx(a + b)
    assert schur_poly((1, 1), (a, b)) == pytest.approx(a * b)
    assert schur_poly_exact((2,), (Fraction(1, 2), Fraction(1, 2))) == Fraction(3, 4)
    assert schur_poly((2, 1, 1), (0.5, 0.5)) == 0.0


def test_schur_principal_specialization_is_weyl_dim():
    for d in range(1, 5):
        for k in range(0, 9):
            for lam in partitions(k):
                assert schur_poly_exact(lam, (1,) * d) == gl_dim(lam, d)


def test_schur_weyl_completeness():
    for d in (1, 2, 3):
        for k in range(1, 9):
            total = sum(
                gl_dim(l, d) * sym_dim(l) for l in partitions(k) if len(l) <= d
            )
            assert total == d**k


def test_concurrent_character_calls_match_sequential():
    jobs = [(lam, rho) for lam in partitions(6) for rho in partitions(6)]
    expected = [sym_character(l, r) for l, r in jobs]
    with ThreadPoolExecutor(max_workers=8) as pool:
        got = list(pool.map(lambda j: sym_character(*j), jobs))
    assert got == expected
