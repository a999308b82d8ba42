from fractions import Fraction

import numpy as np
import pytest

from hornlr.lr import (
    balanced_frame_triples,
    find_scaling,
    lr_character_oracle,
    lr_general,
    lr_tableaux,
    nonzero_balanced_triples,
)
from hornlr.symfun import partitions, schur_poly_exact
from hornlr.weights import DominantWeight, SpectralTriple, shift_triple

T = SpectralTriple.from_parts


@pytest.mark.parametrize(
    "mu,nu,lam,expected",
    [
        ((1,), (1,), (2,), 1),
        ((1,), (1,), (1, 1), 1),
        ((2, 1, 0), (2, 1, 0), (3, 2, 1), 2),
        ((1, 1), (1, 1), (2, 1, 1), 1),
        ((2,), (3,), (5,), 1),
        ((2, 1), (2, 1), (4, 2), 1),
        ((0, 0), (0, 0), (0, 0), 1),
    ],
)
def test_known_coefficients_both_routes(mu, nu, lam, expected):
    t = T(mu, nu, lam)
    assert lr_tableaux(t).coefficient == expected
    assert lr_character_oracle(t).coefficient == expected


def test_tableaux_zero_cases():
    assert lr_tableaux(T((1,), (1,), (3,))).coefficient == 0  # unbalanced
    assert lr_tableaux(T((2, 2), (1, 0), (3, 1, 1))).coefficient == 0  # mu not in lam
    with pytest.raises(ValueError):
        lr_tableaux(T((0, -1), (1, 0), (1, -1)))


def test_oracle_rejects_unbalanced():
    with pytest.raises(ValueError):
        lr_character_oracle(T((1,), (1,), (3,)))


def test_routes_agree_exhaustively_small():
    for t in balanced_frame_triples(6, 3):
        assert lr_tableaux(t).coefficient == lr_character_oracle(t).coefficient


def test_schur_product_expansion_oracle():
    """Independent consistency oracle: s_mu * s_nu = sum_lam c * s_lam as
    exact rational functions, checked at random rational points.  This uses
    neither the tableau rule nor the character sum."""
    rng = np.random.default_rng(5)
    d = 3
    for mu in partitions(3):
        for nu in partitions(2):
            if len(mu) > d or len(nu) > d:
                continue
            n = sum(mu) + sum(nu)
            for _ in range(3):
                x = tuple(Fraction(int(a), int(b)) for a, b in
                          zip(rng.integers(0, 7, size=d), rng.integers(1, 7, size=d)))
                lhs = schur_poly_exact(mu, x) * schur_poly_exact(nu, x)
                rhs = Fraction(0)
                for lam in partitions(n):
                    if len(lam) > d:
                        continue
                    c = lr_tableaux(T(mu, nu, lam)).coefficient
                    if c:
                        rhs += c * schur_poly_exact(lam, x)
                assert lhs == rhs


def test_symmetry_in_mu_nu():
    for t in balanced_frame_triples(6, 3):
        swapped = SpectralTriple(t.nu, t.mu, t.lam)
        assert lr_tableaux(t).coefficient == lr_tableaux(swapped).coefficient


def test_lr_general_examples():
    assert lr_general(T((0, -1), (1, 0), (1, -1))).coefficient == 1
    assert lr_general(T((-1, -1), (0, 0), (-1, -1))).coefficient == 1
    # frames delegate directly
    for t in balanced_frame_triples(5, 2):
        assert lr_general(t).coefficient == lr_tableaux(t).coefficient
    # unbalanced shifted triple gives zero
    assert lr_general(T((0, -1), (0, 0), (5, 0))).coefficient == 0


def test_lr_general_shift_invariance_sampled():
    rng = np.random.default_rng(17)
    for _ in range(60):
        parts = [
            tuple(sorted((int(v) for v in rng.integers(-3, 4, size=3)), reverse=True))
            for _ in range(3)
        ]
        t = T(*parts)
        base = lr_general(t).coefficient
        for m in range(-2, 3):
            for n in range(-2, 3):
                assert lr_general(shift_triple(t, m, n)).coefficient == base


def test_find_scaling_examples():
    assert find_scaling(T((1,), (1,), (2,)), 5) == 1
    assert find_scaling(T((1,), (1,), (3,)), 5) is None
    assert find_scaling(T((1, 0), (1, 0), (1, 1)), 5) == 1


def test_scaling_corollary():
    for t in balanced_frame_triples(6, 3):
        c = lr_tableaux(t).coefficient
        if c:
            for scale in (2, 3):
                assert lr_tableaux(t.scale(scale)).coefficient != 0


def test_saturation_no_counterexample_small():
    for t in balanced_frame_triples(5, 3):
        if lr_tableaux(t.scale(2)).coefficient != 0:
            assert lr_tableaux(t).coefficient != 0


def test_semigroup_sampled():
    nonzero = nonzero_balanced_triples(5, 3)
    rng = np.random.default_rng(23)
    for _ in range(150):
        t1, _ = nonzero[rng.integers(len(nonzero))]
        t2, _ = nonzero[rng.integers(len(nonzero))]
        summed = SpectralTriple(t1.mu + t2.mu, t1.nu + t2.nu, t1.lam + t2.lam)
        assert lr_tableaux(summed).coefficient != 0


def test_empty_mu_reduces_to_restriction():
    # c_{0,nu}^lam = delta_{nu,lam}
    empty = DominantWeight((0, 0))
    for lam in partitions(4):
        if len(lam) > 2:
            continue
        lam_w = DominantWeight(lam + (0,) * (2 - len(lam)))
        for nu in partitions(4):
            if len(nu) > 2:
                continue
            nu_w = DominantWeight(nu + (0,) * (2 - len(nu)))
            t = SpectralTriple(empty, nu_w, lam_w)
            expected = 1 if nu == lam else 0
            assert lr_tableaux(t).coefficient == expected
            assert lr_character_oracle(t).coefficient == expected
