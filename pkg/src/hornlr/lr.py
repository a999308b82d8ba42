"""Littlewood-Richardson coefficients by two independent algorithms.

The fast path counts skew tableaux with the lattice-word condition; the
ground-truth oracle computes the dimension of the S_k x S_{n-k} invariants
of V_lam (x) V_mu (x) V_nu as an exact character sum over conjugacy-class
pairs.  Arbitrary dominant weights reduce to frames by translation, and a
scaling search looks for the smallest N with a nonvanishing stretched
coefficient.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator

from .symfun import class_size, partitions, sym_character
from .weights import DominantWeight, SpectralTriple, enumerate_frames, shift_triple


@dataclass(frozen=True)
class LRResult:
    coefficient: int
    method: str  # "tableaux" or "character_oracle"
    triple: SpectralTriple

    def __post_init__(self) -> None:
        if self.coefficient < 0:
            raise ValueError("coefficient must be nonnegative")
        if self.method not in ("tableaux", "character_oracle"):
            raise ValueError(f"unknown method: {self.method}")


def _contains(outer: tuple[int, ...], inner: tuple[int, ...]) -> bool:
    return all(o >= i for o, i in zip(outer, inner))


def _count_lr_tableaux(lam: tuple[int, ...], mu: tuple[int, ...], nu: tuple[int, ...]) -> int:
    """Number of Littlewood-Richardson skew tableaux of shape lam/mu and
    content nu.

    Cells are filled in reverse reading order (rows top to bottom, right to
    left within a row), which makes the lattice-word condition a prefix
    constraint checked at each placement.
    """
    letters = len(nu)
    if letters == 0:
        return 1  # empty content over the empty skew shape
    # rows top to bottom, right to left within a row: reverse reading order
    cells = []
    for i, (lo, hi) in enumerate(zip(mu, lam)):
        for j in range(hi - 1, lo - 1, -1):
            cells.append((i, j))

    grid = [[0] * lam[0] for _ in range(len(lam))]
    counts = [0] * (letters + 1)

    def above_is_skew(i: int, j: int) -> bool:
        return i > 0 and mu[i - 1] <= j < lam[i - 1]

    def fill(idx: int) -> int:
        if idx == len(cells):
            return 1
        i, j = cells[idx]
        right = grid[i][j + 1] if j + 1 < lam[i] else letters
        above = grid[i - 1][j] if above_is_skew(i, j) else 0
        total = 0
        for v in range(above + 1, right + 1):
            if counts[v] >= nu[v - 1]:
                continue
            if v > 1 and counts[v] >= counts[v - 1]:
                continue  # lattice prefix would fail
            counts[v] += 1
            grid[i][j] = v
            total += fill(idx + 1)
            counts[v] -= 1
        grid[i][j] = 0
        return total

    return fill(0)


def lr_tableaux(t: SpectralTriple) -> LRResult:
    """LR coefficient of a frame triple by skew-tableau enumeration.

    Non-balanced or non-contained triples return 0; negative parts are a
    domain error (use lr_general).
    """
    if not t.is_frame_triple:
        raise ValueError("lr_tableaux requires nonnegative parts")
    lam, mu, nu = t.lam.parts, t.mu.parts, t.nu.parts
    if not t.balanced or not _contains(lam, mu):
        return LRResult(0, "tableaux", t)
    count = _count_lr_tableaux(lam, mu, t.nu.trimmed())
    return LRResult(count, "tableaux", t)


def lr_character_oracle(t: SpectralTriple) -> LRResult:
    """LR coefficient as dim of the S_k x S_{n-k} invariants of
    V_lam (x) V_mu (x) V_nu, via an exact character sum over cycle-type
    pairs weighted by class sizes.

    The final division by k!(n-k)! is asserted exact; a remainder would
    mean a character bug, not a domain error.
    """
    if not t.is_frame_triple:
        raise ValueError("lr_character_oracle requires nonnegative parts")
    if not t.balanced:
        raise ValueError("character oracle requires |mu| + |nu| = |lam|")
    mu, nu, lam = t.mu.trimmed(), t.nu.trimmed(), t.lam.trimmed()
    k, nk = sum(mu), sum(nu)
    total = 0
    for rho1 in partitions(k):
        w1 = class_size(rho1) * sym_character(mu, rho1)
        if w1 == 0:
            continue
        for rho2 in partitions(nk):
            w2 = class_size(rho2) * sym_character(nu, rho2)
            if w2 == 0:
                continue
            joint = tuple(sorted(rho1 + rho2, reverse=True))
            total += w1 * w2 * sym_character(lam, joint)
    denom = math.factorial(k) * math.factorial(nk)
    assert total % denom == 0, "invariant dimension must be integral"
    coeff = total // denom
    assert coeff >= 0, "invariant dimension must be nonnegative"
    return LRResult(coeff, "character_oracle", t)


def lr_general(t: SpectralTriple) -> LRResult:
    """LR coefficient of an arbitrary dominant triple.

    Translates by the minimal (m, n) making mu and nu nonnegative, then
    counts tableaux; the translation invariance of the coefficient makes
    this the value of the original triple.
    """
    if not t.balanced:
        return LRResult(0, "tableaux", t)
    m = max(0, -t.mu.parts[-1])
    n = max(0, -t.nu.parts[-1])
    shifted = shift_triple(t, m, n)
    if not shifted.lam.is_frame:
        # mu', nu' are frames, so any constituent of their product is too
        return LRResult(0, "tableaux", t)
    return LRResult(lr_tableaux(shifted).coefficient, "tableaux", t)


def find_scaling(t: SpectralTriple, n_max: int) -> int | None:
    """Smallest N <= n_max with nonzero coefficient for (N mu, N nu, N lam),
    or None.  Each scale is an independent computation."""
    if n_max < 1 or not t.balanced:
        return None
    for n in range(1, n_max + 1):
        if lr_general(t.scale(n)).coefficient != 0:
            return n
    return None


def balanced_frame_triples(max_boxes: int, d: int) -> Iterator[SpectralTriple]:
    """All frame triples with |lam| <= max_boxes and at most d rows,
    in deterministic order.  Includes empty mu or nu."""
    for n in range(max_boxes + 1):
        for lam in enumerate_frames(n, d):
            for k in range(n + 1):
                for mu in enumerate_frames(k, d):
                    for nu in enumerate_frames(n - k, d):
                        yield SpectralTriple(mu, nu, lam)


def nonzero_balanced_triples(max_boxes: int, d: int) -> list[tuple[SpectralTriple, int]]:
    """Balanced frame triples with nonzero coefficient, with their
    coefficients, at |lam| <= max_boxes and at most d rows."""
    out = []
    for t in balanced_frame_triples(max_boxes, d):
        c = lr_tableaux(t).coefficient
        if c:
            out.append((t, c))
    return out


__all__ = [
    "LRResult",
    "lr_tableaux",
    "lr_character_oracle",
    "lr_general",
    "find_scaling",
    "balanced_frame_triples",
    "nonzero_balanced_triples",
]
