"""Symmetric-group characters, irrep dimensions and Schur polynomial values.

This is the computational backend for both Littlewood-Richardson routes and
for the tensor-power measurement traces.  Everything integer is exact
(Python bignums); Schur values are evaluated either in floating point or in
exact rationals depending on the entry point.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import cache
from typing import Iterable, Sequence

Partition = tuple[int, ...]


def _as_partition(parts: Iterable[int]) -> Partition:
    """Trimmed, validated partition tuple (weakly decreasing, nonnegative)."""
    p = tuple(int(x) for x in parts)
    if any(p[i] < p[i + 1] for i in range(len(p) - 1)):
        raise ValueError(f"not weakly decreasing: {p}")
    if p and p[-1] < 0:
        raise ValueError(f"negative part in partition: {p}")
    end = len(p)
    while end > 0 and p[end - 1] == 0:
        end -= 1
    return p[:end]


@cache
def partitions(n: int) -> tuple[Partition, ...]:
    """All partitions of n >= 0 as trimmed tuples, lexicographically
    descending; partitions(0) == ((),)."""
    if n < 0:
        raise ValueError("cannot partition a negative integer")

    def gen(m: int, max_part: int):
        if m == 0:
            yield ()
            return
        for p in range(min(m, max_part), 0, -1):
            for rest in gen(m - p, p):
                yield (p,) + rest

    return tuple(gen(n, n))


def centralizer_order(rho: Iterable[int]) -> int:
    """Order of the centralizer of a permutation of cycle type rho:
    prod_j j^{m_j} m_j! over the part multiplicities m_j."""
    r = _as_partition(rho)
    z = 1
    mult: dict[int, int] = {}
    for part in r:
        mult[part] = mult.get(part, 0) + 1
    for j, m in mult.items():
        z *= j**m * math.factorial(m)
    return z


def class_size(rho: Iterable[int]) -> int:
    """Size of the conjugacy class with cycle type rho in S_{|rho|}."""
    r = _as_partition(rho)
    return math.factorial(sum(r)) // centralizer_order(r)


def _beta_set(lam: Partition) -> tuple[int, ...]:
    ell = len(lam)
    return tuple(lam[i] + (ell - 1 - i) for i in range(ell))


def _partition_from_beta(beta: Sequence[int]) -> Partition:
    b = sorted(beta, reverse=True)
    ell = len(b)
    lam = tuple(b[i] - (ell - 1 - i) for i in range(ell))
    return _as_partition(lam)


@cache
def _character(lam: Partition, rho: Partition) -> int:
    """Border-strip recursion on the first-column hook lengths (beta-set):
    removing a strip of size r moves one beta number b -> b - r, with sign
    (-1)^(number of beta numbers jumped over)."""
    if not rho:
        return 1
    r, rest = rho[0], rho[1:]
    beta = _beta_set(lam)
    occupied = set(beta)
    total = 0
    for b in beta:
        target = b - r
        if target < 0 or target in occupied:
            continue
        height = sum(1 for x in beta if target < x < b)
        new_beta = tuple(target if x == b else x for x in beta)
        total += (-1) ** height * _character(_partition_from_beta(new_beta), rest)
    return total


def sym_character(lam: Iterable[int], rho: Iterable[int]) -> int:
    """Exact character value of the S_k irreducible labelled by the frame
    lam at the conjugacy class with cycle type rho (|lam| = |rho| = k)."""
    l = _as_partition(lam)
    r = _as_partition(rho)
    if sum(l) != sum(r):
        raise ValueError(f"size mismatch: |{l}| = {sum(l)} vs |{r}| = {sum(r)}")
    # largest parts first: prunes the recursion fastest
    return _character(l, tuple(sorted(r, reverse=True)))


@cache
def _sym_dim(lam: Partition) -> int:
    n = sum(lam)
    if n == 0:
        return 1
    conj = [sum(1 for row in lam if row > c) for c in range(lam[0])]
    hooks = 1
    for i, row in enumerate(lam):
        for j in range(row):
            hooks *= (row - j) + (conj[j] - i) - 1
    return math.factorial(n) // hooks


def sym_dim(lam: Iterable[int]) -> int:
    """Dimension of the S_k irreducible for the frame lam, by the
    hook length formula."""
    return _sym_dim(_as_partition(lam))


def gl_dim(lam: Iterable[int], d: int) -> int:
    """Dimension of the GL(d) irreducible with highest weight lam, by the
    Weyl formula prod_{i<j} (lam_i - lam_j + j - i) / (j - i).

    Accepts any dominant weight (negative parts allowed) of length <= d;
    frames with more than d nonzero rows have no GL(d) irreducible and
    give 0.
    """
    if d < 1:
        raise ValueError("dimension must be at least 1")
    w = tuple(int(x) for x in lam)
    if any(w[i] < w[i + 1] for i in range(len(w) - 1)):
        raise ValueError(f"not dominant: {w}")
    if len(w) > d:
        if any(p != 0 for p in w[d:]):
            return 0
        w = w[:d]
    w = w + (0,) * (d - len(w))
    num = 1
    den = 1
    for i in range(d):
        for j in range(i + 1, d):
            num *= w[i] - w[j] + j - i
            den *= j - i
    assert num % den == 0, "Weyl quotient must be integral"
    return num // den


def _schur_eval(lam: Partition, xs: tuple):
    """Branching-rule evaluation: peel off the last variable over all
    partitions interlacing lam.  Works for any numeric type of xs."""
    memo: dict = {}

    def rec(l: Partition, m: int):
        if len(l) > m:
            return 0
        if m == 0:
            return 1
        key = (l, m)
        if key in memo:
            return memo[key]
        x = xs[m - 1]
        if m == 1:
            val = x ** l[0] if l else x**0
            memo[key] = val
            return val
        padded = l + (0,) * (m - len(l))
        size = sum(l)
        total = 0
        for mu in _interlacing(padded):
            total += x ** (size - sum(mu)) * rec(mu, m - 1)
        memo[key] = total
        return total

    return rec(lam, len(xs))


def _interlacing(lam_padded: Partition):
    """All partitions mu of length len(lam)-1 with lam_{i+1} <= mu_i <= lam_i."""
    m = len(lam_padded)

    def gen(i: int, prefix: tuple[int, ...]):
        if i == m - 1:
            yield _as_partition(prefix)
            return
        lo, hi = lam_padded[i + 1], lam_padded[i]
        for v in range(hi, lo - 1, -1):
            yield from gen(i + 1, prefix + (v,))

    yield from gen(0, ())


def schur_poly(lam: Iterable[int], x: Sequence[float]) -> float:
    """Schur polynomial s_lam evaluated at a nonnegative real vector,
    by semistandard-tableau (branching) weight enumeration."""
    l = _as_partition(lam)
    xs = tuple(float(v) for v in x)
    if any(v < 0 for v in xs):
        raise ValueError("schur_poly requires nonnegative arguments")
    if len(l) > len(xs):
        return 0.0
    return float(_schur_eval(l, xs))


def schur_poly_exact(lam: Iterable[int], x: Sequence) -> Fraction:
    """Exact rational Schur value for rational arguments."""
    l = _as_partition(lam)
    xs = tuple(Fraction(v) for v in x)
    if any(v < 0 for v in xs):
        raise ValueError("schur_poly_exact requires nonnegative arguments")
    if len(l) > len(xs):
        return Fraction(0)
    return Fraction(_schur_eval(l, xs))
