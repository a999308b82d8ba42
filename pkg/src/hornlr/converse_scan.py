"""Converse scan: integer triples with nonvanishing coefficient whose
normalizations approach prescribed spectra.

Given target spectra (r_A, r_B, r_C) and a mixing weight p, each scale n
is split as k = round(p n), candidate frame triples are taken from l1
balls of radius eps(n) around the targets, and the closest candidate with
a nonzero Littlewood-Richardson coefficient is the witness at that scale.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .lr import lr_character_oracle, lr_tableaux
from .schur_weyl import DensityOperator
from .weights import (
    DominantWeight,
    NormalizedSpectrum,
    SpectralTriple,
    enumerate_frames,
    normalize,
)

DEFAULT_C0 = 2.0
ORACLE_RECHECK_MAX_BOXES = 12


@dataclass(frozen=True)
class ScanTarget:
    """Spectra to approximate and the mixing weight p in (0, 1].

    r_C is supplied independently as the spectrum of the given mixture,
    never reconstructed from r_A and r_B (those do not determine it)."""

    rA: NormalizedSpectrum
    rB: NormalizedSpectrum
    rC: NormalizedSpectrum
    p: float

    def __post_init__(self) -> None:
        if not (self.rA.d == self.rB.d == self.rC.d):
            raise ValueError("target spectra must share dimension d")
        if not 0.0 < self.p <= 1.0:
            raise ValueError(f"p must lie in (0, 1], got {self.p}")

    @property
    def d(self) -> int:
        return self.rA.d

    @classmethod
    def from_states(
        cls, rhoA: DensityOperator, rhoB: DensityOperator, p: float
    ) -> "ScanTarget":
        """Build a target from two states, with r_C the spectrum of the
        convex mixture p rho_A + (1-p) rho_B."""
        return cls(
            rA=rhoA.spectrum(),
            rB=rhoB.spectrum(),
            rC=mixture_spectrum(rhoA, rhoB, p),
            p=p,
        )


@dataclass(frozen=True)
class ScanWitness:
    """One converse-scan hit: a nonzero-coefficient frame triple at scale n
    whose normalizations sit inside the three distance balls."""

    n: int
    k: int
    triple: SpectralTriple
    distances: tuple[float, float, float]
    coefficient: int

    def __post_init__(self) -> None:
        if self.coefficient < 1:
            raise ValueError("witness coefficient must be positive")


@dataclass(frozen=True)
class ScanReport:
    target: ScanTarget
    c0: float
    witnesses: tuple[ScanWitness, ...]
    missing: tuple[int, ...]  # scales searched with no ball candidate hit
    skipped: tuple[tuple[int, str], ...]  # degenerate scales, with notes


def mixture_spectrum(
    rhoA: DensityOperator, rhoB: DensityOperator, p: float
) -> NormalizedSpectrum:
    """Descending spectrum of the convex mixture p rho_A + (1-p) rho_B."""
    if rhoA.d != rhoB.d:
        raise ValueError("mixture needs states of equal dimension")
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"p must lie in [0, 1], got {p}")
    return DensityOperator(p * rhoA.matrix + (1 - p) * rhoB.matrix).spectrum()


def epsilon_schedule(n: int, d: int, c0: float = DEFAULT_C0) -> float:
    """Ball radius c0 * d * sqrt(log(n) / n) at scale n >= 2."""
    if n < 2:
        raise ValueError("schedule needs n >= 2")
    return c0 * d * math.sqrt(math.log(n) / n)


def _round_half_up(x: float) -> int:
    return int(math.floor(x + 0.5))


def _ball_frames(
    boxes: int, d: int, center: NormalizedSpectrum, eps: float
) -> list[tuple[DominantWeight, float]]:
    out = []
    for f in enumerate_frames(boxes, d):
        dist = normalize(f).l1_distance(center) if boxes > 0 else 0.0
        if dist <= eps:
            out.append((f, dist))
    return out


def candidate_triples(
    target: ScanTarget, n: int, eps: float
) -> list[tuple[SpectralTriple, tuple[float, float, float]]]:
    """Balanced frame triples at scale n whose normalizations lie in the
    three l1 balls of radius eps, sorted by total distance (ties broken
    lexicographically for determinism).

    The split is k = round_half_up(p n).  For p = 1 the nu component is the
    empty frame with distance 0 by convention.
    """
    d = target.d
    k = _round_half_up(target.p * n)
    k = min(k, n)
    mus = _ball_frames(k, d, target.rA, eps)
    nus = _ball_frames(n - k, d, target.rB, eps)
    lams = _ball_frames(n, d, target.rC, eps)
    found = []
    for lam, dl in lams:
        for mu, dm in mus:
            for nu, dn in nus:
                found.append(
                    (SpectralTriple(mu, nu, lam), (dm, dn, dl))
                )
    found.sort(
        key=lambda item: (
            sum(item[1]),
            item[0].lam.parts,
            item[0].mu.parts,
            item[0].nu.parts,
        )
    )
    return found


def scan(
    target: ScanTarget,
    n_values: list[int],
    c0: float = DEFAULT_C0,
    oracle_recheck: bool = True,
) -> ScanReport:
    """Search each scale n for the closest ball candidate with nonzero
    coefficient.

    Scales where the split degenerates (k = 0, or n - k = 0 with p < 1)
    are skipped with a note; p = 1 legitimately uses empty nu.  At small
    scales each witness is re-verified against the character oracle.
    """
    witnesses = []
    missing = []
    skipped = []
    for n in n_values:
        if n < 2:
            skipped.append((n, "scale below 2"))
            continue
        k = min(_round_half_up(target.p * n), n)
        if k == 0:
            skipped.append((n, "k = 0: mu side empty, p too small at this scale"))
            continue
        if n - k == 0 and target.p < 1.0:
            skipped.append((n, "n - k = 0: nu side empty although p < 1"))
            continue
        eps = epsilon_schedule(n, target.d, c0)
        hit = None
        for triple, dists in candidate_triples(target, n, eps):
            c = lr_tableaux(triple).coefficient
            if c:
                hit = ScanWitness(n=n, k=k, triple=triple, distances=dists, coefficient=c)
                break
        if hit is None:
            missing.append(n)
            continue
        if oracle_recheck and hit.triple.lam.total <= ORACLE_RECHECK_MAX_BOXES:
            oracle = lr_character_oracle(hit.triple).coefficient
            assert oracle == hit.coefficient, "tableaux/oracle disagreement in scan"
        witnesses.append(hit)
    return ScanReport(
        target=target,
        c0=c0,
        witnesses=tuple(witnesses),
        missing=tuple(missing),
        skipped=tuple(skipped),
    )
