"""Spectrum-estimation measurement simulator.

Computes the outcome distribution of the joint tensor-power measurement
that projects rho^(x)k onto the blocks of the GL(d) x S_k decomposition,
by two independent routes, together with the exponential outcome bound,
KL divergence and the Pinsker gap.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

import numpy as np

from .symfun import schur_poly, sym_dim
from .weights import DominantWeight, NormalizedSpectrum, enumerate_frames

HERMITICITY_TOL = 1e-12
EIGENVALUE_TOL = 1e-10
TRACE_TOL = 1e-10
DEFAULT_DIRECT_CAP = 4096


class ResourceError(RuntimeError):
    """Raised when the direct-projector route would exceed its size cap."""


@dataclass(frozen=True, eq=False)
class DensityOperator:
    """d x d positive semidefinite Hermitian matrix of unit trace."""

    matrix: np.ndarray

    def __post_init__(self) -> None:
        m = np.asarray(self.matrix, dtype=complex)
        if m.ndim != 2 or m.shape[0] != m.shape[1]:
            raise ValueError(f"density operator must be square, got {m.shape}")
        if np.abs(m - m.conj().T).max() > HERMITICITY_TOL:
            raise ValueError("matrix is not Hermitian within 1e-12")
        eig = np.linalg.eigvalsh(m)
        if eig.min() < -EIGENVALUE_TOL:
            raise ValueError(f"matrix has negative eigenvalue {eig.min():.3e}")
        tr = float(np.trace(m).real)
        if abs(tr - 1.0) > TRACE_TOL:
            raise ValueError(f"trace {tr} differs from 1 beyond 1e-10")
        object.__setattr__(self, "matrix", m)

    @classmethod
    def from_diagonal(cls, values) -> "DensityOperator":
        return cls(np.diag(np.asarray(values, dtype=float)).astype(complex))

    @property
    def d(self) -> int:
        return self.matrix.shape[0]

    def spectrum(self) -> NormalizedSpectrum:
        """Eigenvalues in descending order, clamped to [0, 1] within the
        boundary tolerance and renormalized."""
        eig = np.linalg.eigvalsh(self.matrix)[::-1]
        eig = np.clip(eig, 0.0, 1.0)
        eig = eig / eig.sum()
        return NormalizedSpectrum(tuple(float(v) for v in eig))


@dataclass(frozen=True)
class MeasurementDistribution:
    """Outcome probabilities of the k-copy measurement, indexed by frames
    of k with at most d rows."""

    entries: dict[tuple[int, ...], float]
    k: int
    d: int

    def __post_init__(self) -> None:
        total = sum(self.entries.values())
        if any(p < -1e-10 for p in self.entries.values()):
            raise ValueError("negative outcome probability")
        if abs(total - 1.0) > 1e-9:
            raise ValueError(f"outcome probabilities sum to {total}, not 1")

    def frames(self) -> list[tuple[int, ...]]:
        return list(self.entries)

    def __getitem__(self, frame: tuple[int, ...]) -> float:
        return self.entries[tuple(frame)]


def _frame_parts(lam) -> tuple[int, ...]:
    if isinstance(lam, DominantWeight):
        return lam.parts
    return tuple(int(p) for p in lam)


def _rows(parts: tuple[int, ...]) -> int:
    return sum(1 for p in parts if p != 0)


def projector_trace_schur(rho: DensityOperator, lam) -> float:
    """Outcome probability Tr P_lam rho^(x)k via the block structure:
    the symmetric-group factor contributes dim V_lam and the GL factor the
    Schur polynomial of the spectrum."""
    parts = _frame_parts(lam)
    if any(p < 0 for p in parts):
        raise ValueError("frame parts must be nonnegative")
    if _rows(parts) > rho.d:
        return 0.0
    spec = rho.spectrum().values
    return sym_dim(parts) * schur_poly(parts, spec)


def _index_tuples(d: int, k: int) -> np.ndarray:
    return np.array(list(itertools.product(range(d), repeat=k)), dtype=np.intp)


def _cycle_type(perm: tuple[int, ...]) -> tuple[int, ...]:
    seen = [False] * len(perm)
    cycles = []
    for start in range(len(perm)):
        if seen[start]:
            continue
        length = 0
        j = start
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        cycles.append(length)
    return tuple(sorted(cycles, reverse=True))


# permutation-action traces keyed by (rho bytes, k); small working set
_TRACE_CACHE: dict[tuple[bytes, int], tuple[list[tuple[int, ...]], np.ndarray]] = {}
_TRACE_CACHE_MAX = 8


def _permutation_traces(rho: DensityOperator, k: int) -> tuple[list[tuple[int, ...]], np.ndarray]:
    """Tr[R(pi) rho^(x)k] for every pi in S_k, with R(pi) realized as the
    permutation action on computational-basis index tuples."""
    key = (rho.matrix.tobytes(), k)
    hit = _TRACE_CACHE.get(key)
    if hit is not None:
        return hit
    d = rho.d
    tuples = _index_tuples(d, k)
    m = rho.matrix
    cycle_types = []
    traces = np.empty(math.factorial(k), dtype=complex)
    for idx, perm in enumerate(itertools.permutations(range(k))):
        inv = [0] * k
        for t, p in enumerate(perm):
            inv[p] = t
        # <j| R(pi) rho^(x)k |j> summed over j: product of rho[j_t, j_{pi^-1(t)}]
        vals = m[tuples, tuples[:, inv]]
        traces[idx] = vals.prod(axis=1).sum()
        cycle_types.append(_cycle_type(perm))
    if len(_TRACE_CACHE) >= _TRACE_CACHE_MAX:
        _TRACE_CACHE.pop(next(iter(_TRACE_CACHE)))
    _TRACE_CACHE[key] = (cycle_types, traces)
    return cycle_types, traces


def projector_trace_direct(
    rho: DensityOperator, lam, cap: int = DEFAULT_DIRECT_CAP
) -> float:
    """Outcome probability via the explicit projector
    P_lam = (dim V_lam / k!) sum_pi chi_lam(pi) R(pi) on (C^d)^(x)k.

    A test oracle, not a production path: refuses when d^k exceeds the cap.
    """
    parts = _frame_parts(lam)
    k = sum(parts)
    if k < 1:
        raise ValueError("direct route needs a frame with at least one box")
    if rho.d**k > cap:
        raise ResourceError(
            f"d^k = {rho.d**k} exceeds cap {cap}; use projector_trace_schur"
        )
    if _rows(parts) > rho.d:
        return 0.0
    from .symfun import sym_character

    cycle_types, traces = _permutation_traces(rho, k)
    chi = {ct: sym_character(parts, ct) for ct in set(cycle_types)}
    total = sum(chi[ct] * tr for ct, tr in zip(cycle_types, traces))
    total *= sym_dim(parts) / math.factorial(k)
    assert abs(total.imag) < 1e-9, "projector trace must be real"
    return float(total.real)


def measurement_distribution(rho: DensityOperator, k: int) -> MeasurementDistribution:
    """Full outcome distribution over frames of k with at most d rows,
    via the Schur route."""
    if k < 1:
        raise ValueError("number of copies k must be at least 1")
    entries = {}
    for frame in enumerate_frames(k, rho.d):
        entries[frame.parts] = projector_trace_schur(rho, frame)
    return MeasurementDistribution(entries, k, rho.d)


def kl_divergence(p: NormalizedSpectrum, q: NormalizedSpectrum) -> float:
    """Kullback-Leibler divergence D(p||q) in nats; +inf when the support
    of p escapes the support of q."""
    if p.d != q.d:
        raise ValueError("dimension mismatch in KL divergence")
    total = 0.0
    for a, b in zip(p.values, q.values):
        if a == 0.0:
            continue
        if b == 0.0:
            return math.inf
        total += a * math.log(a / b)
    return max(total, 0.0)


def kw_bound(lam, r: NormalizedSpectrum, d: int) -> float:
    """Exponential outcome bound (k+1)^(d(d-1)/2) exp(-k D(lam_bar || r))
    for a frame of k boxes; may exceed 1 in the vacuous regime."""
    parts = _frame_parts(lam)
    k = sum(parts)
    if k < 1:
        raise ValueError("bound needs a frame with at least one box")
    if _rows(parts) > d:
        raise ValueError(f"frame {parts} has more than {d} rows")
    padded = parts + (0,) * (d - len(parts))
    lam_bar = NormalizedSpectrum(tuple(p / k for p in padded[:d]))
    div = kl_divergence(lam_bar, r)
    if math.isinf(div):
        return 0.0
    return (k + 1) ** (d * (d - 1) / 2) * math.exp(-k * div)


def pinsker_gap(p: NormalizedSpectrum, q: NormalizedSpectrum) -> float:
    """Slack D(p||q) - ||p-q||_1^2 / 2 of Pinsker's inequality, in nats;
    nonnegative (inf when D is inf)."""
    div = kl_divergence(p, q)
    if math.isinf(div):
        return math.inf
    l1 = sum(abs(a - b) for a, b in zip(p.values, q.values))
    return div - l1 * l1 / 2.0
