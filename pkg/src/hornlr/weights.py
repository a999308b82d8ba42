"""Dominant weights, Young frames, spectra and frame enumeration.

A dominant weight is a weakly decreasing integer vector of fixed length d.
When all parts are nonnegative it is a Young frame and doubles as the label
of a symmetric-group irreducible.  Triples (mu, nu, lam) of common dimension
are the basic object of the toolkit.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator


def dominance_check(parts: Iterable[int]) -> bool:
    """True iff the integer vector is weakly decreasing."""
    p = tuple(parts)
    return all(p[i] >= p[i + 1] for i in range(len(p) - 1))


@dataclass(frozen=True)
class DominantWeight:
    """Weakly decreasing integer vector of explicit dimension d.

    The dimension is the stored length; trailing zeros are significant
    padding, never inferred away.
    """

    parts: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "parts", tuple(int(p) for p in self.parts))
        if len(self.parts) < 1:
            raise ValueError("dominant weight needs dimension d >= 1")
        if not dominance_check(self.parts):
            raise ValueError(f"parts not weakly decreasing: {self.parts}")

    @property
    def d(self) -> int:
        return len(self.parts)

    @property
    def is_frame(self) -> bool:
        return self.parts[-1] >= 0

    @property
    def total(self) -> int:
        """Box count |w| = sum of parts."""
        return sum(self.parts)

    def trimmed(self) -> tuple[int, ...]:
        """Parts with trailing zeros removed (frames only)."""
        if not self.is_frame:
            raise ValueError("trimming is only defined for frames")
        end = len(self.parts)
        while end > 0 and self.parts[end - 1] == 0:
            end -= 1
        return self.parts[:end]

    def padded(self, d: int) -> "DominantWeight":
        """Copy padded with trailing zeros to dimension d >= self.d."""
        if d < self.d:
            raise ValueError(f"cannot pad dimension {self.d} down to {d}")
        if d > self.d and self.parts[-1] < 0:
            raise ValueError("cannot zero-pad a weight with negative last part")
        return DominantWeight(self.parts + (0,) * (d - self.d))

    def shift(self, m: int) -> "DominantWeight":
        """Add m to every part (the w + m*(1^d) translation)."""
        return DominantWeight(tuple(p + m for p in self.parts))

    def scale(self, n: int) -> "DominantWeight":
        """Multiply every part by n >= 0."""
        if n < 0:
            raise ValueError("scale factor must be nonnegative")
        return DominantWeight(tuple(n * p for p in self.parts))

    def __add__(self, other: "DominantWeight") -> "DominantWeight":
        if self.d != other.d:
            raise ValueError("dimension mismatch in weight addition")
        return DominantWeight(tuple(a + b for a, b in zip(self.parts, other.parts)))

    def __str__(self) -> str:
        return format_weight(self)


@dataclass(frozen=True)
class NormalizedSpectrum:
    """Descending probability vector: the normalized form of a frame
    or the spectrum of a density operator."""

    values: tuple[float, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "values", tuple(float(v) for v in self.values))
        v = self.values
        if len(v) < 1:
            raise ValueError("spectrum needs dimension d >= 1")
        if any(v[i] < v[i + 1] for i in range(len(v) - 1)):
            raise ValueError(f"spectrum not descending: {v}")
        if v[-1] < 0.0:
            raise ValueError(f"spectrum has negative entry: {v}")
        if abs(sum(v) - 1.0) > 1e-12:
            raise ValueError(f"spectrum sums to {sum(v)}, not 1")

    @property
    def d(self) -> int:
        return len(self.values)

    def l1_distance(self, other: "NormalizedSpectrum") -> float:
        if self.d != other.d:
            raise ValueError("dimension mismatch in spectrum distance")
        return sum(abs(a - b) for a, b in zip(self.values, other.values))


@dataclass(frozen=True)
class SpectralTriple:
    """Triple (mu, nu, lam) of dominant weights of equal dimension."""

    mu: DominantWeight
    nu: DominantWeight
    lam: DominantWeight

    def __post_init__(self) -> None:
        if not (self.mu.d == self.nu.d == self.lam.d):
            raise ValueError("triple members must share dimension d")

    @classmethod
    def from_parts(
        cls,
        mu: Iterable[int],
        nu: Iterable[int],
        lam: Iterable[int],
    ) -> "SpectralTriple":
        """Build a triple, zero-padding all three weights to a common d."""
        ws = [DominantWeight(tuple(p)) for p in (mu, nu, lam)]
        d = max(w.d for w in ws)
        return cls(*(w.padded(d) for w in ws))

    @property
    def d(self) -> int:
        return self.mu.d

    @property
    def balanced(self) -> bool:
        """Box-count condition |mu| + |nu| = |lam|, necessary for c != 0."""
        return self.mu.total + self.nu.total == self.lam.total

    @property
    def is_frame_triple(self) -> bool:
        return self.mu.is_frame and self.nu.is_frame and self.lam.is_frame

    def scale(self, n: int) -> "SpectralTriple":
        return SpectralTriple(self.mu.scale(n), self.nu.scale(n), self.lam.scale(n))


def normalize(w: DominantWeight) -> NormalizedSpectrum:
    """Normalized spectrum (w_1/|w|, ..., w_d/|w|) of a nonempty frame.

    Normalizing the zero weight is a hard error, never a silent uniform
    vector.
    """
    if w.parts[-1] < 0:
        raise ValueError(f"cannot normalize weight with negative parts: {w.parts}")
    total = w.total
    if total <= 0:
        raise ValueError("cannot normalize weight with zero total")
    return NormalizedSpectrum(tuple(p / total for p in w.parts))


def shift_triple(t: SpectralTriple, m: int, n: int) -> SpectralTriple:
    """Translate (mu, nu, lam) -> (mu + m, nu + n, lam + m + n) componentwise.

    The Littlewood-Richardson coefficient is invariant under this map, which
    is how coefficients of weights with negative parts are defined.
    """
    return SpectralTriple(t.mu.shift(m), t.nu.shift(n), t.lam.shift(m + n))


def _descending_partitions(n: int, slots: int, max_part: int) -> Iterator[tuple[int, ...]]:
    if slots == 0:
        if n == 0:
            yield ()
        return
    lo = -(-n // slots)  # smallest feasible leading part
    for p in range(min(n, max_part), lo - 1, -1):
        for rest in _descending_partitions(n - p, slots - 1, p):
            yield (p,) + rest


def enumerate_frames(n: int, d: int) -> list[DominantWeight]:
    """All partitions of n into at most d parts, zero-padded to length d,
    in lexicographically descending order.

    The list is always shorter than (n+1)^d.
    """
    if n < 0:
        raise ValueError("box count must be nonnegative")
    if d < 1:
        raise ValueError("dimension must be at least 1")
    return [DominantWeight(p) for p in _descending_partitions(n, d, n if n else 0)]


def format_weight(w: DominantWeight) -> str:
    """Serialize as comma-separated integers, e.g. "3,2,1"."""
    return ",".join(str(p) for p in w.parts)


def parse_weight(text: str) -> DominantWeight:
    """Parse the comma-separated integer form, e.g. "3,2,1"."""
    try:
        parts = tuple(int(tok.strip()) for tok in text.split(","))
    except ValueError as exc:
        raise ValueError(f"malformed weight string: {text!r}") from exc
    return DominantWeight(parts)
