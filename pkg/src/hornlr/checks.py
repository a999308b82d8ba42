"""Self-check suite: runs the cross-module invariants at configurable caps.

Backs the `check` CLI subcommand.  Every check is deterministic for a given
seed and reports a single ok/fail line with a short detail string; the
report carries no timing or environment data, so identical inputs give
byte-identical output.
"""

from __future__ import annotations

import math
from statistics import median

import numpy as np

from . import converse_scan, horn_realize, lr, schur_weyl, symfun, weights


def _random_density(rng: np.random.Generator, d: int) -> schur_weyl.DensityOperator:
    z = rng.standard_normal((d, d)) + 1j * rng.standard_normal((d, d))
    h = z @ z.conj().T
    return schur_weyl.DensityOperator(h / np.trace(h).real)


def _random_dominant(rng: np.random.Generator, d: int, lo: int = -4, hi: int = 4):
    parts = sorted((int(v) for v in rng.integers(lo, hi + 1, size=d)), reverse=True)
    return weights.DominantWeight(tuple(parts))


def check_weights(quick: bool, seed: int) -> tuple[bool, str]:
    n_cap = 8 if quick else 12
    for n in range(n_cap + 1):
        for d in range(1, 5):
            frames = weights.enumerate_frames(n, d)
            # the (n+1)^d frame-count bound is strict for n >= 1 (at n = 0
            # the single empty frame attains it)
            if n >= 1 and len(frames) >= (n + 1) ** d:
                return False, f"frame count bound fails at n={n} d={d}"
            if n == 0 and len(frames) != 1:
                return False, f"expected exactly one empty frame at d={d}"
            if len(set(f.parts for f in frames)) != len(frames):
                return False, f"duplicate frames at n={n} d={d}"
            for f in frames:
                if not weights.dominance_check(f.parts) or f.total != n:
                    return False, f"bad frame {f.parts} at n={n} d={d}"
    rng = np.random.default_rng([seed, 1])
    for _ in range(50 if quick else 200):
        t = weights.SpectralTriple(
            _random_dominant(rng, 3), _random_dominant(rng, 3), _random_dominant(rng, 3)
        )
        m, n = int(rng.integers(-3, 4)), int(rng.integers(-3, 4))
        back = weights.shift_triple(weights.shift_triple(t, m, n), -m, -n)
        if back != t:
            return False, "shift round-trip failed"
    for f in weights.enumerate_frames(5, 3):
        if f.total == 0:
            continue
        s = weights.normalize(f)
        if abs(sum(s.values) - 1.0) > 1e-12:
            return False, "normalize does not sum to 1"
    return True, f"frame bound to n={n_cap}, shift round-trips, normalization"


def check_symfun(quick: bool, seed: int) -> tuple[bool, str]:
    k_cap = 6 if quick else 8
    for k in range(k_cap + 1):
        if sum(symfun.sym_dim(l) ** 2 for l in symfun.partitions(k)) != math.factorial(k):
            return False, f"sum of dim^2 != k! at k={k}"
        for l in symfun.partitions(k):
            if k and symfun.sym_character(l, (1,) * k) != symfun.sym_dim(l):
                return False, f"identity character != dim at {l}"
    for d in range(1, 5):
        for k in range(0, (6 if quick else 8) + 1):
            for l in symfun.partitions(k):
                if symfun.schur_poly_exact(l, (1,) * d) != symfun.gl_dim(l, d):
                    return False, f"principal Schur value != Weyl dim at {l}, d={d}"
    for d in (1, 2, 3):
        for k in range(1, (8 if quick else 10) + 1):
            total = sum(
                symfun.gl_dim(l, d) * symfun.sym_dim(l)
                for l in symfun.partitions(k)
                if len(l) <= d
            )
            if total != d**k:
                return False, f"duality dimension count != d^k at d={d} k={k}"
    return True, f"orthogonality, dimensions and duality counts to k={k_cap}"


def check_lr_agreement(quick: bool, seed: int) -> tuple[bool, str]:
    boxes, d = (6, 3) if quick else (8, 4)
    count = 0
    for t in lr.balanced_frame_triples(boxes, d):
        count += 1
        a = lr.lr_tableaux(t).coefficient
        b = lr.lr_character_oracle(t).coefficient
        if a != b:
            return False, f"route disagreement {a} vs {b} at {t}"
        sym = lr.lr_tableaux(weights.SpectralTriple(t.nu, t.mu, t.lam)).coefficient
        if a != sym:
            return False, f"mu/nu symmetry broken at {t}"
    return True, f"{count} exhaustive triples, both routes and symmetry"


def check_lr_structure(quick: bool, seed: int) -> tuple[bool, str]:
    boxes = 4 if quick else 6
    nonzero = lr.nonzero_balanced_triples(boxes, 3)
    rng = np.random.default_rng([seed, 2])
    pairs = 100 if quick else 500
    for _ in range(pairs):
        (t1, _), (t2, _) = (
            nonzero[rng.integers(len(nonzero))],
            nonzero[rng.integers(len(nonzero))],
        )
        summed = weights.SpectralTriple(t1.mu + t2.mu, t1.nu + t2.nu, t1.lam + t2.lam)
        if lr.lr_tableaux(summed).coefficient == 0:
            return False, f"semigroup violation at {t1} + {t2}"
    for t in lr.balanced_frame_triples(boxes, 3):
        c1 = lr.lr_tableaux(t).coefficient
        c2 = lr.lr_tableaux(t.scale(2)).coefficient
        if c2 != 0 and c1 == 0:
            return False, f"saturation counterexample at {t}"
        if c1 != 0 and c2 == 0:
            return False, f"scaling corollary fails at {t}"
    rng2 = np.random.default_rng([seed, 3])
    for _ in range(40 if quick else 200):
        t = weights.SpectralTriple(
            _random_dominant(rng2, 2), _random_dominant(rng2, 2), _random_dominant(rng2, 2)
        )
        base = lr.lr_general(t).coefficient
        for m in (-2, 0, 2):
            for n in (-1, 1):
                if lr.lr_general(weights.shift_triple(t, m, n)).coefficient != base:
                    return False, f"shift invariance fails at {t}, m={m} n={n}"
    return True, f"semigroup x{pairs}, saturation to {boxes} boxes, shift invariance"


def check_measurement(quick: bool, seed: int) -> tuple[bool, str]:
    rng = np.random.default_rng([seed, 4])
    n_states = 4 if quick else 10
    k_cap = 6 if quick else 10
    for d in (2, 3):
        for _ in range(n_states):
            rho = _random_density(rng, d)
            r = rho.spectrum()
            for k in range(1, k_cap + 1):
                dist = schur_weyl.measurement_distribution(rho, k)
                if abs(sum(dist.entries.values()) - 1.0) > 1e-9:
                    return False, f"distribution sum off at d={d} k={k}"
                for frame, prob in dist.entries.items():
                    if prob > schur_weyl.kw_bound(frame, r, d) + 1e-12:
                        return False, f"outcome bound violated at {frame}"
    direct_k = 4 if quick else 6
    rho = _random_density(rng, 2)
    for k in range(1, direct_k + 1):
        for f in weights.enumerate_frames(k, 2):
            a = schur_weyl.projector_trace_schur(rho, f)
            b = schur_weyl.projector_trace_direct(rho, f)
            if abs(a - b) > 1e-10:
                return False, f"route disagreement at k={k} {f.parts}"
    return True, f"sums, bound and route agreement to k={k_cap}"


def check_realize(quick: bool, seed: int) -> tuple[bool, str]:
    boxes, d = (4, 2) if quick else (6, 3)
    report = horn_realize.verify_theorem1_sweep(boxes, d, seed=seed)
    if report.success_rate != 1.0:
        return False, f"sweep failures: {report.failures}"
    return (
        True,
        f"{report.total} witnesses to {boxes} boxes, worst residual "
        f"{report.worst_residual:.2e}",
    )


def check_scan(quick: bool, seed: int) -> tuple[bool, str]:
    rng = np.random.default_rng([seed, 5])
    targets = 4 if quick else 8
    scales = [4, 8] if quick else [8, 16, 32]
    shrunk = 0
    for i in range(targets):
        p = 0.5 if i % 2 == 0 else 0.25
        a = float(rng.uniform(0.5, 0.95))
        b = float(rng.uniform(0.5, 0.95))
        target = converse_scan.ScanTarget.from_states(
            schur_weyl.DensityOperator.from_diagonal([a, 1 - a]),
            schur_weyl.DensityOperator.from_diagonal([b, 1 - b]),
            p,
        )
        rep = converse_scan.scan(target, scales)
        if rep.missing or len(rep.witnesses) != len(scales):
            return False, f"scan missed scales {rep.missing} for target {i}"
        meds = [median(w.distances) for w in rep.witnesses]
        if meds[-1] < meds[0] or meds[0] == 0.0:
            shrunk += 1
    # individual targets may fluctuate; require the bulk to improve
    needed = targets - max(1, targets // 10)
    if shrunk < needed:
        return False, f"distance shrank in only {shrunk}/{targets} targets"
    return True, f"{targets} targets over scales {scales}, {shrunk} improved"


ALL_CHECKS = [
    ("weights", check_weights),
    ("symfun", check_symfun),
    ("lr_agreement", check_lr_agreement),
    ("lr_structure", check_lr_structure),
    ("measurement", check_measurement),
    ("realize", check_realize),
    ("scan", check_scan),
]


def run_checks(quick: bool = True, seed: int = 0) -> dict:
    """Run the whole suite; the returned report is a plain JSON-ready dict."""
    results = []
    for name, fn in ALL_CHECKS:
        ok, details = fn(quick, seed)
        results.append({"name": name, "ok": ok, "details": details})
    return {
        "mode": "quick" if quick else "full",
        "seed": seed,
        "ok": all(r["ok"] for r in results),
        "checks": results,
    }
