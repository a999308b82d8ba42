import numpy as np
import pytest

from hornlr.weights import (
    DominantWeight,
    NormalizedSpectrum,
    SpectralTriple,
    dominance_check,
    enumerate_frames,
    format_weight,
    normalize,
    parse_weight,
    shift_triple,
)


def test_dominance_check():
    assert dominance_check((3, 1, 0))
    assert not dominance_check((1, 2))
    assert dominance_check((2, 2, 2))
    assert dominance_check(())
    assert dominance_check((5,))


def test_dominant_weight_validation():
    with pytest.raises(ValueError):
        DominantWeight((1, 2))
    with pytest.raises(ValueError):
        DominantWeight(())
    w = DominantWeight((3, 1, -2))
    assert w.d == 3
    assert not w.is_frame
    assert w.total == 2
    assert DominantWeight((2, 0)).is_frame


def test_normalize_examples():
    assert normalize(DominantWeight((2, 1, 1))).values == (0.5, 0.25, 0.25)
    for k in (1, 3, 7):
        assert normalize(DominantWeight((k, 0))).values == (1.0, 0.0)
    assert normalize(DominantWeight((3, 3))).values == (0.5, 0.5)


def test_normalize_rejects_zero_and_negative():
    with pytest.raises(ValueError):
        normalize(DominantWeight((0, 0)))
    with pytest.raises(ValueError):
        normalize(DominantWeight((1, -1)))


def test_normalize_sums_to_one_and_descends():
    for n in range(1, 9):
        for f in enumerate_frames(n, 4):
            s = normalize(f)
            assert abs(sum(s.values) - 1.0) <= 1e-12
            assert all(s.values[i] >= s.values[i + 1] for i in range(3))


def test_shift_triple_examples():
    t = SpectralTriple.from_parts((0, -1), (0, 0), (0, -1))
    shifted = shift_triple(t, 1, 0)
    assert shifted.mu.parts == (1, 0)
    assert shifted.nu.parts == (0, 0)
    assert shifted.lam.parts == (1, 0)

    t2 = SpectralTriple.from_parts((1, 0), (1, 0), (1, 1))
    assert shift_triple(t2, 0, 0) == t2
    s2 = shift_triple(t2, 2, 3)
    assert s2.mu.parts == (3, 2)
    assert s2.nu.parts == (4, 3)
    assert s2.lam.parts == (6, 6)


def test_shift_preserves_balance_and_round_trips():
    rng = np.random.default_rng(11)
    for _ in range(100):
        parts = [
            tuple(sorted((int(v) for v in rng.integers(-4, 5, size=3)), reverse=True))
            for _ in range(3)
        ]
        t = SpectralTriple.from_parts(*parts)
        m, n = int(rng.integers(-3, 4)), int(rng.integers(-3, 4))
        s = shift_triple(t, m, n)
        assert s.balanced == t.balanced
        assert shift_triple(s, -m, -n) == t


def test_enumerate_frames_examples():
    assert [f.parts for f in enumerate_frames(2, 2)] == [(2, 0), (1, 1)]
    assert [f.parts for f in enumerate_frames(0, 3)] == [(0, 0, 0)]
    assert [f.parts for f in enumerate_frames(4, 2)] == [(4, 0), (3, 1), (2, 2)]


def test_enumerate_frames_invariants():
    for n in range(13):
        for d in range(1, 5):
            frames = enumerate_frames(n, d)
            # strict bound holds for n >= 1; n = 0 attains it with one frame
            if n >= 1:
                assert len(frames) < (n + 1) ** d
            else:
                assert len(frames) == 1
            seen = set()
            for f in frames:
                assert dominance_check(f.parts)
                assert f.total == n
                assert f.is_frame
                seen.add(f.parts)
            assert len(seen) == len(frames)
            # lexicographically descending
            assert [f.parts for f in frames] == sorted(
                (f.parts for f in frames), reverse=True
            )


def test_serialization_round_trip():
    w = DominantWeight((3, 2, 1))
    assert format_weight(w) == "3,2,1"
    assert parse_weight("3,2,1") == w
    assert parse_weight("0,-1").parts == (0, -1)
    with pytest.raises(ValueError):
        parse_weight("3,x")


def test_triple_padding_and_balance():
    t = SpectralTriple.from_parts((1,), (1,), (2,))
    assert t.d == 1
    t = SpectralTriple.from_parts((1,), (1,), (1, 1))
    assert t.d == 2
    assert t.mu.parts == (1, 0)
    assert t.balanced
    assert not SpectralTriple.from_parts((1,), (1,), (3,)).balanced


def test_padding_negative_weight_rejected():
    with pytest.raises(ValueError):
        DominantWeight((0, -1)).padded(3)


def test_normalized_spectrum_validation():
    with pytest.raises(ValueError):
        NormalizedSpectrum((0.25, 0.75))
    with pytest.raises(ValueError):
        NormalizedSpectrum((0.7, 0.2))
    s = NormalizedSpectrum((0.75, 0.25))
    assert s.l1_distance(NormalizedSpectrum((0.5, 0.5))) == pytest.approx(0.5)
