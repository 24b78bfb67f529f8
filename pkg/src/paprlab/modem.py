"""Bit generation, Gray-coded QPSK mapping, and bit-error accounting."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

_SQRT2 = np.sqrt(2.0)


@dataclass(frozen=True)
class RngStream:
    """Counter-based random stream: a Philox generator keyed by (seed, key).

    The same (seed, key) pair yields the identical sample sequence on every
    platform, and independent keys yield independent streams, so trials can
    be reproduced under any execution order.
    """

    seed: int
    key: tuple[int, ...] = ()

    def generator(self) -> np.random.Generator:
        ss = np.random.SeedSequence(self.seed, spawn_key=self.key)
        return np.random.Generator(np.random.Philox(ss))

    def child(self, *indices: int) -> "RngStream":
        return RngStream(self.seed, self.key + tuple(int(i) for i in indices))


def random_bits(n: int, rng: np.random.Generator) -> np.ndarray:
    """Draw n uniform bits from the given generator."""
    if n <= 0:
        raise ValueError(f"bit count must be positive, got {n}")
    return rng.integers(0, 2, size=int(n), dtype=np.uint8)


def _check_bits(bits, name: str = "bits") -> np.ndarray:
    arr = np.asarray(bits)
    if arr.size == 0:
        raise ValueError(f"{name} must be nonempty")
    if not np.all((arr == 0) | (arr == 1)):
        raise ValueError(f"{name} must contain only 0s and 1s")
    return arr.astype(np.uint8)


def qpsk_map(bits) -> np.ndarray:
    """Map bit pairs to Gray-coded unit-energy QPSK symbols.

    (0,0) -> (1+1j)/sqrt(2); the first bit selects the real sign, the
    second the imaginary sign. Operates pairwise along the last axis.
    """
    b = _check_bits(bits)
    if b.shape[-1] % 2 != 0:
        raise ValueError(f"bit count must be even, got {b.shape[-1]}")
    re = 1.0 - 2.0 * b[..., 0::2]
    im = 1.0 - 2.0 * b[..., 1::2]
    return (re + 1j * im) / _SQRT2


def qpsk_demap(symbols) -> np.ndarray:
    """Minimum-distance (quadrant) decision, inverse of :func:`qpsk_map`.

    Points exactly on a decision axis resolve to bit 0.
    """
    s = np.asarray(symbols, dtype=np.complex128)
    bits = np.empty(s.shape[:-1] + (2 * s.shape[-1],), dtype=np.uint8)
    bits[..., 0::2] = s.real < 0
    bits[..., 1::2] = s.imag < 0
    return bits


def count_bit_errors(sent, received) -> tuple[int, float]:
    """Hamming distance between two equal-length bit blocks, and its rate."""
    a = _check_bits(sent, "sent")
    b = _check_bits(received, "received")
    if a.shape != b.shape:
        raise ValueError(f"length mismatch: {a.shape} vs {b.shape}")
    errors = int(np.count_nonzero(a != b))
    return errors, errors / a.size
