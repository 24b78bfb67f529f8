"""Unitary radix-2 FFT, frequency-domain zero padding, and OFDM synthesis.

The transform is implemented in-repo (iterative Cooley-Tukey, powers of two
only) with 1/sqrt(n) scaling in both directions, so time- and
frequency-domain energies agree and a forward/inverse pair is the identity.
All functions operate on the last axis; leading axes are treated as a batch.
"""
from __future__ import annotations

import numpy as np

from ._validation import as_complex_array, check_power_of_two
from .signals import FREQUENCY, TIME, OfdmConfig, SampleVector

_bitrev_cache: dict[int, np.ndarray] = {}
_twiddle_cache: dict[tuple[int, bool], np.ndarray] = {}


def _bit_reversal(n: int) -> np.ndarray:
    perm = _bitrev_cache.get(n)
    if perm is None:
        bits = n.bit_length() - 1
        idx = np.arange(n, dtype=np.uint64)
        rev = np.zeros(n, dtype=np.uint64)
        for _ in range(bits):
            rev = (rev << np.uint64(1)) | (idx & np.uint64(1))
            idx >>= np.uint64(1)
        perm = rev.astype(np.intp)
        _bitrev_cache[n] = perm
    return perm


def _twiddles(size: int, inverse: bool) -> np.ndarray:
    key = (size, inverse)
    tw = _twiddle_cache.get(key)
    if tw is None:
        sign = 1.0 if inverse else -1.0
        tw = np.exp(sign * 2j * np.pi * np.arange(size // 2) / size)
        _twiddle_cache[key] = tw
    return tw


def fft_unitary(x, inverse: bool = False) -> np.ndarray:
    """Radix-2 FFT with unitary (1/sqrt(n)) scaling, forward or inverse.

    The last axis length must be a power of two.
    """
    a = as_complex_array(x)
    n = a.shape[-1]
    check_power_of_two(n, "transform length")
    out = a[..., _bit_reversal(n)]
    size = 2
    while size <= n:
        half = size // 2
        tw = _twiddles(size, inverse)
        shaped = out.reshape(out.shape[:-1] + (n // size, size))
        lo = shaped[..., :half]
        hi = shaped[..., half:]
        t = hi * tw
        hi[...] = lo - t
        lo[...] += t
        size *= 2
    out *= 1.0 / np.sqrt(n)
    return out


def dft(x: SampleVector, inverse: bool = False) -> SampleVector:
    """Unitary transform of a sample vector; flips the domain tag."""
    out = fft_unitary(x.data, inverse=inverse)
    domain = FREQUENCY if x.domain == TIME else TIME
    return SampleVector(out, rate=x.rate, domain=domain)


def zero_pad_oversample(spectrum, oversampling: int) -> np.ndarray:
    """Insert zeros in the middle of an even-length spectrum.

    Bins 0..n/2 keep their index; bins above n/2 move to the top of the
    enlarged spectrum (bin k -> k + n*(oversampling - 1)), which places the
    single bin n/2 on the low edge only. Energy is preserved exactly.
    """
    X = as_complex_array(spectrum, "spectrum")
    n = X.shape[-1]
    if n % 2 != 0:
        raise ValueError(f"spectrum length must be even, got {n}")
    L = int(oversampling)
    if L < 1:
        raise ValueError(f"oversampling must be >= 1, got {oversampling}")
    if L == 1:
        return X.copy()
    half = n // 2
    out = np.zeros(X.shape[:-1] + (n * L,), dtype=np.complex128)
    out[..., : half + 1] = X[..., : half + 1]
    out[..., n * L - half + 1 :] = X[..., half + 1 :]
    return out


def extract_data_bins(spectrum, n_subcarriers: int) -> np.ndarray:
    """Undo :func:`zero_pad_oversample`: gather the two retained bands."""
    Y = as_complex_array(spectrum, "spectrum")
    n = int(n_subcarriers)
    total = Y.shape[-1]
    if n % 2 != 0 or total % n != 0:
        raise ValueError(f"cannot extract {n} bins from length {total}")
    half = n // 2
    out = np.empty(Y.shape[:-1] + (n,), dtype=np.complex128)
    out[..., : half + 1] = Y[..., : half + 1]
    out[..., half + 1 :] = Y[..., total - half + 1 :]
    return out


def ofdm_modulate(symbols, cfg: OfdmConfig) -> SampleVector:
    """Synthesize the oversampled time-domain OFDM signal for symbol blocks.

    ``symbols`` is one block of cfg.n_subcarriers frequency-domain symbols,
    or a batch of blocks. Output rate is the oversampled sample rate.
    """
    X = as_complex_array(symbols, "symbols")
    if X.shape[-1] != cfg.n_subcarriers:
        raise ValueError(
            f"expected blocks of {cfg.n_subcarriers} symbols, got {X.shape[-1]}"
        )
    padded = zero_pad_oversample(X, cfg.oversampling)
    x = fft_unitary(padded, inverse=True)
    return SampleVector(x, rate=cfg.sample_rate_hz, domain=TIME)


def energy(x) -> np.ndarray | float:
    """Sum of squared magnitudes along the sample axis."""
    a = np.asarray(getattr(x, "data", x))
    return np.sum(np.abs(a) ** 2, axis=-1)
