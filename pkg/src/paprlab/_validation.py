"""Input validation helpers shared across the package."""
from __future__ import annotations

import numpy as np


def as_complex_array(x, name: str = "x") -> np.ndarray:
    """Coerce to a finite, nonempty complex128 array (batch axes allowed)."""
    arr = np.asarray(x, dtype=np.complex128)
    if arr.size == 0 or arr.shape[-1] == 0:
        raise ValueError(f"{name} must be nonempty")
    if not np.all(np.isfinite(arr)):
        raise ValueError(f"{name} contains NaN or Inf")
    return arr


def as_real_array(x, name: str = "x") -> np.ndarray:
    """Coerce to a finite, nonempty float64 array (batch axes allowed)."""
    arr = np.asarray(x, dtype=np.float64)
    if arr.size == 0 or arr.shape[-1] == 0:
        raise ValueError(f"{name} must be nonempty")
    if not np.all(np.isfinite(arr)):
        raise ValueError(f"{name} contains NaN or Inf")
    return arr


def check_power_of_two(n: int, name: str = "length") -> int:
    n = int(n)
    if n < 1 or (n & (n - 1)) != 0:
        raise ValueError(f"{name} must be a power of two, got {n}")
    return n


def check_positive(value, name: str):
    if not value > 0:
        raise ValueError(f"{name} must be positive, got {value}")
    return value


def samples_of(x) -> np.ndarray:
    """Return the sample array of a signal container, or the array itself."""
    return np.asarray(getattr(x, "data", x))


def as_symbol_matrix(X, n_subcarriers: int, name: str = "X") -> np.ndarray:
    """Validate a (n_blocks, n_subcarriers) complex symbol matrix.

    A single 1-D block is promoted to a one-row matrix.
    """
    arr = np.asarray(X, dtype=np.complex128)
    if arr.ndim == 1:
        arr = arr[np.newaxis, :]
    if arr.ndim != 2:
        raise ValueError(f"{name} must be 1-D or 2-D, got shape {arr.shape}")
    if arr.shape[1] != n_subcarriers:
        raise ValueError(
            f"{name} has {arr.shape[1]} symbols per block, expected {n_subcarriers}"
        )
    if arr.size == 0:
        raise ValueError(f"{name} must contain at least one block")
    if not np.all(np.isfinite(arr)):
        raise ValueError(f"{name} contains NaN or Inf")
    return arr
