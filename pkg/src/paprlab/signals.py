"""Signal containers and the OFDM system configuration."""
from __future__ import annotations

from dataclasses import dataclass, replace

import numpy as np

from ._validation import (
    as_complex_array,
    as_real_array,
    check_positive,
    check_power_of_two,
)

TIME = "time"
FREQUENCY = "frequency"


@dataclass(frozen=True)
class OfdmConfig:
    """System parameters of the simulated OFDM link.

    Defaults: 1 MHz bandwidth, 8x oversampling (8 MHz sample rate),
    2 MHz carrier, 128 subcarriers, QPSK.
    """

    n_subcarriers: int = 128
    oversampling: int = 8
    bandwidth_hz: float = 1e6
    carrier_hz: float = 2e6
    bits_per_symbol: int = 2

    def __post_init__(self):
        check_power_of_two(self.n_subcarriers, "n_subcarriers")
        if self.n_subcarriers % 2 != 0:
            raise ValueError("n_subcarriers must be even")
        if int(self.oversampling) != self.oversampling or self.oversampling < 1:
            raise ValueError(f"oversampling must be a positive integer, got {self.oversampling}")
        check_positive(self.bandwidth_hz, "bandwidth_hz")
        if self.carrier_hz < 0:
            raise ValueError("carrier_hz must be non-negative")
        if int(self.bits_per_symbol) < 1:
            raise ValueError("bits_per_symbol must be a positive integer")
        if self.carrier_hz + self.bandwidth_hz / 2 > self.sample_rate_hz / 2:
            raise ValueError(
                "passband does not fit below Nyquist: "
                f"carrier {self.carrier_hz} Hz + half bandwidth exceeds {self.sample_rate_hz / 2} Hz"
            )

    @property
    def sample_rate_hz(self) -> float:
        return self.bandwidth_hz * self.oversampling

    @property
    def n_samples(self) -> int:
        """Samples per OFDM block at the oversampled rate."""
        return self.n_subcarriers * self.oversampling

    @property
    def subcarrier_spacing_hz(self) -> float:
        return self.bandwidth_hz / self.n_subcarriers

    @property
    def bits_per_block(self) -> int:
        return self.n_subcarriers * self.bits_per_symbol


@dataclass(frozen=True)
class SampleVector:
    """Complex samples with a rate annotation.

    ``data`` holds one vector, or a batch of vectors along leading axes;
    the last axis is the sample axis.
    """

    data: np.ndarray
    rate: float
    domain: str = TIME

    def __post_init__(self):
        object.__setattr__(self, "data", as_complex_array(self.data, "data"))
        check_positive(self.rate, "rate")
        if self.domain not in (TIME, FREQUENCY):
            raise ValueError(f"domain must be '{TIME}' or '{FREQUENCY}', got {self.domain!r}")

    def __len__(self) -> int:
        return self.data.shape[-1]

    def with_data(self, data: np.ndarray) -> "SampleVector":
        return replace(self, data=data)


@dataclass(frozen=True)
class PassbandSignal:
    """Real samples on a carrier.

    Same batch convention as :class:`SampleVector`.
    """

    data: np.ndarray
    rate: float
    carrier: float

    def __post_init__(self):
        object.__setattr__(self, "data", as_real_array(self.data, "data"))
        check_positive(self.rate, "rate")
        if self.carrier < 0:
            raise ValueError("carrier must be non-negative")

    def __len__(self) -> int:
        return self.data.shape[-1]

    def with_data(self, data: np.ndarray) -> "PassbandSignal":
        return replace(self, data=data)
