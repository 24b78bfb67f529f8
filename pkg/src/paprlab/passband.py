"""Carrier up/down conversion between complex baseband and real passband."""
from __future__ import annotations

import numpy as np

from .signals import TIME, OfdmConfig, PassbandSignal, SampleVector


def _carrier_phasor(n_samples: int, cfg: OfdmConfig, sign: float) -> np.ndarray:
    m = np.arange(n_samples)
    return np.exp(sign * 2j * np.pi * cfg.carrier_hz * m / cfg.sample_rate_hz)


def upconvert(x: SampleVector, cfg: OfdmConfig) -> PassbandSignal:
    """Real passband signal Re{x[m] * exp(+j*2*pi*fc*m/fs)}.

    The sample index m restarts at 0 for every block (batch row).
    """
    if x.rate != cfg.sample_rate_hz:
        raise ValueError(
            f"rate mismatch: signal at {x.rate} Hz, config expects {cfg.sample_rate_hz} Hz"
        )
    phasor = _carrier_phasor(x.data.shape[-1], cfg, +1.0)
    out = np.real(x.data * phasor)
    return PassbandSignal(out, rate=cfg.sample_rate_hz, carrier=cfg.carrier_hz)


def downconvert(xp: PassbandSignal, cfg: OfdmConfig) -> SampleVector:
    """Complex baseband 2 * xp[m] * exp(-j*2*pi*fc*m/fs).

    The factor 2 restores the baseband amplitude; the residual image at
    twice the carrier is left for frequency-domain bin selection downstream.
    """
    phasor = _carrier_phasor(xp.data.shape[-1], cfg, -1.0)
    out = 2.0 * xp.data * phasor
    return SampleVector(out, rate=xp.rate, domain=TIME)
