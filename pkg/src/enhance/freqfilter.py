"""Frequency-domain filter masks and the filtering pipeline.

Masks are built on the DC-centered grid: gain H(u, v) is a function of the
distance D(u, v) from the center bin (rows//2, cols//2). Three families are
provided -- ideal, Butterworth and Gaussian -- each as low-pass or
high-pass, with the high-pass gain defined as 1 minus the low-pass gain.
"""

from dataclasses import dataclass

import numpy as np

from .errors import BadCutoff, BadOrder, DimensionMismatch
from .spectral import Spectrum, dft2, fftshift, idft2, ifftshift

IDEAL = "ideal"
BUTTERWORTH = "butterworth"
GAUSSIAN = "gaussian"

LOWPASS = "lowpass"
HIGHPASS = "highpass"


@dataclass(frozen=True)
class FilterMask:
    """Per-frequency gains in [0, 1] on the centered grid, plus parameters."""

    gains: np.ndarray
    family: str
    kind: str
    cutoff: float
    order: int | None = None

    @property
    def shape(self):
        return self.gains.shape


def distance_grid(rows, cols):
    """Distance of every bin from the centered DC at (rows//2, cols//2)."""
    if rows < 1 or cols < 1:
        raise ValueError("grid dimensions must be at least 1x1")
    i = np.arange(rows, dtype=np.float64)[:, None] - rows // 2
    j = np.arange(cols, dtype=np.float64)[None, :] - cols // 2
    return np.sqrt(i * i + j * j)


def _check_kind(kind):
    if kind not in (LOWPASS, HIGHPASS):
        raise ValueError(f"kind must be '{LOWPASS}' or '{HIGHPASS}'")


def ideal_mask(rows, cols, cutoff, kind=LOWPASS):
    """Sharp-cutoff mask: low-pass gain 1 where D <= cutoff, else 0.

    The boundary D == cutoff is inside the passband.
    """
    _check_kind(kind)
    if cutoff <= 0:
        raise BadCutoff(f"cutoff must be positive, got {cutoff}")
    low = (distance_grid(rows, cols) <= cutoff).astype(np.float64)
    gains = low if kind == LOWPASS else 1.0 - low
    return FilterMask(gains, IDEAL, kind, float(cutoff))


def butterworth_mask(rows, cols, cutoff, order, kind=LOWPASS):
    """Butterworth mask: low-pass gain 1 / (1 + (D / cutoff)^(2 order))."""
    _check_kind(kind)
    if cutoff <= 0:
        raise BadCutoff(f"cutoff must be positive, got {cutoff}")
    if not isinstance(order, (int, np.integer)) or order < 1:
        raise BadOrder(f"order must be an integer >= 1, got {order!r}")
    d = distance_grid(rows, cols)
    low = 1.0 / (1.0 + (d / cutoff) ** (2 * order))
    gains = low if kind == LOWPASS else 1.0 - low
    return FilterMask(gains, BUTTERWORTH, kind, float(cutoff), int(order))


def gaussian_mask(rows, cols, cutoff, kind=LOWPASS):
    """Gaussian mask: low-pass gain exp(-D^2 / (2 cutoff^2))."""
    _check_kind(kind)
    if cutoff <= 0:
        raise BadCutoff(f"cutoff must be positive, got {cutoff}")
    d = distance_grid(rows, cols)
    low = np.exp(-(d * d) / (2.0 * cutoff * cutoff))
    gains = low if kind == LOWPASS else 1.0 - low
    return FilterMask(gains, GAUSSIAN, kind, float(cutoff))


def apply_frequency_filter(img, mask):
    """Filter a field image through a mask in the frequency domain.

    Pipeline: shift the forward spectrum to center, multiply pointwise by
    the mask gains, unshift, invert, and take the complex magnitude per
    pixel. The output is a real field; quantization happens at export.
    """
    a = np.asarray(img, dtype=np.float64)
    if a.shape != mask.gains.shape:
        raise DimensionMismatch(
            f"mask shape {mask.gains.shape} does not match image shape {a.shape}")
    centered = fftshift(dft2(a))
    filtered = Spectrum(centered.values * mask.gains, dc_centered=True)
    return np.abs(idft2(ifftshift(filtered)))
