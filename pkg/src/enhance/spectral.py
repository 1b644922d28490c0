"""Forward/inverse 2D discrete Fourier transforms and spectrum utilities.

The 2D transform is computed separably: a 1D pass over every row followed
by a 1D pass over every column. Power-of-two lengths go through a radix-2
decimation-in-time recursion; any other length falls back to the direct
O(n^2) summation. The forward kernel is exp(-j 2 pi (ux/M + vy/N)); the
inverse uses the positive sign and carries the whole 1/(M N) scale.

A :class:`Spectrum` wraps the complex coefficient grid together with a
flag recording whether the DC term has been shifted to the grid center.
"""

from dataclasses import dataclass

import numpy as np

from .errors import ShiftedSpectrum


@dataclass(frozen=True)
class Spectrum:
    """Complex DFT coefficients F(u, v) with u indexing rows, v columns.

    ``dc_centered`` is False straight out of :func:`dft2`; :func:`fftshift`
    turns it on and :func:`ifftshift` turns it back off. Treat instances as
    immutable values.
    """

    values: np.ndarray
    dc_centered: bool = False

    @property
    def shape(self):
        return self.values.shape


def _transform_rows(a, sign):
    """1D transform of every row of ``a`` (no scaling), batched.

    sign=-1 is the forward kernel, sign=+1 the inverse kernel.
    """
    n = a.shape[-1]
    if n & (n - 1) == 0:
        return _radix2(a, sign)
    return _direct(a, sign)


def _radix2(a, sign):
    # Decimation in time over the last axis; n is a power of two.
    n = a.shape[-1]
    if n == 1:
        return a.copy()
    even = _radix2(a[..., 0::2], sign)
    odd = _radix2(a[..., 1::2], sign)
    twiddle = np.exp(sign * 2j * np.pi * np.arange(n // 2) / n)
    t = twiddle * odd
    return np.concatenate([even + t, even - t], axis=-1)


def _direct(a, sign):
    # Naive summation, O(n^2) per row, used for non-power-of-two lengths.
    n = a.shape[-1]
    k = np.arange(n)
    kernel = np.exp(sign * 2j * np.pi * np.outer(k, k) / n)
    return a @ kernel


def dft2(img):
    """Forward 2D DFT of a real or complex field image.

    F(u, v) = sum_x sum_y f(x, y) exp(-j 2 pi (u x / M + v y / N)).
    """
    a = np.asarray(img, dtype=np.complex128)
    if a.ndim != 2:
        raise ValueError("dft2 expects a 2D image")
    rows = _transform_rows(a, -1)
    full = _transform_rows(rows.T, -1).T
    return Spectrum(full, dc_centered=False)


def idft2(spectrum):
    """Inverse 2D DFT; returns the complex field.

    f(x, y) = (1/(M N)) sum_u sum_v F(u, v) exp(+j 2 pi (u x/M + v y/N)).
    Callers take the magnitude or real part explicitly. The spectrum must
    not be DC-centered; unshift with :func:`ifftshift` first.
    """
    if spectrum.dc_centered:
        raise ShiftedSpectrum("spectrum is DC-centered; apply ifftshift first")
    a = spectrum.values
    rows = _transform_rows(a, +1)
    full = _transform_rows(rows.T, +1).T
    return full / a.size


def fftshift(spectrum):
    """Move the DC coefficient to the grid center (rows//2, cols//2)."""
    rows, cols = spectrum.values.shape
    shifted = np.roll(spectrum.values, (rows // 2, cols // 2), axis=(0, 1))
    return Spectrum(shifted, dc_centered=True)


def ifftshift(spectrum):
    """Undo :func:`fftshift`; exact inverse also for odd dimensions."""
    rows, cols = spectrum.values.shape
    shifted = np.roll(spectrum.values, (-(rows // 2), -(cols // 2)), axis=(0, 1))
    return Spectrum(shifted, dc_centered=False)


def magnitude_spectrum(spectrum):
    """Log-magnitude field ln(1 + |F(u, v)|), same shape as the spectrum.

    Rescaling to [0, 255] for display is left to the export path.
    """
    return np.log1p(np.abs(spectrum.values))
