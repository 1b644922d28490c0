"""Spatial-domain kernel machinery: correlation engine and named filters.

The engine is cross-correlation (no kernel flip): the printed Sobel and
Prewitt matrices apply as-is. Pixels outside the image are supplied by a
boundary policy:

* ``"zero"``      -- out-of-range samples read 0
* ``"reflect"``   -- mirror without repeating the edge sample
* ``"replicate"`` -- clamp to the nearest edge sample
"""

import numpy as np

from .errors import BadSigma, DimensionMismatch, EvenKernel

ZERO = "zero"
REFLECT = "reflect"
REPLICATE = "replicate"

_PAD_MODE = {ZERO: "constant", REFLECT: "reflect", REPLICATE: "edge"}

LAPLACIAN_KERNEL = np.array([[0.0, -1.0, 0.0],
                             [-1.0, 4.0, -1.0],
                             [0.0, -1.0, 0.0]])

SOBEL_X = np.array([[-1.0, 0.0, 1.0],
                    [-2.0, 0.0, 2.0],
                    [-1.0, 0.0, 1.0]])

SOBEL_Y = np.array([[-1.0, -2.0, -1.0],
                    [0.0, 0.0, 0.0],
                    [1.0, 2.0, 1.0]])

PREWITT_X = np.array([[-1.0, 0.0, 1.0],
                      [-1.0, 0.0, 1.0],
                      [-1.0, 0.0, 1.0]])

PREWITT_Y = np.array([[-1.0, -1.0, -1.0],
                      [0.0, 0.0, 0.0],
                      [1.0, 1.0, 1.0]])


def mean_kernel(k):
    """Uniform k x k averaging kernel with weights 1 / k^2."""
    _check_window(k)
    return np.full((k, k), 1.0 / (k * k))


def _check_window(k):
    if k % 2 == 0 or k < 3:
        raise EvenKernel(f"window size must be odd and >= 3, got {k}")


def _pad(img, radius, policy):
    if policy not in _PAD_MODE:
        raise ValueError(f"unknown boundary policy {policy!r}")
    if radius == 0:
        return img
    if policy == ZERO:
        return np.pad(img, radius, mode="constant", constant_values=0.0)
    return np.pad(img, radius, mode=_PAD_MODE[policy])


def correlate(img, kernel, policy=ZERO):
    """Cross-correlate an image with an odd square kernel.

    out(i, j) = sum_{a,b} weights[a, b] * sample(i + a - r, j + b - r) with
    r = (k - 1) / 2 and out-of-range samples supplied by ``policy``. Output
    has the same shape as the input.

    Contributions accumulate in row-major kernel order so results are
    bit-reproducible.
    """
    a = np.asarray(img, dtype=np.float64)
    k = np.asarray(kernel, dtype=np.float64)
    if a.ndim != 2:
        raise ValueError("correlate expects a 2D image")
    if k.ndim != 2 or k.shape[0] != k.shape[1]:
        raise EvenKernel(f"kernel must be square, got shape {k.shape}")
    size = k.shape[0]
    if size % 2 == 0:
        raise EvenKernel(f"kernel size must be odd, got {size}")
    r = size // 2
    padded = _pad(a, r, policy)
    h, w = a.shape
    out = np.zeros((h, w), dtype=np.float64)
    for da in range(size):
        for db in range(size):
            out += k[da, db] * padded[da:da + h, db:db + w]
    return out


def mean_filter(img, k=3, policy=ZERO):
    """Box average over a k x k window (k odd, >= 3)."""
    return correlate(img, mean_kernel(k), policy)


def median_filter(img, k=3, policy=REFLECT):
    """Median of the k x k window around each pixel (k odd, >= 3).

    The window holds k^2 samples, an odd count, so the median is always an
    element of the window.
    """
    _check_window(k)
    a = np.asarray(img, dtype=np.float64)
    if a.ndim != 2:
        raise ValueError("median_filter expects a 2D image")
    r = k // 2
    padded = _pad(a, r, policy)
    windows = np.lib.stride_tricks.sliding_window_view(padded, (k, k))
    return np.median(windows, axis=(-2, -1))


def bilateral_filter(img, d=9, sigma_color=75.0, sigma_space=75.0,
                     policy=REFLECT):
    """Edge-preserving smoothing over a d x d window (d odd, >= 3).

    Each neighbor is weighted by a spatial Gaussian in its offset
    (sigma_space, in pixels) times a range Gaussian in its intensity
    difference from the center pixel (sigma_color, in gray levels); the
    output is the weight-normalized average.
    """
    _check_window(d)
    if sigma_color <= 0 or sigma_space <= 0:
        raise BadSigma(
            f"sigmas must be positive, got color={sigma_color} space={sigma_space}")
    a = np.asarray(img, dtype=np.float64)
    if a.ndim != 2:
        raise ValueError("bilateral_filter expects a 2D image")
    r = d // 2
    padded = _pad(a, r, policy)
    h, w = a.shape
    num = np.zeros((h, w), dtype=np.float64)
    den = np.zeros((h, w), dtype=np.float64)
    inv_space = 1.0 / (2.0 * sigma_space * sigma_space)
    inv_color = 1.0 / (2.0 * sigma_color * sigma_color)
    for da in range(d):
        for db in range(d):
            dy = da - r
            dx = db - r
            window = padded[da:da + h, db:db + w]
            diff = window - a
            weight = np.exp(-(dy * dy + dx * dx) * inv_space
                            - diff * diff * inv_color)
            # Accumulate the deviation from the center pixel so constant
            # neighborhoods come back bit-identical (numerator is exactly 0).
            num += weight * diff
            den += weight
    return a + num / den


def laplacian(img, policy=ZERO):
    """Second-derivative response via the 4-neighbor Laplacian kernel."""
    return correlate(img, LAPLACIAN_KERNEL, policy)


def sobel(img, policy=ZERO):
    """Sobel derivative pair (gx, gy): horizontal and vertical change."""
    return correlate(img, SOBEL_X, policy), correlate(img, SOBEL_Y, policy)


def prewitt(img, policy=ZERO):
    """Prewitt derivative pair (gx, gy), the unweighted Sobel variant."""
    return correlate(img, PREWITT_X, policy), correlate(img, PREWITT_Y, policy)


def gradient_magnitude(gx, gy):
    """Combined edge strength sqrt(gx^2 + gy^2) per pixel."""
    gx = np.asarray(gx, dtype=np.float64)
    gy = np.asarray(gy, dtype=np.float64)
    if gx.shape != gy.shape:
        raise DimensionMismatch(
            f"gradient components differ in shape: {gx.shape} vs {gy.shape}")
    return np.hypot(gx, gy)


def gradient_direction(gx, gy):
    """Edge direction atan2(gy, gx) in radians, range (-pi, pi].

    A zero gradient maps to 0.
    """
    gx = np.asarray(gx, dtype=np.float64)
    gy = np.asarray(gy, dtype=np.float64)
    if gx.shape != gy.shape:
        raise DimensionMismatch(
            f"gradient components differ in shape: {gx.shape} vs {gy.shape}")
    # Adding +0.0 turns -0.0 into +0.0 so atan2 never returns -pi.
    return np.arctan2(gy + 0.0, gx)
