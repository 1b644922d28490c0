"""Histogram analytics and intensity remapping.

Every transform here is realized as a 256-entry lookup table (LUT) so it
can be applied to an 8-bit image in one indexing pass. Histograms and CDFs
are integer arrays of length 256; LUTs are uint8 arrays of length 256.
"""

import numpy as np

from .errors import DegenerateRange, EmptyImage
from .raster import quantize

LEVELS = 256


def histogram(img):
    """Count occurrences of each gray level; counts[v] = #pixels equal v."""
    arr = np.asarray(img)
    if not np.issubdtype(arr.dtype, np.integer):
        raise ValueError("histogram expects an integer gray image")
    counts = np.bincount(arr.ravel().astype(np.int64), minlength=LEVELS)
    if len(counts) > LEVELS:
        raise ValueError("gray levels outside [0, 255]")
    return counts


def cdf(hist):
    """Running prefix sum of a histogram: cumulative[v] = sum(counts[:v+1])."""
    h = np.asarray(hist, dtype=np.int64)
    if h.shape != (LEVELS,):
        raise ValueError("histogram must have exactly 256 bins")
    return np.cumsum(h)


def equalization_lut(c):
    """Build the histogram-equalization LUT from a CDF.

    map[v] = quantize((cumulative[v] - cmin) * 255 / (cmax - cmin)) where
    cmin is the minimum over all 256 CDF entries and cmax the total pixel
    count. A CDF that is constant everywhere (all pixels at level 0) maps
    every entry to 0.
    """
    c = np.asarray(c, dtype=np.int64)
    total = int(c[-1])
    if total <= 0:
        raise EmptyImage("cannot equalize an image with zero pixels")
    cmin = int(c.min())
    if total == cmin:
        return np.zeros(LEVELS, dtype=np.uint8)
    return quantize((c - cmin) * 255.0 / (total - cmin))


def stretch_lut(x_min, x_max, y_min, y_max):
    """Linear contrast-stretch LUT.

    Levels inside [x_min, x_max] map through
    (v - x_min) / (x_max - x_min) * (y_max - y_min) + y_min; levels below
    x_min clamp to y_min and levels above x_max clamp to y_max.
    """
    if x_min >= x_max:
        raise DegenerateRange(
            f"degenerate intensity range (x-min {x_min} >= x-max {x_max})")
    if y_min > y_max:
        raise DegenerateRange(
            f"degenerate output range (y-min {y_min} > y-max {y_max})")
    v = np.arange(LEVELS, dtype=np.float64)
    y = (v - x_min) / (x_max - x_min) * (y_max - y_min) + y_min
    y = np.where(v < x_min, float(y_min), y)
    y = np.where(v > x_max, float(y_max), y)
    return quantize(y)


def log_lut(v_max):
    """Logarithmic compression LUT: map[v] = quantize(c * ln(1 + v)).

    The constant c = 255 / ln(1 + v_max) anchors level v_max at 255;
    entries above v_max follow the same curve and clamp at 255.
    """
    if v_max < 1:
        raise DegenerateRange(
            f"degenerate intensity range (log transform needs max >= 1, got {v_max})")
    c = 255.0 / np.log1p(float(v_max))
    v = np.arange(LEVELS, dtype=np.float64)
    return quantize(c * np.log1p(v))


def matching_lut(source, target):
    """Histogram-matching LUT from source CDF to target CDF.

    With S(v) = source[v]/source_total and T(t) = target[t]/target_total,
    map[v] is the smallest level t with T(t) >= S(v). The comparison is
    done on cross-multiplied integer counts, so ties resolve exactly
    (always to the smallest qualifying t).
    """
    s = np.asarray(source, dtype=np.int64)
    t = np.asarray(target, dtype=np.int64)
    s_total = int(s[-1])
    t_total = int(t[-1])
    if s_total <= 0 or t_total <= 0:
        raise EmptyImage("histogram matching needs nonempty source and target")
    # T(t) >= S(v)  <=>  target[t] * s_total >= source[v] * t_total
    levels = np.searchsorted(t * s_total, s * t_total, side="left")
    return levels.astype(np.uint8)


def apply_lut(img, lut):
    """Remap a gray image through a 256-entry LUT: out[i] = lut[img[i]]."""
    table = np.asarray(lut, dtype=np.uint8)
    if table.shape != (LEVELS,):
        raise ValueError("LUT must have exactly 256 entries")
    arr = np.asarray(img)
    if arr.dtype != np.uint8:
        arr = arr.astype(np.uint8)
    return table[arr]
