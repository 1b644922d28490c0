"""Self-contained grayscale image enhancement toolkit.

Tone mapping (equalization, stretching, log transform, histogram
matching), frequency-domain filtering with designed transfer functions
(ideal, Butterworth, Gaussian), and spatial kernel filtering (smoothing
and edge detection), plus Netpbm I/O and a pipeline CLI.
"""

from .errors import (
    BadCutoff,
    BadOrder,
    BadSigma,
    DegenerateRange,
    DimensionMismatch,
    EmptyImage,
    EnhanceError,
    EvenKernel,
    MalformedHeader,
    NonFinite,
    ShiftedSpectrum,
    TruncatedData,
    UnsupportedMaxval,
)
from .raster import from_field, quantize, read_netpbm, to_field, to_gray, write_pgm
from .tonemap import (
    apply_lut,
    cdf,
    equalization_lut,
    histogram,
    log_lut,
    matching_lut,
    stretch_lut,
)
from .spectral import Spectrum, dft2, fftshift, idft2, ifftshift, magnitude_spectrum
from .freqfilter import (
    BUTTERWORTH,
    FilterMask,
    GAUSSIAN,
    HIGHPASS,
    IDEAL,
    LOWPASS,
    apply_frequency_filter,
    butterworth_mask,
    distance_grid,
    gaussian_mask,
    ideal_mask,
)
from .spatial import (
    LAPLACIAN_KERNEL,
    PREWITT_X,
    PREWITT_Y,
    REFLECT,
    REPLICATE,
    SOBEL_X,
    SOBEL_Y,
    ZERO,
    bilateral_filter,
    correlate,
    gradient_direction,
    gradient_magnitude,
    laplacian,
    mean_filter,
    mean_kernel,
    median_filter,
    prewitt,
    sobel,
)

__version__ = "0.1.0"

__all__ = [
    "EnhanceError", "MalformedHeader", "UnsupportedMaxval", "TruncatedData",
    "NonFinite", "EmptyImage", "DegenerateRange", "ShiftedSpectrum",
    "BadCutoff", "BadOrder", "DimensionMismatch", "EvenKernel", "BadSigma",
    "read_netpbm", "write_pgm", "to_gray", "to_field", "from_field", "quantize",
    "histogram", "cdf", "equalization_lut", "stretch_lut", "log_lut",
    "matching_lut", "apply_lut",
    "Spectrum", "dft2", "idft2", "fftshift", "ifftshift", "magnitude_spectrum",
    "FilterMask", "distance_grid", "ideal_mask", "butterworth_mask",
    "gaussian_mask", "apply_frequency_filter",
    "IDEAL", "BUTTERWORTH", "GAUSSIAN", "LOWPASS", "HIGHPASS",
    "correlate", "mean_filter", "median_filter", "bilateral_filter",
    "laplacian", "sobel", "prewitt", "gradient_magnitude", "gradient_direction",
    "mean_kernel", "LAPLACIAN_KERNEL", "SOBEL_X", "SOBEL_Y",
    "PREWITT_X", "PREWITT_Y", "ZERO", "REFLECT", "REPLICATE",
]
