"""Exception types raised by the enhance library.

Everything derives from :class:`EnhanceError`, so callers (notably the CLI)
can catch one type and report a single-line diagnostic.
"""


class EnhanceError(ValueError):
    """Base class for all errors raised by this library."""


# --- raster ---------------------------------------------------------------

class MalformedHeader(EnhanceError):
    """Netpbm header is unusable: bad magic, missing or invalid fields."""


class UnsupportedMaxval(EnhanceError):
    """Netpbm maxval is not 255; only 8-bit images are supported."""


class TruncatedData(EnhanceError):
    """Netpbm payload holds fewer samples than width * height requires."""


class NonFinite(EnhanceError):
    """A real-valued image contains NaN or infinity."""


# --- tonemap --------------------------------------------------------------

class EmptyImage(EnhanceError):
    """A histogram or CDF with zero total pixels was supplied."""


class DegenerateRange(EnhanceError):
    """An intensity range collapsed to a single value (division by zero)."""


# --- spectral -------------------------------------------------------------

class ShiftedSpectrum(EnhanceError):
    """An inverse transform was asked for a DC-centered spectrum."""


# --- freqfilter -----------------------------------------------------------

class BadCutoff(EnhanceError):
    """Filter cutoff radius must be positive."""


class BadOrder(EnhanceError):
    """Butterworth order must be an integer >= 1."""


class DimensionMismatch(EnhanceError):
    """Two grids that must share dimensions do not."""


# --- spatial --------------------------------------------------------------

class EvenKernel(EnhanceError):
    """Kernel or window size must be odd (and at least 3 for named filters)."""


class BadSigma(EnhanceError):
    """Bilateral filter sigmas must be positive."""
