"""Image containers and Netpbm (PGM/PPM) codec.

Images are plain numpy arrays:

* gray image   -- 2D ``uint8`` array, shape ``(height, width)``
* field image  -- 2D ``float64`` array, the working representation for
                  filtering arithmetic (values may leave [0, 255])
* RGB image    -- 3D ``uint8`` array, shape ``(height, width, 3)``

Supported file formats are Netpbm P2/P5 (PGM) and P3/P6 (PPM) with
maxval 255. Color inputs are meant to be collapsed to grayscale with
:func:`to_gray` right after reading.
"""

import numpy as np

from .errors import MalformedHeader, NonFinite, TruncatedData, UnsupportedMaxval

_WHITESPACE = b" \t\n\r\x0b\x0c"


def quantize(values):
    """Convert real intensities to 8-bit gray levels.

    Rounds half away from zero, then clamps to [0, 255]. This is the one
    float-to-uint8 policy used everywhere in the library, so exact .5
    results (e.g. 127.5) land on the upper level instead of truncating.

    Raises :class:`NonFinite` if any value is NaN or infinite.
    """
    v = np.asarray(values, dtype=np.float64)
    if not np.all(np.isfinite(v)):
        raise NonFinite("cannot quantize NaN or infinite intensity values")
    rounded = np.sign(v) * np.floor(np.abs(v) + 0.5)
    return np.clip(rounded, 0.0, 255.0).astype(np.uint8)


def to_field(img):
    """Copy a gray image into a float64 field, values unchanged."""
    return np.asarray(img, dtype=np.float64).copy()


def from_field(field):
    """Quantize a float64 field back to an 8-bit gray image."""
    return quantize(np.asarray(field, dtype=np.float64))


def to_gray(img):
    """Collapse an RGB image to grayscale with Rec.601 luma weights.

    Each pixel becomes quantize(0.299 R + 0.587 G + 0.114 B).
    """
    rgb = np.asarray(img, dtype=np.float64)
    if rgb.ndim != 3 or rgb.shape[2] != 3:
        raise ValueError("RGB image must have shape (height, width, 3)")
    luma = 0.299 * rgb[:, :, 0] + 0.587 * rgb[:, :, 1] + 0.114 * rgb[:, :, 2]
    return quantize(luma)


class _Scanner:
    """Token scanner for Netpbm headers and ASCII payloads.

    '#' starts a comment running to end of line; any run of whitespace
    separates tokens.
    """

    def __init__(self, buf):
        self.buf = buf
        self.pos = 0

    def next_token(self):
        buf, n = self.buf, len(self.buf)
        i = self.pos
        while i < n:
            c = buf[i:i + 1]
            if c in _WHITESPACE:
                i += 1
            elif c == b"#":
                nl = buf.find(b"\n", i)
                i = n if nl < 0 else nl + 1
            else:
                break
        start = i
        while i < n and buf[i:i + 1] not in _WHITESPACE and buf[i:i + 1] != b"#":
            i += 1
        self.pos = i
        if start == i:
            return None
        return buf[start:i]

    def next_int(self, what):
        tok = self.next_token()
        if tok is None:
            raise MalformedHeader(f"missing {what} in Netpbm header")
        try:
            return int(tok)
        except ValueError:
            raise MalformedHeader(f"invalid {what} {tok!r} in Netpbm header") from None


def read_netpbm(data):
    """Decode PGM/PPM bytes into a gray (P2/P5) or RGB (P3/P6) image.

    Only maxval 255 is accepted. Pixel order is top-to-bottom,
    left-to-right. Header comments are skipped.

    Raises :class:`MalformedHeader`, :class:`UnsupportedMaxval` or
    :class:`TruncatedData`.
    """
    if not isinstance(data, (bytes, bytearray, memoryview)):
        raise MalformedHeader("read_netpbm expects a byte sequence")
    data = bytes(data)

    scanner = _Scanner(data)
    magic = scanner.next_token()
    if magic not in (b"P2", b"P5", b"P3", b"P6"):
        raise MalformedHeader(f"unsupported Netpbm magic {magic!r}")
    ascii_format = magic in (b"P2", b"P3")
    color = magic in (b"P3", b"P6")

    width = scanner.next_int("width")
    height = scanner.next_int("height")
    if width < 1 or height < 1:
        raise MalformedHeader(f"invalid image dimensions {width}x{height}")
    maxval = scanner.next_int("maxval")
    if maxval != 255:
        raise UnsupportedMaxval(f"maxval {maxval} not supported; only 255")

    channels = 3 if color else 1
    count = width * height * channels

    if ascii_format:
        samples = np.empty(count, dtype=np.uint8)
        for k in range(count):
            tok = scanner.next_token()
            if tok is None:
                raise TruncatedData(
                    f"expected {count} samples, payload ends after {k}")
            try:
                value = int(tok)
            except ValueError:
                raise MalformedHeader(f"invalid sample token {tok!r}") from None
            if not 0 <= value <= 255:
                raise MalformedHeader(f"sample value {value} outside [0, 255]")
            samples[k] = value
    else:
        # Exactly one whitespace byte separates the maxval from the payload.
        start = scanner.pos
        if start >= len(data) or data[start:start + 1] not in _WHITESPACE:
            raise MalformedHeader("missing whitespace before binary payload")
        payload = data[start + 1:start + 1 + count]
        if len(payload) < count:
            raise TruncatedData(
                f"expected {count} bytes of pixel data, found {len(payload)}")
        samples = np.frombuffer(payload, dtype=np.uint8).copy()

    if color:
        return samples.reshape(height, width, 3)
    return samples.reshape(height, width)


def write_pgm(img):
    """Encode a gray image as binary PGM (P5) bytes.

    The header is exactly ``P5\\n<width> <height>\\n255\\n`` followed by
    width*height raw bytes, so ``read_netpbm(write_pgm(img))`` round-trips
    bit-exactly.
    """
    arr = np.asarray(img)
    if arr.ndim != 2:
        raise ValueError("write_pgm expects a 2D gray image")
    if arr.dtype != np.uint8:
        if not np.issubdtype(arr.dtype, np.integer):
            raise ValueError("write_pgm expects integer gray levels")
        if arr.size and (arr.min() < 0 or arr.max() > 255):
            raise ValueError("gray levels must lie in [0, 255]")
        arr = arr.astype(np.uint8)
    height, width = arr.shape
    header = f"P5\n{width} {height}\n255\n".encode("ascii")
    return header + arr.tobytes()
