"""Pipeline command line: read a Netpbm image, apply steps, write a PGM.

Grammar::

    enhance -i PATH -o PATH [--report PATH] [--quantize-between] STEP [STEP ...]

    STEP:
      equalize
      stretch  [--x-min N --x-max N] [--y-min N=0 --y-max N=255]
      logmap
      match    --target PATH
      spectrum                     (terminal; writes the spectrum image)
      lowpass  --filter ideal|butterworth|gaussian --cutoff F [--order N=2]
      highpass --filter ideal|butterworth|gaussian --cutoff F [--order N=2]
      smooth   --method mean|median|bilateral [--ksize N=3]
               [--d N=9 --sigma-color F=75 --sigma-space F=75]
               [--border zero|reflect|replicate]
      edges    --method sobel|prewitt|laplacian
               [--output magnitude|gx|gy|direction]
               [--border zero|reflect|replicate]

The working image stays real-valued across steps and is quantized once at
write time; ``--quantize-between`` forces 8-bit rounding after every step
instead. Exit status 0 on success, 1 on any processing error (single-line
diagnostic on stderr), 2 on a usage error.
"""

import sys
from dataclasses import dataclass

import numpy as np

from . import freqfilter, spatial, tonemap
from .errors import EnhanceError
from .raster import from_field, read_netpbm, to_field, to_gray, write_pgm
from .spectral import dft2, fftshift, magnitude_spectrum

USAGE = ("usage: enhance -i PATH -o PATH [--report PATH] [--quantize-between] "
         "STEP [STEP ...]")

STEP_NAMES = ("equalize", "stretch", "logmap", "match", "spectrum",
              "lowpass", "highpass", "smooth", "edges")

_FILTERS = (freqfilter.IDEAL, freqfilter.BUTTERWORTH, freqfilter.GAUSSIAN)
_BORDERS = (spatial.ZERO, spatial.REFLECT, spatial.REPLICATE)
_SMOOTH_METHODS = ("mean", "median", "bilateral")
_EDGE_METHODS = ("sobel", "prewitt", "laplacian")
_EDGE_OUTPUTS = ("magnitude", "gx", "gy", "direction")

# Border defaults follow each filter's conventional padding.
_SMOOTH_BORDER_DEFAULT = {"mean": spatial.ZERO,
                          "median": spatial.REFLECT,
                          "bilateral": spatial.REFLECT}


class UsageError(Exception):
    """Flag-grammar violation; maps to exit status 2."""


class _HelpRequested(Exception):
    pass


@dataclass
class PipelineStep:
    name: str
    params: dict


@dataclass
class Pipeline:
    in_path: str
    out_path: str
    report_path: str | None
    quantize_between: bool
    steps: list


def _parse_int(flag, text, lo=None, hi=None):
    try:
        value = int(text)
    except ValueError:
        raise UsageError(f"{flag} expects an integer, got {text!r}") from None
    if lo is not None and value < lo:
        raise UsageError(f"{flag} must be >= {lo}, got {value}")
    if hi is not None and value > hi:
        raise UsageError(f"{flag} must be <= {hi}, got {value}")
    return value


def _parse_float(flag, text, positive=False):
    try:
        value = float(text)
    except ValueError:
        raise UsageError(f"{flag} expects a number, got {text!r}") from None
    if positive and not value > 0:
        raise UsageError(f"{flag} must be positive, got {text}")
    return value


def _parse_choice(flag, text, choices):
    if text not in choices:
        raise UsageError(f"{flag} must be one of {'|'.join(choices)}, got {text!r}")
    return text


def _parse_odd(flag, text):
    value = _parse_int(flag, text)
    if value < 3 or value % 2 == 0:
        raise UsageError(f"{flag} must be odd and >= 3, got {value}")
    return value


def _collect_flags(args, i, step):
    """Consume --flag value pairs until the next step name or end of argv."""
    flags = {}
    while i < len(args) and args[i].startswith("--"):
        flag = args[i]
        i += 1
        if i >= len(args):
            raise UsageError(f"{flag} is missing its value (step '{step}')")
        flags[flag] = args[i]
        i += 1
    return flags, i


def _take(flags, flag):
    return flags.pop(flag, None)


def _build_step(name, flags):
    params = {}
    if name == "equalize" or name == "logmap" or name == "spectrum":
        pass
    elif name == "stretch":
        x_min = _take(flags, "--x-min")
        x_max = _take(flags, "--x-max")
        params["x_min"] = None if x_min is None else _parse_int("--x-min", x_min, 0, 255)
        params["x_max"] = None if x_max is None else _parse_int("--x-max", x_max, 0, 255)
        if (params["x_min"] is not None and params["x_max"] is not None
                and params["x_min"] >= params["x_max"]):
            raise UsageError(
                f"--x-min {params['x_min']} must be below --x-max {params['x_max']}")
        y_min = _take(flags, "--y-min")
        y_max = _take(flags, "--y-max")
        params["y_min"] = 0 if y_min is None else _parse_int("--y-min", y_min, 0, 255)
        params["y_max"] = 255 if y_max is None else _parse_int("--y-max", y_max, 0, 255)
        if params["y_min"] > params["y_max"]:
            raise UsageError(
                f"--y-min {params['y_min']} must not exceed --y-max {params['y_max']}")
    elif name == "match":
        target = _take(flags, "--target")
        if target is None:
            raise UsageError("match requires --target PATH")
        params["target"] = target
    elif name in ("lowpass", "highpass"):
        family = _take(flags, "--filter")
        if family is None:
            raise UsageError(f"{name} requires --filter ideal|butterworth|gaussian")
        params["filter"] = _parse_choice("--filter", family, _FILTERS)
        cutoff = _take(flags, "--cutoff")
        if cutoff is None:
            raise UsageError(f"{name} requires --cutoff F")
        params["cutoff"] = _parse_float("--cutoff", cutoff, positive=True)
        order = _take(flags, "--order")
        params["order"] = 2 if order is None else _parse_int("--order", order, lo=1)
    elif name == "smooth":
        method = _take(flags, "--method")
        if method is None:
            raise UsageError("smooth requires --method mean|median|bilateral")
        params["method"] = _parse_choice("--method", method, _SMOOTH_METHODS)
        ksize = _take(flags, "--ksize")
        params["ksize"] = 3 if ksize is None else _parse_odd("--ksize", ksize)
        d = _take(flags, "--d")
        params["d"] = 9 if d is None else _parse_odd("--d", d)
        sigma_color = _take(flags, "--sigma-color")
        params["sigma_color"] = (75.0 if sigma_color is None
                                 else _parse_float("--sigma-color", sigma_color, positive=True))
        sigma_space = _take(flags, "--sigma-space")
        params["sigma_space"] = (75.0 if sigma_space is None
                                 else _parse_float("--sigma-space", sigma_space, positive=True))
        border = _take(flags, "--border")
        params["border"] = (_SMOOTH_BORDER_DEFAULT[params["method"]] if border is None
                            else _parse_choice("--border", border, _BORDERS))
    elif name == "edges":
        method = _take(flags, "--method")
        if method is None:
            raise UsageError("edges requires --method sobel|prewitt|laplacian")
        params["method"] = _parse_choice("--method", method, _EDGE_METHODS)
        output = _take(flags, "--output")
        if output is None:
            params["output"] = "magnitude"
        else:
            params["output"] = _parse_choice("--output", output, _EDGE_OUTPUTS)
            if params["method"] == "laplacian":
                raise UsageError(
                    "laplacian writes its raw response; --output is not available")
        border = _take(flags, "--border")
        params["border"] = (spatial.ZERO if border is None
                            else _parse_choice("--border", border, _BORDERS))
    if flags:
        stray = next(iter(flags))
        raise UsageError(f"unknown flag {stray!r} for step '{name}'")
    return PipelineStep(name, params)


def _parse(argv):
    args = list(argv)
    in_path = out_path = report_path = None
    quantize_between = False
    i = 0
    while i < len(args):
        tok = args[i]
        if tok in STEP_NAMES:
            break
        if tok in ("-h", "--help"):
            raise _HelpRequested
        if tok == "-i" or tok == "-o" or tok == "--report":
            if i + 1 >= len(args):
                raise UsageError(f"{tok} is missing its value")
            value = args[i + 1]
            if tok == "-i":
                in_path = value
            elif tok == "-o":
                out_path = value
            else:
                report_path = value
            i += 2
        elif tok == "--quantize-between":
            quantize_between = True
            i += 1
        else:
            raise UsageError(f"unknown argument {tok!r}")
    if in_path is None:
        raise UsageError("missing required -i PATH")
    if out_path is None:
        raise UsageError("missing required -o PATH")

    steps = []
    while i < len(args):
        name = args[i]
        if name not in STEP_NAMES:
            raise UsageError(f"unknown step {name!r}")
        flags, i = _collect_flags(args, i + 1, name)
        steps.append(_build_step(name, flags))
    if not steps:
        raise UsageError("at least one STEP is required")
    for step in steps[:-1]:
        if step.name == "spectrum":
            raise UsageError("spectrum is a terminal step; no steps may follow it")
    return Pipeline(in_path, out_path, report_path, quantize_between, steps)


def _read_gray(path):
    with open(path, "rb") as fh:
        img = read_netpbm(fh.read())
    if img.ndim == 3:
        img = to_gray(img)
    return img


def _apply_step(step, working):
    """Run one step; returns (new working field, report param pairs)."""
    p = step.params
    if step.name == "equalize":
        gray = from_field(working)
        lut = tonemap.equalization_lut(tonemap.cdf(tonemap.histogram(gray)))
        return to_field(tonemap.apply_lut(gray, lut)), []
    if step.name == "stretch":
        gray = from_field(working)
        x_min = int(gray.min()) if p["x_min"] is None else p["x_min"]
        x_max = int(gray.max()) if p["x_max"] is None else p["x_max"]
        lut = tonemap.stretch_lut(x_min, x_max, p["y_min"], p["y_max"])
        pairs = [("x-min", x_min), ("x-max", x_max),
                 ("y-min", p["y_min"]), ("y-max", p["y_max"])]
        return to_field(tonemap.apply_lut(gray, lut)), pairs
    if step.name == "logmap":
        gray = from_field(working)
        v_max = int(gray.max())
        lut = tonemap.log_lut(v_max)
        return to_field(tonemap.apply_lut(gray, lut)), [("v-max", v_max)]
    if step.name == "match":
        gray = from_field(working)
        target = _read_gray(p["target"])
        lut = tonemap.matching_lut(tonemap.cdf(tonemap.histogram(gray)),
                                   tonemap.cdf(tonemap.histogram(target)))
        return to_field(tonemap.apply_lut(gray, lut)), [("target", p["target"])]
    if step.name == "spectrum":
        return magnitude_spectrum(fftshift(dft2(working))), []
    if step.name in ("lowpass", "highpass"):
        rows, cols = working.shape
        kind = freqfilter.LOWPASS if step.name == "lowpass" else freqfilter.HIGHPASS
        family = p["filter"]
        pairs = [("filter", family), ("cutoff", _fmt_number(p["cutoff"]))]
        if family == freqfilter.IDEAL:
            mask = freqfilter.ideal_mask(rows, cols, p["cutoff"], kind)
        elif family == freqfilter.BUTTERWORTH:
            mask = freqfilter.butterworth_mask(rows, cols, p["cutoff"], p["order"], kind)
            pairs.append(("order", p["order"]))
        else:
            mask = freqfilter.gaussian_mask(rows, cols, p["cutoff"], kind)
        return freqfilter.apply_frequency_filter(working, mask), pairs
    if step.name == "smooth":
        method = p["method"]
        if method == "mean":
            out = spatial.mean_filter(working, p["ksize"], p["border"])
            pairs = [("method", method), ("ksize", p["ksize"]), ("border", p["border"])]
        elif method == "median":
            out = spatial.median_filter(working, p["ksize"], p["border"])
            pairs = [("method", method), ("ksize", p["ksize"]), ("border", p["border"])]
        else:
            out = spatial.bilateral_filter(working, p["d"], p["sigma_color"],
                                           p["sigma_space"], p["border"])
            pairs = [("method", method), ("d", p["d"]),
                     ("sigma-color", _fmt_number(p["sigma_color"])),
                     ("sigma-space", _fmt_number(p["sigma_space"])),
                     ("border", p["border"])]
        return out, pairs
    if step.name == "edges":
        method = p["method"]
        border = p["border"]
        if method == "laplacian":
            out = spatial.laplacian(working, border)
            pairs = [("method", method), ("output", "response"), ("border", border)]
            return out, pairs
        gx, gy = (spatial.sobel(working, border) if method == "sobel"
                  else spatial.prewitt(working, border))
        output = p["output"]
        if output == "magnitude":
            out = spatial.gradient_magnitude(gx, gy)
        elif output == "gx":
            out = gx
        elif output == "gy":
            out = gy
        else:
            out = spatial.gradient_direction(gx, gy)
        return out, [("method", method), ("output", output), ("border", border)]
    raise AssertionError(f"unhandled step {step.name}")


def _fmt_number(value):
    if isinstance(value, float):
        return f"{value:g}"
    return str(value)


def _report_line(name, pairs, field):
    parts = [name]
    parts.extend(f"{key}={_fmt_number(value)}" for key, value in pairs)
    parts.append(f"min={field.min():.4f}")
    parts.append(f"max={field.max():.4f}")
    parts.append(f"mean={field.mean():.4f}")
    return " ".join(parts)


def _execute(pipeline):
    with open(pipeline.in_path, "rb") as fh:
        img = read_netpbm(fh.read())
    if img.ndim == 3:
        img = to_gray(img)
    working = to_field(img)

    lines = []
    for step in pipeline.steps:
        working, pairs = _apply_step(step, working)
        lines.append(_report_line(step.name, pairs, working))
        if pipeline.quantize_between:
            working = to_field(from_field(working))

    # Raw edge responses and log spectra live outside [0, 255]; export
    # rescales them by min-max stretch, and the report records it.
    if pipeline.steps[-1].name in ("edges", "spectrum"):
        lo = float(working.min())
        hi = float(working.max())
        if hi > lo:
            working = (working - lo) * (255.0 / (hi - lo))
        else:
            working = np.zeros_like(working)
        lines.append(f"export rescale=min-max in-min={lo:.4f} in-max={hi:.4f}")
    else:
        lines.append("export rescale=none")

    out = from_field(working)
    with open(pipeline.out_path, "wb") as fh:
        fh.write(write_pgm(out))
    if pipeline.report_path is not None:
        with open(pipeline.report_path, "a") as fh:
            for line in lines:
                fh.write(line + "\n")


def run(argv):
    """Parse and execute a pipeline; returns the process exit status."""
    try:
        pipeline = _parse(argv)
    except _HelpRequested:
        print(__doc__.strip())
        return 0
    except UsageError as exc:
        print(f"enhance: {exc}", file=sys.stderr)
        print(USAGE, file=sys.stderr)
        return 2
    try:
        _execute(pipeline)
    except (EnhanceError, OSError) as exc:
        print(f"enhance: {exc}", file=sys.stderr)
        return 1
    return 0


def main(argv=None):
    return run(sys.argv[1:] if argv is None else argv)


if __name__ == "__main__":
    sys.exit(main())
