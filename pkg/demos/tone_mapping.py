#!/usr/bin/env python3
"""Tone mapping walkthrough: equalization, stretching, log, matching.

Builds a deliberately murky synthetic image, then shows how each LUT-based
transform reshapes its histogram. Writes before/after PGM files next to
this script under demo_output/.
"""

import os

import numpy as np

import enhance as eh

OUT_DIR = os.path.join(os.path.dirname(os.path.abspath(__file__)), "demo_output")


def make_low_contrast_scene(size=128, seed=0):
    """Soft blobs squeezed into a narrow band of mid grays."""
    rng = np.random.default_rng(seed)
    y, x = np.mgrid[0:size, 0:size]
    scene = (
        90.0
        + 25.0 * np.exp(-((x - 40) ** 2 + (y - 44) ** 2) / 500.0)
        + 18.0 * np.exp(-((x - 90) ** 2 + (y - 80) ** 2) / 900.0)
        + rng.normal(0, 2.0, (size, size))
    )
    return eh.quantize(scene)


def describe(tag, img):
    h = eh.histogram(img)
    occupied = np.count_nonzero(h)
    print(f"  {tag:<12} min={img.min():3d} max={img.max():3d} "
          f"mean={img.mean():7.2f} occupied-levels={occupied}")


def save(name, img):
    path = os.path.join(OUT_DIR, name)
    with open(path, "wb") as fh:
        fh.write(eh.write_pgm(img))
    print(f"  wrote {path}")


def main():
    os.makedirs(OUT_DIR, exist_ok=True)
    img = make_low_contrast_scene()

    print("=== Tone mapping on a low-contrast scene ===\n")
    print("1. Input statistics")
    describe("input", img)
    save("tone_input.pgm", img)

    print("\n2. Histogram equalization")
    lut = eh.equalization_lut(eh.cdf(eh.histogram(img)))
    equalized = eh.apply_lut(img, lut)
    describe("equalized", equalized)
    save("tone_equalized.pgm", equalized)
    print("  the LUT spreads the occupied band across the full range:")
    lo, hi = int(img.min()), int(img.max())
    for level in (lo, (lo + hi) // 2, hi):
        print(f"    level {level:3d} -> {int(lut[level]):3d}")

    print("\n3. Linear stretch of the occupied range to [0, 255]")
    stretched = eh.apply_lut(img, eh.stretch_lut(lo, hi, 0, 255))
    describe("stretched", stretched)
    save("tone_stretched.pgm", stretched)

    print("\n4. Log transform (compresses highlights, lifts shadows)")
    logged = eh.apply_lut(img, eh.log_lut(int(img.max())))
    describe("log", logged)
    save("tone_log.pgm", logged)

    print("\n5. Histogram matching to a bright target")
    rng = np.random.default_rng(1)
    target = eh.quantize(np.clip(rng.normal(190, 20, (64, 64)), 0, 255))
    match_lut = eh.matching_lut(eh.cdf(eh.histogram(img)),
                                eh.cdf(eh.histogram(target)))
    matched = eh.apply_lut(img, match_lut)
    describe("target", target)
    describe("matched", matched)
    save("tone_matched.pgm", matched)
    print("  the matched mean moves to the target's neighborhood:",
          f"{matched.mean():.1f} vs target {target.mean():.1f}")

    print("\nDone. Inspect the PGM files with any Netpbm-aware viewer.")


if __name__ == "__main__":
    main()
