#!/usr/bin/env python3
"""Drive the `enhance` command line end to end.

Creates PGM fixtures, runs a few pipelines through the CLI entry point,
and prints the report files it produces. Everything happens inside
demo_output/.
"""

import os

import numpy as np

import enhance as eh
from enhance.cli import run

OUT_DIR = os.path.join(os.path.dirname(os.path.abspath(__file__)), "demo_output")


def write_pgm_file(name, img):
    path = os.path.join(OUT_DIR, name)
    with open(path, "wb") as fh:
        fh.write(eh.write_pgm(img))
    return path


def show(argv):
    print("  $ enhance " + " ".join(argv))
    status = run(argv)
    print(f"    -> exit {status}")
    return status


def main():
    os.makedirs(OUT_DIR, exist_ok=True)
    rng = np.random.default_rng(21)

    murky = eh.quantize(np.clip(rng.normal(110, 12, (48, 48)), 0, 255))
    in_path = write_pgm_file("cli_input.pgm", murky)
    report = os.path.join(OUT_DIR, "cli_report.txt")
    if os.path.exists(report):
        os.remove(report)

    print("=== 1. Multi-step pipeline with a report ===")
    show(["-i", in_path, "-o", os.path.join(OUT_DIR, "cli_enhanced.pgm"),
          "--report", report,
          "equalize",
          "smooth", "--method", "median", "--ksize", "3",
          "stretch", "--y-min", "0", "--y-max", "255"])
    print("  report contents:")
    with open(report) as fh:
        for line in fh:
            print("    " + line.rstrip())

    print("\n=== 2. Frequency-domain steps ===")
    show(["-i", in_path, "-o", os.path.join(OUT_DIR, "cli_lowpass.pgm"),
          "lowpass", "--filter", "butterworth", "--cutoff", "8", "--order", "2"])
    show(["-i", in_path, "-o", os.path.join(OUT_DIR, "cli_spectrum.pgm"),
          "spectrum"])

    print("\n=== 3. Edge extraction ===")
    card = np.zeros((48, 48), dtype=np.uint8)
    card[8:40, 8:24] = 220
    card_path = write_pgm_file("cli_card.pgm", card)
    show(["-i", card_path, "-o", os.path.join(OUT_DIR, "cli_edges.pgm"),
          "edges", "--method", "sobel", "--border", "replicate"])

    print("\n=== 4. Error handling ===")
    flat_path = write_pgm_file("cli_flat.pgm", np.full((8, 8), 77, dtype=np.uint8))
    print("  a flat image cannot be auto-stretched (exit 1):")
    show(["-i", flat_path, "-o", os.path.join(OUT_DIR, "cli_never.pgm"), "stretch"])
    print("  a typo in the step name is a usage error (exit 2):")
    show(["-i", in_path, "-o", os.path.join(OUT_DIR, "cli_never.pgm"), "sharpen"])


if __name__ == "__main__":
    main()
