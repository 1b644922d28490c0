import numpy as np
import pytest

from enhance import read_netpbm, write_pgm
from enhance.cli import run


def pgm_bytes(pixels):
    arr = np.asarray(pixels, dtype=np.uint8)
    return write_pgm(arr)


def write_input(tmp_path, name, pixels):
    path = tmp_path / name
    path.write_bytes(pgm_bytes(pixels))
    return str(path)


class TestGoldenRuns:
    def test_equalize_fixture(self, tmp_path):
        in_path = write_input(tmp_path, "in.pgm", [[52, 52], [154, 255]])
        out_path = str(tmp_path / "out.pgm")
        assert run(["-i", in_path, "-o", out_path, "equalize"]) == 0
        expected = b"P5\n2 2\n255\n" + bytes([128, 128, 191, 255])
        assert (tmp_path / "out.pgm").read_bytes() == expected

    def test_stretch_fixture_auto_bounds(self, tmp_path):
        in_path = write_input(tmp_path, "in.pgm", [[50, 125], [200, 125]])
        out_path = str(tmp_path / "out.pgm")
        assert run(["-i", in_path, "-o", out_path,
                    "stretch", "--y-min", "0", "--y-max", "255"]) == 0
        expected = b"P5\n2 2\n255\n" + bytes([0, 128, 255, 128])
        assert (tmp_path / "out.pgm").read_bytes() == expected

    def test_stretch_flat_image_fails(self, tmp_path, capsys):
        in_path = write_input(tmp_path, "flat.pgm", np.full((3, 3), 90))
        out_path = str(tmp_path / "out.pgm")
        assert run(["-i", in_path, "-o", out_path, "stretch"]) == 1
        err = capsys.readouterr().err
        assert err.count("\n") == 1
        assert "degenerate intensity range" in err
        assert not (tmp_path / "out.pgm").exists()


class TestUsageErrors:
    def test_missing_input_flag(self, tmp_path):
        assert run(["-o", str(tmp_path / "o.pgm"), "equalize"]) == 2

    def test_missing_output_flag(self, tmp_path):
        in_path = write_input(tmp_path, "in.pgm", [[1]])
        assert run(["-i", in_path, "equalize"]) == 2

    def test_no_steps(self, tmp_path):
        in_path = write_input(tmp_path, "in.pgm", [[1]])
        assert run(["-i", in_path, "-o", str(tmp_path / "o.pgm")]) == 2

    def test_unknown_step(self, tmp_path):
        in_path = write_input(tmp_path, "in.pgm", [[1]])
        assert run(["-i", in_path, "-o", str(tmp_path / "o.pgm"), "sharpen"]) == 2

    def test_unknown_flag(self, tmp_path):
        in_path = write_input(tmp_path, "in.pgm", [[1]])
        assert run(["-i", in_path, "-o", str(tmp_path / "o.pgm"),
                    "equalize", "--strength", "2"]) == 2

    def test_bad_numeric_value(self, tmp_path):
        in_path = write_input(tmp_path, "in.pgm", [[1]])
        assert run(["-i", in_path, "-o", str(tmp_path / "o.pgm"),
                    "lowpass", "--filter", "ideal", "--cutoff", "-4"]) == 2

    def test_even_ksize(self, tmp_path):
        in_path = write_input(tmp_path, "in.pgm", [[1]])
        assert run(["-i", in_path, "-o", str(tmp_path / "o.pgm"),
                    "smooth", "--method", "mean", "--ksize", "4"]) == 2

    def test_steps_after_spectrum(self, tmp_path):
        in_path = write_input(tmp_path, "in.pgm", [[1]])
        assert run(["-i", in_path, "-o", str(tmp_path / "o.pgm"),
                    "spectrum", "equalize"]) == 2

    def test_match_requires_target(self, tmp_path):
        in_path = write_input(tmp_path, "in.pgm", [[1]])
        assert run(["-i", in_path, "-o", str(tmp_path / "o.pgm"), "match"]) == 2

    def test_laplacian_rejects_output_selection(self, tmp_path):
        in_path = write_input(tmp_path, "in.pgm", [[1]])
        assert run(["-i", in_path, "-o", str(tmp_path / "o.pgm"),
                    "edges", "--method", "laplacian", "--output", "gx"]) == 2

    def test_missing_input_file_is_runtime_error(self, tmp_path):
        assert run(["-i", str(tmp_path / "nope.pgm"),
                    "-o", str(tmp_path / "o.pgm"), "equalize"]) == 1


class TestSpectrumExport:
    def test_constant_image_single_centered_dc(self, tmp_path):
        in_path = write_input(tmp_path, "in.pgm", np.full((8, 8), 60))
        out_path = str(tmp_path / "spec.pgm")
        assert run(["-i", in_path, "-o", out_path, "spectrum"]) == 0
        out = read_netpbm((tmp_path / "spec.pgm").read_bytes())
        nonzero = np.argwhere(out > 0)
        assert nonzero.tolist() == [[4, 4]]
        assert out[4, 4] == 255

    def test_horizontal_cosine_three_bins(self, tmp_path):
        k = 4
        j = np.arange(64)[None, :]
        img = np.rint(128 + 100 * np.cos(2 * np.pi * k * j / 64)
                      * np.ones((64, 1))).astype(np.uint8)
        in_path = write_input(tmp_path, "cos.pgm", img)
        out_path = str(tmp_path / "spec.pgm")
        assert run(["-i", in_path, "-o", out_path, "spectrum"]) == 0
        out = read_netpbm((tmp_path / "spec.pgm").read_bytes())
        bright = set(map(tuple, np.argwhere(out > 128)))
        assert bright == {(32, 32 - k), (32, 32), (32, 32 + k)}

    def test_zero_image_all_zero(self, tmp_path):
        in_path = write_input(tmp_path, "zero.pgm", np.zeros((8, 8), dtype=np.uint8))
        out_path = str(tmp_path / "spec.pgm")
        assert run(["-i", in_path, "-o", out_path, "spectrum"]) == 0
        out = read_netpbm((tmp_path / "spec.pgm").read_bytes())
        assert np.all(out == 0)


class TestPipelines:
    def test_one_shot_vs_chained_within_one_level(self, tmp_path):
        rng = np.random.default_rng(0)
        img = rng.integers(20, 230, (16, 16), dtype=np.uint8)
        in_path = write_input(tmp_path, "in.pgm", img)

        one_shot = str(tmp_path / "oneshot.pgm")
        assert run(["-i", in_path, "-o", one_shot, "equalize",
                    "stretch", "--y-min", "10", "--y-max", "240"]) == 0

        mid = str(tmp_path / "mid.pgm")
        chained = str(tmp_path / "chained.pgm")
        assert run(["-i", in_path, "-o", mid, "equalize"]) == 0
        assert run(["-i", mid, "-o", chained,
                    "stretch", "--y-min", "10", "--y-max", "240"]) == 0

        a = read_netpbm((tmp_path / "oneshot.pgm").read_bytes()).astype(np.int64)
        b = read_netpbm((tmp_path / "chained.pgm").read_bytes()).astype(np.int64)
        assert np.max(np.abs(a - b)) <= 1

    def test_quantize_between_matches_chained_exactly(self, tmp_path):
        rng = np.random.default_rng(1)
        img = rng.integers(0, 256, (16, 16), dtype=np.uint8)
        in_path = write_input(tmp_path, "in.pgm", img)

        one_shot = str(tmp_path / "oneshot.pgm")
        assert run(["-i", in_path, "-o", one_shot, "--quantize-between",
                    "smooth", "--method", "mean", "equalize"]) == 0

        mid = str(tmp_path / "mid.pgm")
        chained = str(tmp_path / "chained.pgm")
        assert run(["-i", in_path, "-o", mid,
                    "smooth", "--method", "mean"]) == 0
        assert run(["-i", mid, "-o", chained, "equalize"]) == 0

        assert ((tmp_path / "oneshot.pgm").read_bytes()
                == (tmp_path / "chained.pgm").read_bytes())

    def test_match_step(self, tmp_path):
        in_path = write_input(tmp_path, "in.pgm", [[52, 52], [154, 255]])
        target = write_input(tmp_path, "target.pgm", [[10, 20], [20, 30]])
        out_path = str(tmp_path / "out.pgm")
        assert run(["-i", in_path, "-o", out_path,
                    "match", "--target", target]) == 0
        out = read_netpbm((tmp_path / "out.pgm").read_bytes())
        assert out.ravel().tolist() == [20, 20, 20, 30]

    def test_ppm_input_converted_to_gray(self, tmp_path):
        data = b"P6\n2 1\n255\n" + bytes([255, 0, 0, 0, 0, 0])
        path = tmp_path / "in.ppm"
        path.write_bytes(data)
        out_path = str(tmp_path / "out.pgm")
        assert run(["-i", str(path), "-o", out_path, "stretch"]) == 0
        out = read_netpbm((tmp_path / "out.pgm").read_bytes())
        assert out.ravel().tolist() == [255, 0]

    def test_lowpass_smooths_toward_mean(self, tmp_path):
        rng = np.random.default_rng(2)
        img = rng.integers(0, 256, (16, 16), dtype=np.uint8)
        in_path = write_input(tmp_path, "in.pgm", img)
        out_path = str(tmp_path / "out.pgm")
        assert run(["-i", in_path, "-o", out_path,
                    "lowpass", "--filter", "gaussian", "--cutoff", "2"]) == 0
        out = read_netpbm((tmp_path / "out.pgm").read_bytes())
        assert out.std() < img.std()

    def test_edges_export_attains_full_range(self, tmp_path):
        img = np.zeros((8, 8), dtype=np.uint8)
        img[:, 4:] = 200
        in_path = write_input(tmp_path, "in.pgm", img)
        out_path = str(tmp_path / "out.pgm")
        assert run(["-i", in_path, "-o", out_path,
                    "edges", "--method", "sobel"]) == 0
        out = read_netpbm((tmp_path / "out.pgm").read_bytes())
        assert out.min() == 0 and out.max() == 255

    def test_edges_direction_output(self, tmp_path):
        img = np.zeros((8, 8), dtype=np.uint8)
        img[:, 4:] = 200
        in_path = write_input(tmp_path, "in.pgm", img)
        out_path = str(tmp_path / "out.pgm")
        assert run(["-i", in_path, "-o", out_path, "edges",
                    "--method", "prewitt", "--output", "direction",
                    "--border", "replicate"]) == 0
        assert (tmp_path / "out.pgm").exists()

    def test_smooth_median_kills_impulse(self, tmp_path):
        img = np.zeros((5, 5), dtype=np.uint8)
        img[2, 2] = 255
        in_path = write_input(tmp_path, "in.pgm", img)
        out_path = str(tmp_path / "out.pgm")
        assert run(["-i", in_path, "-o", out_path,
                    "smooth", "--method", "median"]) == 0
        out = read_netpbm((tmp_path / "out.pgm").read_bytes())
        assert np.all(out == 0)

    def test_smooth_bilateral_runs(self, tmp_path):
        rng = np.random.default_rng(3)
        img = rng.integers(0, 256, (9, 9), dtype=np.uint8)
        in_path = write_input(tmp_path, "in.pgm", img)
        out_path = str(tmp_path / "out.pgm")
        assert run(["-i", in_path, "-o", out_path,
                    "smooth", "--method", "bilateral", "--d", "5",
                    "--sigma-color", "40", "--sigma-space", "2"]) == 0
        assert (tmp_path / "out.pgm").exists()


class TestReport:
    def test_report_lines_and_determinism(self, tmp_path):
        rng = np.random.default_rng(4)
        img = rng.integers(10, 240, (12, 12), dtype=np.uint8)
        in_path = write_input(tmp_path, "in.pgm", img)
        out_path = str(tmp_path / "out.pgm")
        report = tmp_path / "report.txt"
        argv = ["-i", in_path, "-o", out_path, "--report", str(report),
                "equalize", "stretch", "--y-min", "0", "--y-max", "255"]

        assert run(argv) == 0
        first = report.read_bytes()
        report.unlink()
        assert run(argv) == 0
        assert report.read_bytes() == first

        lines = first.decode().splitlines()
        assert len(lines) == 3
        assert lines[0].startswith("equalize min=")
        assert lines[1].startswith("stretch x-min=")
        assert lines[2] == "export rescale=none"
        for line in lines[:2]:
            assert " min=" in line and " max=" in line and " mean=" in line

    def test_report_appends(self, tmp_path):
        img = np.array([[10, 250]], dtype=np.uint8)
        in_path = write_input(tmp_path, "in.pgm", img)
        out_path = str(tmp_path / "out.pgm")
        report = tmp_path / "report.txt"
        argv = ["-i", in_path, "-o", out_path, "--report", str(report), "equalize"]
        assert run(argv) == 0
        once = report.read_text()
        assert run(argv) == 0
        assert report.read_text() == once + once

    def test_report_records_export_rescale(self, tmp_path):
        img = np.zeros((8, 8), dtype=np.uint8)
        img[:, 4:] = 200
        in_path = write_input(tmp_path, "in.pgm", img)
        out_path = str(tmp_path / "out.pgm")
        report = tmp_path / "report.txt"
        assert run(["-i", in_path, "-o", out_path, "--report", str(report),
                    "edges", "--method", "sobel"]) == 0
        lines = report.read_text().splitlines()
        assert lines[0].startswith("edges method=sobel output=magnitude border=zero")
        assert lines[1].startswith("export rescale=min-max in-min=")
