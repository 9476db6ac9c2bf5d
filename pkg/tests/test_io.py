from pathlib import Path
from tempfile import TemporaryDirectory
from unittest import TestCase, main
from unittest.mock import patch

import numpy as np
from zenlib.logging import loggify

from pyfsst import PyFSST
from pyfsst.config import Method, RunConfig, parse_float_list, parse_grid, parse_range
from pyfsst.errors import UnknownFormatError, UsageError
from pyfsst.metrics import optimize_sigma
from pyfsst.header import HEADER_TFR1, TFRHeader, get_header_from_magic, get_magic_from_header, header_size
from pyfsst.main import main as cli_main
from pyfsst.reader import CSVSignalReader, TFRReader
from pyfsst.signal import SampledSignal
from pyfsst.stft import TFKind, build_window_family, stft
from pyfsst.writer import CSVWriter, TFRWriter

from fsst_test_signals import FS, SIGMA, gaussian_chirp


@loggify
class TestTFRFormat(TestCase):
    def setUp(self):
        self.tfr = stft(gaussian_chirp(), build_window_family(SIGMA, FS), n_bins=300)
        self.tmpdir = TemporaryDirectory()
        self.path = Path(self.tmpdir.name) / "chirp.tfr"

    def tearDown(self):
        self.tmpdir.cleanup()

    def test_header_layout(self):
        self.assertEqual(header_size(HEADER_TFR1), 72)
        self.assertIs(get_header_from_magic(b"TFR1"), HEADER_TFR1)
        self.assertEqual(get_magic_from_header(HEADER_TFR1), b"TFR1")
        header = TFRHeader(tfr=self.tfr, logger=self.logger)
        data = bytes(header)
        self.assertEqual(len(data), 72)
        self.assertEqual(data[:4], b"TFR1")
        parsed = TFRHeader(data, logger=self.logger)
        self.assertEqual((parsed.n_frames, parsed.n_bins, parsed.dtype), (1024, 300, 2))
        self.assertEqual(parsed.axes()["kind"], TFKind.STFT)
        self.assertEqual(parsed.sigma, SIGMA)

    def test_complex_round_trip(self):
        TFRWriter(self.tfr, self.path, logger=self.logger).write()
        self.assertEqual(self.path.stat().st_size, 72 + 1024 * 300 * 16)
        reader = TFRReader(self.path, logger=self.logger)
        np.testing.assert_array_equal(reader.tfr.values, self.tfr.values)
        self.assertTrue(reader.tfr.same_axes(self.tfr))
        self.assertEqual(reader.tfr.kind, TFKind.STFT)
        self.assertEqual(reader.tfr.sample_rate_hz, FS)
        self.assertEqual(reader.tfr.window_ref.sigma, SIGMA)

    def test_magnitude_round_trip(self):
        TFRWriter(self.tfr, self.path, complex_values=False).write(safe_write=False)
        tfr = TFRReader(self.path).tfr
        self.assertFalse(tfr.is_complex)
        np.testing.assert_array_equal(tfr.values, np.abs(self.tfr.values))

    def test_bad_magic(self):
        data = bytearray(bytes(TFRWriter(self.tfr, self.path)))
        data[:4] = b"TFR9"
        self.path.write_bytes(bytes(data))
        with self.assertRaises(UnknownFormatError):
            TFRReader(self.path)

    def test_bad_dtype(self):
        data = bytearray(bytes(TFRWriter(self.tfr, self.path)))
        data[20] = 7
        self.path.write_bytes(bytes(data))
        with self.assertRaises(UnknownFormatError):
            TFRReader(self.path)

    def test_truncated_payload(self):
        self.path.write_bytes(bytes(TFRWriter(self.tfr, self.path))[:-16])
        with self.assertRaises(UnknownFormatError):
            TFRReader(self.path)

    def test_missing_file(self):
        with self.assertRaises(FileNotFoundError):
            TFRReader(Path(self.tmpdir.name) / "missing.tfr")


@loggify
class TestCSV(TestCase):
    def setUp(self):
        self.tmpdir = TemporaryDirectory()
        self.path = Path(self.tmpdir.name) / "signal.csv"

    def tearDown(self):
        self.tmpdir.cleanup()

    def test_complex_round_trip(self):
        sig = gaussian_chirp()
        CSVWriter.from_signal(sig, self.path, logger=self.logger).write()
        read = CSVSignalReader(self.path, logger=self.logger).signal
        np.testing.assert_array_equal(read.samples, sig.samples)
        self.assertAlmostEqual(read.sample_rate_hz, FS, places=6)

    def test_real_round_trip(self):
        sig = SampledSignal(np.cos(np.arange(64) / 3), 100.0, 2.0)
        CSVWriter.from_signal(sig, self.path).write()
        read = CSVSignalReader(self.path).signal
        self.assertTrue(read.is_real)
        np.testing.assert_array_equal(read.samples, sig.samples)
        self.assertEqual(read.t0, 2.0)

    def test_text_header(self):
        self.path.write_text("time,value\n0,1\n0.5,2\n1.0,3\n")
        read = CSVSignalReader(self.path).signal
        np.testing.assert_array_equal(read.samples, [1, 2, 3])
        self.assertEqual(read.sample_rate_hz, 2.0)

    def test_nonuniform_time(self):
        self.path.write_text("0,1\n1,2\n3,3\n")
        with self.assertRaises(UnknownFormatError):
            CSVSignalReader(self.path)

    def test_wrong_columns(self):
        self.path.write_text("0,1,2,3\n1,2,3,4\n")
        with self.assertRaises(UnknownFormatError):
            CSVSignalReader(self.path)

    def test_columns(self):
        CSVWriter({"mode": ["f1", "f2"], "snr_db": [28.5, 6.25]}, self.path).write()
        self.assertEqual(self.path.read_text().splitlines(), ["# mode,snr_db", "f1,28.5", "f2,6.25"])
        with self.assertRaises(ValueError):
            CSVWriter({"a": [1, 2], "b": [1]}, self.path)

    def test_mixed_columns(self):
        columns = {"d": [0, 10], "label": ["f1", "f"], "snr_db": [1 / 3, np.inf]}
        CSVWriter(columns, self.path, logger=self.logger).write()
        lines = self.path.read_text().splitlines()
        self.assertEqual(lines, ["# d,label,snr_db", "0,f1,0.33333333333333331", "10,f,inf"])
        self.assertEqual(float(lines[1].split(",")[2]), 1 / 3)


@loggify
class TestConfig(TestCase):
    def test_parse_range(self):
        self.assertEqual(parse_range("0..10"), range(0, 11))
        self.assertEqual(parse_range("3"), range(3, 4))
        for text in ("5..2", "a..b", "-1..2"):
            with self.assertRaises(UsageError):
                parse_range(text)

    def test_parse_grid(self):
        self.assertEqual(parse_grid("0.01:0.01:0.05"), (0.01, 0.02, 0.03, 0.04, 0.05))
        self.assertEqual(parse_grid("0.2,0.1"), (0.1, 0.2))
        for text in ("0.1:0:1", "1:0.1:0", "a:b:c"):
            with self.assertRaises(UsageError):
                parse_grid(text)

    def test_parse_float_list(self):
        self.assertEqual(parse_float_list("inf,5,0,-5"), (np.inf, 5.0, 0.0, -5.0))
        for text in ("", "1,x"):
            with self.assertRaises(UsageError):
                parse_float_list(text)

    def test_method(self):
        self.assertIs(Method.from_str(" FSST4 "), Method.FSST4)
        self.assertEqual(Method.RM.stack_order, 2)
        self.assertEqual(Method.STFT.order, 0)
        self.assertTrue(Method.FSST2T.squeezes)
        self.assertFalse(Method.RM.squeezes)
        with self.assertRaises(ValueError):
            Method.from_str("wsst")

    def test_reconstruct_requirements(self):
        base = {"command": "reconstruct", "signal": "benchmark"}
        with self.assertRaises(UsageError):
            RunConfig.from_kwargs(base)
        with self.assertRaises(UsageError):
            RunConfig.from_kwargs({**base, "K": 2})
        with self.assertRaises(UsageError):
            RunConfig.from_kwargs({**base, "K": 2, "d": 0, "method": "stft"})
        config = RunConfig.from_kwargs({**base, "K": 2, "d": 3})
        self.assertEqual(config.clear_halfwidth, 8)
        self.assertEqual(config.method, Method.FSST4)

    def test_input_selection(self):
        with self.assertRaises(UsageError):
            RunConfig.from_kwargs({"command": "transform"})
        with self.assertRaises(UsageError):
            RunConfig.from_kwargs({"command": "transform", "signal": "benchmark", "input": "x.csv"})
        with self.assertRaises(UsageError):
            RunConfig.from_kwargs({"command": "transform", "signal": "chirp"})

    def test_transform_requirements(self):
        with self.assertRaises(UsageError):
            RunConfig.from_kwargs({"signal": "benchmark", "method": "rm", "complex_output": True})
        with self.assertRaises(UsageError):
            RunConfig.from_kwargs({"signal": "benchmark", "method": "wsst"})
        with self.assertRaises(UsageError):
            RunConfig.from_kwargs({"signal": "benchmark", "sigma": "-0.1"})
        config = RunConfig.from_kwargs({"signal": "benchmark", "method": "fsst2", "complex_output": True})
        self.assertTrue(config.complex_output)
        self.assertEqual(config.sigma, "auto")

    def test_evaluate_requirements(self):
        base = {"command": "evaluate", "signal": "benchmark"}
        with self.assertRaises(UsageError):
            RunConfig.from_kwargs(base)
        with self.assertRaises(UsageError):
            RunConfig.from_kwargs({**base, "energy": True})
        with self.assertRaises(UsageError):
            RunConfig.from_kwargs({"command": "evaluate", "input": "x.csv", "emd": True, "methods": "fsst2"})
        config = RunConfig.from_kwargs({**base, "emd": True, "methods": "fsst2,fsst4", "snr_levels": "inf,0"})
        self.assertEqual(config.methods, (Method.FSST2, Method.FSST4))
        self.assertEqual(config.snr_levels, (np.inf, 0.0))


@loggify
class TestCLI(TestCase):
    def test_missing_ridge_count(self):
        with patch("sys.argv", ["pyfsst", "reconstruct", "--signal", "benchmark", "--d", "0"]):
            with self.assertRaises(SystemExit) as context:
                cli_main()
        self.assertEqual(context.exception.code, 2)

    def test_usage_error_from_run(self):
        argv = ["pyfsst", "transform", "--signal", "benchmark", "--sigma", "0.05"]
        error = UsageError("No input signal configured")
        with patch("sys.argv", argv), patch.object(PyFSST, "run", side_effect=error):
            with self.assertRaises(SystemExit) as context:
                cli_main()
        self.assertEqual(context.exception.code, 2)

    def test_transform(self):
        with TemporaryDirectory() as tmpdir:
            argv = ["pyfsst", "transform", "--signal", "benchmark", "--method", "fsst", "--sigma", "0.05", "-o", tmpdir]
            with patch("sys.argv", argv):
                cli_main()
            self.assertTrue((Path(tmpdir) / "fsst.tfr").exists())


@loggify
class TestPipeline(TestCase):
    def setUp(self):
        self.tmpdir = TemporaryDirectory()
        self.output = Path(self.tmpdir.name)

    def tearDown(self):
        self.tmpdir.cleanup()

    def test_transform(self):
        config = RunConfig(signal="benchmark", method=Method.FSST2, sigma=SIGMA, output=self.output, csv=True)
        written = PyFSST(config=config, logger=self.logger).run()
        self.assertEqual([path.name for path in written], ["fsst2.tfr", "fsst2.csv", "fsst2.diagnostics.csv"])
        tfr = TFRReader(written[0]).tfr
        self.assertEqual(tfr.shape, (1024, 512))
        self.assertEqual(tfr.kind, TFKind.SQUEEZED)
        self.assertFalse(tfr.is_complex)
        header = written[2].read_text().splitlines()[0]
        self.assertTrue(header.startswith("# sigma,gamma,dropped,order_0,order_1,order_2"))

    def test_reassignment(self):
        config = RunConfig(signal="benchmark", method=Method.RM, sigma=SIGMA, output=self.output, fmax=400)
        written = PyFSST(config=config, logger=self.logger).run()
        tfr = TFRReader(written[0]).tfr
        self.assertEqual(tfr.kind, TFKind.REASSIGNED)
        self.assertEqual(tfr.n_bins, 400)

    def test_reconstruct(self):
        config = RunConfig(
            command="reconstruct",
            signal="benchmark",
            method=Method.FSST2,
            sigma=SIGMA,
            K=2,
            d=2,
            d_sweep=range(0, 3),
            output=self.output,
        )
        written = PyFSST(config=config, logger=self.logger).run()
        names = [path.name for path in written]
        self.assertEqual(names, ["ridges.csv", "mode_1.csv", "mode_2.csv", "report.csv", "d_sweep.csv"])
        mode = CSVSignalReader(self.output / "mode_1.csv").signal
        self.assertEqual(len(mode), 1024)
        self.assertFalse(mode.is_real)
        report = (self.output / "report.csv").read_text().splitlines()
        self.assertEqual(report[0], "# mode,snr_db")
        self.assertEqual({line.split(",")[0] for line in report[1:]}, {"f1", "f2", "f"})
        sweep = (self.output / "d_sweep.csv").read_text().splitlines()
        self.assertEqual(len(sweep), 4)

    def test_reconstruct_with_hop(self):
        config = RunConfig(
            command="reconstruct",
            signal="benchmark",
            method=Method.FSST2,
            sigma=SIGMA,
            K=2,
            d=0,
            hop=2,
            output=self.output,
        )
        written = PyFSST(config=config, logger=self.logger).run()
        self.assertEqual([path.name for path in written], ["ridges.csv", "mode_1.csv", "mode_2.csv", "report.csv"])
        mode = CSVSignalReader(self.output / "mode_1.csv").signal
        self.assertEqual(len(mode), 512)
        self.assertAlmostEqual(mode.sample_rate_hz, FS / 2, places=6)
        report = (self.output / "report.csv").read_text().splitlines()
        self.assertEqual({line.split(",")[0] for line in report[1:]}, {"f1", "f2", "f"})

    def test_auto_sigma_short_signal(self):
        config = RunConfig(signal="surrogate", method=Method.FSST4, pad_pow2=True, output=self.output)
        written = PyFSST(config=config, logger=self.logger).run()
        self.assertEqual(TFRReader(written[0]).tfr.kind, TFKind.SQUEEZED)
        sigma = float(written[-1].read_text().splitlines()[1].split(",")[0])
        self.assertIn(sigma, config.sigma_grid)

    def test_evaluate_renyi_with_hop(self):
        grid = (0.03, 0.05)
        config = RunConfig(
            command="evaluate", signal="benchmark", renyi=True, sigma_grid=grid, hop=4, output=self.output
        )
        app = PyFSST(config=config, logger=self.logger)
        written = app.run()
        table = np.loadtxt(written[0], delimiter=",")
        _, expected = optimize_sigma(app.load_signal().signal, grid, hop=4)
        np.testing.assert_allclose(table[:, 1], expected, rtol=1e-12)

    def test_evaluate_renyi(self):
        config = RunConfig(
            command="evaluate",
            signal="benchmark",
            renyi=True,
            sigma_grid=(0.03, 0.05),
            snr_levels=(np.inf, 0.0),
            output=self.output,
        )
        written = PyFSST(config=config, logger=self.logger).run()
        lines = written[0].read_text().splitlines()
        self.assertEqual(lines[0], "# sigma,renyi_snr_inf,renyi_snr_0.0")
        self.assertEqual(len(lines), 3)


if __name__ == "__main__":
    main()
