from pathlib import Path
from typing import Union

import numpy as np
from zenlib.logging import loggify

from pyfsst.errors import UnknownFormatError
from pyfsst.header import HEADER_TFR1, TFRHeader, header_size
from pyfsst.signal import SampledSignal
from pyfsst.stft import TFMatrix, WindowRef


@loggify
class TFRReader:
    """
    Reads a TFR1 matrix file.
    The header is stored in self.header and the matrix in self.tfr.
    """

    def __init__(self, input_file: Union[Path, str], *args, **kwargs):
        self.file_path = Path(input_file)
        if not self.file_path.exists():
            raise FileNotFoundError("File does not exist: %s" % self.file_path)

        self.read_tfr_file()
        self.process_tfr_file()

    def read_tfr_file(self):
        self.logger.debug("Reading file: %s" % self.file_path)
        with open(self.file_path, "rb") as tfr_file:
            self.tfr_file = tfr_file.read()
            self.logger.info("[%s] Read bytes: %s" % (self.file_path, len(self.tfr_file)))

    def process_tfr_file(self):
        """Parses the header, then maps the row-major payload onto a TFMatrix."""
        self.header = TFRHeader(self.tfr_file[: header_size(HEADER_TFR1)], logger=self.logger)
        self.logger.debug("Header: %s" % self.header)

        payload = self.tfr_file[self.header.size :]
        if len(payload) != self.header.payload_size:
            raise UnknownFormatError(
                "[%s] Payload is %d bytes, header declares %d"
                % (self.file_path, len(payload), self.header.payload_size)
            )
        values = np.frombuffer(payload, dtype=self.header.payload_dtype)
        values = values.reshape(self.header.n_frames, self.header.n_bins)
        self.tfr = TFMatrix(values, window_ref=WindowRef(self.header.sigma), **self.header.axes())


@loggify
class CSVSignalReader:
    """
    Reads a signal from CSV: (time, value) columns for real signals, (time, re, im) for complex ones.
    Lines starting with '#' and a single textual header line are skipped.
    The sample rate is taken from the time column, which must be uniform.
    """

    def __init__(self, input_file: Union[Path, str], *args, **kwargs):
        self.file_path = Path(input_file)
        if not self.file_path.exists():
            raise FileNotFoundError("File does not exist: %s" % self.file_path)

        self.signal = self.read_signal()

    def _load(self) -> np.ndarray:
        try:
            return np.loadtxt(self.file_path, delimiter=",", comments="#", ndmin=2)
        except ValueError:
            self.logger.debug("Skipping header line of: %s" % self.file_path)
            return np.loadtxt(self.file_path, delimiter=",", comments="#", ndmin=2, skiprows=1)

    def read_signal(self) -> SampledSignal:
        data = self._load()
        if data.shape[1] not in (2, 3) or data.shape[0] < 2:
            raise UnknownFormatError(
                "[%s] Expected at least 2 rows of (time, value) or (time, re, im), got shape: %s"
                % (self.file_path, data.shape)
            )

        steps = np.diff(data[:, 0])
        step = float(np.median(steps))
        if not step > 0 or not np.allclose(steps, step, rtol=1e-6, atol=0):
            raise UnknownFormatError("[%s] Time column is not uniformly increasing" % self.file_path)

        samples = data[:, 1] if data.shape[1] == 2 else data[:, 1] + 1j * data[:, 2]
        signal = SampledSignal(samples, 1 / step, data[0, 0])
        self.logger.info("[%s] Read %d samples at %.6g Hz" % (self.file_path, len(signal), signal.sample_rate_hz))
        return signal
