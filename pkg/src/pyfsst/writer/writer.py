from io import BytesIO
from os import fsync
from pathlib import Path

import numpy as np
from zenlib.logging import loggify
from zenlib.util import colorize

from pyfsst.header import TFRHeader
from pyfsst.signal import SampledSignal
from pyfsst.stft import TFMatrix


class FileWriter:
    """Writes bytes(self) to self.output_file."""

    def write(self, safe_write=True):
        self.logger.debug("Writing to: %s" % self.output_file)
        data = bytes(self)
        self.output_file.parent.mkdir(parents=True, exist_ok=True)
        with open(self.output_file, "wb") as f:
            f.write(data)
            if safe_write:
                f.flush()
                fsync(f.fileno())
            else:
                self.logger.warning("File not fsynced, data may not be written to disk: %s" % self.output_file)

        self.logger.info("Wrote %.2f MiB to: %s" % (len(data) / (2**20), colorize(self.output_file, "green")))
        return self.output_file


@loggify
class TFRWriter(FileWriter):
    """
    Writes a TF matrix as a TFR1 file: header, then the row-major payload.
    complex_values=False stores magnitudes for complex matrices.
    """

    def __init__(self, tfr: TFMatrix, output_file: Path, complex_values: bool | None = None, *args, **kwargs):
        self.tfr = tfr
        self.output_file = Path(output_file)
        self.complex_values = tfr.is_complex if complex_values is None else complex_values and tfr.is_complex

    def __bytes__(self):
        header = TFRHeader(tfr=self.tfr, complex_values=self.complex_values, logger=self.logger)
        self.logger.debug("Built header: %s" % header)
        values = self.tfr.values if self.complex_values else np.abs(self.tfr.values)
        return bytes(header) + np.ascontiguousarray(values, dtype=header.payload_dtype).tobytes()


@loggify
class CSVWriter(FileWriter):
    """Writes named columns as CSV with a commented header line."""

    def __init__(self, columns: dict, output_file: Path, *args, **kwargs):
        self.columns = {name: np.asarray(values) for name, values in columns.items()}
        self.output_file = Path(output_file)
        lengths = {values.shape[0] for values in self.columns.values()}
        if len(lengths) != 1:
            raise ValueError("CSV columns must share one length, got: %s" % lengths)

    @classmethod
    def from_signal(cls, sig: SampledSignal, output_file: Path, *args, **kwargs) -> "CSVWriter":
        """(time, value) for real signals, (time, re, im) for complex ones."""
        if sig.is_real:
            columns = {"time": sig.times, "value": sig.samples}
        else:
            columns = {"time": sig.times, "re": sig.samples.real, "im": sig.samples.imag}
        return cls(columns, output_file, *args, **kwargs)

    @classmethod
    def from_tfr(cls, tfr: TFMatrix, output_file: Path, *args, **kwargs) -> "CSVWriter":
        """One row per frame: time, then the magnitude at every bin."""
        columns = {"time": tfr.frame_times}
        magnitude = tfr.magnitude()
        for j, freq in enumerate(tfr.bin_freqs):
            columns["%.6g" % freq] = magnitude[:, j]
        return cls(columns, output_file, *args, **kwargs)

    def __bytes__(self):
        columns = list(self.columns.values())
        table = np.empty((columns[0].shape[0], len(columns)), dtype=object)
        for j, values in enumerate(columns):
            table[:, j] = values
        buffer = BytesIO()
        np.savetxt(
            buffer,
            table,
            fmt=[_column_format(values) for values in columns],
            delimiter=",",
            header=",".join(self.columns),
            comments="# ",
            encoding="ascii",
        )
        return buffer.getvalue()


def _column_format(values: np.ndarray) -> str:
    """Round-trip precision for floats, plain text for everything else."""
    match values.dtype.kind:
        case "f":
            return "%.17g"
        case "i" | "u":
            return "%d"
        case _:
            return "%s"
