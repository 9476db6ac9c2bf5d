from dataclasses import dataclass
from typing import Callable

import numpy as np
from numpy.polynomial import Polynomial

from pyfsst.common import frozen, next_pow2
from pyfsst.errors import GridMismatchError, LengthMismatchError


@dataclass(frozen=True, eq=False)
class SampledSignal:
    """
    Uniformly sampled time series.
    samples may be complex or real, they are stored as a read-only copy.
    The time axis is t0 + n / sample_rate_hz.
    """

    samples: np.ndarray
    sample_rate_hz: float
    t0: float = 0.0

    def __post_init__(self):
        samples = np.asarray(self.samples)
        if samples.ndim != 1 or not samples.size:
            raise ValueError("Signal samples must be a nonempty 1-D sequence, got shape: %s" % (samples.shape,))
        if not self.sample_rate_hz > 0:
            raise ValueError("Sample rate must be positive: %s" % self.sample_rate_hz)
        dtype = np.float64 if np.isrealobj(samples) else np.complex128
        object.__setattr__(self, "samples", frozen(samples, dtype))
        object.__setattr__(self, "sample_rate_hz", float(self.sample_rate_hz))
        object.__setattr__(self, "t0", float(self.t0))

    def __len__(self):
        return self.samples.size

    @property
    def duration(self) -> float:
        return len(self) / self.sample_rate_hz

    @property
    def times(self) -> np.ndarray:
        return self.t0 + np.arange(len(self)) / self.sample_rate_hz

    @property
    def is_real(self) -> bool:
        return np.isrealobj(self.samples)

    def std(self) -> float:
        return float(np.std(self.samples))

    def with_samples(self, samples) -> "SampledSignal":
        """Returns a signal on the same grid with new samples."""
        if np.shape(samples) != self.samples.shape:
            raise LengthMismatchError("Expected %d samples, got: %s" % (len(self), np.shape(samples)))
        return SampledSignal(samples, self.sample_rate_hz, self.t0)

    def _check_grid(self, other: "SampledSignal"):
        if len(other) != len(self):
            raise LengthMismatchError("Signal lengths differ: %d != %d" % (len(self), len(other)))
        if other.sample_rate_hz != self.sample_rate_hz or other.t0 != self.t0:
            raise GridMismatchError("Signals are sampled on different grids")

    def __add__(self, other: "SampledSignal") -> "SampledSignal":
        self._check_grid(other)
        return self.with_samples(self.samples + other.samples)

    def __sub__(self, other: "SampledSignal") -> "SampledSignal":
        self._check_grid(other)
        return self.with_samples(self.samples - other.samples)

    def scaled(self, factor) -> "SampledSignal":
        return self.with_samples(self.samples * factor)

    def real_part(self) -> "SampledSignal":
        return self.with_samples(self.samples.real)

    def zero_padded(self, n_total: int) -> "SampledSignal":
        """Appends zeros up to n_total samples."""
        if n_total < len(self):
            raise ValueError("Cannot pad %d samples down to %d" % (len(self), n_total))
        return SampledSignal(np.pad(self.samples, (0, n_total - len(self))), self.sample_rate_hz, self.t0)

    def pad_pow2(self) -> "SampledSignal":
        return self.zero_padded(next_pow2(len(self)))

    def decimated(self, hop: int) -> "SampledSignal":
        """Keeps every hop-th sample, the frame grid of an STFT with that hop."""
        if hop < 1:
            raise ValueError("Hop must be a positive integer: %s" % hop)
        return SampledSignal(self.samples[::hop], self.sample_rate_hz / hop, self.t0)


@dataclass(frozen=True)
class ModeSpec:
    """
    An AM-FM mode A(t) exp(i 2 pi phi(t)).
    amplitude, phase and inst_freq are vectorized callbacks of time in seconds,
    inst_freq is the analytic derivative of phase (Hz).
    """

    amplitude: Callable[[np.ndarray], np.ndarray]
    phase: Callable[[np.ndarray], np.ndarray]
    inst_freq: Callable[[np.ndarray], np.ndarray]
    label: str = "mode"
    phase_poly: Polynomial | None = None
    log_amp_poly: Polynomial | None = None

    @classmethod
    def from_polynomials(cls, log_amp_coeffs, phase_coeffs, label="mode") -> "ModeSpec":
        """Builds a mode from ascending polynomial coefficients of log A(t) and phi(t)."""
        log_amp = Polynomial(log_amp_coeffs)
        phase = Polynomial(phase_coeffs)
        return cls(
            amplitude=lambda t: np.exp(log_amp(t)),
            phase=phase,
            inst_freq=phase.deriv(),
            label=label,
            phase_poly=phase,
            log_amp_poly=log_amp,
        )

    def phase_derivative(self, k: int, t) -> np.ndarray:
        """k-th derivative of the phase, only available for polynomial modes."""
        if self.phase_poly is None:
            raise NotImplementedError("[%s] Higher phase derivatives need a polynomial phase" % self.label)
        return self.phase_poly.deriv(k)(np.asarray(t, dtype=float))


@dataclass(frozen=True, eq=False)
class IdealTF:
    """
    Ideal TF representation: per mode IF and amplitude tracks on a time grid.
    inst_freqs and amplitudes have shape (n_modes, n_times).
    """

    times: np.ndarray
    inst_freqs: np.ndarray
    amplitudes: np.ndarray
    labels: tuple = ()

    def __post_init__(self):
        inst_freqs = np.atleast_2d(np.asarray(self.inst_freqs, dtype=float))
        amplitudes = np.atleast_2d(np.asarray(self.amplitudes, dtype=float))
        times = np.asarray(self.times, dtype=float)
        if inst_freqs.shape != amplitudes.shape or inst_freqs.shape[1] != times.size:
            raise LengthMismatchError(
                "Ideal tracks must share the time grid: %s, %s, %d" % (inst_freqs.shape, amplitudes.shape, times.size)
            )
        object.__setattr__(self, "times", frozen(times))
        object.__setattr__(self, "inst_freqs", frozen(inst_freqs))
        object.__setattr__(self, "amplitudes", frozen(amplitudes))
        labels = tuple(self.labels) or tuple("f%d" % (k + 1) for k in range(inst_freqs.shape[0]))
        object.__setattr__(self, "labels", labels)

    @property
    def n_modes(self) -> int:
        return self.inst_freqs.shape[0]

    def mode(self, k: int) -> "IdealTF":
        return IdealTF(self.times, self.inst_freqs[k], self.amplitudes[k], (self.labels[k],))

    def decimated(self, hop: int) -> "IdealTF":
        """Tracks sampled on the frames of an STFT with that hop."""
        if hop < 1:
            raise ValueError("Hop must be a positive integer: %s" % hop)
        return IdealTF(self.times[::hop], self.inst_freqs[:, ::hop], self.amplitudes[:, ::hop], self.labels)

    def min_separation(self) -> float:
        """Smallest IF distance between adjacent modes over time, inf for one mode."""
        if self.n_modes < 2:
            return np.inf
        ordered = np.sort(self.inst_freqs, axis=0)
        return float(np.min(np.diff(ordered, axis=0)))

    def zero_padded(self, n_total: int, sample_rate_hz: float) -> "IdealTF":
        """Extends the tracks with zero amplitude up to n_total samples."""
        pad = n_total - self.times.size
        times = self.times[0] + np.arange(n_total) / sample_rate_hz
        return IdealTF(
            times,
            np.pad(self.inst_freqs, ((0, 0), (0, pad)), mode="edge"),
            np.pad(self.amplitudes, ((0, 0), (0, pad))),
            self.labels,
        )
