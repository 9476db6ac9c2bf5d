from dataclasses import dataclass, field, replace
from enum import Enum

import numpy as np

from pyfsst.common import frozen
from pyfsst.errors import GridMismatchError


class TFKind(Enum):
    """What a time-frequency matrix holds, the value is the on-disk tag."""

    STFT = 1
    SQUEEZED = 2
    SPECTROGRAM = 3
    REASSIGNED = 4

    @property
    def holds_energy(self) -> bool:
        """Spectrogram kinds hold squared magnitudes."""
        return self in (TFKind.SPECTROGRAM, TFKind.REASSIGNED)


@dataclass(frozen=True)
class WindowRef:
    sigma: float = 0.0
    l: int = 0
    deriv: int = 0

    @property
    def g0(self) -> float:
        return 1 / self.sigma if self.sigma else 0.0


@dataclass(frozen=True, eq=False)
class TFMatrix:
    """
    Time-frequency matrix with uniform axes.
    values has shape (n_frames, n_bins); frame k is at t0 + k * dt, bin j at f0 + j * df.
    dropped counts estimates discarded while building it (squeezing, reassignment).
    """

    values: np.ndarray = field(repr=False)
    t0: float
    dt: float
    f0: float
    df: float
    kind: TFKind = TFKind.STFT
    sample_rate_hz: float = 0.0
    window_ref: WindowRef = WindowRef()
    dropped: int = 0

    def __post_init__(self):
        values = np.asarray(self.values)
        if values.ndim != 2:
            raise ValueError("TF values must be 2-D, got shape: %s" % (values.shape,))
        dtype = np.float64 if np.isrealobj(values) else np.complex128
        object.__setattr__(self, "values", frozen(values, dtype))
        object.__setattr__(self, "kind", TFKind(self.kind))
        for name in ("t0", "dt", "f0", "df", "sample_rate_hz"):
            object.__setattr__(self, name, float(getattr(self, name)))

    @property
    def shape(self):
        return self.values.shape

    @property
    def n_frames(self) -> int:
        return self.values.shape[0]

    @property
    def n_bins(self) -> int:
        return self.values.shape[1]

    @property
    def frame_times(self) -> np.ndarray:
        return self.t0 + self.dt * np.arange(self.n_frames)

    @property
    def bin_freqs(self) -> np.ndarray:
        return self.f0 + self.df * np.arange(self.n_bins)

    @property
    def is_complex(self) -> bool:
        return np.iscomplexobj(self.values)

    def magnitude(self) -> np.ndarray:
        return np.abs(self.values)

    def amplitude(self) -> np.ndarray:
        """Magnitudes on the amplitude scale: |values|, or the square root of energy kinds."""
        magnitude = self.magnitude()
        return np.sqrt(magnitude) if self.kind.holds_energy else magnitude

    def with_values(self, values, kind: TFKind | None = None, **changes) -> "TFMatrix":
        """Returns a matrix on the same axes holding new values."""
        if np.shape(values) != self.shape:
            raise GridMismatchError("Expected values of shape %s, got: %s" % (self.shape, np.shape(values)))
        return replace(self, values=values, kind=kind or self.kind, **changes)

    def same_axes(self, other) -> bool:
        return self.shape == other.shape and (self.t0, self.dt, self.f0, self.df) == (
            other.t0,
            other.dt,
            other.f0,
            other.df,
        )

    def check_axes(self, other):
        if not self.same_axes(other):
            raise GridMismatchError("TF grids differ: %s vs %s" % (self.describe(), other.describe()))

    def crop_bins(self, n_bins: int) -> "TFMatrix":
        """Keeps the first n_bins frequency bins."""
        return replace(self, values=self.values[:, :n_bins])

    def describe(self) -> str:
        return "%dx%d %s t0=%s dt=%s f0=%s df=%s" % (
            self.n_frames,
            self.n_bins,
            self.kind.name,
            self.t0,
            self.dt,
            self.f0,
            self.df,
        )

    @classmethod
    def concatenate(cls, blocks: list["TFMatrix"]) -> "TFMatrix":
        """Joins consecutive frame blocks computed on the same frequency grid."""
        first = blocks[0]
        return replace(
            first,
            values=np.concatenate([block.values for block in blocks], axis=0),
            dropped=sum(block.dropped for block in blocks),
        )
