from dataclasses import dataclass, field

import numpy as np

from pyfsst.errors import GridMismatchError, MissingFieldError
from pyfsst.signal import SampledSignal
from pyfsst.stft import Deriv, TFMatrix, WindowFamily, required_windows, stft_fields


@dataclass(frozen=True, eq=False)
class StftStack:
    """
    STFT fields V^{t^l g^(d)} of one signal sharing the same axes.
    fields maps (l, Deriv) to a TFMatrix.
    """

    fields: dict = field(repr=False)
    order: int
    sigma: float

    def __post_init__(self):
        first = self.reference
        for key, tfr in self.fields.items():
            if not tfr.same_axes(first):
                raise GridMismatchError("Field %s is not on the stack grid: %s" % (key, tfr.describe()))

    @property
    def reference(self) -> TFMatrix:
        """The plain window field V^g."""
        return self[0, Deriv.G]

    def __contains__(self, key) -> bool:
        return (key[0], Deriv(key[1])) in self.fields

    def __getitem__(self, key) -> TFMatrix:
        l, deriv = key
        try:
            return self.fields[(l, Deriv(deriv))]
        except KeyError:
            raise MissingFieldError("STFT field V^{t^%d g^(%d)} is not in the stack" % (l, deriv))

    def V(self, l: int, deriv: int = Deriv.G) -> np.ndarray:
        return self[l, deriv].values

    @property
    def eta(self) -> np.ndarray:
        return self.reference.bin_freqs

    @property
    def times(self) -> np.ndarray:
        return self.reference.frame_times

    @property
    def shape(self):
        return self.reference.shape

    @property
    def g0(self) -> float:
        return 1 / self.sigma


def build_stack(
    sig: SampledSignal,
    fam: WindowFamily,
    hop: int = 1,
    n_fft: int | None = None,
    n_bins: int | None = None,
    freqs=None,
    frames: slice | None = None,
    *args,
    **kwargs,
) -> StftStack:
    """
    Computes every field an order-N estimate needs, N being the family order.
    Extra windows held by the family (g'' for instance) are computed as well.
    """
    keys = required_windows(fam.order)
    keys += [key for key in fam.keys if key not in keys]
    fields = stft_fields(sig, fam, keys, hop, n_fft, n_bins, freqs, frames, *args, **kwargs)
    return StftStack(fields, fam.order, fam.sigma)
