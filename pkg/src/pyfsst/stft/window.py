from dataclasses import dataclass, field
from enum import IntEnum
from math import ceil

import numpy as np

from pyfsst.common import HALF_SUPPORT_MULT, frozen
from pyfsst.errors import InvalidOrderError, MissingFieldError, WindowTooLongError


class Deriv(IntEnum):
    """Derivative applied to the Gaussian before the time weight."""

    G = 0
    DG = 1
    DDG = 2


def gaussian(tau, sigma: float, deriv: Deriv = Deriv.G) -> np.ndarray:
    """L1-normalized Gaussian exp(-pi tau^2 / sigma^2) / sigma or one of its analytic derivatives."""
    tau = np.asarray(tau, dtype=float)
    g = np.exp(-np.pi * tau**2 / sigma**2) / sigma
    match Deriv(deriv):
        case Deriv.G:
            return g
        case Deriv.DG:
            return -2 * np.pi * tau / sigma**2 * g
        case Deriv.DDG:
            return ((2 * np.pi * tau / sigma**2) ** 2 - 2 * np.pi / sigma**2) * g


def required_windows(order: int) -> list[tuple[int, Deriv]]:
    """(l, deriv) pairs needed at an IF estimation order: t^l g for l <= 2N-2 and t^l g' for l <= N-1."""
    if order not in range(1, 5):
        raise InvalidOrderError("Order must be in 1..4, got: %s" % order)
    return [(l, Deriv.G) for l in range(2 * order - 1)] + [(l, Deriv.DG) for l in range(order)]


@dataclass(frozen=True, eq=False)
class WindowFamily:
    """
    Sampled Gaussian window family for one sigma.
    tau is the local time axis in seconds, centered so that tau[half_len] == 0.
    windows maps (l, deriv) to the samples of t^l g^(deriv)(t).
    """

    sigma: float
    sample_rate_hz: float
    order: int
    half_len: int
    tau: np.ndarray = field(repr=False)
    windows: dict = field(repr=False)

    @property
    def length(self) -> int:
        return 2 * self.half_len + 1

    @property
    def half_support(self) -> float:
        return self.half_len / self.sample_rate_hz

    @property
    def g0(self) -> float:
        """g(0), the reconstruction constant."""
        return 1 / self.sigma

    @property
    def keys(self) -> list:
        return list(self.windows)

    def __contains__(self, key) -> bool:
        return (key[0], Deriv(key[1])) in self.windows

    def __getitem__(self, key) -> np.ndarray:
        l, deriv = key
        try:
            return self.windows[(l, Deriv(deriv))]
        except KeyError:
            raise MissingFieldError("Window t^%d g^(%d) is not in the family for order %d" % (l, deriv, self.order))

    def __len__(self):
        return len(self.windows)

    def with_windows(self, keys) -> "WindowFamily":
        """Returns a family that also holds the given (l, deriv) windows."""
        windows = dict(self.windows)
        for l, deriv in keys:
            if (l, Deriv(deriv)) not in windows:
                windows[(l, Deriv(deriv))] = frozen(self.tau**l * gaussian(self.tau, self.sigma, deriv))
        return WindowFamily(self.sigma, self.sample_rate_hz, self.order, self.half_len, self.tau, windows)

    def check_signal_length(self, n_samples: int):
        if self.half_len >= n_samples:
            raise WindowTooLongError(
                "Window half length (%d samples, sigma=%s s) is not shorter than the signal (%d samples), "
                "zero-pad the input (--pad-pow2) or use a smaller sigma" % (self.half_len, self.sigma, n_samples)
            )


def build_window_family(
    sigma: float,
    fs: float,
    N: int = 1,
    half_support_mult: float = HALF_SUPPORT_MULT,
    n_samples: int | None = None,
    second_derivative: bool = False,
    *args,
    **kwargs,
) -> WindowFamily:
    """
    Samples the 3N-1 windows needed at order N from the analytic Gaussian and its derivative.
    second_derivative adds g'' for the time-derivative second order estimate.
    When n_samples is given, windows that do not fit in the signal raise WindowTooLongError.
    """
    if not sigma > 0:
        raise ValueError("Window sigma must be positive: %s" % sigma)
    keys = required_windows(N)
    if second_derivative:
        keys.append((0, Deriv.DDG))

    half_len = ceil(half_support_mult * sigma * fs)
    tau = frozen(np.arange(-half_len, half_len + 1) / fs)
    family = WindowFamily(float(sigma), float(fs), N, half_len, tau, {}).with_windows(keys)
    if n_samples is not None:
        family.check_signal_length(n_samples)

    if logger := kwargs.get("logger"):
        logger.debug("Built %d windows for order %d, sigma=%s s, length=%d" % (len(family), N, sigma, family.length))
    return family
