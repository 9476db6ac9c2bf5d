"""Synthetic test signals: single modes, the two-mode benchmark and a chirp/ring-down surrogate."""

import numpy as np

from pyfsst.errors import InvalidModeError

from .containers import IdealTF, ModeSpec, SampledSignal


def synthesize(mode: ModeSpec, n: int, fs: float, t0: float = 0.0, *args, **kwargs) -> SampledSignal:
    """Evaluates A(t) exp(i 2 pi phi(t)) on the grid t0 + j / fs, j < n."""
    t = t0 + np.arange(n) / fs
    amplitude = np.asarray(mode.amplitude(t), dtype=float)
    if np.any(amplitude <= 0):
        raise InvalidModeError("[%s] Amplitude must be positive on [%s, %s]" % (mode.label, t[0], t[-1]))
    if np.any(np.asarray(mode.inst_freq(t)) <= 0):
        raise InvalidModeError("[%s] Phase must be increasing on [%s, %s]" % (mode.label, t[0], t[-1]))

    if logger := kwargs.get("logger"):
        logger.debug("[%s] Synthesized %d samples at %s Hz" % (mode.label, n, fs))
    return SampledSignal(amplitude * np.exp(2j * np.pi * np.asarray(mode.phase(t), dtype=float)), fs, t0)


def _f2_phase(t):
    u = t - 0.2
    return 340 * t - 2 * np.exp(-2 * u) * np.sin(14 * np.pi * u)


def _f2_inst_freq(t):
    u = t - 0.2
    decay = np.exp(-2 * u)
    return 340 + 4 * decay * np.sin(14 * np.pi * u) - 28 * np.pi * decay * np.cos(14 * np.pi * u)


# log A1 = 2(1 - t)^3 + t^4, phi1 = 50t + 30t^3 - 20(1 - t)^4, both expanded in ascending powers
BENCHMARK_F1 = ModeSpec.from_polynomials([2, -6, 6, -2, 1], [-20, 130, -120, 110, -20], label="f1")
BENCHMARK_F2 = ModeSpec(
    amplitude=lambda t: 1 + 5 * t**2 + 7 * (1 - t) ** 6,
    phase=_f2_phase,
    inst_freq=_f2_inst_freq,
    label="f2",
)


def make_benchmark_signal(fs: float = 1024, n: int = 1024, *args, **kwargs):
    """
    Two-mode benchmark on [0, n / fs): a quartic polynomial chirp and a damped-sine FM mode.
    Returns (f1, f2, f, IdealTF).
    """
    f1 = synthesize(BENCHMARK_F1, n, fs, *args, **kwargs)
    f2 = synthesize(BENCHMARK_F2, n, fs, *args, **kwargs)
    t = f1.times
    ideal = IdealTF(
        t,
        [BENCHMARK_F1.inst_freq(t), BENCHMARK_F2.inst_freq(t)],
        [BENCHMARK_F1.amplitude(t), BENCHMARK_F2.amplitude(t)],
        ("f1", "f2"),
    )
    return f1, f2, f1 + f2, ideal


def _surrogate_mode(t_merge: float, f_start: float, f_peak: float, f_ring: float, tau: float) -> ModeSpec:
    """
    Chirp-up then ring-down mode.
    Before t_merge the IF rises as a quartic from f_start to f_peak,
    after it relaxes exponentially towards f_ring while the amplitude decays.
    """
    rise = f_peak - f_start
    drop = f_peak - f_ring

    def inst_freq(t):
        t = np.asarray(t, dtype=float)
        u = np.clip(t - t_merge, 0, None)
        chirp = f_start + rise * (np.minimum(t, t_merge) / t_merge) ** 4
        return np.where(t <= t_merge, chirp, f_peak - drop * (1 - np.exp(-u / tau)))

    def phase(t):
        t = np.asarray(t, dtype=float)
        s = np.minimum(t, t_merge)
        u = np.clip(t - t_merge, 0, None)
        chirp = f_start * s + rise * s**5 / (5 * t_merge**4)
        ring = f_peak * u - drop * (u - tau * (1 - np.exp(-u / tau)))
        return chirp + ring

    def amplitude(t):
        t = np.asarray(t, dtype=float)
        u = np.clip(t - t_merge, 0, None)
        return np.where(t <= t_merge, 0.2 + 0.8 * (t / t_merge) ** 2, np.exp(-u / (2 * tau)))

    return ModeSpec(amplitude=amplitude, phase=phase, inst_freq=inst_freq, label="surrogate")


def surrogate_chirp(fs: float = 2048, duration: float = 0.21, *args, **kwargs):
    """
    Gravitational-wave surrogate: an analytic chirp sweeping up to a merger, followed by a ring-down.
    Returns (signal, IdealTF), unpadded.
    """
    mode = _surrogate_mode(t_merge=0.15, f_start=40.0, f_peak=260.0, f_ring=200.0, tau=0.012)
    n = int(round(duration * fs))
    sig = synthesize(mode, n, fs, *args, **kwargs)
    t = sig.times
    return sig, IdealTF(t, mode.inst_freq(t), mode.amplitude(t), ("surrogate",))
