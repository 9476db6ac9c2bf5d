from .containers import IdealTF, ModeSpec, SampledSignal
from .noise import add_noise, analytic, output_snr
from .synth import BENCHMARK_F1, BENCHMARK_F2, make_benchmark_signal, surrogate_chirp, synthesize

__all__ = [
    "SampledSignal",
    "ModeSpec",
    "IdealTF",
    "synthesize",
    "make_benchmark_signal",
    "surrogate_chirp",
    "BENCHMARK_F1",
    "BENCHMARK_F2",
    "add_noise",
    "analytic",
    "output_snr",
]
