from .concentration import normalized_energy_axis, normalized_energy_curve, optimize_sigma, renyi_entropy
from .emd import emd_per_mode, emd_to_ideal
from .report import EvalReport

__all__ = [
    "renyi_entropy",
    "optimize_sigma",
    "normalized_energy_curve",
    "normalized_energy_axis",
    "emd_to_ideal",
    "emd_per_mode",
    "EvalReport",
]
