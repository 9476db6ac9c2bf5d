from dataclasses import dataclass, field
from pathlib import Path

from pyfsst.common import DEFAULT_SIGMA_GRID, GAMMA_REL
from pyfsst.errors import UsageError

from .methods import Method
from .parsers import parse_float_list, parse_grid, parse_range

COMMANDS = ("transform", "reconstruct", "evaluate")
SIGNALS = ("benchmark", "surrogate")


@dataclass(frozen=True)
class RunConfig:
    """Validated settings of one CLI run."""

    command: str = "transform"
    method: Method = Method.FSST4
    methods: tuple = ()
    signal: str | None = None
    input: Path | None = None
    sigma: float | str = "auto"
    sigma_grid: tuple = DEFAULT_SIGMA_GRID
    gamma_rel: float = GAMMA_REL
    K: int | None = None
    d: int | None = None
    d_sweep: range | None = None
    jump: int = 3
    n_starts: int = 8
    snr: float | None = None
    snr_levels: tuple = (float("inf"),)
    seed: int = 0
    seeds: int = 1
    n_fft: int | None = None
    hop: int = 1
    fmax: float | None = None
    pad_pow2: bool = False
    complex_output: bool = False
    csv: bool = False
    renyi: bool = False
    energy: bool = False
    emd: bool = False
    output: Path = field(default_factory=lambda: Path("pyfsst_out"))

    @property
    def clear_halfwidth(self) -> int:
        return 2 * (self.d or 0) + 2

    @classmethod
    def from_kwargs(cls, kwargs: dict) -> "RunConfig":
        """Builds and validates a config from CLI keyword arguments, raising UsageError."""
        command = kwargs.get("command", "transform")
        if command not in COMMANDS:
            raise UsageError("Unknown command '%s', expected one of: %s" % (command, ", ".join(COMMANDS)))

        try:
            method = Method.from_str(kwargs.get("method", "fsst4"))
            names = str(kwargs.get("methods", "")).split(",")
            methods = tuple(Method.from_str(name) for name in names if name.strip())
        except ValueError as e:
            raise UsageError(e)
        if "methods" in kwargs and not methods:
            raise UsageError("Method list is empty")

        sigma = kwargs.get("sigma", "auto")
        if sigma != "auto":
            try:
                sigma = float(sigma)
            except ValueError:
                raise UsageError("Sigma must be a positive number or 'auto', got: %s" % sigma)
            if not sigma > 0:
                raise UsageError("Sigma must be positive: %s" % sigma)

        config = cls(
            command=command,
            method=method,
            methods=methods,
            signal=kwargs.get("signal"),
            input=Path(kwargs["input"]) if kwargs.get("input") else None,
            sigma=sigma,
            sigma_grid=parse_grid(kwargs["sigma_grid"]) if "sigma_grid" in kwargs else DEFAULT_SIGMA_GRID,
            gamma_rel=float(kwargs.get("gamma_rel", GAMMA_REL)),
            K=kwargs.get("K"),
            d=kwargs.get("d"),
            d_sweep=parse_range(kwargs["d_sweep"]) if "d_sweep" in kwargs else None,
            jump=kwargs.get("jump", 3),
            n_starts=kwargs.get("n_starts", 8),
            snr=kwargs.get("snr"),
            snr_levels=parse_float_list(kwargs["snr_levels"]) if "snr_levels" in kwargs else (float("inf"),),
            seed=kwargs.get("seed", 0),
            seeds=kwargs.get("seeds", 1),
            n_fft=kwargs.get("n_fft"),
            hop=kwargs.get("hop", 1),
            fmax=kwargs.get("fmax"),
            pad_pow2=bool(kwargs.get("pad_pow2", False)),
            complex_output=bool(kwargs.get("complex_output", False)),
            csv=bool(kwargs.get("csv", False)),
            renyi=bool(kwargs.get("renyi", False)),
            energy=bool(kwargs.get("energy", False)),
            emd=bool(kwargs.get("emd", False)),
            output=Path(kwargs.get("output", "pyfsst_out")),
        )
        config.validate()
        return config

    def validate(self):
        """Checks the per-command requirements before any computation."""
        if bool(self.signal) == bool(self.input):
            raise UsageError("Exactly one of --signal or --input is required")
        if self.signal and self.signal not in SIGNALS:
            raise UsageError("Unknown signal '%s', expected one of: %s" % (self.signal, ", ".join(SIGNALS)))
        if self.gamma_rel < 0:
            raise UsageError("Relative threshold must be nonnegative: %s" % self.gamma_rel)
        if self.hop < 1 or (self.n_fft is not None and self.n_fft < 1):
            raise UsageError("Hop and n_fft must be positive")
        if self.seeds < 1 or self.n_starts < 1 or self.jump < 0:
            raise UsageError("Seed count and ridge starts must be positive, jump nonnegative")
        if self.fmax is not None and not self.fmax > 0:
            raise UsageError("Maximum frequency must be positive: %s" % self.fmax)

        match self.command:
            case "transform":
                if self.complex_output and not self.method.squeezes and self.method is not Method.STFT:
                    raise UsageError("Method %s only produces magnitudes" % self.method.value)
            case "reconstruct":
                if self.K is None or self.K < 1:
                    raise UsageError("Reconstruction requires --K >= 1")
                if self.d is None and self.d_sweep is None:
                    raise UsageError("Reconstruction requires --d or --d-sweep")
                if self.d is not None and self.d < 0:
                    raise UsageError("Band halfwidth --d must be nonnegative: %s" % self.d)
                if not self.method.squeezes:
                    raise UsageError("Method %s does not allow mode reconstruction" % self.method.value)
            case "evaluate":
                if not (self.renyi or self.energy or self.emd):
                    raise UsageError("Evaluation requires at least one of --renyi, --energy, --emd")
                if (self.energy or self.emd) and not self.methods:
                    raise UsageError("Evaluation requires a nonempty --methods list")
                if self.emd and not self.signal:
                    raise UsageError("EMD needs a synthetic --signal with a known ideal representation")
