from struct import pack, unpack

from zenlib.logging import loggify

from pyfsst.errors import UnknownFormatError
from pyfsst.stft import TFKind, TFMatrix

from .header_funcs import get_dtype, get_dtype_code, get_header_from_magic, header_size, struct_format
from .headers import HEADER_TFR1


@loggify
class TFRHeader:
    """TF matrix file header, can be initialized from header bytes or from a TFMatrix."""

    def __init__(self, header_data=b"", tfr: TFMatrix | None = None, *args, **kwargs):
        if header_data:
            self.from_bytes(header_data)
        elif tfr is not None:
            self.from_tfr(tfr, kwargs.pop("complex_values", tfr.is_complex))
        else:
            raise NotImplementedError("TFRHeader must be initialized with header data or a TF matrix")

    def from_tfr(self, tfr: TFMatrix, complex_values: bool) -> None:
        self.structure = HEADER_TFR1
        self.magic = b"TFR1"
        self.n_frames, self.n_bins = tfr.shape
        self.dtype = get_dtype_code(complex_values)
        self.kind = tfr.kind.value
        self.reserved = 0
        self.t0, self.dt, self.f0, self.df = tfr.t0, tfr.dt, tfr.f0, tfr.df
        self.sample_rate = tfr.sample_rate_hz
        self.sigma = tfr.window_ref.sigma
        self.logger.debug("Created header for: %s" % tfr.describe())

    def from_bytes(self, data: bytes) -> None:
        self.structure = get_header_from_magic(data[:4])
        if len(data) < header_size(self.structure):
            raise UnknownFormatError(
                "Header must be %d bytes, got length: %d" % (header_size(self.structure), len(data))
            )
        values = unpack(struct_format(self.structure), data[: header_size(self.structure)])
        for name, value in zip(self.structure, values):
            setattr(self, name, value)
            self.logger.log(5, "Parsed %s: %s" % (name, value))
        get_dtype(self.dtype)
        if self.kind not in {kind.value for kind in TFKind}:
            raise UnknownFormatError("Unknown TF kind tag: %s" % self.kind)

    @property
    def size(self) -> int:
        return header_size(self.structure)

    @property
    def payload_dtype(self) -> str:
        return get_dtype(self.dtype)

    @property
    def payload_size(self) -> int:
        return self.n_frames * self.n_bins * (16 if self.dtype == 2 else 8)

    def axes(self) -> dict:
        """Keyword arguments describing the matrix axes."""
        return {
            "t0": self.t0,
            "dt": self.dt,
            "f0": self.f0,
            "df": self.df,
            "kind": TFKind(self.kind),
            "sample_rate_hz": self.sample_rate,
        }

    def __bytes__(self):
        return pack(struct_format(self.structure), *(getattr(self, name) for name in self.structure))

    def __str__(self):
        return "%s %dx%d %s (%s) t0=%s dt=%s f0=%s df=%s fs=%s sigma=%s" % (
            self.magic.decode("ascii"),
            self.n_frames,
            self.n_bins,
            TFKind(self.kind).name,
            "complex128" if self.dtype == 2 else "float64",
            self.t0,
            self.dt,
            self.f0,
            self.df,
            self.sample_rate,
            self.sigma,
        )
