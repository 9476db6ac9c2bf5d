"""TF matrix file header definitions, field name to struct format, little-endian."""

HEADER_TFR1 = {
    "magic": "4s",
    "n_frames": "Q",
    "n_bins": "Q",
    "dtype": "B",
    "kind": "B",
    "reserved": "H",
    "t0": "d",
    "dt": "d",
    "f0": "d",
    "df": "d",
    "sample_rate": "d",
    "sigma": "d",
}

DTYPES = {1: "<f8", 2: "<c16"}
