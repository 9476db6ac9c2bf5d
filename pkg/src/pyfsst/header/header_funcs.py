from struct import calcsize

from pyfsst.errors import UnknownFormatError

from .headers import DTYPES, HEADER_TFR1

lookup_table = {b"TFR1": HEADER_TFR1}


def get_header_from_magic(magic: bytes) -> dict:
    """Return the header structure for the given magic bytes."""
    for known_magic, header_type in lookup_table.items():
        if magic == known_magic:
            return header_type
    raise UnknownFormatError("Unknown magic bytes: %s" % magic)


def get_magic_from_header(header: dict) -> bytes:
    """Return the magic bytes for the given header structure."""
    for magic, header_type in lookup_table.items():
        if header_type == header:
            return magic
    raise UnknownFormatError("Unknown header type: %s" % header)


def struct_format(header: dict) -> str:
    return "<" + "".join(header.values())


def header_size(header: dict) -> int:
    return calcsize(struct_format(header))


def get_dtype(code: int) -> str:
    try:
        return DTYPES[code]
    except KeyError:
        raise UnknownFormatError("Unknown payload dtype code: %s" % code)


def get_dtype_code(is_complex: bool) -> int:
    return 2 if is_complex else 1
