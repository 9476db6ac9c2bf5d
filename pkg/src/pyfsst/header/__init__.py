from .header_funcs import get_header_from_magic, get_magic_from_header, header_size
from .headers import HEADER_TFR1
from .tfrheader import TFRHeader

__all__ = ["TFRHeader", "get_header_from_magic", "get_magic_from_header", "header_size", "HEADER_TFR1"]
