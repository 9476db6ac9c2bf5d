from .writer import CSVWriter, TFRWriter

__all__ = ["TFRWriter", "CSVWriter"]
