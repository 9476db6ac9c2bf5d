from .reader import CSVSignalReader, TFRReader

__all__ = ["TFRReader", "CSVSignalReader"]
