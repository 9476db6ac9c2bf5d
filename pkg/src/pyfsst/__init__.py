from .pyfsst import PyFSST, SignalBundle, TransformResult

__all__ = ["PyFSST", "SignalBundle", "TransformResult"]
