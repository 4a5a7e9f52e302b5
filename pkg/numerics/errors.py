class NumericsError(RuntimeError):
    """Base class for failures in the floating-point layer."""


class SingularInitialDataError(NumericsError, ValueError):
    def __init__(self, factor: str, detail: str = ""):
        message = f"initial data on the singular locus: {factor} vanishes"
        if detail:
            message = f"{message} ({detail})"
        super().__init__(message)
        self.factor = factor


class WaveTransportError(NumericsError):
    def __init__(self, message: str, node: float | None = None, x: float | None = None):
        super().__init__(message)
        self.node = node
        self.x = x


class NumericDomainError(NumericsError, ValueError):
    pass
