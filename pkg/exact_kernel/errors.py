class ExactKernelError(RuntimeError):
    """Base class for failures inside the exact layer."""


class PolynomialDivisionError(ExactKernelError, ZeroDivisionError):
    pass


class InertSymbolError(ExactKernelError):
    def __init__(self, symbol: str):
        super().__init__(f"derivative of inert gauge symbol requested: {symbol}")
        self.symbol = symbol


class UndeclaredPoleError(ExactKernelError):
    def __init__(self, factor: str):
        super().__init__(f"denominator has a t-factor outside the declared poles: {factor}")
        self.factor = factor


class ZeroTestBudgetError(ExactKernelError):
    pass


class SingularLocusError(ExactKernelError, ValueError):
    def __init__(self, factor: str, detail: str = ""):
        message = f"singular locus: {factor} vanishes"
        if detail:
            message = f"{message} ({detail})"
        super().__init__(message)
        self.factor = factor


class IrregularSingularityError(ExactKernelError):
    pass


class ExponentError(ExactKernelError):
    pass


class FrobeniusError(ExactKernelError):
    pass


class ExpressionSyntaxError(ExactKernelError, ValueError):
    pass


class RewriteError(ExactKernelError):
    pass


class CertificationError(ExactKernelError):
    """An identity expected to hold exactly did not.

    `step` names the pipeline stage, `coefficient` the operator slot and
    `pole` the partial-fraction pole when the mismatch was found there.
    """

    def __init__(self, step: str, message: str, coefficient: str = "", pole: str = "", witness: str = ""):
        where = ", ".join(part for part in (coefficient and f"coefficient {coefficient}", pole and f"pole {pole}") if part)
        super().__init__(f"{step}: {message}" + (f" [{where}]" if where else ""))
        self.step = step
        self.coefficient = coefficient
        self.pole = pole
        self.witness = witness
