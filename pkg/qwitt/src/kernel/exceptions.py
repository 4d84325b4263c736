class QWittError(Exception):
    """Base exception for the qwitt kernel"""

    pass


class ZeroDivisorError(QWittError):
    """Division of a scalar by zero"""

    def __init__(self, message: str = "zero divisor"):
        super().__init__(message)


class PoleError(QWittError):
    """Specialization hits a root of the denominator"""

    def __init__(self, message: str = "pole"):
        super().__init__(message)


class NonzeroQError(QWittError):
    """The deformation parameter was specialized to zero"""

    def __init__(self, message: str = "q must be nonzero"):
        super().__init__(message)


class NotDivisibleError(QWittError):
    """Exact division left a nonzero remainder"""

    def __init__(self, message: str = "not divisible"):
        super().__init__(message)


class NotAPolynomialError(QWittError):
    """A Laurent polynomial with negative valuation was given where a polynomial is required"""

    def __init__(self, message: str = "not a polynomial"):
        super().__init__(message)


class GcdOfZerosError(QWittError):
    """gcd requested over zero inputs only"""

    def __init__(self, message: str = "gcd of zeros"):
        super().__init__(message)


class UnitImageError(QWittError):
    """Substitution would send the unit t to a non-unit"""

    def __init__(self, message: str = "unit must map to unit"):
        super().__init__(message)


class SigmaIsIdentityError(QWittError):
    """s = 1 together with q = 1"""

    def __init__(self, message: str = "sigma is identity"):
        super().__init__(message)


class GcdConventionViolated(QWittError):
    """Internal error: (id - sigma)(f) was not divisible by g"""

    def __init__(self, message: str = "gcd convention violated"):
        super().__init__(message)


class ContextMismatchError(QWittError):
    """Operands were built over different twist contexts"""

    def __init__(self, message: str = "context mismatch"):
        super().__init__(message)


class ClosedFormUndefinedError(QWittError):
    """T-integer closed form requested for s < 1"""

    def __init__(self, message: str = "closed form undefined for s<1"):
        super().__init__(message)


class NoFreePartError(QWittError):
    """Operation needs d >= 1"""

    def __init__(self, message: str = "no free part"):
        super().__init__(message)


class IndexRangeError(QWittError):
    """Basis index outside 0 <= n < d"""

    def __init__(self, message: str = "n must satisfy 0≤n<d"):
        super().__init__(message)


class NotInnerTwistError(QWittError):
    """Untwisting needs an inner twist"""

    def __init__(self, message: str = "not an inner twist"):
        super().__init__(message)


class ExprParseError(QWittError):
    """Syntax error in a coefficient expression"""

    def __init__(self, message: str, offset: int):
        self.offset = offset
        super().__init__(f"{message} at offset {offset}")


class ConfigError(QWittError):
    """Invalid run configuration (usage error)"""

    pass
