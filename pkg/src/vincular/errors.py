"""Exception types raised across the toolkit."""


class VincularError(Exception):
    """Base class for all toolkit errors."""


class EnumerationCapError(VincularError):
    def __init__(self, n, cap):
        super().__init__(f"n={n} exceeds the enumeration cap of {cap}")
        self.n = n
        self.cap = cap


class PatternParseError(VincularError, ValueError):
    def __init__(self, text, position, reason):
        super().__init__(f"cannot parse pattern {text!r} at position {position}: {reason}")
        self.text = text
        self.position = position


class PermutationError(VincularError, ValueError):
    pass


class UnsatisfiableQueryError(VincularError):
    """A pattern must be contained r >= 1 times while also being avoided."""


class UnsupportedParameterError(VincularError, ValueError):
    pass


class RoutedToFitError(VincularError):
    """The family has no explicit recurrence; use ``fit_structure`` instead."""


class ShapeViolationError(VincularError):
    """Sample points beyond the interpolation set disagree with the fitted shape."""


class CapacityError(VincularError):
    pass


class AlgebraDomainError(VincularError, ValueError):
    pass


class NonIntegralError(VincularError, ArithmeticError):
    def __init__(self, index, value):
        super().__init__(f"non-integral value {value} at index {index}")
        self.index = index
        self.value = value


class FloorError(VincularError, ValueError):
    pass


class PhiDomainError(VincularError, ValueError):
    pass
