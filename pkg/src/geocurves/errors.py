"""Exception hierarchy.

``InputError`` subclasses describe bad user input (CLI exit code 2);
``InternalInconsistency`` flags a broken invariant inside the library
(CLI exit code 1).
"""


class GeocurvesError(Exception):
    pass


class InputError(GeocurvesError, ValueError):
    pass


class InternalInconsistency(GeocurvesError, RuntimeError):
    pass


# arith
class ZeroInput(InputError):
    pass


class ZeroArgument(InputError):
    pass


class ZeroModulus(InputError):
    pass


class BoundExceeded(InputError):
    pass


class NotOddPrime(InputError):
    pass


class NotPrime(InputError):
    pass


class OracleBoundExceeded(InputError):
    pass


# qfields
class NotSquarefree(InputError):
    pass


class DegenerateRadicand(InputError):
    pass


# quatalg
class OddRamification(InputError):
    pass


class SearchBoundExceeded(InputError):
    pass


class SymbolMismatch(InputError):
    pass


class BasisMismatch(InputError):
    pass


# hilbert_surface
class PlaceInconsistentWithSplitting(InputError):
    pass


class NotTotallyReal(InputError):
    pass


class InfiniteRamification(InputError):
    pass


class NotAdmissible(InputError):
    pass


# picard_surface
class NotImaginary(InputError):
    pass


class UnsupportedDeskScale(InputError):
    pass


class NotRepresentable(InternalInconsistency):
    pass


# hermitian
class FieldMismatch(InputError):
    pass


class PreconditionViolation(InputError):
    pass


class NotTotallyPositive(InputError):
    pass
