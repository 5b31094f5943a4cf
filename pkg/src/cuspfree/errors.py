"""Exception hierarchy.

Every error carries a machine-readable ``code`` and the CLI exit status it
maps to: 1 for a mathematical expectation mismatch, 2 for bad input,
3 for an internal inconsistency.
"""

EXIT_MISMATCH = 1
EXIT_INPUT = 2
EXIT_INTERNAL = 3


class CuspfreeError(Exception):
    code = "Error"
    exit_status = EXIT_INTERNAL


# -- input errors ------------------------------------------------------------

class InputError(CuspfreeError, ValueError):
    code = "InputError"
    exit_status = EXIT_INPUT


class PolySyntaxError(InputError):
    code = "SyntaxError"


class NotHomogeneous(InputError):
    code = "NotHomogeneous"


class ZeroPolynomial(InputError):
    code = "ZeroPolynomial"


class DegreeTooSmall(InputError):
    code = "DegreeTooSmall"


class EvenDegree(InputError):
    code = "EvenDegree"


class NonReducedInput(InputError):
    code = "NonReducedInput"


class DimensionMismatch(InputError):
    code = "DimensionMismatch"


class QOutOfRange(InputError):
    code = "QOutOfRange"


class NotApplicable(InputError):
    code = "NotApplicable"


class CorpusParseError(InputError):
    code = "CorpusParseError"


# -- mathematical expectation failures ---------------------------------------

class ExpectationFailure(CuspfreeError):
    code = "ExpectationFailure"
    exit_status = EXIT_MISMATCH


class ExpectationMismatch(ExpectationFailure):
    code = "ExpectationMismatch"


class BoundViolated(ExpectationFailure):
    code = "BoundViolated"


class InequalityViolated(ExpectationFailure):
    code = "InequalityViolated"


# -- internal inconsistencies ------------------------------------------------

class InternalError(CuspfreeError):
    code = "InternalInconsistency"
    exit_status = EXIT_INTERNAL


class EulerCheckFailed(InternalError):
    code = "EulerCheckFailed"


class ProfileInconsistent(InternalError):
    code = "ProfileInconsistent"


class InternalInconsistency(InternalError):
    code = "InternalInconsistency"


class NonUniqueMaxPrimePower(InternalError):
    code = "NonUniqueMaxPrimePower"
