"""Error types shared across the engine.

Every error carries a stable ``code`` string. The expression evaluator
maps these onto user-facing diagnostics, so the codes are part of the
public surface and must not change casually.
"""


class QsetError(Exception):
    """Base class for all engine errors."""

    code = "Error"


class IllFormedIdentity(QsetError):
    """Identity applied to a micro-atom, where it is not a formula."""

    code = "IllFormedIdentity"


class CountExceedsUniverse(QsetError):
    """A class was asked to hold more members than the universe declares."""

    code = "CountExceedsUniverse"


class UnknownSpecies(QsetError):
    """Reference to a micro-atom species the universe does not declare."""

    code = "UnknownSpecies"


class UnknownLabel(QsetError):
    """Reference to a macro-atom label the universe does not declare."""

    code = "UnknownLabel"


class NoIndistinguishableElement(QsetError):
    """Strong difference found nothing indistinguishable from its operand."""

    code = "NoIndistinguishableElement"


class BetaExceedsQc(QsetError):
    """Requested sub-collection cardinal exceeds the quasi-cardinal."""

    code = "BetaExceedsQc"


class Overflow(QsetError):
    """Cardinal arithmetic left the supported machine range."""

    code = "Overflow"


class EvalTypeError(QsetError):
    """An operation received a value of the wrong kind."""

    code = "TypeError"


class UnboundVariable(QsetError):
    """A name was used without a prior ``let`` binding."""

    code = "UnboundVariable"


class QsetParseError(QsetError):
    """Surface-syntax error, with the source position that triggered it."""

    code = "ParseError"

    def __init__(self, message: str, line: int, col: int):
        super().__init__(message)
        self.line = line
        self.col = col


class UniverseFormatError(QsetError):
    """Malformed universe declaration file."""

    code = "UniverseFormat"

    def __init__(self, message: str, line: int | None = None):
        super().__init__(message)
        self.line = line
