"""Exception hierarchy shared by every module of the engine."""


class CochoiceError(Exception):
    """Base class for all engine errors."""


class ParseError(CochoiceError, ValueError):
    """Malformed textual or JSON input."""


class DimensionMismatch(CochoiceError, ValueError):
    """Gambles of different lengths were combined."""


class MalformedProgram(CochoiceError, ValueError):
    pass


class IncoherentGenerators(CochoiceError):
    """A query that needs a coherent set of desirable gambles got an incoherent one."""


class InconsistentAssessment(CochoiceError):
    """The assessment has no coherent extension, so its natural extension is undefined."""


class SelectionCapExceeded(CochoiceError):
    """Enumerating selections would exceed the configured limit."""

    def __init__(self, count, cap):
        super().__init__(f"assessment has {count} selections, cap is {cap}")
        self.count = count
        self.cap = cap


class CertificateError(CochoiceError):
    """A certificate or the evidence used to build one is defective.

    ``reason`` is a short stable code such as ``"missing tuple"``.
    """

    def __init__(self, reason, detail=""):
        super().__init__(f"{reason}: {detail}" if detail else reason)
        self.reason = reason
        self.detail = detail
