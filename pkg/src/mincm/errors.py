"""Exception types shared across the package."""


class MincmError(Exception):
    """Base class for all package errors."""


class MalformedInput(MincmError):
    """Input violates a format or construction contract."""


class ParseError(MalformedInput):
    """Text or JSON input could not be parsed; carries a location when known."""

    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        loc = ""
        if line is not None:
            loc = f" (line {line}" + (f", column {column}" if column is not None else "") + ")"
        super().__init__(message + loc)


class FaceNotInComplex(MincmError):
    """A queried face is not a face of the complex."""


class NotAFacet(MincmError):
    """The given face is not a maximal face of the complex."""


class NotPure(MincmError):
    """Operation requires a pure complex."""


class NotCohenMacaulay(MincmError):
    """Operation requires a Cohen-Macaulay input."""


class DegenerateIdeal(MincmError):
    """The unit or zero ideal was passed to a resolution query."""


class CertificateInapplicable(MincmError):
    """Hypotheses of a certificate-producing criterion do not hold."""


class UnknownCatalogName(MincmError):
    """Name not present in the catalog."""


class DataNotBundled(MincmError):
    """A reserved catalog name whose facet data is not shipped."""
