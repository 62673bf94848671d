"""Exception hierarchy shared by the kernel and the CLI."""


class KCatError(Exception):
    """Base class for every error raised by kcat."""


class MalformedInput(KCatError):
    """Structurally broken data: dangling labels, wrong vector lengths, bad shapes."""


class ParseError(MalformedInput):
    def __init__(self, message, path=""):
        self.path = path
        super().__init__(f"{path}: {message}" if path else message)


class AxiomViolation(KCatError):
    """An algebraic axiom fails. ``report`` holds the full validation report."""

    def __init__(self, message, report=None, witness=None):
        super().__init__(message)
        self.report = report
        self.witness = witness


class InvalidPartition(KCatError):
    pass


class NotIdempotent(AxiomViolation):
    pass


class NotOrthogonal(AxiomViolation):
    pass


class NotComplete(AxiomViolation):
    pass


class EmptyIndexSet(KCatError):
    pass


class NotFreeAction(KCatError):
    def __init__(self, obj, element):
        self.obj = obj
        self.element = element
        super().__init__(f"group element {element!r} fixes object {obj!r}")


class NontrivialObjectAction(KCatError):
    pass


class FieldNotFinite(KCatError):
    pass


class DimTooLarge(KCatError):
    pass


class ActionAxiomViolation(AxiomViolation):
    pass


class InvalidContext(AxiomViolation):
    pass
