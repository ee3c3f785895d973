"""Exception hierarchy shared by the library and the CLI."""


class SrfrobError(Exception):
    pass


class ParseError(SrfrobError, ValueError):
    """Malformed ideal text."""


class PreconditionError(SrfrobError, ValueError):
    """Input outside an operation's domain (non-squarefree, zero ideal, ...)."""


class MismatchError(PreconditionError):
    """Operands of different kind or ambient dimension."""


class InvariantError(SrfrobError, RuntimeError):
    """A mathematical invariant that must hold did not. Always a bug."""
