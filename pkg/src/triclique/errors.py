"""Exception hierarchy shared by the library and the command line."""


class TricliqueError(Exception):
    """Base class for all errors raised by this package."""


class InputError(TricliqueError, ValueError):
    """Malformed input: unknown entity, non-triset argument, bad file."""


class ResourceError(TricliqueError, RuntimeError):
    """An exhaustive search was refused because the input exceeds the size cap."""


class ContractError(TricliqueError, RuntimeError):
    """A caller-supplied operator broke its contract (e.g. closure left the family)."""
