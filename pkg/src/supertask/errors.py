"""Exception hierarchy shared by all modules.

The CLI maps :class:`InputError` to exit status 2 and :class:`DomainError`
to exit status 3.
"""


class SupertaskError(Exception):
    pass


class InputError(SupertaskError, ValueError):
    """Malformed input text (ordinal expressions, STS files, CLI values)."""


class DomainError(SupertaskError, ValueError):
    """Well-formed input outside an operation's domain."""
