"""Exception hierarchy.

DomainError: a documented precondition of an operation was violated.
InputError: malformed external input (JSON schema, CLI arguments).
IntegrityError: an internal consistency check failed; indicates a bug.
"""


class ArrcompError(Exception):
    pass


class DomainError(ArrcompError):
    pass


class InputError(ArrcompError):
    pass


class IntegrityError(ArrcompError):
    pass
