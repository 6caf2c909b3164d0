"""Shared error types.

InputError means the caller handed us something invalid (CLI exit code 1).
ConsistencyError means an internal invariant failed, i.e. a bug or a broken
convention, never a user mistake (CLI exit code 2).
"""


class InputError(ValueError):
    pass


class ConsistencyError(RuntimeError):
    pass
