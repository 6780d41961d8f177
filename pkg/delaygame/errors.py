"""Exception hierarchy shared by the library and the CLI.

Every error carries the process exit code the CLI reports for it.
"""


class DelayGameError(Exception):
    """Base class for all delaygame errors."""

    exit_code = 1


class UsageError(DelayGameError):
    """Invalid command-line usage."""

    exit_code = 1


class InstanceError(DelayGameError, ValueError):
    """An automaton instance could not be read, parsed or validated."""

    exit_code = 2

    def __init__(self, message: str, *, location: str | None = None) -> None:
        self.location = location
        super().__init__(f'{location}: {message}' if location else message)


class InstanceSyntaxError(InstanceError):
    """The instance document is not well-formed JSON."""

    def __init__(self, message: str, *, line: int, column: int) -> None:
        self.line = line
        self.column = column
        super().__init__(message, location=f'line {line}, column {column}')


class InstanceValidationError(InstanceError):
    """The instance document is well-formed but describes an invalid automaton."""


class UnknownSymbolError(InstanceError):
    """A letter is not part of the automaton's alphabet."""


class ResourceLimitError(DelayGameError):
    """A configured budget was exhausted before the computation finished."""

    exit_code = 3

    def __init__(
        self,
        resource: str,
        limit: int,
        *,
        reached: int | None = None,
        k: int | None = None,
    ) -> None:
        self.resource = resource
        self.limit = limit
        self.reached = reached
        self.k = k
        parts = [f'{resource} limit of {limit} exceeded']
        if reached is not None:
            parts.append(f'reached {reached}')
        if k is not None:
            parts.append(f'at k={k}')
        super().__init__(', '.join(parts))

    def at_k(self, k: int) -> 'ResourceLimitError':
        """Return a copy of this error annotated with the lookahead being evaluated."""
        return ResourceLimitError(self.resource, self.limit, reached=self.reached, k=k)
