"""Exception hierarchy shared by the library and the command line."""


class BiblioRankError(ValueError):
    """Base class for every error raised by bibliorank."""


class InputError(BiblioRankError):
    """The supplied data could not be turned into a valid distribution."""


class EmptyInput(InputError):
    def __init__(self, message="no citation counts supplied"):
        super().__init__(message)


class NegativeCount(InputError):
    def __init__(self, position, value=None):
        self.position = position
        self.value = value
        super().__init__(f"negative citation count {value} at {position}")


class ParseError(InputError):
    def __init__(self, line, content, reason="unparseable record"):
        self.line = line
        self.content = content
        super().__init__(f"line {line}: {reason}: {content!r}")


class DuplicateLevel(InputError):
    def __init__(self, u):
        self.u = u
        super().__init__(f"citation value {u} listed more than once")


class NonPositiveFrequency(InputError):
    def __init__(self, u, n=None):
        self.u = u
        super().__init__(f"frequency {n} for citation value {u} must be positive")


class UnknownDirective(InputError):
    def __init__(self, line, directive):
        self.line = line
        self.directive = directive
        super().__init__(f"line {line}: unknown scenario directive {directive!r}")


class DegenerateDistribution(BiblioRankError):
    """An indicator is undefined because its normalising rank is zero."""

    def __init__(self, indicators, reason):
        self.indicators = tuple(indicators)
        super().__init__(
            f"degenerate distribution ({reason}); "
            f"cannot compute {', '.join(self.indicators)}"
        )


class MutationError(BiblioRankError):
    """A mutation is not applicable to the distribution it targets."""


class UnknownLevel(MutationError):
    def __init__(self, u):
        self.u = u
        super().__init__(f"no papers with {u} citations")


class InsufficientPapers(MutationError):
    def __init__(self, u, k, available):
        self.u = u
        self.k = k
        self.available = available
        super().__init__(f"cannot take {k} papers from {u} citations (only {available})")


class EmptyResult(MutationError):
    def __init__(self):
        super().__init__("mutation would leave no papers")


class ScenarioStepError(BiblioRankError):
    """Wraps the error raised while executing one scenario step."""

    def __init__(self, step, cause):
        self.step = step
        self.cause = cause
        super().__init__(f"step {step}: {cause}")


class StructureMismatch(BiblioRankError):
    pass
