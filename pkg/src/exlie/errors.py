"""Exception types shared across the package."""


class ExLieError(Exception):
    """Base class for every error raised on purpose by this package."""


class Inconsistent(ExLieError):
    """A linear system has no exact solution."""


class NonSquare(ExLieError):
    pass


class InternalMismatch(ExLieError):
    """Independent computations of the same quantity disagree."""


class NotOrthogonal(ExLieError):
    pass


class NotSkew(ExLieError):
    pass


class NotTraceless(ExLieError):
    pass


class NotInE6(ExLieError):
    pass


class NotInE7(ExLieError):
    pass


class NotSp3(ExLieError):
    pass


class NotSU3CC(ExLieError):
    pass


class NotNilpotent(ExLieError):
    pass


class NonGenericCartanElement(ExLieError):
    pass


class NonSplitSpectrum(ExLieError):
    pass


class DegenerateCartanForm(ExLieError):
    pass


class UnpairedRoot(ExLieError):
    pass


class NotCrystallographic(ExLieError):
    pass


class UnknownType(ExLieError):
    pass
