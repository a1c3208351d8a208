"""Exception hierarchy shared by all modules."""


class AlgebraError(Exception):
    """Base class for every error raised by skewprime."""


class InvalidWord(AlgebraError):
    pass


class InvalidInput(AlgebraError):
    pass


class ResourceLimit(AlgebraError):
    pass


class UnsupportedIdealClass(AlgebraError):
    pass


class UnsupportedPoint(AlgebraError):
    pass


class RelationViolation(AlgebraError):
    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness or {}


class NotPrime(AlgebraError):
    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness or {}


class NotAutomorphism(AlgebraError):
    pass


class ZeroModule(AlgebraError):
    pass


class SchemaError(AlgebraError):
    def __init__(self, message, pointer=""):
        super().__init__(message)
        self.pointer = pointer or None
