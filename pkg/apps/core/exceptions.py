"""
Error hierarchy shared by every app.

Each class carries the process exit status the CLI uses for it.
"""

EX_OK = 0
EX_INFINITE = 1
EX_INCONCLUSIVE = 2
EX_USAGE = 64
EX_DATAERR = 65


class RigidityError(Exception):
    """
    Base class for all domain errors.
    """

    exit_code = EX_DATAERR


class ScalarParseError(RigidityError, ValueError):
    exit_code = EX_USAGE


class MalformedInput(RigidityError, ValueError):
    exit_code = EX_USAGE


class FieldMismatch(RigidityError, TypeError):
    pass


class DivisionByZero(RigidityError, ZeroDivisionError):
    pass


class NotPrime(RigidityError, ValueError):
    pass


class NotIrreducible(RigidityError, ValueError):
    pass


class DimensionMismatch(RigidityError, ValueError):
    pass


class SingularMatrix(RigidityError, ValueError):
    pass


class DegreeOutOfRange(RigidityError, ValueError):
    pass


class NonIntegralCoefficient(RigidityError):
    """
    A characteristic polynomial coefficient that is not an integer.
    """

    def __init__(self, index, coefficient):
        self.index = index
        self.coefficient = coefficient
        super().__init__(f"coefficient of X^{index} is not integral: {coefficient}")


class NotUnitCircle(RigidityError):
    """
    A polynomial with a factor that is not cyclotomic.
    """

    def __init__(self, residual, factorization=()):
        self.residual = residual
        self.factorization = list(factorization)
        super().__init__(f"non-cyclotomic factor remains: {residual}")


class NotTorsion(RigidityError):
    def __init__(self, obstruction):
        self.obstruction = obstruction
        super().__init__(obstruction)


class TypeRotation(RigidityError):
    """
    Generators whose nu_det is not divisible by the dimension.

    The generated group maps onto a nontrivial subgroup of Z, so it cannot
    fix a vertex.
    """

    def __init__(self, nu_det_values, dimension):
        self.nu_det_values = list(nu_det_values)
        self.dimension = dimension
        super().__init__(
            f"generators rotate vertex types: nu_det = {self.nu_det_values}, "
            f"not all divisible by {dimension}"
        )


class OrderVerificationError(RigidityError):
    pass
