"""Exception hierarchy shared by the library and the command line"""


class GrassCodesError(Exception):
    """Base class; exit_code is the status the CLI exits with"""
    exit_code = 5


class InvalidParameterError(GrassCodesError, ValueError):
    exit_code = 5


class InvalidModulusError(InvalidParameterError):
    pass


class InvalidPrimePowerError(InvalidParameterError):
    pass


class FieldMismatchError(InvalidParameterError):
    pass


class ZeroDivisionInFieldError(InvalidParameterError, ZeroDivisionError):
    pass


class ShapeMismatchError(InvalidParameterError):
    pass


class AmbientMismatchError(InvalidParameterError):
    pass


class EmptyCodeError(InvalidParameterError):
    pass


class NotIdempotentError(InvalidParameterError):
    pass


class ZeroGeneratorError(InvalidParameterError):
    pass


class BudgetExceededError(GrassCodesError):
    exit_code = 4

    def __init__(self, what, size, budget, env_var):
        self.what = what
        self.size = size
        self.budget = budget
        self.env_var = env_var
        super().__init__(
            f'{what} needs {size} items, over the enumeration budget of {budget} '
            f'(override with {env_var})'
        )


class CodeFileError(GrassCodesError):
    exit_code = 3

    def __init__(self, message, line_no=None):
        self.line_no = line_no
        if line_no is not None:
            message = f'line {line_no}: {message}'
        super().__init__(message)


class TheoremViolationError(GrassCodesError):
    exit_code = 1
