class OrbicountError(Exception):
    def __init__(self, code, desc=None, exit_code=1):
        super(OrbicountError, self).__init__(desc or code)
        self.code = code
        self.desc = desc
        self.exit_code = exit_code


class InvalidInput(OrbicountError):
    def __init__(self, desc=''):
        super(InvalidInput, self).__init__(
            code='invalid_input',
            desc=desc,
            exit_code=1)


class ParserError(InvalidInput):
    def __init__(self, key, desc):
        super(ParserError, self).__init__('Parameter `%s`: %s' % (key, desc))
        self.code = 'invalid_input'
        self.key = key
        self.reason = desc


class MissingDataError(ParserError):
    def __init__(self, key):
        super(MissingDataError, self).__init__(
            key=key,
            desc='missing')


class LimitExceeded(OrbicountError):
    def __init__(self, desc=''):
        super(LimitExceeded, self).__init__(
            code='limit_exceeded',
            desc=desc,
            exit_code=1)


class UnsupportedOperation(OrbicountError):
    def __init__(self, desc=''):
        super(UnsupportedOperation, self).__init__(
            code='unsupported_operation',
            desc=desc,
            exit_code=1)


class BudgetExceeded(OrbicountError):
    def __init__(self, stage, seconds=None, limit=None):
        if limit is not None:
            desc = 'Search budget exceeded during %s (limit %d)' % (stage, limit)
        else:
            desc = 'Time budget exceeded during %s' % stage
        if seconds is not None:
            desc += ' (budget %ss)' % seconds
        super(BudgetExceeded, self).__init__(
            code='budget_exceeded',
            desc=desc,
            exit_code=3)
        self.stage = stage


class InvariantViolation(OrbicountError):
    """Raised when an internal consistency check fails.

    Seeing one of these means there is a bug in a computation, not bad input.
    """
    def __init__(self, desc=''):
        super(InvariantViolation, self).__init__(
            code='invariant_violation',
            desc=desc,
            exit_code=2)
