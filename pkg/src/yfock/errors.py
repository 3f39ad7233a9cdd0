class YFockError(Exception):
    pass


class DomainError(YFockError, ValueError):
    """Input outside the domain of an operation (bad partition, bad index...)."""


class PoleError(DomainError, ZeroDivisionError):
    """A rational function was evaluated or specialised at one of its poles."""
