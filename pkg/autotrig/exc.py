class GTrigException(Exception):
    pass


class DomainException(GTrigException):
    pass


class ConvergenceException(GTrigException):
    pass


class SingularPointException(GTrigException):
    pass


class RegimeException(GTrigException):
    pass
