"""Exception hierarchy. Every error is a ``ValueError`` so callers can catch broadly."""


class WdcertError(ValueError):
    pass


class CoprimalityError(WdcertError):
    pass


class DomainError(WdcertError):
    pass


class UnsupportedSlope(WdcertError):
    pass


class EvaluationDisagreement(WdcertError):
    """The float and exact dimension evaluations disagree, or the float path is too noisy."""


class ShapeError(WdcertError):
    pass


class DepthError(WdcertError):
    pass


class InvalidFamily(WdcertError):
    pass


class ZeroCombination(WdcertError):
    pass
