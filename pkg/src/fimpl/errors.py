class InvalidArgument(ValueError):
    """Raised when an operator factory or evaluator receives bad input."""


class InvalidChain(InvalidArgument):
    """A chain component failed boundary or monotonicity validation.

    ``witness`` is the sample ``t`` (or pair of samples) where the failure
    was observed, ``component`` the zero-based index of the offending map.
    """

    def __init__(self, message, component=None, witness=None):
        super().__init__(message)
        self.component = component
        self.witness = witness
