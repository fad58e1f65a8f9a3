class Tangle3Error(ValueError):
    """Base class for all errors raised by tangle3."""


class NotHermitian(Tangle3Error):
    pass


class NotPositive(Tangle3Error):
    pass


class InvalidTrace(Tangle3Error):
    pass


class NotNormalized(Tangle3Error):
    pass


class DimensionError(Tangle3Error):
    pass


class NearSingularMarginal(Tangle3Error):
    """A single-qubit marginal is (numerically) rank one.

    The normal-form iteration treats this as a trajectory whose trace
    collapses to zero.
    """


class UnphysicalCoordinates(Tangle3Error):
    pass


class NotGhzSymmetric(Tangle3Error):
    pass


class StatesCoincide(Tangle3Error):
    pass


class UnsupportedState(Tangle3Error):
    pass


class MissingLabels(Tangle3Error):
    def __init__(self, labels):
        self.labels = sorted(labels)
        super().__init__("missing Pauli labels: " + ", ".join(self.labels))


class ValueOutOfRange(Tangle3Error):
    pass


class InvalidOperator(Tangle3Error):
    pass
