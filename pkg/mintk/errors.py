class InvalidScalarError(Exception):
    pass


class FieldMismatchError(Exception):
    pass


class ArityMismatchError(Exception):
    pass


class CharTwoError(Exception):
    pass


class NonHomogeneousError(Exception):
    pass


class NotArtinianError(Exception):
    pass


class CapTooLowError(Exception):
    '''
    Raised when a degree cap is too low for the requested certainty.
    The smallest cap that would have been sufficient is kept in `suggested_cap`.
    '''

    def __init__(self, message, suggested_cap=None):
        super().__init__(message)
        self.suggested_cap = suggested_cap


class NotAComplexError(Exception):
    '''
    Raised when the composition of two consecutive differentials is not zero.
    `position` is the homological position of the first map and `entry` the (row, column) of the offending entry.
    '''

    def __init__(self, message, position=None, entry=None):
        super().__init__(message)
        self.position = position
        self.entry = entry


class RankMismatchError(Exception):
    pass


class BadEmbeddingError(Exception):
    pass


class NameClashError(Exception):
    pass


class NotMinimalError(Exception):
    pass


class DepthTooLowError(Exception):
    pass


class HypothesisViolatedError(Exception):
    pass


class InvalidUnitError(Exception):
    pass


class TrackingLostError(Exception):
    pass


class SpliceBrokenError(Exception):
    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class LiftBrokenError(Exception):
    pass


class SelfCheckError(Exception):
    pass


class ScenarioParseError(Exception):
    def __init__(self, message, line=None, column=None):
        if line is not None:
            message = 'line %i, column %i: %s' % (line, column or 0, message)
        super().__init__(message)
        self.line = line
        self.column = column
