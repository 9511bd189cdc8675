"""Exception hierarchy for homcalc."""


class HomcalcError(Exception):
    """Base class for all homcalc errors."""


class DimensionMismatch(HomcalcError):
    pass


class AlgebraMismatch(HomcalcError):
    pass


class NonAssociative(HomcalcError):
    def __init__(self, triple):
        self.triple = triple
        super().__init__(f"multiplication not associative at basis triple {triple}")


class BadUnit(HomcalcError):
    pass


class BadIdempotents(HomcalcError):
    def __init__(self, pair, msg=""):
        self.pair = pair
        super().__init__(msg or f"idempotent identity fails at pair {pair}")


class RadicalNotIdeal(HomcalcError):
    pass


class RadicalNotNilpotent(HomcalcError):
    def __init__(self, power):
        self.power = power
        super().__init__(f"radical not nilpotent within power {power}")


class RelationNotLengthHomogeneous(HomcalcError):
    pass


class PathExplosion(HomcalcError):
    pass


class TopDecompositionFailed(HomcalcError):
    pass


class SourceNotProjective(HomcalcError):
    pass


class CutoffExceeded(HomcalcError):
    pass


class NotCertifiedGP(HomcalcError):
    pass


class MembershipNotCertified(HomcalcError):
    pass


class NoGeneratorData(HomcalcError):
    pass


class NoCogeneratorData(HomcalcError):
    pass


class DimensionNotExact(HomcalcError):
    pass


class UnsupportedKind(HomcalcError):
    pass


class UnknownPropertyId(HomcalcError):
    pass


class UnknownConjectureId(HomcalcError):
    pass


class ParseError(HomcalcError):
    def __init__(self, location, msg):
        self.location = location
        super().__init__(f"{location}: {msg}")


class ValidationError(HomcalcError):
    def __init__(self, invariant, detail=""):
        self.invariant = invariant
        super().__init__(f"invariant '{invariant}' violated{': ' + str(detail) if detail else ''}")
