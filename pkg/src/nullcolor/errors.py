"""Exception hierarchy.

Input problems derive from :class:`InputError`; a failed mathematical
guarantee (which always means a bug or a non-planar input sneaking past
validation) derives from :class:`GuaranteeViolated`.
"""


class NullcolorError(Exception):
    pass


class InputError(NullcolorError, ValueError):
    pass


class GuaranteeViolated(NullcolorError):
    pass


# algebra
class NotPrime(InputError):
    pass


class ReducibleModulus(InputError):
    pass


class ZeroElement(InputError):
    pass


class NoSuchOrder(InputError):
    pass


class FieldTooLarge(InputError):
    pass


# graphs
class MalformedInput(InputError):
    pass


class LoopEdge(MalformedInput):
    pass


class DuplicateEdge(MalformedInput):
    pass


class UnknownVertex(MalformedInput):
    pass


class InvalidEmbedding(InputError):
    pass


class NotNearTriangulation(InputError):
    pass


class NotTwoConnected(NotNearTriangulation):
    pass


class NonTriangularInnerFace(NotNearTriangulation):
    pass


class OuterFaceNotCycle(NotNearTriangulation):
    pass


class NotAClique(InputError):
    pass


class MapTooLarge(InputError):
    pass


class DropOutsideClique(InputError):
    pass


# polys
class ZeroDecoration(InputError):
    pass


class MissingEdge(InputError):
    pass


class BudgetExceeded(InputError):
    pass


# certify
class NotBoundaryEdge(InputError):
    pass


class NotATriangle(InputError):
    pass


class MissingSplit(InputError):
    pass


class NotV8Edge(InputError):
    pass


class GlueMismatch(InputError):
    pass


class SearchExhausted(GuaranteeViolated):
    pass


class CertificateMismatch(GuaranteeViolated):
    pass


# coloring
class NoWitnessMonomial(InputError):
    pass


class ListTooSmall(InputError):
    pass


class LabelOutOfRange(InputError):
    pass


# bounds
class Infeasible(InputError):
    pass


class PreconditionViolated(InputError):
    pass


class PositiveRequired(InputError):
    pass


class DegenerateMax(InputError):
    pass
