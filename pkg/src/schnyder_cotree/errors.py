"""Exception hierarchy.

Input problems derive from ``ValueError``.  Verifier alarms are raised when a
runtime check of a structural claim fails; they carry the name of the claim
they would falsify and should never fire on valid input.
"""


class PlanarGraphError(ValueError):
    """Base class for malformed embedded graphs."""


class NonSimple(PlanarGraphError):
    pass


class EulerViolation(PlanarGraphError):
    pass


class RootsNotOnOuterFace(PlanarGraphError):
    pass


class RootsNotClockwise(PlanarGraphError):
    pass


class FormatError(ValueError):
    """Unparseable input file."""


class NotThreeConnected(ValueError):
    pass


class InvalidWood(ValueError):
    pass


class InconsistentInputs(ValueError):
    pass


class UnknownVertex(KeyError):
    pass


class BadParams(ValueError):
    pass


class CapExceeded(RuntimeError):
    pass


class VerifierAlarm(AssertionError):
    """A runtime certificate failed.  ``claim`` names what it would falsify."""

    claim = "unspecified"

    def __init__(self, message, payload=None):
        super().__init__(f"[{self.claim}] {message}")
        self.payload = payload


class CyclicConstraint(VerifierAlarm):
    claim = "compatible path partition order"


class ParentEdgeAlarm(VerifierAlarm):
    claim = "parent edge observation"


class DegreeAlarm(VerifierAlarm):
    claim = "candidate degree bound"


class ComplementAlarm(VerifierAlarm):
    claim = "dual complement"


class NoWitness(VerifierAlarm):
    claim = "cycle witness"


class CycleInHZero(VerifierAlarm):
    claim = "H0 forest"


class HNotConnected(VerifierAlarm):
    claim = "H(G) connected"


class NotATree(VerifierAlarm):
    claim = "cut-cycle duality"


class WoodAlarm(VerifierAlarm):
    claim = "Schnyder wood validity"


class CrossingAlarm(VerifierAlarm):
    claim = "crossing vertex colours"


class OppAlarm(VerifierAlarm):
    claim = "ordered path partition"
