"""Exception hierarchy.

Each class carries the CLI exit code it maps to: 2 for bad input, 3 for
computations that could not reach a definite answer.
"""


class GrigError(Exception):
    exit_code = 2


class MalformedDoc(GrigError):
    pass


class NotAssociative(GrigError):
    def __init__(self, triple):
        super().__init__(f"associativity fails on basis triple {triple}")
        self.triple = triple


class NoUnit(GrigError):
    pass


class NotAdmissible(GrigError):
    pass


class NotIdempotent(GrigError):
    pass


class ContextNotZero(GrigError):
    def __init__(self, witness):
        super().__init__("f*A*e is nonzero")
        self.witness = witness


class AlgebraMismatch(GrigError):
    pass


class InvalidModule(GrigError):
    pass


class InternalInconsistency(GrigError):
    exit_code = 3


class NotSplit(GrigError):
    exit_code = 3


class DecompositionInconclusive(GrigError):
    exit_code = 3


class IsoTestInconclusive(GrigError):
    exit_code = 3


class CertificationUnknown(GrigError):
    exit_code = 3


class NotClosed(GrigError):
    exit_code = 3


class NotGendoGorenstein(GrigError):
    pass
