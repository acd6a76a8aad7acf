"""Exception hierarchy.  Each error carries the witness that triggered it."""


class JordanSplitError(Exception):
    """Base class for all errors raised by this package."""


class FieldError(JordanSplitError):
    pass


class DimensionMismatch(JordanSplitError):
    pass


class AlgebraMismatch(JordanSplitError):
    pass


class NotAssociative(JordanSplitError):
    def __init__(self, i, j, k, labels=None):
        self.triple = (i, j, k)
        names = tuple(labels[x] for x in self.triple) if labels else self.triple
        super().__init__(f"(b_i b_j) b_k != b_i (b_j b_k) for basis triple {names}")


class BadUnit(JordanSplitError):
    def __init__(self, i, label=None):
        self.index = i
        super().__init__(f"unit does not act as identity on basis element {label or i}")


class UnsupportedCharacteristic(JordanSplitError):
    pass


class NotJordan(JordanSplitError):
    def __init__(self, witness):
        self.witness = witness
        super().__init__(f"map is not a Jordan homomorphism: {witness}")


class NotSplittable(JordanSplitError):
    def __init__(self, witness):
        self.witness = witness
        super().__init__("V ∩ W is nonzero; intersection contains a nonzero element")


class InconsistentConstruction(JordanSplitError):
    """A relation among generators whose target images do not cancel.

    Under the hypotheses of the splitting theorem this cannot happen, so it
    always indicates a bug somewhere in the stack.
    """

    def __init__(self, which, relation):
        self.which = which
        self.relation = relation
        super().__init__(f"{which}: generator relation with non-cancelling images ({len(relation)} terms)")


class NotUpgradable(JordanSplitError):
    def __init__(self, reason):
        self.reason = reason
        super().__init__(f"sum cannot be upgraded to a direct sum: {reason}")


class CommutatorNotUnit(JordanSplitError):
    pass


class VerificationFailed(JordanSplitError):
    def __init__(self, report):
        self.report = report
        failed = ", ".join(c.name for c in report.failures())
        super().__init__(f"verification failed: {failed}")


class PreconditionFailed(JordanSplitError):
    def __init__(self, hypothesis, witness=None):
        self.hypothesis = hypothesis
        self.witness = witness
        super().__init__(f"precondition failed: {hypothesis}")
