'''
exception classes for pyiara
'''
from __future__ import print_function


class IARAError(Exception):
    '''pyiara error class'''
    def __init__(self, msg, inner_exception=None):
        Exception.__init__(self, msg)
        self.message = msg
        self.inner_exception = inner_exception


class DivisionByZero(IARAError, ZeroDivisionError):
    '''inversion of a zero scalar'''


class InvalidCocycle(IARAError):
    pass


class DegenerateBaseForm(IARAError):
    pass


class InvalidSignMatrix(IARAError):
    pass


class NotInvertible(IARAError):
    pass


class NotHomogeneous(IARAError):
    pass


class SplitFails(IARAError):
    pass


class NotToral(IARAError):
    pass


class DegenerateFormOnT(IARAError):
    pass


class AxiomFails(IARAError):
    '''an axiom check found a violation; witness holds the offending data'''
    def __init__(self, msg, witness=None):
        IARAError.__init__(self, msg)
        self.witness = witness


class BoundExceeded(IARAError):
    pass


class CenterNonzero(IARAError):
    pass


class NoWitness(IARAError):
    pass


class NotDiagonalizable(IARAError):
    pass


class RootMismatch(IARAError):
    pass


class InconsistentDecomposition(IARAError):
    pass


class FormDegenerate(IARAError):
    pass


class WindowNotSymmetric(IARAError):
    pass


class HypothesisUnmet(IARAError):
    pass


class StringBroken(IARAError):
    def __init__(self, msg, gap=None):
        IARAError.__init__(self, msg)
        self.gap = gap


class RankTooHigh(IARAError):
    pass


class ConfigError(IARAError):
    def __init__(self, msg, line=None):
        if line is not None:
            msg = "line %u: %s" % (line, msg)
        IARAError.__init__(self, msg)
        self.line = line


class StepError(IARAError):
    '''failure inside a pipeline step'''
    def __init__(self, index, step, inner_exception):
        IARAError.__init__(self, "step %u (%s): %s" % (index, step, inner_exception),
                           inner_exception=inner_exception)
        self.index = index
        self.step = step
