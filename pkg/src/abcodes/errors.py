"""Exception hierarchy.

Every error carries a stable ``code`` string (the class name in
SCREAMING_SNAKE form) and an exit status used by the command line tool.
"""

from __future__ import annotations

import re


class AbcodesError(Exception):
    """Base class for all library errors."""

    exit_code = 2

    @property
    def code(self) -> str:
        return re.sub(r"(?<!^)(?=[A-Z])", "_", type(self).__name__).upper()


# usage / parameter errors (exit 2)
class NonPrime(AbcodesError):
    pass


class ReducibleModulus(AbcodesError):
    pass


class MixedFields(AbcodesError):
    pass


class DivisionByZero(AbcodesError, ZeroDivisionError):
    pass


class DependentBasis(AbcodesError):
    pass


class RankOutOfRange(AbcodesError):
    pass


class InvalidParameters(AbcodesError):
    pass


class OddCharacteristic(AbcodesError):
    pass


class EvenCharacteristic(AbcodesError):
    pass


class EvenDegree(AbcodesError):
    pass


class EvenM(AbcodesError):
    pass


class NonzeroAtZero(AbcodesError):
    pass


class WeightNotRealized(AbcodesError):
    pass


class ZeroCode(AbcodesError):
    pass


class DualNotMinimal(AbcodesError):
    pass


# arithmetic consistency failures (exit 1: the inputs contradict each other)
class NonIntegralResult(AbcodesError):
    exit_code = 1


class NonIntegralLambda(AbcodesError):
    exit_code = 1


class NotADesign(AbcodesError):
    exit_code = 1

    def __init__(self, msg: str, witness=None):
        super().__init__(msg)
        self.witness = witness


# resource caps (exit 3)
class ResourceCapExceeded(AbcodesError):
    exit_code = 3


class FieldTooLarge(ResourceCapExceeded):
    pass


class CodeTooLarge(ResourceCapExceeded):
    pass


class TooLarge(ResourceCapExceeded):
    pass
