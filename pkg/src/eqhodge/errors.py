"""Exception hierarchy. Each class carries the CLI exit code it maps to."""

from __future__ import annotations


class EqHodgeError(Exception):
    exit_code = 4


class ConfigError(EqHodgeError, ValueError):
    """Malformed or incomplete job configuration."""

    exit_code = 2


class HypothesisViolation(EqHodgeError):
    """Input is well-formed but outside the hypotheses a computation needs."""

    exit_code = 3


class NonMinimalModel(HypothesisViolation):
    def __init__(self, message: str, violations=()):
        super().__init__(message)
        self.violations = list(violations)


class SingularGenericFiber(HypothesisViolation, ValueError):
    pass


class IsotrivialSurface(HypothesisViolation):
    pass


class TjurinaUnavailable(HypothesisViolation):
    pass


class InconsistentData(EqHodgeError, ValueError):
    """Internal cross-check failed: corrupt tables, bad ramification data, etc."""

    exit_code = 4
