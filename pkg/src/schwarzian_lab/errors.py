"""Exception hierarchy shared by every module of the package."""


class SchwarzianLabError(Exception):
    """Base class for all errors raised by schwarzian_lab."""


# series arithmetic

class DivisionByNonUnit(SchwarzianLabError, ZeroDivisionError):
    pass


class CompositionAtNonOrigin(SchwarzianLabError, ValueError):
    pass


class LogOfZeroConstant(SchwarzianLabError, ValueError):
    pass


class EvalRadiusExceeded(SchwarzianLabError, ValueError):
    pass


# class parameters and bounds

class ParamOutOfRange(SchwarzianLabError, ValueError):
    pass


class CriticalPointOutsideRange(SchwarzianLabError, ValueError):
    pass


# Schwarzian engine

class NotLocallyUnivalentAtOrigin(SchwarzianLabError, ValueError):
    pass


class OmegaHitsOne(SchwarzianLabError, ZeroDivisionError):
    pass


class InadmissibleOmegaValue(SchwarzianLabError, ValueError):
    pass


# extremal functions

class ExtremalNotDefined(SchwarzianLabError, ValueError):
    pass


class BlaschkeParamOutOfDisk(SchwarzianLabError, ArithmeticError):
    """Internal consistency failure: a Blaschke zero landed outside the disk."""


# norm optimizer

class EvaluatorFailure(SchwarzianLabError, RuntimeError):
    def __init__(self, z, cause=None):
        self.z = z
        self.cause = cause
        msg = f"evaluator failed at z={z!r}"
        if cause is not None:
            msg += f": {cause}"
        super().__init__(msg)


# CLI / IO

class ConfigError(SchwarzianLabError, ValueError):
    pass


class ParseError(SchwarzianLabError, ValueError):
    pass
