#!/usr/bin/env python
"""
errors

Exception hierarchy shared by graph_tools, dynamics, cert_manager and data_io.
The command line maps each class onto an exit status (see
cert_manager_conf.ExitStatus).
"""
from __future__ import annotations


class SignedOpinionError(Exception):
    """ Base class of all errors raised by core_scripts
    """


class DomainError(SignedOpinionError, ValueError):
    """ Argument outside the domain of an operation
    (time before the schedule origin, reversed interval, bad index, ...)
    """


class CapacityError(SignedOpinionError):
    """ Exhaustive search refused because the node count exceeds the cap
    """


class PreconditionError(SignedOpinionError):
    """ Input violates a documented precondition
    """


class UnsupportedScheduleError(SignedOpinionError):
    """ Schedule cannot be analysed window by window
    """


class InconsistencyError(SignedOpinionError):
    """ Structural quantities contradict each other
    """


class MisuseError(SignedOpinionError):
    """ Operation applied to the wrong kind of trajectory
    """


class StructuralError(SignedOpinionError):
    """ Graph hypotheses do not hold for the scenario
    """


class RootSetMismatchError(StructuralError):
    """ Declared root set differs from the detected one
    """
    def __init__(self, declared, detected):
        self.declared = declared
        self.detected = detected
        super().__init__(
            "declared root set {} differs from detected root set {}".format(
                declared, detected))


class IntegrationDivergedError(SignedOpinionError):
    """ Non-finite state produced by the integrator

    The partial trajectory up to the last finite grid point is attached
    so that callers can still write it out.
    """
    def __init__(self, last_valid_time, partial=None):
        self.last_valid_time = last_valid_time
        self.partial = partial
        super().__init__(
            "integration diverged after t = {:.17g}".format(last_valid_time))


class ScenarioParseError(SignedOpinionError):
    """ Scenario document rejected at parse time
    """
    def __init__(self, key, constraint, line=None):
        self.key = key
        self.constraint = constraint
        self.line = line
        where = "" if line is None else " (line {:d})".format(line)
        super().__init__("{}{}: {}".format(key, where, constraint))


if __name__ == "__main__":
    print("Definition of core_scripts exceptions")
