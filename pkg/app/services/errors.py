##############################################################################
# File: errors.py — error taxonomy shared by the CLI, the API and the services
# Every error carries the process exit code the CLI reports for it:
#   1 → bad input, 2 → a runtime invariant failed, 3 → fast/oracle divergence
##############################################################################
from typing import Optional


class KconnError(Exception):
    exit_code: int = 1


class GraphInputError(KconnError):
    """Malformed graph file or invalid parameters."""

    exit_code = 1

    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class InvariantViolation(KconnError):
    """A structural property of the algorithms did not hold at runtime."""

    exit_code = 2


class PreconditionError(InvariantViolation):
    pass


class OracleDivergence(KconnError):
    exit_code = 3

    def __init__(self, message: str, counterexample=None):
        # counterexample: shrunk Digraph on which fast and oracle still disagree
        self.counterexample = counterexample
        super().__init__(message)
