from typing import Iterable, Optional, Sequence

EXIT_OK = 0
EXIT_REJECTED = 1
EXIT_USAGE = 2
EXIT_CAP = 3
EXIT_INTERNAL = 4


class HyperfactorError(Exception):
    exit_code = EXIT_USAGE

    def __init__(self, detail: str) -> None:
        super().__init__(detail)
        self.detail = detail


class InputFormatError(HyperfactorError):
    exit_code = EXIT_USAGE


class InvalidArgumentError(HyperfactorError, ValueError):
    exit_code = EXIT_USAGE


class ConfigError(HyperfactorError):
    exit_code = EXIT_USAGE


class RejectedInputError(HyperfactorError):
    """Input is well formed but outside the domain of the operation."""

    exit_code = EXIT_REJECTED


class NotSimpleError(RejectedInputError):
    def __init__(self, witness: Sequence[Sequence[int]]) -> None:
        pretty = " inside ".join("{" + ",".join(map(str, e)) + "}" for e in witness)
        super().__init__(f"not simple: {pretty}")
        self.witness = tuple(tuple(e) for e in witness)


class NotConnectedError(RejectedInputError):
    def __init__(self, u: int, v: int) -> None:
        super().__init__(f"not connected: no path between {u} and {v}")
        self.witness = (u, v)


class NotThinError(RejectedInputError):
    def __init__(self, twin_classes: Iterable[Sequence[int]]) -> None:
        classes = tuple(tuple(c) for c in twin_classes)
        listed = "; ".join("{" + ",".join(map(str, c)) + "}" for c in classes)
        super().__init__(
            "not thin: vertices with equal closed neighborhoods "
            f"[{listed}]; prime factorization of non-thin hypergraphs "
            "is not supported (uniqueness is an open conjecture)"
        )
        self.twin_classes = classes


class CapExceededError(HyperfactorError):
    exit_code = EXIT_CAP

    def __init__(self, name: str, value: int, limit: int) -> None:
        super().__init__(f"cap exceeded: {name}={value} > {limit}")
        self.name = name
        self.value = value
        self.limit = limit


class GenerationError(HyperfactorError):
    exit_code = EXIT_CAP


class FactorizationInvariantError(HyperfactorError):
    exit_code = EXIT_INTERNAL

    def __init__(self, detail: str, witness: Optional[object] = None) -> None:
        super().__init__(f"factorization invariant violated: {detail}")
        self.witness = witness
