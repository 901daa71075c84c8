__all__ = [
    "ContractViolation",
    "InfeasibilityError",
    "InputError",
    "ResourceError",
    "SimilarityError",
    "SuccinvError",
]
from typing import Any, List, Mapping, Sequence, Union

from apischema import ValidationError

ErrorKey = Union[str, int]


class SuccinvError(Exception):
    pass


class InputError(SuccinvError):
    def __init__(self, message: str = "", loc: Sequence[ErrorKey] = ()):
        super().__init__(message)
        self._errors: List[Mapping[str, Any]] = (
            [{"loc": list(loc), "err": message}] if message else []
        )

    @property
    def errors(self) -> List[Mapping[str, Any]]:
        return self._errors

    def __str__(self):
        return "; ".join(
            "/".join(map(str, err["loc"])) + ": " + err["err"]
            if err["loc"]
            else err["err"]
            for err in self._errors
        )

    @staticmethod
    def from_validation_error(error: ValidationError) -> "InputError":
        result = InputError()
        result._errors = [
            {"loc": list(err["loc"]), "err": err["err"]} for err in error.errors
        ]
        return result


class SimilarityError(SuccinvError):
    pass


class InfeasibilityError(SuccinvError):
    pass


class ResourceError(SuccinvError):
    pass


class ContractViolation(SuccinvError):
    pass
