"""Exception types and the verification verdict shared by all modules."""

from dataclasses import dataclass
from typing import Optional


class PrsigError(Exception):
    """Base class for all library errors."""


class PlacementError(PrsigError):
    """An element was used on a pairing side it has no representative for."""


class DecodeError(PrsigError):
    """Malformed, non-canonical, or off-subgroup wire data."""


class VerificationFailedError(PrsigError):
    """An input signature handed to re-sign did not verify."""


class LevelExhaustedError(PrsigError):
    """Re-sign was asked to push a signature past the system level bound."""


class MalformedInstanceError(PrsigError):
    """An assumption instance fails its public consistency check."""


@dataclass(frozen=True)
class VerifyResult:
    """Boolean verification outcome carrying the failing check on reject.

    Truthiness equals acceptance, so `if verify(...)` reads naturally while
    callers that need diagnostics can inspect `.reason`.
    """

    ok: bool
    reason: Optional[str] = None

    def __bool__(self) -> bool:
        return self.ok

    @staticmethod
    def accept() -> "VerifyResult":
        return VerifyResult(True)

    @staticmethod
    def reject(reason: str) -> "VerifyResult":
        return VerifyResult(False, reason)
