"""Multi-hop unidirectional proxy re-signatures over bilinear groups.

Two schemes with the same six-operation shape (setup, keygen, rekeygen,
sign, resign, verify): a hash-based one built on blinded BLS chains
(`prsig.rom`) and a standard-model one built on the Waters bit-vector hash
(`prsig.waters`). A proxy holding the translation key g^(x_i/x_j) can turn
signer i's signatures into signer j's — in that direction only — and
translated signatures can be translated again up to a system bound L.

`prsig.groups` provides the symmetric pairing contract with a transparent
mock backend (test oracle) and a BLS12-381 backend; `prsig.assumptions`
implements the public pairing verifiers for the flexible-DH and
modified-CDH problem tuples the schemes rest on.
"""

from . import assumptions, common, encoding, errors, groups, rom, waters
from .common import KeyPair, LeveledSignature, ResignKey
from .errors import (
    DecodeError,
    LevelExhaustedError,
    MalformedInstanceError,
    PlacementError,
    PrsigError,
    VerificationFailedError,
    VerifyResult,
)
from .groups import (
    Backend,
    CurveGroup,
    GroupContext,
    GroupElement,
    MockGroup,
    NonzeroScalar,
    Scalar,
    Side,
    TargetElement,
    pair,
    random_nonzero_scalar,
)

__version__ = "0.1.0"

__all__ = [
    "Backend",
    "CurveGroup",
    "DecodeError",
    "GroupContext",
    "GroupElement",
    "KeyPair",
    "LeveledSignature",
    "LevelExhaustedError",
    "MalformedInstanceError",
    "MockGroup",
    "NonzeroScalar",
    "PlacementError",
    "PrsigError",
    "ResignKey",
    "Scalar",
    "Side",
    "TargetElement",
    "VerificationFailedError",
    "VerifyResult",
    "assumptions",
    "common",
    "encoding",
    "errors",
    "groups",
    "pair",
    "random_nonzero_scalar",
    "rom",
    "waters",
]
