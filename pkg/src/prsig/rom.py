"""Multi-hop unidirectional proxy re-signature scheme, hash-based variant.

A level-1 signature is a plain BLS signature H(m)^x. Higher levels blind it:
a level-(k+1) signature is

    sigma_0 = H(m)^(x t_1...t_k)
    sigma_i = g^(x t_1...t_(k+1-i))   for i in 1..k      (the "x part")
    sigma_(k+i) = g^(t_i)             for i in 1..k      (the "t part")

with fresh t_i in Z_p*. The t part proves, link by link, that sigma_0 hides
a valid BLS signature. Translation re-randomizes every link and splices
g^(x_i/x_j) into the chain, which moves the signature one level up and onto
the target key; the output is distributed exactly like a fresh signature.

Curve-backend placement: sigma_0 is LEFT (it lives in the hash's group),
the x part is DUAL, the t part and translation keys are RIGHT.
"""

from dataclasses import dataclass

from .common import (
    KeyPair,
    LeveledSignature,
    ResignKey,
    draw_blinding,
    keygen as _keygen,
    prefix_products,
    rekeygen,
    rekey_consistent,
)
from .errors import (
    LevelExhaustedError,
    PlacementError,
    VerificationFailedError,
    VerifyResult,
)
from .groups import GroupContext, GroupElement, NonzeroScalar, Side, pair, random_nonzero_scalar

__all__ = [
    "RomParams",
    "KeyPair",
    "ResignKey",
    "LeveledSignature",
    "setup",
    "keygen",
    "rekeygen",
    "rekey_consistent",
    "sign",
    "resign",
    "verify",
]


@dataclass(frozen=True)
class RomParams:
    """Public parameters: the group context (which fixes g and the hash into
    the group) and the system level bound."""

    ctx: GroupContext
    max_level: int


def setup(ctx: GroupContext, max_level: int = 6) -> RomParams:
    if max_level < 1:
        raise ValueError("max_level must be at least 1")
    return RomParams(ctx, max_level)


def keygen(params: RomParams, rng) -> KeyPair:
    return _keygen(params.ctx, rng)


def sign(
    params: RomParams, level: int, secret: NonzeroScalar, message: bytes, rng
) -> LeveledSignature:
    """Sign `message` at `level`. Level 1 is deterministic; level k+1 draws
    blinding exponents t_1..t_k (in that order) from `rng`."""
    if not 1 <= level <= params.max_level:
        raise ValueError(f"level {level} outside [1, {params.max_level}]")
    ctx = params.ctx
    p = ctx.order
    h_m = ctx.hash_to_group(message)
    x = int(secret)
    if level == 1:
        return LeveledSignature(1, (h_m ** x,))
    k = level - 1
    ts = draw_blinding(ctx, rng, k)
    prefix = prefix_products(ts, p)  # prefix[j-1] = t_1...t_j
    g = ctx.generator
    elems = [h_m ** (x * prefix[k - 1] % p)]
    for i in range(1, k + 1):
        elems.append(g ** (x * prefix[k - i] % p))
    for t in ts:
        elems.append((g ** t).restrict(Side.RIGHT))
    return LeveledSignature(level, tuple(elems))


def verify(
    params: RomParams,
    level: int,
    message: bytes,
    sig: LeveledSignature,
    public: GroupElement,
) -> VerifyResult:
    """Total verification predicate. Malformed-but-parseable signatures are
    rejected with a reason, never raised on."""
    if not 1 <= level <= params.max_level:
        return VerifyResult.reject(f"level {level} outside [1, {params.max_level}]")
    if sig.level != level:
        return VerifyResult.reject(f"signature level {sig.level} != claimed level {level}")
    if len(sig.elems) != 2 * level - 1:
        return VerifyResult.reject(
            f"level {level} requires {2 * level - 1} elements, got {len(sig.elems)}"
        )
    for idx, e in enumerate(sig.elems):
        if e.is_identity():
            return VerifyResult.reject(f"identity element at index {idx}")
    ctx = params.ctx
    g = ctx.generator
    h_m = ctx.hash_to_group(message)
    s = sig.elems
    try:
        if level == 1:
            if pair(s[0], g) != pair(h_m, public):
                return VerifyResult.reject("equation 0 (hash link) failed")
            return VerifyResult.accept()
        k = level - 1
        if pair(s[0], g) != pair(h_m, s[1]):
            return VerifyResult.reject("equation 0 (hash link) failed")
        # chain: e(sigma_i, g) = e(sigma_(i+1), sigma_(2k-i+1)) for i in 1..k-1
        for i in range(1, k):
            if pair(s[i], g) != pair(s[i + 1], s[2 * k - i + 1]):
                return VerifyResult.reject(f"equation {i} (chain) failed")
        if pair(s[k], g) != pair(public, s[k + 1]):
            return VerifyResult.reject(f"equation {k} (key anchor) failed")
    except PlacementError as exc:
        return VerifyResult.reject(f"element not usable on required pairing side: {exc}")
    return VerifyResult.accept()


def resign(
    params: RomParams,
    message: bytes,
    sig: LeveledSignature,
    rekey: ResignKey,
    source_public: GroupElement,
    target_public: GroupElement,
    rng,
) -> LeveledSignature:
    """Translate a valid level-l signature by the source key into a level-
    (l+1) signature under the target key.

    The input is verified first and rejected with VerificationFailedError if
    invalid. Blinding draw order: t for a level-1 input; r_0..r_l for a
    level-(l+1) input. The output is distributed identically to a fresh
    signature at the next level (exponent substitution t~_0 = r_0 x_i/x_j,
    t~_k = r_k t_k).
    """
    if sig.level >= params.max_level:
        raise LevelExhaustedError(
            f"cannot translate a level-{sig.level} signature in a {params.max_level}-level system"
        )
    verdict = verify(params, sig.level, message, sig, source_public)
    if not verdict:
        raise VerificationFailedError(f"input signature invalid: {verdict.reason}")
    ctx = params.ctx
    s = sig.elems
    if sig.level == 1:
        t = random_nonzero_scalar(ctx, rng)
        elems = (
            s[0] ** t,
            source_public ** t,
            (rekey.key ** t).restrict(Side.RIGHT),
        )
        return LeveledSignature(2, elems)
    k = sig.level - 1
    rs = draw_blinding(ctx, rng, k + 1)  # r_0 .. r_k
    prefix = prefix_products(rs, ctx.order)  # prefix[j] = r_0...r_j
    out = [s[0] ** prefix[k]]
    for i in range(1, k + 1):
        out.append(s[i] ** prefix[k + 1 - i])
    out.append(source_public ** rs[0])
    out.append((rekey.key ** rs[0]).restrict(Side.RIGHT))
    for m in range(1, k + 1):
        out.append(s[k + m] ** rs[m])
    return LeveledSignature(sig.level + 1, tuple(out))
