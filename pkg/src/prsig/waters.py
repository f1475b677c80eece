"""Multi-hop unidirectional proxy re-signature scheme, standard-model variant.

Messages are n-bit strings hashed with the Waters bit-vector function

    F(m) = u' * prod_{i: m_i = 1} u_i,

where (u', u_1..u_n) are public elements sampled once by a trusted setup.
A level-1 signature is (h^x * F(m)^r, g^r); a level-(k+1) signature carries
the same blinded chain as the hash-based scheme next to the (F(m)^r, g^r)
pair:

    sigma_0 = h^(x t_1...t_k) * F(m)^r
    sigma_1 = g^r
    sigma_i = g^(x t_1...t_(k+2-i))   for i in 2..k+1    (the "x part")
    sigma_(k+1+i) = g^(t_i)           for i in 1..k      (the "t part")

Arbitrary byte strings are reduced to n bits with SHA-256 before signing
(n = 256 by default).

Curve-backend placement: sigma_0 and sigma_1 are LEFT, the x part is DUAL,
the t part and translation keys are RIGHT; g, h, the u vector, and public
keys are DUAL.
"""

import hashlib
from dataclasses import dataclass
from typing import Iterable, Tuple, Union

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
    "WatersParams",
    "WatersMessage",
    "KeyPair",
    "ResignKey",
    "LeveledSignature",
    "setup",
    "keygen",
    "rekeygen",
    "rekey_consistent",
    "waters_hash",
    "sign",
    "resign",
    "verify",
]

DEFAULT_BITS = 256


@dataclass(frozen=True)
class WatersMessage:
    """Exactly-n-bit message, m_1..m_n."""

    bits: Tuple[int, ...]

    def __post_init__(self):
        if any(b not in (0, 1) for b in self.bits):
            raise ValueError("message bits must be 0 or 1")

    @classmethod
    def from_bits(cls, bits: Union[str, Iterable[int]]) -> "WatersMessage":
        if isinstance(bits, str):
            return cls(tuple(int(c) for c in bits))
        return cls(tuple(int(b) for b in bits))

    @classmethod
    def digest(cls, data: bytes, n: int = DEFAULT_BITS) -> "WatersMessage":
        """Reduce an arbitrary byte string to n bits: the SHA-256 digest
        stream (extended with a counter for n > 256), truncated to n bits."""
        stream = bytearray()
        counter = 0
        while 8 * len(stream) < n:
            block = data if counter == 0 else data + counter.to_bytes(4, "big")
            stream.extend(hashlib.sha256(block).digest())
            counter += 1
        bits = []
        for i in range(n):
            bits.append(stream[i // 8] >> (7 - i % 8) & 1)
        return cls(tuple(bits))


@dataclass(frozen=True)
class WatersParams:
    """Trusted-setup output: generator pair (g from the context, h), the
    (n+1)-element u vector (u[0] = u'), the message bit length, and the level
    bound. Deliberately holds no scalar fields: the sampling exponents are
    discarded at setup."""

    ctx: GroupContext
    h: GroupElement
    u: Tuple[GroupElement, ...]
    n: int
    max_level: int

    def __post_init__(self):
        if len(self.u) != self.n + 1:
            raise ValueError(f"u vector must have n+1 = {self.n + 1} elements")


def setup(ctx: GroupContext, n: int = DEFAULT_BITS, max_level: int = 6, rng=None) -> WatersParams:
    """Sample h and the u vector as fresh powers of g (so both curve
    representatives exist) and discard the exponents. Draw order: h, u',
    u_1..u_n."""
    if n < 1:
        raise ValueError("message bit length must be at least 1")
    if max_level < 1:
        raise ValueError("max_level must be at least 1")
    if rng is None:
        raise ValueError("setup requires a randomness source")
    g = ctx.generator
    h = g ** random_nonzero_scalar(ctx, rng)
    u = tuple(g ** random_nonzero_scalar(ctx, rng) for _ in range(n + 1))
    return WatersParams(ctx, h, u, n, max_level)


def keygen(params: WatersParams, rng) -> KeyPair:
    return _keygen(params.ctx, rng)


def as_message(params: WatersParams, message: Union[bytes, WatersMessage]) -> WatersMessage:
    """Bytes are digested down to params.n bits; WatersMessage inputs must
    already have exactly n bits."""
    if isinstance(message, WatersMessage):
        if len(message.bits) != params.n:
            raise ValueError(f"message has {len(message.bits)} bits, parameters fix n={params.n}")
        return message
    return WatersMessage.digest(message, params.n)


def waters_hash(params: WatersParams, message: Union[bytes, WatersMessage]) -> GroupElement:
    """F(m) = u' * prod over set bits of u_i."""
    msg = as_message(params, message)
    acc = params.u[0]
    for bit, u_i in zip(msg.bits, params.u[1:]):
        if bit:
            acc = acc * u_i
    return acc


def sign(
    params: WatersParams,
    level: int,
    secret: NonzeroScalar,
    message: Union[bytes, WatersMessage],
    rng,
) -> LeveledSignature:
    """Sign at `level`; draws r first, then t_1..t_(level-1)."""
    if not 1 <= level <= params.max_level:
        raise ValueError(f"level {level} outside [1, {params.max_level}]")
    ctx = params.ctx
    p = ctx.order
    f_m = waters_hash(params, message)
    g = ctx.generator
    x = int(secret)
    r = random_nonzero_scalar(ctx, rng)
    if level == 1:
        elems = (
            ((params.h ** x) * (f_m ** r)).restrict(Side.LEFT),
            (g ** r).restrict(Side.LEFT),
        )
        return LeveledSignature(1, elems)
    k = level - 1
    ts = draw_blinding(ctx, rng, k)
    prefix = prefix_products(ts, p)  # prefix[j-1] = t_1...t_j
    elems = [
        ((params.h ** (x * prefix[k - 1] % p)) * (f_m ** r)).restrict(Side.LEFT),
        (g ** r).restrict(Side.LEFT),
    ]
    for i in range(2, k + 2):
        elems.append(g ** (x * prefix[k + 1 - i] % p))
    for t in ts:
        elems.append((g ** t).restrict(Side.RIGHT))
    return LeveledSignature(level, tuple(elems))


def verify(
    params: WatersParams,
    level: int,
    message: Union[bytes, WatersMessage],
    sig: LeveledSignature,
    public: GroupElement,
) -> VerifyResult:
    """Total verification predicate; see the hash-based scheme for the
    rejection conventions.

    The blinded parts (indices >= 2) must not be the identity; sigma_0 and
    sigma_1 may legitimately hit it because their exponents are sums.
    """
    if not 1 <= level <= params.max_level:
        return VerifyResult.reject(f"level {level} outside [1, {params.max_level}]")
    if sig.level != level:
        return VerifyResult.reject(f"signature level {sig.level} != claimed level {level}")
    if len(sig.elems) != 2 * level:
        return VerifyResult.reject(
            f"level {level} requires {2 * level} elements, got {len(sig.elems)}"
        )
    for idx in range(2, len(sig.elems)):
        if sig.elems[idx].is_identity():
            return VerifyResult.reject(f"identity element at index {idx}")
    ctx = params.ctx
    g = ctx.generator
    f_m = waters_hash(params, message)
    s = sig.elems
    try:
        if level == 1:
            if pair(s[0], g) != pair(public, params.h) * pair(s[1], f_m):
                return VerifyResult.reject("equation 0 (hash link) failed")
            return VerifyResult.accept()
        k = level - 1
        # x-part anchor pairs against sigma_2 (exponent x t_1...t_k).
        if pair(s[0], g) != pair(params.h, s[2]) * pair(s[1], f_m):
            return VerifyResult.reject("equation 0 (hash link) failed")
        # chain: e(sigma_i, g) = e(sigma_(i+1), sigma_(2k+3-i)) for i in 2..k
        for i in range(2, k + 1):
            if pair(s[i], g) != pair(s[i + 1], s[2 * k + 3 - i]):
                return VerifyResult.reject(f"equation {i - 1} (chain) failed")
        if pair(s[k + 1], g) != pair(public, s[k + 2]):
            return VerifyResult.reject(f"equation {k} (key anchor) failed")
    except PlacementError as exc:
        return VerifyResult.reject(f"element not usable on required pairing side: {exc}")
    return VerifyResult.accept()


def resign(
    params: WatersParams,
    message: Union[bytes, WatersMessage],
    sig: LeveledSignature,
    rekey: ResignKey,
    source_public: GroupElement,
    target_public: GroupElement,
    rng,
) -> LeveledSignature:
    """Translate a valid signature one level up and onto the target key.

    Blinding draw order: (t, r') for a level-1 input; (r', r_0..r_l) for a
    level-(l+1) input. The output matches a fresh signature under the
    substitution t~_0 = r_0 x_i/x_j, t~_k = r_k t_k, r'' = r r_0...r_l + r'.
    """
    if sig.level >= params.max_level:
        raise LevelExhaustedError(
            f"cannot translate a level-{sig.level} signature in a {params.max_level}-level system"
        )
    verdict = verify(params, sig.level, message, sig, source_public)
    if not verdict:
        raise VerificationFailedError(f"input signature invalid: {verdict.reason}")
    ctx = params.ctx
    f_m = waters_hash(params, message)
    g = ctx.generator
    s = sig.elems
    if sig.level == 1:
        t = random_nonzero_scalar(ctx, rng)
        r_new = random_nonzero_scalar(ctx, rng)
        elems = (
            ((s[0] ** t) * (f_m ** r_new)).restrict(Side.LEFT),
            ((s[1] ** t) * (g ** r_new)).restrict(Side.LEFT),
            source_public ** t,
            (rekey.key ** t).restrict(Side.RIGHT),
        )
        return LeveledSignature(2, elems)
    k = sig.level - 1
    r_new = random_nonzero_scalar(ctx, rng)
    rs = draw_blinding(ctx, rng, k + 1)  # r_0 .. r_k
    prefix = prefix_products(rs, ctx.order)
    out = [
        ((s[0] ** prefix[k]) * (f_m ** r_new)).restrict(Side.LEFT),
        ((s[1] ** prefix[k]) * (g ** r_new)).restrict(Side.LEFT),
    ]
    for i in range(2, k + 2):
        out.append(s[i] ** prefix[k + 2 - i])
    out.append(source_public ** rs[0])
    out.append((rekey.key ** rs[0]).restrict(Side.RIGHT))
    for m in range(1, k + 1):
        out.append(s[k + 1 + m] ** rs[m])
    return LeveledSignature(sig.level + 1, tuple(out))
