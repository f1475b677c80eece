"""Types and key operations shared by both re-signature schemes.

Key material is identical across the schemes: a secret exponent x in Z_p*,
the public key X = g^x, and the translation key R = X_i^{1/x_j} that lets a
proxy turn signatures by i into signatures by j (that direction only).
Translation keys are computed non-interactively from the source's public key
and the target's secret key.
"""

from dataclasses import dataclass
from typing import Tuple

from .groups import (
    GroupContext,
    GroupElement,
    NonzeroScalar,
    Side,
    pair,
    random_nonzero_scalar,
)


@dataclass(frozen=True)
class KeyPair:
    secret: NonzeroScalar
    public: GroupElement  # g^secret; DUAL so it can sit on either pairing side


@dataclass(frozen=True)
class ResignKey:
    """Directional translation key: turns `source` signatures into `target`
    signatures. On the curve backend it is RIGHT-only, since it always enters
    the blinding part of a translated signature."""

    source: str
    target: str
    key: GroupElement


@dataclass(frozen=True)
class LeveledSignature:
    """Level plus the ordered element vector. The per-scheme length laws
    (2*level - 1 hash scheme, 2*level Waters) are checked by verify, not
    here, so adversarial vectors remain representable in tests."""

    level: int
    elems: Tuple[GroupElement, ...]


def keygen(ctx: GroupContext, rng) -> KeyPair:
    x = random_nonzero_scalar(ctx, rng)
    return KeyPair(x, ctx.generator ** x)


def rekeygen(
    source_public: GroupElement,
    target_secret: NonzeroScalar,
    source: str = "i",
    target: str = "j",
) -> ResignKey:
    """R = pk_source^(1/sk_target) = g^(x_source/x_target)."""
    key = (source_public ** target_secret.inverse()).restrict(Side.RIGHT)
    return ResignKey(source, target, key)


def rekey_consistent(
    ctx: GroupContext,
    rekey: ResignKey,
    source_public: GroupElement,
    target_public: GroupElement,
) -> bool:
    """Public check that R matches the claimed key pair:
    e(X_target, R) == e(X_source, g)."""
    return pair(target_public, rekey.key) == pair(source_public, ctx.generator)


def draw_blinding(ctx: GroupContext, rng, count: int):
    """`count` fresh exponents from Z_p*, in draw order."""
    return [random_nonzero_scalar(ctx, rng) for _ in range(count)]


def prefix_products(values, modulus: int):
    """prefix[j] = values[0] * ... * values[j] mod p."""
    out = []
    acc = 1
    for v in values:
        acc = acc * int(v) % modulus
        out.append(acc)
    return out
