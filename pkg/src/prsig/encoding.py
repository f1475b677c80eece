"""Container file formats.

Signature files:   "PRS1" | scheme byte | level (2B BE) | count (2B BE) | element records
Key/params files:  "PRS1" | scheme byte | role byte | payload
Assumption files:  "PRS1" | scheme byte | role byte | ell (2B BE) | count (2B BE) | element records

Scheme bytes: 0x01 hash scheme, 0x02 Waters scheme, 0x03 FlexDH, 0x04 mCDH.
Role bytes: 0x01 secret key, 0x02 public key, 0x03 re-signature key,
0x04 params, 0x05 instance, 0x06 solution/candidate.

Element records are the per-element wire format from `prsig.groups.wire`.
Every decoder checks magic, scheme, and role bytes, demands the exact byte
count, and raises DecodeError otherwise.
"""

import enum
from typing import Tuple, Union

from . import rom, waters
from .assumptions import FlexDhInstance, FlexDhSolution, McdhInstance
from .common import LeveledSignature, ResignKey
from .errors import DecodeError
from .groups import (
    Backend,
    CurveGroup,
    GroupContext,
    GroupElement,
    MockGroup,
    NonzeroScalar,
    read_element,
    serialize_element,
)

MAGIC = b"PRS1"


class Scheme(enum.IntEnum):
    ROM = 0x01
    WATERS = 0x02
    FLEXDH = 0x03
    MCDH = 0x04


class Role(enum.IntEnum):
    SECRET = 0x01
    PUBLIC = 0x02
    REKEY = 0x03
    PARAMS = 0x04
    INSTANCE = 0x05
    SOLUTION = 0x06


def _u16(n: int) -> bytes:
    if not 0 <= n < 1 << 16:
        raise ValueError(f"{n} does not fit in two bytes")
    return n.to_bytes(2, "big")


def _read_u16(data: bytes, off: int) -> Tuple[int, int]:
    if len(data) < off + 2:
        raise DecodeError("truncated container")
    return int.from_bytes(data[off : off + 2], "big"), off + 2


def _check_header(data: bytes, scheme: Scheme, role=None) -> int:
    if len(data) < 5 + (1 if role is not None else 0):
        raise DecodeError("truncated container header")
    if data[:4] != MAGIC:
        raise DecodeError("bad magic")
    if data[4] != scheme.value:
        raise DecodeError(f"scheme byte {data[4]:#04x}, expected {scheme.value:#04x}")
    if role is None:
        return 5
    if data[5] != role.value:
        raise DecodeError(f"role byte {data[5]:#04x}, expected {role.value:#04x}")
    return 6


def _read_elements(data: bytes, off: int, count: int, ctx: GroupContext):
    elems = []
    for _ in range(count):
        elem, off = read_element(data, off, ctx)
        elems.append(elem)
    if off != len(data):
        raise DecodeError("trailing bytes after container")
    return tuple(elems)


# -- signatures ---------------------------------------------------------------


def encode_signature(scheme: Scheme, sig: LeveledSignature) -> bytes:
    body = b"".join(serialize_element(e) for e in sig.elems)
    return MAGIC + bytes([scheme.value]) + _u16(sig.level) + _u16(len(sig.elems)) + body


def decode_signature(data: bytes, ctx: GroupContext, scheme: Scheme) -> LeveledSignature:
    off = _check_header(data, scheme)
    level, off = _read_u16(data, off)
    count, off = _read_u16(data, off)
    return LeveledSignature(level, _read_elements(data, off, count, ctx))


# -- keys ---------------------------------------------------------------------


def _scalar_width(order: int) -> int:
    return (order.bit_length() + 7) // 8


def encode_secret_key(scheme: Scheme, secret: NonzeroScalar) -> bytes:
    raw = secret.value.to_bytes(_scalar_width(secret.modulus), "big")
    return MAGIC + bytes([scheme.value, Role.SECRET.value]) + _u16(len(raw)) + raw


def decode_secret_key(data: bytes, ctx: GroupContext, scheme: Scheme) -> NonzeroScalar:
    off = _check_header(data, scheme, Role.SECRET)
    length, off = _read_u16(data, off)
    if length != _scalar_width(ctx.order) or len(data) != off + length:
        raise DecodeError("secret key payload has the wrong length")
    value = int.from_bytes(data[off:], "big")
    if not 0 < value < ctx.order:
        raise DecodeError("secret key value outside Z_p*")
    return NonzeroScalar(value, ctx.order)


def encode_public_key(scheme: Scheme, public: GroupElement) -> bytes:
    return MAGIC + bytes([scheme.value, Role.PUBLIC.value]) + serialize_element(public)


def decode_public_key(data: bytes, ctx: GroupContext, scheme: Scheme) -> GroupElement:
    off = _check_header(data, scheme, Role.PUBLIC)
    elem, end = read_element(data, off, ctx)
    if end != len(data):
        raise DecodeError("trailing bytes after public key")
    return elem


def _encode_label(label: str) -> bytes:
    raw = label.encode("utf-8")
    if len(raw) > 255:
        raise ValueError("label longer than 255 bytes")
    return bytes([len(raw)]) + raw


def _read_label(data: bytes, off: int) -> Tuple[str, int]:
    if len(data) < off + 1:
        raise DecodeError("truncated label")
    n = data[off]
    if len(data) < off + 1 + n:
        raise DecodeError("truncated label")
    return data[off + 1 : off + 1 + n].decode("utf-8"), off + 1 + n


def encode_resign_key(scheme: Scheme, rekey: ResignKey) -> bytes:
    return (
        MAGIC
        + bytes([scheme.value, Role.REKEY.value])
        + _encode_label(rekey.source)
        + _encode_label(rekey.target)
        + serialize_element(rekey.key)
    )


def decode_resign_key(data: bytes, ctx: GroupContext, scheme: Scheme) -> ResignKey:
    off = _check_header(data, scheme, Role.REKEY)
    source, off = _read_label(data, off)
    target, off = _read_label(data, off)
    elem, end = read_element(data, off, ctx)
    if end != len(data):
        raise DecodeError("trailing bytes after re-signature key")
    return ResignKey(source, target, elem)


# -- params ---------------------------------------------------------------------


def _encode_order(ctx: GroupContext) -> bytes:
    raw = ctx.order.to_bytes(_scalar_width(ctx.order), "big")
    return bytes([ctx.backend_id.value]) + _u16(len(raw)) + raw


def _decode_context(data: bytes, off: int) -> Tuple[GroupContext, int]:
    if len(data) < off + 1:
        raise DecodeError("truncated params")
    try:
        backend = Backend(data[off])
    except ValueError:
        raise DecodeError(f"unknown backend byte {data[off]:#04x}") from None
    length, off = _read_u16(data, off + 1)
    if len(data) < off + length:
        raise DecodeError("truncated params order")
    order = int.from_bytes(data[off : off + length], "big")
    off += length
    if backend == Backend.MOCK:
        try:
            return MockGroup(order), off
        except ValueError as exc:
            raise DecodeError(str(exc)) from None
    ctx = CurveGroup()
    if order != ctx.order:
        raise DecodeError("stored order does not match the curve backend")
    return ctx, off


def encode_rom_params(params: rom.RomParams) -> bytes:
    return (
        MAGIC
        + bytes([Scheme.ROM.value, Role.PARAMS.value])
        + _encode_order(params.ctx)
        + _u16(params.max_level)
    )


def decode_rom_params(data: bytes) -> rom.RomParams:
    off = _check_header(data, Scheme.ROM, Role.PARAMS)
    ctx, off = _decode_context(data, off)
    max_level, off = _read_u16(data, off)
    if off != len(data):
        raise DecodeError("trailing bytes after params")
    if max_level < 1:
        raise DecodeError("max_level must be at least 1")
    return rom.RomParams(ctx, max_level)


def encode_waters_params(params: waters.WatersParams) -> bytes:
    body = _encode_order(params.ctx) + _u16(params.max_level) + _u16(params.n)
    body += serialize_element(params.h)
    body += b"".join(serialize_element(u) for u in params.u)
    return MAGIC + bytes([Scheme.WATERS.value, Role.PARAMS.value]) + body


def decode_waters_params(data: bytes) -> waters.WatersParams:
    off = _check_header(data, Scheme.WATERS, Role.PARAMS)
    ctx, off = _decode_context(data, off)
    max_level, off = _read_u16(data, off)
    n, off = _read_u16(data, off)
    if max_level < 1 or n < 1:
        raise DecodeError("bad max_level or message bit length")
    h, off = read_element(data, off, ctx)
    u = []
    for _ in range(n + 1):
        elem, off = read_element(data, off, ctx)
        u.append(elem)
    if off != len(data):
        raise DecodeError("trailing bytes after params")
    return waters.WatersParams(ctx, h, tuple(u), n, max_level)


def encode_params(scheme: Scheme, params) -> bytes:
    if scheme == Scheme.ROM:
        return encode_rom_params(params)
    return encode_waters_params(params)


def decode_params(data: bytes, scheme: Scheme) -> Union[rom.RomParams, waters.WatersParams]:
    if scheme == Scheme.ROM:
        return decode_rom_params(data)
    return decode_waters_params(data)


# -- assumption tuples ------------------------------------------------------------


def encode_flexdh_instance(inst: FlexDhInstance) -> bytes:
    body = b"".join(serialize_element(e) for e in (inst.g, inst.A, inst.B))
    return (
        MAGIC
        + bytes([Scheme.FLEXDH.value, Role.INSTANCE.value])
        + _u16(inst.ell)
        + _u16(3)
        + body
    )


def decode_flexdh_instance(data: bytes, ctx: GroupContext) -> FlexDhInstance:
    off = _check_header(data, Scheme.FLEXDH, Role.INSTANCE)
    ell, off = _read_u16(data, off)
    count, off = _read_u16(data, off)
    if ell < 1 or count != 3:
        raise DecodeError("FlexDH instance must carry ell >= 1 and exactly (g, A, B)")
    g, a, b = _read_elements(data, off, count, ctx)
    return FlexDhInstance(g, a, b, ell)


def encode_flexdh_solution(ell: int, sol: FlexDhSolution) -> bytes:
    elems = list(sol.C) + list(sol.D) + [sol.T]
    body = b"".join(serialize_element(e) for e in elems)
    return (
        MAGIC
        + bytes([Scheme.FLEXDH.value, Role.SOLUTION.value])
        + _u16(ell)
        + _u16(len(elems))
        + body
    )


def decode_flexdh_solution(data: bytes, ctx: GroupContext) -> Tuple[int, FlexDhSolution]:
    off = _check_header(data, Scheme.FLEXDH, Role.SOLUTION)
    ell, off = _read_u16(data, off)
    count, off = _read_u16(data, off)
    if ell < 1 or count != 2 * ell + 1:
        raise DecodeError("FlexDH solution must carry exactly 2*ell + 1 elements")
    elems = _read_elements(data, off, count, ctx)
    return ell, FlexDhSolution(elems[:ell], elems[ell : 2 * ell], elems[-1])


def encode_mcdh_instance(inst: McdhInstance) -> bytes:
    body = b"".join(serialize_element(e) for e in (inst.g, inst.A, inst.A2, inst.B))
    return (
        MAGIC + bytes([Scheme.MCDH.value, Role.INSTANCE.value]) + _u16(0) + _u16(4) + body
    )


def decode_mcdh_instance(data: bytes, ctx: GroupContext) -> McdhInstance:
    off = _check_header(data, Scheme.MCDH, Role.INSTANCE)
    _, off = _read_u16(data, off)
    count, off = _read_u16(data, off)
    if count != 4:
        raise DecodeError("mCDH instance must carry exactly (g, A, A2, B)")
    g, a, a2, b = _read_elements(data, off, count, ctx)
    return McdhInstance(g, a, a2, b)


def encode_mcdh_candidate(candidate: GroupElement) -> bytes:
    return (
        MAGIC
        + bytes([Scheme.MCDH.value, Role.SOLUTION.value])
        + _u16(0)
        + _u16(1)
        + serialize_element(candidate)
    )


def decode_mcdh_candidate(data: bytes, ctx: GroupContext) -> GroupElement:
    off = _check_header(data, Scheme.MCDH, Role.SOLUTION)
    _, off = _read_u16(data, off)
    count, off = _read_u16(data, off)
    if count != 1:
        raise DecodeError("mCDH candidate must carry exactly one element")
    (elem,) = _read_elements(data, off, count, ctx)
    return elem
