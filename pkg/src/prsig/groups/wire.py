"""Element wire format.

One record is: backend byte (0x01 mock, 0x02 curve), side byte (0x01 LEFT,
0x02 RIGHT, 0x03 DUAL), then the representative payload: a 4-byte big-endian
value on the mock backend, compressed curve point(s) on the curve backend
(left first, then right, when DUAL). Encodings are canonical: decode is the
exact inverse of encode and rejects everything else.
"""

from ..errors import DecodeError
from .base import GroupContext, GroupElement, Side


def element_record_length(ctx: GroupContext, side: Side) -> int:
    if not ctx.sided:
        return 2 + ctx.rep_byte_length("left")
    n = 0
    if side.left_capable:
        n += ctx.rep_byte_length("left")
    if side.right_capable:
        n += ctx.rep_byte_length("right")
    return 2 + n


def serialize_element(e: GroupElement) -> bytes:
    """Canonical encoding of one element (see module docstring)."""
    out = bytes([e.ctx.backend_id.value, e.side.value])
    if not e.ctx.sided:
        return out + e.ctx.serialize_rep("left", e.left)
    if e.side.left_capable:
        out += e.ctx.serialize_rep("left", e.left)
    if e.side.right_capable:
        out += e.ctx.serialize_rep("right", e.right)
    return out


def read_element(data: bytes, offset: int, ctx: GroupContext) -> "tuple[GroupElement, int]":
    """Decode one element record starting at `offset`; returns (element,
    next offset). Rejects wrong backend bytes, unknown side bytes, short
    payloads, and any representative outside the prime-order subgroup."""
    if len(data) < offset + 2:
        raise DecodeError("truncated element record")
    backend_byte, side_byte = data[offset], data[offset + 1]
    if backend_byte != ctx.backend_id.value:
        raise DecodeError(f"backend byte {backend_byte:#04x} does not match context")
    try:
        side = Side(side_byte)
    except ValueError:
        raise DecodeError(f"unknown side byte {side_byte:#04x}") from None
    if not ctx.sided and side != Side.DUAL:
        raise DecodeError("mock elements are always DUAL")
    end = offset + element_record_length(ctx, side)
    if len(data) < end:
        raise DecodeError("truncated element payload")
    pos = offset + 2
    if not ctx.sided:
        rep = ctx.deserialize_rep("left", data[pos:end])
        return GroupElement(ctx, Side.DUAL, rep, rep), end
    left = right = None
    if side.left_capable:
        nxt = pos + ctx.rep_byte_length("left")
        left = ctx.deserialize_rep("left", data[pos:nxt])
        pos = nxt
    if side.right_capable:
        nxt = pos + ctx.rep_byte_length("right")
        right = ctx.deserialize_rep("right", data[pos:nxt])
        pos = nxt
    elem = GroupElement(ctx, side, left, right)
    if side == Side.DUAL:
        from .base import dual_consistent

        if not dual_consistent(elem):
            raise DecodeError("DUAL representatives disagree on the discrete log")
    return elem, end


def deserialize_element(data: bytes, ctx: GroupContext) -> GroupElement:
    """Decode exactly one element; trailing bytes are an error."""
    elem, end = read_element(data, 0, ctx)
    if end != len(data):
        raise DecodeError("trailing bytes after element record")
    return elem
