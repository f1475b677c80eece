"""BLS12-381 backend: the symmetric contract over an asymmetric curve.

Modern pairing curves have two distinct source groups, so the symmetric
interface is realized by elements that carry a G1 representative (LEFT),
a G2 representative (RIGHT), or both with equal discrete log (DUAL).
Hashing lands in G1 only — producing matching G1/G2 points with the same
unknown log is infeasible — so hashed elements are LEFT.

Group arithmetic and the ate pairing come from the compiled `prsig._pairing`
extension (arkworks); see rust/pairing and scripts/build_curve_backend.sh.
"""

from functools import lru_cache

from ..errors import DecodeError
from .base import Backend, GroupContext, GroupElement, Side, TargetElement

HASH_DST = b"PRSIG-V01-BLS12381G1_XMD:SHA-256_SSWU_RO_"

_G1_BYTES = 48
_G2_BYTES = 96


@lru_cache(maxsize=1)
def _ext():
    try:
        from .. import _pairing
    except ImportError as exc:
        raise ImportError(
            "curve backend unavailable: the prsig._pairing extension is not built. "
            "Run scripts/build_curve_backend.sh (requires a Rust toolchain)."
        ) from exc
    return _pairing


class CurveGroup(GroupContext):
    backend_id = Backend.CURVE
    sided = True

    def __init__(self):
        ext = _ext()
        self.order = int(ext.group_order_hex(), 16)
        self._ext = ext
        self._g = GroupElement(self, Side.DUAL, ext.G1.generator(), ext.G2.generator())

    @property
    def generator(self) -> GroupElement:
        return self._g

    def identity(self) -> GroupElement:
        return GroupElement(self, Side.DUAL, self._ext.G1.identity(), self._ext.G2.identity())

    def hash_to_group(self, message: bytes) -> GroupElement:
        """Hash-to-G1 (LEFT element). The negligible identity case re-derives
        with a 4-byte retry counter appended, like the mock backend."""
        point = self._ext.G1.hash(message, HASH_DST)
        counter = 0
        while point.is_identity():
            counter += 1
            point = self._ext.G1.hash(message + counter.to_bytes(4, "big"), HASH_DST)
        return GroupElement(self, Side.LEFT, point, None)

    # -- representative operations ----------------------------------------

    def _scalar_bytes(self, k: int) -> bytes:
        return (k % self.order).to_bytes(32, "big")

    def rep_mul(self, slot, a, b):
        return a.add(b)

    def rep_exp(self, slot, rep, k):
        return rep.mul(self._scalar_bytes(k))

    def rep_eq(self, slot, a, b):
        return a.eq(b)

    def rep_is_identity(self, slot, rep):
        return rep.is_identity()

    def rep_fingerprint(self, elem):
        if elem.side.left_capable:
            return bytes(elem.left.to_bytes())
        return bytes(elem.right.to_bytes())

    def pair_reps(self, left_rep, right_rep):
        return self._ext.pair(left_rep, right_rep)

    def gt_mul(self, a, b):
        return a.mul(b)

    def gt_exp(self, rep, k):
        return rep.pow(self._scalar_bytes(k))

    def gt_eq(self, a, b):
        return a.eq(b)

    def gt_is_identity(self, rep):
        return rep.is_identity()

    def gt_identity(self) -> TargetElement:
        return TargetElement(self, self._ext.Gt.identity())

    # -- wire format --------------------------------------------------------

    def rep_byte_length(self, slot):
        return _G1_BYTES if slot == "left" else _G2_BYTES

    def serialize_rep(self, slot, rep) -> bytes:
        return bytes(rep.to_bytes())

    def deserialize_rep(self, slot, data: bytes):
        cls = self._ext.G1 if slot == "left" else self._ext.G2
        try:
            return cls.from_bytes(data)
        except ValueError as exc:
            raise DecodeError(str(exc)) from None
