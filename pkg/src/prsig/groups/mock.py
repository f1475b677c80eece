"""Transparent mock backend: the group is (Z_p, +) with generator 1.

Exponent arithmetic is fully visible — an element *is* its discrete log —
which makes the backend a brute-force oracle for every pairing-product
equation used by the schemes:

    g <-> 1, a*b <-> (a + b) mod p, a**k <-> (a * k) mod p,
    pair(a, b) <-> (a * b) mod p in the target copy of Z_p.

The structure is bilinear and non-degenerate but offers no security at all;
it exists so tests can check equations against plain modular arithmetic.
Every element is DUAL: there is only one representation, so placement
restrictions never bite here.
"""

import hashlib

import gmpy2

from ..errors import DecodeError
from .base import Backend, GroupContext, GroupElement, Side, TargetElement

DEFAULT_MOCK_ORDER = 101

_VALUE_BYTES = 4


class MockGroup(GroupContext):
    backend_id = Backend.MOCK
    sided = False

    def __init__(self, order: int = DEFAULT_MOCK_ORDER):
        if order < 3 or not gmpy2.is_prime(order):
            raise ValueError(f"mock group order must be an odd prime, got {order}")
        if order.bit_length() > 8 * _VALUE_BYTES:
            raise ValueError("mock group order does not fit the 4-byte wire format")
        self.order = int(order)

    @property
    def generator(self) -> GroupElement:
        return GroupElement(self, Side.DUAL, 1, 1)

    def identity(self) -> GroupElement:
        return GroupElement(self, Side.DUAL, 0, 0)

    def element(self, exponent: int) -> GroupElement:
        """g**exponent — handy because exponents are transparent here."""
        v = exponent % self.order
        return GroupElement(self, Side.DUAL, v, v)

    def hash_to_group(self, message: bytes) -> GroupElement:
        """SHA-256 digest reduced into Z_p; a 4-byte retry counter is
        appended and the hash recomputed while the result is the identity."""
        v = int.from_bytes(hashlib.sha256(message).digest(), "big") % self.order
        counter = 0
        while v == 0:
            counter += 1
            suffixed = message + counter.to_bytes(4, "big")
            v = int.from_bytes(hashlib.sha256(suffixed).digest(), "big") % self.order
        return self.element(v)

    # -- representative operations ----------------------------------------

    def rep_mul(self, slot, a, b):
        return (a + b) % self.order

    def rep_exp(self, slot, rep, k):
        return rep * k % self.order

    def rep_eq(self, slot, a, b):
        return a == b

    def rep_is_identity(self, slot, rep):
        return rep == 0

    def rep_fingerprint(self, elem):
        return elem.left

    def pair_reps(self, left_rep, right_rep):
        return left_rep * right_rep % self.order

    def gt_mul(self, a, b):
        return (a + b) % self.order

    def gt_exp(self, rep, k):
        return rep * k % self.order

    def gt_eq(self, a, b):
        return a == b

    def gt_is_identity(self, rep):
        return rep == 0

    def gt_identity(self) -> TargetElement:
        return TargetElement(self, 0)

    # -- wire format --------------------------------------------------------

    def rep_byte_length(self, slot):
        return _VALUE_BYTES

    def serialize_rep(self, slot, rep) -> bytes:
        return rep.to_bytes(_VALUE_BYTES, "big")

    def deserialize_rep(self, slot, data: bytes):
        if len(data) != _VALUE_BYTES:
            raise DecodeError("mock element payload must be 4 bytes")
        v = int.from_bytes(data, "big")
        if v >= self.order:
            raise DecodeError(f"value {v} outside the order-{self.order} group")
        return v
