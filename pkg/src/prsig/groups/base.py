"""Symmetric bilinear-group contract.

The schemes are written against a symmetric pairing e: G x G -> GT over a
prime-order group. Two backends realize the contract:

* a transparent mock over Z_p (addition as the group law, pairing as the
  product of discrete logs) used as a brute-force oracle in tests, and
* an adapter over an asymmetric pairing curve (BLS12-381) where an element
  carries a G1 representative, a G2 representative, or both.

The `side` tag records which pairing slots an element can occupy: LEFT
elements can be the first pairing argument, RIGHT the second, DUAL either.
On the mock backend every element is DUAL and placement never fails.

All values are immutable and all operations are pure; randomness is always
injected by the caller, so any object is safe to share between threads.
"""

import enum
from abc import ABC, abstractmethod
from dataclasses import dataclass

from ..errors import PlacementError


class Backend(enum.Enum):
    MOCK = 0x01
    CURVE = 0x02


class Side(enum.Enum):
    LEFT = 0x01
    RIGHT = 0x02
    DUAL = 0x03

    @property
    def left_capable(self) -> bool:
        return self in (Side.LEFT, Side.DUAL)

    @property
    def right_capable(self) -> bool:
        return self in (Side.RIGHT, Side.DUAL)


def _meet(a: Side, b: Side) -> Side:
    """Intersection of side capabilities; LEFT * RIGHT has none."""
    if a == b:
        return a
    if Side.DUAL in (a, b):
        return b if a == Side.DUAL else a
    raise PlacementError(f"incompatible sides {a.name} * {b.name}")


@dataclass(frozen=True)
class Scalar:
    """Exponent in Z_p for the group order p of some context."""

    value: int
    modulus: int

    def __post_init__(self):
        if not 0 <= self.value < self.modulus:
            raise ValueError(f"scalar {self.value} not reduced mod {self.modulus}")

    def __int__(self) -> int:
        return self.value

    def __mul__(self, other) -> "Scalar":
        return Scalar(self.value * int(other) % self.modulus, self.modulus)

    def __add__(self, other) -> "Scalar":
        return Scalar((self.value + int(other)) % self.modulus, self.modulus)

    def inverse(self) -> "NonzeroScalar":
        return NonzeroScalar(pow(self.value, -1, self.modulus), self.modulus)


class NonzeroScalar(Scalar):
    """Scalar constrained to Z_p*; blinding and key exponents live here."""

    def __post_init__(self):
        super().__post_init__()
        if self.value == 0:
            raise ValueError("scalar must be nonzero")


def random_nonzero_scalar(ctx: "GroupContext", rng) -> NonzeroScalar:
    """Uniform draw from Z_p*; zero draws are rejection-sampled away.

    `rng` is any object with `randrange(n)`, e.g. `random.SystemRandom()`
    or a deterministic `random.Random(seed)` in tests.
    """
    while True:
        v = rng.randrange(ctx.order)
        if v != 0:
            return NonzeroScalar(v, ctx.order)


class GroupElement:
    """Opaque member of the source group, tagged with its pairing sides.

    `left` / `right` hold the backend representatives for the first and
    second pairing slot; exactly the slots allowed by `side` are populated.
    """

    __slots__ = ("ctx", "side", "left", "right")

    def __init__(self, ctx: "GroupContext", side: Side, left, right):
        if side.left_capable != (left is not None) or side.right_capable != (right is not None):
            raise ValueError("side tag does not match populated representatives")
        object.__setattr__(self, "ctx", ctx)
        object.__setattr__(self, "side", side)
        object.__setattr__(self, "left", left)
        object.__setattr__(self, "right", right)

    def __setattr__(self, *_):
        raise AttributeError("group elements are immutable")

    def __mul__(self, other: "GroupElement") -> "GroupElement":
        """Group law; the result keeps the sides both operands support."""
        if self.ctx != other.ctx:
            raise ValueError("elements from different contexts")
        side = _meet(self.side, other.side)
        left = self.ctx.rep_mul("left", self.left, other.left) if side.left_capable else None
        right = self.ctx.rep_mul("right", self.right, other.right) if side.right_capable else None
        return GroupElement(self.ctx, side, left, right)

    def __pow__(self, exponent) -> "GroupElement":
        k = int(exponent) % self.ctx.order
        left = self.ctx.rep_exp("left", self.left, k) if self.side.left_capable else None
        right = self.ctx.rep_exp("right", self.right, k) if self.side.right_capable else None
        return GroupElement(self.ctx, self.side, left, right)

    def inverse(self) -> "GroupElement":
        return self ** (self.ctx.order - 1)

    def restrict(self, side: Side) -> "GroupElement":
        """Drop capabilities down to `side` (no-op on side-less backends)."""
        if not self.ctx.sided:
            return self
        _meet(self.side, side)  # raises if the capability is absent
        return GroupElement(
            self.ctx,
            side,
            self.left if side.left_capable else None,
            self.right if side.right_capable else None,
        )

    def is_identity(self) -> bool:
        slot, rep = ("left", self.left) if self.side.left_capable else ("right", self.right)
        return self.ctx.rep_is_identity(slot, rep)

    def __eq__(self, other) -> bool:
        if not isinstance(other, GroupElement):
            return NotImplemented
        if self.ctx != other.ctx or self.side != other.side:
            return False
        if self.side.left_capable and not self.ctx.rep_eq("left", self.left, other.left):
            return False
        if self.side.right_capable and not self.ctx.rep_eq("right", self.right, other.right):
            return False
        return True

    def __hash__(self):
        return hash((self.ctx.backend_id, self.side, self.ctx.rep_fingerprint(self)))

    def __repr__(self):
        return f"GroupElement({self.ctx.backend_id.name}, {self.side.name})"


class TargetElement:
    """Member of the order-p target group GT."""

    __slots__ = ("ctx", "rep")

    def __init__(self, ctx: "GroupContext", rep):
        object.__setattr__(self, "ctx", ctx)
        object.__setattr__(self, "rep", rep)

    def __setattr__(self, *_):
        raise AttributeError("target elements are immutable")

    def __mul__(self, other: "TargetElement") -> "TargetElement":
        if self.ctx != other.ctx:
            raise ValueError("elements from different contexts")
        return TargetElement(self.ctx, self.ctx.gt_mul(self.rep, other.rep))

    def __pow__(self, exponent) -> "TargetElement":
        return TargetElement(self.ctx, self.ctx.gt_exp(self.rep, int(exponent) % self.ctx.order))

    def is_identity(self) -> bool:
        return self.ctx.gt_is_identity(self.rep)

    def __eq__(self, other) -> bool:
        if not isinstance(other, TargetElement):
            return NotImplemented
        return self.ctx == other.ctx and self.ctx.gt_eq(self.rep, other.rep)

    def __hash__(self):
        return hash((self.ctx.backend_id, "gt"))

    def __repr__(self):
        return f"TargetElement({self.ctx.backend_id.name})"


class GroupContext(ABC):
    """Backend contract: prime group order, a fixed generator, and the raw
    representative operations the element wrappers delegate to."""

    backend_id: Backend
    order: int
    sided: bool  # whether LEFT/RIGHT restriction is meaningful

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, GroupContext)
            and self.backend_id == other.backend_id
            and self.order == other.order
        )

    def __hash__(self):
        return hash((self.backend_id, self.order))

    # -- contract surface -------------------------------------------------

    @property
    @abstractmethod
    def generator(self) -> GroupElement:
        """The public generator g (DUAL: usable on both pairing sides)."""

    @abstractmethod
    def identity(self) -> GroupElement:
        ...

    @abstractmethod
    def hash_to_group(self, message: bytes) -> GroupElement:
        """Deterministic hash into the group; never returns the identity."""

    # -- representative operations ----------------------------------------

    @abstractmethod
    def rep_mul(self, slot: str, a, b):
        ...

    @abstractmethod
    def rep_exp(self, slot: str, rep, k: int):
        ...

    @abstractmethod
    def rep_eq(self, slot: str, a, b) -> bool:
        ...

    @abstractmethod
    def rep_is_identity(self, slot: str, rep) -> bool:
        ...

    @abstractmethod
    def rep_fingerprint(self, elem: GroupElement):
        """Hashable token identifying the element value (for __hash__)."""

    @abstractmethod
    def pair_reps(self, left_rep, right_rep):
        ...

    @abstractmethod
    def gt_mul(self, a, b):
        ...

    @abstractmethod
    def gt_exp(self, rep, k: int):
        ...

    @abstractmethod
    def gt_eq(self, a, b) -> bool:
        ...

    @abstractmethod
    def gt_is_identity(self, rep) -> bool:
        ...

    @abstractmethod
    def gt_identity(self) -> TargetElement:
        ...

    # -- element wire format ----------------------------------------------

    @abstractmethod
    def serialize_rep(self, slot: str, rep) -> bytes:
        ...

    @abstractmethod
    def deserialize_rep(self, slot: str, data: bytes):
        ...

    @abstractmethod
    def rep_byte_length(self, slot: str) -> int:
        ...


def pair(u: GroupElement, v: GroupElement) -> TargetElement:
    """Bilinear map. `u` must be LEFT-capable and `v` RIGHT-capable."""
    if u.ctx != v.ctx:
        raise ValueError("elements from different contexts")
    if not u.side.left_capable:
        raise PlacementError("first pairing argument has no left representative")
    if not v.side.right_capable:
        raise PlacementError("second pairing argument has no right representative")
    return TargetElement(u.ctx, u.ctx.pair_reps(u.left, v.right))


def group_mul(a: GroupElement, b: GroupElement) -> GroupElement:
    return a * b


def group_exp(base: GroupElement, s) -> GroupElement:
    return base ** s


def hash_to_group(message: bytes, ctx: GroupContext) -> GroupElement:
    return ctx.hash_to_group(message)


def dual_consistent(e: GroupElement) -> bool:
    """Check that a DUAL element's two representatives share a discrete log:
    e(e_left, g) == e(g, e_right)."""
    if e.side != Side.DUAL:
        raise ValueError("dual consistency is defined for DUAL elements")
    g = e.ctx.generator
    return TargetElement(e.ctx, e.ctx.pair_reps(e.left, g.right)) == TargetElement(
        e.ctx, e.ctx.pair_reps(g.left, e.right)
    )
