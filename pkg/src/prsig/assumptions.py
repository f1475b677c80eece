"""Instance generators and public verifiers for the two Diffie-Hellman-type
problems underlying the schemes.

Flexible DH: given (g, A = g^a, B = g^b), a solution is a chain
(C_1..C_l, D'_1..D'_l, T) whose discrete logs satisfy
log(D'_j) = a * log(C_1)...log(C_j) and log(T) = b * log(D'_l). The chain is
publicly checkable with pairings alone — no exponent enters the verifier —
which is what makes the assumption falsifiable.

Modified CDH: compute g^(ab) from (g, g^a, g^(a^2), g^b); equivalently, find
h^(xy) from (h, h^x, h^(1/x), h^y). The converter between the two forms is a
pure relabeling of the tuple elements.

Generators also emit the sampled exponents as a test-only trapdoor so suites
can build reference solutions; trapdoors are never serialized with instances.
"""

from dataclasses import dataclass
from typing import Tuple

from .common import draw_blinding, prefix_products
from .errors import MalformedInstanceError, PlacementError, VerifyResult
from .groups import GroupContext, GroupElement, NonzeroScalar, pair

__all__ = [
    "FlexDhInstance",
    "FlexDhSolution",
    "McdhInstance",
    "McdhEquivInstance",
    "Trapdoor",
    "gen_flexdh",
    "solve_flexdh_with_trapdoor",
    "verify_flexdh",
    "gen_mcdh",
    "solve_mcdh_with_trapdoor",
    "verify_mcdh",
    "gen_mcdh_equiv",
    "solve_mcdh_equiv_with_trapdoor",
    "convert_mcdh_equiv",
    "convert_mcdh_trapdoor",
]


@dataclass(frozen=True)
class Trapdoor:
    """Instance exponents, kept only so tests can construct solutions."""

    a: NonzeroScalar
    b: NonzeroScalar


@dataclass(frozen=True)
class FlexDhInstance:
    g: GroupElement
    A: GroupElement  # g^a
    B: GroupElement  # g^b
    ell: int


@dataclass(frozen=True)
class FlexDhSolution:
    C: Tuple[GroupElement, ...]
    D: Tuple[GroupElement, ...]  # D[j] = g^(a c_1...c_(j+1))
    T: GroupElement  # g^(a b c_1...c_l)


@dataclass(frozen=True)
class McdhInstance:
    g: GroupElement
    A: GroupElement  # g^a
    A2: GroupElement  # g^(a^2)
    B: GroupElement  # g^b


@dataclass(frozen=True)
class McdhEquivInstance:
    h: GroupElement
    h_x: GroupElement
    h_inv_x: GroupElement  # h^(1/x)
    h_y: GroupElement


def gen_flexdh(ell: int, ctx: GroupContext, rng) -> Tuple[FlexDhInstance, Trapdoor]:
    """Fresh instance with uniform a, b in Z_p* (drawn in that order)."""
    if ell < 1:
        raise ValueError("ell must be at least 1")
    a, b = draw_blinding(ctx, rng, 2)
    g = ctx.generator
    return FlexDhInstance(g, g ** a, g ** b, ell), Trapdoor(a, b)


def solve_flexdh_with_trapdoor(inst: FlexDhInstance, td: Trapdoor, rng) -> FlexDhSolution:
    """Reference solution with random bases C_i = g^(c_i); test-only oracle.

    The trapdoor is checked against the instance (via the public key
    relation) before use.
    """
    g = inst.g
    if g ** td.a != inst.A or g ** td.b != inst.B:
        raise ValueError("trapdoor does not match instance")
    p = inst.g.ctx.order
    cs = draw_blinding(inst.g.ctx, rng, inst.ell)
    prefix = prefix_products(cs, p)  # prefix[j] = c_1...c_(j+1)
    c_elems = tuple(g ** c for c in cs)
    d_elems = tuple(g ** (int(td.a) * pc % p) for pc in prefix)
    t_elem = g ** (int(td.a) * int(td.b) * prefix[-1] % p)
    return FlexDhSolution(c_elems, d_elems, t_elem)


def verify_flexdh(inst: FlexDhInstance, sol: FlexDhSolution) -> VerifyResult:
    """Pairing-only checker: e(C_1, A) = e(D'_1, g); e(D'_j, g) =
    e(D'_(j-1), C_j) up the chain; e(D'_l, B) = e(T, g). Every component must
    be outside {identity} for the chain checks to mean anything."""
    if len(sol.C) != inst.ell or len(sol.D) != inst.ell:
        return VerifyResult.reject(
            f"expected {inst.ell} C and D components, got {len(sol.C)} and {len(sol.D)}"
        )
    for name, elems in (("C", sol.C), ("D", sol.D), ("T", (sol.T,))):
        for idx, e in enumerate(elems):
            if e.is_identity():
                return VerifyResult.reject(f"identity component {name}[{idx}]")
    g = inst.g
    try:
        if pair(sol.C[0], inst.A) != pair(sol.D[0], g):
            return VerifyResult.reject("equation 0 (base link C_1/D_1) failed")
        for j in range(1, inst.ell):
            if pair(sol.D[j], g) != pair(sol.D[j - 1], sol.C[j]):
                return VerifyResult.reject(f"equation {j} (chain link D_{j + 1}) failed")
        if pair(sol.D[-1], inst.B) != pair(sol.T, g):
            return VerifyResult.reject(f"equation {inst.ell} (target link T) failed")
    except PlacementError as exc:
        return VerifyResult.reject(f"component not usable on required pairing side: {exc}")
    return VerifyResult.accept()


def _check_mcdh_instance(inst: McdhInstance) -> None:
    """The published square must be consistent: e(A, A) = e(A2, g)."""
    for name, e in (("g", inst.g), ("A", inst.A), ("A2", inst.A2), ("B", inst.B)):
        if e.is_identity():
            raise MalformedInstanceError(f"identity component {name}")
    if pair(inst.A, inst.A) != pair(inst.A2, inst.g):
        raise MalformedInstanceError("e(A, A) != e(A2, g): published square is inconsistent")


def gen_mcdh(ctx: GroupContext, rng) -> Tuple[McdhInstance, Trapdoor]:
    a, b = draw_blinding(ctx, rng, 2)
    g = ctx.generator
    a2 = NonzeroScalar(int(a) * int(a) % ctx.order, ctx.order)
    return McdhInstance(g, g ** a, g ** a2, g ** b), Trapdoor(a, b)


def solve_mcdh_with_trapdoor(inst: McdhInstance, td: Trapdoor) -> GroupElement:
    return inst.A ** td.b  # g^(ab)


def verify_mcdh(inst: McdhInstance, candidate: GroupElement) -> VerifyResult:
    """Accept iff e(A, B) = e(candidate, g); raises MalformedInstanceError
    when the instance itself is inconsistent."""
    _check_mcdh_instance(inst)
    try:
        if pair(inst.A, inst.B) != pair(candidate, inst.g):
            return VerifyResult.reject("e(A, B) != e(candidate, g)")
    except PlacementError as exc:
        return VerifyResult.reject(f"candidate not usable on required pairing side: {exc}")
    return VerifyResult.accept()


def gen_mcdh_equiv(ctx: GroupContext, rng) -> Tuple[McdhEquivInstance, Trapdoor]:
    """Equivalent-form tuple (h, h^x, h^(1/x), h^y) with h the context
    generator; the trapdoor carries (x, y) in its (a, b) slots."""
    x, y = draw_blinding(ctx, rng, 2)
    h = ctx.generator
    return McdhEquivInstance(h, h ** x, h ** x.inverse(), h ** y), Trapdoor(x, y)


def solve_mcdh_equiv_with_trapdoor(inst: McdhEquivInstance, td: Trapdoor) -> GroupElement:
    return inst.h_x ** td.b  # h^(xy)


def convert_mcdh_equiv(inst: McdhEquivInstance) -> McdhInstance:
    """Relabel (h, h^x, h^(1/x), h^y) as a standard instance over g = h^(1/x):
    then h = g^x, h^x = g^(x^2), h^y = g^(xy), so (g, A, A2, B) :=
    (h^(1/x), h, h^x, h^y) with a = x, b = xy — and the answer element is
    unchanged: h^(xy) = g^(ab)."""
    return McdhInstance(inst.h_inv_x, inst.h, inst.h_x, inst.h_y)


def convert_mcdh_trapdoor(inst: McdhEquivInstance, td: Trapdoor) -> Trapdoor:
    """(x, y) -> (a, b) = (x, xy) for the converted instance."""
    p = inst.h.ctx.order
    return Trapdoor(td.a, NonzeroScalar(int(td.a) * int(td.b) % p, p))
