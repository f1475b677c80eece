"""Bilinear-group contract with mock (oracle) and BLS12-381 backends."""

from .base import (
    Backend,
    GroupContext,
    GroupElement,
    NonzeroScalar,
    Scalar,
    Side,
    TargetElement,
    dual_consistent,
    group_exp,
    group_mul,
    hash_to_group,
    pair,
    random_nonzero_scalar,
)
from .curve import CurveGroup
from .mock import DEFAULT_MOCK_ORDER, MockGroup
from .wire import deserialize_element, element_record_length, read_element, serialize_element

__all__ = [
    "Backend",
    "CurveGroup",
    "DEFAULT_MOCK_ORDER",
    "GroupContext",
    "GroupElement",
    "MockGroup",
    "NonzeroScalar",
    "Scalar",
    "Side",
    "TargetElement",
    "deserialize_element",
    "dual_consistent",
    "element_record_length",
    "group_exp",
    "group_mul",
    "hash_to_group",
    "pair",
    "random_nonzero_scalar",
    "read_element",
    "serialize_element",
]
