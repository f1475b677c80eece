import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from prsig import DecodeError, MockGroup, Side
from prsig.groups import deserialize_element, element_record_length, serialize_element

P = 101


class TestMockWireFormat:
    def test_record_layout(self, mock_ctx):
        # backend byte 0x01, side byte (DUAL = 0x03), 4-byte big-endian value
        assert serialize_element(mock_ctx.element(91)) == bytes.fromhex("0103" + "0000005b")

    @given(st.integers(min_value=0, max_value=P - 1))
    def test_round_trip(self, v):
        ctx = MockGroup(P)
        e = ctx.element(v)
        assert deserialize_element(serialize_element(e), ctx) == e

    @given(st.integers(min_value=0, max_value=P - 1))
    def test_canonical_reencode(self, v):
        ctx = MockGroup(P)
        data = serialize_element(ctx.element(v))
        assert serialize_element(deserialize_element(data, ctx)) == data

    def test_bijection_on_the_whole_element_set(self, mock_ctx):
        encodings = set()
        for v in range(P):
            data = serialize_element(mock_ctx.element(v))
            assert deserialize_element(data, mock_ctx) == mock_ctx.element(v)
            assert serialize_element(deserialize_element(data, mock_ctx)) == data
            encodings.add(data)
        assert len(encodings) == P
        rng = random.Random(12)
        for _ in range(1000):
            e = mock_ctx.element(rng.randrange(P))
            assert deserialize_element(serialize_element(e), mock_ctx) == e

    def test_truncated_rejected(self, mock_ctx):
        data = serialize_element(mock_ctx.element(9))
        for cut in range(len(data)):
            with pytest.raises(DecodeError):
                deserialize_element(data[:cut], mock_ctx)

    def test_trailing_bytes_rejected(self, mock_ctx):
        data = serialize_element(mock_ctx.element(9)) + b"\x00"
        with pytest.raises(DecodeError):
            deserialize_element(data, mock_ctx)

    def test_out_of_group_value_rejected(self, mock_ctx):
        with pytest.raises(DecodeError):
            deserialize_element(bytes.fromhex("0103" + "00000065"), mock_ctx)  # 101 >= p

    def test_wrong_backend_byte_rejected(self, mock_ctx):
        with pytest.raises(DecodeError):
            deserialize_element(bytes.fromhex("0203" + "0000005b"), mock_ctx)

    def test_unknown_side_byte_rejected(self, mock_ctx):
        with pytest.raises(DecodeError):
            deserialize_element(bytes.fromhex("0104" + "0000005b"), mock_ctx)

    def test_non_dual_side_rejected_on_mock(self, mock_ctx):
        with pytest.raises(DecodeError):
            deserialize_element(bytes.fromhex("0101" + "0000005b"), mock_ctx)


class TestCurveWireFormat:
    def test_round_trip_all_sides(self, curve_ctx):
        rng = random.Random(3)
        g = curve_ctx.generator
        samples = [curve_ctx.identity(), curve_ctx.hash_to_group(b"round trip")]
        for _ in range(25):
            e = g ** rng.randrange(1, curve_ctx.order)
            samples.extend([e, e.restrict(Side.LEFT), e.restrict(Side.RIGHT)])
        for e in samples:
            data = serialize_element(e)
            back = deserialize_element(data, curve_ctx)
            assert back == e
            assert serialize_element(back) == data
            assert len(data) == element_record_length(curve_ctx, e.side)

    def test_record_lengths(self, curve_ctx):
        assert element_record_length(curve_ctx, Side.LEFT) == 2 + 48
        assert element_record_length(curve_ctx, Side.RIGHT) == 2 + 96
        assert element_record_length(curve_ctx, Side.DUAL) == 2 + 48 + 96

    def test_corrupt_point_rejected(self, curve_ctx):
        data = bytearray(serialize_element(curve_ctx.generator.restrict(Side.LEFT)))
        data[10] ^= 0x01
        with pytest.raises(DecodeError):
            deserialize_element(bytes(data), curve_ctx)

    def test_mismatched_dual_rejected(self, curve_ctx):
        # left rep of g^2 glued to right rep of g^3: valid points, unequal logs
        g = curve_ctx.generator
        record = (
            bytes([curve_ctx.backend_id.value, Side.DUAL.value])
            + serialize_element((g ** 2).restrict(Side.LEFT))[2:]
            + serialize_element((g ** 3).restrict(Side.RIGHT))[2:]
        )
        with pytest.raises(DecodeError):
            deserialize_element(record, curve_ctx)

    def test_truncated_rejected(self, curve_ctx):
        data = serialize_element(curve_ctx.generator)
        with pytest.raises(DecodeError):
            deserialize_element(data[:-1], curve_ctx)
