import dataclasses
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

import oracle
from conftest import ScriptedRng, values
from prsig import (
    GroupElement,
    LevelExhaustedError,
    LeveledSignature,
    MockGroup,
    NonzeroScalar,
    Side,
    VerificationFailedError,
    waters,
)
from prsig.waters import WatersMessage, WatersParams, waters_hash

P = 101

M10 = WatersMessage.from_bits("10")


def make_params(ctx, h=2, u=(3, 4, 5), max_level=6):
    """Fixed desk-scale parameters: h = g^2, (u', u_1, u_2) = g^(3,4,5)."""
    return WatersParams(
        ctx, ctx.element(h), tuple(ctx.element(v) for v in u), len(u) - 1, max_level
    )


@pytest.fixture
def params(mock_ctx):
    return make_params(mock_ctx)


def keypair(ctx, x):
    return waters.KeyPair(NonzeroScalar(x, ctx.order), ctx.generator ** x)


class TestSetup:
    def test_stub_rng_trace(self, mock_ctx):
        p = waters.setup(mock_ctx, 2, 6, ScriptedRng([2, 3, 4, 5]))
        assert p.h == mock_ctx.element(2)
        assert tuple(u.left for u in p.u) == (3, 4, 5)

    def test_vector_length(self, mock_ctx, rng):
        assert len(waters.setup(mock_ctx, 9, 6, rng).u) == 10

    def test_params_hold_no_scalars(self):
        field_types = {f.name: f.type for f in dataclasses.fields(WatersParams)}
        assert "Scalar" not in str(field_types.values())
        assert {"h", "u"} <= set(field_types)

    def test_deterministic_under_fixed_trace(self, mock_ctx):
        trace = [9, 8, 7, 6, 5, 4]  # h, u', u_1..u_4
        a = waters.setup(mock_ctx, 4, 6, ScriptedRng(list(trace)))
        b = waters.setup(mock_ctx, 4, 6, ScriptedRng(list(trace)))
        assert a == b

    def test_bad_arguments(self, mock_ctx, rng):
        with pytest.raises(ValueError):
            waters.setup(mock_ctx, 0, 6, rng)
        with pytest.raises(ValueError):
            waters.setup(mock_ctx, 4, 0, rng)


class TestWatersHash:
    def test_worked_example(self, params):
        assert waters_hash(params, M10) == params.ctx.element(7)  # 3 + 4

    def test_all_zero_bits_gives_u_prime(self, params):
        assert waters_hash(params, WatersMessage.from_bits("00")) == params.u[0]

    def test_all_one_bits_gives_full_product(self, params):
        expected = params.u[0] * params.u[1] * params.u[2]
        assert waters_hash(params, WatersMessage.from_bits("11")) == expected

    def test_length_mismatch_rejected(self, params):
        with pytest.raises(ValueError):
            waters_hash(params, WatersMessage.from_bits("101"))

    def test_bytes_are_digested(self, params):
        direct = waters_hash(params, WatersMessage.digest(b"msg", params.n))
        assert waters_hash(params, b"msg") == direct

    @given(st.lists(st.sampled_from([0, 1]), min_size=2, max_size=2), st.integers(0, 1))
    def test_affine_in_bit_flips(self, bits, idx):
        ctx = MockGroup(P)
        p = make_params(ctx)
        flipped = list(bits)
        flipped[idx] ^= 1
        u_i = p.u[idx + 1]
        factor = u_i if flipped[idx] else u_i.inverse()
        assert waters_hash(p, WatersMessage(tuple(flipped))) == waters_hash(
            p, WatersMessage(tuple(bits))
        ) * factor

    def test_digest_is_deterministic_and_n_bits(self):
        m1 = WatersMessage.digest(b"data", 256)
        assert m1 == WatersMessage.digest(b"data", 256)
        assert len(m1.bits) == 256
        assert len(WatersMessage.digest(b"data", 300).bits) == 300
        assert m1 != WatersMessage.digest(b"datb", 256)


class TestSign:
    def test_level1_example(self, params):
        sig = waters.sign(params, 1, NonzeroScalar(7, P), M10, ScriptedRng([6]))
        assert values(sig) == [56, 6]

    def test_level2_example(self, params):
        sig = waters.sign(params, 2, NonzeroScalar(7, P), M10, ScriptedRng([6, 4]))
        assert values(sig) == [98, 6, 28, 4]

    def test_matches_oracle_at_every_level(self, params):
        rng = random.Random(23)
        fm = 7  # F(10) = 3 + 4
        for level in range(1, 7):
            x = rng.randrange(1, P)
            r = rng.randrange(1, P)
            ts = [rng.randrange(1, P) for _ in range(level - 1)]
            sig = waters.sign(params, level, NonzeroScalar(x, P), M10, ScriptedRng([r] + ts))
            assert values(sig) == oracle.waters_sign(P, x, 2, fm, r, ts)

    def test_sign_verify_round_trip_all_levels(self, params, rng):
        for level in range(1, 7):
            for _ in range(20):
                kp = waters.keygen(params, rng)
                msg = WatersMessage.from_bits([rng.randrange(2), rng.randrange(2)])
                sig = waters.sign(params, level, kp.secret, msg, rng)
                assert waters.verify(params, level, msg, sig, kp.public)

    def test_arbitrary_bytes_round_trip(self, mock_ctx, rng):
        p = waters.setup(mock_ctx, 16, 6, rng)
        kp = waters.keygen(p, rng)
        sig = waters.sign(p, 3, kp.secret, b"arbitrary bytes, any length", rng)
        assert waters.verify(p, 3, b"arbitrary bytes, any length", sig, kp.public)
        assert not waters.verify(p, 3, b"arbitrary bytes, any length!", sig, kp.public)

    def test_length_law(self, params, rng):
        kp = waters.keygen(params, rng)
        for level in range(1, 7):
            assert len(waters.sign(params, level, kp.secret, M10, rng).elems) == 2 * level

    def test_level_out_of_range(self, params, rng):
        kp = waters.keygen(params, rng)
        with pytest.raises(ValueError):
            waters.sign(params, 7, kp.secret, M10, rng)


class TestVerify:
    def test_accepts_level2_vector(self, params):
        sig = LeveledSignature(2, tuple(params.ctx.element(v) for v in (98, 6, 28, 4)))
        assert waters.verify(params, 2, M10, sig, params.ctx.element(7))

    def test_rejects_wrong_key(self, params):
        sig = LeveledSignature(2, tuple(params.ctx.element(v) for v in (98, 6, 28, 4)))
        verdict = waters.verify(params, 2, M10, sig, params.ctx.element(5))
        assert not verdict and "anchor" in verdict.reason

    def test_accepts_level1_vector(self, params):
        sig = LeveledSignature(1, tuple(params.ctx.element(v) for v in (56, 6)))
        assert waters.verify(params, 1, M10, sig, params.ctx.element(7))

    def test_rejects_wrong_level_claim(self, params):
        sig = LeveledSignature(3, tuple(params.ctx.element(v) for v in (98, 6, 28, 4)))
        assert not waters.verify(params, 3, M10, sig, params.ctx.element(7))

    def test_rejects_identity_in_blinded_part(self, params):
        vec = (98, 6, 0, 4)
        sig = LeveledSignature(2, tuple(params.ctx.element(v) for v in vec))
        verdict = waters.verify(params, 2, M10, sig, params.ctx.element(7))
        assert not verdict and "identity" in verdict.reason

    def test_agrees_with_oracle_on_random_vectors(self, params):
        rng = random.Random(29)
        for _ in range(300):
            level = rng.randrange(1, 5)
            vec = [rng.randrange(0, P) for _ in range(2 * level)]
            pk = rng.randrange(1, P)
            sig = LeveledSignature(level, tuple(params.ctx.element(v) for v in vec))
            got = bool(waters.verify(params, level, M10, sig, params.ctx.element(pk)))
            assert got == oracle.waters_verify(P, level, 2, 7, pk, vec)


class TestResign:
    def test_level1_worked_example(self, params):
        kp_i, kp_j = keypair(params.ctx, 7), keypair(params.ctx, 5)
        rk = waters.rekeygen(kp_i.public, kp_j.secret)
        assert rk.key == params.ctx.element(62)
        sig = LeveledSignature(1, tuple(params.ctx.element(v) for v in (56, 6)))
        out = waters.resign(
            params, M10, sig, rk, kp_i.public, kp_j.public, ScriptedRng([3, 10])
        )
        assert values(out) == [36, 28, 21, 85]
        assert waters.verify(params, 2, M10, out, kp_j.public)
        assert not waters.verify(params, 2, M10, out, kp_i.public)

    def test_matches_oracle_at_every_level(self, params):
        rng = random.Random(37)
        for level in range(2, 6):
            xi, xj = 7, 5
            draws = [rng.randrange(1, P) for _ in range(level)]
            sig = waters.sign(params, level, NonzeroScalar(xi, P), M10, ScriptedRng(draws))
            rk = waters.rekeygen(params.ctx.element(xi), NonzeroScalar(xj, P))
            r_new = rng.randrange(1, P)
            rs = [rng.randrange(1, P) for _ in range(level)]
            out = waters.resign(
                params, M10, sig, rk, params.ctx.element(xi), params.ctx.element(xj),
                ScriptedRng([r_new] + rs),
            )
            assert values(out) == oracle.waters_resign(
                P, values(sig), 7, xi, rk.key.left, r_new, rs
            )

    def test_distribution_identity(self, params):
        # fresh sign with r'' = r r_0...r_l + r', t~_0 = r_0 x_i/x_j, t~_k = r_k t_k
        rng = random.Random(43)
        for level in range(1, 6):
            xi, xj = 7, 5
            r = rng.randrange(1, P)
            ts = [rng.randrange(1, P) for _ in range(level - 1)]
            sig = waters.sign(params, level, NonzeroScalar(xi, P), M10, ScriptedRng([r] + ts))
            rk = waters.rekeygen(params.ctx.element(xi), NonzeroScalar(xj, P))
            r_new = rng.randrange(1, P)
            if level == 1:
                t = rng.randrange(1, P)
                out = waters.resign(
                    params, M10, sig, rk, params.ctx.element(xi), params.ctx.element(xj),
                    ScriptedRng([t, r_new]),
                )
                r_sub = (r * t + r_new) % P
                t_subst = [t * xi * pow(xj, -1, P) % P]
            else:
                rs = [rng.randrange(1, P) for _ in range(level)]
                out = waters.resign(
                    params, M10, sig, rk, params.ctx.element(xi), params.ctx.element(xj),
                    ScriptedRng([r_new] + rs),
                )
                r_sub = (r * oracle.prod(rs, P) + r_new) % P
                t_subst = [rs[0] * xi * pow(xj, -1, P) % P] + [
                    r_k * t_k % P for r_k, t_k in zip(rs[1:], ts)
                ]
            if r_sub == 0:
                continue  # fresh sign draws from Z_p*; the identity still holds
            fresh = waters.sign(
                params, level + 1, NonzeroScalar(xj, P), M10, ScriptedRng([r_sub] + t_subst)
            )
            assert values(out) == values(fresh)

    def test_tampered_input_raises(self, params, rng):
        kp_i, kp_j = waters.keygen(params, rng), waters.keygen(params, rng)
        rk = waters.rekeygen(kp_i.public, kp_j.secret)
        sig = waters.sign(params, 2, kp_i.secret, M10, rng)
        bad = LeveledSignature(2, sig.elems[:2] + (sig.elems[2] * params.ctx.generator, sig.elems[3]))
        with pytest.raises(VerificationFailedError):
            waters.resign(params, M10, bad, rk, kp_i.public, kp_j.public, rng)

    def test_level_exhausted(self, params, rng):
        kp_i, kp_j = waters.keygen(params, rng), waters.keygen(params, rng)
        rk = waters.rekeygen(kp_i.public, kp_j.secret)
        sig = waters.sign(params, 6, kp_i.secret, M10, rng)
        with pytest.raises(LevelExhaustedError):
            waters.resign(params, M10, sig, rk, kp_i.public, kp_j.public, rng)

    def test_chain_through_distinct_keys(self, params):
        rng = random.Random(47)
        xs = random.Random(101).sample(range(1, P), 6)
        keys = [keypair(params.ctx, x) for x in xs]
        sig = waters.sign(params, 1, keys[0].secret, M10, rng)
        for i in range(5):
            rk = waters.rekeygen(keys[i].public, keys[i + 1].secret)
            sig = waters.resign(params, M10, sig, rk, keys[i].public, keys[i + 1].public, rng)
        assert sig.level == 6 and len(sig.elems) == 12
        assert waters.verify(params, 6, M10, sig, keys[5].public)
        for intermediate in keys[:5]:
            assert not waters.verify(params, 6, M10, sig, intermediate.public)


class TestTamperRejection:
    def test_every_position_every_level(self, params):
        rng = random.Random(53)
        for level in range(1, 7):
            kp = waters.keygen(params, rng)
            sig = waters.sign(params, level, kp.secret, M10, rng)
            for pos in range(len(sig.elems)):
                delta = params.ctx.generator ** rng.randrange(1, P)
                elems = list(sig.elems)
                elems[pos] = elems[pos] * delta
                assert not waters.verify(
                    params, level, M10, LeveledSignature(level, tuple(elems)), kp.public
                ), f"level {level} position {pos}"


class TestCurvePlacement:
    def test_setup_elements_are_dual(self, curve_ctx, rng):
        p = waters.setup(curve_ctx, 4, 6, rng)
        assert p.h.side == Side.DUAL
        assert all(u.side == Side.DUAL for u in p.u)

    def test_signature_side_table(self, curve_ctx, rng):
        p = waters.setup(curve_ctx, 4, 6, rng)
        kp = waters.keygen(p, rng)
        for level in (1, 2, 4):
            sig = waters.sign(p, level, kp.secret, b"sides", rng)
            assert waters.verify(p, level, b"sides", sig, kp.public)
            assert sig.elems[0].side == Side.LEFT and sig.elems[1].side == Side.LEFT
            for idx in range(2, level + 1):
                assert sig.elems[idx].side == Side.DUAL
            for idx in range(level + 1, 2 * level):
                assert sig.elems[idx].side == Side.RIGHT

    def test_resign_round_trip(self, curve_ctx, rng):
        p = waters.setup(curve_ctx, 4, 6, rng)
        kp_i, kp_j = waters.keygen(p, rng), waters.keygen(p, rng)
        rk = waters.rekeygen(kp_i.public, kp_j.secret)
        sig = waters.sign(p, 1, kp_i.secret, b"m", rng)
        out = waters.resign(p, b"m", sig, rk, kp_i.public, kp_j.public, rng)
        assert waters.verify(p, 2, b"m", out, kp_j.public)
        assert not waters.verify(p, 2, b"m", out, kp_i.public)
