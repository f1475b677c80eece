"""Command-line front end.

One subcommand per scheme algorithm (setup, keygen, rekeygen, sign, resign,
verify), pairing checkers for the assumption tuples (check-flexdh,
check-mcdh), and a directed-path attestation demo (attest-path) showing that
a chain of translations is checkable with only the last checkpoint's key.

Exit codes: 0 accept/success, 1 verification reject, >= 2 malformed input or
refused operation.
"""

import json
import random
from dataclasses import dataclass
from pathlib import Path
from typing import Optional

import click

from . import assumptions, encoding, rom, waters
from .encoding import Scheme
from .errors import LevelExhaustedError, PrsigError, VerificationFailedError
from .groups import CurveGroup, GroupContext, MockGroup

EXIT_ACCEPT = 0
EXIT_REJECT = 1
EXIT_USAGE = 2


class UsageFailure(click.ClickException):
    exit_code = EXIT_USAGE


@dataclass
class CliConfig:
    scheme: str
    backend: str
    params_path: Optional[str]
    out_path: Optional[str]
    seed_hex: Optional[str]
    force_insecure_seed: bool
    mock_order: int

    @property
    def scheme_byte(self) -> Scheme:
        return Scheme.ROM if self.scheme == "rom" else Scheme.WATERS

    @property
    def module(self):
        return rom if self.scheme == "rom" else waters

    def context(self) -> GroupContext:
        if self.backend == "mock":
            return MockGroup(self.mock_order)
        return CurveGroup()

    def validate(self) -> "CliConfig":
        if self.seed_hex is not None and self.backend == "curve" and not self.force_insecure_seed:
            raise UsageFailure(
                "deterministic seeding on the curve backend is refused; "
                "pass --force-insecure-seed if you really want reproducible, "
                "insecure signatures"
            )
        return self

    def rng(self):
        if self.seed_hex is None:
            return random.SystemRandom()
        try:
            seed = int(self.seed_hex, 16)
        except ValueError:
            raise UsageFailure(f"--insecure-seed must be hex, got {self.seed_hex!r}") from None
        return random.Random(seed)

    def load_params(self):
        if self.params_path is None:
            raise UsageFailure("this command needs --params")
        return encoding.decode_params(_read(self.params_path), self.scheme_byte)

    def out(self) -> str:
        if self.out_path is None:
            raise UsageFailure("this command needs --out")
        return self.out_path


def _read(path: str) -> bytes:
    try:
        return Path(path).read_bytes()
    except OSError as exc:
        raise UsageFailure(f"cannot read {path}: {exc}") from None


def _write(path: str, data: bytes) -> None:
    try:
        Path(path).write_bytes(data)
    except OSError as exc:
        raise UsageFailure(f"cannot write {path}: {exc}") from None


def _fail_usage(exc: Exception) -> "UsageFailure":
    return UsageFailure(str(exc))


def _load_signature(cfg: CliConfig, path: str, ctx: GroupContext):
    return encoding.decode_signature(_read(path), ctx, cfg.scheme_byte)


def _load_public(cfg: CliConfig, path: str, ctx: GroupContext):
    return encoding.decode_public_key(_read(path), ctx, cfg.scheme_byte)


@click.group()
@click.option("--scheme", type=click.Choice(["rom", "waters"]), default="rom", show_default=True)
@click.option("--backend", type=click.Choice(["mock", "curve"]), default="mock", show_default=True)
@click.option("--params", "params_path", type=click.Path(), help="public parameters file")
@click.option("--out", "out_path", type=click.Path(), help="output file (or prefix for keygen)")
@click.option("--insecure-seed", "seed_hex", help="hex seed for deterministic randomness (test only)")
@click.option(
    "--force-insecure-seed",
    is_flag=True,
    help="allow --insecure-seed together with --backend curve",
)
@click.option(
    "--mock-order",
    type=int,
    default=101,
    show_default=True,
    help="group order for the mock backend (prime)",
)
@click.pass_context
def main(ctx, scheme, backend, params_path, out_path, seed_hex, force_insecure_seed, mock_order):
    """Multi-hop unidirectional proxy re-signatures."""
    ctx.obj = CliConfig(
        scheme, backend, params_path, out_path, seed_hex, force_insecure_seed, mock_order
    ).validate()


@main.command()
@click.option("--max-level", type=int, default=6, show_default=True)
@click.option("--bits", type=int, default=waters.DEFAULT_BITS, show_default=True,
              help="message bit length (Waters scheme only)")
@click.pass_obj
def setup(cfg: CliConfig, max_level, bits):
    """Generate public parameters."""
    try:
        gctx = cfg.context()
        if cfg.scheme == "rom":
            params = rom.setup(gctx, max_level)
        else:
            params = waters.setup(gctx, bits, max_level, cfg.rng())
        _write(cfg.out(), encoding.encode_params(cfg.scheme_byte, params))
    except (PrsigError, ValueError) as exc:
        raise _fail_usage(exc)
    click.echo(f"{cfg.scheme} parameters ({cfg.backend} backend, L={max_level}) -> {cfg.out()}")


@main.command()
@click.pass_obj
def keygen(cfg: CliConfig):
    """Generate a key pair; --out is used as a file prefix (.sk/.pk)."""
    try:
        params = cfg.load_params()
        pair_ = cfg.module.keygen(params, cfg.rng())
        prefix = cfg.out()
        _write(prefix + ".sk", encoding.encode_secret_key(cfg.scheme_byte, pair_.secret))
        _write(prefix + ".pk", encoding.encode_public_key(cfg.scheme_byte, pair_.public))
    except (PrsigError, ValueError) as exc:
        raise _fail_usage(exc)
    click.echo(f"key pair -> {prefix}.sk / {prefix}.pk")


@main.command()
@click.option("--source-pk", required=True, type=click.Path(), help="delegatee public key (signatures to translate)")
@click.option("--target-sk", required=True, type=click.Path(), help="delegator secret key (signatures to produce)")
@click.option("--source", default="source", show_default=True, help="label of the source signer")
@click.option("--target", default="target", show_default=True, help="label of the target signer")
@click.pass_obj
def rekeygen(cfg: CliConfig, source_pk, target_sk, source, target):
    """Derive the source->target translation key (non-interactive)."""
    try:
        params = cfg.load_params()
        public = _load_public(cfg, source_pk, params.ctx)
        secret = encoding.decode_secret_key(_read(target_sk), params.ctx, cfg.scheme_byte)
        rekey = cfg.module.rekeygen(public, secret, source, target)
        _write(cfg.out(), encoding.encode_resign_key(cfg.scheme_byte, rekey))
    except (PrsigError, ValueError) as exc:
        raise _fail_usage(exc)
    click.echo(f"translation key {source} -> {target} written to {cfg.out()}")


@main.command()
@click.option("--level", type=int, default=1, show_default=True)
@click.option("--sk", "sk_path", required=True, type=click.Path())
@click.option("--message", "message_path", required=True, type=click.Path())
@click.pass_obj
def sign(cfg: CliConfig, level, sk_path, message_path):
    """Sign a message file at the given level."""
    try:
        params = cfg.load_params()
        secret = encoding.decode_secret_key(_read(sk_path), params.ctx, cfg.scheme_byte)
        sig = cfg.module.sign(params, level, secret, _read(message_path), cfg.rng())
        _write(cfg.out(), encoding.encode_signature(cfg.scheme_byte, sig))
    except (PrsigError, ValueError) as exc:
        raise _fail_usage(exc)
    click.echo(f"level-{level} signature -> {cfg.out()}")


@main.command()
@click.option("--sig", "sig_path", required=True, type=click.Path())
@click.option("--rekey", "rekey_path", required=True, type=click.Path())
@click.option("--source-pk", required=True, type=click.Path())
@click.option("--target-pk", required=True, type=click.Path())
@click.option("--message", "message_path", required=True, type=click.Path())
@click.pass_obj
def resign(cfg: CliConfig, sig_path, rekey_path, source_pk, target_pk, message_path):
    """Translate a signature one level up onto the target key."""
    try:
        params = cfg.load_params()
        ctx = params.ctx
        sig = _load_signature(cfg, sig_path, ctx)
        rekey = encoding.decode_resign_key(_read(rekey_path), ctx, cfg.scheme_byte)
        src = _load_public(cfg, source_pk, ctx)
        tgt = _load_public(cfg, target_pk, ctx)
        out = cfg.module.resign(params, _read(message_path), sig, rekey, src, tgt, cfg.rng())
        _write(cfg.out(), encoding.encode_signature(cfg.scheme_byte, out))
    except (PrsigError, ValueError) as exc:
        raise _fail_usage(exc)
    click.echo(f"level-{out.level} signature -> {cfg.out()}")


@main.command()
@click.option("--level", type=int, required=True)
@click.option("--sig", "sig_path", required=True, type=click.Path())
@click.option("--pk", "pk_path", required=True, type=click.Path())
@click.option("--message", "message_path", required=True, type=click.Path())
@click.pass_context
def verify(ctx, level, sig_path, pk_path, message_path):
    """Check a signature; exits 0 on accept, 1 on reject, 2 on bad input."""
    cfg = ctx.obj
    try:
        params = cfg.load_params()
        sig = _load_signature(cfg, sig_path, params.ctx)
        public = _load_public(cfg, pk_path, params.ctx)
        verdict = cfg.module.verify(params, level, _read(message_path), sig, public)
    except (PrsigError, ValueError) as exc:
        raise _fail_usage(exc)
    if verdict:
        click.echo("ACCEPT")
        ctx.exit(EXIT_ACCEPT)
    click.echo(f"REJECT: {verdict.reason}")
    ctx.exit(EXIT_REJECT)


@main.command(name="attest-path")
@click.option("--manifest", "manifest_path", required=True, type=click.Path(),
              help="JSON path manifest (see README)")
@click.option("--hops-dir", type=click.Path(), default=None,
              help="directory for per-hop signature files (each hop is read back from disk)")
@click.pass_context
def attest_path(ctx, manifest_path, hops_dir):
    """Sign at the first checkpoint, translate along the path, and verify the
    final signature with only the last checkpoint's public key."""
    cfg = ctx.obj
    try:
        params = cfg.load_params()
        gctx = params.ctx
        manifest = json.loads(_read(manifest_path))
        checkpoints = manifest.get("checkpoints", [])
        if not checkpoints:
            raise UsageFailure("manifest needs at least one checkpoint")
        if len(checkpoints) > params.max_level:
            raise UsageFailure(
                f"path of {len(checkpoints) - 1} hops exceeds the bound "
                f"max_level - 1 = {params.max_level - 1}; refusing before signing"
            )
        message = _read(manifest["message"])
        names = [cp["name"] for cp in checkpoints]
        publics = [_load_public(cfg, cp["public_key"], gctx) for cp in checkpoints]
        secret = encoding.decode_secret_key(
            _read(checkpoints[0]["secret_key"]), gctx, cfg.scheme_byte
        )
        rng = cfg.rng()
        mod = cfg.module

        if hops_dir is not None:
            Path(hops_dir).mkdir(parents=True, exist_ok=True)

        def checkpoint_file(i):
            return str(Path(hops_dir) / f"hop-{i}.sig")

        sig = mod.sign(params, 1, secret, message, rng)
        if hops_dir is not None:
            _write(checkpoint_file(1), encoding.encode_signature(cfg.scheme_byte, sig))
            sig = _load_signature(cfg, checkpoint_file(1), gctx)
        click.echo(f"hop 1: '{names[0]}' signed at level 1")
        for i in range(1, len(checkpoints)):
            rekey = encoding.decode_resign_key(
                _read(checkpoints[i]["resign_key"]), gctx, cfg.scheme_byte
            )
            try:
                sig = mod.resign(params, message, sig, rekey, publics[i - 1], publics[i], rng)
            except (VerificationFailedError, LevelExhaustedError) as exc:
                click.echo(f"hop {i + 1}: FAILED ({exc})")
                ctx.exit(EXIT_REJECT)
            if hops_dir is not None:
                _write(checkpoint_file(i + 1), encoding.encode_signature(cfg.scheme_byte, sig))
                sig = _load_signature(cfg, checkpoint_file(i + 1), gctx)
            click.echo(f"hop {i + 1}: '{names[i - 1]}' -> '{names[i]}' now at level {sig.level}")
        final = mod.verify(params, sig.level, message, sig, publics[-1])
        for i in range(len(checkpoints) - 1):
            cross = mod.verify(params, sig.level, message, sig, publics[i])
            status = "verifies (!)" if cross else "does not verify"
            click.echo(f"cross-check: final signature {status} under '{names[i]}'")
        click.echo(
            f"final: level-{sig.level} signature under '{names[-1]}' only: "
            + ("ACCEPT" if final else f"REJECT ({final.reason})")
        )
    except (PrsigError, ValueError, KeyError, json.JSONDecodeError) as exc:
        raise _fail_usage(exc)
    ctx.exit(EXIT_ACCEPT if final else EXIT_REJECT)


@main.command(name="check-flexdh")
@click.option("--instance", "instance_path", required=True, type=click.Path())
@click.option("--solution", "solution_path", required=True, type=click.Path())
@click.pass_context
def check_flexdh(ctx, instance_path, solution_path):
    """Run the public pairing verifier on a flexible-DH tuple."""
    cfg = ctx.obj
    try:
        gctx = cfg.context() if cfg.params_path is None else cfg.load_params().ctx
        inst = encoding.decode_flexdh_instance(_read(instance_path), gctx)
        ell, sol = encoding.decode_flexdh_solution(_read(solution_path), gctx)
        if ell != inst.ell:
            raise UsageFailure(f"instance is for ell={inst.ell}, solution for ell={ell}")
        verdict = assumptions.verify_flexdh(inst, sol)
    except (PrsigError, ValueError) as exc:
        raise _fail_usage(exc)
    if verdict:
        click.echo("ACCEPT")
        ctx.exit(EXIT_ACCEPT)
    click.echo(f"REJECT: {verdict.reason}")
    ctx.exit(EXIT_REJECT)


@main.command(name="check-mcdh")
@click.option("--instance", "instance_path", required=True, type=click.Path())
@click.option("--candidate", "candidate_path", required=True, type=click.Path())
@click.pass_context
def check_mcdh(ctx, instance_path, candidate_path):
    """Run the public pairing verifier on a modified-CDH answer."""
    cfg = ctx.obj
    try:
        gctx = cfg.context() if cfg.params_path is None else cfg.load_params().ctx
        inst = encoding.decode_mcdh_instance(_read(instance_path), gctx)
        candidate = encoding.decode_mcdh_candidate(_read(candidate_path), gctx)
        verdict = assumptions.verify_mcdh(inst, candidate)
    except (PrsigError, ValueError) as exc:
        raise _fail_usage(exc)
    if verdict:
        click.echo("ACCEPT")
        ctx.exit(EXIT_ACCEPT)
    click.echo(f"REJECT: {verdict.reason}")
    ctx.exit(EXIT_REJECT)


if __name__ == "__main__":
    main()
