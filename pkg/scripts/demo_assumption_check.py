#!/usr/bin/env python3
"""Generate a flexible-DH instance plus a trapdoor reference solution, then
run the CLI pairing verifier on the good solution (expect exit 0) and on a
perturbed one (expect exit 1).

Usage: python scripts/demo_assumption_check.py [ell]
"""

import random
import subprocess
import sys
import tempfile
from pathlib import Path

from prsig import MockGroup, assumptions, encoding


def main():
    ell = int(sys.argv[1]) if len(sys.argv) > 1 else 3
    ctx = MockGroup()
    rng = random.SystemRandom()
    inst, trapdoor = assumptions.gen_flexdh(ell, ctx, rng)
    sol = assumptions.solve_flexdh_with_trapdoor(inst, trapdoor, rng)
    bad = assumptions.FlexDhSolution(sol.C, sol.D, sol.T * ctx.generator)
    with tempfile.TemporaryDirectory() as tmp:
        tmp = Path(tmp)
        (tmp / "inst.bin").write_bytes(encoding.encode_flexdh_instance(inst))
        (tmp / "sol.bin").write_bytes(encoding.encode_flexdh_solution(ell, sol))
        (tmp / "bad.bin").write_bytes(encoding.encode_flexdh_solution(ell, bad))
        for name in ("sol", "bad"):
            proc = subprocess.run(
                ["prsig", "check-flexdh", "--instance", str(tmp / "inst.bin"),
                 "--solution", str(tmp / f"{name}.bin")],
                capture_output=True, text=True,
            )
            print(f"{name}.bin: exit {proc.returncode} ({proc.stdout.strip()})")


if __name__ == "__main__":
    main()
