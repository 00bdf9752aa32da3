"""Random search for ideals whose symbolic power strictly exceeds the ordinary one.

Draws random monomial ideals with a prime radical, compares symbolic and
ordinary t-th powers, and prints each strict gap found with its witness.
Threshold ideals of weight vectors never show up here; the gaps come from
ideals with embedded structure, e.g. (x1^2, x1*x2).

Run:

    python3 scripts/symbolic_gap_search.py
    python3 scripts/symbolic_gap_search.py --trials 2000 --seed 7 --t 3
"""

from __future__ import annotations

import argparse
import random
import sys
from dataclasses import dataclass
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from wblowup.errors import InvalidArgumentError, RadicalNotPrimeError
from wblowup.monomials import Monomial, minimalize
from wblowup.parsing import format_monomial
from wblowup.symbolic import as_primary, symbolic_equals_ordinary


@dataclass(frozen=True)
class GapSearchConfig:
    seed: int = 77
    trials: int = 500
    n: int = 3
    max_generators: int = 3
    max_exponent: int = 3
    t: int = 2


def run(config: GapSearchConfig) -> int:
    rng = random.Random(config.seed)
    found = 0
    examined = 0
    for _ in range(config.trials):
        gens = [
            Monomial(tuple(rng.randint(0, config.max_exponent) for _ in range(config.n)))
            for _ in range(rng.randint(1, config.max_generators))
        ]
        ideal = minimalize(gens, config.n)
        try:
            primary = as_primary(ideal)
        except (RadicalNotPrimeError, InvalidArgumentError):
            continue
        examined += 1
        verdict = symbolic_equals_ordinary(primary, config.t)
        if not verdict.equal:
            found += 1
            rendered = ", ".join(format_monomial(g) for g in ideal.generators)
            print(
                f"gap: ideal ({rendered}), t = {config.t}, "
                f"witness {format_monomial(verdict.witness)}"
            )
    print(f"{found} strict gaps in {examined} prime-radical ideals "
          f"({config.trials} trials, seed {config.seed})")
    return found


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--seed", type=int, default=77)
    parser.add_argument("--trials", type=int, default=500)
    parser.add_argument("--n", type=int, default=3)
    parser.add_argument("--t", type=int, default=2)
    parser.add_argument("--max-exponent", type=int, default=3, dest="max_exponent")
    args = parser.parse_args(argv)
    config = GapSearchConfig(
        seed=args.seed,
        trials=args.trials,
        n=args.n,
        max_exponent=args.max_exponent,
        t=args.t,
    )
    run(config)
    return 0


if __name__ == "__main__":
    sys.exit(main())
