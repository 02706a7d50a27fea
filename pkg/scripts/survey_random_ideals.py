#!/usr/bin/env python3
"""Survey random monomial ideals: how often is the lcm lattice ranked, how
often is the ideal lattice-linear / Scarf / strongly generic, and what do
the failures look like?  Prints a summary table and the first few
non-lattice-linear specimens with their witnesses.

Usage: python scripts/survey_random_ideals.py [--count N] [--seed S]
          [--max-vars N] [--max-gens R] [--max-exp E] [--field F]
"""

import argparse
import random
import sys
from collections import Counter
from dataclasses import dataclass

from posetres import (FieldSpec, build_lattice, is_lattice_linear,
                      is_scarf_ideal, is_strongly_generic)
from posetres.io import field_name
from posetres.rand import random_ideal


@dataclass
class SurveyConfig:
    count: int = 300
    seed: int = 0
    max_vars: int = 4
    max_gens: int = 5
    max_exp: int = 4
    field: str = "q"
    show: int = 4          # specimens to print per failure mode


def survey(cfg):
    rng = random.Random(cfg.seed)
    fieldspec = FieldSpec.parse(cfg.field)
    tally = Counter()
    specimens = {"not_a_complex": [], "bad_homology": []}
    for _ in range(cfg.count):
        ideal = random_ideal(rng, max_vars=cfg.max_vars,
                             max_gens=cfg.max_gens, max_exp=cfg.max_exp)
        tally["ideals"] += 1
        tally["strongly_generic"] += is_strongly_generic(ideal)
        tally["scarf"] += bool(is_scarf_ideal(ideal, fieldspec))
        L = build_lattice(ideal)
        ranked = L.poset.is_ranked()
        tally["ranked_lattice"] += ranked
        r = is_lattice_linear(ideal, fieldspec)
        tally["lattice_linear"] += r.ok
        if not r.ok:
            mode = ("bad_homology" if r.report.is_complex
                    else "not_a_complex")
            tally[mode] += 1
            if len(specimens[mode]) < cfg.show:
                witness = (r.report.witness_resolution
                           or r.report.witness_complex)
                specimens[mode].append((ideal.render(), ranked, witness))
    return fieldspec, tally, specimens


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    defaults = SurveyConfig()
    ap.add_argument("--count", type=int, default=defaults.count)
    ap.add_argument("--seed", type=int, default=defaults.seed)
    ap.add_argument("--max-vars", type=int, default=defaults.max_vars)
    ap.add_argument("--max-gens", type=int, default=defaults.max_gens)
    ap.add_argument("--max-exp", type=int, default=defaults.max_exp)
    ap.add_argument("--field", default=defaults.field,
                    help="q or gf:<p> (default q)")
    ap.add_argument("--show", type=int, default=defaults.show)
    args = ap.parse_args(argv)
    cfg = SurveyConfig(count=args.count, seed=args.seed,
                       max_vars=args.max_vars, max_gens=args.max_gens,
                       max_exp=args.max_exp, field=args.field, show=args.show)

    fieldspec, tally, specimens = survey(cfg)
    n = tally["ideals"]
    print(f"surveyed {n} random ideals over {field_name(fieldspec)} "
          f"(seed {cfg.seed}, <= {cfg.max_vars} vars, <= {cfg.max_gens} "
          f"gens, exponents <= {cfg.max_exp})\n")
    for key in ("strongly_generic", "scarf", "ranked_lattice",
                "lattice_linear", "not_a_complex", "bad_homology"):
        print(f"  {key.replace('_', ' '):<18} {tally[key]:>5}  "
              f"({100.0 * tally[key] / n:5.1f}%)")

    for mode, rows in specimens.items():
        if not rows:
            continue
        print(f"\nfirst {mode.replace('_', ' ')} specimens:")
        for rendered, ranked, witness in rows:
            print(f"  {rendered}")
            print(f"    ranked lattice: {ranked}; witness: {witness}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
