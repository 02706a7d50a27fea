"""Command-line interface.

Exit codes: 0 success (and decision "true" for check subcommands),
1 decision "false", 2 usage error, 3 input error, 4 cap exceeded,
5 internal invariant failure.
"""

import argparse
import random
import sys

from .classical import scarf, taylor
from .construction import (build_sequence, comparison_squares_agree,
                           homogenize, sequence_dims_report, support_eta)
from .homology import NotACycle
from .io import (IdealParseError, dot_lattice, dump_json, format_poset,
                 parse_ideal, parse_poset, report_json)
from .lcm_lattice import CapExceeded, build as build_lattice
from .linalg import FieldSpec
from .monomials import Monomial
from .poset import PosetError, rank_completion
from .rand import (random_ideal, random_lattice_ideal,
                   random_ranked_poset, random_strongly_generic_ideal)
from .verify import (betti_oracle, complex_check, is_lattice_linear,
                     verify_minimal, verify_resolution)


def _parser():
    ap = argparse.ArgumentParser(
        prog="posetres",
        description="Poset-indexed free resolutions of monomial ideals: "
                    "lcm lattices, the homology construction, Taylor and "
                    "Scarf complexes, and lattice-linearity checks.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--field", default="q", metavar="F",
                        help="ground field: q or gf:<p> (default q)")
    common.add_argument("--max-gens", type=int, default=22, metavar="R",
                        help="generator cap (default 22)")
    common.add_argument("--json", metavar="PATH",
                        help="write a JSON report to PATH")
    common.add_argument("--dot", metavar="PATH",
                        help="write the lcm lattice as DOT to PATH")
    variant = argparse.ArgumentParser(add_help=False)
    variant.add_argument("--variant", choices=("delta", "gamma", "both"),
                         default="gamma",
                         help="interval-complex family (default gamma)")
    sub = ap.add_subparsers(dest="command", required=True, metavar="COMMAND")

    s = sub.add_parser("lattice", parents=[common],
                       help="build and print the lcm lattice")
    s.add_argument("ideal_file")
    s.set_defaults(func=cmd_lattice)

    s = sub.add_parser("resolve", parents=[common, variant],
                       help="build the homogenized resolution candidate F(deg)")
    s.add_argument("ideal_file")
    s.set_defaults(func=cmd_resolve)

    s = sub.add_parser("betti", parents=[common],
                       help="multigraded Betti numbers via the Taylor oracle")
    s.add_argument("ideal_file")
    s.set_defaults(func=cmd_betti)

    s = sub.add_parser("check-lattice-linear", parents=[common, variant],
                       help="decide lattice-linearity over the field")
    s.add_argument("ideal_file")
    s.set_defaults(func=cmd_check_lattice_linear)

    s = sub.add_parser("scarf", parents=[common],
                       help="Scarf complex; exit 0 iff it resolves")
    s.add_argument("ideal_file")
    s.set_defaults(func=cmd_scarf)

    s = sub.add_parser("taylor", parents=[common],
                       help="Taylor complex and its verification")
    s.add_argument("ideal_file")
    s.set_defaults(func=cmd_taylor)

    s = sub.add_parser("compare-variants", parents=[common],
                       help="delta vs gamma: dimensions and comparison squares")
    s.add_argument("ideal_file")
    s.set_defaults(func=cmd_compare_variants)

    s = sub.add_parser("rank-complete", parents=[],
                       help="subdivide rank gaps in a poset file")
    s.add_argument("poset_file")
    s.add_argument("--out", metavar="PATH", help="output path (default stdout)")
    s.set_defaults(func=cmd_rank_complete)

    s = sub.add_parser("selftest", parents=[],
                       help="seeded randomized property battery")
    s.add_argument("--seed", type=int, default=0)
    s.set_defaults(func=cmd_selftest)
    return ap


def main(argv=None):
    try:
        args = _parser().parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else 2
    try:
        return args.func(args)
    except IdealParseError as e:
        print(f"input error: {e}", file=sys.stderr)
        return 3
    except CapExceeded as e:
        print(f"cap exceeded: {e}", file=sys.stderr)
        return 4
    except OSError as e:
        print(f"input error: {e}", file=sys.stderr)
        return 3
    except PosetError as e:
        print(f"input error: {e}", file=sys.stderr)
        return 3
    except ValueError as e:
        print(f"usage error: {e}", file=sys.stderr)
        return 2
    except (RuntimeError, NotACycle, AssertionError) as e:
        print(f"internal invariant failure: {e}", file=sys.stderr)
        return 5


def _load_ideal(args):
    with open(args.ideal_file, encoding="utf-8") as fh:
        result = parse_ideal(fh.read())
    if result.removed:
        print("note: removed redundant generators: "
              + ", ".join(result.removed), file=sys.stderr)
    return result.ideal


def _field(args):
    return FieldSpec.parse(args.field)


def _write(path, text):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)


def _maybe_dot(args, L):
    if getattr(args, "dot", None):
        _write(args.dot, dot_lattice(L))


def _maybe_json(args, doc):
    if getattr(args, "json", None):
        _write(args.json, dump_json(doc))


def _render_mdeg(ideal, m):
    return Monomial(tuple(m)).render(ideal.variables)


def cmd_lattice(args):
    ideal = _load_ideal(args)
    L = build_lattice(ideal, cap=args.max_gens)
    p = L.poset
    print(f"lcm lattice: {p.n} elements, {len(p.covers)} covers, "
          f"{len(p.atoms())} atoms")
    for i in p.elements():
        print(f"  [{i}] {L.render(i)}  (rank {p.rank(i)})")
    _maybe_dot(args, L)
    _maybe_json(args, report_json(ideal=ideal, lattice=L))
    return 0


def _sequences(args, L, fieldspec):
    """Build the requested variant(s); 'both' must agree in dimension."""
    if args.variant == "both":
        sg = build_sequence(L.poset, fieldspec, variant="gamma")
        sd = build_sequence(L.poset, fieldspec, variant="delta")
        if sg.dims != sd.dims:
            raise RuntimeError("variant dimensions disagree on a lattice")
        return sg
    return build_sequence(L.poset, fieldspec, variant=args.variant)


def cmd_resolve(args):
    ideal = _load_ideal(args)
    fieldspec = _field(args)
    L = build_lattice(ideal, cap=args.max_gens)
    seq = _sequences(args, L, fieldspec)
    hom = homogenize(seq, L.degree)
    print(f"F(deg) over {fieldspec}: ranks {hom.ranks()}")
    dims = sequence_dims_report(seq)
    for (i, lab), d in sorted(dims.items()):
        print(f"  C_{i} at {_render_mdeg(ideal, lab)}: dim {d}")
    print(hom.rank_table().pretty())
    _maybe_dot(args, L)
    _maybe_json(args, report_json(
        ideal=ideal, fieldspec=fieldspec, variant=args.variant, lattice=L,
        dims=dims, betti=hom.rank_table()))
    return 0


def cmd_betti(args):
    ideal = _load_ideal(args)
    fieldspec = _field(args)
    table = betti_oracle(ideal, fieldspec, cap=args.max_gens)
    print(f"betti numbers over {fieldspec}: totals {table.total_by_degree()}")
    for (i, m), c in sorted(table.multigraded.items()):
        print(f"  beta_{i} at {_render_mdeg(ideal, m)} = {c}")
    print(table.pretty())
    _maybe_json(args, report_json(ideal=ideal, fieldspec=fieldspec, betti=table))
    return 0


def cmd_check_lattice_linear(args):
    ideal = _load_ideal(args)
    fieldspec = _field(args)
    variants = ("gamma", "delta") if args.variant == "both" else (args.variant,)
    results = {}
    for v in variants:
        results[v] = is_lattice_linear(ideal, fieldspec, variant=v,
                                       cap=args.max_gens)
    if len(results) == 2 and results["gamma"].ok != results["delta"].ok:
        raise RuntimeError("variants disagree on the lattice-linearity decision")
    r = results[variants[0]]
    rep = r.report
    print(f"lattice-linear over {fieldspec}: {'yes' if r.ok else 'no'}")
    print(f"  is_complex={rep.is_complex} is_resolution={rep.is_resolution} "
          f"is_minimal={rep.is_minimal}")
    if rep.witness_complex:
        i, m = rep.witness_complex
        print(f"  d^2 != 0 witness: degree {i}, strand {_render_mdeg(ideal, m)}")
    if rep.witness_resolution:
        i, m, h = rep.witness_resolution
        print(f"  homology witness: H_{i} of strand "
              f"{_render_mdeg(ideal, m)} has dim {h}")
    if r.ok:
        print("  ranks match the Betti oracle:")
        print(r.oracle.pretty())
    _maybe_dot(args, r.lattice)
    _maybe_json(args, report_json(
        ideal=ideal, fieldspec=fieldspec, variant=variants[0],
        lattice=r.lattice, dims=sequence_dims_report(r.sequence),
        betti=(r.oracle if r.ok else r.complex.rank_table()),
        flags=dict(rep.flags(), lattice_linear=r.ok),
        witnesses={"complex": rep.witness_complex,
                   "resolution": rep.witness_resolution,
                   "minimal": rep.witness_minimal}))
    return 0 if r.ok else 1


def cmd_scarf(args):
    ideal = _load_ideal(args)
    fieldspec = _field(args)
    sc = scarf(ideal, fieldspec, cap=args.max_gens)
    faces = sorted((f for fs in sc.faces.faces.values() for f in fs),
                   key=lambda f: (len(f), f))
    rep = verify_resolution(sc.complex, ideal)
    print(f"scarf complex over {fieldspec}: ranks {sc.ranks()}")
    print("  faces: " + " ".join("{" + ",".join(map(str, f)) + "}"
                                 for f in faces))
    print(f"  resolves: {'yes' if rep.is_resolution else 'no'}")
    if rep.witness_resolution:
        i, m, h = rep.witness_resolution
        print(f"  homology witness: H_{i} of strand "
              f"{_render_mdeg(ideal, m)} has dim {h}")
    _maybe_json(args, report_json(
        ideal=ideal, fieldspec=fieldspec, betti=sc.complex.rank_table(),
        flags=dict(rep.flags(), scarf=rep.is_resolution),
        witnesses={"resolution": rep.witness_resolution}))
    return 0 if rep.is_resolution else 1


def cmd_taylor(args):
    ideal = _load_ideal(args)
    fieldspec = _field(args)
    t = taylor(ideal, fieldspec, cap=args.max_gens)
    rep = verify_resolution(t, ideal)
    minimal, _ = verify_minimal(t)
    print(f"taylor complex over {fieldspec}: ranks {t.ranks()}")
    print(f"  resolves: {'yes' if rep.is_resolution else 'no'}"
          f"  minimal: {'yes' if minimal else 'no'}")
    if not rep.is_resolution:
        raise RuntimeError("the Taylor complex must always resolve; "
                           f"witness {rep.witness_complex or rep.witness_resolution}")
    _maybe_json(args, report_json(
        ideal=ideal, fieldspec=fieldspec, betti=t.complex.rank_table(),
        flags=dict(rep.flags(), is_minimal=minimal)))
    return 0


def cmd_compare_variants(args):
    ideal = _load_ideal(args)
    fieldspec = _field(args)
    L = build_lattice(ideal, cap=args.max_gens)
    sd = build_sequence(L.poset, fieldspec, variant="delta")
    sg = build_sequence(L.poset, fieldspec, variant="gamma")
    same_dims = sd.dims == sg.dims
    squares = same_dims and comparison_squares_agree(L.poset, sd, sg)
    print(f"dimensions agree: {'yes' if same_dims else 'no'}")
    print(f"comparison squares commute: {'yes' if squares else 'no'}")
    _maybe_dot(args, L)
    _maybe_json(args, report_json(
        ideal=ideal, fieldspec=fieldspec, variant="both", lattice=L,
        dims=sequence_dims_report(sd),
        flags={"dims_agree": same_dims, "squares_commute": squares}))
    return 0 if same_dims and squares else 1


def cmd_rank_complete(args):
    with open(args.poset_file, encoding="utf-8") as fh:
        p = parse_poset(fh.read())
    q, _ = rank_completion(p)
    used = set()
    names = []
    for lab in q.labels:
        name = lab if isinstance(lab, str) else f"{lab[1]}.{lab[2]}.{lab[3]}"
        while name in used:
            name += "'"
        used.add(name)
        names.append(name)
    text = format_poset(q.relabel(lambda lab: names[q.labels.index(lab)]))
    if args.out:
        _write(args.out, text)
    else:
        sys.stdout.write(text)
    return 0


def cmd_selftest(args):
    rng = random.Random(args.seed)
    qq = FieldSpec.rationals()

    for _ in range(8):
        ideal = random_ideal(rng, max_vars=3, max_gens=4, max_exp=3)
        rep = verify_resolution(taylor(ideal), ideal)
        assert rep.is_resolution, f"taylor failed on {ideal.render()}"
    print("taylor resolves random ideals: ok")

    for _ in range(4):
        ideal = random_strongly_generic_ideal(rng, max_vars=3, max_gens=4)
        r = is_lattice_linear(ideal, qq)
        assert r.ok, f"strongly generic ideal not lattice-linear: {ideal.render()}"
    print("strongly generic ideals are lattice-linear: ok")

    for _ in range(4):
        p = random_ranked_poset(rng, max_elements=12)
        seq = build_sequence(p, qq)
        hom = homogenize(seq, support_eta(p))
        ok, wit = complex_check(hom)
        assert ok, f"d^2 != 0 on a ranked poset at {wit}"
    print("ranked posets give complexes: ok")

    for _ in range(3):
        ideal = random_lattice_ideal(rng, max_vars=3, max_gens=4)
        L = build_lattice(ideal)
        sd = build_sequence(L.poset, qq, variant="delta")
        sg = build_sequence(L.poset, qq, variant="gamma")
        assert sd.dims == sg.dims, "variant dimensions differ on a lattice"
        assert comparison_squares_agree(L.poset, sd, sg)
    print("variant comparison on lattices: ok")
    print(f"selftest passed (seed {args.seed})")
    return 0


if __name__ == "__main__":
    sys.exit(main())
