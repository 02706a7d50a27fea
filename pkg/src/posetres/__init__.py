"""Exact-arithmetic resolutions of monomial ideals from poset homology.

The package builds the lcm lattice of a monomial ideal, runs the
Mayer-Vietoris construction of a poset-indexed sequence of homology
spaces, homogenizes it into a candidate free resolution, and decides
resolution, minimality, and lattice-linearity strand by strand — with the
Taylor and Scarf complexes as independent oracles.  All linear algebra is
exact, over the rationals or a prime field.
"""

from .linalg import FieldSpec, GF2, GF3, Matrix, NotInSpan, QQ
from .monomials import Monomial, MonomialIdeal, divides, lcm, minimize, quotient, subset_lcm
from .poset import (FinitePoset, PosetError, PosetMap, crosscut_check,
                    rank_completion)
from .homology import (ChainVector, NotACycle, SimplicialComplex,
                       chain_boundary, mv_connect, reduced_homology)
from .lcm_lattice import CapExceeded, LcmLattice, build as build_lattice
from .construction import (BettiTable, MultigradedComplex, PosetSequence,
                           build_sequence, chain_comparison_map,
                           comparison_squares_agree, homogenize,
                           sequence_dims_report, sign_diagonal, support_eta)
from .classical import (ScarfComplex, TaylorComplex, boolean_poset,
                        is_strongly_generic, scarf, subset_lcm_map, taylor)
from .verify import (LatticeLinearReport, VerificationReport, betti_oracle,
                     complex_check, is_lattice_linear, is_scarf_ideal,
                     strand, verify_minimal, verify_resolution)
from .io import (IdealParseError, dump_json, format_ideal, format_poset,
                 parse_ideal, parse_poset, report_json)

__version__ = "0.1.0"

__all__ = [
    "BettiTable", "CapExceeded", "ChainVector", "FieldSpec", "FinitePoset",
    "GF2", "GF3", "LatticeLinearReport", "LcmLattice", "Matrix", "Monomial",
    "MonomialIdeal", "MultigradedComplex", "NotACycle", "NotInSpan",
    "PosetError", "PosetMap", "PosetSequence", "QQ", "ScarfComplex",
    "SimplicialComplex", "TaylorComplex", "VerificationReport",
    "betti_oracle", "boolean_poset", "build_sequence", "chain_boundary",
    "build_lattice", "chain_comparison_map", "comparison_squares_agree",
    "complex_check", "crosscut_check", "divides", "dump_json",
    "format_ideal", "format_poset", "homogenize", "IdealParseError",
    "is_lattice_linear", "is_scarf_ideal", "is_strongly_generic", "lcm",
    "minimize", "mv_connect", "parse_ideal", "parse_poset", "quotient",
    "rank_completion", "reduced_homology", "report_json", "scarf",
    "sequence_dims_report",
    "sign_diagonal", "strand", "subset_lcm", "subset_lcm_map", "support_eta",
    "taylor", "verify_minimal", "verify_resolution",
]
